// Reference kernels. Compiled with -ffp-contract=off so the grid arguments
// t0 + i*dt and g*t round exactly like the vector variants' mul/add chains.

#include <cmath>

#include "djc/kernels/dispatch.hpp"

namespace djc::kernels {

void q_envelope_scan_scalar(double amp, double g_a, int a_kind, double g_b,
                            int b_kind, double t0, double dt, std::size_t n,
                            double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t0 + static_cast<double>(i) * dt;
        const double arg_a = g_a * t;
        const double arg_b = g_b * t;
        const double fa = a_kind ? std::sin(arg_a) : std::cos(arg_a);
        const double fb = b_kind ? std::sin(arg_b) : std::cos(arg_b);
        out[i] = std::fabs(amp * fa * fb);
    }
}

void complex_matvec_scalar(std::size_t n, const double* a_re, const double* a_im,
                           const double* x_re, const double* x_im, double* y_re,
                           double* y_im) {
    for (std::size_t row = 0; row < n; ++row) {
        const double* re = a_re + row * n;
        const double* im = a_im + row * n;
        double acc_re = 0.0, acc_im = 0.0;
        for (std::size_t col = 0; col < n; ++col) {
            acc_re += re[col] * x_re[col] - im[col] * x_im[col];
            acc_im += re[col] * x_im[col] + im[col] * x_re[col];
        }
        y_re[row] = acc_re;
        y_im[row] = acc_im;
    }
}

}  // namespace djc::kernels
