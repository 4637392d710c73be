#pragma once

#include <cstddef>

namespace djc::kernels {

/// out[i] = |amp * fa(g_a * t_i) * fb(g_b * t_i)| with t_i = t0 + i*dt,
/// where fa is cos if a_kind == 0, sin if a_kind == 1 (fb likewise).
/// t_i and the trig arguments are computed with plain mul/add (no fused
/// contraction) so every implementation sees bit-identical arguments.
using QEnvelopeScanFn = void (*)(double amp, double g_a, int a_kind, double g_b,
                                 int b_kind, double t0, double dt, std::size_t n,
                                 double* out);

/// Dense complex matrix-vector product y = A x in split storage: a_re/a_im
/// are the row-major n*n real and imaginary planes, x and y are length n.
/// y must not alias x.
using ComplexMatvecFn = void (*)(std::size_t n, const double* a_re,
                                 const double* a_im, const double* x_re,
                                 const double* x_im, double* y_re, double* y_im);

/// Portable reference implementations (libm trig, straight loops).
void q_envelope_scan_scalar(double amp, double g_a, int a_kind, double g_b,
                            int b_kind, double t0, double dt, std::size_t n,
                            double* out);
void complex_matvec_scalar(std::size_t n, const double* a_re, const double* a_im,
                           const double* x_re, const double* x_im, double* y_re,
                           double* y_im);

#if defined(DJC_HAVE_AVX2)
/// Vectorized variants; callable on any x86-64 build, but require AVX2+FMA
/// at runtime. Results match the scalar reference within 5e-15 per element
/// for the envelope scan (vector trig differs from libm by a few ulp).
void q_envelope_scan_avx2(double amp, double g_a, int a_kind, double g_b,
                          int b_kind, double t0, double dt, std::size_t n,
                          double* out);
void complex_matvec_avx2(std::size_t n, const double* a_re, const double* a_im,
                         const double* x_re, const double* x_im, double* y_re,
                         double* y_im);
#endif

struct Dispatch {
    const char* isa;  ///< "scalar" or "avx2"
    QEnvelopeScanFn q_envelope_scan;
    ComplexMatvecFn complex_matvec;
};

/// Kernel set selected once per process from CPU capabilities.
const Dispatch& active();

/// Always the scalar reference set; equivalence tests diff against this.
const Dispatch& scalar_dispatch();

/// True iff the running CPU reports AVX2 and FMA.
bool cpu_has_avx2();

}  // namespace djc::kernels
