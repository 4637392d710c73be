// AVX2+FMA kernel variants. The trig core is a vectorized fdlibm-style
// sin/cos: Cody-Waite reduction by pi/2 in two split stages (the split
// constants carry 33 trailing zero bits, so the multiple subtracted first
// is exact for |quotient| < 2^20), then the standard minimax polynomials on
// [-pi/4, pi/4] and a quadrant swizzle. Grid arguments are built with
// separate mul/add, never FMA, so they match the scalar reference bit for
// bit; FMA appears only inside polynomial evaluation and the matvec.

#include <immintrin.h>

#include <cmath>

#include "djc/kernels/dispatch.hpp"

namespace djc::kernels {

namespace {

constexpr double kInvPio2 = 6.36619772367581382433e-01;
constexpr double kPio2_1 = 1.57079632673412561417e+00;
constexpr double kPio2_2 = 6.07710050630396597660e-11;
constexpr double kPio2_2t = 2.02226624879595063154e-21;

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;
constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

// Beyond this the two-stage reduction runs out of tail bits; such blocks
// fall back to libm lane by lane.
constexpr double kMaxArg = 1.0e6;

inline __m256d abs_pd(__m256d v) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline __m256d select_pd(__m256d mask, __m256d a, __m256d b) {
    return _mm256_blendv_pd(b, a, mask);
}

inline __m256d negate_where(__m256d mask, __m256d v) {
    return _mm256_xor_pd(v, _mm256_and_pd(mask, _mm256_set1_pd(-0.0)));
}

// sin and cos of four lanes, |x| <= kMaxArg, a couple of ulp.
inline void sincos4(__m256d x, __m256d& sin_out, __m256d& cos_out) {
    const __m256d fn = _mm256_round_pd(
        _mm256_mul_pd(x, _mm256_set1_pd(kInvPio2)),
        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);

    // fdlibm second-iteration reduction: r and the exact rounding error of
    // the stage-two subtraction keep ~118 significant bits of x - fn*pi/2.
    const __m256d r =
        _mm256_sub_pd(x, _mm256_mul_pd(fn, _mm256_set1_pd(kPio2_1)));
    const __m256d w = _mm256_mul_pd(fn, _mm256_set1_pd(kPio2_2));
    const __m256d t = _mm256_sub_pd(r, w);
    const __m256d err = _mm256_sub_pd(_mm256_sub_pd(r, t), w);
    const __m256d w2 =
        _mm256_sub_pd(_mm256_mul_pd(fn, _mm256_set1_pd(kPio2_2t)), err);
    const __m256d y = _mm256_sub_pd(t, w2);

    const __m256d z = _mm256_mul_pd(y, y);

    __m256d sr = _mm256_set1_pd(kS6);
    sr = _mm256_fmadd_pd(z, sr, _mm256_set1_pd(kS5));
    sr = _mm256_fmadd_pd(z, sr, _mm256_set1_pd(kS4));
    sr = _mm256_fmadd_pd(z, sr, _mm256_set1_pd(kS3));
    sr = _mm256_fmadd_pd(z, sr, _mm256_set1_pd(kS2));
    const __m256d v = _mm256_mul_pd(z, y);
    const __m256d s =
        _mm256_add_pd(y, _mm256_mul_pd(v, _mm256_fmadd_pd(z, sr, _mm256_set1_pd(kS1))));

    __m256d cr = _mm256_set1_pd(kC6);
    cr = _mm256_fmadd_pd(z, cr, _mm256_set1_pd(kC5));
    cr = _mm256_fmadd_pd(z, cr, _mm256_set1_pd(kC4));
    cr = _mm256_fmadd_pd(z, cr, _mm256_set1_pd(kC3));
    cr = _mm256_fmadd_pd(z, cr, _mm256_set1_pd(kC2));
    cr = _mm256_fmadd_pd(z, cr, _mm256_set1_pd(kC1));
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d hz = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
    const __m256d cw = _mm256_sub_pd(one, hz);
    const __m256d c = _mm256_add_pd(
        cw, _mm256_add_pd(_mm256_sub_pd(_mm256_sub_pd(one, cw), hz),
                          _mm256_mul_pd(_mm256_mul_pd(z, z), cr)));

    // quadrant = fn mod 4: odd swaps sin/cos, bit 1 flips the sign of sin,
    // bit 1 of quadrant+1 flips the sign of cos.
    const __m128i q = _mm256_cvtpd_epi32(fn);
    const __m128i one32 = _mm_set1_epi32(1);
    const __m128i two32 = _mm_set1_epi32(2);
    const __m128i swap32 = _mm_cmpeq_epi32(_mm_and_si128(q, one32), one32);
    const __m128i sneg32 = _mm_cmpeq_epi32(_mm_and_si128(q, two32), two32);
    const __m128i cneg32 = _mm_cmpeq_epi32(
        _mm_and_si128(_mm_add_epi32(q, one32), two32), two32);
    const __m256d swap = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(swap32));
    const __m256d sneg = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(sneg32));
    const __m256d cneg = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(cneg32));

    sin_out = negate_where(sneg, select_pd(swap, c, s));
    cos_out = negate_where(cneg, select_pd(swap, s, c));
}

inline void scan_lane_scalar(double amp, double g_a, int a_kind, double g_b,
                             int b_kind, double t0, double dt, std::size_t i,
                             double* out) {
    const double t = t0 + static_cast<double>(i) * dt;
    const double arg_a = g_a * t;
    const double arg_b = g_b * t;
    const double fa = a_kind ? std::sin(arg_a) : std::cos(arg_a);
    const double fb = b_kind ? std::sin(arg_b) : std::cos(arg_b);
    out[i] = std::fabs(amp * fa * fb);
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    const __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

void q_envelope_scan_avx2(double amp, double g_a, int a_kind, double g_b,
                          int b_kind, double t0, double dt, std::size_t n,
                          double* out) {
    const __m256d t0v = _mm256_set1_pd(t0);
    const __m256d dtv = _mm256_set1_pd(dt);
    const __m256d gav = _mm256_set1_pd(g_a);
    const __m256d gbv = _mm256_set1_pd(g_b);
    const __m256d ampv = _mm256_set1_pd(amp);
    const __m256d maxarg = _mm256_set1_pd(kMaxArg);
    __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    const __m256d four = _mm256_set1_pd(4.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4, idx = _mm256_add_pd(idx, four)) {
        const __m256d t = _mm256_add_pd(t0v, _mm256_mul_pd(idx, dtv));
        const __m256d arg_a = _mm256_mul_pd(gav, t);
        const __m256d arg_b = _mm256_mul_pd(gbv, t);
        const __m256d big = _mm256_or_pd(
            _mm256_cmp_pd(abs_pd(arg_a), maxarg, _CMP_GT_OQ),
            _mm256_cmp_pd(abs_pd(arg_b), maxarg, _CMP_GT_OQ));
        if (_mm256_movemask_pd(big) != 0) {
            for (std::size_t lane = 0; lane < 4; ++lane)
                scan_lane_scalar(amp, g_a, a_kind, g_b, b_kind, t0, dt, i + lane,
                                 out);
            continue;
        }
        __m256d sa, ca, sb, cb;
        sincos4(arg_a, sa, ca);
        sincos4(arg_b, sb, cb);
        const __m256d fa = a_kind ? sa : ca;
        const __m256d fb = b_kind ? sb : cb;
        const __m256d prod = _mm256_mul_pd(_mm256_mul_pd(ampv, fa), fb);
        _mm256_storeu_pd(out + i, abs_pd(prod));
    }
    for (; i < n; ++i)
        scan_lane_scalar(amp, g_a, a_kind, g_b, b_kind, t0, dt, i, out);
}

void complex_matvec_avx2(std::size_t n, const double* a_re, const double* a_im,
                         const double* x_re, const double* x_im, double* y_re,
                         double* y_im) {
    for (std::size_t row = 0; row < n; ++row) {
        const double* re = a_re + row * n;
        const double* im = a_im + row * n;
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        std::size_t col = 0;
        for (; col + 4 <= n; col += 4) {
            const __m256d ar = _mm256_loadu_pd(re + col);
            const __m256d ai = _mm256_loadu_pd(im + col);
            const __m256d xr = _mm256_loadu_pd(x_re + col);
            const __m256d xi = _mm256_loadu_pd(x_im + col);
            acc_re = _mm256_fmadd_pd(ar, xr, acc_re);
            acc_re = _mm256_fnmadd_pd(ai, xi, acc_re);
            acc_im = _mm256_fmadd_pd(ar, xi, acc_im);
            acc_im = _mm256_fmadd_pd(ai, xr, acc_im);
        }
        double sum_re = hsum(acc_re);
        double sum_im = hsum(acc_im);
        for (; col < n; ++col) {
            sum_re += re[col] * x_re[col] - im[col] * x_im[col];
            sum_im += re[col] * x_im[col] + im[col] * x_re[col];
        }
        y_re[row] = sum_re;
        y_im[row] = sum_im;
    }
}

}  // namespace djc::kernels
