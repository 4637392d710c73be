#include "djc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "djc/closed_form.hpp"
#include "djc/errors.hpp"

namespace djc {

namespace {

constexpr std::size_t kIdentityGridPoints = 10000;
constexpr int kMaxPeriodDivisor = 16;

// Below this |sin 2 theta| the envelope is flat zero to double precision and
// period measurements degenerate (every candidate residual vanishes).
constexpr double kDegenerateAmplitude = 1e-15;

}  // namespace

RatioClass classify_ratio(double ratio, double tol, long max_den) {
    if (!std::isfinite(ratio) || ratio <= 0.0)
        throw std::invalid_argument("ratio must be finite and positive");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_den < 1) throw std::invalid_argument("max_den must be >= 1");

    RatioClass rc;
    rc.value = ratio;
    rc.tolerance = tol;

    // Continued-fraction convergents p_n/q_n, plus the final semiconvergent
    // that still fits under max_den. Convergents are optimal per denominator,
    // so any fraction within tol (tol << 1/(2 max_den^2)) is found exactly.
    long p_prev = 1, p_prev2 = 0;  // p_{-1}, p_{-2}
    long q_prev = 0, q_prev2 = 1;  // q_{-1}, q_{-2}
    double x = ratio;
    double best_err = std::numeric_limits<double>::infinity();

    auto consider = [&](long p, long q) {
        const double err = std::abs(ratio - static_cast<double>(p) / q);
        if (err < best_err) {
            best_err = err;
            rc.p = p;
            rc.q = q;
        }
    };
    auto fits = [](long a, long mul, long add) {
        return mul == 0 || a <= (std::numeric_limits<long>::max() - add) / mul;
    };

    for (int iter = 0; iter < 64; ++iter) {
        const double a_real = std::floor(x);
        if (a_real > 9.0e18) break;
        const long a = static_cast<long>(a_real);
        if (q_prev > 0 && a > (max_den - q_prev2) / q_prev) {
            const long a_cut = (max_den - q_prev2) / q_prev;
            if (a_cut >= 1 && fits(a_cut, p_prev, p_prev2) &&
                fits(a_cut, q_prev, q_prev2))
                consider(a_cut * p_prev + p_prev2, a_cut * q_prev + q_prev2);
            break;
        }
        if (!fits(a, p_prev, p_prev2) || !fits(a, q_prev, q_prev2)) break;
        const long p = a * p_prev + p_prev2;
        const long q = a * q_prev + q_prev2;
        if (q > max_den) break;
        if (q >= 1) consider(p, q);
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        const double frac = x - a_real;
        if (best_err == 0.0 || frac < 1e-15) break;
        x = 1.0 / frac;
    }

    rc.residual = ratio - static_cast<double>(rc.p) / rc.q;
    rc.rational = best_err <= tol * std::abs(ratio);
    return rc;
}

RatioClass classify_ratio(const CouplingParams& params, double tol,
                          long max_den) {
    return classify_ratio(params.g_a / params.g_b, tol, max_den);
}

PeriodReport period(const CouplingParams& params, double tol, long max_den) {
    PeriodReport rep;
    rep.ratio = classify_ratio(params, tol, max_den);
    if (rep.ratio.rational)
        rep.period = static_cast<double>(rep.ratio.p) * std::numbers::pi /
                     params.g_a;
    return rep;
}

namespace {

// Zeros of one trig factor in [0, upper): sin(g t) vanishes at j*pi/g
// (including t = 0), cos(g t) at odd multiples of pi/(2 g).
void factor_zeros(bool is_sin, double g, double upper,
                  std::vector<double>& out) {
    const double half = std::numbers::pi / (2.0 * g);
    for (long j = 0;; ++j) {
        const double t = is_sin ? 2.0 * j * half : (2.0 * j + 1.0) * half;
        if (t >= upper) break;
        out.push_back(t);
    }
}

}  // namespace

PeriodReport count_zeros(Pair family, const CouplingParams& params, double tol,
                         long max_den) {
    PeriodReport rep = period(params, tol, max_den);
    if (!rep.ratio.rational)
        throw UnsupportedConfiguration(
            "count_zeros: the zero lattice needs a rational coupling ratio");
    if (family == Pair::Aa || family == Pair::Bb) {
        rep.identically_zero = true;
        return rep;
    }

    bool a_sin, b_sin;
    envelope_factors(family, a_sin, b_sin);
    const double T = *rep.period;
    const double dedup = 1e-12 * T;
    // Exclude lattice points that are T up to rounding: the interval is [0,T).
    const double upper = T - dedup;

    std::vector<double> zeros;
    factor_zeros(a_sin, params.g_a, upper, zeros);
    factor_zeros(b_sin, params.g_b, upper, zeros);
    std::sort(zeros.begin(), zeros.end());
    std::vector<double> distinct;
    for (double t : zeros)
        if (distinct.empty() || t - distinct.back() > dedup)
            distinct.push_back(t);

    rep.zeros = std::move(distinct);
    rep.zero_count = static_cast<int>(rep.zeros.size());
    if (family == Pair::AB && rep.ratio.q == 1) {
        const long n = rep.ratio.p;
        const long expected = (n % 2 == 1) ? n : n + 1;
        rep.law_verdict = (*rep.zero_count == expected)
                              ? PeriodReport::Law::confirmed
                              : PeriodReport::Law::violated;
    }
    return rep;
}

PeriodReport period_report(Pair family, double theta,
                           const CouplingParams& params, double tol,
                           long max_den) {
    PeriodReport rep = period(params, tol, max_den);
    const bool flat_family = (family == Pair::Aa || family == Pair::Bb);
    const bool flat_theta =
        std::abs(std::sin(2.0 * theta)) < kDegenerateAmplitude;
    rep.identically_zero = flat_family || flat_theta;
    if (!rep.ratio.rational) return rep;

    if (!flat_family) {
        PeriodReport lattice = count_zeros(family, params, tol, max_den);
        rep.zeros = std::move(lattice.zeros);
        rep.zero_count = lattice.zero_count;
        rep.law_verdict = lattice.law_verdict;
    }
    if (rep.identically_zero) return rep;

    // Largest divisor m of the state period whose shifted grid residual
    // vanishes; the envelope can repeat faster than the state (Ab at
    // g_a = g_b has period T/2).
    const double T = *rep.period;
    int best_m = 1;
    for (int m = 2; m <= kMaxPeriodDivisor; ++m)
        if (max_shift_deviation(family, theta, params, T / m, T,
                                kIdentityGridPoints) < kPeriodResidualTol)
            best_m = m;
    rep.min_numerical_period = T / best_m;
    return rep;
}

double max_pair_deviation(Pair lhs, Pair rhs, double theta,
                          const CouplingParams& params, double shift,
                          double window, std::size_t n_points) {
    if (n_points < 2 || !(window > 0.0) || !std::isfinite(window) ||
        !std::isfinite(shift))
        throw std::invalid_argument("max_pair_deviation: bad grid");
    const double dt = window / static_cast<double>(n_points - 1);
    const std::vector<double> shifted =
        q_envelope_scan(lhs, theta, params, shift, dt, n_points);
    const std::vector<double> base =
        q_envelope_scan(rhs, theta, params, 0.0, dt, n_points);
    double worst = 0.0;
    for (std::size_t i = 0; i < n_points; ++i)
        worst = std::max(worst, std::abs(shifted[i] - base[i]));
    return worst;
}

double max_shift_deviation(Pair family, double theta,
                           const CouplingParams& params, double shift,
                           double window, std::size_t n_points) {
    return max_pair_deviation(family, family, theta, params, shift, window,
                              n_points);
}

ShiftIdentityReport verify_shift_identity(const CouplingParams& params,
                                          double theta) {
    const RatioClass rc = classify_ratio(params);
    if (!rc.rational || rc.q != 1)
        throw UnsupportedConfiguration(
            "verify_shift_identity needs an integer coupling ratio");

    ShiftIdentityReport rep;
    rep.n = rc.p;
    rep.theta = theta;
    rep.shift = std::numbers::pi / (2.0 * params.g_b);
    const bool odd = (rep.n % 2 == 1);
    rep.predicted = odd ? std::array{std::pair{Pair::AB, Pair::ab},
                                     std::pair{Pair::Ab, Pair::Ba}}
                        : std::array{std::pair{Pair::AB, Pair::Ab},
                                     std::pair{Pair::ab, Pair::Ba}};
    rep.opposite = odd ? std::array{std::pair{Pair::AB, Pair::Ab},
                                    std::pair{Pair::ab, Pair::Ba}}
                       : std::array{std::pair{Pair::AB, Pair::ab},
                                    std::pair{Pair::Ab, Pair::Ba}};

    const double T = static_cast<double>(rc.p) * std::numbers::pi / params.g_a;
    for (int i = 0; i < 2; ++i) {
        rep.predicted_mismatch[i] = max_pair_deviation(
            rep.predicted[i].first, rep.predicted[i].second, theta, params,
            rep.shift, T, kIdentityGridPoints);
        rep.opposite_mismatch[i] = max_pair_deviation(
            rep.opposite[i].first, rep.opposite[i].second, theta, params,
            rep.shift, T, kIdentityGridPoints);
    }
    rep.holds = rep.predicted_mismatch[0] < kShiftIdentityTol &&
                rep.predicted_mismatch[1] < kShiftIdentityTol;
    return rep;
}

ScanResult scan(Pair family, double theta, const CouplingParams& params,
                double t_max, std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("scan needs n_points >= 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max))
        throw std::invalid_argument("scan needs t_max > 0");
    ScanResult res{family, theta, params, {}, {}};
    const double dt = t_max / static_cast<double>(n_points - 1);
    res.times.resize(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        res.times[i] = static_cast<double>(i) * dt;
    res.values = q_envelope_scan(family, theta, params, 0.0, dt, n_points);
    return res;
}

}  // namespace djc
