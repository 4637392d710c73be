#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "djc/core_model.hpp"

namespace djc {

/// Continued-fraction verdict on g_a/g_b. "Rational" is a numerical judgment:
/// the best p/q with q <= max_den lies within tol relative error. The
/// residual of that best candidate is reported either way.
struct RatioClass {
    bool rational;
    long p = 0, q = 0;  ///< lowest terms, gcd(p,q)=1; meaningful when rational
    double value;       ///< g_a/g_b as given
    double residual;    ///< value - p/q for the best candidate found
    double tolerance;   ///< relative tolerance used for the judgment
};

RatioClass classify_ratio(double ratio, double tol = 1e-9, long max_den = 64);
RatioClass classify_ratio(const CouplingParams& params, double tol = 1e-9,
                          long max_den = 64);

struct PeriodReport {
    RatioClass ratio;
    /// Common envelope period T = p*pi/g_a = q*pi/g_b; absent when irrational.
    std::optional<double> period;
    /// Smallest T/m (m integer) whose grid residual stays below 1e-12; the
    /// envelope of some preparations repeats faster than the state does
    /// (e.g. Ab with g_a = g_b halves). Absent when irrational or when the
    /// concurrence is identically zero.
    std::optional<double> min_numerical_period;
    /// Distinct zeros of the envelope in [0, T), analytic lattice union.
    std::vector<double> zeros;
    std::optional<int> zero_count;
    /// Aa/Bb preparations: the atom-atom concurrence is 0 at every time.
    bool identically_zero = false;
    /// Zero-count law "n zeros for odd n, n+1 for even n": checked only for
    /// family AB with integer ratio n = g_a/g_b.
    enum class Law { confirmed, violated, not_applicable } law_verdict =
        Law::not_applicable;
};

/// Ratio classification and period only (family-independent). tol and
/// max_den parameterize the rationality judgment as in classify_ratio.
PeriodReport period(const CouplingParams& params, double tol = 1e-9,
                    long max_den = 64);

/// Adds the zero lattice for the family's envelope. The envelope is a
/// product of two trig factors; cos factors vanish at odd multiples of
/// pi/(2g), sin factors at multiples of pi/g. Zeros from both factors are
/// merged and deduplicated within 1e-12*T (coincident zeros count once).
/// Irrational ratio -> UnsupportedConfiguration. Aa/Bb -> identically_zero.
PeriodReport count_zeros(Pair family, const CouplingParams& params,
                         double tol = 1e-9, long max_den = 64);

/// Full report: period, zeros, law verdict, and the minimal numerical
/// period measured on a dense grid (theta only matters through
/// sin(2 theta) = 0 degenerating the envelope).
PeriodReport period_report(Pair family, double theta,
                           const CouplingParams& params, double tol = 1e-9,
                           long max_den = 64);

/// max over an n-point uniform grid on [0, window] of
/// |Q_lhs(t + shift) - Q_rhs(t)|, both with the same theta and params.
double max_pair_deviation(Pair lhs, Pair rhs, double theta,
                          const CouplingParams& params, double shift,
                          double window, std::size_t n_points);

/// max_pair_deviation of a family against itself: the periodicity residual
/// of candidate period `shift`.
double max_shift_deviation(Pair family, double theta,
                           const CouplingParams& params, double shift,
                           double window, std::size_t n_points);

/// The pairings claimed for integer ratio n, shift pi/(2 g_b):
/// odd n: AB<->ab and Ab<->Ba; even n: AB<->Ab and ab<->Ba. The opposite
/// pairing is evaluated as a control and reported, not asserted.
struct ShiftIdentityReport {
    long n;
    double theta;
    double shift;  ///< pi / (2 g_b)
    std::array<std::pair<Pair, Pair>, 2> predicted;
    std::array<double, 2> predicted_mismatch;
    std::array<std::pair<Pair, Pair>, 2> opposite;
    std::array<double, 2> opposite_mismatch;
    bool holds;  ///< both predicted mismatches < 1e-12
};

/// Grid: 10^4 points over one period. Non-integer ratio (q != 1 after
/// classification) -> UnsupportedConfiguration.
ShiftIdentityReport verify_shift_identity(const CouplingParams& params,
                                          double theta);

struct ScanResult {
    Pair family;
    double theta;
    CouplingParams params;
    std::vector<double> times;   ///< strictly increasing, t[i] = i*dt
    std::vector<double> values;  ///< in [0, |sin 2 theta|]
};

/// Uniform grid of n_points on [0, t_max] inclusive, closed-form values.
/// n_points >= 2 and t_max > 0 required (std::invalid_argument).
ScanResult scan(Pair family, double theta, const CouplingParams& params,
                double t_max, std::size_t n_points);

inline constexpr double kPeriodResidualTol = 1e-12;
inline constexpr double kShiftIdentityTol = 1e-12;

}  // namespace djc
