#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "djc/analysis.hpp"
#include "djc/closed_form.hpp"
#include "djc/core_model.hpp"
#include "doctest.h"

using djc::CouplingParams;
using djc::Pair;
using djc::PeriodReport;
using djc::RatioClass;

namespace {

constexpr double kPi = std::numbers::pi;

// Root isolation by bisection on one trig factor: factor zeros are simple,
// so a fine sign scan plus bisection recovers every zero of the envelope
// product without trusting any lattice formula.
std::vector<double> bisect_factor_zeros(bool is_sin, double g, double upper,
                                        std::size_t grid) {
    auto f = [&](double t) { return is_sin ? std::sin(g * t) : std::cos(g * t); };
    std::vector<double> roots;
    if (is_sin) roots.push_back(0.0);  // grid starts on this root
    const double dt = upper / static_cast<double>(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        double lo = static_cast<double>(i) * dt;
        double hi = lo + dt;
        if (hi > upper) hi = upper;
        double flo = f(lo), fhi = f(hi);
        if (flo == 0.0 && lo > 0.0) continue;  // already caught as bracket end
        if (flo * fhi >= 0.0) continue;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = f(mid);
            if (fmid == 0.0 || hi - lo < 1e-15) {
                lo = hi = mid;
                break;
            }
            if (flo * fmid < 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fmid;
            }
        }
        roots.push_back(0.5 * (lo + hi));
    }
    return roots;
}

std::vector<double> brute_force_zeros(Pair family, const CouplingParams& params,
                                      double period) {
    bool a_sin = false, b_sin = false;
    REQUIRE(djc::envelope_factors(family, a_sin, b_sin));
    const double upper = period * (1.0 - 1e-9);  // open interval [0, T)
    std::vector<double> zeros = bisect_factor_zeros(a_sin, params.g_a, upper, 100000);
    std::vector<double> more = bisect_factor_zeros(b_sin, params.g_b, upper, 100000);
    zeros.insert(zeros.end(), more.begin(), more.end());
    std::sort(zeros.begin(), zeros.end());
    std::vector<double> distinct;
    for (double z : zeros)
        if (distinct.empty() || z - distinct.back() > 1e-9 * period)
            distinct.push_back(z);
    return distinct;
}

}  // namespace

TEST_CASE("classify_ratio recognizes exact small fractions") {
    const RatioClass two = djc::classify_ratio(2.0);
    CHECK(two.rational);
    CHECK(two.p == 2);
    CHECK(two.q == 1);
    CHECK(two.residual == 0.0);

    const RatioClass one = djc::classify_ratio(1.0);
    CHECK(one.rational);
    CHECK(one.p == 1);
    CHECK(one.q == 1);

    const RatioClass ratio32 = djc::classify_ratio(1.5);
    CHECK(ratio32.rational);
    CHECK(ratio32.p == 3);
    CHECK(ratio32.q == 2);

    const RatioClass ratio53 = djc::classify_ratio(5.0 / 3.0);
    CHECK(ratio53.rational);
    CHECK(ratio53.p == 5);
    CHECK(ratio53.q == 3);
    CHECK(std::abs(ratio53.residual) < 1e-15);

    // Lowest terms, not just any representation.
    const RatioClass reduced = djc::classify_ratio(6.0 / 4.0);
    CHECK(reduced.p == 3);
    CHECK(reduced.q == 2);
}

TEST_CASE("classify_ratio rejects irrational ratios and reports the residual") {
    const RatioClass root2 = djc::classify_ratio(std::numbers::sqrt2);
    CHECK(!root2.rational);
    // No fraction with q <= 64 comes within 1e-9 of sqrt2 (|sqrt2 - p/q| is
    // bounded below by roughly 1/(2 sqrt2 q^2) > 8e-5 here).
    CHECK(std::abs(root2.residual) > 1e-9 * std::numbers::sqrt2);
    CHECK(std::abs(root2.residual) ==
          doctest::Approx(std::abs(std::numbers::sqrt2 -
                                   static_cast<double>(root2.p) / root2.q))
              .epsilon(1e-15));

    // pi with the default denominator cap: nowhere near rational.
    CHECK(!djc::classify_ratio(kPi).rational);
    // 355/113 is exactly representable once the cap admits q = 113.
    CHECK(!djc::classify_ratio(355.0 / 113.0).rational);
    const RatioClass wide = djc::classify_ratio(355.0 / 113.0, 1e-9, 200);
    CHECK(wide.rational);
    CHECK(wide.p == 355);
    CHECK(wide.q == 113);
}

TEST_CASE("classify_ratio respects the tolerance band") {
    // 1e-12 perturbation sits inside the default 1e-9 relative band.
    const RatioClass near = djc::classify_ratio(2.0 + 1e-12);
    CHECK(near.rational);
    CHECK(near.p == 2);
    CHECK(near.q == 1);
    CHECK(near.residual == doctest::Approx(1e-12).epsilon(1e-3));
    CHECK(near.residual > 0.0);  // signed: value minus p/q

    // The same perturbation fails a 1e-14 tolerance.
    const RatioClass strict = djc::classify_ratio(2.0 + 1e-12, 1e-14);
    CHECK(!strict.rational);

    // A 1e-6 perturbation is not 2/1 under the default band.
    CHECK(!djc::classify_ratio(2.0 + 1e-6).rational);
}

TEST_CASE("classify_ratio validates arguments") {
    CHECK_THROWS_AS(djc::classify_ratio(0.0), std::invalid_argument);
    CHECK_THROWS_AS(djc::classify_ratio(-1.5), std::invalid_argument);
    CHECK_THROWS_AS(djc::classify_ratio(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(djc::classify_ratio(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(djc::classify_ratio(1.0, 1e-9, 0), std::invalid_argument);
    // Huge caps must not overflow the convergent recursion.
    CHECK_NOTHROW(djc::classify_ratio(kPi, 1e-30,
                                      std::numeric_limits<long>::max() / 2));
}

TEST_CASE("classify_ratio accepts coupling params directly") {
    const CouplingParams params = CouplingParams::on_resonance(3.0, 2.0);
    const RatioClass rc = djc::classify_ratio(params);
    CHECK(rc.rational);
    CHECK(rc.p == 3);
    CHECK(rc.q == 2);
}

TEST_CASE("period is p pi over g_a for rational ratios") {
    const PeriodReport two = djc::period(CouplingParams::on_resonance(2.0, 1.0));
    REQUIRE(two.period.has_value());
    CHECK(*two.period == doctest::Approx(kPi).epsilon(1e-15));

    const PeriodReport one = djc::period(CouplingParams::on_resonance(1.0, 1.0));
    REQUIRE(one.period.has_value());
    CHECK(*one.period == doctest::Approx(kPi).epsilon(1e-15));

    // g_a = 3, g_b = 2: T = 3 pi / 3 = 2 pi / 2.
    const PeriodReport mixed =
        djc::period(CouplingParams::on_resonance(3.0, 2.0));
    REQUIRE(mixed.period.has_value());
    CHECK(*mixed.period == doctest::Approx(kPi).epsilon(1e-15));

    const PeriodReport irr =
        djc::period(CouplingParams::on_resonance(std::numbers::sqrt2, 1.0));
    CHECK(!irr.period.has_value());
    CHECK(!irr.ratio.rational);
}

TEST_CASE("the reported period really is a period of the envelope") {
    for (auto [ga, gb] : {std::pair{2.0, 1.0}, std::pair{3.0, 2.0},
                          std::pair{5.0, 3.0}, std::pair{1.0, 1.0}}) {
        const CouplingParams params = CouplingParams::on_resonance(ga, gb);
        const double T = *djc::period(params).period;
        for (Pair family : {Pair::AB, Pair::ab, Pair::Ab, Pair::Ba}) {
            CAPTURE(ga);
            CAPTURE(gb);
            CAPTURE(djc::to_string(family));
            CHECK(djc::max_shift_deviation(family, kPi / 6.0, params, T, T,
                                           10000) < 1e-12);
            // Half the period is generally not a period; 2:1 AB is the
            // known exception checked in the divisor test below.
        }
    }
}

TEST_CASE("count_zeros reproduces the textbook lattices") {
    // n = 3: cos(3t) vanishes at pi/6, pi/2, 5pi/6; cos(t) at pi/2 (shared).
    const PeriodReport three =
        djc::count_zeros(Pair::AB, CouplingParams::on_resonance(3.0, 1.0));
    REQUIRE(three.zero_count.has_value());
    CHECK(*three.zero_count == 3);
    REQUIRE(three.zeros.size() == 3);
    CHECK(three.zeros[0] == doctest::Approx(kPi / 6.0).epsilon(1e-15));
    CHECK(three.zeros[1] == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(three.zeros[2] == doctest::Approx(5.0 * kPi / 6.0).epsilon(1e-15));
    CHECK(three.law_verdict == PeriodReport::Law::confirmed);

    // n = 2: zeros pi/4, pi/2, 3pi/4; the cos(t) zero is not shared.
    const PeriodReport two =
        djc::count_zeros(Pair::AB, CouplingParams::on_resonance(2.0, 1.0));
    REQUIRE(two.zeros.size() == 3);
    CHECK(two.zeros[0] == doctest::Approx(kPi / 4.0).epsilon(1e-15));
    CHECK(two.zeros[1] == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(two.zeros[2] == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-15));
    CHECK(two.law_verdict == PeriodReport::Law::confirmed);

    // n = 1: the two cos zeros coincide at pi/2.
    const PeriodReport one =
        djc::count_zeros(Pair::AB, CouplingParams::on_resonance(1.0, 1.0));
    REQUIRE(one.zeros.size() == 1);
    CHECK(one.zeros[0] == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(one.law_verdict == PeriodReport::Law::confirmed);
}

TEST_CASE("zero lattice matches brute-force root isolation") {
    const std::pair<double, double> ratios[] = {
        {1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0}, {3.0, 2.0}, {5.0, 3.0}};
    for (Pair family : {Pair::AB, Pair::ab, Pair::Ab, Pair::Ba}) {
        for (auto [ga, gb] : ratios) {
            CAPTURE(djc::to_string(family));
            CAPTURE(ga);
            CAPTURE(gb);
            const CouplingParams params = CouplingParams::on_resonance(ga, gb);
            const PeriodReport rep = djc::count_zeros(family, params);
            const std::vector<double> want =
                brute_force_zeros(family, params, *rep.period);
            REQUIRE(rep.zeros.size() == want.size());
            for (std::size_t i = 0; i < want.size(); ++i)
                CHECK(rep.zeros[i] ==
                      doctest::Approx(want[i]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("reported zeros kill the envelope and midpoints do not") {
    const CouplingParams params = CouplingParams::on_resonance(5.0, 3.0);
    const PeriodReport rep = djc::count_zeros(Pair::Ba, params);
    const double theta = kPi / 6.0;
    for (double z : rep.zeros)
        CHECK(djc::q_envelope(Pair::Ba, theta, params, z) < 1e-12);
    for (std::size_t i = 0; i + 1 < rep.zeros.size(); ++i) {
        const double mid = 0.5 * (rep.zeros[i] + rep.zeros[i + 1]);
        CHECK(djc::q_envelope(Pair::Ba, theta, params, mid) > 1e-6);
    }
}

TEST_CASE("count_zeros refuses irrational ratios and flat families") {
    const CouplingParams irr =
        CouplingParams::on_resonance(std::numbers::sqrt2, 1.0);
    CHECK_THROWS_AS(djc::count_zeros(Pair::AB, irr),
                    djc::UnsupportedConfiguration);

    const CouplingParams params = CouplingParams::on_resonance(2.0, 1.0);
    const PeriodReport flat = djc::count_zeros(Pair::Aa, params);
    CHECK(flat.identically_zero);
    CHECK(flat.zeros.empty());
    CHECK(!flat.zero_count.has_value());
    CHECK(flat.law_verdict == PeriodReport::Law::not_applicable);
}

TEST_CASE("law verdict only applies to AB with integer ratio") {
    const PeriodReport ab_frac =
        djc::count_zeros(Pair::AB, CouplingParams::on_resonance(3.0, 2.0));
    CHECK(ab_frac.law_verdict == PeriodReport::Law::not_applicable);
    const PeriodReport cavity =
        djc::count_zeros(Pair::ab, CouplingParams::on_resonance(3.0, 1.0));
    CHECK(cavity.law_verdict == PeriodReport::Law::not_applicable);
}

TEST_CASE("odd and even zero counts follow n vs n+1") {
    for (long n = 1; n <= 7; ++n) {
        const CouplingParams params =
            CouplingParams::on_resonance(static_cast<double>(n), 1.0);
        const PeriodReport rep = djc::count_zeros(Pair::AB, params);
        const long expected = (n % 2 == 1) ? n : n + 1;
        CAPTURE(n);
        CHECK(*rep.zero_count == expected);
        CHECK(rep.law_verdict == PeriodReport::Law::confirmed);
    }
}

TEST_CASE("period_report finds sub-periods of the envelope") {
    // Ab at g_a = g_b: |cos t sin t| repeats every T/2.
    const CouplingParams equal = CouplingParams::on_resonance(1.0, 1.0);
    const PeriodReport ab = djc::period_report(Pair::Ab, kPi / 6.0, equal);
    REQUIRE(ab.min_numerical_period.has_value());
    CHECK(*ab.min_numerical_period == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    // AB at g_a = g_b: cos^2 t needs the full T = pi.
    const PeriodReport aa = djc::period_report(Pair::AB, kPi / 6.0, equal);
    REQUIRE(aa.min_numerical_period.has_value());
    CHECK(*aa.min_numerical_period == doctest::Approx(kPi).epsilon(1e-12));

    // 2:1 AB: |cos 2t cos t| has no sub-period dividing T.
    const CouplingParams twoone = CouplingParams::on_resonance(2.0, 1.0);
    const PeriodReport two = djc::period_report(Pair::AB, kPi / 6.0, twoone);
    REQUIRE(two.min_numerical_period.has_value());
    CHECK(*two.min_numerical_period == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("period_report flags degenerate cases") {
    const CouplingParams params = CouplingParams::on_resonance(2.0, 1.0);
    // sin(2 theta) = 0: flat envelope regardless of family.
    const PeriodReport flat_theta = djc::period_report(Pair::AB, 0.0, params);
    CHECK(flat_theta.identically_zero);
    CHECK(!flat_theta.min_numerical_period.has_value());
    // The lattice is still well defined and reported.
    CHECK(flat_theta.zero_count.has_value());

    const PeriodReport flat_family =
        djc::period_report(Pair::Bb, kPi / 4.0, params);
    CHECK(flat_family.identically_zero);
    CHECK(!flat_family.min_numerical_period.has_value());

    const PeriodReport irr = djc::period_report(
        Pair::AB, kPi / 4.0, CouplingParams::on_resonance(std::numbers::sqrt2, 1.0));
    CHECK(!irr.period.has_value());
    CHECK(!irr.min_numerical_period.has_value());
    CHECK(!irr.zero_count.has_value());
}

TEST_CASE("shift identity holds for the predicted pairings") {
    // Independent check on a handful of explicit points before trusting the
    // grid sweep: Q_AB(t + pi/2) vs Q_ab(t) at n = 3.
    const CouplingParams three = CouplingParams::on_resonance(3.0, 1.0);
    const double theta = kPi / 6.0;
    const double shift = kPi / 2.0;
    for (double t : {0.1, 0.54, 1.3, 2.2}) {
        const double lhs = djc::q_envelope(Pair::AB, theta, three, t + shift);
        const double rhs = djc::q_envelope(Pair::ab, theta, three, t);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(1.0));
    }

    const auto odd = djc::verify_shift_identity(three, theta);
    CHECK(odd.n == 3);
    CHECK(odd.shift == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(odd.holds);
    CHECK(odd.predicted[0].first == Pair::AB);
    CHECK(odd.predicted[0].second == Pair::ab);
    CHECK(odd.predicted[1].first == Pair::Ab);
    CHECK(odd.predicted[1].second == Pair::Ba);
    CHECK(odd.predicted_mismatch[0] < 1e-12);
    CHECK(odd.predicted_mismatch[1] < 1e-12);
    // The wrong pairing misses by order sin(2 theta), not rounding.
    CHECK(odd.opposite_mismatch[0] > 0.1);
    CHECK(odd.opposite_mismatch[1] > 0.1);

    const auto even =
        djc::verify_shift_identity(CouplingParams::on_resonance(2.0, 1.0), theta);
    CHECK(even.n == 2);
    CHECK(even.holds);
    CHECK(even.predicted[0].first == Pair::AB);
    CHECK(even.predicted[0].second == Pair::Ab);
    CHECK(even.predicted[1].first == Pair::ab);
    CHECK(even.predicted[1].second == Pair::Ba);
    CHECK(even.opposite_mismatch[0] > 0.1);

    const auto unity =
        djc::verify_shift_identity(CouplingParams::on_resonance(1.0, 1.0), theta);
    CHECK(unity.n == 1);
    CHECK(unity.holds);
}

TEST_CASE("shift identity needs an integer ratio") {
    CHECK_THROWS_AS(
        djc::verify_shift_identity(CouplingParams::on_resonance(3.0, 2.0),
                                   kPi / 6.0),
        djc::UnsupportedConfiguration);
    CHECK_THROWS_AS(
        djc::verify_shift_identity(
            CouplingParams::on_resonance(std::numbers::sqrt2, 1.0), kPi / 6.0),
        djc::UnsupportedConfiguration);
}

TEST_CASE("scan grids are inclusive and match pointwise evaluation") {
    const CouplingParams params = CouplingParams::on_resonance(2.0, 1.0);
    const auto res = djc::scan(Pair::AB, kPi / 4.0, params, 2.0 * kPi, 101);
    REQUIRE(res.times.size() == 101);
    REQUIRE(res.values.size() == 101);
    CHECK(res.times.front() == 0.0);
    CHECK(res.times.back() == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    const double cap = std::abs(std::sin(kPi / 2.0));
    for (std::size_t i = 0; i < res.times.size(); ++i) {
        const double want =
            djc::q_envelope(Pair::AB, kPi / 4.0, params, res.times[i]);
        CHECK(res.values[i] == doctest::Approx(want).epsilon(1e-12).scale(1.0));
        CHECK(res.values[i] >= 0.0);
        CHECK(res.values[i] <= cap + 1e-12);
    }
}

TEST_CASE("scan validates its grid") {
    const CouplingParams params = CouplingParams::on_resonance(1.0, 1.0);
    CHECK_THROWS_AS(djc::scan(Pair::AB, 0.5, params, 1.0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(djc::scan(Pair::AB, 0.5, params, 0.0, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(djc::scan(Pair::AB, 0.5, params, -1.0, 10),
                    std::invalid_argument);
}

TEST_CASE("swapping couplings exchanges the mixed families") {
    // Ba with (g_a, g_b) equals Ab with (g_b, g_a): sin cos vs cos sin.
    const auto ba = djc::scan(Pair::Ba, kPi / 6.0,
                              CouplingParams::on_resonance(2.0, 1.0), 5.0, 200);
    const auto ab = djc::scan(Pair::Ab, kPi / 6.0,
                              CouplingParams::on_resonance(1.0, 2.0), 5.0, 200);
    for (std::size_t i = 0; i < ba.values.size(); ++i)
        CHECK(ba.values[i] ==
              doctest::Approx(ab.values[i]).epsilon(1e-13).scale(1.0));
}
