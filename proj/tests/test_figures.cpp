#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "djc/figures.hpp"
#include "doctest.h"

using djc::FigureCurve;
using djc::Pair;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("figure names are the four built-in sets") {
    const auto& names = djc::figure_names();
    REQUIRE(names.size() == 4);
    CHECK(names[0] == "fig2");
    CHECK(names[1] == "fig3");
    CHECK(names[2] == "fig4");
    CHECK(names[3] == "fig5");
}

TEST_CASE("curve counts match the panel grids") {
    CHECK(djc::figure_curves("fig2").size() == 18);  // 6 panels x 3 thetas
    CHECK(djc::figure_curves("fig3").size() == 8);   // 4 panels x 2 curves
    CHECK(djc::figure_curves("fig4").size() == 6);   // 2 panels x 3 ratios
    CHECK(djc::figure_curves("fig5").size() == 8);   // 4 panels x 2 curves
    CHECK(djc::figure_curves("all").size() == 40);
}

TEST_CASE("unknown figure names are rejected") {
    CHECK_THROWS_AS(djc::figure_curves("fig6"), std::invalid_argument);
    CHECK_THROWS_AS(djc::figure_curves(""), std::invalid_argument);
    CHECK_THROWS_AS(djc::figure_curves("Fig2"), std::invalid_argument);
}

TEST_CASE("file names are unique and well formed") {
    std::set<std::string> seen;
    for (const FigureCurve& c : djc::figure_curves("all")) {
        CAPTURE(c.file);
        CHECK(seen.insert(c.file).second);
        CHECK(c.file.find(".csv") == c.file.size() - 4);
        CHECK(c.file.rfind("fig", 0) == 0);
        CHECK(c.points >= 2);
        CHECK(c.t_max > 0.0);
        CHECK(c.ratio > 0.0);
    }
    CHECK(seen.size() == 40);
}

TEST_CASE("fig2 spans both columns, three ratios and three thetas") {
    const auto curves = djc::figure_curves("fig2");
    int ab_curves = 0, cavity_curves = 0, irrational = 0;
    std::set<double> thetas;
    for (const FigureCurve& c : curves) {
        if (c.family == Pair::AB) ++ab_curves;
        if (c.family == Pair::ab) ++cavity_curves;
        if (!c.rational_ratio) {
            ++irrational;
            CHECK(c.ratio == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
        }
        thetas.insert(c.theta);
        CHECK(c.t_offset == 0.0);
        CHECK(c.t_max == doctest::Approx(4.0 * kPi).epsilon(1e-15));
    }
    CHECK(ab_curves == 9);
    CHECK(cavity_curves == 9);
    CHECK(irrational == 6);
    REQUIRE(thetas.size() == 3);
    CHECK(*thetas.begin() == doctest::Approx(kPi / 12.0).epsilon(1e-15));
    CHECK(*thetas.rbegin() == doctest::Approx(kPi / 4.0).epsilon(1e-15));
}

TEST_CASE("fig3 shifted panels offset only the AB curve") {
    const auto curves = djc::figure_curves("fig3");
    int shifted = 0;
    for (const FigureCurve& c : curves) {
        CHECK(c.theta == doctest::Approx(kPi / 6.0).epsilon(1e-15));
        CHECK((c.ratio == 2.0 || c.ratio == 3.0));
        if (c.t_offset != 0.0) {
            ++shifted;
            CHECK(c.family == Pair::AB);
            // Left shift by pi/(2 g_b) with g_b = 1.
            CHECK(c.t_offset == doctest::Approx(kPi / 2.0).epsilon(1e-15));
            CHECK(c.file.find("QABshift") != std::string::npos);
        }
    }
    CHECK(shifted == 2);
}

TEST_CASE("fig4 covers the mixed preparations") {
    const auto curves = djc::figure_curves("fig4");
    int ab = 0, ba = 0;
    for (const FigureCurve& c : curves) {
        CHECK(c.theta == doctest::Approx(kPi / 12.0).epsilon(1e-15));
        if (c.family == Pair::Ab) ++ab;
        if (c.family == Pair::Ba) ++ba;
    }
    CHECK(ab == 3);
    CHECK(ba == 3);
}

TEST_CASE("fig5 groups preparations by the shift pairing") {
    const auto curves = djc::figure_curves("fig5");
    // Panels a/b carry ratio 5, c/d ratio 4; every curve is rational.
    int five = 0, four = 0;
    for (const FigureCurve& c : curves) {
        CHECK(c.rational_ratio);
        CHECK(c.theta == doctest::Approx(kPi / 12.0).epsilon(1e-15));
        if (c.ratio == 5.0) ++five;
        if (c.ratio == 4.0) ++four;
    }
    CHECK(five == 4);
    CHECK(four == 4);
    // Odd-ratio panels pair AB with ab and Ab with Ba.
    CHECK(curves[0].family == Pair::AB);
    CHECK(curves[1].family == Pair::ab);
    CHECK(curves[2].family == Pair::Ab);
    CHECK(curves[3].family == Pair::Ba);
    // Even-ratio panels pair AB with Ab and ab with Ba.
    CHECK(curves[4].family == Pair::AB);
    CHECK(curves[5].family == Pair::Ab);
    CHECK(curves[6].family == Pair::ab);
    CHECK(curves[7].family == Pair::Ba);
}

TEST_CASE("all concatenates the four sets in order") {
    const auto all = djc::figure_curves("all");
    const auto fig2 = djc::figure_curves("fig2");
    const auto fig5 = djc::figure_curves("fig5");
    REQUIRE(all.size() == 40);
    CHECK(all.front().file == fig2.front().file);
    CHECK(all.back().file == fig5.back().file);
}
