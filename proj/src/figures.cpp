#include "djc/figures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace djc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPoints = 1601;

struct ThetaTag {
    double value;
    const char* tag;
};

constexpr ThetaTag kThetas[] = {{kPi / 4.0, "pi4"},
                                {kPi / 6.0, "pi6"},
                                {kPi / 12.0, "pi12"}};

struct RatioTag {
    double value;
    bool rational;
    const char* tag;
};

const RatioTag kRatios[] = {{1.0, true, "r1"},
                            {std::numbers::sqrt2, false, "rsqrt2"},
                            {2.0, true, "r2"}};

std::vector<FigureCurve> fig2() {
    // Three-theta overlays of Q_AB (left column) and Q_ab (right column),
    // one ratio per row: 1, sqrt(2), 2.
    std::vector<FigureCurve> curves;
    const char* panels = "abcdef";
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 2; ++col) {
            const char panel = panels[row * 2 + col];
            const Pair family = col == 0 ? Pair::AB : Pair::ab;
            for (const ThetaTag& th : kThetas)
                curves.push_back({std::string("fig2_") + panel + "_" + th.tag +
                                      ".csv",
                                  family, th.value, kRatios[row].value,
                                  kRatios[row].rational, 0.0, 4.0 * kPi,
                                  kPoints});
        }
    return curves;
}

std::vector<FigureCurve> fig3() {
    // AB vs ab at integer ratios 2 and 3, theta pi/6. Panels (b)(d) replace
    // the AB curve with its left-shift by pi/(2 g_b), which lands on ab for
    // odd ratio only.
    std::vector<FigureCurve> curves;
    const double theta = kPi / 6.0;
    const struct {
        char panel;
        double ratio;
        bool shifted;
    } panels[] = {{'a', 2.0, false},
                  {'b', 2.0, true},
                  {'c', 3.0, false},
                  {'d', 3.0, true}};
    for (const auto& p : panels) {
        const double shift = p.shifted ? kPi / 2.0 : 0.0;
        const char* ab_tag = p.shifted ? "QABshift" : "QAB";
        curves.push_back({std::string("fig3_") + p.panel + "_" + ab_tag + ".csv",
                          Pair::AB, theta, p.ratio, true, shift, 2.0 * kPi,
                          kPoints});
        curves.push_back({std::string("fig3_") + p.panel + "_Qab.csv", Pair::ab,
                          theta, p.ratio, true, 0.0, 2.0 * kPi, kPoints});
    }
    return curves;
}

std::vector<FigureCurve> fig4() {
    // Ab (panel a) and Ba (panel b) preparations, ratio overlays 1, sqrt2, 2.
    std::vector<FigureCurve> curves;
    const double theta = kPi / 12.0;
    for (int col = 0; col < 2; ++col) {
        const char panel = col == 0 ? 'a' : 'b';
        const Pair family = col == 0 ? Pair::Ab : Pair::Ba;
        for (const RatioTag& r : kRatios)
            curves.push_back({std::string("fig4_") + panel + "_" + r.tag +
                                  ".csv",
                              family, theta, r.value, r.rational, 0.0,
                              4.0 * kPi, kPoints});
    }
    return curves;
}

std::vector<FigureCurve> fig5() {
    // Four preparations at ratios 5 (a,b) and 4 (c,d), theta pi/12, grouped
    // by the shift law: odd ratio pairs AB with ab and Ab with Ba, even
    // ratio pairs AB with Ab and ab with Ba.
    std::vector<FigureCurve> curves;
    const double theta = kPi / 12.0;
    const struct {
        char panel;
        double ratio;
        Pair first;
        Pair second;
    } panels[] = {{'a', 5.0, Pair::AB, Pair::ab},
                  {'b', 5.0, Pair::Ab, Pair::Ba},
                  {'c', 4.0, Pair::AB, Pair::Ab},
                  {'d', 4.0, Pair::ab, Pair::Ba}};
    for (const auto& p : panels)
        for (Pair family : {p.first, p.second})
            curves.push_back({std::string("fig5_") + p.panel + "_Q" +
                                  to_string(family) + ".csv",
                              family, theta, p.ratio, true, 0.0, 2.0 * kPi,
                              kPoints});
    return curves;
}

}  // namespace

std::vector<FigureCurve> figure_curves(const std::string& name) {
    if (name == "fig2") return fig2();
    if (name == "fig3") return fig3();
    if (name == "fig4") return fig4();
    if (name == "fig5") return fig5();
    if (name == "all") {
        std::vector<FigureCurve> curves;
        for (const std::string& figure : figure_names()) {
            std::vector<FigureCurve> part = figure_curves(figure);
            curves.insert(curves.end(), part.begin(), part.end());
        }
        return curves;
    }
    throw std::invalid_argument("unknown figure '" + name +
                                "' (expected fig2..fig5 or all)");
}

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig2", "fig3", "fig4",
                                                   "fig5"};
    return names;
}

}  // namespace djc
