#pragma once

#include <string>
#include <vector>

#include "djc/core_model.hpp"

namespace djc {

/// One curve of the built-in figure sets. Couplings are g_b = 1 and
/// g_a = ratio; the dimensionless axis gt therefore equals t.
struct FigureCurve {
    std::string file;    ///< "<fig>_<panel>_<curve>.csv"
    Pair family;
    double theta;
    double ratio;        ///< g_a / g_b
    bool rational_ratio; ///< false for the sqrt(2) panels
    double t_offset;     ///< evaluate Q at t + t_offset (phase-shifted curves)
    double t_max;
    std::size_t points;
};

/// Curve recipes for "fig2".."fig5" (or "all"):
///   fig2: atom-atom concurrence for AB- and ab-prepared states, panels
///         a/b ratio 1, c/d sqrt(2), e/f 2, three thetas per panel.
///   fig3: AB vs ab curves at ratios 2 and 3 (theta pi/6), plus panels
///         overlaying ab with AB shifted left by pi/(2 g_b).
///   fig4: Ab- and Ba-prepared curves at ratios 1, sqrt(2), 2 (theta pi/12).
///   fig5: the four preparations at ratios 5 and 4 (theta pi/12), grouped
///         by which pairs coincide under the pi/(2 g_b) shift law.
/// Unknown name -> std::invalid_argument.
std::vector<FigureCurve> figure_curves(const std::string& name);

/// The four figure names in order.
const std::vector<std::string>& figure_names();

}  // namespace djc
