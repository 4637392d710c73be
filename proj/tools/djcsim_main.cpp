// djcsim: scans, period/zero reports, verification suites, and the built-in
// figure sets, all on the double Jaynes-Cummings single-excitation model.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 verification or
// numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "djc/analysis.hpp"
#include "djc/closed_form.hpp"
#include "djc/concurrence.hpp"
#include "djc/errors.hpp"
#include "djc/figures.hpp"
#include "djc/kernels/dispatch.hpp"
#include "djc/oracle.hpp"
#include "djc/scan_io.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kOutputDirVar = "DJC_OUTPUT_DIR";

// Angles come in as radians, either plain decimals or pi literals:
// "pi", "pi/6", "2pi/3", "-pi/4", "0.5235987".
double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty angle");

    const std::size_t pos = s.find("pi");
    const char* begin = s.c_str();
    char* end = nullptr;
    if (pos == std::string::npos) {
        const double v = std::strtod(begin, &end);
        if (end != begin + s.size())
            throw std::invalid_argument("cannot parse angle '" + text + "'");
        return v;
    }

    double coeff = 1.0;
    if (pos > 0) {
        const std::string head = s.substr(0, pos);
        if (head == "-") {
            coeff = -1.0;
        } else if (head == "+") {
            coeff = 1.0;
        } else {
            coeff = std::strtod(head.c_str(), &end);
            if (end != head.c_str() + head.size())
                throw std::invalid_argument("cannot parse angle '" + text + "'");
        }
    }
    double den = 1.0;
    const std::string tail = s.substr(pos + 2);
    if (!tail.empty()) {
        if (tail[0] != '/')
            throw std::invalid_argument("cannot parse angle '" + text + "'");
        const std::string d = tail.substr(1);
        den = std::strtod(d.c_str(), &end);
        if (end != d.c_str() + d.size() || den == 0.0)
            throw std::invalid_argument("cannot parse angle '" + text + "'");
    }
    return coeff * std::numbers::pi / den;
}

// Relative paths land under $DJC_OUTPUT_DIR when it is set.
fs::path resolve_output(const std::string& path) {
    fs::path p(path);
    if (p.is_absolute()) return p;
    if (const char* base = std::getenv(kOutputDirVar); base && *base)
        return fs::path(base) / p;
    return p;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string metadata_value(double v) { return djc::format_double(v); }

// ---------------------------------------------------------------------------
// scan

struct ScanConfig {
    std::string family = "AB";
    std::string theta = "pi/4";
    double g_a = 1.0;
    double g_b = 1.0;
    double t_max = 2.0 * std::numbers::pi;
    std::size_t points = 201;
    std::string mode = "closed";
    std::string axis = "absolute";
    double dt = 0.0;  // 0 = default_dt(params)
    std::string out;  // empty = stdout
    std::string config;
};

djc::ScanTable oracle_scan(djc::Pair family, double theta,
                           const djc::CouplingParams& params, double t_max,
                           std::size_t points, double dt) {
    djc::ScanTable table;
    const double grid_dt = t_max / static_cast<double>(points - 1);
    djc::SingleExcState state =
        djc::initial_state(djc::PreparedState{family, theta});
    for (std::size_t i = 0; i < points; ++i) {
        if (i > 0)
            state = djc::integrate_subspace(state, params, grid_dt, dt);
        const double t = static_cast<double>(i) * grid_dt;
        table.t.push_back(t);
        table.gt.push_back(params.g_b * t);
        table.concurrence.push_back(djc::concurrence(state, djc::Pair::AB));
    }
    return table;
}

int run_scan(const ScanConfig& cfg) {
    const djc::Pair family = djc::parse_pair(cfg.family);
    const double theta = parse_angle(cfg.theta);
    const djc::CouplingParams params = djc::CouplingParams::on_resonance(cfg.g_a, cfg.g_b);
    if (cfg.points < 2) throw std::invalid_argument("--points must be >= 2");
    if (!(cfg.t_max > 0.0)) throw std::invalid_argument("--tmax must be > 0");
    if (cfg.mode != "closed" && cfg.mode != "oracle")
        throw std::invalid_argument("--mode must be 'closed' or 'oracle'");
    if (cfg.axis != "absolute" && cfg.axis != "dimensionless")
        throw std::invalid_argument("--axis must be 'absolute' or 'dimensionless'");
    // Dimensionless axis: --tmax is a bound on gt = g_b * t.
    const double t_max =
        cfg.axis == "dimensionless" ? cfg.t_max / params.g_b : cfg.t_max;
    const double dt = cfg.dt > 0.0 ? cfg.dt : djc::default_dt(params);

    djc::ScanTable table;
    if (cfg.mode == "oracle") {
        table = oracle_scan(family, theta, params, t_max, cfg.points, dt);
    } else {
        const djc::ScanResult res =
            djc::scan(family, theta, params, t_max, cfg.points);
        table.t = res.times;
        table.gt.reserve(res.times.size());
        for (double t : res.times) table.gt.push_back(params.g_b * t);
        table.concurrence = res.values;
    }

    table.meta = {{"family", cfg.family},
                  {"theta", metadata_value(theta)},
                  {"g_a", metadata_value(params.g_a)},
                  {"g_b", metadata_value(params.g_b)},
                  {"g_ref", "g_b"},
                  {"t_max", metadata_value(t_max)},
                  {"points", std::to_string(cfg.points)},
                  {"mode", cfg.mode}};
    if (cfg.mode == "oracle") table.meta.emplace_back("dt", metadata_value(dt));

    std::ostringstream body;
    djc::write_scan_csv(body, table);
    if (cfg.out.empty())
        std::cout << body.str();
    else
        write_file(resolve_output(cfg.out), body.str());
    return 0;
}

// ---------------------------------------------------------------------------
// period

struct PeriodConfig {
    std::string family = "AB";
    std::string theta = "pi/4";
    double g_a = 1.0;
    double g_b = 1.0;
    double tol = 1e-9;
    long max_den = 64;
    std::string out;
    std::string config;
};

const char* law_name(djc::PeriodReport::Law law) {
    switch (law) {
        case djc::PeriodReport::Law::confirmed: return "confirmed";
        case djc::PeriodReport::Law::violated: return "violated";
        case djc::PeriodReport::Law::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

int run_period(const PeriodConfig& cfg) {
    const djc::Pair family = djc::parse_pair(cfg.family);
    const double theta = parse_angle(cfg.theta);
    const djc::CouplingParams params = djc::CouplingParams::on_resonance(cfg.g_a, cfg.g_b);
    const djc::PeriodReport rep =
        djc::period_report(family, theta, params, cfg.tol, cfg.max_den);
    const djc::RatioClass& rc = rep.ratio;

    json j;
    j["ratio"] = rc.rational
                     ? std::to_string(rc.p) + "/" + std::to_string(rc.q)
                     : std::string("irrational");
    j["residual"] = rc.residual;
    j["period"] = rep.period ? json(*rep.period) : json(nullptr);
    j["zeros"] = rep.zeros;
    j["zero_count"] = rep.zero_count ? json(*rep.zero_count) : json(nullptr);
    j["law_verdict"] = law_name(rep.law_verdict);
    j["identically_zero"] = rep.identically_zero;
    j["min_numerical_period"] =
        rep.min_numerical_period ? json(*rep.min_numerical_period) : json(nullptr);

    const std::string text = j.dump(2) + "\n";
    if (cfg.out.empty())
        std::cout << text;
    else
        write_file(resolve_output(cfg.out), text);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    std::string suite = "all";
    double g_a = 1.0;
    double g_b = 1.0;
    double ratio = 3.0;
    std::string theta = "pi/6";
    int cutoff = djc::kDefaultCutoff;
    double dt = 0.0;
    std::string config;
};

struct CheckOutcome {
    std::string name;
    bool pass;
};

void report_check(std::vector<CheckOutcome>& results, const std::string& name,
                  bool pass, double measured, double bound) {
    results.push_back({name, pass});
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": measured "
              << measured << " vs bound " << bound << "\n";
}

void suite_oracle(const VerifyConfig& cfg, std::vector<CheckOutcome>& results) {
    const djc::CouplingParams params = djc::CouplingParams::on_resonance(cfg.g_a, cfg.g_b);
    const double dt = cfg.dt > 0.0 ? cfg.dt : djc::default_dt(params);
    const double horizon =
        20.0 * std::numbers::pi / std::min(params.g_a, params.g_b);
    const std::size_t segments = 16;
    const double seg = horizon / segments;

    double worst = 0.0;
    for (djc::Pair family : djc::kAllPairs) {
        for (double theta : {std::numbers::pi / 12.0, std::numbers::pi / 6.0,
                             std::numbers::pi / 4.0}) {
            const djc::SingleExcState s0 =
                djc::initial_state(djc::PreparedState{family, theta});
            djc::SingleExcState stepped = s0;
            for (std::size_t i = 1; i <= segments; ++i) {
                stepped = djc::integrate_subspace(stepped, params, seg, dt);
                const djc::SingleExcState exact =
                    djc::evolve(s0, params, static_cast<double>(i) * seg);
                worst = std::max(
                    {worst, std::abs(stepped.atom_a - exact.atom_a),
                     std::abs(stepped.atom_b - exact.atom_b),
                     std::abs(stepped.cavity_a - exact.cavity_a),
                     std::abs(stepped.cavity_b - exact.cavity_b)});
            }
        }
    }
    report_check(results, "oracle: closed form vs subspace integrator", worst < 1e-8,
                 worst, 1e-8);
}

void suite_shift(const VerifyConfig& cfg, std::vector<CheckOutcome>& results) {
    const djc::CouplingParams params = djc::CouplingParams::on_resonance(cfg.ratio, 1.0);
    const double theta = parse_angle(cfg.theta);
    const djc::ShiftIdentityReport rep =
        djc::verify_shift_identity(params, theta);
    for (int i = 0; i < 2; ++i) {
        const std::string name =
            std::string("shift: Q_") + djc::to_string(rep.predicted[i].first) +
            "(t+pi/2g_b) = Q_" + djc::to_string(rep.predicted[i].second) +
            "(t), n=" + std::to_string(rep.n);
        report_check(results, name,
                     rep.predicted_mismatch[i] < djc::kShiftIdentityTol,
                     rep.predicted_mismatch[i], djc::kShiftIdentityTol);
    }
    std::cout << "       opposite pairing mismatches (expected large): "
              << rep.opposite_mismatch[0] << ", " << rep.opposite_mismatch[1]
              << "\n";
}

void suite_conservation(const VerifyConfig& cfg,
                        std::vector<CheckOutcome>& results) {
    const djc::CouplingParams params = djc::CouplingParams::on_resonance(cfg.g_a, cfg.g_b);
    const double dt = cfg.dt > 0.0 ? cfg.dt : djc::default_dt(params);
    const djc::FullHamiltonian ham(params, cfg.cutoff, djc::Picture::lab);
    const double horizon =
        2.0 * std::numbers::pi / std::min(params.g_a, params.g_b);
    const std::size_t segments = 8;
    const double seg = horizon / segments;

    double worst_leak = 0.0, worst_drift = 0.0, worst_moduli = 0.0;
    for (djc::Pair family : {djc::Pair::AB, djc::Pair::Ab}) {
        const djc::SingleExcState s0 = djc::initial_state(
            djc::PreparedState{family, std::numbers::pi / 6.0});
        djc::FullStateVector full = djc::embed(s0, cfg.cutoff);
        const double n0 = djc::excitation_expectation(full);
        for (std::size_t i = 1; i <= segments; ++i) {
            full = djc::integrate_full(full, ham, seg, dt);
            const djc::Projection proj = djc::project(full);
            worst_leak = std::max(worst_leak, std::abs(proj.leakage));
            worst_drift = std::max(
                worst_drift, std::abs(djc::excitation_expectation(full) - n0));
            const djc::SingleExcState exact =
                djc::evolve(s0, params, static_cast<double>(i) * seg);
            worst_moduli = std::max(
                {worst_moduli,
                 std::abs(std::abs(proj.state.atom_a) - std::abs(exact.atom_a)),
                 std::abs(std::abs(proj.state.atom_b) - std::abs(exact.atom_b)),
                 std::abs(std::abs(proj.state.cavity_a) -
                          std::abs(exact.cavity_a)),
                 std::abs(std::abs(proj.state.cavity_b) -
                          std::abs(exact.cavity_b))});
        }
    }
    report_check(results, "conservation: single-excitation leakage",
                 worst_leak < 1e-10, worst_leak, 1e-10);
    report_check(results, "conservation: excitation expectation drift",
                 worst_drift < 1e-9, worst_drift, 1e-9);
    report_check(results, "conservation: full-space moduli vs closed form",
                 worst_moduli < 1e-8, worst_moduli, 1e-8);
}

int run_verify(const VerifyConfig& cfg) {
    if (cfg.suite != "oracle" && cfg.suite != "shift" &&
        cfg.suite != "conservation" && cfg.suite != "all")
        throw std::invalid_argument(
            "--suite must be oracle, shift, conservation, or all");
    std::vector<CheckOutcome> results;
    if (cfg.suite == "oracle" || cfg.suite == "all") suite_oracle(cfg, results);
    if (cfg.suite == "shift" || cfg.suite == "all") suite_shift(cfg, results);
    if (cfg.suite == "conservation" || cfg.suite == "all")
        suite_conservation(cfg, results);

    std::vector<std::string> failing;
    for (const CheckOutcome& r : results)
        if (!r.pass) failing.push_back(r.name);
    if (failing.empty()) {
        std::cout << "all " << results.size() << " checks passed\n";
        return 0;
    }
    std::cout << failing.size() << " check(s) failed:\n";
    for (const std::string& name : failing) std::cout << "  " << name << "\n";
    return 3;
}

// ---------------------------------------------------------------------------
// figure

struct FigureConfig {
    std::string name;
    std::string outdir;  // empty = $DJC_OUTPUT_DIR or cwd
    std::string config;
};

int run_figure(const FigureConfig& cfg) {
    const std::vector<djc::FigureCurve> curves = djc::figure_curves(cfg.name);
    fs::path outdir;
    if (!cfg.outdir.empty())
        outdir = cfg.outdir;
    else if (const char* base = std::getenv(kOutputDirVar); base && *base)
        outdir = base;
    else
        outdir = ".";
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec && !fs::is_directory(outdir))
        throw IoError("cannot create output directory '" + outdir.string() +
                      "'");

    for (const djc::FigureCurve& curve : curves) {
        const djc::CouplingParams params = djc::CouplingParams::on_resonance(curve.ratio, 1.0);
        djc::ScanTable table;
        const double dt =
            curve.t_max / static_cast<double>(curve.points - 1);
        table.t.resize(curve.points);
        for (std::size_t i = 0; i < curve.points; ++i)
            table.t[i] = static_cast<double>(i) * dt;
        table.gt = table.t;  // g_b = 1
        table.concurrence = djc::q_envelope_scan(
            curve.family, curve.theta, params, curve.t_offset, dt, curve.points);

        const std::string fig = curve.file.substr(0, curve.file.find('_'));
        table.meta = {{"figure", fig},
                      {"file", curve.file},
                      {"family", djc::to_string(curve.family)},
                      {"theta", metadata_value(curve.theta)},
                      {"g_a", metadata_value(params.g_a)},
                      {"g_b", metadata_value(params.g_b)},
                      {"g_ref", "g_b"},
                      {"t_offset", metadata_value(curve.t_offset)},
                      {"t_max", metadata_value(curve.t_max)},
                      {"points", std::to_string(curve.points)},
                      {"mode", "closed"}};
        std::ostringstream body;
        djc::write_scan_csv(body, table);
        write_file(outdir / curve.file, body.str());
    }
    std::cout << "wrote " << curves.size() << " curve file(s) to " << outdir.string()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "djcsim: entanglement dynamics of two atoms in separate resonant "
        "Jaynes-Cummings cavities (single-excitation subspace).\n"
        "Angles accept pi literals (pi/4, 2pi/3) or plain radians. The gt "
        "column uses g_ref = g_b. Relative output paths land under "
        "$DJC_OUTPUT_DIR when set."};
    app.require_subcommand(1);

    ScanConfig scan_cfg;
    CLI::App* scan = app.add_subcommand(
        "scan", "Concurrence time series as CSV (t,gt,concurrence)");
    scan->add_option("--config", scan_cfg.config,
                     "key=value file mirroring the flags; flags win");
    scan->add_option("--family", scan_cfg.family,
                     "Preparation: AB, ab, Aa, Bb, Ab, Ba")
        ->capture_default_str();
    scan->add_option("--theta", scan_cfg.theta, "Initial-state angle (radians)")
        ->capture_default_str();
    scan->add_option("--ga", scan_cfg.g_a, "Coupling g_a")->capture_default_str();
    scan->add_option("--gb", scan_cfg.g_b, "Coupling g_b")->capture_default_str();
    scan->add_option("--tmax", scan_cfg.t_max, "Grid end time (start is 0)")
        ->capture_default_str();
    scan->add_option("--points", scan_cfg.points, "Grid points, >= 2")
        ->capture_default_str();
    scan->add_option("--mode", scan_cfg.mode,
                     "closed: analytic envelope; oracle: RK4 + Wootters")
        ->capture_default_str();
    scan->add_option("--axis", scan_cfg.axis,
                     "absolute: --tmax bounds t; dimensionless: bounds g_b*t")
        ->capture_default_str();
    scan->add_option("--dt", scan_cfg.dt, "Integrator step (oracle mode)");
    scan->add_option("--out", scan_cfg.out, "Output file (default stdout)");

    PeriodConfig period_cfg;
    CLI::App* period = app.add_subcommand(
        "period", "Ratio class, period, zero lattice, and law verdict as JSON");
    period->add_option("--config", period_cfg.config,
                       "key=value file mirroring the flags; flags win");
    period->add_option("--family", period_cfg.family, "Preparation")
        ->capture_default_str();
    period->add_option("--theta", period_cfg.theta, "Initial-state angle")
        ->capture_default_str();
    period->add_option("--ga", period_cfg.g_a, "Coupling g_a")
        ->capture_default_str();
    period->add_option("--gb", period_cfg.g_b, "Coupling g_b")
        ->capture_default_str();
    period->add_option("--tol", period_cfg.tol,
                       "Relative tolerance for rationality")
        ->capture_default_str();
    period->add_option("--max-den", period_cfg.max_den,
                       "Largest denominator considered")
        ->capture_default_str();
    period->add_option("--out", period_cfg.out, "Output file (default stdout)");

    VerifyConfig verify_cfg;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run a verification suite; exit 3 on any failing check");
    verify->add_option("--config", verify_cfg.config,
                       "key=value file mirroring the flags; flags win");
    verify->add_option("--suite", verify_cfg.suite,
                       "oracle | shift | conservation | all")
        ->capture_default_str();
    verify->add_option("--ga", verify_cfg.g_a, "Coupling g_a")
        ->capture_default_str();
    verify->add_option("--gb", verify_cfg.g_b, "Coupling g_b")
        ->capture_default_str();
    verify->add_option("--ratio", verify_cfg.ratio,
                       "Integer ratio for the shift suite (g_a=ratio, g_b=1)")
        ->capture_default_str();
    verify->add_option("--theta", verify_cfg.theta, "Angle for the shift suite")
        ->capture_default_str();
    verify->add_option("--cutoff", verify_cfg.cutoff,
                       "Fock cutoff for the conservation suite")
        ->capture_default_str();
    verify->add_option("--dt", verify_cfg.dt, "Integrator step override");

    FigureConfig figure_cfg;
    CLI::App* figure = app.add_subcommand(
        "figure", "Write the built-in curve sets as CSV files");
    figure->add_option("--config", figure_cfg.config,
                       "key=value file mirroring the flags; flags win");
    figure->add_option("name", figure_cfg.name, "fig2, fig3, fig4, fig5, or all")
        ->required();
    figure->add_option("--outdir", figure_cfg.outdir,
                       "Output directory (default $DJC_OUTPUT_DIR or cwd)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    // Flat key=value config files fill whatever the command line left unset.
    auto apply_config = [](CLI::App* sub, const std::string& path) {
        if (path.empty()) return;
        std::ifstream in(path);
        if (!in) throw IoError("cannot read config file '" + path + "'");
        sub->allow_config_extras(CLI::config_extras_mode::error);
        sub->parse_from_stream(in);
    };

    try {
        if (scan->parsed()) {
            apply_config(scan, scan_cfg.config);
            return run_scan(scan_cfg);
        }
        if (period->parsed()) {
            apply_config(period, period_cfg.config);
            return run_period(period_cfg);
        }
        if (verify->parsed()) {
            apply_config(verify, verify_cfg.config);
            return run_verify(verify_cfg);
        }
        if (figure->parsed()) {
            apply_config(figure, figure_cfg.config);
            return run_figure(figure_cfg);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const djc::NumericalFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const djc::UnsupportedConfiguration& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
