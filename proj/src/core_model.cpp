#include "djc/core_model.hpp"

#include <cmath>
#include <stdexcept>

namespace djc {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

}  // namespace

CouplingParams::CouplingParams(double coupling_a, double coupling_b,
                               double atom_freq, double cavity_freq, double rtol)
    : g_a(coupling_a),
      g_b(coupling_b),
      omega_atom(atom_freq),
      omega_cavity(cavity_freq),
      resonance_rtol(rtol) {
    require_finite(g_a, "g_a");
    require_finite(g_b, "g_b");
    require_finite(omega_atom, "omega_atom");
    require_finite(omega_cavity, "omega_cavity");
    if (g_a <= 0.0 || g_b <= 0.0)
        throw std::invalid_argument("couplings must be positive");
    if (!(rtol > 0.0) || !std::isfinite(rtol))
        throw std::invalid_argument("resonance_rtol must be positive");
}

CouplingParams CouplingParams::on_resonance(double coupling_a, double coupling_b,
                                            double omega) {
    return CouplingParams(coupling_a, coupling_b, omega, omega);
}

bool CouplingParams::resonant() const {
    const double scale =
        std::max(std::abs(omega_atom), std::abs(omega_cavity));
    return std::abs(omega_atom - omega_cavity) <= resonance_rtol * scale;
}

void CouplingParams::require_resonant(const char* where) const {
    if (!resonant())
        throw UnsupportedConfiguration(
            std::string(where) +
            " requires resonance (omega_atom == omega_cavity)");
}

SingleExcState SingleExcState::normalized(Complex atom_a, Complex atom_b,
                                          Complex cavity_a, Complex cavity_b) {
    return normalize(SingleExcState{atom_a, atom_b, cavity_a, cavity_b});
}

double norm(const SingleExcState& s) {
    return std::sqrt(std::norm(s.atom_a) + std::norm(s.atom_b) +
                     std::norm(s.cavity_a) + std::norm(s.cavity_b));
}

SingleExcState normalize(const SingleExcState& s) {
    const double n = norm(s);
    if (!(n >= kMinNorm))
        throw std::invalid_argument("state norm below 1e-9, no direction");
    const double inv = 1.0 / n;
    return {s.atom_a * inv, s.atom_b * inv, s.cavity_a * inv, s.cavity_b * inv};
}

const char* to_string(Pair pair) {
    switch (pair) {
        case Pair::AB: return "AB";
        case Pair::ab: return "ab";
        case Pair::Aa: return "Aa";
        case Pair::Bb: return "Bb";
        case Pair::Ab: return "Ab";
        case Pair::Ba: return "Ba";
    }
    throw std::invalid_argument("invalid Pair value");
}

Pair parse_pair(const std::string& tag) {
    for (Pair p : kAllPairs)
        if (tag == to_string(p)) return p;
    throw std::invalid_argument("unknown pair tag '" + tag +
                                "' (expected AB, ab, Aa, Bb, Ab or Ba)");
}

SingleExcState initial_state(const PreparedState& prep) {
    require_finite(prep.theta, "theta");
    const Complex c{std::cos(prep.theta), 0.0};
    const Complex s{std::sin(prep.theta), 0.0};
    const Complex o{0.0, 0.0};
    switch (prep.pair) {
        case Pair::AB: return normalize({c, s, o, o});
        case Pair::ab: return normalize({o, o, c, s});
        case Pair::Aa: return normalize({c, o, s, o});
        case Pair::Bb: return normalize({o, c, o, s});
        case Pair::Ab: return normalize({c, o, o, s});
        case Pair::Ba: return normalize({o, c, s, o});
    }
    throw std::invalid_argument("invalid Pair value");
}

SubsystemPopulations subsystem_populations(const SingleExcState& s) {
    return {std::norm(s.atom_a) + std::norm(s.cavity_a),
            std::norm(s.atom_b) + std::norm(s.cavity_b)};
}

}  // namespace djc
