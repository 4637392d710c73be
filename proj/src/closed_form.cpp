#include "djc/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "djc/kernels/dispatch.hpp"

namespace djc {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

void require_finite_time(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
}

}  // namespace

bool envelope_factors(Pair family, bool& a_is_sin, bool& b_is_sin) {
    switch (family) {
        case Pair::AB: a_is_sin = false; b_is_sin = false; return true;
        case Pair::ab: a_is_sin = true;  b_is_sin = true;  return true;
        case Pair::Ab: a_is_sin = false; b_is_sin = true;  return true;
        case Pair::Ba: a_is_sin = true;  b_is_sin = false; return true;
        case Pair::Aa:
        case Pair::Bb: return false;
    }
    throw std::invalid_argument("invalid Pair value");
}

SingleExcState evolve(const SingleExcState& s0, const CouplingParams& params,
                      double t) {
    params.require_resonant("evolve");
    require_finite_time(t);
    const double ca = std::cos(params.g_a * t), sa = std::sin(params.g_a * t);
    const double cb = std::cos(params.g_b * t), sb = std::sin(params.g_b * t);
    return {s0.atom_a * ca + kMinusI * s0.cavity_a * sa,
            s0.atom_b * cb + kMinusI * s0.cavity_b * sb,
            s0.cavity_a * ca + kMinusI * s0.atom_a * sa,
            s0.cavity_b * cb + kMinusI * s0.atom_b * sb};
}

std::vector<SingleExcState> evolve_grid(const SingleExcState& s0,
                                        const CouplingParams& params, double t0,
                                        double dt, std::size_t count) {
    params.require_resonant("evolve_grid");
    require_finite_time(t0);
    require_finite_time(dt);
    std::vector<SingleExcState> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(evolve(s0, params, t0 + static_cast<double>(i) * dt));
    return out;
}

DressedEigensystem dressed_eigensystem(const CouplingParams& params) {
    params.require_resonant("dressed_eigensystem");
    const Complex r{1.0 / std::numbers::sqrt2, 0.0};
    const Complex o{0.0, 0.0};
    DressedEigensystem es;
    es.eigenvalues = {params.g_a, -params.g_a, params.g_b, -params.g_b};
    es.eigenvectors = {SingleExcState{r, o, r, o}, SingleExcState{r, o, -r, o},
                       SingleExcState{o, r, o, r}, SingleExcState{o, r, o, -r}};
    return es;
}

double q_envelope(Pair family, double theta, const CouplingParams& params,
                  double t) {
    params.require_resonant("q_envelope");
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    require_finite_time(t);
    bool a_sin, b_sin;
    if (!envelope_factors(family, a_sin, b_sin)) return 0.0;
    const double amp = std::sin(2.0 * theta);
    const double arg_a = params.g_a * t, arg_b = params.g_b * t;
    const double fa = a_sin ? std::sin(arg_a) : std::cos(arg_a);
    const double fb = b_sin ? std::sin(arg_b) : std::cos(arg_b);
    return std::abs(amp * fa * fb);
}

double concurrence_closed(const SingleExcState& s0, const CouplingParams& params,
                          double t) {
    params.require_resonant("concurrence_closed");
    require_finite_time(t);
    // The moduli-only rotation is exact iff both cross terms vanish;
    // otherwise 2|x||y| picks up -2 sin cos Im(x0 conj(z0)) style errors.
    const double cross_a = std::abs(std::imag(s0.atom_a * std::conj(s0.cavity_a)));
    const double cross_b = std::abs(std::imag(s0.atom_b * std::conj(s0.cavity_b)));
    const double scale_a = std::abs(s0.atom_a) * std::abs(s0.cavity_a);
    const double scale_b = std::abs(s0.atom_b) * std::abs(s0.cavity_b);
    if (cross_a > 1e-12 * scale_a || cross_b > 1e-12 * scale_b)
        throw InvalidState(
            "concurrence_closed needs Im(x0 conj(z0)) = Im(y0 conj(k0)) = 0; "
            "use the concurrence module on evolve() output instead");
    const double ca = std::cos(params.g_a * t), sa = std::sin(params.g_a * t);
    const double cb = std::cos(params.g_b * t), sb = std::sin(params.g_b * t);
    const double x2 = std::norm(s0.atom_a) * ca * ca + std::norm(s0.cavity_a) * sa * sa;
    const double y2 = std::norm(s0.atom_b) * cb * cb + std::norm(s0.cavity_b) * sb * sb;
    return 2.0 * std::sqrt(x2) * std::sqrt(y2);
}

void q_envelope_scan(Pair family, double theta, const CouplingParams& params,
                     double t0, double dt, std::size_t count, double* out) {
    params.require_resonant("q_envelope_scan");
    if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
    require_finite_time(t0);
    require_finite_time(dt);
    bool a_sin, b_sin;
    if (!envelope_factors(family, a_sin, b_sin)) {
        for (std::size_t i = 0; i < count; ++i) out[i] = 0.0;
        return;
    }
    const double amp = std::sin(2.0 * theta);
    kernels::active().q_envelope_scan(amp, params.g_a, a_sin ? 1 : 0, params.g_b,
                                      b_sin ? 1 : 0, t0, dt, count, out);
}

std::vector<double> q_envelope_scan(Pair family, double theta,
                                    const CouplingParams& params, double t0,
                                    double dt, std::size_t count) {
    std::vector<double> out(count);
    q_envelope_scan(family, theta, params, t0, dt, count, out.data());
    return out;
}

}  // namespace djc
