#include "djc/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace djc {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kXPatternTol = 1e-12;

void require_normalized(const SingleExcState& s, const char* where) {
    if (std::abs(norm(s) - 1.0) > kMinNorm)
        throw InvalidState(std::string(where) +
                           ": state must be normalized within 1e-9");
}

void require_density(const TwoQubitDensity& rho, const char* where) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermTol)
        throw InvalidState(std::string(where) + ": matrix is not Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > kTraceTol ||
        std::abs(rho.trace().imag()) > kTraceTol)
        throw InvalidState(std::string(where) + ": trace must be 1");
}

// Populations and the single coherence of the X-type reduced state, in the
// excited-first basis {|11>,|10>,|01>,|00>}: the |11> slot is always empty
// (a second excitation would be required), |10> holds the first subsystem's
// amplitude p, |01> the second's q, |00> the leftover population, and the
// only coherence is rho_{10,01} = p * conj(q).
struct XParts {
    Complex p, q;     // amplitudes of |10> and |01>
    double leftover;  // population of |00>
};

XParts x_parts(const SingleExcState& s, Pair pair) {
    switch (pair) {
        case Pair::AB:
            return {s.atom_a, s.atom_b,
                    std::norm(s.cavity_a) + std::norm(s.cavity_b)};
        case Pair::ab:
            return {s.cavity_a, s.cavity_b,
                    std::norm(s.atom_a) + std::norm(s.atom_b)};
        case Pair::Aa:
            return {s.atom_a, s.cavity_a,
                    std::norm(s.atom_b) + std::norm(s.cavity_b)};
        case Pair::Bb:
            return {s.atom_b, s.cavity_b,
                    std::norm(s.atom_a) + std::norm(s.cavity_a)};
        case Pair::Ab:
            return {s.atom_a, s.cavity_b,
                    std::norm(s.atom_b) + std::norm(s.cavity_a)};
        case Pair::Ba:
            return {s.atom_b, s.cavity_a,
                    std::norm(s.atom_a) + std::norm(s.cavity_b)};
    }
    throw std::invalid_argument("invalid Pair value");
}

}  // namespace

TwoQubitDensity reduce(const SingleExcState& state, Pair pair) {
    require_normalized(state, "reduce");
    const XParts xp = x_parts(normalize(state), pair);
    TwoQubitDensity rho = TwoQubitDensity::Zero();
    rho(1, 1) = std::norm(xp.p);
    rho(2, 2) = std::norm(xp.q);
    rho(3, 3) = xp.leftover;
    rho(1, 2) = xp.p * std::conj(xp.q);
    rho(2, 1) = std::conj(rho(1, 2));
    return rho;
}

double wootters(const TwoQubitDensity& rho) {
    require_density(rho, "wootters");

    // sqrt(rho) from the spectral decomposition; tiny negative populations
    // are rounding, anything past the floor is a corrupt input.
    Eigen::SelfAdjointEigenSolver<TwoQubitDensity> rho_eig(rho);
    Eigen::Vector4d pops = rho_eig.eigenvalues();
    for (int i = 0; i < 4; ++i) {
        if (pops(i) < kEigenFloor)
            throw InvalidState("wootters: density eigenvalue below -1e-10");
        pops(i) = std::sqrt(std::max(pops(i), 0.0));
    }
    const TwoQubitDensity sqrt_rho = rho_eig.eigenvectors() *
                                     pops.asDiagonal() *
                                     rho_eig.eigenvectors().adjoint();

    // rho~ = (sy x sy) rho^* (sy x sy); entrywise conjugate in this basis.
    TwoQubitDensity yy = TwoQubitDensity::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const TwoQubitDensity rho_tilde = yy * rho.conjugate() * yy;

    // Hermitian PSD form sharing the eigenvalues of rho * rho~.
    const TwoQubitDensity m = sqrt_rho * rho_tilde * sqrt_rho;
    Eigen::SelfAdjointEigenSolver<TwoQubitDensity> m_eig(m);
    Eigen::Vector4d lam = m_eig.eigenvalues();  // ascending
    // Rank-deficient inputs (every reduced single-excitation state has rank
    // <= 2) put exact zeros in this spectrum; they come back as O(eps) noise
    // whose square roots would pollute the sum with O(sqrt(eps)). Anything
    // at or below the roundoff floor is a zero: the relative term covers
    // product roundoff, the absolute term the eigensolver's floor for
    // trace-one inputs (||m|| <= 1).
    const double noise_floor = 1e-13 * std::max(lam(3), 0.0) + 1e-15;
    double c = 0.0;
    for (int i = 3; i >= 0; --i) {
        if (lam(i) < kEigenFloor)
            throw NumericalFailure(
                "wootters: spin-flip product eigenvalue below -1e-10");
        const double root = lam(i) <= noise_floor ? 0.0 : std::sqrt(lam(i));
        c += (i == 3) ? root : -root;
    }
    return std::max(0.0, c);
}

double wootters_x_state(const TwoQubitDensity& rho) {
    require_density(rho, "wootters_x_state");
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) {
            const bool on_x = (r == col) || (r + col == 3);
            if (!on_x && std::abs(rho(r, col)) > kXPatternTol)
                throw InvalidState("wootters_x_state: matrix is not X-type");
        }
    const double inner =
        std::abs(rho(1, 2)) -
        std::sqrt(std::max(0.0, rho(0, 0).real() * rho(3, 3).real()));
    const double outer =
        std::abs(rho(0, 3)) -
        std::sqrt(std::max(0.0, rho(1, 1).real() * rho(2, 2).real()));
    return 2.0 * std::max({0.0, inner, outer});
}

double concurrence_AB_fast(const SingleExcState& state) {
    require_normalized(state, "concurrence_AB_fast");
    const SingleExcState s = normalize(state);
    return 2.0 * std::abs(s.atom_a) * std::abs(s.atom_b);
}

double concurrence(const SingleExcState& state, Pair pair) {
    return wootters(reduce(state, pair));
}

}  // namespace djc
