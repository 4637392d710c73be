#pragma once

#include <array>
#include <vector>

#include "djc/core_model.hpp"

namespace djc {

/// Interaction-picture amplitudes at time t under the resonant double
/// Jaynes-Cummings Hamiltonian. Each atom-cavity pair rotates independently:
///   atom_a(t)   =  atom_a(0)   cos(g_a t) - i cavity_a(0) sin(g_a t)
///   cavity_a(t) =  cavity_a(0) cos(g_a t) - i atom_a(0)   sin(g_a t)
/// and likewise for the b pair with g_b. Negative t is the inverse map.
/// Throws UnsupportedConfiguration off resonance, std::invalid_argument for
/// non-finite t.
SingleExcState evolve(const SingleExcState& initial, const CouplingParams& params,
                      double t);

/// evolve() sampled over a uniform grid: times[i] = t0 + i*dt, count points.
std::vector<SingleExcState> evolve_grid(const SingleExcState& initial,
                                        const CouplingParams& params, double t0,
                                        double dt, std::size_t count);

/// Eigen-decomposition of the single-excitation coupling Hamiltonian at
/// resonance. Each atom-cavity pair contributes one +-g doublet whose
/// eigenvectors split the excitation evenly between atom and cavity.
struct DressedEigensystem {
    /// {+g_a, -g_a, +g_b, -g_b}
    std::array<double, 4> eigenvalues;
    /// Matching order: (|atom_a> +- |cavity_a>)/sqrt2, (|atom_b> +- |cavity_b>)/sqrt2.
    std::array<SingleExcState, 4> eigenvectors;
};

/// Throws UnsupportedConfiguration off resonance.
DressedEigensystem dressed_eigensystem(const CouplingParams& params);

/// Which trig factor each coupling contributes to the family's envelope:
/// false = cos, true = sin. Returns false for Aa/Bb (envelope identically 0,
/// kinds untouched).
bool envelope_factors(Pair family, bool& a_is_sin, bool& b_is_sin);

/// Analytic atom-atom concurrence at time t for the six partial Bell
/// preparations, |sin(2 theta)| times:
///   AB: |cos(g_a t) cos(g_b t)|    ab: |sin(g_a t) sin(g_b t)|
///   Ab: |cos(g_a t) sin(g_b t)|    Ba: |sin(g_a t) cos(g_b t)|
///   Aa, Bb: exactly 0 (atom B resp. atom A never gets populated).
/// Value in [0, |sin 2 theta|]. Throws UnsupportedConfiguration off resonance.
double q_envelope(Pair family, double theta, const CouplingParams& params,
                  double t);

/// Atom-atom concurrence 2|x(t)||y(t)| at time t with the moduli taken from
/// the closed-form rotation of the initial moduli:
///   |x(t)|^2 = |x0|^2 cos^2(g_a t) + |z0|^2 sin^2(g_a t),  x = atom_a, z = cavity_a
/// and likewise for |y(t)| with the b pair. That modulus formula drops the
/// cross term 2 sin cos Im(x0 conj(z0)), so it is exact only when
/// Im(x0 conj(z0)) = Im(y0 conj(k0)) = 0; all six partial Bell preparations
/// satisfy this (real amplitudes). Inputs outside that class are rejected
/// with InvalidState rather than silently miscomputed.
double concurrence_closed(const SingleExcState& initial,
                          const CouplingParams& params, double t);

/// q_envelope over a uniform grid t[i] = t0 + i*dt, dispatched to the fastest
/// kernel the CPU supports. out must have room for count doubles.
void q_envelope_scan(Pair family, double theta, const CouplingParams& params,
                     double t0, double dt, std::size_t count, double* out);

std::vector<double> q_envelope_scan(Pair family, double theta,
                                    const CouplingParams& params, double t0,
                                    double dt, std::size_t count);

}  // namespace djc
