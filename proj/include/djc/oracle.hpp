#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "djc/core_model.hpp"

namespace djc {

/// lab: full Hamiltonian including the free atom/cavity energies.
/// interaction: rotating frame generated by omega_cavity * K with
/// K = n_a + n_b + (sz_A + sz_B)/2. K commutes with H, so this frame is
/// time-independent even when detuned; at resonance the diagonal vanishes.
/// Amplitude moduli agree between the two pictures because K is diagonal
/// in the product basis.
enum class Picture { lab, interaction };

/// Product-basis label |atom_a atom_b n_a n_b> with atoms 0=down, 1=up.
struct FullBasisIndex {
    int atom_a;
    int atom_b;
    int n_a;
    int n_b;
};

/// 4*(cutoff+1)^2 for photon numbers 0..cutoff per mode.
std::size_t full_dim(int cutoff);

/// ((atom_a*2 + atom_b)*(cutoff+1) + n_a)*(cutoff+1) + n_b.
std::size_t linear_index(const FullBasisIndex& idx, int cutoff);
FullBasisIndex basis_state(std::size_t linear, int cutoff);

struct FullStateVector {
    std::vector<Complex> amplitudes;  ///< length full_dim(cutoff)
    int cutoff;
};

/// Dense truncated-Fock Hamiltonian of the two independent atom-cavity
/// systems: free terms omega_atom/2 sz per atom and omega_cavity n per mode,
/// plus the rotating-wave couplings g_a (sigma_A^+ a + h.c.) and
/// g_b (sigma_B^+ b + h.c.) with ladder factors sqrt(n).
/// Stored as split real/imaginary planes so the matvec kernels can run on it.
class FullHamiltonian {
  public:
    /// cutoff >= 1 required (cutoff 0 cannot hold the coupled photon).
    FullHamiltonian(const CouplingParams& params, int cutoff, Picture picture);

    std::size_t dim() const { return dim_; }
    int cutoff() const { return cutoff_; }
    Picture picture() const { return picture_; }
    const CouplingParams& params() const { return params_; }

    Complex element(std::size_t row, std::size_t col) const;
    const std::vector<double>& re() const { return re_; }
    const std::vector<double>& im() const { return im_; }

    /// y = H x through the dispatched dense matvec kernel. x and y are
    /// split re/im arrays of length dim(); y must not alias x.
    void apply(const double* x_re, const double* x_im, double* y_re,
               double* y_im) const;

  private:
    CouplingParams params_;
    int cutoff_;
    Picture picture_;
    std::size_t dim_;
    std::vector<double> re_, im_;
};

/// Places the four single-excitation amplitudes at their basis positions.
FullStateVector embed(const SingleExcState& state, int cutoff);

struct Projection {
    SingleExcState state;  ///< raw single-excitation amplitudes, not rescaled
    double leakage;        ///< probability outside the single-excitation sector
};

Projection project(const FullStateVector& full);

/// <K> + 1: counts photons plus excited atoms, so single-excitation states
/// give exactly 1. Conserved by the dynamics in either picture.
double excitation_expectation(const FullStateVector& state);

/// Single-excitation block of the Hamiltonian in the interaction frame,
/// basis (atom_a, atom_b, cavity_a, cavity_b):
///   off-diagonal g_a on atom_a<->cavity_a, g_b on atom_b<->cavity_b,
///   diagonal (0, 0, d, d) with detuning d = omega_cavity - omega_atom.
/// This is the generator of the unnumbered amplitude ODEs at resonance.
Eigen::Matrix4cd subspace_hamiltonian(const CouplingParams& params);

/// Fixed-step classical 4th-order Runge-Kutta on the four coupled amplitude
/// ODEs i dx/dt = H_sub x. dt is a target: the actual uniform step is
/// t_final/ceil(|t_final|/dt), never larger than dt. Preconditions
/// dt > 0 and dt*max(g_a,g_b) <= 0.1 (std::invalid_argument otherwise).
/// The result is renormalized when the norm drift stays below 1e-9;
/// larger drift raises NumericalFailure. Works detuned (unlike evolve()).
SingleExcState integrate_subspace(const SingleExcState& initial,
                                  const CouplingParams& params, double t_final,
                                  double dt);

/// Same stepping scheme on the full truncated space.
FullStateVector integrate_full(const FullStateVector& initial,
                               const FullHamiltonian& h, double t_final,
                               double dt);

inline constexpr int kDefaultCutoff = 2;
inline constexpr double kMaxStepFraction = 0.1;   ///< dt*max(g) bound
inline constexpr double kNormDriftLimit = 1e-9;

/// 1e-3 / max(g_a, g_b).
double default_dt(const CouplingParams& params);

}  // namespace djc
