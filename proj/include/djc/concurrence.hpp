#pragma once

#include <Eigen/Dense>

#include "djc/core_model.hpp"

namespace djc {

/// Two-qubit density matrix in the pair's product basis ordered excited /
/// occupied first: {|11>, |10>, |01>, |00>} where the first slot is the
/// first-named subsystem of the pair and 1 means atom up / one photon.
/// Valid instances are Hermitian with unit trace (both within 1e-12) and
/// eigenvalues >= -1e-10.
using TwoQubitDensity = Eigen::Matrix4cd;

/// Partial trace of |state><state| onto the chosen pair, with the other two
/// subsystems traced out. In the single-excitation sector the result is
/// always X-type with a single coherence in the (|10>,|01>) block: the |11>
/// row and column vanish because a second excitation would be needed.
/// Input must be normalized within 1e-9 (InvalidState otherwise); it is
/// renormalized internally so the output trace is 1 to rounding.
TwoQubitDensity reduce(const SingleExcState& state, Pair pair);

/// Wootters concurrence C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4))
/// with l_i the decreasing eigenvalues of rho * (sy@sy) rho^* (sy@sy),
/// computed through the Hermitian form sqrt(rho) rho~ sqrt(rho) which shares
/// those eigenvalues. Eigenvalues at or below the roundoff noise floor
/// (1e-13 relative + 1e-15 absolute) are treated as exact zeros so that
/// rank-deficient inputs do not pick up O(sqrt(eps)) error from the square
/// roots. Non-Hermitian input, trace != 1 (both 1e-12), or a density
/// eigenvalue below -1e-10 -> InvalidState (the input was not a state); a
/// spin-flip-product eigenvalue below -1e-10 -> NumericalFailure (PSD inputs
/// cannot produce one except through a broken computation).
double wootters(const TwoQubitDensity& rho);

/// Shortcut for X-type matrices (nonzeros only on diagonal + antidiagonal):
///   C = 2 max(0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33))
/// (1-indexed in the basis order above). Entries off the X pattern larger
/// than 1e-12 -> InvalidState.
double wootters_x_state(const TwoQubitDensity& rho);

/// Atom-atom concurrence 2 |atom_a| |atom_b| without building the density
/// matrix; equals wootters(reduce(state, Pair::AB)) within 1e-12.
/// Input must be normalized within 1e-9.
double concurrence_AB_fast(const SingleExcState& state);

/// wootters(reduce(state, pair)) convenience wrapper.
double concurrence(const SingleExcState& state, Pair pair);

}  // namespace djc
