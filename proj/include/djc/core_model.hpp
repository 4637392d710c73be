#pragma once

#include <complex>
#include <string>

#include "djc/errors.hpp"

namespace djc {

using Complex = std::complex<double>;

/// Physical constants of the double Jaynes-Cummings system: two two-level
/// atoms (A, B), each coupled to its own single-mode cavity (a, b). The
/// two atom-cavity pairs never interact with each other.
struct CouplingParams {
    double g_a;            ///< coupling of atom A to cavity a (rad/time)
    double g_b;            ///< coupling of atom B to cavity b (rad/time)
    double omega_atom;     ///< atomic transition frequency (rad/time)
    double omega_cavity;   ///< cavity mode frequency (rad/time)
    double resonance_rtol; ///< relative tolerance used by resonant()

    CouplingParams(double coupling_a, double coupling_b, double atom_freq,
                   double cavity_freq, double rtol = 1e-9);

    /// Convenience factory for the resonant case (omega_atom == omega_cavity).
    static CouplingParams on_resonance(double coupling_a, double coupling_b,
                                       double omega = 1.0);

    /// True iff |omega_atom - omega_cavity| <= rtol * max(|omega_atom|, |omega_cavity|).
    bool resonant() const;

    /// Throws UnsupportedConfiguration unless resonant(). Closed-form
    /// operations call this; the numeric propagators do not.
    void require_resonant(const char* where) const;
};

/// State in the single-excitation sector, where exactly one quantum lives
/// somewhere in the four subsystems. The members are the amplitudes of the
/// basis states, named by which subsystem holds the excitation:
///   atom_a   -> |up  down 0 0>
///   atom_b   -> |down up   0 0>
///   cavity_a -> |down down 1 0>
///   cavity_b -> |down down 0 1>
///
/// This is a plain value carrier: it can hold unnormalized amplitudes
/// (norm() reports them faithfully). Use normalized() when a unit vector
/// is required.
struct SingleExcState {
    Complex atom_a{};
    Complex atom_b{};
    Complex cavity_a{};
    Complex cavity_b{};

    /// Builds a unit-norm state from the given amplitudes. Near-unit input
    /// is rescaled; input with norm below 1e-9 has no meaningful direction
    /// and is rejected with std::invalid_argument.
    static SingleExcState normalized(Complex atom_a, Complex atom_b,
                                     Complex cavity_a, Complex cavity_b);
};

/// Euclidean norm sqrt(|atom_a|^2 + |atom_b|^2 + |cavity_a|^2 + |cavity_b|^2).
double norm(const SingleExcState& state);

/// Rescales to unit norm; rejects norm < 1e-9 like SingleExcState::normalized.
SingleExcState normalize(const SingleExcState& state);

/// Labels an unordered choice of two subsystems out of {atom A, atom B,
/// cavity a, cavity b}. Doubles as the tag of the partial Bell preparation
/// that starts the excitation shared across that pair, and as the selector
/// for which pair's reduced density matrix to compute.
enum class Pair { AB, ab, Aa, Bb, Ab, Ba };

inline constexpr int kPairCount = 6;
inline constexpr Pair kAllPairs[kPairCount] = {Pair::AB, Pair::ab, Pair::Aa,
                                               Pair::Bb, Pair::Ab, Pair::Ba};

const char* to_string(Pair pair);
/// Accepts exactly the six tags "AB","ab","Aa","Bb","Ab","Ba"; anything else
/// throws std::invalid_argument.
Pair parse_pair(const std::string& tag);

/// A partial Bell state: cos(theta)|first> + sin(theta)|second> within the
/// chosen pair. theta is stored as given; any finite real is accepted.
struct PreparedState {
    Pair pair;
    double theta;  ///< mixing angle (radians)
};

/// Amplitudes at t=0 for the requested partial Bell state, as
/// (atom_a, atom_b, cavity_a, cavity_b):
///   AB: (cos t, sin t, 0, 0)    ab: (0, 0, cos t, sin t)
///   Aa: (cos t, 0, sin t, 0)    Bb: (0, cos t, 0, sin t)
///   Ab: (cos t, 0, 0, sin t)    Ba: (0, cos t, sin t, 0)
/// The result is normalized. Non-finite theta -> std::invalid_argument.
SingleExcState initial_state(const PreparedState& prep);

struct SubsystemPopulations {
    double p_a;  ///< excitation probability in the A+a Jaynes-Cummings pair
    double p_b;  ///< excitation probability in the B+b pair
};

/// (|atom_a|^2 + |cavity_a|^2, |atom_b|^2 + |cavity_b|^2). The two JC
/// systems exchange no excitation, so these are constants of motion.
SubsystemPopulations subsystem_populations(const SingleExcState& state);

/// Norm threshold below which a direction is considered meaningless.
inline constexpr double kMinNorm = 1e-9;

/// Norm accuracy guaranteed after construction/normalization.
inline constexpr double kNormTolerance = 1e-12;

}  // namespace djc
