#include "djc/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "djc/kernels/dispatch.hpp"

namespace djc {

namespace {

void require_cutoff(int cutoff) {
    if (cutoff < 1)
        throw std::invalid_argument("cutoff must be >= 1 to hold the photon");
}

double max_coupling(const CouplingParams& p) { return std::max(p.g_a, p.g_b); }

void require_step(const CouplingParams& params, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("dt must be positive");
    if (dt * max_coupling(params) > kMaxStepFraction)
        throw std::invalid_argument("dt too coarse: need dt*max(g) <= 0.1");
}

// Uniform substep count for a fixed-step integration to |t_final|.
std::size_t step_count(double t_final, double dt) {
    const double steps = std::ceil(std::abs(t_final) / dt);
    return static_cast<std::size_t>(steps);
}

}  // namespace

std::size_t full_dim(int cutoff) {
    require_cutoff(cutoff);
    const std::size_t levels = static_cast<std::size_t>(cutoff) + 1;
    return 4 * levels * levels;
}

std::size_t linear_index(const FullBasisIndex& idx, int cutoff) {
    require_cutoff(cutoff);
    if (idx.atom_a < 0 || idx.atom_a > 1 || idx.atom_b < 0 || idx.atom_b > 1 ||
        idx.n_a < 0 || idx.n_a > cutoff || idx.n_b < 0 || idx.n_b > cutoff)
        throw std::invalid_argument("basis label out of range");
    const std::size_t levels = static_cast<std::size_t>(cutoff) + 1;
    return ((static_cast<std::size_t>(idx.atom_a) * 2 + idx.atom_b) * levels +
            idx.n_a) *
               levels +
           idx.n_b;
}

FullBasisIndex basis_state(std::size_t linear, int cutoff) {
    require_cutoff(cutoff);
    if (linear >= full_dim(cutoff))
        throw std::invalid_argument("linear index out of range");
    const std::size_t levels = static_cast<std::size_t>(cutoff) + 1;
    FullBasisIndex idx;
    idx.n_b = static_cast<int>(linear % levels);
    linear /= levels;
    idx.n_a = static_cast<int>(linear % levels);
    linear /= levels;
    idx.atom_b = static_cast<int>(linear % 2);
    idx.atom_a = static_cast<int>(linear / 2);
    return idx;
}

FullHamiltonian::FullHamiltonian(const CouplingParams& params, int cutoff,
                                 Picture picture)
    : params_(params), cutoff_(cutoff), picture_(picture), dim_(full_dim(cutoff)) {
    re_.assign(dim_ * dim_, 0.0);
    im_.assign(dim_ * dim_, 0.0);

    auto add = [&](std::size_t row, std::size_t col, double v) {
        re_[row * dim_ + col] += v;
    };

    const double w_at = params.omega_atom;
    const double w_cav = params.omega_cavity;
    for (std::size_t i = 0; i < dim_; ++i) {
        const FullBasisIndex b = basis_state(i, cutoff);
        const double sz = 0.5 * (b.atom_a ? 1.0 : -1.0) +
                          0.5 * (b.atom_b ? 1.0 : -1.0);
        if (picture == Picture::lab) {
            add(i, i, w_at * sz + w_cav * (b.n_a + b.n_b));
        } else {
            // H - omega_cavity*K collapses to (w_at - w_cav)*sz, which is an
            // exact 0.0 at resonance rather than a rounded cancellation.
            add(i, i, (w_at - w_cav) * sz);
        }

        // g_a (sigma_A^+ a + sigma_A^- a^dag): flip atom A up while removing
        // one photon from mode a, plus the conjugate. Only the lowering
        // branch is filled; Hermitian mirror added below.
        if (b.atom_a == 0 && b.n_a >= 1) {
            FullBasisIndex up = b;
            up.atom_a = 1;
            up.n_a = b.n_a - 1;
            add(linear_index(up, cutoff), i, params.g_a * std::sqrt(b.n_a));
        }
        if (b.atom_b == 0 && b.n_b >= 1) {
            FullBasisIndex up = b;
            up.atom_b = 1;
            up.n_b = b.n_b - 1;
            add(linear_index(up, cutoff), i, params.g_b * std::sqrt(b.n_b));
        }
    }
    // Hermitian closure of the coupling terms (all entries are real).
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r + 1; c < dim_; ++c) {
            const double upper = re_[r * dim_ + c];
            const double lower = re_[c * dim_ + r];
            if (upper == 0.0 && lower != 0.0) re_[r * dim_ + c] = lower;
            if (lower == 0.0 && upper != 0.0) re_[c * dim_ + r] = upper;
        }
}

Complex FullHamiltonian::element(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_)
        throw std::invalid_argument("element index out of range");
    return {re_[row * dim_ + col], im_[row * dim_ + col]};
}

void FullHamiltonian::apply(const double* x_re, const double* x_im, double* y_re,
                            double* y_im) const {
    kernels::active().complex_matvec(dim_, re_.data(), im_.data(), x_re, x_im,
                                     y_re, y_im);
}

FullStateVector embed(const SingleExcState& state, int cutoff) {
    FullStateVector full{std::vector<Complex>(full_dim(cutoff), Complex{}),
                         cutoff};
    full.amplitudes[linear_index({1, 0, 0, 0}, cutoff)] = state.atom_a;
    full.amplitudes[linear_index({0, 1, 0, 0}, cutoff)] = state.atom_b;
    full.amplitudes[linear_index({0, 0, 1, 0}, cutoff)] = state.cavity_a;
    full.amplitudes[linear_index({0, 0, 0, 1}, cutoff)] = state.cavity_b;
    return full;
}

Projection project(const FullStateVector& full) {
    const int cutoff = full.cutoff;
    Projection p;
    p.state.atom_a = full.amplitudes[linear_index({1, 0, 0, 0}, cutoff)];
    p.state.atom_b = full.amplitudes[linear_index({0, 1, 0, 0}, cutoff)];
    p.state.cavity_a = full.amplitudes[linear_index({0, 0, 1, 0}, cutoff)];
    p.state.cavity_b = full.amplitudes[linear_index({0, 0, 0, 1}, cutoff)];
    double inside = std::norm(p.state.atom_a) + std::norm(p.state.atom_b) +
                    std::norm(p.state.cavity_a) + std::norm(p.state.cavity_b);
    double total = 0.0;
    for (const Complex& a : full.amplitudes) total += std::norm(a);
    p.leakage = total - inside;
    return p;
}

double excitation_expectation(const FullStateVector& state) {
    double acc = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        const FullBasisIndex b = basis_state(i, state.cutoff);
        const double n = b.n_a + b.n_b + 0.5 * (b.atom_a ? 1.0 : -1.0) +
                         0.5 * (b.atom_b ? 1.0 : -1.0) + 1.0;
        acc += n * std::norm(state.amplitudes[i]);
    }
    return acc;
}

Eigen::Matrix4cd subspace_hamiltonian(const CouplingParams& params) {
    const double detuning = params.omega_cavity - params.omega_atom;
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 2) = params.g_a;
    h(2, 0) = params.g_a;
    h(1, 3) = params.g_b;
    h(3, 1) = params.g_b;
    h(2, 2) = detuning;
    h(3, 3) = detuning;
    return h;
}

namespace {

using Amp4 = Eigen::Vector4cd;

Amp4 to_vec(const SingleExcState& s) {
    Amp4 v;
    v << s.atom_a, s.atom_b, s.cavity_a, s.cavity_b;
    return v;
}

SingleExcState from_vec(const Amp4& v) { return {v(0), v(1), v(2), v(3)}; }

}  // namespace

SingleExcState integrate_subspace(const SingleExcState& initial,
                                  const CouplingParams& params, double t_final,
                                  double dt) {
    require_step(params, dt);
    if (!std::isfinite(t_final))
        throw std::invalid_argument("t_final must be finite");
    const std::size_t steps = step_count(t_final, dt);
    if (steps == 0) return initial;

    const Eigen::Matrix4cd gen =
        Complex{0.0, -1.0} * subspace_hamiltonian(params);
    const double h = t_final / static_cast<double>(steps);
    const double start_norm = norm(initial);

    Amp4 y = to_vec(initial);
    for (std::size_t s = 0; s < steps; ++s) {
        const Amp4 k1 = gen * y;
        const Amp4 k2 = gen * (y + (0.5 * h) * k1);
        const Amp4 k3 = gen * (y + (0.5 * h) * k2);
        const Amp4 k4 = gen * (y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    const double drift = std::abs(y.norm() - start_norm);
    if (drift > kNormDriftLimit)
        throw NumericalFailure("integrate_subspace: norm drift exceeds 1e-9");
    y *= start_norm / y.norm();
    return from_vec(y);
}

FullStateVector integrate_full(const FullStateVector& initial,
                               const FullHamiltonian& ham, double t_final,
                               double dt) {
    if (initial.amplitudes.size() != ham.dim() || initial.cutoff != ham.cutoff())
        throw std::invalid_argument("state and Hamiltonian dimensions differ");
    require_step(ham.params(), dt);
    if (!std::isfinite(t_final))
        throw std::invalid_argument("t_final must be finite");
    const std::size_t steps = step_count(t_final, dt);
    if (steps == 0) return initial;

    const std::size_t n = ham.dim();
    const double h = t_final / static_cast<double>(steps);

    // Split storage; f(y) = -i H y means f_re = (Hy)_im, f_im = -(Hy)_re.
    std::vector<double> yr(n), yi(n);
    for (std::size_t i = 0; i < n; ++i) {
        yr[i] = initial.amplitudes[i].real();
        yi[i] = initial.amplitudes[i].imag();
    }
    double start_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        start_norm2 += yr[i] * yr[i] + yi[i] * yi[i];

    std::vector<double> hr(n), hi(n);  // H * (stage input)
    std::vector<double> k1r(n), k1i(n), k2r(n), k2i(n), k3r(n), k3i(n), k4r(n),
        k4i(n), tr(n), ti(n);

    auto deriv = [&](const std::vector<double>& in_r,
                     const std::vector<double>& in_i, std::vector<double>& out_r,
                     std::vector<double>& out_i) {
        ham.apply(in_r.data(), in_i.data(), hr.data(), hi.data());
        for (std::size_t i = 0; i < n; ++i) {
            out_r[i] = hi[i];
            out_i[i] = -hr[i];
        }
    };

    for (std::size_t s = 0; s < steps; ++s) {
        deriv(yr, yi, k1r, k1i);
        for (std::size_t i = 0; i < n; ++i) {
            tr[i] = yr[i] + 0.5 * h * k1r[i];
            ti[i] = yi[i] + 0.5 * h * k1i[i];
        }
        deriv(tr, ti, k2r, k2i);
        for (std::size_t i = 0; i < n; ++i) {
            tr[i] = yr[i] + 0.5 * h * k2r[i];
            ti[i] = yi[i] + 0.5 * h * k2i[i];
        }
        deriv(tr, ti, k3r, k3i);
        for (std::size_t i = 0; i < n; ++i) {
            tr[i] = yr[i] + h * k3r[i];
            ti[i] = yi[i] + h * k3i[i];
        }
        deriv(tr, ti, k4r, k4i);
        const double w = h / 6.0;
        for (std::size_t i = 0; i < n; ++i) {
            yr[i] += w * (k1r[i] + 2.0 * k2r[i] + 2.0 * k3r[i] + k4r[i]);
            yi[i] += w * (k1i[i] + 2.0 * k2i[i] + 2.0 * k3i[i] + k4i[i]);
        }
    }

    double end_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        end_norm2 += yr[i] * yr[i] + yi[i] * yi[i];
    const double drift = std::abs(std::sqrt(end_norm2) - std::sqrt(start_norm2));
    if (drift > kNormDriftLimit)
        throw NumericalFailure("integrate_full: norm drift exceeds 1e-9");
    const double rescale = std::sqrt(start_norm2 / end_norm2);

    FullStateVector out{std::vector<Complex>(n), initial.cutoff};
    for (std::size_t i = 0; i < n; ++i)
        out.amplitudes[i] = Complex{yr[i] * rescale, yi[i] * rescale};
    return out;
}

double default_dt(const CouplingParams& params) {
    return 1e-3 / max_coupling(params);
}

}  // namespace djc
