// hilbert.hpp — truncated Fock-space matrices for the isolated and coupled Hamiltonians
//
// Basis ordering is |n_a, n_r> -> n_a * n_res + n_r (atom index slowest).
// Matrices are dense, real and exactly symmetric.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <utility>

#include "lambshift/errors.hpp"
#include "lambshift/params.hpp"

namespace lambshift {

struct HamiltonianMatrix {
    Eigen::MatrixXd entries;
    std::size_t n_atom{0};
    std::size_t n_res{1};  // 1 for the single-mode (isolated atom) case

    std::size_t dim() const noexcept { return n_atom * n_res; }
    Eigen::Index index(std::size_t na, std::size_t nr) const noexcept {
        return static_cast<Eigen::Index>(na * n_res + nr);
    }
};

struct LadderOps {
    Eigen::MatrixXd annihilation;
    Eigen::MatrixXd creation;
};

// â has √k at (k-1, k); â† is its transpose.
inline LadderOps ladder_ops(std::size_t n) {
    if (n == 0) throw InvalidDimension("ladder_ops: dimension must be >= 1");
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index k = 1; k < dim; ++k) {
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    Eigen::MatrixXd ad = a.transpose();
    return {std::move(a), std::move(ad)};
}

namespace detail {

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& lhs, const Eigen::MatrixXd& rhs) {
    Eigen::MatrixXd out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
    for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
        for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
            out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) = lhs(i, j) * rhs;
        }
    }
    return out;
}

// (â + â†)^4 by explicit matrix power at truncation n; the top few levels carry
// truncation error.
inline Eigen::MatrixXd quartic_flux(const LadderOps& ops) {
    const Eigen::MatrixXd x = ops.annihilation + ops.creation;
    const Eigen::MatrixXd x2 = x * x;
    return x2 * x2;
}

inline void symmetrize(Eigen::MatrixXd& m) {
    // (a + b)/2 == (b + a)/2 bit for bit, so the result is exactly symmetric.
    const Eigen::MatrixXd t = m.transpose();
    m = 0.5 * (m + t);
}

// (ω_a + λ) â†â − (λ/12)(â + â†)^4 on n levels, no constant term.
inline Eigen::MatrixXd coupled_atom_block(const SystemParams& p, std::size_t n) {
    const LadderOps ops = ladder_ops(n);
    Eigen::MatrixXd h = p.atom_frequency_shifted() * (ops.creation * ops.annihilation);
    h -= (p.lambda() / 12.0) * quartic_flux(ops);
    return h;
}

}  // namespace detail

// ω_a(â†â + ½) − (λ/12)(â + â†)^4, zero-point term included.
inline HamiltonianMatrix isolated_hamiltonian(const SystemParams& p, std::size_t n) {
    if (n < FockConfig::min_levels) {
        throw InvalidDimension("isolated_hamiltonian: truncation must be >= 4");
    }
    const LadderOps ops = ladder_ops(n);
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd h = p.omega_a() * (ops.creation * ops.annihilation +
                                       0.5 * Eigen::MatrixXd::Identity(dim, dim));
    h -= (p.lambda() / 12.0) * detail::quartic_flux(ops);
    detail::symmetrize(h);
    return {std::move(h), n, 1};
}

// (ω_a+λ)â†â − (λ/12)(â+â†)^4 + ω_r b̂†b̂ + g(â−â†)(b̂−b̂†), ground-state constants omitted.
inline HamiltonianMatrix coupled_hamiltonian(const SystemParams& p, const FockConfig& cfg) {
    const std::size_t na = cfg.n_atom();
    const std::size_t nr = cfg.n_res();
    const LadderOps a = ladder_ops(na);
    const LadderOps b = ladder_ops(nr);
    const Eigen::MatrixXd id_a = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(na),
                                                           static_cast<Eigen::Index>(na));
    const Eigen::MatrixXd id_r = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(nr),
                                                           static_cast<Eigen::Index>(nr));

    Eigen::MatrixXd h = detail::kron(detail::coupled_atom_block(p, na), id_r);
    h += p.omega_r() * detail::kron(id_a, b.creation * b.annihilation);
    h += p.g() * detail::kron(a.annihilation - a.creation, b.annihilation - b.creation);
    detail::symmetrize(h);
    return {std::move(h), na, nr};
}

}  // namespace lambshift
