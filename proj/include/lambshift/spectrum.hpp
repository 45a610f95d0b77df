// spectrum.hpp — dense diagonalization, bare-state labeling, numeric shift extraction

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "lambshift/errors.hpp"
#include "lambshift/hilbert.hpp"
#include "lambshift/params.hpp"
#include "lambshift/shift_set.hpp"

namespace lambshift {

// Relative residual bound for the eigensolver.
inline constexpr double eigensolver_tolerance = 1e-10;

// Minimum |<n_a,n_r|v>|² for a dressed state to carry the bare label.
// 0.85 is the purity of a dressed state at |Δ| = 2g in a resonant two-mode
// mixing, so labeling is refused roughly where |Δ'| ≲ 2g.
inline constexpr double default_min_overlap = 0.85;

struct Eigendecomposition {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // orthonormal columns
};

inline Eigendecomposition diagonalize(const Eigen::MatrixXd& h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw InvalidDimension("diagonalize: matrix must be square and non-empty");
    }
    const double scale = h.cwiseAbs().maxCoeff();
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(scale, 1.0)) {
        throw ConfigError("diagonalize: matrix is not symmetric");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("diagonalize: eigensolver did not converge");
    }
    Eigendecomposition out{solver.eigenvalues(), solver.eigenvectors()};

    const double residual =
        (h * out.vectors - out.vectors * out.values.asDiagonal()).cwiseAbs().maxCoeff();
    if (residual > eigensolver_tolerance * scale) {
        std::ostringstream os;
        os << "diagonalize: residual " << residual << " exceeds tolerance";
        throw NumericFailure(os.str(), residual);
    }
    const auto n = out.vectors.cols();
    const double ortho = (out.vectors.transpose() * out.vectors -
                          Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (ortho > eigensolver_tolerance) {
        throw NumericFailure("diagonalize: eigenvectors not orthonormal", ortho);
    }
    return out;
}

inline Eigendecomposition diagonalize(const HamiltonianMatrix& h) { return diagonalize(h.entries); }

struct LabeledLevel {
    int n_atom{0};
    int n_res{0};
    double energy{0.0};
    double overlap{0.0};
};

struct LabeledSpectrum {
    std::optional<SystemParams> params;
    FockConfig cfg;
    std::vector<LabeledLevel> levels;

    const LabeledLevel& level(int na, int nr) const {
        for (const auto& l : levels) {
            if (l.n_atom == na && l.n_res == nr) return l;
        }
        std::ostringstream os;
        os << "LabeledSpectrum: no level labeled (" << na << "," << nr << ")";
        throw ConfigError(os.str());
    }
    double energy(int na, int nr) const { return level(na, nr).energy; }
};

// Assigns every bare state |n_a,n_r> with n_a + n_r <= max_n to a dressed
// eigenvector. Pairs are taken greedily by descending overlap, each eigenvector
// used at most once.
inline LabeledSpectrum label_states(const Eigendecomposition& spec, const FockConfig& cfg,
                                    int max_n, double min_overlap = default_min_overlap) {
    if (static_cast<std::size_t>(spec.vectors.rows()) != cfg.dim()) {
        throw InvalidDimension("label_states: decomposition does not match FockConfig");
    }
    if (max_n < 0 || static_cast<std::size_t>(max_n) >= std::min(cfg.n_atom(), cfg.n_res())) {
        throw InvalidDimension("label_states: label cutoff exceeds truncation");
    }

    struct Label { int na; int nr; };
    std::vector<Label> labels;
    for (int total = 0; total <= max_n; ++total) {
        for (int na = total; na >= 0; --na) labels.push_back({na, total - na});
    }

    // (overlap, label index, eigenvector index)
    std::vector<std::tuple<double, std::size_t, Eigen::Index>> candidates;
    const auto n_vec = spec.vectors.cols();
    for (std::size_t li = 0; li < labels.size(); ++li) {
        const auto row = static_cast<Eigen::Index>(
            static_cast<std::size_t>(labels[li].na) * cfg.n_res() +
            static_cast<std::size_t>(labels[li].nr));
        for (Eigen::Index v = 0; v < n_vec; ++v) {
            const double c = spec.vectors(row, v);
            candidates.emplace_back(c * c, li, v);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });

    std::vector<std::optional<LabeledLevel>> assigned(labels.size());
    std::vector<bool> used(static_cast<std::size_t>(n_vec), false);
    std::size_t remaining = labels.size();
    for (const auto& [ov, li, v] : candidates) {
        if (remaining == 0) break;
        if (assigned[li] || used[static_cast<std::size_t>(v)]) continue;
        assigned[li] = LabeledLevel{labels[li].na, labels[li].nr, spec.values(v), ov};
        used[static_cast<std::size_t>(v)] = true;
        --remaining;
    }

    LabeledSpectrum out{std::nullopt, cfg, {}};
    for (const auto& a : assigned) {
        if (a->overlap < min_overlap) {
            std::ostringstream os;
            os << "label_states: ambiguous label (" << a->n_atom << "," << a->n_res
               << "), overlap " << a->overlap << " < " << min_overlap;
            throw AmbiguousLabel(os.str(), a->n_atom, a->n_res, a->overlap);
        }
        out.levels.push_back(*a);
    }
    return out;
}

inline LabeledSpectrum labeled_spectrum(const SystemParams& p, const FockConfig& cfg, int max_n,
                                        double min_overlap = default_min_overlap) {
    LabeledSpectrum s =
        label_states(diagonalize(coupled_hamiltonian(p, cfg)), cfg, max_n, min_overlap);
    s.params = p;
    return s;
}

// Shift decomposition read off the labeled levels of the truncated Hamiltonian.
// χ_ar is half the change of the atom transition when one photon is added.
inline ShiftSet numeric_shifts(const SystemParams& p, const FockConfig& cfg = {},
                               double min_overlap = default_min_overlap) {
    const LabeledSpectrum s = labeled_spectrum(p, cfg, 2, min_overlap);
    const double e00 = s.energy(0, 0);
    const double e10 = s.energy(1, 0);
    const double e01 = s.energy(0, 1);
    const double e11 = s.energy(1, 1);
    const double e20 = s.energy(2, 0);
    const double e02 = s.energy(0, 2);

    const double atom_transition = e10 - e00;
    const double res_transition = e01 - e00;

    ShiftSet out;
    out.route = Route::numeric;
    out.delta_omega_a = atom_transition - p.omega_a();
    out.chi_ar = (atom_transition - (e11 - e01)) / 2.0;
    out.chi_a = 2.0 * e10 - e00 - e20;
    out.chi_r = 2.0 * e01 - e00 - e02;
    out.delta_nm = p.lambda() - out.chi_a - out.chi_ar - out.delta_omega_a;
    out.omega_a_bar = p.omega_a() - out.delta_nm;
    out.omega_r_bar = res_transition + out.chi_r + out.chi_ar;
    return out;
}

struct ConvergedShifts {
    ShiftSet shifts;
    FockConfig cfg;
};

inline double max_field_change(const ShiftSet& a, const ShiftSet& b) {
    const double d[] = {a.omega_a_bar - b.omega_a_bar, a.omega_r_bar - b.omega_r_bar,
                        a.delta_nm - b.delta_nm,       a.chi_a - b.chi_a,
                        a.chi_r - b.chi_r,             a.chi_ar - b.chi_ar,
                        a.delta_omega_a - b.delta_omega_a};
    double m = 0.0;
    for (double x : d) m = std::max(m, std::abs(x));
    return m;
}

// Doubles both truncations until no field moves by tol·ω_a; returns the smaller
// of the last two configurations together with its shifts.
inline ConvergedShifts converge(const SystemParams& p, const FockConfig& cfg0, double tol,
                                std::size_t max_dim = 4096) {
    if (!(tol > 0.0)) throw ConfigError("converge: tolerance must be > 0");
    if (cfg0.dim() > max_dim) throw ResourceLimit("converge: initial dimension exceeds ceiling");

    FockConfig cfg = cfg0;
    ShiftSet current = numeric_shifts(p, cfg);
    for (;;) {
        const FockConfig next_cfg = cfg.doubled();
        if (next_cfg.dim() > max_dim) {
            std::ostringstream os;
            os << "converge: dimension " << next_cfg.dim() << " exceeds ceiling " << max_dim;
            throw ResourceLimit(os.str());
        }
        ShiftSet next = numeric_shifts(p, next_cfg);
        if (max_field_change(current, next) < tol * p.omega_a()) return {current, cfg};
        cfg = next_cfg;
        current = next;
    }
}

}  // namespace lambshift
