// normalmodes.hpp — symplectic (Bogoliubov) diagonalization of the quadratic part
// and the Kerr coefficients it implies
//
// Operator vector ordering is v = [â, b̂, â†, b̂†] and η = [α̂, β̂, α̂†, β̂†],
// with H/ħ = vᵀ H v and η = Fᵀ v.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "lambshift/errors.hpp"
#include "lambshift/params.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/validity.hpp"

namespace lambshift {

using Matrix4 = Eigen::Matrix4d;

inline constexpr double symplectic_tolerance = 1e-10;
inline constexpr double degeneracy_tolerance = 1e-12;

struct QuadraticForm {
    Matrix4 h;
};

inline QuadraticForm quadratic_form(const SystemParams& p) {
    const double a = p.atom_frequency_shifted();
    const double r = p.omega_r();
    const double g = p.g();
    Matrix4 h;
    // clang-format off
    h <<  0,  g,  a, -g,
          g,  0, -g,  r,
          a, -g,  0,  g,
         -g,  r,  g,  0;
    // clang-format on
    return {0.5 * h};
}

// J = [[0, I₂], [−I₂, 0]]
inline Matrix4 symplectic_form() {
    Matrix4 j = Matrix4::Zero();
    j(0, 2) = 1.0;
    j(1, 3) = 1.0;
    j(2, 0) = -1.0;
    j(3, 1) = -1.0;
    return j;
}

// Frequencies of the two normal modes, i.e. the coefficients of α̂†α̂ and β̂†β̂.
// `atom` is ω̄_a + λ: it equals ω_a + λ at g = 0.
struct NormalModeFrequencies {
    double atom{0.0};
    double resonator{0.0};
};

namespace detail {

inline void require_stable(const SystemParams& p) {
    if (!p.is_stable()) {
        std::ostringstream os;
        os << "normal modes unstable: 4g^2/((omega_a+lambda)omega_r) = " << p.stability_ratio()
           << " >= 1";
        throw Instability(os.str(), p.stability_ratio());
    }
}

// The atom-like branch is the one continuously connected to ω_a + λ at g = 0.
// Branches repel for g > 0 and never cross, so it is the upper branch exactly
// when ω_a + λ > ω_r.
inline bool atom_is_upper_branch(const SystemParams& p) noexcept {
    return p.atom_frequency_shifted() > p.omega_r();
}

}  // namespace detail

inline NormalModeFrequencies exact_frequencies(const SystemParams& p) {
    detail::require_stable(p);
    const double a = p.atom_frequency_shifted();
    const double r = p.omega_r();
    const double g = p.g();
    const double s = a * a + r * r;
    const double d = std::sqrt((a * a - r * r) * (a * a - r * r) + 16.0 * g * g * a * r);
    const double upper = std::sqrt(0.5 * (s + d));
    // (s − d)/2 rewritten without cancellation.
    const double lower = std::sqrt(2.0 * a * r * (a * r - 4.0 * g * g) / (s + d));
    if (detail::atom_is_upper_branch(p)) return {upper, lower};
    return {lower, upper};
}

struct SymplecticTransform {
    Matrix4 f;
    double omega_a_bar{0.0};  // atom normal-mode frequency minus λ
    double omega_r_bar{0.0};
    double lambda{0.0};

    double atom_mode_frequency() const noexcept { return omega_a_bar + lambda; }

    Eigen::Matrix2d block_a() const { return f.topLeftCorner<2, 2>(); }
    Eigen::Matrix2d block_b() const { return f.topRightCorner<2, 2>(); }

    // v = −J F J η
    Matrix4 inverse_map() const {
        const Matrix4 j = symplectic_form();
        return -j * f * j;
    }

    Matrix4 normal_form() const {
        Matrix4 l = Matrix4::Zero();
        l(0, 2) = l(2, 0) = 0.5 * atom_mode_frequency();
        l(1, 3) = l(3, 1) = 0.5 * omega_r_bar;
        return l;
    }
};

namespace detail {

// Real representative of an eigenvector whose eigenvalue is real: rotate out the
// global phase using the largest component, then normalize.
inline Eigen::Vector4d real_unit_vector(const Eigen::Vector4cd& v) {
    Eigen::Index k = 0;
    v.cwiseAbs().maxCoeff(&k);
    const std::complex<double> phase = v(k) / std::abs(v(k));
    Eigen::Vector4d out = (v / phase).real();
    return out / out.norm();
}

}  // namespace detail

inline SymplecticTransform symplectic_transform(const SystemParams& p) {
    detail::require_stable(p);
    const Matrix4 j = symplectic_form();
    const Matrix4 hj = quadratic_form(p).h * j;
    const double scale = std::max(p.atom_frequency_shifted(), p.omega_r());

    Eigen::EigenSolver<Matrix4> solver(hj);
    if (solver.info() != Eigen::Success) {
        throw NumericFailure("symplectic_transform: eigensolver failed");
    }
    const Eigen::Vector4cd mu = solver.eigenvalues();
    const Eigen::Matrix4cd vecs = solver.eigenvectors();

    std::array<int, 4> order{0, 1, 2, 3};
    for (int i : order) {
        if (std::abs(mu(i).imag()) > symplectic_tolerance * scale) {
            throw NumericFailure("symplectic_transform: complex eigenvalue of HJ",
                                 std::abs(mu(i).imag()));
        }
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return mu(a).real() < mu(b).real(); });
    const double m0 = mu(order[0]).real();
    const double m1 = mu(order[1]).real();
    const double m2 = mu(order[2]).real();
    const double m3 = mu(order[3]).real();
    const double pair_err = std::max(std::abs(m0 + m3), std::abs(m1 + m2));
    if (pair_err > symplectic_tolerance * scale) {
        throw NumericFailure("symplectic_transform: eigenvalues of HJ are not +/- pairs", pair_err);
    }
    if (std::abs(m1 - m0) <= degeneracy_tolerance * scale) {
        throw Degeneracy("symplectic_transform: normal-mode frequencies are degenerate",
                         std::abs(m1 - m0));
    }

    // order[0]/order[3] carry −/+ ω_upper/2, order[1]/order[2] carry −/+ ω_lower/2.
    const bool atom_upper = detail::atom_is_upper_branch(p);
    const std::array<std::array<int, 2>, 2> pairs{
        atom_upper ? std::array<int, 2>{order[0], order[3]} : std::array<int, 2>{order[1], order[2]},
        atom_upper ? std::array<int, 2>{order[1], order[2]} : std::array<int, 2>{order[0], order[3]}};

    Matrix4 f = Matrix4::Zero();
    std::array<double, 2> freq{};
    for (int slot = 0; slot < 2; ++slot) {
        Eigen::Vector4d w = detail::real_unit_vector(vecs.col(pairs[slot][0]));
        Eigen::Vector4d wc = detail::real_unit_vector(vecs.col(pairs[slot][1]));
        // Signs: positive diagonal of F, which gives F = I₄ at g = 0.
        if (w(slot) < 0.0) w = -w;
        if (wc(slot + 2) < 0.0) wc = -wc;
        const double norm = w.dot(j * wc);
        if (!(norm > 0.0)) {
            throw NumericFailure("symplectic_transform: eigenvector pair has wrong symplectic sign",
                                 norm);
        }
        const double s = 1.0 / std::sqrt(norm);
        f.col(slot) = s * w;
        f.col(slot + 2) = s * wc;
        freq[static_cast<std::size_t>(slot)] = -2.0 * mu(pairs[slot][0]).real();
    }

    const double symp_err = (f.transpose() * j * f - j).cwiseAbs().maxCoeff();
    if (symp_err > symplectic_tolerance) {
        throw NumericFailure("symplectic_transform: F^T J F != J", symp_err);
    }
    const double block_err =
        std::max((f.topLeftCorner<2, 2>() - f.bottomRightCorner<2, 2>()).cwiseAbs().maxCoeff(),
                 (f.topRightCorner<2, 2>() - f.bottomLeftCorner<2, 2>()).cwiseAbs().maxCoeff());
    if (block_err > symplectic_tolerance) {
        throw NumericFailure("symplectic_transform: F lacks [[A,B],[B,A]] block form", block_err);
    }

    return {f, freq[0] - p.lambda(), freq[1], p.lambda()};
}

// (â + â†) = c_a (α̂ + α̂†) + c_r (β̂ + β̂†). The inverse map is real, so the flux
// has no (α̂ − α̂†) component.
struct FluxCoefficients {
    double c_a{0.0};
    double c_r{0.0};
};

inline FluxCoefficients flux_coefficients(const SymplecticTransform& t) {
    const Matrix4 m = t.inverse_map();
    return {m(0, 0) + m(0, 2), m(0, 1) + m(0, 3)};
}

// χ_a = λc_a⁴, χ_r = λc_r⁴, χ_ar = λc_a²c_r², from the exact transform.
inline ShiftSet kerr_coefficients(const SystemParams& p, const SymplecticTransform& t) {
    const FluxCoefficients c = flux_coefficients(t);
    const double ca2 = c.c_a * c.c_a;
    const double cr2 = c.c_r * c.c_r;
    const double lam = p.lambda();
    ShiftSet s = shifts_from_modes(p, t.omega_a_bar, t.omega_r_bar, lam * ca2 * ca2,
                                   lam * cr2 * cr2, lam * ca2 * cr2, Route::normal_mode);
    s.flagged = is_near_resonance(p) || is_straddling(p);
    return s;
}

inline ShiftSet normal_mode_shifts(const SystemParams& p) {
    return kerr_coefficients(p, symplectic_transform(p));
}

}  // namespace lambshift
