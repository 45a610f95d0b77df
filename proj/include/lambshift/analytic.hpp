// analytic.hpp — closed-form shift formulas, perturbative baselines and
// transmon circuit conversion

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "lambshift/errors.hpp"
#include "lambshift/params.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/validity.hpp"

namespace lambshift {

// CODATA 2018 (e and h exact in SI since 2019).
namespace codata2018 {
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double planck = 6.62607015e-34;              // J s
inline constexpr double hbar = 1.054571817e-34;               // J s
}  // namespace codata2018

// ---------------------------------------------------------------- isolated atom

struct IsolatedLevels {
    double omega_a{0.0};
    double lambda{0.0};
    std::vector<double> energies;  // E_n/ħ, n = 0..n_max

    double transition(std::size_t n) const { return energies.at(n) - energies.at(n - 1); }
};

// First-order levels E_n/ħ = (ω_a−λ)(n+½) − λ(n²/2 − n/2 − ¼).
inline IsolatedLevels isolated_levels(double omega_a, double lambda, std::size_t n_max) {
    IsolatedLevels out{omega_a, lambda, {}};
    out.energies.reserve(n_max + 1);
    for (std::size_t k = 0; k <= n_max; ++k) {
        const double n = static_cast<double>(k);
        out.energies.push_back((omega_a - lambda) * (n + 0.5) -
                               lambda * (n * n / 2.0 - n / 2.0 - 0.25));
    }
    return out;
}

// ------------------------------------------------------------- shift formulas

namespace detail {

inline void require_detuned(const SystemParams& p, const char* who) {
    if (p.detuning() == 0.0) throw Resonance(std::string(who) + ": pole at Delta = 0");
}

}  // namespace detail

// Leading order in g and λ for g ≪ |Δ| ≪ Σ. χ_r is O(g⁴) and returned as 0.
inline ShiftSet rwa_shifts(const SystemParams& p) {
    detail::require_detuned(p, "rwa_shifts");
    const double d = p.detuning();
    const double lam = p.lambda();
    const double g2 = p.g() * p.g();
    const double pull = g2 / d + lam * g2 / (d * d);

    ShiftSet s = shifts_from_modes(p, p.omega_a() - pull, p.omega_r() + pull,
                                   lam * (1.0 - 2.0 * g2 / (d * d)), 0.0, lam * g2 / (d * d),
                                   Route::rwa);
    s.flagged = is_near_resonance(p) || std::abs(d) >= rwa_ratio_threshold * p.sum();
    return s;
}

// Large-detuning forms, g ≪ |Δ| ~ Σ. The Stark shift 2χ_ar carries ω_r².
inline ShiftSet beyond_rwa_shifts(const SystemParams& p) {
    detail::require_detuned(p, "beyond_rwa_shifts");
    const double wa = p.omega_a();
    const double wr = p.omega_r();
    const double d = p.detuning();
    const double sg = p.sum();
    const double lam = p.lambda();
    const double g2 = p.g() * p.g();
    const double d2s2 = d * d * sg * sg;

    const double omega_a_bar = wa - g2 * 2.0 * wr / (d * sg) - 4.0 * lam * g2 * wr * wa / d2s2;
    const double omega_r_bar = wr + g2 * 2.0 * wa / (d * sg) + 4.0 * lam * g2 * wa * wa / d2s2;
    const double chi_a = lam * (1.0 - 4.0 * g2 * wr * (wa * wa + wr * wr) / (wa * d2s2));
    const double chi_ar = 4.0 * lam * g2 * wr * wr / d2s2;

    ShiftSet s = shifts_from_modes(p, omega_a_bar, omega_r_bar, chi_a, 0.0, chi_ar,
                                   Route::beyond_rwa);
    s.flagged = is_near_resonance(p) || is_straddling(p);
    return s;
}

// Perturbative Stark-shift baseline λg²/(Δ(Δ−λ)). Poles are detected to a few
// ulps of ω_a, since Δ − λ is formed from rounded inputs.
inline double koch_stark_shift(const SystemParams& p) {
    const double d = p.detuning();
    const double eps = 1e-12 * p.omega_a();
    if (std::abs(d) <= eps || std::abs(d - p.lambda()) <= eps) {
        throw Resonance("koch_stark_shift: pole at Delta in {0, lambda}");
    }
    return p.lambda() * p.g() * p.g() / (d * (d - p.lambda()));
}

// Two-level-atom dispersive (Lamb) shift −g²/Δ.
inline double jc_dispersive_shift(const SystemParams& p) {
    detail::require_detuned(p, "jc_dispersive_shift");
    return -p.g() * p.g() / p.detuning();
}

// Second-order expansions of the exact normal-mode transform, in Δ' = Δ−λ and
// Σ' = Σ+λ. They serve as cross-checks for the numeric symplectic route.
struct SecondOrderModes {
    double omega_a_bar{0.0};
    double omega_r_bar{0.0};
    // â ≃ alpha·α̂ + beta·β̂ + alpha_dag·α̂† + beta_dag·β̂†
    double alpha{0.0};
    double beta{0.0};
    double alpha_dag{0.0};
    double beta_dag{0.0};
};

inline SecondOrderModes second_order_modes(const SystemParams& p) {
    const double dp = p.detuning_shifted();
    const double sp = p.sum_shifted();
    if (dp == 0.0) throw Resonance("second_order_modes: pole at Delta' = 0");
    const double g = p.g();
    const double g2 = g * g;
    const double a = p.atom_frequency_shifted();
    const double wr = p.omega_r();
    SecondOrderModes m;
    m.omega_a_bar = p.omega_a() - 2.0 * g2 * wr / (sp * dp);
    m.omega_r_bar = wr + 2.0 * g2 * p.omega_a() / (sp * dp);
    m.alpha = 1.0 - g2 * 2.0 * a * wr / (dp * dp * sp * sp);
    m.beta = -g / dp;
    m.alpha_dag = -g2 * (wr / a) / (sp * dp);
    m.beta_dag = -g / sp;
    return m;
}

// ------------------------------------------------------------ transmon circuit

class TransmonCircuit {
public:
    TransmonCircuit(double josephson_inductance, double capacitance)
        : l_j_(josephson_inductance), c_(capacitance) {
        if (!(l_j_ > 0.0) || !(c_ > 0.0) || !std::isfinite(l_j_) || !std::isfinite(c_)) {
            throw InvalidParams("TransmonCircuit: L_J and C must be finite and > 0");
        }
    }
    double josephson_inductance() const noexcept { return l_j_; }  // H
    double capacitance() const noexcept { return c_; }              // F

private:
    double l_j_;
    double c_;
};

struct TransmonParams {
    double omega_a{0.0};  // rad/s
    double lambda{0.0};   // rad/s
    double phi_zpf{0.0};  // Wb
};

// ħλ = e²/2C, ω_a = 1/√(L_J C), φ_zpf = √(ħ√(L_J/C)/2).
inline TransmonParams transmon_params(const TransmonCircuit& c) {
    using namespace codata2018;
    const double l = c.josephson_inductance();
    const double cap = c.capacitance();
    TransmonParams t;
    t.omega_a = 1.0 / std::sqrt(l * cap);
    t.lambda = elementary_charge * elementary_charge / (2.0 * cap * hbar);
    t.phi_zpf = std::sqrt(hbar * std::sqrt(l / cap) / 2.0);
    return t;
}

}  // namespace lambshift
