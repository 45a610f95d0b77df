// params.hpp — bare model parameters and Fock-space truncation

#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>

#include "lambshift/errors.hpp"

namespace lambshift {

// Angular frequencies of the bare model, conventionally in units where omega_a = 1.
//
// Construction checks positivity only. Stability (g² < (ω_a+λ)ω_r/4) is a
// property of the point, queried with is_stable(), because the validity
// report must be able to describe unstable points too.
class SystemParams {
public:
    SystemParams(double omega_a, double omega_r, double lambda, double g)
        : omega_a_(omega_a), omega_r_(omega_r), lambda_(lambda), g_(g) {
        if (!(std::isfinite(omega_a) && std::isfinite(omega_r) &&
              std::isfinite(lambda) && std::isfinite(g))) {
            throw InvalidParams("SystemParams: non-finite parameter");
        }
        if (!(omega_a > 0.0)) throw InvalidParams("SystemParams: omega_a must be > 0");
        if (!(omega_r > 0.0)) throw InvalidParams("SystemParams: omega_r must be > 0");
        if (lambda < 0.0) throw InvalidParams("SystemParams: lambda must be >= 0");
        if (g < 0.0) throw InvalidParams("SystemParams: g must be >= 0");
    }

    // Point defined by ratios to omega_a: ω_r = ω_a(1 + Δ/ω_a).
    static SystemParams from_detuning(double omega_a, double detuning, double lambda, double g) {
        return SystemParams(omega_a, omega_a + detuning, lambda, g);
    }

    double omega_a() const noexcept { return omega_a_; }
    double omega_r() const noexcept { return omega_r_; }
    double lambda() const noexcept { return lambda_; }
    double g() const noexcept { return g_; }

    double detuning() const noexcept { return omega_r_ - omega_a_; }           // Δ
    double sum() const noexcept { return omega_a_ + omega_r_; }                // Σ
    double detuning_shifted() const noexcept { return detuning() - lambda_; }  // Δ'
    double sum_shifted() const noexcept { return sum() + lambda_; }            // Σ'

    // Prefactor of the atom number operator in the coupled Hamiltonian.
    double atom_frequency_shifted() const noexcept { return omega_a_ + lambda_; }

    // 4g²/((ω_a+λ)ω_r); the lower normal mode softens to zero at 1.
    double stability_ratio() const noexcept {
        return 4.0 * g_ * g_ / (atom_frequency_shifted() * omega_r_);
    }
    bool is_stable() const noexcept { return stability_ratio() < 1.0; }

    SystemParams with_omega_r(double v) const { return {omega_a_, v, lambda_, g_}; }
    SystemParams with_lambda(double v) const { return {omega_a_, omega_r_, v, g_}; }
    SystemParams with_g(double v) const { return {omega_a_, omega_r_, lambda_, v}; }

    std::string describe() const {
        std::ostringstream os;
        os.precision(12);
        os << "omega_a=" << omega_a_ << " omega_r=" << omega_r_ << " lambda=" << lambda_
           << " g=" << g_;
        return os.str();
    }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;

private:
    double omega_a_;
    double omega_r_;
    double lambda_;
    double g_;
};

// Number of Fock levels kept for each mode. The quartic term couples n to n±4,
// so fewer than four levels cannot represent it.
class FockConfig {
public:
    static constexpr std::size_t min_levels = 4;
    static constexpr std::size_t default_levels = 15;

    FockConfig() : FockConfig(default_levels, default_levels) {}
    FockConfig(std::size_t n_atom, std::size_t n_res) : n_atom_(n_atom), n_res_(n_res) {
        if (n_atom < min_levels || n_res < min_levels) {
            throw InvalidDimension("FockConfig: n_atom and n_res must be >= 4");
        }
    }

    std::size_t n_atom() const noexcept { return n_atom_; }
    std::size_t n_res() const noexcept { return n_res_; }
    std::size_t dim() const noexcept { return n_atom_ * n_res_; }

    FockConfig doubled() const { return {2 * n_atom_, 2 * n_res_}; }

    friend bool operator==(const FockConfig&, const FockConfig&) = default;

private:
    std::size_t n_atom_;
    std::size_t n_res_;
};

}  // namespace lambshift
