// shift_set.hpp — decomposition of the atom's dispersive shift, tagged by route

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "lambshift/errors.hpp"
#include "lambshift/params.hpp"

namespace lambshift {

enum class Route { numeric, normal_mode, rwa, beyond_rwa };

inline constexpr std::array<Route, 4> all_routes{Route::numeric, Route::normal_mode, Route::rwa,
                                                 Route::beyond_rwa};

inline std::string_view to_string(Route r) noexcept {
    switch (r) {
        case Route::numeric: return "numeric";
        case Route::normal_mode: return "normal_mode";
        case Route::rwa: return "rwa";
        case Route::beyond_rwa: return "beyond_rwa";
    }
    return "unknown";
}

inline std::optional<Route> route_from_string(std::string_view s) noexcept {
    for (Route r : all_routes) {
        if (to_string(r) == s) return r;
    }
    return std::nullopt;
}

// All fields are angular frequencies in the units of SystemParams.
//
// Bookkeeping shared by every route:
//   delta_nm      = omega_a - omega_a_bar
//   delta_omega_a = lambda - delta_nm - chi_a - chi_ar
struct ShiftSet {
    double omega_a_bar{0.0};
    double omega_r_bar{0.0};
    double delta_nm{0.0};
    double chi_a{0.0};
    double chi_r{0.0};
    double chi_ar{0.0};
    double delta_omega_a{0.0};
    Route route{Route::numeric};
    // Point lies outside the stated validity window of this route.
    bool flagged{false};

    double closure_residual(const SystemParams& p) const noexcept {
        return p.lambda() - delta_nm - chi_a - chi_ar - delta_omega_a;
    }

    // Dressed ground-to-first-excited transitions implied by the decomposition.
    double atom_transition(const SystemParams& p) const noexcept {
        return p.omega_a() + delta_omega_a;
    }
    double resonator_transition() const noexcept { return omega_r_bar - chi_r - chi_ar; }
};

// Builds a ShiftSet from mode frequencies and Kerr coefficients; δ_NM and δω_a
// follow from the bookkeeping identities.
inline ShiftSet shifts_from_modes(const SystemParams& p, double omega_a_bar, double omega_r_bar,
                                  double chi_a, double chi_r, double chi_ar, Route route) {
    ShiftSet s;
    s.omega_a_bar = omega_a_bar;
    s.omega_r_bar = omega_r_bar;
    s.delta_nm = p.omega_a() - omega_a_bar;
    s.chi_a = chi_a;
    s.chi_r = chi_r;
    s.chi_ar = chi_ar;
    s.delta_omega_a = p.lambda() - s.delta_nm - chi_a - chi_ar;
    s.route = route;
    return s;
}

// Share of the total atom shift that is due to vacuum fluctuations, χ_ar/|δω_a|.
inline double vacuum_fraction(const ShiftSet& s) {
    if (s.delta_omega_a == 0.0) {
        throw Resonance("vacuum_fraction: total shift delta_omega_a is zero");
    }
    return s.chi_ar / std::abs(s.delta_omega_a);
}

// Fraction for a two-level atom, where the whole shift is a vacuum effect.
inline constexpr double tls_vacuum_fraction = 1.0;

}  // namespace lambshift
