// validity.hpp — regime checks for the dispersive and Kerr approximations

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "lambshift/params.hpp"

namespace lambshift {

// g/|Δ| at or above this marks the point as near resonance.
inline constexpr double dispersive_ratio_threshold = 0.1;
// λ/min(|Δ|, |3ω_a−ω_r|, |ω_a−3ω_r|) at or above this marks the straddling
// resonances. Kerr-expansion errors near ω_r ≈ 3ω_a grow like ~1.4·λ/window,
// so a 20x margin keeps them below 10%.
inline constexpr double straddling_ratio_threshold = 0.05;
// |Δ|/Σ at or above this leaves the rotating-wave regime.
inline constexpr double rwa_ratio_threshold = 0.5;

inline double straddling_window(const SystemParams& p) noexcept {
    const double wa = p.omega_a();
    const double wr = p.omega_r();
    return std::min({std::abs(p.detuning()), std::abs(3.0 * wa - wr), std::abs(wa - 3.0 * wr)});
}

inline double ratio_or_inf(double num, double den) noexcept {
    if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
}

inline bool is_near_resonance(const SystemParams& p) noexcept {
    return p.g() >= dispersive_ratio_threshold * std::abs(p.detuning());
}

inline bool is_straddling(const SystemParams& p) noexcept {
    return p.lambda() > 0.0 && p.lambda() >= straddling_ratio_threshold * straddling_window(p);
}

struct ValidityReport {
    bool near_resonance{false};
    bool straddling{false};
    bool unstable{false};
    bool label_ambiguous{false};

    double coupling_ratio{0.0};       // g/|Δ|
    double straddling_window{0.0};    // min(|Δ|, |3ω_a−ω_r|, |ω_a−3ω_r|)
    double anharmonicity_ratio{0.0};  // λ/window
    double stability_ratio{0.0};      // 4g²/((ω_a+λ)ω_r)

    bool any() const noexcept { return near_resonance || straddling || unstable || label_ambiguous; }

    ValidityReport& operator|=(const ValidityReport& o) noexcept {
        near_resonance = near_resonance || o.near_resonance;
        straddling = straddling || o.straddling;
        unstable = unstable || o.unstable;
        label_ambiguous = label_ambiguous || o.label_ambiguous;
        return *this;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        if (near_resonance) out.emplace_back("near_resonance");
        if (straddling) out.emplace_back("straddling");
        if (unstable) out.emplace_back("unstable");
        if (label_ambiguous) out.emplace_back("label_ambiguous");
        return out;
    }

    // "none" or the raised flags joined by '|'.
    std::string joined() const {
        const auto n = names();
        if (n.empty()) return "none";
        std::string s = n.front();
        for (std::size_t i = 1; i < n.size(); ++i) s += "|" + n[i];
        return s;
    }
};

// Flags computable from the parameters alone. label_ambiguous is only raised
// when a numeric route actually fails to label a point.
inline ValidityReport check_point(const SystemParams& p) noexcept {
    ValidityReport r;
    r.coupling_ratio = ratio_or_inf(p.g(), std::abs(p.detuning()));
    r.straddling_window = straddling_window(p);
    r.anharmonicity_ratio = ratio_or_inf(p.lambda(), r.straddling_window);
    r.stability_ratio = p.stability_ratio();
    r.near_resonance = is_near_resonance(p);
    r.straddling = is_straddling(p);
    r.unstable = !p.is_stable();
    return r;
}

}  // namespace lambshift
