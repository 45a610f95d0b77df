// figures.hpp — canonical data tables for the detuning, anharmonicity and
// beyond-RWA comparison plots

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambshift/analytic.hpp"
#include "lambshift/errors.hpp"
#include "lambshift/io.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/sweep.hpp"

namespace lambshift {

enum class Figure { fig2a, fig2b, fig2c, fig3 };

inline std::string_view to_string(Figure f) noexcept {
    switch (f) {
        case Figure::fig2a: return "fig2a";
        case Figure::fig2b: return "fig2b";
        case Figure::fig2c: return "fig2c";
        case Figure::fig3: return "fig3";
    }
    return "unknown";
}

inline std::optional<Figure> figure_from_string(std::string_view s) noexcept {
    for (auto f : {Figure::fig2a, Figure::fig2b, Figure::fig2c, Figure::fig3}) {
        if (to_string(f) == s) return f;
    }
    return std::nullopt;
}

// Defaults: λ/ω_a = 0.01,
// g/ω_a = 0.02 and, for the anharmonicity sweep, Δ = ω_a/4.
struct FigureOverrides {
    double omega_a{1.0};
    std::optional<double> lambda;    // units of omega_a
    std::optional<double> g;         // units of omega_a
    std::optional<double> detuning;  // fixed Δ/ω_a for fig2c
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<std::size_t> count;
    std::optional<FockConfig> cfg;
    unsigned threads{0};
};

inline constexpr double default_figure_lambda = 0.01;
inline constexpr double default_figure_g = 0.02;
inline constexpr double default_fig2c_detuning = 0.25;

inline SweepSpec figure_sweep_spec(Figure which, const FigureOverrides& o) {
    const double wa = o.omega_a;
    const double lam = o.lambda.value_or(default_figure_lambda) * wa;
    const double g = o.g.value_or(default_figure_g) * wa;

    SweepSpec spec;
    spec.cfg = o.cfg.value_or(FockConfig{});
    spec.threads = o.threads;
    switch (which) {
        case Figure::fig2a:
        case Figure::fig2b:
            spec.swept = SweptParameter::detuning;
            spec.range = {o.start.value_or(-0.5), o.stop.value_or(0.9), o.count.value_or(181),
                          Spacing::linear};
            spec.fixed = SystemParams(wa, wa, lam, g);
            spec.routes = which == Figure::fig2a
                              ? std::vector<Route>{Route::numeric, Route::beyond_rwa}
                              : std::vector<Route>{Route::numeric};
            break;
        case Figure::fig2c: {
            const double d = o.detuning.value_or(default_fig2c_detuning) * wa;
            spec.swept = SweptParameter::anharmonicity;
            spec.range = {o.start.value_or(1e-4), o.stop.value_or(0.1), o.count.value_or(25),
                          Spacing::log};
            spec.fixed = SystemParams::from_detuning(wa, d, lam, g);
            spec.routes = {Route::numeric, Route::beyond_rwa};
            break;
        }
        case Figure::fig3:
            spec.swept = SweptParameter::detuning;
            spec.range = {o.start.value_or(-0.9), o.stop.value_or(3.0), o.count.value_or(181),
                          Spacing::linear};
            spec.fixed = SystemParams(wa, wa, lam, g);
            spec.routes = {Route::numeric, Route::beyond_rwa, Route::rwa};
            break;
    }
    return spec;
}

namespace detail {

inline std::optional<double> opt(const ShiftSet* s, double ShiftSet::*field) {
    if (!s) return std::nullopt;
    return s->*field;
}

inline std::optional<double> fraction_or_null(const ShiftSet* s) {
    if (!s || s->delta_omega_a == 0.0) return std::nullopt;
    return vacuum_fraction(*s);
}

}  // namespace detail

inline Table figure_table(Figure which, const std::vector<SweepRow>& rows) {
    Table t;
    t.kind = std::string(to_string(which));
    switch (which) {
        case Figure::fig2a:
            t.columns = {"delta_over_wa",   "f_atom_numeric", "f_res_numeric",  "f_atom_bare",
                         "f_res_bare",      "f_atom_analytic", "f_res_analytic"};
            break;
        case Figure::fig2b:
            t.columns = {"delta_over_wa", "delta_omega_a_numeric", "delta_nm", "chi_ar",
                         "chi_a_change",  "closure_residual"};
            break;
        case Figure::fig2c:
            t.columns = {"lambda_over_wa", "fraction_numeric", "fraction_analytic",
                         "tls_reference"};
            break;
        case Figure::fig3:
            t.columns = {"delta_over_wa", "chi_ar_numeric", "chi_ar_eq8", "chi_ar_eq7",
                         "koch_formula"};
            break;
    }

    for (const auto& row : rows) {
        TableRow tr;
        tr.flags = row.flags;
        tr.values.emplace_back(row.value);
        const ShiftSet* num = row.shifts(Route::numeric);
        const ShiftSet* beyond = row.shifts(Route::beyond_rwa);
        const ShiftSet* rwa = row.shifts(Route::rwa);
        const std::optional<SystemParams>& p = row.params;

        switch (which) {
            case Figure::fig2a: {
                auto atom = [&](const ShiftSet* s) -> std::optional<double> {
                    if (!s) return std::nullopt;
                    return s->atom_transition(*p);
                };
                auto res = [](const ShiftSet* s) -> std::optional<double> {
                    if (!s) return std::nullopt;
                    return s->resonator_transition();
                };
                tr.values.push_back(atom(num));
                tr.values.push_back(res(num));
                tr.values.push_back(p ? std::optional<double>(p->omega_a()) : std::nullopt);
                tr.values.push_back(p ? std::optional<double>(p->omega_r()) : std::nullopt);
                tr.values.push_back(atom(beyond));
                tr.values.push_back(res(beyond));
                break;
            }
            case Figure::fig2b: {
                tr.values.push_back(detail::opt(num, &ShiftSet::delta_omega_a));
                tr.values.push_back(detail::opt(num, &ShiftSet::delta_nm));
                tr.values.push_back(detail::opt(num, &ShiftSet::chi_ar));
                if (num) {
                    tr.values.emplace_back(num->chi_a - p->lambda());
                    tr.values.emplace_back(num->delta_omega_a -
                                           (p->lambda() - num->delta_nm - num->chi_a - num->chi_ar));
                } else {
                    tr.values.emplace_back();
                    tr.values.emplace_back();
                }
                break;
            }
            case Figure::fig2c: {
                const auto fn = detail::fraction_or_null(num);
                const auto fa = detail::fraction_or_null(beyond);
                if ((num && !fn) || (beyond && !fa)) tr.flags.near_resonance = true;
                tr.values.push_back(fn);
                tr.values.push_back(fa);
                tr.values.emplace_back(tls_vacuum_fraction);
                break;
            }
            case Figure::fig3: {
                tr.values.push_back(detail::opt(num, &ShiftSet::chi_ar));
                tr.values.push_back(detail::opt(beyond, &ShiftSet::chi_ar));
                tr.values.push_back(detail::opt(rwa, &ShiftSet::chi_ar));
                std::optional<double> koch;
                if (p) {
                    try {
                        koch = koch_stark_shift(*p);
                    } catch (const Resonance&) {
                        tr.flags.near_resonance = true;
                    }
                }
                tr.values.push_back(koch);
                break;
            }
        }
        t.rows.push_back(std::move(tr));
    }
    return t;
}

inline Table figure_data(Figure which, const FigureOverrides& o = {}) {
    const SweepSpec spec = figure_sweep_spec(which, o);
    return figure_table(which, run_sweep(spec));
}

}  // namespace lambshift
