// sweep.hpp — parameter sweeps over detuning, anharmonicity or coupling

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "lambshift/errors.hpp"
#include "lambshift/params.hpp"
#include "lambshift/routes.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/validity.hpp"

namespace lambshift {

enum class SweptParameter { detuning, anharmonicity, coupling };
enum class Spacing { linear, log };

inline std::string_view to_string(SweptParameter s) noexcept {
    switch (s) {
        case SweptParameter::detuning: return "detuning";
        case SweptParameter::anharmonicity: return "anharmonicity";
        case SweptParameter::coupling: return "coupling";
    }
    return "unknown";
}

// Column name of the swept value, always in units of omega_a.
inline std::string_view column_name(SweptParameter s) noexcept {
    switch (s) {
        case SweptParameter::detuning: return "delta_over_wa";
        case SweptParameter::anharmonicity: return "lambda_over_wa";
        case SweptParameter::coupling: return "g_over_wa";
    }
    return "value";
}

inline std::optional<SweptParameter> swept_from_string(std::string_view s) noexcept {
    for (auto v : {SweptParameter::detuning, SweptParameter::anharmonicity,
                   SweptParameter::coupling}) {
        if (to_string(v) == s) return v;
    }
    return std::nullopt;
}

struct SweepRange {
    double start{0.0};
    double stop{1.0};
    std::size_t count{2};
    Spacing spacing{Spacing::linear};

    std::vector<double> values() const {
        if (count < 2) throw ConfigError("SweepRange: count must be >= 2");
        if (!std::isfinite(start) || !std::isfinite(stop)) {
            throw ConfigError("SweepRange: endpoints must be finite");
        }
        std::vector<double> v(count);
        const double last = static_cast<double>(count - 1);
        if (spacing == Spacing::linear) {
            for (std::size_t i = 0; i < count; ++i) {
                v[i] = start + (stop - start) * (static_cast<double>(i) / last);
            }
        } else {
            if (!(start > 0.0) || !(stop > 0.0)) {
                throw ConfigError("SweepRange: log spacing needs positive endpoints");
            }
            const double l0 = std::log(start);
            const double l1 = std::log(stop);
            for (std::size_t i = 0; i < count; ++i) {
                v[i] = std::exp(l0 + (l1 - l0) * (static_cast<double>(i) / last));
            }
        }
        v.front() = start;
        v.back() = stop;
        return v;
    }
};

struct SweepSpec {
    SweptParameter swept{SweptParameter::detuning};
    SweepRange range;
    SystemParams fixed{1.0, 1.25, 0.01, 0.02};
    FockConfig cfg;
    std::vector<Route> routes;
    unsigned threads{0};  // 0: hardware concurrency
};

struct RouteResult {
    Route route{Route::numeric};
    std::optional<ShiftSet> shifts;  // nullopt when the route failed here
    std::string error;
};

struct SweepRow {
    double value{0.0};
    std::optional<SystemParams> params;  // nullopt if the point itself is invalid
    std::vector<RouteResult> results;    // one per requested route, in request order
    ValidityReport flags;

    const RouteResult* result(Route r) const noexcept {
        for (const auto& x : results) {
            if (x.route == r) return &x;
        }
        return nullptr;
    }
    const ShiftSet* shifts(Route r) const noexcept {
        const RouteResult* x = result(r);
        return (x && x->shifts) ? &*x->shifts : nullptr;
    }
};

inline SystemParams point_params(const SweepSpec& spec, double value) {
    const SystemParams& f = spec.fixed;
    switch (spec.swept) {
        case SweptParameter::detuning:
            return SystemParams::from_detuning(f.omega_a(), value * f.omega_a(), f.lambda(), f.g());
        case SweptParameter::anharmonicity: return f.with_lambda(value * f.omega_a());
        case SweptParameter::coupling: return f.with_g(value * f.omega_a());
    }
    throw ConfigError("point_params: unknown swept parameter");
}

namespace detail {

inline void raise_flag_for(const NumericFailure& e, ValidityReport& flags) {
    if (dynamic_cast<const AmbiguousLabel*>(&e)) {
        flags.label_ambiguous = true;
    } else if (dynamic_cast<const Resonance*>(&e) || dynamic_cast<const Degeneracy*>(&e)) {
        flags.near_resonance = true;
    } else {
        flags.unstable = true;
    }
}

inline SweepRow compute_row(const SweepSpec& spec, double value) {
    SweepRow row;
    row.value = value;
    try {
        row.params = point_params(spec, value);
    } catch (const InvalidParams& e) {
        row.flags.unstable = true;
        for (Route r : spec.routes) row.results.push_back({r, std::nullopt, e.what()});
        return row;
    }
    row.flags = check_point(*row.params);
    for (Route r : spec.routes) {
        RouteResult res{r, std::nullopt, {}};
        try {
            res.shifts = compute_shifts(*row.params, r, spec.cfg);
        } catch (const NumericFailure& e) {
            res.error = e.what();
            raise_flag_for(e, row.flags);
        }
        row.results.push_back(std::move(res));
    }
    return row;
}

inline std::vector<Route> unique_routes(const std::vector<Route>& in) {
    std::vector<Route> out;
    for (Route r : in) {
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    return out;
}

}  // namespace detail

// One row per grid point, sorted by swept value. Points are independent and
// computed in parallel; the output does not depend on the thread count.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec_in) {
    SweepSpec spec = spec_in;
    spec.routes = detail::unique_routes(spec.routes);
    if (spec.routes.empty()) throw ConfigError("run_sweep: route set is empty");
    const std::vector<double> grid = spec.range.values();

    std::vector<SweepRow> rows(grid.size());
    unsigned n_threads = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
    n_threads = std::clamp<unsigned>(n_threads, 1U, static_cast<unsigned>(grid.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                rows[i] = detail::compute_row(spec, grid[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) { return a.value < b.value; });
    return rows;
}

}  // namespace lambshift
