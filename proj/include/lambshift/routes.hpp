// routes.hpp — one entry point for the four ways of computing a ShiftSet

#pragma once

#include "lambshift/analytic.hpp"
#include "lambshift/normalmodes.hpp"
#include "lambshift/params.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/spectrum.hpp"

namespace lambshift {

inline ShiftSet compute_shifts(const SystemParams& p, Route route, const FockConfig& cfg = {}) {
    switch (route) {
        case Route::numeric: return numeric_shifts(p, cfg);
        case Route::normal_mode: return normal_mode_shifts(p);
        case Route::rwa: return rwa_shifts(p);
        case Route::beyond_rwa: return beyond_rwa_shifts(p);
    }
    throw ConfigError("compute_shifts: unknown route");
}

inline double vacuum_fraction(const SystemParams& p, Route route, const FockConfig& cfg = {}) {
    return vacuum_fraction(compute_shifts(p, route, cfg));
}

}  // namespace lambshift
