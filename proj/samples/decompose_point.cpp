// decompose_point.cpp — shift decomposition at one point, every route side by side

#include <cstdio>

#include "lambshift/lambshift.hpp"

int main() {
    using namespace lambshift;
    const SystemParams p(1.0, 1.25, 0.01, 0.02);
    std::printf("%s\n", p.describe().c_str());
    std::printf("%-12s %13s %13s %13s %13s %13s\n", "route", "delta_nm", "chi_a", "chi_ar",
                "delta_omega_a", "fraction");
    for (Route r : all_routes) {
        const ShiftSet s = compute_shifts(p, r);
        std::printf("%-12s %13.6e %13.6e %13.6e %13.6e %13.6f\n", std::string(to_string(r)).c_str(),
                    s.delta_nm, s.chi_a, s.chi_ar, s.delta_omega_a, vacuum_fraction(s));
    }
    const ValidityReport v = check_point(p);
    std::printf("flags: %s\n", v.joined().c_str());
}
