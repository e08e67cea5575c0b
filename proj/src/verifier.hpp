#pragma once

#include "cutgen.hpp"

namespace sfreecut {

/// Brute-force audit of sum_j psi(r^j) s_j >= 1 over every basic solution
/// reachable inside the box.
struct ValidityReport {
    std::optional<Rat> minimum_value;
    std::optional<IntVec> attained_x;
    std::optional<RatVec> attained_s;
    bool unbounded_below = false;
    std::optional<RatVec> recession_witness; // s-ray with negative objective
    size_t points_checked = 0;               // reachable S-points in box
    size_t unreachable_points = 0;           // S-points with x-f outside cone(rays)
    SearchBox box_used;

    explicit ValidityReport(SearchBox box) : box_used(std::move(box)) {}

    bool valid_within_box() const {
        if (unbounded_below) return false;
        return !minimum_value || *minimum_value >= 1;
    }
};

/// For each S-point x in the box, enumerates all vertices of
/// {s >= 0 : sum_j r^j s_j = x - f} and all extreme rays of the recession
/// cone, and reports the exact minimum of the cut objective.
ValidityReport verify_validity(const GaugeFunction& psi, const TableauInstance& inst,
                               const SearchBox& box);

} // namespace sfreecut
