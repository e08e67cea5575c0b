#pragma once

#include <optional>
#include <string>

#include "sfree.hpp"

namespace sfreecut {

struct PlotScene {
    SDescription S;
    std::vector<HPolyhedron> bodies;
    SearchBox box;
    std::optional<RatVec> f_marker;
};

/// Deterministic planar figure: conv of the S-points in the box shaded
/// light, bodies clipped to the box shaded dark with distinct outlines,
/// lattice points as dots (filled iff in S), f as a cross. Exact rational
/// coordinates, rounded to 6 decimals only at serialization, mapped onto a
/// fixed 800x800 viewport.
std::string plot_svg(const PlotScene& scene);

/// Fixed-point decimal form of a rational (round half away from zero).
std::string rat_to_decimal(const Rat& r, unsigned places);

} // namespace sfreecut
