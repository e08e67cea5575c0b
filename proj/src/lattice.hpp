#pragma once

#include <optional>

#include "polyhedron.hpp"

namespace sfreecut {

/// Componentwise bounds finitizing every enumeration; results are certified
/// only within the declared box.
struct SearchBox {
    RatVec lower;
    RatVec upper;

    SearchBox(RatVec lo, RatVec hi);
    size_t dim() const { return lower.size(); }
};

/// S = Q ∩ Z^n for a rational polyhedron Q.
struct SDescription {
    HPolyhedron Q;

    explicit SDescription(HPolyhedron q) : Q(std::move(q)) {}
    size_t dim() const { return Q.dim(); }
};

/// [-10,10]^n fallback box.
SearchBox default_search_box(size_t n);

/// Integer bounding box of the vertices of a generator form, expanded by
/// `pad` units per side; nullopt when there are no vertices.
std::optional<SearchBox> box_from_vertices(const GeneratorForm& g, size_t n, long pad = 2);

/// Exactly the points of P ∩ Z^n (∩ box when given), lex sorted.
/// Unbounded P without a box is an error; bounded P derives its own box.
std::vector<IntVec> enumerate_integer_points(const HPolyhedron& P, const std::optional<SearchBox>& box);

bool s_contains(const SDescription& S, const IntVec& x);

/// Generator form of {r : A_Q r <= 0}.
GeneratorForm recession_generators_of_s(const SDescription& S);

/// Rays plus ± lineality, as one list of primitive vectors (the generating
/// set the tilting procedure consumes).
std::vector<RatVec> recession_generator_list(const SDescription& S);

/// True once n+1 affinely independent S-points are found in the box.
bool s_full_dimensional_in_box(const SDescription& S, const SearchBox& box);

std::vector<IntVec> s_points_in_box(const SDescription& S, const SearchBox& box);

/// CCW vertex list of the convex hull of a 2-D point set (degenerate hulls
/// return their extreme points: 1 or 2 points).
std::vector<RatVec> hull_polygon_2d(const std::vector<RatVec>& points);

/// Minimal inequality description of the 2-D convex hull. Lower-dimensional
/// hulls are fenced by opposite inequality pairs (plus segment bounds).
HPolyhedron hull_2d(const std::vector<RatVec>& points);

} // namespace sfreecut
