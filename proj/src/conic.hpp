#pragma once

#include "linalg.hpp"

namespace sfreecut {

/// All vertices (basic feasible solutions) of {s >= 0 : A s = v}, where the
/// columns of A are the generators. The feasible set is pointed, so it is
/// nonempty iff at least one vertex exists. Exact, exhaustive over column
/// subsets of size <= rank bound; duplicates removed; lex sorted.
std::vector<RatVec> basic_feasible_solutions(const RatMat& A, const RatVec& v);

/// Extreme rays of the pointed cone {s >= 0 : A s = 0}, normalized to
/// primitive integer vectors, lex sorted.
std::vector<RatVec> extreme_rays_standard_form(const RatMat& A);

/// Exact test x in conv(generators).
bool in_convex_hull(const std::vector<RatVec>& generators, const RatVec& x);

/// Exact test x in conv(vertices) + cone(rays) + span(lineality).
/// With empty `vertices` the convex term is treated as {0} (cone case).
bool in_generated_set(const std::vector<RatVec>& vertices, const std::vector<RatVec>& rays,
                      const std::vector<RatVec>& lineality, const RatVec& x);

} // namespace sfreecut
