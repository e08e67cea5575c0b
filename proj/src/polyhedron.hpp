#pragma once

#include <vector>

#include "conic.hpp"
#include "linalg.hpp"

namespace sfreecut {

/// {x : A x <= b}. Rows are kept as given; no implicit normalization.
class HPolyhedron {
public:
    HPolyhedron(RatMat A, RatVec b);
    static HPolyhedron from_rows(const std::vector<RatVec>& rows, const RatVec& b);

    size_t dim() const { return A_.cols(); }
    size_t row_count() const { return A_.rows(); }
    const RatMat& A() const { return A_; }
    const RatVec& b() const { return b_; }
    RatVec row(size_t i) const { return A_.row(i); }
    Rat rhs(size_t i) const { return b_[i]; }

    /// b_i - a_i x for every row.
    RatVec slacks(const RatVec& x) const;

    HPolyhedron with_extra_rows(const std::vector<RatVec>& rows, const RatVec& rhs) const;
    HPolyhedron without_row(size_t i) const;

private:
    RatMat A_;
    RatVec b_;
};

enum class Membership { Interior, Boundary, Outside };

/// Minimal generator form of a polyhedron. `vertices` lists extreme points
/// when the polyhedron is pointed; for a non-pointed polyhedron it lists the
/// anchor points of the quotient modulo the lineality space, except that a
/// sole origin anchor is omitted (the set is then a cone). `is_empty` flags
/// the empty polyhedron explicitly.
struct GeneratorForm {
    std::vector<RatVec> vertices;
    std::vector<RatVec> rays;
    std::vector<RatVec> lineality;
    bool is_empty = false;

    bool trivial_cone() const { return vertices.empty() && rays.empty() && lineality.empty() && !is_empty; }
};

/// Minimal V-description of {x : A x <= 0}: extreme rays plus lineality
/// basis (vertices left empty).
GeneratorForm cone_generators(const RatMat& A);

GeneratorForm double_description(const HPolyhedron& P);

/// Variant that always lists an anchor point for a nonempty polyhedron
/// (internal consumers need conv(vertices) to be nonempty).
GeneratorForm double_description_anchored(const HPolyhedron& P);

bool is_bounded(const HPolyhedron& P);

Membership membership(const HPolyhedron& P, const RatVec& x);

/// Affine dimension of the set described by a generator form; -1 if empty.
int affine_dim(const GeneratorForm& g, size_t n);

int polyhedron_dim(const HPolyhedron& P);

/// Generator form of the face P ∩ {a_i x = b_i}.
GeneratorForm face_of_row(const HPolyhedron& P, size_t row);

bool is_facet_row(const HPolyhedron& P, size_t row);

/// Rows k with F ⊆ {a_k x = b_k} for the facet F of the given row.
std::vector<size_t> implied_equal_rows(const HPolyhedron& P, size_t row);

/// x lies in the relative interior of the facet defined by `row`.
/// Throws InvalidInput when the row is not facet-defining.
bool facet_rel_interior_test(const HPolyhedron& P, size_t row, const RatVec& x);

/// Exact membership of x in the set a generator form describes.
bool generator_form_contains(const GeneratorForm& g, const RatVec& x);

} // namespace sfreecut
