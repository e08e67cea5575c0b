#include "polyhedron.hpp"

#include <algorithm>

namespace sfreecut {

HPolyhedron::HPolyhedron(RatMat A, RatVec b) : A_(std::move(A)), b_(std::move(b)) {
    if (A_.rows() != b_.size()) throw DimensionMismatch("HPolyhedron: row count != rhs length");
}

HPolyhedron HPolyhedron::from_rows(const std::vector<RatVec>& rows, const RatVec& b) {
    return HPolyhedron(RatMat::from_rows(rows), b);
}

RatVec HPolyhedron::slacks(const RatVec& x) const {
    if (x.size() != dim()) throw DimensionMismatch("slacks: point has wrong dimension");
    RatVec s = A_.apply(x);
    for (size_t i = 0; i < s.size(); ++i) s[i] = b_[i] - s[i];
    return s;
}

HPolyhedron HPolyhedron::with_extra_rows(const std::vector<RatVec>& rows, const RatVec& rhs) const {
    if (rows.size() != rhs.size()) throw DimensionMismatch("with_extra_rows: row/rhs count");
    RatMat A2 = A_;
    RatVec b2 = b_;
    for (size_t i = 0; i < rows.size(); ++i) {
        A2.append_row(rows[i]);
        b2.push_back(rhs[i]);
    }
    return HPolyhedron(std::move(A2), std::move(b2));
}

HPolyhedron HPolyhedron::without_row(size_t i) const {
    if (i >= row_count()) throw DimensionMismatch("without_row: index out of range");
    RatMat A2(0, dim());
    RatVec b2;
    for (size_t k = 0; k < row_count(); ++k) {
        if (k == i) continue;
        A2.append_row(A_.row(k));
        b2.push_back(b_[k]);
    }
    return HPolyhedron(std::move(A2), std::move(b2));
}

namespace {

// Extreme rays of the pointed cone {y in R^k : B y <= 0}: every extreme ray
// is cut out by some (k-1)-subset of rows of rank k-1.
std::vector<RatVec> pointed_cone_extreme_rays(const RatMat& B) {
    const size_t k = B.cols();
    std::vector<RatVec> rays;
    if (k == 0) return rays;
    std::vector<size_t> idx;
    auto consider = [&](const std::vector<size_t>& subset) {
        RatMat sub(0, k);
        for (size_t i : subset) sub.append_row(B.row(i));
        std::vector<RatVec> ns = nullspace(sub);
        if (ns.size() != 1) return;
        for (const RatVec& cand : {ns[0], vec_scale(Rat(-1), ns[0])}) {
            bool inside = true;
            for (size_t i = 0; i < B.rows() && inside; ++i)
                if (dot(B.row(i), cand) > 0) inside = false;
            if (inside) {
                rays.push_back(primitive(cand));
                return;
            }
        }
    };
    // all subsets of rows of size k-1
    std::vector<size_t> subset(k - 1);
    auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
        if (depth == k - 1) {
            consider(subset);
            return;
        }
        for (size_t i = start; i + (k - 1 - depth) <= B.rows(); ++i) {
            subset[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    if (k - 1 <= B.rows()) rec(rec, 0, 0);
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

std::vector<RatVec> canonical_basis(std::vector<RatVec> basis) {
    for (RatVec& v : basis) {
        v = primitive(v);
        for (const Rat& x : v) {
            if (x != 0) {
                if (x < 0) v = vec_scale(Rat(-1), v);
                break;
            }
        }
    }
    std::sort(basis.begin(), basis.end(), lex_less);
    return basis;
}

} // namespace

GeneratorForm cone_generators(const RatMat& A) {
    const size_t n = A.cols();
    GeneratorForm g;
    std::vector<RatVec> lin = nullspace(A);
    std::vector<RatVec> W = orthogonal_complement(lin, n);
    std::vector<RatVec> quotient_rays;
    if (!W.empty()) {
        RatMat B(A.rows(), W.size());
        for (size_t i = 0; i < A.rows(); ++i)
            for (size_t j = 0; j < W.size(); ++j) B(i, j) = dot(A.row(i), W[j]);
        quotient_rays = pointed_cone_extreme_rays(B);
    }
    for (const RatVec& w : quotient_rays) {
        RatVec lifted(n, Rat(0));
        for (size_t j = 0; j < W.size(); ++j) lifted = vec_add(lifted, vec_scale(w[j], W[j]));
        g.rays.push_back(primitive(lifted));
    }
    std::sort(g.rays.begin(), g.rays.end(), lex_less);
    g.lineality = canonical_basis(std::move(lin));
    return g;
}

GeneratorForm double_description_anchored(const HPolyhedron& P) {
    const size_t n = P.dim();
    // Homogenize: {(x,t) : A x - b t <= 0, -t <= 0}.
    RatMat H(0, n + 1);
    for (size_t i = 0; i < P.row_count(); ++i) {
        RatVec r = P.row(i);
        r.push_back(-P.rhs(i));
        H.append_row(r);
    }
    {
        RatVec tr(n + 1, Rat(0));
        tr[n] = -1;
        H.append_row(tr);
    }
    GeneratorForm cone = cone_generators(H);

    GeneratorForm g;
    for (const RatVec& r : cone.rays) {
        Rat t = r[n];
        RatVec x(r.begin(), r.begin() + n);
        if (t == 0) {
            g.rays.push_back(primitive(x));
        } else {
            g.vertices.push_back(vec_scale(Rat(1) / t, x));
        }
    }
    for (const RatVec& l : cone.lineality) {
        // rows (0,...,0,-1) force the t component of any lineality vector to 0
        g.lineality.push_back(RatVec(l.begin(), l.begin() + n));
    }
    g.lineality = canonical_basis(std::move(g.lineality));
    std::sort(g.vertices.begin(), g.vertices.end(), lex_less);
    std::sort(g.rays.begin(), g.rays.end(), lex_less);
    g.is_empty = g.vertices.empty();
    if (g.is_empty) {
        g.rays.clear();
        g.lineality.clear();
    }
    return g;
}

GeneratorForm double_description(const HPolyhedron& P) {
    GeneratorForm g = double_description_anchored(P);
    // A non-pointed polyhedron has no extreme points; when its only quotient
    // anchor is the origin the set is a cone and the anchor is redundant.
    if (!g.lineality.empty() && g.vertices.size() == 1 && is_zero_vec(g.vertices[0]))
        g.vertices.clear();
    return g;
}

bool is_bounded(const HPolyhedron& P) {
    GeneratorForm rec = cone_generators(P.A());
    return rec.rays.empty() && rec.lineality.empty();
}

Membership membership(const HPolyhedron& P, const RatVec& x) {
    RatVec s = P.slacks(x);
    bool tight = false;
    for (const Rat& v : s) {
        if (v < 0) return Membership::Outside;
        if (v == 0) tight = true;
    }
    return tight ? Membership::Boundary : Membership::Interior;
}

int affine_dim(const GeneratorForm& g, size_t n) {
    if (g.is_empty) return -1;
    RatVec anchor = g.vertices.empty() ? RatVec(n, Rat(0)) : g.vertices[0];
    RatMat dirs(0, n);
    for (size_t i = 1; i < g.vertices.size(); ++i) dirs.append_row(vec_sub(g.vertices[i], anchor));
    for (const RatVec& r : g.rays) dirs.append_row(r);
    for (const RatVec& l : g.lineality) dirs.append_row(l);
    if (dirs.rows() == 0) return 0;
    return static_cast<int>(rank_of(dirs));
}

int polyhedron_dim(const HPolyhedron& P) {
    return affine_dim(double_description_anchored(P), P.dim());
}

GeneratorForm face_of_row(const HPolyhedron& P, size_t row) {
    if (row >= P.row_count()) throw DimensionMismatch("face_of_row: index out of range");
    RatVec neg = vec_scale(Rat(-1), P.row(row));
    HPolyhedron face = P.with_extra_rows({neg}, {Rat(-P.rhs(row))});
    return double_description_anchored(face);
}

bool is_facet_row(const HPolyhedron& P, size_t row) {
    GeneratorForm face = face_of_row(P, row);
    if (face.is_empty) return false;
    return affine_dim(face, P.dim()) == polyhedron_dim(P) - 1;
}

std::vector<size_t> implied_equal_rows(const HPolyhedron& P, size_t row) {
    GeneratorForm face = face_of_row(P, row);
    std::vector<size_t> implied;
    if (face.is_empty) return implied;
    RatVec anchor = face.vertices.empty() ? RatVec(P.dim(), Rat(0)) : face.vertices[0];
    for (size_t k = 0; k < P.row_count(); ++k) {
        RatVec a = P.row(k);
        if (dot(a, anchor) != P.rhs(k)) continue;
        bool implied_here = true;
        for (const RatVec& v : face.vertices)
            if (dot(a, v) != P.rhs(k)) { implied_here = false; break; }
        if (implied_here)
            for (const RatVec& r : face.rays)
                if (dot(a, r) != 0) { implied_here = false; break; }
        if (implied_here)
            for (const RatVec& l : face.lineality)
                if (dot(a, l) != 0) { implied_here = false; break; }
        if (implied_here) implied.push_back(k);
    }
    return implied;
}

bool facet_rel_interior_test(const HPolyhedron& P, size_t row, const RatVec& x) {
    if (!is_facet_row(P, row))
        throw InvalidInput("row " + std::to_string(row) + " is not facet-defining");
    RatVec s = P.slacks(x);
    if (s[row] != 0) return false;
    for (const Rat& v : s)
        if (v < 0) return false;
    std::vector<size_t> implied = implied_equal_rows(P, row);
    for (size_t k = 0; k < P.row_count(); ++k) {
        if (std::find(implied.begin(), implied.end(), k) != implied.end()) continue;
        if (s[k] == 0) return false; // must be strictly feasible off the facet
    }
    return true;
}

bool generator_form_contains(const GeneratorForm& g, const RatVec& x) {
    if (g.is_empty) return false;
    return in_generated_set(g.vertices, g.rays, g.lineality, x);
}

} // namespace sfreecut
