#include "lattice.hpp"

#include <algorithm>

namespace sfreecut {

SearchBox::SearchBox(RatVec lo, RatVec hi) : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size()) throw DimensionMismatch("SearchBox: bound lengths differ");
    for (size_t i = 0; i < lower.size(); ++i)
        if (lower[i] > upper[i]) throw InvalidInput("SearchBox: lower bound exceeds upper bound");
}

SearchBox default_search_box(size_t n) {
    return SearchBox(RatVec(n, Rat(-10)), RatVec(n, Rat(10)));
}

std::optional<SearchBox> box_from_vertices(const GeneratorForm& g, size_t n, long pad) {
    if (g.vertices.empty()) return std::nullopt;
    RatVec lo(n), hi(n);
    for (size_t j = 0; j < n; ++j) {
        lo[j] = g.vertices[0][j];
        hi[j] = g.vertices[0][j];
        for (const RatVec& v : g.vertices) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
        lo[j] = Rat(rat_floor(lo[j]) - pad);
        hi[j] = Rat(rat_ceil(hi[j]) + pad);
    }
    return SearchBox(std::move(lo), std::move(hi));
}

namespace {

// Axis-nested scan: per fixed prefix, rows with no support on later axes
// yield exact rational bounds on the next coordinate; a full membership
// check at the leaf keeps the output exact regardless of pruning quality.
void scan(const HPolyhedron& P, const SearchBox& box, size_t axis, IntVec& prefix,
          std::vector<IntVec>& out) {
    const size_t n = P.dim();
    if (axis == n) {
        RatVec x = to_ratvec(prefix);
        if (membership(P, x) != Membership::Outside) out.push_back(prefix);
        return;
    }
    Int lo = rat_ceil(box.lower[axis]);
    Int hi = rat_floor(box.upper[axis]);
    for (size_t r = 0; r < P.row_count(); ++r) {
        RatVec a = P.row(r);
        bool later_support = false;
        for (size_t j = axis + 1; j < n && !later_support; ++j)
            if (a[j] != 0) later_support = true;
        if (later_support) continue;
        Rat c = P.rhs(r);
        for (size_t j = 0; j < axis; ++j) c -= a[j] * Rat(prefix[j]);
        if (a[axis] > 0) {
            hi = std::min(hi, rat_floor(c / a[axis]));
        } else if (a[axis] < 0) {
            lo = std::max(lo, rat_ceil(c / a[axis]));
        } else if (c < 0) {
            return; // row fully determined by the prefix and violated
        }
    }
    prefix.push_back(0);
    for (Int v = lo; v <= hi; ++v) {
        prefix[axis] = v;
        scan(P, box, axis + 1, prefix, out);
    }
    prefix.pop_back();
}

} // namespace

std::vector<IntVec> enumerate_integer_points(const HPolyhedron& P, const std::optional<SearchBox>& box) {
    std::optional<SearchBox> use = box;
    if (!use) {
        GeneratorForm rec = cone_generators(P.A());
        if (!rec.rays.empty() || !rec.lineality.empty())
            throw UnboundedError("enumerate_integer_points: unbounded without box");
        GeneratorForm g = double_description_anchored(P);
        if (g.is_empty) return {};
        use = box_from_vertices(g, P.dim(), 0);
    }
    if (use->dim() != P.dim()) throw DimensionMismatch("enumerate_integer_points: box dimension");
    std::vector<IntVec> out;
    IntVec prefix;
    scan(P, *use, 0, prefix, out);
    return out; // lex sorted by construction
}

bool s_contains(const SDescription& S, const IntVec& x) {
    if (x.size() != S.dim()) throw DimensionMismatch("s_contains: point dimension");
    return membership(S.Q, to_ratvec(x)) != Membership::Outside;
}

GeneratorForm recession_generators_of_s(const SDescription& S) {
    return cone_generators(S.Q.A());
}

std::vector<RatVec> recession_generator_list(const SDescription& S) {
    GeneratorForm g = recession_generators_of_s(S);
    std::vector<RatVec> out = g.rays;
    for (const RatVec& l : g.lineality) {
        out.push_back(l);
        out.push_back(primitive(vec_scale(Rat(-1), l)));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<IntVec> s_points_in_box(const SDescription& S, const SearchBox& box) {
    return enumerate_integer_points(S.Q, box);
}

bool s_full_dimensional_in_box(const SDescription& S, const SearchBox& box) {
    std::vector<IntVec> pts = s_points_in_box(S, box);
    if (pts.empty()) return false;
    const size_t n = S.dim();
    RatMat dirs(0, n);
    RatVec anchor = to_ratvec(pts[0]);
    for (size_t i = 1; i < pts.size() && dirs.rows() < 32; ++i) {
        RatVec d = vec_sub(to_ratvec(pts[i]), anchor);
        RatMat trial = dirs;
        trial.append_row(d);
        if (rank_of(trial) > rank_of(dirs)) dirs = std::move(trial);
        if (dirs.rows() == n) return true;
    }
    return rank_of(dirs) == n;
}

namespace {

Rat cross2(const RatVec& o, const RatVec& a, const RatVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

} // namespace

std::vector<RatVec> hull_polygon_2d(const std::vector<RatVec>& points) {
    if (points.empty()) throw InvalidInput("hull_2d: need at least one point");
    for (const RatVec& p : points)
        if (p.size() != 2) throw DimensionMismatch("hull_2d: points must be 2-dimensional");
    std::vector<RatVec> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    // Andrew's monotone chain with exact orientation tests.
    std::vector<RatVec> hull;
    auto build = [&](auto begin, auto end) {
        size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 && cross2(hull[hull.size() - 2], hull.back(), *it) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back(); // endpoint repeats in the other chain
    };
    build(pts.begin(), pts.end());
    build(pts.rbegin(), pts.rend());
    if (hull.size() < 3) { // all collinear
        return {pts.front(), pts.back()};
    }
    return hull; // CCW, starts at lex-smallest point
}

HPolyhedron hull_2d(const std::vector<RatVec>& points) {
    std::vector<RatVec> hull = hull_polygon_2d(points);
    std::vector<RatVec> rows;
    RatVec rhs;
    auto add_row = [&](const RatVec& a, const Rat& b) {
        RatVec p = primitive(a);
        if (is_zero_vec(p)) return;
        // rescale rhs consistently with the primitive scaling
        Rat scale;
        for (size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0) { scale = p[j] / a[j]; break; }
        rows.push_back(p);
        rhs.push_back(b * scale);
    };
    if (hull.size() == 1) {
        const RatVec& p = hull[0];
        add_row({Rat(1), Rat(0)}, p[0]);
        add_row({Rat(-1), Rat(0)}, -p[0]);
        add_row({Rat(0), Rat(1)}, p[1]);
        add_row({Rat(0), Rat(-1)}, -p[1]);
    } else if (hull.size() == 2) {
        const RatVec& u = hull[0];
        const RatVec& v = hull[1];
        RatVec d = vec_sub(v, u);
        RatVec normal{-d[1], d[0]};
        add_row(normal, dot(normal, u));
        add_row(vec_scale(Rat(-1), normal), -dot(normal, u));
        add_row(d, dot(d, v));
        add_row(vec_scale(Rat(-1), d), -dot(d, u));
    } else {
        for (size_t i = 0; i < hull.size(); ++i) {
            const RatVec& p = hull[i];
            const RatVec& q = hull[(i + 1) % hull.size()];
            RatVec d = vec_sub(q, p);
            RatVec outward{d[1], -d[0]}; // right normal of a CCW edge
            add_row(outward, dot(outward, p));
        }
    }
    return HPolyhedron::from_rows(rows, rhs);
}

} // namespace sfreecut
