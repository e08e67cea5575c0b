#include "conic.hpp"

#include <algorithm>

namespace sfreecut {

namespace {

// Visits all index subsets of {0..m-1} of size exactly k in lex order.
template <typename F>
void for_each_subset(size_t m, size_t k, F&& visit) {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > m) return;
    while (true) {
        visit(idx);
        // advance
        size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                i = k + 1;
                break;
            }
        }
        if (i != k + 1) break;
        if (k == 0) break;
    }
}

RatMat columns_of(const RatMat& A, const std::vector<size_t>& idx) {
    RatMat sub(A.rows(), idx.size());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) sub(i, j) = A(i, idx[j]);
    return sub;
}

} // namespace

std::vector<RatVec> basic_feasible_solutions(const RatMat& A, const RatVec& v) {
    if (v.size() != A.rows()) throw DimensionMismatch("basic_feasible_solutions: rhs length");
    const size_t m = A.cols();
    const size_t kmax = std::min(m, A.rows());
    std::vector<RatVec> found;
    if (is_zero_vec(v)) found.emplace_back(m, Rat(0));
    for (size_t k = 1; k <= kmax; ++k) {
        for_each_subset(m, k, [&](const std::vector<size_t>& idx) {
            RatMat sub = columns_of(A, idx);
            if (rank_of(sub) != k) return; // need linearly independent columns
            SolveResult sr = solve_linear(sub, v);
            if (!sr.consistent) return;
            const RatVec& sj = *sr.solution; // unique: full column rank
            for (const Rat& x : sj)
                if (x < 0) return;
            RatVec s(m, Rat(0));
            for (size_t j = 0; j < k; ++j) s[idx[j]] = sj[j];
            found.push_back(std::move(s));
        });
    }
    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

std::vector<RatVec> extreme_rays_standard_form(const RatMat& A) {
    const size_t m = A.cols();
    const size_t kmax = std::min(m, A.rows() + 1);
    std::vector<RatVec> rays;
    for (size_t k = 1; k <= kmax; ++k) {
        for_each_subset(m, k, [&](const std::vector<size_t>& idx) {
            RatMat sub = columns_of(A, idx);
            std::vector<RatVec> ns = nullspace(sub);
            if (ns.size() != 1) return;
            RatVec w = ns[0];
            // An extreme ray with support exactly idx needs all entries of
            // one sign and nonzero; zero entries mean a smaller support
            // already produced it.
            bool all_pos = true, all_neg = true;
            for (const Rat& x : w) {
                if (x <= 0) all_pos = false;
                if (x >= 0) all_neg = false;
            }
            if (!all_pos && !all_neg) return;
            if (all_neg) w = vec_scale(Rat(-1), w);
            RatVec s(m, Rat(0));
            for (size_t j = 0; j < k; ++j) s[idx[j]] = w[j];
            rays.push_back(primitive(s));
        });
    }
    std::sort(rays.begin(), rays.end(), lex_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

bool in_convex_hull(const std::vector<RatVec>& generators, const RatVec& x) {
    if (generators.empty()) return false;
    const size_t n = x.size();
    RatMat A(n + 1, generators.size());
    for (size_t j = 0; j < generators.size(); ++j) {
        if (generators[j].size() != n) throw DimensionMismatch("in_convex_hull: generator length");
        for (size_t i = 0; i < n; ++i) A(i, j) = generators[j][i];
        A(n, j) = 1; // convexity row
    }
    RatVec rhs(x);
    rhs.push_back(Rat(1));
    return !basic_feasible_solutions(A, rhs).empty();
}

bool in_generated_set(const std::vector<RatVec>& vertices, const std::vector<RatVec>& rays,
                      const std::vector<RatVec>& lineality, const RatVec& x) {
    const size_t n = x.size();
    const bool convex_row = !vertices.empty();
    const size_t rows = n + (convex_row ? 1 : 0);
    std::vector<RatVec> cols;
    auto push_col = [&](const RatVec& g, bool in_hull) {
        if (g.size() != n) throw DimensionMismatch("in_generated_set: generator length");
        RatVec c(g);
        if (convex_row) c.push_back(in_hull ? Rat(1) : Rat(0));
        cols.push_back(std::move(c));
    };
    for (const RatVec& v : vertices) push_col(v, true);
    for (const RatVec& r : rays) push_col(r, false);
    for (const RatVec& l : lineality) {
        push_col(l, false);
        push_col(vec_scale(Rat(-1), l), false);
    }
    RatVec rhs(x);
    if (convex_row) rhs.push_back(Rat(1));
    if (cols.empty()) return is_zero_vec(rhs);
    RatMat A(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < rows; ++i) A(i, j) = cols[j][i];
    return !basic_feasible_solutions(A, rhs).empty();
}

} // namespace sfreecut
