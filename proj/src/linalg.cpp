#include "linalg.hpp"

#include <algorithm>

namespace sfreecut {

RatVec to_ratvec(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
}

IntVec to_intvec(const RatVec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const Rat& x : v) {
        if (!is_integer(x)) throw InvalidInput("expected integral vector entry, got " + rat_to_string(x));
        out.push_back(numerator(x));
    }
    return out;
}

static void check_same_size(const RatVec& a, const RatVec& b, const char* what) {
    if (a.size() != b.size())
        throw DimensionMismatch(std::string(what) + ": sizes " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

Rat dot(const RatVec& a, const RatVec& b) {
    check_same_size(a, b, "dot");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    check_same_size(a, b, "vec_add");
    RatVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    check_same_size(a, b, "vec_sub");
    RatVec out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

RatVec vec_scale(const Rat& s, const RatVec& a) {
    RatVec out(a);
    for (Rat& x : out) x *= s;
    return out;
}

bool is_zero_vec(const RatVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

bool lex_less(const RatVec& a, const RatVec& b) {
    check_same_size(a, b, "lex_less");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lex_less_int(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RatVec primitive(const RatVec& a) {
    if (is_zero_vec(a)) return a;
    Int den_lcm = 1;
    for (const Rat& x : a) den_lcm = lcm(den_lcm, denominator(x));
    Int num_gcd = 0;
    for (const Rat& x : a) num_gcd = gcd(num_gcd, Int(numerator(x) * (den_lcm / denominator(x))));
    Rat scale(den_lcm, num_gcd);
    return vec_scale(scale, a);
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    RatMat m;
    for (const RatVec& r : rows) m.append_row(r);
    return m;
}

Rat& RatMat::operator()(size_t i, size_t j) {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return data_[i * cols_ + j];
}

const Rat& RatMat::operator()(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return data_[i * cols_ + j];
}

RatVec RatMat::row(size_t i) const {
    if (i >= rows_) throw DimensionMismatch("row index out of range");
    return RatVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RatVec RatMat::col(size_t j) const {
    if (j >= cols_) throw DimensionMismatch("column index out of range");
    RatVec out(rows_);
    for (size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
    return out;
}

void RatMat::append_row(const RatVec& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionMismatch("appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

std::vector<RatVec> RatMat::row_list() const {
    std::vector<RatVec> out;
    out.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

RatVec RatMat::apply(const RatVec& x) const {
    if (x.size() != cols_) throw DimensionMismatch("apply: vector length != column count");
    RatVec out(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i] += data_[i * cols_ + j] * x[j];
    return out;
}

namespace {

struct Echelon {
    RatMat m;                                   // eliminated augmented matrix
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col) within the leading block
};

// Fraction-free forward elimination (Bareiss) on the first `lead` columns of
// an augmented matrix. Division by the previous pivot is exact for integral
// input by the Bareiss minor identity, and trivially exact over rationals.
Echelon eliminate(RatMat m, size_t lead) {
    Echelon e;
    Rat prev(1);
    size_t r = 0;
    for (size_t c = 0; c < lead && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            for (size_t j = c + 1; j < m.cols(); ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = 0;
        }
        prev = m(r, c);
        e.pivots.emplace_back(r, c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

} // namespace

SolveResult solve_linear(const RatMat& M, const RatVec& v) {
    if (v.size() != M.rows()) throw DimensionMismatch("solve_linear: rhs length != row count");
    const size_t n = M.cols();
    RatMat aug(M.rows(), n + 1);
    for (size_t i = 0; i < M.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = M(i, j);
        aug(i, n) = v[i];
    }
    Echelon e = eliminate(std::move(aug), n);
    SolveResult res;
    res.rank = e.pivots.size();
    for (size_t i = res.rank; i < e.m.rows(); ++i) {
        if (e.m(i, n) != 0) {
            res.consistent = false;
            return res;
        }
    }
    res.consistent = true;
    RatVec x(n, Rat(0));
    for (size_t k = e.pivots.size(); k-- > 0;) {
        auto [pr, pc] = e.pivots[k];
        Rat acc = e.m(pr, n);
        for (size_t j = pc + 1; j < n; ++j) acc -= e.m(pr, j) * x[j];
        x[pc] = acc / e.m(pr, pc);
    }
    res.solution = std::move(x);
    return res;
}

size_t rank_of(const RatMat& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    return eliminate(M, M.cols()).pivots.size();
}

std::vector<RatVec> nullspace(const RatMat& M) {
    const size_t n = M.cols();
    if (M.rows() == 0) {
        std::vector<RatVec> basis;
        for (size_t j = 0; j < n; ++j) {
            RatVec e(n, Rat(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Echelon e = eliminate(M, n);
    std::vector<bool> is_pivot_col(n, false);
    for (auto [pr, pc] : e.pivots) is_pivot_col[pc] = true;
    std::vector<RatVec> basis;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot_col[fc]) continue;
        RatVec x(n, Rat(0));
        x[fc] = 1;
        for (size_t k = e.pivots.size(); k-- > 0;) {
            auto [pr, pc] = e.pivots[k];
            Rat acc = 0;
            for (size_t j = pc + 1; j < n; ++j) acc -= e.m(pr, j) * x[j];
            x[pc] = acc / e.m(pr, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vectors, size_t n) {
    for (const RatVec& v : vectors)
        if (v.size() != n) throw DimensionMismatch("orthogonal_complement: bad vector length");
    if (vectors.empty()) {
        RatMat empty(0, n);
        return nullspace(empty);
    }
    return nullspace(RatMat::from_rows(vectors));
}

} // namespace sfreecut
