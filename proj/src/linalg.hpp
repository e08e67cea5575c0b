#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rat.hpp"

namespace sfreecut {

using RatVec = std::vector<Rat>;

RatVec to_ratvec(const IntVec& v);
bool is_integral(const RatVec& v);
IntVec to_intvec(const RatVec& v); // throws InvalidInput on non-integral entries

Rat dot(const RatVec& a, const RatVec& b);
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& a);
bool is_zero_vec(const RatVec& a);
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less_int(const IntVec& a, const IntVec& b);

/// Smallest positive rescaling with integer entries and content 1.
/// The zero vector is returned unchanged.
RatVec primitive(const RatVec& a);

/// Dense exact matrix; every accessor checks dimension agreement.
class RatMat {
public:
    RatMat() = default;
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RatMat from_rows(const std::vector<RatVec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t i, size_t j);
    const Rat& operator()(size_t i, size_t j) const;

    RatVec row(size_t i) const;
    RatVec col(size_t j) const;
    void append_row(const RatVec& r);
    std::vector<RatVec> row_list() const;

    RatVec apply(const RatVec& x) const; // A x

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

struct SolveResult {
    std::optional<RatVec> solution; // one exact solution, free variables at zero
    size_t rank = 0;
    bool consistent = false;
};

/// Exact solve of M x = v by fraction-free (Bareiss) elimination.
/// M may be rectangular and rank deficient; inconsistency is reported
/// instead of a solution.
SolveResult solve_linear(const RatMat& M, const RatVec& v);

size_t rank_of(const RatMat& M);

/// Basis of {x : M x = 0}, canonical (one vector per free column of the
/// reduced system, free coordinate set to 1). M with zero rows yields the
/// standard basis.
std::vector<RatVec> nullspace(const RatMat& M);

/// Basis of the orthogonal complement of span(vectors) in R^n.
std::vector<RatVec> orthogonal_complement(const std::vector<RatVec>& vectors, size_t n);

} // namespace sfreecut
