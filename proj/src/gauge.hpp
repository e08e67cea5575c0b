#pragma once

#include "sfree.hpp"

namespace sfreecut {

/// Polyhedral gauge r ↦ max_j d_j r anchored at f. Carries the same data as
/// SFreeBody; the two views are inverse to each other.
class GaugeFunction {
public:
    GaugeFunction(RatVec f, std::vector<RatVec> rows);

    const RatVec& f() const { return f_; }
    const std::vector<RatVec>& rows() const { return rows_; }
    size_t dim() const { return f_.size(); }

private:
    RatVec f_;
    std::vector<RatVec> rows_;
};

/// conv({0} ∪ generators); the polar K* of {r : a_i r <= 1}.
struct PolarBody {
    std::vector<RatVec> generators;
    bool includes_origin = true;
};

Rat gauge_eval(const GaugeFunction& psi, const RatVec& r);

SFreeBody body_of(const GaugeFunction& psi);
GaugeFunction gauge_of(const SFreeBody& B);

/// K* = conv{0, a_1, ..., a_t} for K = {r : a_i r <= 1} (0 interior by the
/// row form; zero rows are degenerate and rejected).
PolarBody polar(const std::vector<RatVec>& k_rows);

/// Inequality description of the polar of a PolarBody; for the polar of K
/// this is K** = K.
HPolyhedron polar_hrep(const PolarBody& P);

/// rho_K(r) = max_i a_i r; the minimal sublinear function with K as its
/// unit level set.
Rat rho(const std::vector<RatVec>& k_rows, const RatVec& r);

/// psi2 dominates psi1: psi2 <= psi1 pointwise, decided exactly as row-hull
/// containment. Anchors must agree.
bool dominates(const GaugeFunction& psi2, const GaugeFunction& psi1);

struct MinimalityResult {
    bool minimal = false;
    bool decided = false; // false when the box left the verdict open
    std::optional<GaugeFunction> witness; // dominating psi_B when not minimal
    MaximalityReport report;
};

/// Minimality of a valid gauge (Theorem 7 shape): psi is minimal iff its
/// body is a maximal S-free set; otherwise tilting produces a dominating
/// witness. Throws when B_psi is not S-free in the box (psi not valid).
MinimalityResult is_minimal(const GaugeFunction& psi, const SDescription& S, const SearchBox& box);

} // namespace sfreecut
