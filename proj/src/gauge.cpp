#include "gauge.hpp"

#include <algorithm>

namespace sfreecut {

GaugeFunction::GaugeFunction(RatVec f, std::vector<RatVec> rows) : f_(std::move(f)) {
    if (rows.empty()) throw InvalidInput("GaugeFunction: at least one row required");
    for (const RatVec& d : rows) {
        if (d.size() != f_.size()) throw DimensionMismatch("GaugeFunction: row dimension != anchor dimension");
        bool seen = false;
        for (const RatVec& prev : rows_)
            if (prev == d) { seen = true; break; }
        if (!seen) rows_.push_back(d);
    }
}

Rat gauge_eval(const GaugeFunction& psi, const RatVec& r) {
    if (r.size() != psi.dim()) throw DimensionMismatch("gauge_eval: argument dimension");
    Rat best = dot(psi.rows()[0], r);
    for (size_t i = 1; i < psi.rows().size(); ++i) best = std::max(best, dot(psi.rows()[i], r));
    return best;
}

SFreeBody body_of(const GaugeFunction& psi) { return SFreeBody(psi.f(), psi.rows()); }

GaugeFunction gauge_of(const SFreeBody& B) { return GaugeFunction(B.f(), B.rows()); }

PolarBody polar(const std::vector<RatVec>& k_rows) {
    if (k_rows.empty()) throw InvalidInput("polar: empty row list");
    PolarBody P;
    for (const RatVec& a : k_rows) {
        if (a.size() != k_rows[0].size()) throw DimensionMismatch("polar: mixed row dimensions");
        if (is_zero_vec(a)) throw InvalidInput("polar: zero row is degenerate");
        P.generators.push_back(a);
    }
    return P;
}

HPolyhedron polar_hrep(const PolarBody& P) {
    if (P.generators.empty()) throw InvalidInput("polar_hrep: no generators");
    RatVec rhs(P.generators.size(), Rat(1));
    return HPolyhedron::from_rows(P.generators, rhs);
}

Rat rho(const std::vector<RatVec>& k_rows, const RatVec& r) {
    PolarBody P = polar(k_rows); // validates the origin-interior row form
    Rat best = dot(P.generators[0], r);
    for (size_t i = 1; i < P.generators.size(); ++i) best = std::max(best, dot(P.generators[i], r));
    return best;
}

bool dominates(const GaugeFunction& psi2, const GaugeFunction& psi1) {
    if (psi2.f() != psi1.f()) throw InvalidInput("dominates: anchor mismatch");
    for (const RatVec& d : psi2.rows())
        if (!in_convex_hull(psi1.rows(), d)) return false;
    return true;
}

MinimalityResult is_minimal(const GaugeFunction& psi, const SDescription& S, const SearchBox& box) {
    SFreeBody B = body_of(psi);
    SFreeness sf = is_s_free(B, S, box);
    if (!sf.s_free)
        throw InvalidInput("is_minimal: B_psi contains an S-point in its interior; psi is not valid");
    if (membership(S.Q, psi.f()) == Membership::Outside)
        throw InvalidInput("is_minimal: f lies outside Q");

    MinimalityResult res{false, false, std::nullopt, is_maximal_s_free(B, S, box)};
    switch (res.report.verdict) {
        case MaximalityVerdict::MaximalCaseI:
        case MaximalityVerdict::MaximalCaseII:
            res.minimal = true;
            res.decided = true;
            break;
        case MaximalityVerdict::NotMaximal: {
            res.minimal = false;
            res.decided = true;
            TiltResult tilt = tilt_to_maximal(B, S, box);
            res.witness = gauge_of(tilt.body);
            break;
        }
        case MaximalityVerdict::UndecidedBox:
            res.decided = false;
            break;
    }
    return res;
}

} // namespace sfreecut
