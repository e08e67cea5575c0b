#pragma once

#include <optional>
#include <string>

#include "lattice.hpp"

namespace sfreecut {

/// Full-dimensional convex body {x : a_i (x - f) <= 1} with f in its
/// interior. This canonical form is unique for a given set, so rows are
/// deduplicated exactly; an integral anchor is rejected.
class SFreeBody {
public:
    SFreeBody(RatVec f, std::vector<RatVec> rows);

    const RatVec& f() const { return f_; }
    const std::vector<RatVec>& rows() const { return rows_; }
    size_t dim() const { return f_.size(); }

    /// Same set as {x : a_i x <= 1 + a_i f}.
    HPolyhedron as_hpolyhedron() const;

    /// Value of max_i a_i (x - f); <1 / =1 / >1 classifies x against B.
    Rat gauge_value(const RatVec& x_minus_f) const;

private:
    RatVec f_;
    std::vector<RatVec> rows_;
};

/// Anchor-free half-space {x : a x <= beta} for the case (ii) maximality
/// check, which must not require an interior anchor point.
struct HalfSpace {
    RatVec a;
    Rat beta;
};

enum class MaximalityVerdict { MaximalCaseI, MaximalCaseII, NotMaximal, UndecidedBox };

std::string to_string(MaximalityVerdict v);

struct MaximalityReport {
    MaximalityVerdict verdict = MaximalityVerdict::UndecidedBox;
    std::vector<std::optional<IntVec>> facet_certificates; // per input row
    std::vector<size_t> non_facet_rows;                    // redundant rows, reported separately
    std::optional<IntVec> violating_point;                 // S-point interior to B
    SearchBox box_used;
    std::string note; // records the conv(S) proxy in use

    explicit MaximalityReport(SearchBox box) : box_used(std::move(box)) {}
};

struct SFreeness {
    bool s_free = false;
    std::optional<IntVec> witness; // lex-smallest S-point interior to B in box
};

SFreeness is_s_free(const SFreeBody& B, const SDescription& S, const SearchBox& box);
SFreeness is_s_free(const HalfSpace& H, const SDescription& S, const SearchBox& box);

/// Lex-smallest S-point in the relative interior of each facet-defining
/// row, within box; non-facet rows get no certificate and are listed apart.
struct FacetCertificates {
    std::vector<std::optional<IntVec>> per_row;
    std::vector<size_t> non_facet_rows;
};

FacetCertificates facet_certificates(const SFreeBody& B, const SDescription& S, const SearchBox& box);

MaximalityReport is_maximal_s_free(const SFreeBody& B, const SDescription& S, const SearchBox& box);
MaximalityReport is_maximal_s_free(const HalfSpace& H, const SDescription& S, const SearchBox& box);

/// B + <r> for r in rec(B) ∩ rec(Q): rows not orthogonal to r are dropped.
/// The result is certified S-free within box; certification failure throws
/// (it indicates a violated precondition or a too-small box).
SFreeBody lineality_extend(const SFreeBody& B, const RatVec& r, const SDescription& S,
                           const SearchBox& box);

/// {x : A x <= b + 1/2} for the row-wise primitive integral description of Q.
/// Contains conv(S) in its interior and no integer point outside S.
HPolyhedron shell(const SDescription& S);

struct TightenStep {
    size_t shell_row; // index into the shell system
    bool dropped;     // dropped vs pushed
    std::optional<IntVec> pushed_to;
};

struct TightenResult {
    HPolyhedron polyhedron; // B ∩ P_t
    std::vector<TightenStep> steps;
    SearchBox box_used;
};

/// Claim-1 companion construction: intersect B with the shell of S, then
/// drop or push shell facets until each one carries an integer point in its
/// relative interior (within box).
TightenResult tighten_lattice(const SFreeBody& B, const SDescription& S, const SearchBox& box);

struct TiltStep {
    size_t tilted_row;   // index of d1 in the current row list
    RatVec d1;
    size_t partner_row;  // index of d2
    RatVec d2;
    Rat lambda_star;
    bool dropped = false;          // no qualifying S-point: facet dropped
    std::optional<IntVec> xbar;    // chosen certificate point
    Rat lambda_bar;
    RatVec new_row;
};

struct TiltResult {
    SFreeBody body;
    std::vector<TiltStep> steps;
    MaximalityReport report;   // final maximality check on the same box
    bool box_limited_drop = false; // a facet was dropped without certificate
};

/// Lemma-6 facet tilting: repeatedly replaces a facet without an S-point in
/// its relative interior by a convex combination with another row, until
/// every facet is certified (within box).
TiltResult tilt_to_maximal(const SFreeBody& C, const SDescription& S, const SearchBox& box);

} // namespace sfreecut
