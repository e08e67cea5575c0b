#pragma once

#include "gauge.hpp"

namespace sfreecut {

/// The corner-relaxation data (f, rays, S): x = f + sum_j r^j s_j with
/// x in S and s >= 0.
struct TableauInstance {
    RatVec f;
    std::vector<RatVec> rays;
    SDescription S;

    TableauInstance(RatVec f_, std::vector<RatVec> rays_, SDescription S_);
    size_t dim() const { return f.size(); }
};

struct CutResult {
    std::vector<Rat> coefficients; // psi_B(r^j)
    SFreeBody body;
    MaximalityReport maximality;
    std::vector<TiltStep> trace;
    bool box_limited = false;
};

/// Split on the lowest-index fractional coordinate of f, in canonical
/// a(x-f) <= 1 form. Always S-free since S ⊆ Z^n.
SFreeBody default_initial_body(const TableauInstance& inst);

/// Tilt the initial body (default: the split) to a maximal S-free set and
/// evaluate its gauge at every ray.
CutResult generate_cut(const TableauInstance& inst, const std::optional<SFreeBody>& initial,
                       const SearchBox& box);

} // namespace sfreecut
