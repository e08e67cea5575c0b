#include "cutgen.hpp"

namespace sfreecut {

TableauInstance::TableauInstance(RatVec f_, std::vector<RatVec> rays_, SDescription S_)
    : f(std::move(f_)), rays(std::move(rays_)), S(std::move(S_)) {
    if (f.size() != S.dim()) throw DimensionMismatch("TableauInstance: f dimension != S dimension");
    if (is_integral(f)) throw InvalidInput("TableauInstance: f must not be integral");
    if (membership(S.Q, f) == Membership::Outside)
        throw InvalidInput("TableauInstance: f must lie in Q");
    for (const RatVec& r : rays)
        if (r.size() != f.size()) throw DimensionMismatch("TableauInstance: ray dimension != f dimension");
}

SFreeBody default_initial_body(const TableauInstance& inst) {
    size_t i = 0;
    while (i < inst.f.size() && is_integer(inst.f[i])) ++i;
    // ctor guarantees a fractional coordinate exists
    const Rat& fi = inst.f[i];
    Rat up = Rat(rat_ceil(fi)) - fi;   // distance to ceil, in (0,1)
    Rat down = fi - Rat(rat_floor(fi));
    RatVec upper(inst.f.size(), Rat(0)), lower(inst.f.size(), Rat(0));
    upper[i] = Rat(1) / up;
    lower[i] = Rat(-1) / down;
    return SFreeBody(inst.f, {upper, lower});
}

CutResult generate_cut(const TableauInstance& inst, const std::optional<SFreeBody>& initial,
                       const SearchBox& box) {
    if (inst.rays.empty()) throw InvalidInput("generate_cut: instance has no rays");
    SFreeBody start = initial ? *initial : default_initial_body(inst);
    {
        SFreeness sf = is_s_free(start, inst.S, box);
        if (!sf.s_free) throw InvalidInput("generate_cut: initial body is not S-free");
    }
    TiltResult tilt = tilt_to_maximal(start, inst.S, box);
    CutResult out{{}, tilt.body, tilt.report, tilt.steps, tilt.box_limited_drop};
    for (const RatVec& r : inst.rays) out.coefficients.push_back(tilt.body.gauge_value(r));
    return out;
}

} // namespace sfreecut
