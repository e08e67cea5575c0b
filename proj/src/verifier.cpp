#include "verifier.hpp"

namespace sfreecut {

ValidityReport verify_validity(const GaugeFunction& psi, const TableauInstance& inst,
                               const SearchBox& box) {
    if (psi.dim() != inst.dim()) throw DimensionMismatch("verify_validity: dimensions differ");
    if (inst.rays.empty()) throw InvalidInput("verify_validity: instance has no rays");
    const size_t n = inst.dim();
    const size_t m = inst.rays.size();

    RatMat R(n, m);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) R(i, j) = inst.rays[j][i];

    RatVec costs;
    costs.reserve(m);
    for (const RatVec& r : inst.rays) costs.push_back(gauge_eval(psi, r));
    auto objective = [&](const RatVec& s) {
        Rat v = 0;
        for (size_t j = 0; j < m; ++j) v += costs[j] * s[j];
        return v;
    };

    ValidityReport rep(box);

    for (const IntVec& x : s_points_in_box(inst.S, box)) {
        RatVec target = vec_sub(to_ratvec(x), inst.f);
        std::vector<RatVec> vertices = basic_feasible_solutions(R, target);
        if (vertices.empty()) {
            ++rep.unreachable_points;
            continue;
        }
        ++rep.points_checked;
        for (const RatVec& s : vertices) {
            Rat v = objective(s);
            if (!rep.minimum_value || v < *rep.minimum_value ||
                (v == *rep.minimum_value && lex_less_int(x, *rep.attained_x))) {
                rep.minimum_value = v;
                rep.attained_x = x;
                rep.attained_s = s;
            }
        }
    }

    if (rep.points_checked > 0) {
        for (const RatVec& ray : extreme_rays_standard_form(R)) {
            if (objective(ray) < 0) {
                rep.unbounded_below = true;
                rep.recession_witness = ray;
                rep.minimum_value.reset();
                rep.attained_x.reset();
                rep.attained_s.reset();
                break;
            }
        }
    }
    return rep;
}

} // namespace sfreecut
