#include <doctest.h>

#include "verifier.hpp"

using namespace sfreecut;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }
Rat q(long num, long den = 1) { return Rat(num, den); }
IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

SDescription halfplane_s() {
    return SDescription(HPolyhedron::from_rows({rv({q(-1), q(0)})}, rv({q(0)})));
}

GaugeFunction psi_b() {
    return GaugeFunction(rv({q(1, 4), q(1, 2)}), {rv({q(4), q(4)}), rv({q(4), q(-4)})});
}

// Coarse grid oracle: scan s over multiples of 1/denom up to `cap` in each
// coordinate, keep the exact objective minimum among feasible combinations.
// denom and cap are frozen per instance so that every vertex lands on the
// grid; equality with the enumerated minimum is then a real crosscheck.
std::optional<Rat> grid_minimum(const GaugeFunction& psi, const TableauInstance& inst,
                                const SearchBox& box, long denom, long cap) {
    RatVec costs;
    for (const RatVec& r : inst.rays) costs.push_back(gauge_eval(psi, r));
    std::optional<Rat> best;
    for (const IntVec& x : s_points_in_box(inst.S, box)) {
        RatVec target = vec_sub(to_ratvec(x), inst.f);
        std::vector<long> ticks(inst.rays.size(), 0);
        while (true) {
            RatVec combo(inst.dim(), q(0));
            Rat obj = 0;
            for (size_t j = 0; j < inst.rays.size(); ++j) {
                Rat sj(ticks[j], denom);
                combo = vec_add(combo, vec_scale(sj, inst.rays[j]));
                obj += costs[j] * sj;
            }
            if (combo == target && (!best || obj < *best)) best = obj;
            size_t j = 0;
            while (j < ticks.size() && ticks[j] == cap * denom) {
                ticks[j] = 0;
                ++j;
            }
            if (j == ticks.size()) break;
            ++ticks[j];
        }
    }
    return best;
}

} // namespace

TEST_CASE("axis rays: minimum 5 at x=(1,1), s=(3/4,1/2)") {
    TableauInstance inst(rv({q(1, 4), q(1, 2)}), {rv({q(1), q(0)}), rv({q(0), q(1)})},
                         halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    ValidityReport rep = verify_validity(psi_b(), inst, box);
    CHECK(rep.valid_within_box());
    REQUIRE(rep.minimum_value);
    CHECK(*rep.minimum_value == q(5));
    REQUIRE(rep.attained_x);
    CHECK(*rep.attained_x == iv({1, 1}));
    CHECK(*rep.attained_s == rv({q(3, 4), q(1, 2)}));
    CHECK(!rep.unbounded_below);
    CHECK(rep.points_checked > 0);

    // frozen-grid sanity oracle: all vertices have denominator dividing 4
    std::optional<Rat> grid = grid_minimum(psi_b(), inst, box, 4, 4);
    REQUIRE(grid);
    CHECK(*grid == *rep.minimum_value);
}

TEST_CASE("Example-1 rays: the cut is tight at x=(0,1)") {
    TableauInstance inst(rv({q(1, 4), q(1, 2)}),
                         {rv({q(-1, 4), q(1, 2)}), rv({q(-1, 4), q(-1, 2)})}, halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    ValidityReport rep = verify_validity(psi_b(), inst, box);
    CHECK(rep.valid_within_box());
    REQUIRE(rep.minimum_value);
    CHECK(*rep.minimum_value == q(1));
    // x=(0,1) with s=(1,0) attains the minimum (it sits on bd(B)) ...
    CHECK(gauge_eval(psi_b(), inst.rays[0]) * q(1) + gauge_eval(psi_b(), inst.rays[1]) * q(0) ==
          q(1));
    CHECK(vec_add(inst.f, inst.rays[0]) == rv({q(0), q(1)}));
    // ... and so does x=(0,0) with s=(0,1), which is the lex-smallest witness
    REQUIRE(rep.attained_x);
    CHECK(*rep.attained_x == iv({0, 0}));
    CHECK(*rep.attained_s == rv({q(0), q(1)}));

    std::optional<Rat> grid = grid_minimum(psi_b(), inst, box, 4, 4);
    REQUIRE(grid);
    CHECK(*grid == q(1));
}

TEST_CASE("the zero gauge is invalid") {
    GaugeFunction zero(rv({q(1, 4), q(1, 2)}), {rv({q(0), q(0)})});
    TableauInstance inst(rv({q(1, 4), q(1, 2)}), {rv({q(1), q(0)}), rv({q(0), q(1)})},
                         halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    ValidityReport rep = verify_validity(zero, inst, box);
    CHECK(!rep.valid_within_box());
    REQUIRE(rep.minimum_value);
    CHECK(*rep.minimum_value == q(0));
}

TEST_CASE("recession cycles never drive a sublinear gauge below zero") {
    // rays r and -r admit the recession ray s = (1,1); sublinearity forces
    // sum_j psi(r^j) w_j >= psi(0) = 0, so the audit must not flag
    // unboundedness for any max-of-rows gauge
    GaugeFunction psi(rv({q(1, 4), q(0)}), {rv({q(1), q(0)})}); // psi((-1,0)) = -1
    TableauInstance inst(rv({q(1, 4), q(0)}), {rv({q(1), q(0)}), rv({q(-1), q(0)})},
                         halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    // the recession cone has a genuine extreme ray ...
    RatMat R(2, 2);
    R(0, 0) = q(1); R(0, 1) = q(-1);
    R(1, 0) = q(0); R(1, 1) = q(0);
    REQUIRE(extreme_rays_standard_form(R).size() == 1);
    // ... yet its objective is exactly zero, so the report stays bounded
    ValidityReport rep = verify_validity(psi, inst, box);
    CHECK(!rep.unbounded_below);
    CHECK(!rep.recession_witness);
    REQUIRE(rep.minimum_value); // vertices still produce the exact minimum
    CHECK(*rep.minimum_value == q(-1, 4)); // at x = (0,0): s = (0, 1/4)
    CHECK(!rep.valid_within_box());
}

TEST_CASE("unreachable points impose no constraint") {
    // single ray pointing away from all S-points
    GaugeFunction psi(rv({q(1, 4), q(1, 2)}), {rv({q(4), q(4)}), rv({q(4), q(-4)})});
    TableauInstance inst(rv({q(1, 4), q(1, 2)}), {rv({q(-1), q(0)})}, halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    ValidityReport rep = verify_validity(psi, inst, box);
    CHECK(rep.points_checked == 0);
    CHECK(rep.unreachable_points > 0);
    CHECK(!rep.minimum_value);
    CHECK(rep.valid_within_box()); // vacuously valid in the box
}

TEST_CASE("oracle against theory: maximal bodies never dip below 1") {
    // several ray sets against the Example-1 maximal body
    std::vector<std::vector<RatVec>> ray_sets = {
        {rv({q(1), q(0)}), rv({q(0), q(1)})},
        {rv({q(-1, 4), q(1, 2)}), rv({q(-1, 4), q(-1, 2)})},
        {rv({q(1), q(1)}), rv({q(1), q(-1)}), rv({q(0), q(1)})},
        {rv({q(1, 2), q(1, 3)}), rv({q(2), q(-1)})},
    };
    SearchBox box(rv({q(-4), q(-4)}), rv({q(4), q(4)}));
    for (const auto& rays : ray_sets) {
        TableauInstance inst(rv({q(1, 4), q(1, 2)}), rays, halfplane_s());
        ValidityReport rep = verify_validity(psi_b(), inst, box);
        CHECK(!rep.unbounded_below);
        if (rep.minimum_value) CHECK(*rep.minimum_value >= 1);
    }
}

TEST_CASE("domination monotonicity on the Example-1 pair") {
    GaugeFunction wide(rv({q(1, 4), q(1, 2)}), {rv({q(4), q(8)}), rv({q(4), q(-8)})});
    TableauInstance inst(rv({q(1, 4), q(1, 2)}),
                         {rv({q(-1, 4), q(1, 2)}), rv({q(-1, 4), q(-1, 2)})}, halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    ValidityReport lo = verify_validity(psi_b(), inst, box);
    ValidityReport hi = verify_validity(wide, inst, box);
    // psi_b <= psi everywhere, so its minimum cannot exceed psi's
    REQUIRE(lo.minimum_value);
    REQUIRE(hi.minimum_value);
    CHECK(*lo.minimum_value <= *hi.minimum_value);
    CHECK(lo.valid_within_box());
    CHECK(hi.valid_within_box());
}

TEST_CASE("instances without rays are rejected") {
    TableauInstance inst(rv({q(1, 4), q(1, 2)}), {}, halfplane_s());
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    GaugeFunction psi = psi_b();
    CHECK_THROWS_AS(verify_validity(psi, inst, box), InvalidInput);
}
