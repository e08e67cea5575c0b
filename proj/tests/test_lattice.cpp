#include <doctest.h>

#include <algorithm>

#include "lattice.hpp"

using namespace sfreecut;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }
Rat q(long num, long den = 1) { return Rat(num, den); }
IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

HPolyhedron triangle() {
    // conv{(0,0),(2,0),(0,2)}
    return HPolyhedron::from_rows({rv({q(-1), q(0)}), rv({q(0), q(-1)}), rv({q(1), q(1)})},
                                  rv({q(0), q(0), q(2)}));
}

SDescription halfplane_s() {
    return SDescription(HPolyhedron::from_rows({rv({q(-1), q(0)})}, rv({q(0)})));
}

} // namespace

TEST_CASE("integer points of the triangle match a brute-force scan") {
    // independent oracle: direct scan of the inequalities over 0..2 x 0..2
    std::vector<IntVec> expected;
    for (long x = 0; x <= 2; ++x)
        for (long y = 0; y <= 2; ++y)
            if (x + y <= 2) expected.push_back(iv({x, y}));
    std::sort(expected.begin(), expected.end(), lex_less_int);

    std::vector<IntVec> got = enumerate_integer_points(triangle(), std::nullopt);
    CHECK(got == expected);
    REQUIRE(got.size() == 6);
    CHECK(got[0] == iv({0, 0}));
    CHECK(got[5] == iv({2, 0}));
}

TEST_CASE("integer points of the unit box") {
    HPolyhedron box = HPolyhedron::from_rows(
        {rv({q(-1), q(0)}), rv({q(1), q(0)}), rv({q(0), q(-1)}), rv({q(0), q(1)})},
        rv({q(0), q(1), q(0), q(1)}));
    std::vector<IntVec> got = enumerate_integer_points(box, std::nullopt);
    REQUIRE(got.size() == 4);
    CHECK(got == std::vector<IntVec>{iv({0, 0}), iv({0, 1}), iv({1, 0}), iv({1, 1})});
}

TEST_CASE("integer points of an empty polyhedron") {
    HPolyhedron empty = HPolyhedron::from_rows({rv({q(1)}), rv({q(-1)})}, rv({q(-1), q(0)}));
    CHECK(enumerate_integer_points(empty, std::nullopt).empty());
}

TEST_CASE("unbounded enumeration requires a box") {
    CHECK_THROWS_AS(enumerate_integer_points(halfplane_s().Q, std::nullopt), UnboundedError);
    SearchBox box(rv({q(-2), q(-2)}), rv({q(2), q(2)}));
    std::vector<IntVec> got = enumerate_integer_points(halfplane_s().Q, box);
    CHECK(got.size() == 15); // x1 in 0..2, x2 in -2..2
    for (const IntVec& p : got) CHECK(p[0] >= 0);
}

TEST_CASE("every enumerated point is a member; missing box points are outside") {
    SearchBox box(rv({q(-3), q(-3)}), rv({q(3), q(3)}));
    HPolyhedron P = triangle();
    std::vector<IntVec> got = enumerate_integer_points(P, box);
    for (long x = -3; x <= 3; ++x) {
        for (long y = -3; y <= 3; ++y) {
            IntVec p = iv({x, y});
            bool listed = std::binary_search(got.begin(), got.end(), p, lex_less_int);
            CHECK(listed == (membership(P, to_ratvec(p)) != Membership::Outside));
        }
    }
}

TEST_CASE("s_contains follows Q membership") {
    SDescription S = halfplane_s();
    CHECK(s_contains(S, iv({0, 1})));
    CHECK(!s_contains(S, iv({-1, 0})));
    CHECK(s_contains(S, iv({5, -7})));
}

TEST_CASE("recession generators of S") {
    GeneratorForm g = recession_generators_of_s(halfplane_s());
    REQUIRE(g.rays.size() == 1);
    CHECK(g.rays[0] == rv({q(1), q(0)}));
    REQUIRE(g.lineality.size() == 1);
    CHECK(g.lineality[0] == rv({q(0), q(1)}));
    std::vector<RatVec> expanded = recession_generator_list(halfplane_s());
    REQUIRE(expanded.size() == 3);
    CHECK(expanded[0] == rv({q(0), q(-1)}));
    CHECK(expanded[1] == rv({q(0), q(1)}));
    CHECK(expanded[2] == rv({q(1), q(0)}));
    for (const RatVec& r : expanded)
        for (size_t i = 0; i < halfplane_s().Q.row_count(); ++i)
            CHECK(dot(halfplane_s().Q.row(i), r) <= 0);

    // bounded Q: zero cone
    SDescription bounded(triangle());
    GeneratorForm gb = recession_generators_of_s(bounded);
    CHECK(gb.rays.empty());
    CHECK(gb.lineality.empty());

    // Q = R^2
    SDescription whole(HPolyhedron(RatMat(0, 2), {}));
    GeneratorForm gw = recession_generators_of_s(whole);
    CHECK(gw.rays.empty());
    REQUIRE(gw.lineality.size() == 2);
    CHECK(gw.lineality[0] == rv({q(0), q(1)}));
    CHECK(gw.lineality[1] == rv({q(1), q(0)}));
}

TEST_CASE("S full-dimensionality within a box") {
    SearchBox box(rv({q(-2), q(-2)}), rv({q(2), q(2)}));
    CHECK(s_full_dimensional_in_box(halfplane_s(), box));
    // S on a line is never full-dimensional
    SDescription line(HPolyhedron::from_rows({rv({q(0), q(1)}), rv({q(0), q(-1)})}, rv({q(0), q(0)})));
    CHECK(!s_full_dimensional_in_box(line, box));
}

TEST_CASE("hull_2d of a simple triangle") {
    HPolyhedron H = hull_2d({rv({q(0), q(0)}), rv({q(1), q(0)}), rv({q(0), q(1)})});
    CHECK(H.row_count() == 3);
    for (const RatVec& p : {rv({q(0), q(0)}), rv({q(1), q(0)}), rv({q(0), q(1)}), rv({q(1, 4), q(1, 4)})})
        CHECK(membership(H, p) != Membership::Outside);
    CHECK(membership(H, rv({q(1), q(1)})) == Membership::Outside);
    CHECK(membership(H, rv({q(1, 4), q(1, 4)})) == Membership::Interior);
}

TEST_CASE("hull_2d of collinear points") {
    HPolyhedron H = hull_2d({rv({q(0), q(0)}), rv({q(1), q(1)}), rv({q(2), q(2)})});
    CHECK(H.row_count() == 4); // two opposite inequalities plus segment bounds
    CHECK(membership(H, rv({q(1), q(1)})) == Membership::Boundary);
    CHECK(membership(H, rv({q(3, 2), q(3, 2)})) == Membership::Boundary);
    CHECK(membership(H, rv({q(3), q(3)})) == Membership::Outside);
    CHECK(membership(H, rv({q(1), q(0)})) == Membership::Outside);
    CHECK(polyhedron_dim(H) == 1);
}

TEST_CASE("hull_2d of a single point") {
    HPolyhedron H = hull_2d({rv({q(1, 2), q(-3)})});
    CHECK(membership(H, rv({q(1, 2), q(-3)})) != Membership::Outside);
    CHECK(membership(H, rv({q(1, 2), q(-2)})) == Membership::Outside);
    CHECK(polyhedron_dim(H) == 0);
    CHECK_THROWS_AS(hull_2d({}), InvalidInput);
}

TEST_CASE("hull of the triangle's lattice points is the triangle again") {
    std::vector<IntVec> pts = enumerate_integer_points(triangle(), std::nullopt);
    std::vector<RatVec> rpts;
    for (const IntVec& p : pts) rpts.push_back(to_ratvec(p));
    HPolyhedron H = hull_2d(rpts);
    // same point set: mutual membership over a grid oracle
    for (long x = -2; x <= 4; ++x) {
        for (long y = -2; y <= 4; ++y) {
            RatVec p = rv({q(x), q(y)});
            CHECK((membership(H, p) != Membership::Outside) ==
                  (membership(triangle(), p) != Membership::Outside));
        }
    }
    CHECK(H.row_count() == 3);
}
