#include <doctest.h>

#include <random>

#include "linalg.hpp"

using namespace sfreecut;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

Rat q(long num, long den = 1) { return Rat(num, den); }

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("1/4") == q(1, 4));
    CHECK(parse_rat("-3/6") == q(-1, 2));
    CHECK(parse_rat("7") == q(7));
    CHECK(rat_to_string(q(-1, 2)) == "-1/2");
    CHECK(rat_to_string(q(8, 4)) == "2");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("a"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK(rat_floor(q(-1, 4)) == -1);
    CHECK(rat_ceil(q(-1, 4)) == 0);
    CHECK(rat_floor(q(5, 2)) == 2);
    CHECK(rat_ceil(q(5, 2)) == 3);
    CHECK(rat_floor(q(3)) == 3);
    CHECK(rat_ceil(q(3)) == 3);
}

TEST_CASE("primitive scaling") {
    CHECK(primitive(rv({q(4, 3), q(0)})) == rv({q(1), q(0)}));
    CHECK(primitive(rv({q(4, 3), q(2)})) == rv({q(2), q(3)}));
    CHECK(primitive(rv({q(2), q(-4)})) == rv({q(1), q(-2)}));
    CHECK(primitive(rv({q(0), q(0)})) == rv({q(0), q(0)}));
    CHECK(primitive(rv({q(-1, 2), q(-1, 3)})) == rv({q(-3), q(-2)}));
}

TEST_CASE("solve_linear identity case") {
    RatMat M = RatMat::from_rows({rv({q(1), q(0)}), rv({q(0), q(1)})});
    SolveResult r = solve_linear(M, rv({q(1, 4), q(1, 2)}));
    REQUIRE(r.consistent);
    CHECK(r.rank == 2);
    CHECK(*r.solution == rv({q(1, 4), q(1, 2)}));
}

TEST_CASE("solve_linear symmetric 2x2") {
    RatMat M = RatMat::from_rows({rv({q(1), q(1)}), rv({q(1), q(-1)})});
    SolveResult r = solve_linear(M, rv({q(1), q(0)}));
    REQUIRE(r.consistent);
    CHECK(*r.solution == rv({q(1, 2), q(1, 2)}));
}

TEST_CASE("solve_linear dependent rows are inconsistent") {
    RatMat M = RatMat::from_rows({rv({q(1), q(1)}), rv({q(2), q(2)})});
    SolveResult r = solve_linear(M, rv({q(1), q(3)}));
    CHECK(!r.consistent);
    CHECK(r.rank == 1);
    CHECK(!r.solution);
}

TEST_CASE("solve_linear dimension mismatch") {
    RatMat M = RatMat::from_rows({rv({q(1), q(1)})});
    CHECK_THROWS_AS(solve_linear(M, rv({q(1), q(2)})), DimensionMismatch);
}

TEST_CASE("solve_linear residual is exactly zero on random systems") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + trial % 4;
        size_t m = 1 + (trial / 4) % 5;
        RatMat M(m, n);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) M(i, j) = Rat(coef(rng), den(rng));
        RatVec x(n);
        for (size_t j = 0; j < n; ++j) x[j] = Rat(coef(rng), den(rng));
        RatVec v = M.apply(x);
        SolveResult r = solve_linear(M, v);
        REQUIRE(r.consistent); // constructed to be solvable
        CHECK(M.apply(*r.solution) == v);
    }
}

TEST_CASE("nullspace vectors satisfy M x = 0 and count matches rank") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int trial = 0; trial < 150; ++trial) {
        size_t n = 1 + trial % 5;
        size_t m = (trial / 5) % 4;
        RatMat M(m, n);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j) M(i, j) = coef(rng);
        std::vector<RatVec> ns = nullspace(M);
        CHECK(ns.size() == n - rank_of(M));
        RatVec zero(m, Rat(0));
        for (const RatVec& x : ns) CHECK(M.apply(x) == zero);
        // basis independence
        if (!ns.empty()) CHECK(rank_of(RatMat::from_rows(ns)) == ns.size());
    }
}

TEST_CASE("orthogonal complement") {
    std::vector<RatVec> comp = orthogonal_complement({rv({q(0), q(1), q(0)})}, 3);
    REQUIRE(comp.size() == 2);
    for (const RatVec& w : comp) CHECK(dot(w, rv({q(0), q(1), q(0)})) == 0);
    CHECK(orthogonal_complement({}, 2).size() == 2);
}
