#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"

using namespace toricva;
using namespace toricva::testing;

TEST_CASE("rationals are canonical") {
    CHECK(make_rat(4, -6) == q("-2/3"));
    CHECK(make_rat(4, -6).get_den() == 3);
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-8/4")) == "-2");
    CHECK(parse_rat(" +7 ") == 7);
    CHECK_THROWS_AS(make_rat(1, 0), Error);
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("1.5"), Error);
    CHECK_THROWS_AS(parse_rat("1/-2"), Error);
    CHECK(floor(q("-1/2")) == -1);
    CHECK(ceil(q("-1/2")) == 0);
    CHECK(floor(q("7/2")) == 3);
}

TEST_CASE("primitivize") {
    CHECK(primitivize(nv({2, 4, 6})) == nv({1, 2, 3}));
    CHECK(primitivize(nv({0, -3})) == nv({0, -1}));
    CHECK(primitivize(nv({7, 0, 0, 0})) == nv({1, 0, 0, 0}));
    CHECK_THROWS_WITH_AS(primitivize(nv({0, 0})), "no primitive direction", Error);
    CHECK(primitive_direction(rat_vec(Lattice::M, {"1/2", "-3/4"})) == mv({2, -3}));
}

TEST_CASE("primitivize is idempotent") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto v = rng.nonzero_vec(Lattice::N, 1 + i % 4, -30, 30);
        auto p = primitivize(v);
        CHECK(primitivize(p) == p);
        Integer g = 0;
        for (const auto& c : p.coords) g = gcd(g, c);
        CHECK(g == 1);
    }
}

TEST_CASE("pairing") {
    CHECK(pair(mv({1, 0}), nv({0, 1})) == 0);
    CHECK(pair(mv({2, -1}), nv({1, 2})) == 0);
    CHECK(pair(mv({1, 1, 1}), nv({1, 1, 2})) == 4);
    CHECK_THROWS_AS(pair(mv({1, 1}), nv({1, 1, 1})), Error);
    CHECK_THROWS_AS(pair(mv({1, 1}), mv({1, 1})), Error);
}

TEST_CASE("pairing is bilinear") {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        std::size_t r = 1 + i % 5;
        RatVector u = RatVector::zero(Lattice::M, r), w = u, v = RatVector::zero(Lattice::N, r);
        for (std::size_t k = 0; k < r; ++k) {
            u[k] = rng.rat(-5, 5, 7);
            w[k] = rng.rat(-5, 5, 7);
            v[k] = rng.rat(-5, 5, 7);
        }
        Rat c = rng.rat(-3, 3, 5);
        CHECK(pair(u + w, v) == pair(u, v) + pair(w, v));
        CHECK(pair(c * u, v) == c * pair(u, v));
    }
}

TEST_CASE("solve_exact outcomes") {
    std::vector<RatVector> id{nq({1, 0}), nq({0, 1})};
    std::vector<Rat> b{3, 5};
    auto r = solve_exact(id, b);
    REQUIRE(r.status == SolveStatus::Unique);
    CHECK(*r.solution == mq({3, 5}));

    std::vector<RatVector> dup{nq({1, 0}), nq({1, 0})};
    std::vector<Rat> b2{1, 2};
    CHECK(solve_exact(dup, b2).status == SolveStatus::Inconsistent);

    std::vector<RatVector> under{nq({1, 0, 0}), nq({0, 1, 0})};
    std::vector<Rat> b3{1, 1};
    auto u = solve_exact(under, b3);
    CHECK(u.status == SolveStatus::Underdetermined);
    CHECK(pair(*u.solution, under[0]) == 1);
}

TEST_CASE("solve_exact re-substitution on random systems") {
    Rng rng(99);
    int unique = 0;
    for (int i = 0; i < 200; ++i) {
        std::size_t cols = 1 + i % 5, rows = 1 + rng.uniform(0, 5);
        std::vector<RatVector> a;
        std::vector<Rat> b;
        for (std::size_t k = 0; k < rows; ++k) {
            a.push_back(to_rat(rng.vec(Lattice::N, cols, -4, 4)));
            b.push_back(rng.rat(-5, 5, 3));
        }
        auto r = solve_exact(a, b, cols, Lattice::N);
        if (r.status == SolveStatus::Inconsistent) continue;
        unique += r.status == SolveStatus::Unique;
        for (std::size_t k = 0; k < rows; ++k) CHECK(pair(*r.solution, a[k]) == b[k]);
    }
    CHECK(unique > 10);
}

TEST_CASE("determinant and kernel") {
    std::vector<LatticeVector> m{nv({1, 0, 0}), nv({0, 1, 0}), nv({1, 1, 2})};
    CHECK(determinant(m) == 2);
    std::vector<LatticeVector> sing{nv({1, 2}), nv({2, 4})};
    CHECK(determinant(sing) == 0);
    CHECK(matrix_rank(sing, 2) == 1);
    auto k = integer_kernel(sing, 2, Lattice::N);
    REQUIRE(k.size() == 1);
    CHECK(k[0].ambient == Lattice::M);
    CHECK(pair(k[0], sing[0]) == 0);
}
