#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fans.hpp"
#include "toricva/intersection.hpp"

using namespace toricva;
using namespace toricva::testing;

namespace {
TDivisor div(std::initializer_list<const char*> c) {
    TDivisor d;
    for (auto s : c) d.coeffs.push_back(parse_rat(s));
    return d;
}

const Wall& wall_through(const std::vector<Wall>& ws, std::size_t ray) {
    for (const auto& w : ws)
        if (w.wall_rays == std::vector<std::size_t>{ray}) return w;
    throw Error("no such wall");
}
}  // namespace

TEST_CASE("intersection numbers on P2") {
    auto f = projective_space_fan(2);
    auto ld = require_local_data(f, div({"1", "0", "0"}));
    for (const auto& v : wall_values(f, ld)) CHECK(v == 1);
}

TEST_CASE("intersection numbers on P(1,1,2)") {
    auto f = weighted_112_fan();
    auto d = div({"1", "0", "0"});
    auto ld = require_local_data(f, d);
    auto ws = walls_of_cone(f, 1);  // sigma = cone{v2, v3}
    CHECK(wall_intersection(f, ld, wall_through(ws, 1)) == Rat(1, 2));
    CHECK(wall_intersection(f, ld, wall_through(ws, 2)) == 1);
    auto sum = require_local_data(f, d + canonical_divisor(f));
    // The curve of v2 (weight 1) gives -3/2; the curve of v3 (weight 2) gives -3.
    CHECK(wall_intersection(f, sum, wall_through(ws, 1)) == Rat(-3, 2));
    CHECK(wall_intersection(f, sum, wall_through(ws, 2)) == -3);
}

TEST_CASE("edge lengths") {
    auto p2 = projective_space_fan(2);
    for (const auto& e : edge_length_check(p2, div({"3", "0", "0"}))) {
        CHECK(e.value == 3);
        CHECK(e.length == 3);
    }
    auto p1 = p1xp1_fan();
    std::multiset<Rat> values;
    for (const auto& e : edge_length_check(p1, div({"2", "5", "0", "0"}))) {
        CHECK(e.value == e.length);
        values.insert(e.value);
        // Walls through e2 or -e2 are edges parallel to the first axis.
        Rat expected = (e.wall.wall_rays[0] % 2 == 1) ? 2 : 5;
        CHECK(e.value == expected);
    }
    CHECK(values == std::multiset<Rat>{2, 2, 5, 5});
    CHECK_THROWS_WITH_AS(edge_length_check(p2, div({"-1", "0", "0"})), "edge lengths undefined", Error);
    CHECK(lattice_length(mq({0, 0}), mq({0, 0})) == 0);
    CHECK(lattice_length(mq({1, 1}), rat_vec(Lattice::M, {"2", "5/2"})) == Rat(1, 2));
}

TEST_CASE("nefness") {
    auto p2 = projective_space_fan(2);
    CHECK(is_nef(p2, div({"1", "0", "0"})));
    CHECK_FALSE(is_nef(p2, div({"-1", "0", "0"})));
    auto w = weighted_112_fan();
    CHECK_FALSE(is_nef(w, div({"1", "0", "0"}) + canonical_divisor(w)));
}

TEST_CASE("cone minima") {
    auto w = weighted_112_fan();
    auto mw = cone_minima(w, div({"1", "0", "0"}), canonical_divisor(w), 1);
    CHECK(mw.t == Rat(1, 2));
    CHECK(mw.m == -3);
    auto p2 = projective_space_fan(2);
    for (std::size_t s = 0; s < 3; ++s) {
        auto a = cone_minima(p2, div({"3", "0", "0"}), canonical_divisor(p2), s);
        CHECK(a.t == 3);
        CHECK(a.m == 0);
        auto b = cone_minima(p2, div({"4", "0", "0"}), canonical_divisor(p2), s);
        CHECK(b.t == 4);
        CHECK(b.m == 1);
    }
}

TEST_CASE("wall identities on random polytope divisors") {
    Rng rng(4242);
    for (int i = 0; i < 20; ++i) {
        auto rp = random_polytope(rng, 2 + i % 2);
        const auto& f = rp.pf.fan;
        auto ld = require_local_data(f, rp.divisor);
        // A second Q-Cartier divisor: the polytope divisor shifted by a character and rescaled.
        TDivisor other = rp.divisor;
        auto shift = rng.vec(Lattice::M, f.rank(), -2, 2);
        for (std::size_t k = 0; k < other.size(); ++k) other.coeffs[k] = Rat(-1, 3) * (other[k] + pair(shift, f.rays()[k]));
        auto lo = require_local_data(f, other);
        auto lsum = require_local_data(f, rp.divisor + other);
        for (std::size_t s = 0; s < f.num_cones(); ++s) {
            for (const auto& w : walls_of_cone(f, s)) {
                Rat v = wall_intersection(f, ld, w);
                CHECK(ld[w.tau] == ld[w.sigma] + v * to_rat(w.u));
                CHECK(wall_intersection(f, lsum, w) == v + wall_intersection(f, lo, w));
                for (const auto& back : walls_of_cone(f, w.tau))
                    if (back.tau == s) CHECK(wall_intersection(f, ld, back) == v);
            }
        }
        for (const auto& e : edge_length_check(f, rp.divisor)) CHECK(e.value == e.length);
    }
}

TEST_CASE("nef test agrees with the polytope-side test") {
    Rng rng(17);
    int nef = 0, not_nef = 0;
    for (int i = 0; i < 60; ++i) {
        auto rp = random_polytope(rng, 2);
        const auto& f = rp.pf.fan;
        TDivisor d = rp.divisor;
        for (auto& c : d.coeffs) c += rng.rat(-2, 1, 2);
        bool a = is_nef(f, d);
        CHECK(a == local_data_in_polytope(f, d));
        (a ? nef : not_nef)++;
    }
    CHECK(nef > 0);
    CHECK(not_nef > 0);
}
