#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fans.hpp"
#include "oracles.hpp"
#include "toricva/semigroup.hpp"

#include <set>

using namespace toricva;
using namespace toricva::testing;

namespace {

Cone octant() { return cone_from_generators(std::vector{mv({1, 0, 0}), mv({0, 1, 0}), mv({0, 0, 1})}); }

// The dual cone spanned by u1 = (1,0,0), u2 = (0,1,0), u3 = (1,1,2).
Cone ew_cone() { return cone_from_generators(std::vector{mv({1, 0, 0}), mv({0, 1, 0}), mv({1, 1, 2})}); }

}  // namespace

TEST_CASE("lattice points of polytopes") {
    auto p2 = projective_space_fan(2);
    TDivisor d{{3, 0, 0}};
    auto tri = lattice_points(polytope(p2, d));
    CHECK(tri.size() == 10);
    for (const auto& p : tri.points) CHECK(p[0] + p[1] <= 3);
    CHECK(lattice_points(polytope(p2, TDivisor{{-1, 0, 0}})).points.empty());

    auto frac = lattice_points(polytope(p1xp1_fan(), TDivisor{{0, 0, Rat(5, 2), Rat(1, 3)}}));
    CHECK(frac.points == std::vector{mv({0, 0}), mv({1, 0}), mv({2, 0})});

    DivisorPolytope half;
    half.rank = 2;
    half.halfspaces = {{nv({1, 0}), 0}, {nv({0, 1}), 0}};
    half.vertices = {mq({0, 0})};
    CHECK_THROWS_WITH_AS(lattice_points(half), "polytope is unbounded", Error);
}

TEST_CASE("dilated simplices") {
    auto ew = lattice_points_dilated_simplex(ew_cone(), 1);
    CHECK(ew.points == std::vector{mv({0, 0, 0}), mv({0, 1, 0}), mv({1, 0, 0}), mv({1, 1, 2})});
    CHECK(lattice_points_dilated_simplex(octant(), 0).points == std::vector{mv({0, 0, 0})});
    CHECK(lattice_points_dilated_simplex(octant(), 2).size() == 10);
}

TEST_CASE("Hilbert bases") {
    CHECK(hilbert_basis(octant()).elements.points == std::vector{mv({0, 0, 1}), mv({0, 1, 0}), mv({1, 0, 0})});
    auto c2 = cone_from_generators(std::vector{mv({1, 0}), mv({1, 2})});
    CHECK(hilbert_basis(c2).elements.points == std::vector{mv({1, 0}), mv({1, 1}), mv({1, 2})});
    auto ew = hilbert_basis(ew_cone()).elements;
    CHECK(ew.points == std::vector{mv({0, 1, 0}), mv({1, 0, 0}), mv({1, 1, 1}), mv({1, 1, 2})});

    // Cone over the unit square.
    auto sq = cone_from_generators(std::vector{mv({0, 0, 1}), mv({1, 0, 1}), mv({0, 1, 1}), mv({1, 1, 1})});
    CHECK(hilbert_basis(sq).elements.size() == 4);
}

TEST_CASE("triangulations cover the cone") {
    Rng rng(12);
    for (int i = 0; i < 20; ++i) {
        auto c = random_cone(rng, Lattice::M, 3, 5 + i % 2);
        auto tri = triangulate(c);
        for (const auto& s : tri) CHECK(s.size() == 3);
        for (int k = 0; k < 20; ++k) {
            auto x = random_point(rng, c);
            int hits = 0;
            for (const auto& s : tri) {
                std::vector<LatticeVector> g;
                for (auto j : s) g.push_back(c.rays()[j]);
                if (contains(cone_from_generators(g), x)) ++hits;
            }
            CHECK(hits >= 1);
        }
    }
}

TEST_CASE("Hilbert basis agrees with brute force and is minimal") {
    Rng rng(77);
    for (int i = 0; i < 25; ++i) {
        std::size_t rank = 2 + i % 2;
        auto c = random_cone(rng, Lattice::M, rank, 3 + i % 3, 2);
        auto hb = hilbert_basis(c);
        CHECK(hb.elements.points == hilbert_basis_oracle(c));
        CHECK(generates(hb.elements, hb).generates);
        for (std::size_t k = 0; k < hb.elements.size(); ++k) {
            auto pts = hb.elements.points;
            auto removed = pts[k];
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(k));
            auto g = generates(make_point_set(pts), hb);
            CHECK_FALSE(g.generates);
            CHECK(g.missing == removed);
            // The removed element is not a sum of the others either.
            CHECK_FALSE(semigroup_member(make_point_set(pts), removed, 6));
        }
    }
}

TEST_CASE("generation test") {
    auto ew = lattice_points_dilated_simplex(ew_cone(), 1);
    auto g = generates(ew, ew_cone());
    CHECK_FALSE(g.generates);
    CHECK(g.missing == mv({1, 1, 1}));
    CHECK(generates(make_point_set({mv({0, 0, 0}), mv({1, 0, 0}), mv({0, 1, 0}), mv({0, 0, 1})}), octant()).generates);
    CHECK_THROWS_WITH_AS(generates(make_point_set({mv({-1, 0, 0})}), octant()), "point outside cone", Error);

    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        auto c = random_cone(rng, Lattice::M, 2 + i % 2, 4);
        auto pts = hilbert_basis(c).elements.points;
        for (int k = 0; k < 3; ++k) pts.push_back(to_lattice(random_point(rng, c, 3, 1)));
        CHECK(generates(make_point_set(pts), c).generates);
    }
}

TEST_CASE("semigroup membership") {
    auto s = make_point_set({mv({1, 0}), mv({1, 1}), mv({1, 2})});
    CHECK(semigroup_member(s, mv({3, 3}), 5));
    CHECK_FALSE(semigroup_member(s, mv({3, 3}), 2));
    CHECK(semigroup_member(make_point_set({}), mv({0, 0}), 0));
    auto ew = lattice_points_dilated_simplex(ew_cone(), 1);
    CHECK_FALSE(semigroup_member(ew, mv({1, 1, 1}), 20));
}

TEST_CASE("semigroup of the three-vertex simplex only has even third coordinates") {
    auto ew = lattice_points_dilated_simplex(ew_cone(), 1);
    auto c = ew_cone();
    int odd = 0, even = 0;
    for (long x = 0; x <= 6; ++x)
        for (long y = 0; y <= 6; ++y)
            for (long z = 0; z <= 6; ++z) {
                auto p = mv({x, y, z});
                if (!contains(c, p)) continue;
                bool member = semigroup_member(ew, p, 18);
                if (z % 2 == 1) {
                    CHECK_FALSE(member);
                    ++odd;
                } else {
                    CHECK(member);
                    ++even;
                }
            }
    CHECK(odd > 0);
    CHECK(even > 0);
}

TEST_CASE("generation agrees with bounded semigroup membership") {
    Rng rng(55);
    int yes = 0, no = 0;
    for (int i = 0; i < 16; ++i) {
        std::size_t rank = 2 + i % 2;
        auto c = random_cone(rng, Lattice::M, rank, 3, 2);
        auto hb = hilbert_basis(c).elements.points;
        // Drop a random element half the time, add a few extra cone points.
        std::vector<LatticeVector> pts = hb;
        if (i % 2 == 0) pts.erase(pts.begin() + rng.uniform(0, static_cast<long>(pts.size()) - 1));
        for (int k = 0; k < 2; ++k) pts.push_back(to_lattice(random_point(rng, c, 2, 1)));
        auto s = make_point_set(pts);
        bool gen = generates(s, c).generates;
        (gen ? yes : no)++;

        // Every sum of elements of s whose value under a positive functional stays
        // below the largest value on the box, found by closure.
        const long B = 8;
        LatticeVector phi = LatticeVector::zero(Lattice::N, rank);
        for (const auto& f : c.facet_normals()) phi += f;
        Integer cap = 0;
        for (const auto& v : phi.coords) cap += abs(v) * B;
        std::set<LatticeVector> reach{LatticeVector::zero(Lattice::M, rank)};
        std::vector<LatticeVector> todo(reach.begin(), reach.end());
        while (!todo.empty()) {
            auto x = todo.back();
            todo.pop_back();
            for (const auto& g : s.points) {
                auto y = x + g;
                if (pair(phi, y) <= cap && reach.insert(y).second) todo.push_back(y);
            }
        }
        bool all = true;
        int checked = 0;
        LatticeVector p = LatticeVector::zero(Lattice::M, rank);
        for (auto& v : p.coords) v = -B;
        while (true) {
            if (contains(c, p)) {
                bool member = reach.count(p) > 0;
                all = all && member;
                if (checked++ % 50 == 0) CHECK(semigroup_member(s, p, 64) == member);
            }
            std::size_t j = 0;
            while (j < rank && p[j] == B) {
                p[j] = -B;
                ++j;
            }
            if (j == rank) break;
            ++p[j];
        }
        CHECK(gen == all);
    }
    CHECK(yes > 0);
    CHECK(no > 0);
}
