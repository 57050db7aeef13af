#pragma once

#include "toricva/divisor.hpp"

#include <optional>
#include <vector>

namespace toricva {

/// Deduplicated, lexicographically sorted lattice points in M.
struct LatticePointSet {
    std::vector<LatticeVector> points;

    bool contains(const LatticeVector& p) const;
    std::size_t size() const { return points.size(); }
    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;
};

LatticePointSet make_point_set(std::vector<LatticeVector> points);

/// Lattice points of a bounded polytope; throws "polytope is unbounded".
LatticePointSet lattice_points(const DivisorPolytope& p);
/// Lattice points of m * conv{0, u_1, ..., u_s} for the rays u_i of a full-dimensional cone.
LatticePointSet lattice_points_dilated_simplex(const Cone& c, const Rat& m);

/// Simplicial subcones (as index lists into c.rays()) of a pulling
/// triangulation that uses no new rays.
std::vector<std::vector<std::size_t>> triangulate(const Cone& c);

struct HilbertBasis {
    Cone cone;
    LatticePointSet elements;
};

/// Minimal generating set of c ∩ M for a pointed full-dimensional cone.
HilbertBasis hilbert_basis(const Cone& c);

struct Generation {
    bool generates = false;
    std::optional<LatticeVector> missing;  // smallest Hilbert basis element not in the set
};

/// Whether `s` generates c ∩ M; throws "point outside cone".
Generation generates(const LatticePointSet& s, const Cone& c);
Generation generates(const LatticePointSet& s, const HilbertBasis& hb);

/// Exhaustive search: target is a sum of at most `bound` elements of s.
bool semigroup_member(const LatticePointSet& s, const LatticeVector& target, int bound);

}  // namespace toricva
