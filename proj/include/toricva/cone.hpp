#pragma once

#include "toricva/lattice.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace toricva {

/// A pointed rational polyhedral cone, stored with both its extreme rays and
/// its facet inequalities.
///
/// Rays are primitive and sorted lexicographically. Facet normals live in the
/// dual lattice and are inner normals: <f, x> >= 0 on the cone. For a cone that
/// is not full-dimensional, each facet normal is taken inside the linear span of
/// the cone (under the coordinate identification of N and M), which makes it
/// unique up to the primitive scaling; `equations()` then lists a basis of the
/// orthogonal complement of the span.
class Cone {
  public:
    Cone() = default;

    Lattice ambient() const { return ambient_; }
    std::size_t rank() const { return rank_; }
    std::size_t dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == rank_; }

    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<LatticeVector>& facet_normals() const { return facets_; }
    const std::vector<LatticeVector>& equations() const { return equations_; }

    /// Indices (into rays()) of the rays on which `normal` vanishes.
    std::vector<std::size_t> rays_on(const LatticeVector& normal) const;
    /// Index of `ray` in rays(), or rays().size() when absent.
    std::size_t ray_index(const LatticeVector& ray) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_ == b.ambient_ && a.rank_ == b.rank_ && a.rays_ == b.rays_;
    }

  private:
    friend Cone cone_from_generators(std::span<const LatticeVector> gens, Lattice ambient,
                                     std::size_t rank);
    Lattice ambient_ = Lattice::N;
    std::size_t rank_ = 0;
    std::size_t dim_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> facets_;
    std::vector<LatticeVector> equations_;
};

struct ConeClass {
    bool simplicial = false;
    bool regular = false;
};

/// Cone spanned by `gens`. Redundant and repeated generators are dropped.
/// Throws "not pointed" if the cone contains a line, and on zero generators.
Cone cone_from_generators(std::span<const LatticeVector> gens, Lattice ambient, std::size_t rank);
Cone cone_from_generators(std::span<const LatticeVector> gens);

/// Dual cone in the opposite lattice; requires a full-dimensional cone.
Cone dual_cone(const Cone& c);

/// Membership; `strict` asks for the interior and needs a full-dimensional cone.
bool contains(const Cone& c, const RatVector& x, bool strict = false);
bool contains(const Cone& c, const LatticeVector& x, bool strict = false);

ConeClass classify(const Cone& c);

/// Extreme rays of {x : <f, x> >= 0 for all f in normals}, assumed pointed.
/// The rays live in the dual lattice of the normals.
std::vector<LatticeVector> rays_of_halfspaces(std::span<const LatticeVector> normals, std::size_t rank);

/// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace toricva
