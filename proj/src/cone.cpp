#include "toricva/cone.hpp"

#include <set>

namespace toricva {

namespace {

// Greedy choice of a basis of span(vs) among the vectors themselves.
std::vector<LatticeVector> span_basis(const std::vector<LatticeVector>& vs, std::size_t rank) {
    std::vector<LatticeVector> basis;
    for (const auto& v : vs) {
        basis.push_back(v);
        if (matrix_rank(basis, rank) < basis.size()) basis.pop_back();
    }
    return basis;
}

// Primitive normal inside span(basis) that vanishes on `on`, or nullopt if not unique.
std::optional<LatticeVector> normal_in_span(const std::vector<LatticeVector>& basis,
                                            const std::vector<const LatticeVector*>& on,
                                            Lattice normal_ambient) {
    const std::size_t d = basis.size();
    std::vector<RatVector> m;
    m.reserve(on.size());
    for (const auto* s : on) {
        RatVector row = RatVector::zero(Lattice::N, d);
        for (std::size_t k = 0; k < d; ++k) {
            Integer acc = 0;
            for (std::size_t i = 0; i < s->rank(); ++i) acc += basis[k][i] * (*s)[i];
            row[k] = acc;
        }
        m.push_back(std::move(row));
    }
    auto ker = kernel(m, d, Lattice::N);
    if (ker.size() != 1) return std::nullopt;
    RatVector f = RatVector::zero(normal_ambient, basis.front().rank());
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < f.rank(); ++i) f[i] += ker[0][k] * basis[k][i];
    return primitive_direction(f);
}

int sign_of(const Integer& z) { return sgn(z); }

}  // namespace

std::vector<std::size_t> Cone::rays_on(const LatticeVector& normal) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (pair(normal, rays_[i]) == 0) out.push_back(i);
    return out;
}

std::size_t Cone::ray_index(const LatticeVector& ray) const {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), ray);
    if (it != rays_.end() && *it == ray) return static_cast<std::size_t>(it - rays_.begin());
    return rays_.size();
}

Cone cone_from_generators(std::span<const LatticeVector> gens, Lattice ambient, std::size_t rank) {
    if (gens.empty()) throw Error("cone needs at least one generator");
    if (rank == 0) throw Error("cone rank must be positive");
    std::set<LatticeVector> uniq;
    for (const auto& g : gens) {
        if (g.rank() != rank || g.ambient != ambient) throw Error("generator shape mismatch");
        if (g.is_zero()) throw Error("zero generator");
        uniq.insert(primitivize(g));
    }
    std::vector<LatticeVector> prim(uniq.begin(), uniq.end());

    Cone c;
    c.ambient_ = ambient;
    c.rank_ = rank;
    const auto basis = span_basis(prim, rank);
    const std::size_t d = basis.size();
    c.dim_ = d;
    c.equations_ = integer_kernel(prim, rank, ambient);
    std::sort(c.equations_.begin(), c.equations_.end());

    const Lattice normal_ambient = dual(ambient);
    std::set<LatticeVector> facets;
    for_each_subset(prim.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<const LatticeVector*> on;
        for (auto i : idx) on.push_back(&prim[i]);
        auto f = normal_in_span(basis, on, normal_ambient);
        if (!f) return;
        bool pos = false, neg = false;
        for (const auto& g : prim) {
            int s = sign_of(pair(*f, g));
            pos |= s > 0;
            neg |= s < 0;
        }
        if (pos && neg) return;
        facets.insert(neg ? -*f : *f);
    });
    c.facets_.assign(facets.begin(), facets.end());
    if (matrix_rank(c.facets_, rank) != d) throw Error("not pointed");

    for (const auto& g : prim) {
        std::vector<LatticeVector> tight;
        for (const auto& f : c.facets_)
            if (pair(f, g) == 0) tight.push_back(f);
        if (matrix_rank(tight, rank) + 1 == d) c.rays_.push_back(g);
    }
    return c;
}

Cone cone_from_generators(std::span<const LatticeVector> gens) {
    if (gens.empty()) throw Error("cone needs at least one generator");
    return cone_from_generators(gens, gens.front().ambient, gens.front().rank());
}

Cone dual_cone(const Cone& c) {
    if (!c.full_dimensional()) throw Error("dual cone requires a full-dimensional cone");
    return cone_from_generators(c.facet_normals(), dual(c.ambient()), c.rank());
}

bool contains(const Cone& c, const RatVector& x, bool strict) {
    if (x.rank() != c.rank() || x.ambient != c.ambient()) throw Error("membership shape mismatch");
    if (strict && !c.full_dimensional()) throw Error("strict membership needs a full-dimensional cone");
    for (const auto& e : c.equations())
        if (pair(e, x) != 0) return false;
    for (const auto& f : c.facet_normals()) {
        Rat v = pair(f, x);
        if (v < 0 || (strict && v == 0)) return false;
    }
    return true;
}

bool contains(const Cone& c, const LatticeVector& x, bool strict) { return contains(c, to_rat(x), strict); }

ConeClass classify(const Cone& c) {
    ConeClass k;
    k.simplicial = c.rays().size() == c.dim();
    if (!k.simplicial) return k;
    // Regular: the rays extend to a lattice basis, i.e. the gcd of the maximal minors is 1.
    Integer g = 0;
    const auto& rays = c.rays();
    for_each_subset(c.rank(), c.dim(), [&](const std::vector<std::size_t>& cols) {
        std::vector<LatticeVector> minor;
        for (const auto& r : rays) {
            LatticeVector row;
            row.ambient = r.ambient;
            for (auto j : cols) row.coords.push_back(r[j]);
            minor.push_back(std::move(row));
        }
        g = gcd(g, determinant(minor));
    });
    k.regular = g == 1;
    return k;
}

std::vector<LatticeVector> rays_of_halfspaces(std::span<const LatticeVector> normals, std::size_t rank) {
    if (normals.empty()) return {};
    const Lattice ray_ambient = dual(normals.front().ambient);
    std::set<LatticeVector> out;
    std::vector<LatticeVector> sub;
    for_each_subset(normals.size(), rank - 1, [&](const std::vector<std::size_t>& idx) {
        sub.clear();
        for (auto i : idx) sub.push_back(normals[i]);
        auto ker = integer_kernel(sub, rank, normals.front().ambient);
        if (ker.size() != 1) return;
        LatticeVector x = ker[0];
        x.ambient = ray_ambient;
        bool pos = false, neg = false;
        for (const auto& f : normals) {
            int s = sgn(pair(f, x));
            pos |= s > 0;
            neg |= s < 0;
        }
        if (pos && neg) return;
        if (!pos && !neg) return;
        out.insert(neg ? -x : x);
    });
    return {out.begin(), out.end()};
}

}  // namespace toricva
