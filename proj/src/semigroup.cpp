#include "toricva/semigroup.hpp"

#include "toricva/lambda.hpp"

#include <set>

namespace toricva {

namespace {

// Calls fn(point) for every lattice point of the box [lo, hi].
template <class Fn>
void for_each_box_point(const std::vector<Integer>& lo, const std::vector<Integer>& hi, Lattice l, Fn&& fn) {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i]) return;
    LatticeVector p(l, lo);
    while (true) {
        fn(static_cast<const LatticeVector&>(p));
        std::size_t i = 0;
        while (i < n && p[i] == hi[i]) {
            p[i] = lo[i];
            ++i;
        }
        if (i == n) return;
        ++p[i];
    }
}

// Bounding box of a set of rational points.
void bounding_box(const std::vector<RatVector>& pts, std::vector<Integer>& lo, std::vector<Integer>& hi) {
    const std::size_t n = pts.front().rank();
    lo.assign(n, 0);
    hi.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = ceil(pts.front()[i]);
        hi[i] = floor(pts.front()[i]);
        for (const auto& p : pts) {
            lo[i] = std::min(lo[i], ceil(p[i]));
            hi[i] = std::max(hi[i], floor(p[i]));
        }
    }
}

// Coefficients a with sum a_k gens[k] = x, for linearly independent gens.
std::vector<Rat> coefficients(const std::vector<LatticeVector>& gens, const RatVector& x) {
    const std::size_t n = x.rank(), k = gens.size();
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector row = RatVector::zero(Lattice::N, k);
        for (std::size_t j = 0; j < k; ++j) row[j] = gens[j][i];
        rows.push_back(std::move(row));
    }
    auto r = solve_exact(rows, x.coords, k, Lattice::N);
    if (r.status != SolveStatus::Unique) throw Error("generators are not independent");
    return r.solution->coords;
}

std::vector<Rat> frac(std::vector<Rat> a) {
    for (auto& v : a) v -= Rat(floor(v));
    return a;
}

// Lattice points of the half-open parallelepiped {sum a_i w_i : 0 <= a_i < 1},
// found as the finite group Z^n / (W Z^n) via closure over unit vectors.
std::vector<LatticeVector> parallelepiped_points(const std::vector<LatticeVector>& w, Lattice l) {
    const std::size_t n = w.size();
    std::vector<std::vector<Rat>> steps;
    for (std::size_t j = 0; j < n; ++j) steps.push_back(frac(coefficients(w, to_rat(LatticeVector::unit(l, n, j)))));
    std::set<std::vector<Rat>> group{std::vector<Rat>(n, Rat(0))};
    std::vector<std::vector<Rat>> todo(group.begin(), group.end());
    while (!todo.empty()) {
        auto a = std::move(todo.back());
        todo.pop_back();
        for (const auto& s : steps) {
            std::vector<Rat> b(n);
            for (std::size_t i = 0; i < n; ++i) b[i] = a[i] + s[i];
            b = frac(std::move(b));
            if (group.insert(b).second) todo.push_back(std::move(b));
        }
    }
    std::vector<LatticeVector> out;
    for (const auto& a : group) {
        RatVector x = RatVector::zero(l, n);
        for (std::size_t i = 0; i < n; ++i) x += a[i] * to_rat(w[i]);
        out.push_back(to_lattice(x));
    }
    return out;
}

void triangulate_into(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx, Lattice l,
                      std::size_t rank, std::vector<std::vector<std::size_t>>& out) {
    std::vector<LatticeVector> gens;
    for (auto i : idx) gens.push_back(rays[i]);
    Cone c = cone_from_generators(gens, l, rank);
    if (c.rays().size() == c.dim()) {
        out.push_back(idx);
        return;
    }
    // Pull the first ray: cone it over every facet not containing it.
    const std::size_t apex = idx.front();
    for (const auto& f : c.facet_normals()) {
        if (pair(f, rays[apex]) == 0) continue;
        std::vector<std::size_t> facet;
        for (auto i : idx)
            if (pair(f, rays[i]) == 0) facet.push_back(i);
        std::vector<std::vector<std::size_t>> sub;
        triangulate_into(rays, facet, l, rank, sub);
        for (auto& s : sub) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

bool LatticePointSet::contains(const LatticeVector& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

LatticePointSet make_point_set(std::vector<LatticeVector> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {std::move(points)};
}

LatticePointSet lattice_points(const DivisorPolytope& p) {
    std::vector<LatticeVector> normals;
    for (const auto& h : p.halfspaces) normals.push_back(h.normal);
    if (normals.empty() || matrix_rank(normals, p.rank) < p.rank || !rays_of_halfspaces(normals, p.rank).empty())
        throw Error("polytope is unbounded");
    if (p.empty()) return {};
    std::vector<Integer> lo, hi;
    bounding_box(p.vertices, lo, hi);
    std::vector<LatticeVector> pts;
    for_each_box_point(lo, hi, p.vertices.front().ambient, [&](const LatticeVector& x) {
        if (p.contains(to_rat(x))) pts.push_back(x);
    });
    return make_point_set(std::move(pts));
}

LatticePointSet lattice_points_dilated_simplex(const Cone& c, const Rat& m) {
    if (m < 0) return {};
    std::vector<RatVector> corners{RatVector::zero(c.ambient(), c.rank())};
    for (const auto& r : c.rays()) corners.push_back(m * to_rat(r));
    std::vector<Integer> lo, hi;
    bounding_box(corners, lo, hi);
    std::vector<LatticeVector> pts;
    for_each_box_point(lo, hi, c.ambient(), [&](const LatticeVector& x) {
        if (m_delta_contains(c, m, to_rat(x))) pts.push_back(x);
    });
    return make_point_set(std::move(pts));
}

std::vector<std::vector<std::size_t>> triangulate(const Cone& c) {
    std::vector<std::size_t> all(c.rays().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::vector<std::size_t>> out;
    triangulate_into(c.rays(), all, c.ambient(), c.rank(), out);
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

HilbertBasis hilbert_basis(const Cone& c) {
    if (!c.full_dimensional()) throw Error("Hilbert basis needs a full-dimensional cone");
    std::set<LatticeVector> cand(c.rays().begin(), c.rays().end());
    for (const auto& simplex : triangulate(c)) {
        std::vector<LatticeVector> w;
        for (auto i : simplex) w.push_back(c.rays()[i]);
        for (auto& p : parallelepiped_points(w, c.ambient()))
            if (!p.is_zero()) cand.insert(std::move(p));
    }
    std::vector<LatticeVector> basis;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& h : cand) {
            if (h == x) continue;
            if (contains(c, x - h)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return {c, make_point_set(std::move(basis))};
}

Generation generates(const LatticePointSet& s, const HilbertBasis& hb) {
    for (const auto& p : s.points)
        if (!contains(hb.cone, p)) throw Error("point outside cone");
    for (const auto& h : hb.elements.points)
        if (!s.contains(h)) return {false, h};
    return {true, std::nullopt};
}

Generation generates(const LatticePointSet& s, const Cone& c) { return generates(s, hilbert_basis(c)); }

bool semigroup_member(const LatticePointSet& s, const LatticeVector& target, int bound) {
    if (target.is_zero()) return true;
    std::vector<LatticeVector> gens;
    for (const auto& p : s.points)
        if (!p.is_zero() && p.ambient == target.ambient && p.rank() == target.rank()) gens.push_back(p);
    // A functional positive on every generator bounds the partial sums by its value at the target.
    std::optional<LatticeVector> phi;
    if (!gens.empty()) {
        try {
            Cone c = cone_from_generators(gens, target.ambient, target.rank());
            LatticeVector f = LatticeVector::zero(dual(target.ambient), target.rank());
            for (const auto& n : c.facet_normals()) f += n;
            bool positive = true;
            for (const auto& g : gens) positive = positive && pair(f, g) > 0;
            if (positive) phi = f;
        } catch (const Error&) {
        }
    }
    std::set<LatticeVector> seen{LatticeVector::zero(target.ambient, target.rank())};
    std::vector<LatticeVector> level(seen.begin(), seen.end());
    for (int k = 0; k < bound && !level.empty(); ++k) {
        std::vector<LatticeVector> next;
        for (const auto& x : level)
            for (const auto& g : gens) {
                auto y = x + g;
                if (y == target) return true;
                if (phi && pair(*phi, y) > pair(*phi, target)) continue;
                if (seen.insert(y).second) next.push_back(std::move(y));
            }
        level = std::move(next);
    }
    return false;
}

}  // namespace toricva
