#include "toricva/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace toricva {

namespace {

// Global indices of sigma's rays on which f vanishes.
std::vector<std::size_t> tight_set(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx,
                                   const LatticeVector& f) {
    std::vector<std::size_t> out;
    for (auto i : idx)
        if (pair(f, rays[i]) == 0) out.push_back(i);
    return out;
}

// Whether the rays `sub` (a subset of `idx`) span a face of the cone.
bool spans_face(const Cone& c, const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx,
                const std::vector<std::size_t>& sub) {
    std::vector<const LatticeVector*> tight;
    for (const auto& f : c.facet_normals()) {
        bool all = true;
        for (auto i : sub) all = all && pair(f, rays[i]) == 0;
        if (all) tight.push_back(&f);
    }
    std::vector<std::size_t> closure;
    for (auto i : idx) {
        bool all = true;
        for (const auto* f : tight) all = all && pair(*f, rays[i]) == 0;
        if (all) closure.push_back(i);
    }
    return closure == sub;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool Fan::is_simplicial() const {
    for (const auto& c : cones_)
        if (c.rays().size() != rank_) return false;
    return true;
}

Fan build_fan(std::vector<std::vector<std::size_t>> max_cones, std::vector<LatticeVector> rays,
              std::size_t rank) {
    if (rank == 0) throw Error("fan rank must be positive");
    if (max_cones.empty()) throw Error("fan has no cones");
    std::set<LatticeVector> seen;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        auto& r = rays[i];
        if (r.rank() != rank) throw Error("ray " + std::to_string(i) + " has wrong rank");
        r.ambient = Lattice::N;
        if (r.is_zero()) throw Error("ray " + std::to_string(i) + " is zero");
        if (primitivize(r) != r) throw Error("ray " + std::to_string(i) + " is not primitive");
        if (!seen.insert(r).second) throw Error("ray " + std::to_string(i) + " is repeated");
    }

    Fan f;
    f.rank_ = rank;
    f.rays_ = std::move(rays);
    std::vector<bool> used(f.rays_.size(), false);
    for (std::size_t s = 0; s < max_cones.size(); ++s) {
        auto idx = max_cones[s];
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw Error("cone " + std::to_string(s) + " repeats a ray index");
        std::vector<LatticeVector> gens;
        for (auto i : idx) {
            if (i >= f.rays_.size()) throw Error("cone " + std::to_string(s) + " has ray index out of range");
            gens.push_back(f.rays_[i]);
            used[i] = true;
        }
        if (gens.empty()) throw Error("cone " + std::to_string(s) + " is empty");
        Cone c = cone_from_generators(gens, Lattice::N, rank);
        if (!c.full_dimensional()) throw Error("cone " + std::to_string(s) + " is not full-dimensional");
        if (c.rays().size() != idx.size())
            throw Error("cone " + std::to_string(s) + " lists a ray that is not extreme");
        f.cone_rays_.push_back(std::move(idx));
        f.cones_.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) throw Error("ray " + std::to_string(i) + " is not in any cone");

    const std::size_t k = f.cones_.size();
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (f.cone_rays_[a] == f.cone_rays_[b]) throw Error("not a fan: cones repeated");
            std::vector<LatticeVector> hs = f.cones_[a].facet_normals();
            const auto& fb = f.cones_[b].facet_normals();
            hs.insert(hs.end(), fb.begin(), fb.end());
            auto meet_rays = rays_of_halfspaces(hs, rank);
            auto shared = intersect(f.cone_rays_[a], f.cone_rays_[b]);
            std::vector<LatticeVector> shared_vecs;
            for (auto i : shared) shared_vecs.push_back(f.rays_[i]);
            std::sort(shared_vecs.begin(), shared_vecs.end());
            if (meet_rays != shared_vecs || !spans_face(f.cones_[a], f.rays_, f.cone_rays_[a], shared) ||
                !spans_face(f.cones_[b], f.rays_, f.cone_rays_[b], shared))
                throw Error("not a fan: cones " + std::to_string(a) + " and " + std::to_string(b) +
                            " do not meet in a common face");
        }
    }

    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t s = 0; s < k; ++s) {
        for (const auto& normal : f.cones_[s].facet_normals()) {
            auto facet = tight_set(f.rays_, f.cone_rays_[s], normal);
            std::vector<std::size_t> partners;
            for (std::size_t t = 0; t < k; ++t) {
                if (t == s) continue;
                if (intersect(f.cone_rays_[t], facet) != facet) continue;
                for (const auto& g : f.cones_[t].facet_normals())
                    if (tight_set(f.rays_, f.cone_rays_[t], g) == facet) {
                        partners.push_back(t);
                        break;
                    }
            }
            if (partners.empty()) throw Error("fan not complete: a facet of cone " + std::to_string(s) + " is on the boundary");
            if (partners.size() > 1) throw Error("not a fan: a facet of cone " + std::to_string(s) + " is shared by more than two cones");
            const std::size_t t = partners.front();
            adj[s].push_back(t);
            if (s < t) {
                Wall w;
                w.sigma = s;
                w.tau = t;
                w.wall_rays = facet;
                w.u = normal;
                w.v_candidates = difference(f.cone_rays_[t], f.cone_rays_[s]);
                w.v_j = w.v_candidates.front();
                f.walls_.push_back(std::move(w));
            }
        }
    }
    std::vector<bool> reached(k, false);
    std::queue<std::size_t> q;
    q.push(0);
    reached[0] = true;
    while (!q.empty()) {
        auto s = q.front();
        q.pop();
        for (auto t : adj[s])
            if (!reached[t]) {
                reached[t] = true;
                q.push(t);
            }
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
        throw Error("fan not complete: cones are not connected through walls");

    for (const auto& c : f.cones_) f.duals_.push_back(dual_cone(c));
    return f;
}

std::vector<Wall> walls_of_cone(const Fan& f, std::size_t sigma) {
    if (sigma >= f.num_cones()) throw Error("cone index out of range");
    std::vector<Wall> out;
    for (const auto& w : f.walls()) {
        if (w.sigma == sigma) {
            out.push_back(w);
        } else if (w.tau == sigma) {
            Wall r;
            r.sigma = w.tau;
            r.tau = w.sigma;
            r.wall_rays = w.wall_rays;
            r.u = -w.u;
            r.v_candidates = difference(f.cone_rays(w.sigma), f.cone_rays(w.tau));
            r.v_j = r.v_candidates.front();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::optional<std::size_t> find_cone(const Fan& f, std::vector<std::size_t> ray_indices) {
    std::sort(ray_indices.begin(), ray_indices.end());
    for (std::size_t s = 0; s < f.num_cones(); ++s)
        if (f.cone_rays(s) == ray_indices) return s;
    return std::nullopt;
}

namespace {

std::vector<LatticeVector> homogenize(std::span<const LatticeVector> points, Lattice l) {
    std::vector<LatticeVector> out;
    for (const auto& p : points) {
        LatticeVector h = p;
        h.ambient = l;
        h.coords.emplace_back(1);
        out.push_back(std::move(h));
    }
    return out;
}

LatticeVector dehomogenize(const LatticeVector& h) {
    LatticeVector p = h;
    p.coords.pop_back();
    return p;
}

}  // namespace

PolytopeFan normal_fan(std::span<const LatticeVector> points) {
    if (points.empty()) throw Error("polytope needs points");
    const std::size_t n = points.front().rank();
    Cone hom = cone_from_generators(homogenize(points, Lattice::M), Lattice::M, n + 1);
    if (!hom.full_dimensional()) throw Error("polytope is not full-dimensional");

    PolytopeFan out;
    for (const auto& r : hom.rays()) out.vertices.push_back(dehomogenize(r));
    std::vector<LatticeVector> normals;
    for (const auto& fh : hom.facet_normals()) {
        LatticeVector v = primitivize(dehomogenize(fh));
        Integer lo = pair(out.vertices.front(), v);
        for (const auto& w : out.vertices) lo = std::min<Integer>(lo, pair(w, v));
        normals.push_back(v);
        out.support.push_back(-lo);
    }
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& w : out.vertices) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < normals.size(); ++i)
            if (pair(w, normals[i]) == -out.support[i]) idx.push_back(i);
        cones.push_back(std::move(idx));
    }
    out.fan = build_fan(std::move(cones), std::move(normals), n);
    return out;
}

Fan face_fan(std::span<const LatticeVector> points) {
    if (points.empty()) throw Error("polytope needs points");
    const std::size_t n = points.front().rank();
    Cone hom = cone_from_generators(homogenize(points, Lattice::N), Lattice::N, n + 1);
    if (!hom.full_dimensional()) throw Error("polytope is not full-dimensional");
    std::vector<LatticeVector> verts;
    for (const auto& r : hom.rays()) verts.push_back(dehomogenize(r));
    std::vector<LatticeVector> rays;
    for (const auto& v : verts) rays.push_back(primitivize(v));
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& fh : hom.facet_normals()) {
        if (fh.coords.back() <= 0) throw Error("origin is not in the interior of the polytope");
        cones.push_back(hom.rays_on(fh));
    }
    return build_fan(std::move(cones), std::move(rays), n);
}

}  // namespace toricva
