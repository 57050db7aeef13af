#include "toricva/intersection.hpp"

namespace toricva {

Rat wall_intersection(const Fan& f, const LocalData& ld, const Wall& w) {
    const RatVector diff = ld[w.sigma] - ld[w.tau];
    std::optional<Rat> value;
    for (auto j : w.v_candidates) {
        const auto& vj = f.rays()[j];
        Integer denom = -pair(w.u, vj);
        if (denom <= 0) throw Error("wall normal is not negative on the outside ray");
        Rat v = pair(diff, vj) / Rat(denom);
        if (value && *value != v) throw Error("intersection number depends on the choice of v_j");
        value = v;
    }
    if (!value) throw Error("wall has no outside ray");
    return *value;
}

std::vector<Rat> wall_values(const Fan& f, const LocalData& ld) {
    std::vector<Rat> out;
    for (const auto& w : f.walls()) out.push_back(wall_intersection(f, ld, w));
    return out;
}

Rat lattice_length(const RatVector& a, const RatVector& b) {
    RatVector d = b - a;
    if (d.is_zero()) return 0;
    LatticeVector prim = primitive_direction(d);
    for (std::size_t i = 0; i < d.rank(); ++i)
        if (prim[i] != 0) return d[i] / Rat(prim[i]);
    return 0;
}

bool is_nef(const Fan& f, const LocalData& ld) {
    for (const auto& v : wall_values(f, ld))
        if (v < 0) return false;
    return true;
}

bool is_nef(const Fan& f, const TDivisor& d) { return is_nef(f, require_local_data(f, d)); }

bool local_data_in_polytope(const Fan& f, const TDivisor& d) {
    auto ld = require_local_data(f, d);
    DivisorPolytope p;
    p.rank = f.rank();
    for (std::size_t i = 0; i < f.rays().size(); ++i) p.halfspaces.push_back({f.rays()[i], d[i]});
    for (const auto& u : ld.u)
        if (!p.contains(u)) return false;
    return true;
}

std::vector<EdgeCheck> edge_length_check(const Fan& f, const TDivisor& d) {
    auto ld = require_local_data(f, d);
    if (!is_nef(f, ld)) throw Error("edge lengths undefined");
    std::vector<EdgeCheck> out;
    for (const auto& w : f.walls())
        out.push_back({w, wall_intersection(f, ld, w), lattice_length(ld[w.sigma], ld[w.tau])});
    return out;
}

Rat min_wall_value(const Fan& f, const LocalData& ld, std::size_t sigma) {
    std::optional<Rat> best;
    for (const auto& w : walls_of_cone(f, sigma)) {
        Rat v = wall_intersection(f, ld, w);
        if (!best || v < *best) best = v;
    }
    if (!best) throw Error("cone has no walls");
    return *best;
}

Rat min_wall_value(const Fan& f, const LocalData& ld) {
    std::optional<Rat> best;
    for (const auto& v : wall_values(f, ld))
        if (!best || v < *best) best = v;
    if (!best) throw Error("fan has no walls");
    return *best;
}

ConeMinima cone_minima(const Fan& f, const TDivisor& d, const TDivisor& dp, std::size_t sigma) {
    auto ld = require_local_data(f, d);
    auto sum = require_local_data(f, d + dp);
    return {min_wall_value(f, ld, sigma), min_wall_value(f, sum, sigma)};
}

}  // namespace toricva
