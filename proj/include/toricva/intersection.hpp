#pragma once

#include "toricva/divisor.hpp"

#include <vector>

namespace toricva {

/// D . V(sigma ∩ tau) = <u_sigma - u_tau, v_j> / -<u, v_j>.
/// Evaluated for every candidate v_j; throws if the candidates disagree.
Rat wall_intersection(const Fan& f, const LocalData& ld, const Wall& w);

/// Intersection numbers for f.walls(), in order.
std::vector<Rat> wall_values(const Fan& f, const LocalData& ld);

struct EdgeCheck {
    Wall wall;
    Rat value;   // intersection number
    Rat length;  // lattice length of [u_sigma, u_tau]
};

/// Lattice length of a segment in units of the primitive vector along it; 0 for a point.
Rat lattice_length(const RatVector& a, const RatVector& b);

/// Pairs each wall's intersection number with the lattice length of the
/// matching edge of P_D. Throws "edge lengths undefined" unless d is nef.
std::vector<EdgeCheck> edge_length_check(const Fan& f, const TDivisor& d);

/// All wall intersections nonnegative. Throws NotQCartierError.
bool is_nef(const Fan& f, const TDivisor& d);
bool is_nef(const Fan& f, const LocalData& ld);

/// u_sigma lies in P_D for every sigma (the polytope-side nef test).
bool local_data_in_polytope(const Fan& f, const TDivisor& d);

struct ConeMinima {
    Rat t;  // min D . V(sigma ∩ tau)
    Rat m;  // min (D + D') . V(sigma ∩ tau)
};

ConeMinima cone_minima(const Fan& f, const TDivisor& d, const TDivisor& dp, std::size_t sigma);

/// Minimum intersection number over walls of sigma.
Rat min_wall_value(const Fan& f, const LocalData& ld, std::size_t sigma);
/// Minimum over all walls of the fan.
Rat min_wall_value(const Fan& f, const LocalData& ld);

}  // namespace toricva
