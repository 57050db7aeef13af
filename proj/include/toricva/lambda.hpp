#pragma once

#include "toricva/cone.hpp"

#include <optional>
#include <vector>

namespace toricva {

struct LpSolution {
    Rat value;
    std::vector<Rat> a;
};

/// min <cost, a> subject to sum_j a_j cols[j] = rhs, a >= 0, by an exact
/// two-phase simplex with Bland's rule. nullopt when infeasible; throws on an
/// unbounded objective.
std::optional<LpSolution> minimize_nonneg(std::span<const RatVector> cols, const RatVector& rhs,
                                          std::span<const Rat> cost);

enum class LambdaMode { Min, Max };

/// Optimal value of a_1 + ... + a_s over a >= 0 with sum a_i u_i = x, where
/// u_i are the rays of the cone; `witness` is aligned with Cone::rays().
struct LambdaValue {
    Rat value;
    std::vector<Rat> witness;
};

/// Throws "point outside cone". The cone must be full-dimensional.
LambdaValue lambda(const Cone& c, const RatVector& x, LambdaMode mode);

/// x lies in m * conv{0, u_1, ..., u_s}.
bool m_delta_contains(const Cone& c, const Rat& m, const RatVector& x);

/// A maximal domain of linearity of lambda^max: the cone over a lower facet of
/// Q = conv{u_1, ..., u_s}. On it lambda^max(x) = <functional, x>.
struct SubdivisionCell {
    Cone cone;
    std::vector<std::size_t> generators;  // indices into parent.rays()
    RatVector functional;
};

struct Subdivision {
    Cone parent;
    std::vector<SubdivisionCell> cells;
};

Subdivision regular_subdivision(const Cone& c);

}  // namespace toricva
