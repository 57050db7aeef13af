#include "toricva/lambda.hpp"

#include "toricva/divisor.hpp"

namespace toricva {

namespace {

// Dense simplex tableau: rows 0..m-1 are constraints, the last column is the rhs.
struct Tableau {
    std::vector<std::vector<Rat>> t;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;  // structural columns

    void pivot(std::size_t r, std::size_t c) {
        Rat p = t[r][c];
        for (auto& v : t[r]) v /= p;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rat f = t[i][c];
            for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Minimizes cost over columns [0, limit); returns false if unbounded.
    bool optimize(const std::vector<Rat>& cost, std::size_t limit) {
        const std::size_t rhs = t.front().size() - 1;
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < limit && !enter; ++j) {
                Rat reduced = cost[j];
                for (std::size_t i = 0; i < t.size(); ++i) reduced -= cost[basis[i]] * t[i][j];
                if (reduced < 0) enter = j;
            }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rat best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][*enter] <= 0) continue;
                Rat ratio = t[i][rhs] / t[i][*enter];
                if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }
};

}  // namespace

std::optional<LpSolution> minimize_nonneg(std::span<const RatVector> cols, const RatVector& rhs,
                                          std::span<const Rat> cost) {
    const std::size_t n = cols.size(), m = rhs.rank();
    if (cost.size() != n) throw Error("cost size mismatch");
    for (const auto& c : cols)
        if (c.rank() != m) throw Error("column rank mismatch");

    Tableau tb;
    tb.cols = n;
    tb.t.assign(m, std::vector<Rat>(n + m + 1, Rat(0)));
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rat sign = rhs[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = sign * cols[j][i];
        tb.t[i][n + i] = 1;
        tb.t[i][n + m] = sign * rhs[i];
        tb.basis[i] = n + i;
    }

    std::vector<Rat> phase1(n + m, Rat(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
    tb.optimize(phase1, n + m);
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] >= n && tb.t[i][n + m] != 0) return std::nullopt;

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (std::size_t i = 0; i < tb.t.size();) {
        if (tb.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t j = 0;
        while (j < n && tb.t[i][j] == 0) ++j;
        if (j < n) {
            tb.pivot(i, j);
            ++i;
        } else {
            tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i));
            tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<Rat> phase2(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) phase2[j] = cost[j];
    if (!tb.optimize(phase2, n)) throw Error("linear program is unbounded");

    LpSolution sol;
    sol.a.assign(n, Rat(0));
    for (std::size_t i = 0; i < tb.t.size(); ++i) sol.a[tb.basis[i]] = tb.t[i][n + m];
    sol.value = 0;
    for (std::size_t j = 0; j < n; ++j) sol.value += cost[j] * sol.a[j];
    return sol;
}

LambdaValue lambda(const Cone& c, const RatVector& x, LambdaMode mode) {
    if (!c.full_dimensional()) throw Error("lambda needs a full-dimensional cone");
    if (!contains(c, x)) throw Error("point outside cone");
    std::vector<RatVector> cols;
    for (const auto& r : c.rays()) cols.push_back(to_rat(r));
    std::vector<Rat> cost(cols.size(), Rat(mode == LambdaMode::Min ? 1 : -1));
    auto sol = minimize_nonneg(cols, x, cost);
    if (!sol) throw Error("point outside cone");
    return {mode == LambdaMode::Min ? sol->value : -sol->value, std::move(sol->a)};
}

bool m_delta_contains(const Cone& c, const Rat& m, const RatVector& x) {
    if (!contains(c, x)) return false;
    return lambda(c, x, LambdaMode::Min).value <= m;
}

Subdivision regular_subdivision(const Cone& c) {
    if (!c.full_dimensional()) throw Error("subdivision needs a full-dimensional cone");
    const auto& gens = c.rays();
    // Lower facets of Q are the vertices of {phi : <phi, u_i> >= 1 for all i}.
    std::vector<Halfspace> hs;
    for (const auto& u : gens) hs.push_back({u, Rat(-1)});
    Subdivision sub;
    sub.parent = c;
    for (auto& phi : enumerate_vertices(hs, c.rank())) {
        SubdivisionCell cell;
        std::vector<LatticeVector> tight;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (pair(phi, gens[i]) == 1) {
                cell.generators.push_back(i);
                tight.push_back(gens[i]);
            }
        cell.cone = cone_from_generators(tight, c.ambient(), c.rank());
        cell.functional = std::move(phi);

        RatVector sum = RatVector::zero(c.ambient(), c.rank());
        for (const auto& u : tight) sum += to_rat(u);
        for (const auto& u : tight)
            if (lambda(c, to_rat(u), LambdaMode::Max).value != 1)
                throw InvariantError("lambda^max is not 1 on a generator");
        if (lambda(c, sum, LambdaMode::Max).value != Rat(static_cast<long>(tight.size())))
            throw InvariantError("lambda^max is not linear on a cell");
        sub.cells.push_back(std::move(cell));
    }
    return sub;
}

}  // namespace toricva
