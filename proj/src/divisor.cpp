#include "toricva/divisor.hpp"

#include <algorithm>
#include <set>

namespace toricva {

namespace {

void check_size(const Fan& f, const TDivisor& d) {
    if (d.size() != f.rays().size())
        throw Error("divisor has " + std::to_string(d.size()) + " coefficients but the fan has " +
                    std::to_string(f.rays().size()) + " rays");
}

}  // namespace

TDivisor operator+(const TDivisor& a, const TDivisor& b) {
    if (a.size() != b.size()) throw Error("divisor size mismatch");
    TDivisor r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

TDivisor operator-(const TDivisor& a, const TDivisor& b) { return a + Rat(-1) * b; }

TDivisor operator*(const Rat& s, const TDivisor& a) {
    TDivisor r = a;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

std::variant<LocalData, NotQCartier> local_data(const Fan& f, const TDivisor& d) {
    check_size(f, d);
    LocalData ld;
    for (std::size_t s = 0; s < f.num_cones(); ++s) {
        std::vector<RatVector> rows;
        std::vector<Rat> rhs;
        for (auto i : f.cone_rays(s)) {
            rows.push_back(to_rat(f.rays()[i]));
            rhs.push_back(-d[i]);
        }
        auto r = solve_exact(rows, rhs, f.rank(), Lattice::N);
        if (r.status == SolveStatus::Inconsistent) return NotQCartier{s};
        if (r.status != SolveStatus::Unique) throw Error("maximal cone is not full-dimensional");
        ld.u.push_back(std::move(*r.solution));
    }
    return ld;
}

LocalData require_local_data(const Fan& f, const TDivisor& d) {
    auto r = local_data(f, d);
    if (auto* bad = std::get_if<NotQCartier>(&r)) throw NotQCartierError(bad->cone);
    return std::get<LocalData>(std::move(r));
}

bool is_q_cartier(const Fan& f, const TDivisor& d) {
    return std::holds_alternative<LocalData>(local_data(f, d));
}

bool is_cartier(const Fan& f, const TDivisor& d) {
    auto ld = require_local_data(f, d);
    for (const auto& u : ld.u)
        if (!is_integral(u)) return false;
    return true;
}

bool DivisorPolytope::contains(const RatVector& u) const {
    for (const auto& h : halfspaces)
        if (pair(u, h.normal) < -h.offset) return false;
    return true;
}

std::vector<RatVector> enumerate_vertices(std::span<const Halfspace> hs, std::size_t rank) {
    std::set<RatVector> found;
    if (hs.empty()) return {};
    const Lattice normal_ambient = hs.front().normal.ambient;
    std::vector<RatVector> rows;
    std::vector<Rat> rhs;
    for_each_subset(hs.size(), rank, [&](const std::vector<std::size_t>& idx) {
        rows.clear();
        rhs.clear();
        for (auto i : idx) {
            rows.push_back(to_rat(hs[i].normal));
            rhs.push_back(-hs[i].offset);
        }
        auto r = solve_exact(rows, rhs, rank, normal_ambient);
        if (r.status != SolveStatus::Unique) return;
        for (const auto& h : hs)
            if (pair(*r.solution, h.normal) < -h.offset) return;
        found.insert(std::move(*r.solution));
    });
    return {found.begin(), found.end()};
}

DivisorPolytope polytope(const Fan& f, const TDivisor& d) {
    check_size(f, d);
    DivisorPolytope p;
    p.rank = f.rank();
    for (std::size_t i = 0; i < f.rays().size(); ++i) p.halfspaces.push_back({f.rays()[i], d[i]});
    p.vertices = enumerate_vertices(p.halfspaces, p.rank);
    return p;
}

DivisorPolytope translated_polytope(const DivisorPolytope& p, const LocalData& ld, std::size_t sigma) {
    const RatVector& shift = ld[sigma];
    DivisorPolytope out;
    out.rank = p.rank;
    for (const auto& h : p.halfspaces) out.halfspaces.push_back({h.normal, h.offset + pair(shift, h.normal)});
    for (const auto& v : p.vertices) out.vertices.push_back(v - shift);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

TDivisor canonical_divisor(const Fan& f) { return TDivisor{std::vector<Rat>(f.rays().size(), Rat(-1))}; }

bool dprime_in_range(const Fan& f, const TDivisor& dp) {
    check_size(f, dp);
    for (const auto& c : dp.coeffs)
        if (c > 0 || c < -1) return false;
    return true;
}

}  // namespace toricva
