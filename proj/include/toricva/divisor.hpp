#pragma once

#include "toricva/fan.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace toricva {

/// T-invariant Q-divisor sum d_i D_i, one coefficient per global ray of the fan.
struct TDivisor {
    std::vector<Rat> coeffs;

    std::size_t size() const { return coeffs.size(); }
    const Rat& operator[](std::size_t i) const { return coeffs[i]; }

    friend bool operator==(const TDivisor&, const TDivisor&) = default;
    friend TDivisor operator+(const TDivisor& a, const TDivisor& b);
    friend TDivisor operator-(const TDivisor& a, const TDivisor& b);
    friend TDivisor operator*(const Rat& s, const TDivisor& a);
};

/// Per maximal cone sigma, the point u_sigma in M_Q with <u_sigma, v_i> = -d_i on sigma's rays.
struct LocalData {
    std::vector<RatVector> u;
    const RatVector& operator[](std::size_t sigma) const { return u.at(sigma); }
};

/// Tagged outcome: the divisor is not Q-Cartier on `cone`.
struct NotQCartier {
    std::size_t cone = 0;
};

class NotQCartierError : public Error {
  public:
    explicit NotQCartierError(std::size_t cone)
        : Error("divisor is not Q-Cartier on cone " + std::to_string(cone)), cone_(cone) {}
    std::size_t cone() const { return cone_; }

  private:
    std::size_t cone_;
};

std::variant<LocalData, NotQCartier> local_data(const Fan& f, const TDivisor& d);
/// Same as local_data but throws NotQCartierError.
LocalData require_local_data(const Fan& f, const TDivisor& d);

bool is_q_cartier(const Fan& f, const TDivisor& d);
/// Every u_sigma is a lattice point. Throws NotQCartierError.
bool is_cartier(const Fan& f, const TDivisor& d);

/// <u, normal> >= -offset
struct Halfspace {
    LatticeVector normal;
    Rat offset;
};

/// P_D in H-form together with its exactly enumerated vertices; may be empty.
struct DivisorPolytope {
    std::size_t rank = 0;
    std::vector<Halfspace> halfspaces;
    std::vector<RatVector> vertices;

    bool empty() const { return vertices.empty(); }
    bool contains(const RatVector& u) const;
};

DivisorPolytope polytope(const Fan& f, const TDivisor& d);
/// P_D - u_sigma.
DivisorPolytope translated_polytope(const DivisorPolytope& p, const LocalData& ld, std::size_t sigma);

/// K_X = -sum D_i.
TDivisor canonical_divisor(const Fan& f);
/// -1 <= d'_i <= 0 for every ray (0 >= D' >= K_X coefficientwise).
bool dprime_in_range(const Fan& f, const TDivisor& dp);

/// Vertices of {u : <u, normal_i> >= -offset_i}, assumed bounded.
std::vector<RatVector> enumerate_vertices(std::span<const Halfspace> hs, std::size_t rank);

}  // namespace toricva
