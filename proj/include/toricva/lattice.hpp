#pragma once

// Exact integers, rationals and vectors over the lattices N and M.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toricva {

using Integer = mpz_class;
using Rat = mpq_class;

/// Raised for invalid input and violated preconditions.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computed quantity contradicts an identity the library relies on.
class InvariantError : public Error {
  public:
    using Error::Error;
};

/// Which side of the pairing a vector lives on: N (fan side) or M (characters).
enum class Lattice { N, M };

constexpr Lattice dual(Lattice l) { return l == Lattice::N ? Lattice::M : Lattice::N; }

/// Builds num/den in canonical form; throws on a zero denominator.
Rat make_rat(const Integer& num, const Integer& den = 1);

/// Parses "p/q", "-p/q" or an integer literal.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& q);
std::string to_string(const Integer& z);

bool is_integer(const Rat& q);
Integer floor(const Rat& q);
Integer ceil(const Rat& q);

template <class T>
struct Vec {
    Lattice ambient = Lattice::N;
    std::vector<T> coords;

    Vec() = default;
    Vec(Lattice l, std::vector<T> c) : ambient(l), coords(std::move(c)) {}

    std::size_t rank() const { return coords.size(); }
    const T& operator[](std::size_t i) const { return coords[i]; }
    T& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    static Vec zero(Lattice l, std::size_t rank) { return Vec(l, std::vector<T>(rank, T(0))); }
    static Vec unit(Lattice l, std::size_t rank, std::size_t i) {
        Vec v = zero(l, rank);
        v.coords[i] = 1;
        return v;
    }

    friend bool operator==(const Vec& a, const Vec& b) {
        return a.ambient == b.ambient && a.coords == b.coords;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
    // Lexicographic on coordinates; ambient breaks ties.
    friend bool operator<(const Vec& a, const Vec& b) {
        if (a.coords != b.coords)
            return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                                b.coords.end());
        return a.ambient < b.ambient;
    }

    Vec& operator+=(const Vec& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        check_same(o);
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    Vec& operator*=(const T& s) {
        for (auto& c : coords) c *= s;
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const T& s, Vec a) { return a *= s; }
    friend Vec operator-(Vec a) {
        for (auto& c : a.coords) c = -c;
        return a;
    }

  private:
    void check_same(const Vec& o) const {
        if (o.ambient != ambient || o.coords.size() != coords.size())
            throw Error("vector shape mismatch");
    }
};

using LatticeVector = Vec<Integer>;
using RatVector = Vec<Rat>;

LatticeVector lattice_vector(Lattice l, std::initializer_list<long> coords);
RatVector to_rat(const LatticeVector& v);
/// Throws when a coordinate is not integral.
LatticeVector to_lattice(const RatVector& v);
bool is_integral(const RatVector& v);

/// Divides by the gcd of the coordinates; throws "no primitive direction" on 0.
LatticeVector primitivize(const LatticeVector& v);
/// Smallest positive multiple of a nonzero rational vector that is a primitive lattice vector.
LatticeVector primitive_direction(const RatVector& v);

/// Exact pairing between opposite lattices; throws on rank or ambient mismatch.
Integer pair(const LatticeVector& u, const LatticeVector& v);
Rat pair(const RatVector& u, const RatVector& v);
Rat pair(const RatVector& u, const LatticeVector& v);
Rat pair(const LatticeVector& u, const RatVector& v);

/// Plain dot product that ignores ambients; used inside one lattice.
Rat dot(const RatVector& a, const RatVector& b);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconsistent;
    // Set for Unique; for Underdetermined holds the solution with free variables at 0.
    std::optional<RatVector> solution;
};

/// Solves rows . x = rhs over Q by Gaussian elimination with first-nonzero pivoting.
/// The unknown lives in the lattice dual to the rows' ambient; `cols` fixes its rank.
SolveResult solve_exact(std::span<const RatVector> rows, std::span<const Rat> rhs, std::size_t cols,
                        Lattice row_ambient);
SolveResult solve_exact(std::span<const RatVector> rows, std::span<const Rat> rhs);

std::size_t matrix_rank(std::span<const RatVector> rows, std::size_t cols);
std::size_t matrix_rank(std::span<const LatticeVector> rows, std::size_t cols);

/// Basis of {x : rows . x = 0}; the vectors live in the dual of `row_ambient`.
std::vector<RatVector> kernel(std::span<const RatVector> rows, std::size_t cols, Lattice row_ambient);
std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> rows, std::size_t cols,
                                          Lattice row_ambient);

Integer determinant(std::span<const LatticeVector> rows);
Rat determinant(std::span<const RatVector> rows);

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const RatVector& v);
std::string to_string(const LatticeVector& v);
std::string to_string(const RatVector& v);

}  // namespace toricva
