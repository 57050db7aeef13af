#include "toricva/lattice.hpp"

#include <sstream>

namespace toricva {

Rat make_rat(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        auto b = t.find_first_not_of(" \t");
        auto e = t.find_last_not_of(" \t");
        t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw Error("malformed rational '" + s + "'");
        return make_rat(Integer(strip_plus(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error("malformed rational '" + s + "'");
    return make_rat(Integer(strip_plus(num)), Integer(den));
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Integer floor(const Rat& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rat& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

LatticeVector lattice_vector(Lattice l, std::initializer_list<long> coords) {
    LatticeVector v;
    v.ambient = l;
    for (long c : coords) v.coords.emplace_back(c);
    return v;
}

RatVector to_rat(const LatticeVector& v) {
    RatVector r;
    r.ambient = v.ambient;
    r.coords.reserve(v.rank());
    for (const auto& c : v.coords) r.coords.emplace_back(c);
    return r;
}

bool is_integral(const RatVector& v) {
    for (const auto& c : v.coords)
        if (!is_integer(c)) return false;
    return true;
}

LatticeVector to_lattice(const RatVector& v) {
    LatticeVector r;
    r.ambient = v.ambient;
    for (const auto& c : v.coords) {
        if (!is_integer(c)) throw Error("vector " + to_string(v) + " is not integral");
        r.coords.push_back(c.get_num());
    }
    return r;
}

LatticeVector primitivize(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& c : v.coords) g = gcd(g, c);
    if (g == 0) throw Error("no primitive direction");
    LatticeVector r = v;
    for (auto& c : r.coords) c /= g;
    return r;
}

LatticeVector primitive_direction(const RatVector& v) {
    Integer l = 1;
    for (const auto& c : v.coords) l = lcm(l, c.get_den());
    LatticeVector scaled;
    scaled.ambient = v.ambient;
    for (const auto& c : v.coords) scaled.coords.push_back(c.get_num() * (l / c.get_den()));
    return primitivize(scaled);
}

namespace {

template <class A, class B>
void check_pairing(const A& u, const B& v) {
    if (u.rank() != v.rank()) throw Error("pairing rank mismatch");
    if (u.ambient == v.ambient) throw Error("pairing requires opposite lattices");
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rat inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rat>> to_matrix(std::span<const RatVector> rows, std::size_t cols) {
    std::vector<std::vector<Rat>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.rank() != cols) throw Error("row length mismatch");
        a.push_back(r.coords);
    }
    return a;
}

std::vector<RatVector> as_rat(std::span<const LatticeVector> rows) {
    std::vector<RatVector> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(to_rat(r));
    return out;
}

}  // namespace

Integer pair(const LatticeVector& u, const LatticeVector& v) {
    check_pairing(u, v);
    Integer s = 0;
    for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * v[i];
    return s;
}

Rat pair(const RatVector& u, const RatVector& v) {
    check_pairing(u, v);
    Rat s = 0;
    for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * v[i];
    return s;
}

Rat pair(const RatVector& u, const LatticeVector& v) {
    check_pairing(u, v);
    Rat s = 0;
    for (std::size_t i = 0; i < u.rank(); ++i) s += u[i] * v[i];
    return s;
}

Rat pair(const LatticeVector& u, const RatVector& v) { return pair(v, u); }

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.rank() != b.rank()) throw Error("dot rank mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
    return s;
}

SolveResult solve_exact(std::span<const RatVector> rows, std::span<const Rat> rhs, std::size_t cols,
                        Lattice row_ambient) {
    if (rows.size() != rhs.size()) throw Error("system has mismatched right-hand side");
    auto a = to_matrix(rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);
    auto pivots = rref(a, cols);
    for (std::size_t r = pivots.size(); r < a.size(); ++r)
        if (a[r][cols] != 0) return {SolveStatus::Inconsistent, std::nullopt};
    RatVector x = RatVector::zero(dual(row_ambient), cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
    auto status = pivots.size() == cols ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return {status, std::move(x)};
}

SolveResult solve_exact(std::span<const RatVector> rows, std::span<const Rat> rhs) {
    if (rows.empty()) throw Error("empty system needs an explicit rank");
    return solve_exact(rows, rhs, rows.front().rank(), rows.front().ambient);
}

std::size_t matrix_rank(std::span<const RatVector> rows, std::size_t cols) {
    auto a = to_matrix(rows, cols);
    return rref(a, cols).size();
}

std::size_t matrix_rank(std::span<const LatticeVector> rows, std::size_t cols) {
    auto r = as_rat(rows);
    return matrix_rank(r, cols);
}

std::vector<RatVector> kernel(std::span<const RatVector> rows, std::size_t cols, Lattice row_ambient) {
    auto a = to_matrix(rows, cols);
    auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector x = RatVector::zero(dual(row_ambient), cols);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> rows, std::size_t cols,
                                          Lattice row_ambient) {
    auto r = as_rat(rows);
    std::vector<LatticeVector> out;
    for (const auto& k : kernel(r, cols, row_ambient)) out.push_back(primitive_direction(k));
    return out;
}

Rat determinant(std::span<const RatVector> rows) {
    const std::size_t n = rows.size();
    auto a = to_matrix(rows, n);
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

Integer determinant(std::span<const LatticeVector> rows) {
    auto r = as_rat(rows);
    Rat d = determinant(std::span<const RatVector>(r));
    return d.get_num();
}

namespace {
template <class V>
std::ostream& print_vec(std::ostream& os, const V& v) {
    os << '(';
    for (std::size_t i = 0; i < v.rank(); ++i) os << (i ? "," : "") << v[i].get_str();
    return os << ')';
}
}  // namespace

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return print_vec(os, v); }
std::ostream& operator<<(std::ostream& os, const RatVector& v) { return print_vec(os, v); }

std::string to_string(const LatticeVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string to_string(const RatVector& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace toricva
