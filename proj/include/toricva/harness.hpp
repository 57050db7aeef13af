#pragma once

#include "toricva/intersection.hpp"
#include "toricva/lambda.hpp"
#include "toricva/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricva {

struct Instance {
    Fan fan;
    TDivisor D;
    TDivisor Dprime;
    std::string label;
    std::optional<std::size_t> focus;  // distinguished maximal cone, if the family has one
};

enum class Verdict { Holds, Falsified, NotApplicable };
std::string to_string(Verdict v);

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct Witness {
    std::string kind;
    std::optional<std::size_t> cone;
    std::optional<RatVector> point;
    std::optional<Rat> value;
};

/// Per-cone quantities; the lambda values need u'_sigma in sigma^∨.
struct ConeDiagnostics {
    std::size_t cone = 0;
    Rat t, m;
    std::optional<Rat> lambda_min, lambda_max;
    bool regular = false;
};

struct CheckReport {
    std::string statement;
    std::string label;
    std::vector<Hypothesis> hypotheses;
    std::optional<bool> conclusion;  // evaluated even when a hypothesis fails, if computable
    Verdict verdict = Verdict::NotApplicable;
    std::string reason;  // first failing hypothesis
    std::vector<Witness> witnesses;
    std::vector<ConeDiagnostics> cones;
    std::optional<bool> very_ample;  // only when D + D' is Cartier

    bool applicable() const { return verdict != Verdict::NotApplicable; }
};

CheckReport check_theorem2(const Instance& inst);
CheckReport check_fujino_plus(const Instance& inst);
CheckReport check_corollary(const Instance& inst);
/// Throws "Proposition requires nef D". With `r` the local hypotheses near
/// sigma replace 0 >= D' >= K_X.
CheckReport check_proposition(const Instance& inst, std::size_t sigma, std::optional<Rat> r = std::nullopt);
CheckReport check_lemma1(const Instance& inst);
/// Interior lattice points of sigma^∨ with |coordinates| <= bound.
CheckReport check_lemma3(const Instance& inst, std::size_t sigma, int bound = 5);
CheckReport check_lemma4(const Instance& inst, std::size_t sigma);

bool is_projective_space(const Fan& f);

ConeDiagnostics cone_diagnostics(const Instance& inst, std::size_t sigma);

// Built-in families. D' is K_X unless stated.
Instance projective_space(std::size_t n, const Rat& t);  // D = t D_0, ray 0 = -(e_1 + ... + e_n)
Instance weighted_112();                                 // rays (1,1), (-1,1), (0,-1); D = D_1
Instance hirzebruch(long a, std::vector<Rat> coeffs = {0, 0, 1, 1});  // rays (1,0), (0,1), (-1,a), (0,-1)
/// Normal fan of conv{0, u_1, ..., u_n}, D = t times the polytope divisor and
/// D' = minus the divisors of the cone at the vertex 0.
Instance intro_simplex(const std::vector<LatticeVector>& us, const Rat& t);
/// conv{0, (1,0,0), (0,1,0), (1,1,2)}, D = t times the polytope divisor.
Instance ew_simplex(const Rat& t);
Instance product_p1(const Rat& a, const Rat& b);  // rays e1, e2, -e1, -e2; D = a D_3 + b D_4
/// Face fan of a polytope whose maximal cone 0 is over a square; D = 0.
Instance quadric_cone();

struct RandomConfig {
    int max_pts = 6;
    long box = 3;
    std::optional<Rat> target_t;  // defaults to dim + 1
    long max_den = 3;
    int retries = 200;
};

/// Deterministic in (dim, seed).
Instance random_instance(std::size_t dim, std::uint64_t seed, const RandomConfig& cfg = {});

}  // namespace toricva
