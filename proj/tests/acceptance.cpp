// Acceptance suite: one PASS/FAIL line per criterion.

#include "oracles.hpp"
#include "toricva/harness.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace toricva;
using namespace toricva::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::string str(const Rat& q) { return to_string(q); }

template <class T>
std::string str(const Vec<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

// Lattice length of [a, b]: b - a divided by its primitive integral direction.
Rat length_oracle(const RatVector& a, const RatVector& b) {
    RatVector d = b - a;
    Integer den = 1;
    for (const auto& c : d.coords) den = lcm(den, Integer(c.get_den()));
    Integer g = 0;
    for (const auto& c : d.coords) g = gcd(g, Integer(c.get_num() * (den / c.get_den())));
    if (g == 0) return 0;
    for (const auto& c : d.coords)
        if (c != 0) {
            Rat step = Rat(Integer(c.get_num() * (den / c.get_den())) / g);
            Rat len = c / step;
            return len < 0 ? Rat(-len) : len;
        }
    return 0;
}

std::optional<Wall> wall_through(const Fan& f, std::size_t sigma, std::size_t ray) {
    for (const auto& w : walls_of_cone(f, sigma))
        if (w.wall_rays == std::vector<std::size_t>{ray}) return w;
    return std::nullopt;
}

Instance with_dprime(Instance inst, const Rat& s) {
    inst.Dprime = s * inst.Dprime;
    return inst;
}

// Seeds whose instances satisfy every hypothesis of Theorem 2: 100 in dimension 2 and 20 in dimension 3.
struct Pool {
    std::vector<Instance> instances;
    std::size_t dim2 = 0, dim3 = 0;
};

const Pool& theorem2_pool() {
    static const Pool pool = [] {
        Pool p;
        for (std::size_t dim : {2, 3}) {
            std::size_t want = dim == 2 ? 100 : 20, got = 0;
            for (std::uint64_t seed = 0; seed < 5000 && got < want; ++seed) {
                Instance inst = random_instance(dim, seed);
                if (!check_theorem2(inst).applicable()) continue;
                ++got;
                p.instances.push_back(std::move(inst));
            }
            (dim == 2 ? p.dim2 : p.dim3) = got;
        }
        return p;
    }();
    return pool;
}

Outcome weighted_plane() {
    Outcome o;
    Instance inst = weighted_112();
    const Fan& f = inst.fan;
    const std::size_t sigma = *inst.focus;
    o.require(f.cone_rays(sigma) == std::vector<std::size_t>{1, 2}, "sigma is spanned by v2, v3");
    auto ld = require_local_data(f, inst.D);
    auto lsum = require_local_data(f, inst.D + inst.Dprime);
    auto w2 = wall_through(f, sigma, 1), w3 = wall_through(f, sigma, 2);
    o.require(w2 && w3, "sigma has walls through v2 and v3");
    if (!w2 || !w3) return o;

    Rat t = wall_intersection(f, ld, *w2);
    Rat sum2 = wall_intersection(f, lsum, *w2), sum3 = wall_intersection(f, lsum, *w3);
    auto diag = cone_diagnostics(inst, sigma);
    auto lmin_oracle = lambda_oracle(f.dual(sigma), require_local_data(f, inst.Dprime)[sigma], LambdaMode::Min);
    o.note("t = D.D2 = " + str(t) + ", lambda_min = " + str(*diag.lambda_min) + ", (D+D').D2 = " + str(sum2) +
           ", (D+D').D3 = " + str(sum3) + ", m = " + str(diag.m));
    o.require(t == Rat(1, 2) && diag.t == Rat(1, 2), "t = D.D2 = 1/2");
    o.require(diag.lambda_min == Rat(2) && lmin_oracle == Rat(2), "lambda_min(u'_sigma) = 2");
    o.require(sum2 == Rat(-3), "(D+D').D2 = -3 as stated");
    o.require(diag.m == Rat(-3) && diag.m < Rat(1, 2) - 2 - 1, "m = -3 < 1/2 - 2 - 1");
    auto prop = check_proposition(inst, sigma);
    bool recorded = false;
    for (const auto& w : prop.witnesses)
        if (w.kind == "t - lambda_min - r" && w.value == Rat(1, 2) - 2 - 1) recorded = true;
    o.require(prop.verdict == Verdict::NotApplicable && prop.conclusion == false && recorded,
              "Proposition records the violation as not applicable");
    return o;
}

Outcome ewald_wessels() {
    Outcome o;
    Instance inst = ew_simplex(4);
    const std::size_t sigma = *inst.focus;
    const Cone& dual = inst.fan.dual(sigma);
    const std::vector<LatticeVector> us{mv({1, 0, 0}), mv({0, 1, 0}), mv({1, 1, 2})};
    o.require(dual.rays() == std::vector<LatticeVector>{mv({0, 1, 0}), mv({1, 0, 0}), mv({1, 1, 2})},
              "sigma dual is spanned by u1, u2, u3");

    // Brute force over the bounding box: coefficients a3 = z/2, a1 = x - a3, a2 = y - a3.
    std::set<LatticeVector> delta_oracle;
    for (long x = 0; x <= 1; ++x)
        for (long y = 0; y <= 1; ++y)
            for (long z = 0; z <= 2; ++z) {
                Rat a3(z, 2), a1 = x - a3, a2 = y - a3;
                if (a1 >= 0 && a2 >= 0 && a1 + a2 + a3 <= 1) delta_oracle.insert(mv({x, y, z}));
            }
    auto delta = lattice_points_dilated_simplex(dual, 1);
    std::set<LatticeVector> expected{mv({0, 0, 0}), us[0], us[1], us[2]};
    o.require(std::set<LatticeVector>(delta.points.begin(), delta.points.end()) == expected && delta_oracle == expected,
              "Delta cap M = {0, u1, u2, u3}");

    auto hb = hilbert_basis(dual);
    o.require(hb.elements.contains(mv({1, 1, 1})), "Hilbert basis contains (1,1,1)");
    o.require(hb.elements.points == hilbert_basis_oracle(dual), "Hilbert basis matches brute force");
    auto g = generates(delta, hb);
    o.require(!g.generates && g.missing == mv({1, 1, 1}), "generation fails with witness (1,1,1)");

    // Closure of Delta cap M inside the box [0,6]^3, versus every lattice point of sigma dual there.
    std::set<LatticeVector> closure{mv({0, 0, 0})};
    std::vector<LatticeVector> frontier{mv({0, 0, 0})};
    while (!frontier.empty()) {
        std::vector<LatticeVector> next;
        for (const auto& p : frontier)
            for (const auto& u : us) {
                LatticeVector s = p + u;
                bool in_box = true;
                for (const auto& c : s.coords) in_box = in_box && c <= 6;
                if (in_box && closure.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::size_t checked = 0;
    bool parity = true;
    for (long x = 0; x <= 6; ++x)
        for (long y = 0; y <= 6; ++y)
            for (long z = 0; z <= 6; ++z) {
                LatticeVector p = mv({x, y, z});
                if (!contains(dual, p)) continue;
                ++checked;
                if (closure.count(p) && z % 2 != 0) parity = false;
            }
    o.require(parity, "semigroup points up to 6 have even third coordinate");
    o.require(!semigroup_member(delta, mv({1, 1, 1}), 6), "(1,1,1) is not in the generated semigroup");
    o.note(std::to_string(checked) + " cone points up to 6, " + std::to_string(closure.size()) + " in the semigroup");
    return o;
}

Outcome wall_identities() {
    Outcome o;
    std::size_t instances = 0, walls = 0, edges = 0;
    for (std::size_t dim : {2, 3})
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Instance inst = random_instance(dim, 300 + seed);
            const Fan& f = inst.fan;
            o.require(is_nef(f, inst.D), inst.label + " D nef");
            auto ld = require_local_data(f, inst.D);
            ++instances;
            for (const auto& w : f.walls()) {
                Rat v = wall_intersection(f, ld, w);
                RatVector rhs = ld[w.sigma] + v * to_rat(w.u);
                o.require(ld[w.tau] == rhs, inst.label + " u_tau = u_sigma + (D.V) u");
                o.require(v == length_oracle(ld[w.sigma], ld[w.tau]), inst.label + " D.V = edge length");
                ++walls;
            }
            for (const auto& e : edge_length_check(f, inst.D)) {
                o.require(e.value == e.length, inst.label + " edge check");
                ++edges;
            }
        }
    o.require(instances >= 50, "at least 50 instances");
    o.note(std::to_string(instances) + " instances, " + std::to_string(walls) + " walls, " + std::to_string(edges) +
           " edges");
    return o;
}

Outcome proposition_fuzz() {
    Outcome o;
    std::map<std::string, std::size_t> applicable_instances, applicable_cones;
    const std::vector<std::pair<std::string, std::optional<Rat>>> modes{
        {"global", std::nullopt}, {"r=1/2", Rat(1, 2)}, {"r=2", Rat(2)}};
    for (std::size_t dim : {2, 3})
        for (std::uint64_t seed = 0; seed < (dim == 2 ? 150u : 40u); ++seed) {
            Instance base = random_instance(dim, 1000 + seed);
            for (const auto& [name, r] : modes) {
                Instance inst = r ? with_dprime(base, *r) : base;
                bool any = false;
                for (std::size_t s = 0; s < inst.fan.num_cones(); ++s) {
                    auto rep = check_proposition(inst, s, r);
                    if (!rep.applicable()) continue;
                    any = true;
                    ++applicable_cones[name];
                    auto diag = cone_diagnostics(inst, s);
                    auto lmin = lambda_oracle(inst.fan.dual(s), require_local_data(inst.fan, inst.Dprime)[s], LambdaMode::Min);
                    Rat bound = diag.t - *lmin - r.value_or(Rat(1));
                    o.require(rep.verdict == Verdict::Holds && diag.m >= bound,
                              inst.label + " cone " + std::to_string(s) + " " + name + ": m = " + str(diag.m) +
                                  " < " + str(bound));
                }
                if (any) ++applicable_instances[name];
            }
        }
    for (const auto& [name, r] : modes) {
        o.require(applicable_instances[name] >= 100, name + " has at least 100 applicable instances");
        o.note(name + ": " + std::to_string(applicable_instances[name]) + " instances, " +
               std::to_string(applicable_cones[name]) + " cones");
    }
    return o;
}

Outcome theorem2_suite() {
    Outcome o;
    const Pool& pool = theorem2_pool();
    o.require(pool.dim2 >= 100 && pool.dim3 >= 20, "pool has 100 + 20 applicable instances");
    std::size_t cartier = 0, oracle_cones = 0;
    for (const auto& inst : pool.instances) {
        auto r = check_theorem2(inst);
        o.require(r.verdict == Verdict::Holds, inst.label + " generation");
        bool is_c = is_cartier(inst.fan, inst.D + inst.Dprime);
        o.require(r.very_ample.has_value() == is_c, inst.label + " very ample verdict iff Cartier");
        if (is_c) {
            ++cartier;
            o.require(r.very_ample == true, inst.label + " very ample");
        }
        if (inst.fan.rank() != 2) continue;
        // Brute-force Hilbert bases must lie in each translated polytope.
        auto ld = require_local_data(inst.fan, inst.D + inst.Dprime);
        auto p = polytope(inst.fan, inst.D + inst.Dprime);
        for (std::size_t s = 0; s < inst.fan.num_cones(); ++s) {
            auto t = translated_polytope(p, ld, s);
            for (const auto& h : hilbert_basis_oracle(inst.fan.dual(s)))
                o.require(t.contains(to_rat(h)), inst.label + " oracle Hilbert element " + str(h));
            ++oracle_cones;
        }
    }
    o.require(cartier > 0, "some Cartier sub-cases");
    o.note(std::to_string(pool.dim2) + " + " + std::to_string(pool.dim3) + " instances, " + std::to_string(cartier) +
           " Cartier, " + std::to_string(oracle_cones) + " cones checked against brute-force Hilbert bases");
    return o;
}

Outcome fujino_corollary() {
    Outcome o;
    std::vector<Instance> pool;
    for (std::size_t dim : {2, 3})
        for (std::uint64_t seed = 0; seed < (dim == 2 ? 130u : 30u); ++seed) pool.push_back(random_instance(dim, seed));
    for (const auto& [n, t] : {std::pair<std::size_t, long>{2, 2}, {2, 3}, {3, 3}, {3, 4}, {3, 5}})
        pool.push_back(projective_space(n, t));
    std::map<std::string, std::array<std::size_t, 4>> counts;  // applicable in dim 2, dim 3, projective spaces, total
    for (const auto& inst : pool) {
        bool pn = is_projective_space(inst.fan);
        for (auto* check : {&check_fujino_plus, &check_corollary}) {
            auto r = (*check)(inst);
            if (!r.applicable()) continue;
            auto& c = counts[r.statement];
            ++c[inst.fan.rank() == 2 ? 0 : 1];
            if (pn) ++c[2];
            ++c[3];
            bool nef = local_data_in_polytope(inst.fan, inst.D + inst.Dprime);
            o.require(r.verdict == Verdict::Holds && nef, r.statement + " " + inst.label + " D+D' nef");
        }
        if (pn) o.require(!check_fujino_plus(inst).applicable(), inst.label + " excluded from Fujino");
    }
    for (const char* s : {"fujino", "corollary"}) {
        auto& c = counts[s];
        o.require(c[0] >= 100 && c[1] >= 20, std::string(s) + " has 100 + 20 applicable random instances");
        o.note(std::string(s) + ": " + std::to_string(c[3]) + " applicable, all nef (" + std::to_string(c[2]) +
               " projective spaces)");
    }
    o.require(counts["corollary"][2] > 0, "corollary exercised on projective spaces");
    return o;
}

Outcome sharpness() {
    Outcome o;
    Instance two = projective_space(2, 2);
    auto lsum = require_local_data(two.fan, two.D + two.Dprime);
    for (const auto& w : two.fan.walls()) o.require(wall_intersection(two.fan, lsum, w) == -1, "(2H+K).line = -1");
    auto fuj = check_fujino_plus(two);
    o.require(fuj.verdict == Verdict::NotApplicable && fuj.conclusion == false, "Fujino excludes P2 with 2H");
    o.require(check_fujino_plus(projective_space(2, 3)).conclusion == true, "3H+K nef on P2");

    Instance three = projective_space(2, 3);
    Fan f = three.fan;
    TDivisor sum = three.D + three.Dprime;
    o.require(is_nef(f, sum), "3H+K nef");
    auto ld = require_local_data(f, sum);
    auto p = polytope(f, sum);
    o.require(p.vertices.size() == 1, "P_{3H+K} is a point");
    bool all = true;
    for (std::size_t s = 0; s < f.num_cones(); ++s)
        all = all && generates(lattice_points(translated_polytope(p, ld, s)), hilbert_basis(f.dual(s))).generates;
    o.require(!all, "generation fails for 3H+K");
    auto th = check_theorem2(three);
    o.require(th.verdict == Verdict::NotApplicable && th.conclusion == false && th.very_ample == false,
              "Theorem 2 excludes P2 with 3H");
    return o;
}

Outcome lambda_oracle_suite() {
    Outcome o;
    Rng rng(8);
    std::size_t pairs = 0;
    for (int k = 0; k < 120; ++k) {
        std::size_t rank = 2 + k % 2;
        Cone c = random_cone(rng, Lattice::M, rank, static_cast<int>(rank) + 1 + static_cast<int>(rng.uniform(0, 2)));
        RatVector x = random_point(rng, c), y = random_point(rng, c);
        Rat s = rng.rat(1, 4, 3);
        auto lo = lambda(c, x, LambdaMode::Min).value, hi = lambda(c, x, LambdaMode::Max).value;
        o.require(lo == *lambda_oracle(c, x, LambdaMode::Min) && hi == *lambda_oracle(c, x, LambdaMode::Max),
                  "LP equals vertex enumeration at " + str(x));
        o.require(lo <= hi, "lambda_min <= lambda_max");
        o.require(lambda(c, s * x, LambdaMode::Min).value == s * lo && lambda(c, s * x, LambdaMode::Max).value == s * hi,
                  "homogeneity");
        o.require(lambda(c, x + y, LambdaMode::Min).value <= lo + lambda(c, y, LambdaMode::Min).value, "subadditivity");
        o.require(lambda(c, x + y, LambdaMode::Max).value >= hi + lambda(c, y, LambdaMode::Max).value,
                  "superadditivity");
        ++pairs;
    }
    o.note(std::to_string(pairs) + " (cone, point) pairs");
    return o;
}

Outcome lemma_suites() {
    Outcome o;
    std::size_t l1 = 0;
    for (const auto& inst : theorem2_pool().instances) {
        auto r = check_lemma1(inst);
        o.require(r.verdict == Verdict::Holds, inst.label + " Lemma 1");
        ++l1;
    }
    std::size_t l3 = 0, l4 = 0, nonregular = 0;
    for (std::size_t dim : {2, 3})
        for (std::uint64_t seed = 0; seed < (dim == 2 ? 60u : 20u); ++seed) {
            Instance inst = random_instance(dim, 2000 + seed);
            for (std::size_t s = 0; s < inst.fan.num_cones(); ++s) {
                auto r3 = check_lemma3(inst, s, 5);
                o.require(r3.verdict != Verdict::Falsified, inst.label + " Lemma 3 cone " + std::to_string(s));
                if (r3.verdict == Verdict::Holds) ++l3;
                auto r4 = check_lemma4(inst, s);
                o.require(r4.verdict != Verdict::Falsified, inst.label + " Lemma 4 cone " + std::to_string(s));
                if (!classify(inst.fan.cone(s)).regular) ++nonregular;
                if (r4.verdict == Verdict::Holds) {
                    ++l4;
                    // The bound itself, recomputed with the vertex oracle.
                    auto lmin = lambda_oracle(inst.fan.dual(s), require_local_data(inst.fan, inst.Dprime)[s], LambdaMode::Min);
                    o.require(*lmin <= Rat(static_cast<long>(dim) - 1), inst.label + " lambda_min <= n - 1");
                }
            }
        }
    o.require(l3 >= 50, "Lemma 3 on at least 50 cones");
    o.require(l4 >= 50, "Lemma 4 on at least 50 non-regular cones");
    o.note("Lemma 1: " + std::to_string(l1) + " instances; Lemma 3: " + std::to_string(l3) + " cones; Lemma 4: " +
           std::to_string(l4) + " of " + std::to_string(nonregular) + " non-regular cones");
    return o;
}

Outcome intro_family() {
    Outcome o;
    const std::vector<std::vector<LatticeVector>> families{
        {mv({1, 0}), mv({0, 1})},
        {mv({1, 0}), mv({1, 2})},
        {mv({1, 0}), mv({1, 3})},
        {mv({2, 1}), mv({1, 3})},
        {mv({1, 0, 0}), mv({0, 1, 0}), mv({0, 0, 1})},
        {mv({1, 0, 0}), mv({0, 1, 0}), mv({1, 1, 2})},
        {mv({1, 0, 0}), mv({0, 1, 0}), mv({1, 2, 3})},
    };
    for (const auto& us : families) {
        const long n = static_cast<long>(us.size());
        Instance inst = intro_simplex(us, n + 1);
        const std::size_t sigma = *inst.focus;
        const Fan& f = inst.fan;
        auto ld = require_local_data(f, inst.D + inst.Dprime);
        auto t = translated_polytope(polytope(f, inst.D + inst.Dprime), ld, sigma);
        auto pts = lattice_points(t);
        auto g = generates(pts, hilbert_basis(f.dual(sigma)));
        o.require(g.generates, inst.label + " generates on sigma");
        for (const auto& h : hilbert_basis_oracle(f.dual(sigma)))
            o.require(pts.contains(h), inst.label + " contains oracle Hilbert element " + str(h));
        o.require(cone_diagnostics(inst, sigma).lambda_min <= Rat(n), inst.label + " lambda(u'_sigma) <= n");
    }
    o.note(std::to_string(families.size()) + " simplices");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "P(1,1,2) wall values", 1, weighted_plane},
        {2, "Ewald-Wessels simplex", 5, ewald_wessels},
        {3, "wall identities and edge lengths", 60, wall_identities},
        {4, "Proposition fuzz", 120, proposition_fuzz},
        {5, "Theorem 2 end to end", 300, theorem2_suite},
        {6, "Fujino+ and Corollary fuzz", 120, fujino_corollary},
        {7, "sharpness on P2", 10, sharpness},
        {8, "lambda oracle equivalence", 60, lambda_oracle_suite},
        {9, "Lemma 1, 3, 4 suites", 300, lemma_suites},
        {10, "intro simplex family", 10, intro_family},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            o.notes.push_back("exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        }
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << secs;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << time.str() << " s)";
        std::size_t shown = 0;
        for (const auto& n : o.notes) {
            if (shown++ == 6) {
                std::cout << "; ...";
                break;
            }
            std::cout << "; " << n;
        }
        std::cout << "\n";
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
