#include "toricva/harness.hpp"

#include <random>

namespace toricva {

namespace {

struct Data {
    std::optional<LocalData> d, dp, sum;
};

Data prepare(const Instance& inst) {
    Data out;
    if (auto r = local_data(inst.fan, inst.D); auto* ld = std::get_if<LocalData>(&r)) out.d = std::move(*ld);
    if (auto r = local_data(inst.fan, inst.Dprime); auto* ld = std::get_if<LocalData>(&r)) out.dp = std::move(*ld);
    if (out.d && out.dp) out.sum = require_local_data(inst.fan, inst.D + inst.Dprime);
    return out;
}

CheckReport start(const char* statement, const Instance& inst) {
    CheckReport r;
    r.statement = statement;
    r.label = inst.label;
    return r;
}

void add(CheckReport& r, std::string name, bool holds, std::string detail = {}) {
    r.hypotheses.push_back({std::move(name), holds, std::move(detail)});
}

void finish(CheckReport& r) {
    for (const auto& h : r.hypotheses)
        if (!h.holds) {
            r.verdict = Verdict::NotApplicable;
            r.reason = h.detail.empty() ? h.name : h.name + " (" + h.detail + ")";
            return;
        }
    if (!r.conclusion) throw InvariantError("conclusion not computable although hypotheses hold");
    r.verdict = *r.conclusion ? Verdict::Holds : Verdict::Falsified;
}

// Hypotheses shared by the global statements; `bound` is the required minimum of D . C.
void global_hypotheses(CheckReport& r, const Instance& inst, const Data& data, const Rat& bound,
                       bool exclude_projective_space) {
    add(r, "complete", true);
    if (exclude_projective_space) add(r, "not projective space", !is_projective_space(inst.fan));
    add(r, "D Q-Cartier", data.d.has_value());
    add(r, "D' Q-Cartier", data.dp.has_value());
    add(r, "0 >= D' >= K_X", dprime_in_range(inst.fan, inst.Dprime));
    if (data.d) {
        Rat w = min_wall_value(inst.fan, *data.d);
        add(r, "D.C >= " + to_string(bound), w >= bound, "min D.C = " + to_string(w));
    } else {
        add(r, "D.C >= " + to_string(bound), false, "D not Q-Cartier");
    }
}

void add_diagnostics(CheckReport& r, const Instance& inst, const Data& data) {
    if (!data.d || !data.dp) return;
    for (std::size_t s = 0; s < inst.fan.num_cones(); ++s) r.cones.push_back(cone_diagnostics(inst, s));
}

void nef_conclusion(CheckReport& r, const Instance& inst, const Data& data) {
    if (!data.sum) return;
    bool nef = true;
    for (const auto& w : inst.fan.walls()) {
        Rat v = wall_intersection(inst.fan, *data.sum, w);
        if (v < 0) {
            nef = false;
            r.witnesses.push_back({"negative wall", w.sigma, to_rat(inst.fan.rays()[w.wall_rays.front()]), v});
        }
    }
    r.conclusion = nef;
}

std::optional<RatVector> dual_point(const Instance& inst, const LocalData& ldp, std::size_t sigma) {
    if (!contains(inst.fan.dual(sigma), ldp[sigma])) return std::nullopt;
    return ldp[sigma];
}

void check_sigma(const Fan& f, std::size_t sigma) {
    if (sigma >= f.num_cones()) throw Error("cone index out of range");
}

Fan simplex_fan(std::size_t n) {
    std::vector<LatticeVector> rays{LatticeVector(Lattice::N, std::vector<Integer>(n, Integer(-1)))};
    for (std::size_t i = 0; i < n; ++i) rays.push_back(LatticeVector::unit(Lattice::N, n, i));
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t skip = 0; skip <= n; ++skip) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(std::move(c));
    }
    return build_fan(std::move(cones), std::move(rays), n);
}

TDivisor unit_divisor(std::size_t size, std::size_t i, const Rat& c) {
    TDivisor d{std::vector<Rat>(size, Rat(0))};
    d.coeffs[i] = c;
    return d;
}

TDivisor support_divisor(const PolytopeFan& pf) {
    TDivisor d;
    for (const auto& s : pf.support) d.coeffs.emplace_back(s);
    return d;
}

std::size_t origin_cone(const PolytopeFan& pf) {
    for (std::size_t i = 0; i < pf.vertices.size(); ++i)
        if (pf.vertices[i].is_zero()) return i;
    throw InvariantError("origin is not a vertex");
}

std::string rat_list(const std::vector<Rat>& v) {
    std::string s;
    for (const auto& q : v) s += (s.empty() ? "" : ",") + to_string(q);
    return s;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Falsified: return "falsified";
        case Verdict::NotApplicable: return "not applicable";
    }
    return "";
}

bool is_projective_space(const Fan& f) {
    const std::size_t n = f.rank();
    if (f.rays().size() != n + 1 || f.num_cones() != n + 1) return false;
    LatticeVector sum = LatticeVector::zero(Lattice::N, n);
    for (const auto& r : f.rays()) sum += r;
    if (!sum.is_zero()) return false;
    for (std::size_t s = 0; s < f.num_cones(); ++s) {
        if (f.cone_rays(s).size() != n) return false;
        std::vector<LatticeVector> rows;
        for (auto i : f.cone_rays(s)) rows.push_back(f.rays()[i]);
        if (abs(determinant(rows)) != 1) return false;
    }
    return true;
}

ConeDiagnostics cone_diagnostics(const Instance& inst, std::size_t sigma) {
    check_sigma(inst.fan, sigma);
    ConeDiagnostics c;
    c.cone = sigma;
    auto mins = cone_minima(inst.fan, inst.D, inst.Dprime, sigma);
    c.t = mins.t;
    c.m = mins.m;
    c.regular = classify(inst.fan.cone(sigma)).regular;
    auto ldp = require_local_data(inst.fan, inst.Dprime);
    if (auto u = dual_point(inst, ldp, sigma)) {
        c.lambda_min = lambda(inst.fan.dual(sigma), *u, LambdaMode::Min).value;
        c.lambda_max = lambda(inst.fan.dual(sigma), *u, LambdaMode::Max).value;
    }
    return c;
}

CheckReport check_theorem2(const Instance& inst) {
    auto r = start("theorem2", inst);
    auto data = prepare(inst);
    const std::size_t n = inst.fan.rank();
    global_hypotheses(r, inst, data, Rat(static_cast<long>(n) + 1), true);
    add_diagnostics(r, inst, data);
    if (data.sum) {
        const auto& f = inst.fan;
        auto p = polytope(f, inst.D + inst.Dprime);
        bool all = true;
        for (std::size_t s = 0; s < f.num_cones(); ++s) {
            auto pts = lattice_points(translated_polytope(p, *data.sum, s));
            const auto& dual = f.dual(s);
            bool inside = true;
            for (const auto& q : pts.points)
                if (!contains(dual, q)) {
                    r.witnesses.push_back({"point outside dual cone", s, to_rat(q), std::nullopt});
                    inside = false;
                    break;
                }
            if (!inside) {
                all = false;
                continue;
            }
            auto g = generates(pts, hilbert_basis(dual));
            if (!g.generates) {
                all = false;
                r.witnesses.push_back({"missing Hilbert basis element", s, to_rat(*g.missing), std::nullopt});
            }
        }
        r.conclusion = all;
        bool cartier = true;
        for (const auto& u : data.sum->u) cartier = cartier && is_integral(u);
        if (cartier) r.very_ample = all;
    }
    finish(r);
    return r;
}

CheckReport check_fujino_plus(const Instance& inst) {
    auto r = start("fujino", inst);
    auto data = prepare(inst);
    global_hypotheses(r, inst, data, Rat(static_cast<long>(inst.fan.rank())), true);
    add_diagnostics(r, inst, data);
    nef_conclusion(r, inst, data);
    finish(r);
    return r;
}

CheckReport check_corollary(const Instance& inst) {
    auto r = start("corollary", inst);
    auto data = prepare(inst);
    global_hypotheses(r, inst, data, Rat(static_cast<long>(inst.fan.rank()) + 1), false);
    add_diagnostics(r, inst, data);
    nef_conclusion(r, inst, data);
    finish(r);
    return r;
}

CheckReport check_proposition(const Instance& inst, std::size_t sigma, std::optional<Rat> r_local) {
    const auto& f = inst.fan;
    check_sigma(f, sigma);
    auto ld = require_local_data(f, inst.D);
    auto ldp = require_local_data(f, inst.Dprime);
    if (!is_nef(f, ld)) throw Error("Proposition requires nef D");

    auto r = start("proposition", inst);
    Rat radius = r_local.value_or(Rat(1));
    if (!r_local) {
        add(r, "0 >= D' >= K_X", dprime_in_range(f, inst.Dprime));
    } else {
        add(r, "r > 0", radius > 0, "r = " + to_string(radius));
        bool minus_effective = true;
        for (auto i : f.cone_rays(sigma)) minus_effective = minus_effective && inst.Dprime[i] <= 0;
        add(r, "D' minus-effective on sigma", minus_effective);
        bool adjacent = true;
        for (const auto& w : walls_of_cone(f, sigma)) {
            bool some = false;
            for (auto j : w.v_candidates) some = some || inst.Dprime[j] >= -radius;
            adjacent = adjacent && some;
        }
        add(r, "d'_j >= -r across every wall", adjacent);
    }

    auto diag = cone_diagnostics(inst, sigma);
    r.cones.push_back(diag);
    if (diag.lambda_min) {
        add(r, "t >= lambda_min(u'_sigma)", diag.t >= *diag.lambda_min,
            "t = " + to_string(diag.t) + ", lambda_min = " + to_string(*diag.lambda_min));
        Rat bound = diag.t - *diag.lambda_min - radius;
        r.conclusion = diag.m >= bound;
        r.witnesses.push_back({"m", sigma, std::nullopt, diag.m});
        r.witnesses.push_back({"t - lambda_min - r", sigma, std::nullopt, bound});
    } else {
        add(r, "u'_sigma in dual cone", false);
    }
    finish(r);
    return r;
}

CheckReport check_lemma1(const Instance& inst) {
    auto r = start("lemma1", inst);
    auto data = prepare(inst);
    global_hypotheses(r, inst, data, Rat(static_cast<long>(inst.fan.rank()) + 1), true);
    if (data.sum) {
        const auto& f = inst.fan;
        auto p = polytope(f, inst.D + inst.Dprime);
        bool all = true;
        for (std::size_t s = 0; s < f.num_cones(); ++s) {
            auto t = translated_polytope(p, *data.sum, s);
            std::vector<RatVector> wanted{RatVector::zero(Lattice::M, f.rank())};
            for (const auto& u : f.dual(s).rays()) wanted.push_back(to_rat(u));
            for (const auto& w : wanted)
                if (!t.contains(w)) {
                    all = false;
                    r.witnesses.push_back({"point missing from translated polytope", s, w, std::nullopt});
                }
        }
        r.conclusion = all;
    }
    finish(r);
    return r;
}

CheckReport check_lemma3(const Instance& inst, std::size_t sigma, int bound) {
    const auto& f = inst.fan;
    check_sigma(f, sigma);
    auto r = start("lemma3", inst);
    auto ldp = local_data(f, inst.Dprime);
    auto* lp = std::get_if<LocalData>(&ldp);
    add(r, "D' Q-Cartier", lp != nullptr);
    add(r, "0 >= D' >= K_X", dprime_in_range(f, inst.Dprime));
    if (lp) {
        if (auto u = dual_point(inst, *lp, sigma)) {
            const auto& dual = f.dual(sigma);
            Rat lhs = lambda(dual, *u, LambdaMode::Max).value;
            r.witnesses.push_back({"lambda_max(u'_sigma)", sigma, *u, lhs});
            bool all = true;
            std::optional<Witness> lowest;
            const std::size_t n = f.rank();
            LatticeVector p = LatticeVector::zero(Lattice::M, n);
            for (auto& c : p.coords) c = -bound;
            while (true) {
                if (contains(dual, p, true)) {
                    Rat v = lambda(dual, to_rat(p), LambdaMode::Max).value;
                    if (!lowest || v < *lowest->value) lowest = Witness{"smallest interior lambda_max", sigma, to_rat(p), v};
                    if (lhs > v) {
                        all = false;
                        r.witnesses.push_back({"interior point below lambda_max(u'_sigma)", sigma, to_rat(p), v});
                    }
                }
                std::size_t i = 0;
                while (i < n && p[i] == bound) {
                    p[i] = -bound;
                    ++i;
                }
                if (i == n) break;
                ++p[i];
            }
            if (lowest) r.witnesses.push_back(*lowest);
            r.conclusion = all;
        } else {
            add(r, "u'_sigma in dual cone", false);
        }
    }
    finish(r);
    return r;
}

CheckReport check_lemma4(const Instance& inst, std::size_t sigma) {
    const auto& f = inst.fan;
    check_sigma(f, sigma);
    auto r = start("lemma4", inst);
    add(r, "sigma not regular", !classify(f.cone(sigma)).regular);
    auto ldp = local_data(f, inst.Dprime);
    auto* lp = std::get_if<LocalData>(&ldp);
    add(r, "D' Q-Cartier", lp != nullptr);
    add(r, "0 >= D' >= K_X", dprime_in_range(f, inst.Dprime));
    if (lp) {
        if (auto u = dual_point(inst, *lp, sigma)) {
            Rat lo = lambda(f.dual(sigma), *u, LambdaMode::Min).value;
            r.witnesses.push_back({"lambda_min(u'_sigma)", sigma, *u, lo});
            r.conclusion = lo <= Rat(static_cast<long>(f.rank()) - 1);
        } else {
            add(r, "u'_sigma in dual cone", false);
        }
    }
    finish(r);
    return r;
}

Instance projective_space(std::size_t n, const Rat& t) {
    if (n == 0) throw Error("projective space needs n >= 1");
    Instance inst{simplex_fan(n), {}, {}, "projective_space(" + std::to_string(n) + "," + to_string(t) + ")", {}};
    inst.D = unit_divisor(n + 1, 0, t);
    inst.Dprime = canonical_divisor(inst.fan);
    return inst;
}

Instance weighted_112() {
    Fan f = build_fan({{0, 1}, {1, 2}, {2, 0}},
                      {lattice_vector(Lattice::N, {1, 1}), lattice_vector(Lattice::N, {-1, 1}),
                       lattice_vector(Lattice::N, {0, -1})},
                      2);
    Instance inst{std::move(f), unit_divisor(3, 0, 1), {}, "weighted_112", 1};
    inst.Dprime = canonical_divisor(inst.fan);
    return inst;
}

Instance hirzebruch(long a, std::vector<Rat> coeffs) {
    if (coeffs.size() != 4) throw Error("hirzebruch needs 4 coefficients");
    Fan f = build_fan({{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                      {lattice_vector(Lattice::N, {1, 0}), lattice_vector(Lattice::N, {0, 1}),
                       lattice_vector(Lattice::N, {-1, a}), lattice_vector(Lattice::N, {0, -1})},
                      2);
    Instance inst{std::move(f), TDivisor{coeffs}, {}, "hirzebruch(" + std::to_string(a) + ",[" + rat_list(coeffs) + "])", {}};
    inst.Dprime = canonical_divisor(inst.fan);
    return inst;
}

Instance intro_simplex(const std::vector<LatticeVector>& us, const Rat& t) {
    if (us.empty()) throw Error("intro_simplex needs vectors");
    const std::size_t n = us.front().rank();
    if (us.size() != n) throw Error("intro_simplex needs exactly n vectors");
    std::vector<LatticeVector> pts{LatticeVector::zero(Lattice::M, n)};
    for (auto u : us) {
        if (u.rank() != n) throw Error("intro_simplex vectors have mixed ranks");
        u.ambient = Lattice::M;
        if (u.is_zero() || primitivize(u) != u) throw Error("intro_simplex vectors must be primitive");
        pts.push_back(std::move(u));
    }
    if (determinant(std::vector(pts.begin() + 1, pts.end())) == 0)
        throw Error("intro_simplex vectors must be linearly independent");
    auto pf = normal_fan(pts);
    const std::size_t sigma = origin_cone(pf);
    Instance inst;
    inst.D = t * support_divisor(pf);
    inst.Dprime = TDivisor{std::vector<Rat>(pf.fan.rays().size(), Rat(0))};
    for (auto i : pf.fan.cone_rays(sigma)) inst.Dprime.coeffs[i] = -1;
    inst.fan = std::move(pf.fan);
    inst.focus = sigma;
    std::string label = "intro_simplex([";
    for (std::size_t i = 0; i < us.size(); ++i) {
        label += i ? ",[" : "[";
        for (std::size_t k = 0; k < n; ++k) label += (k ? "," : "") + to_string(us[i][k]);
        label += "]";
    }
    inst.label = label + "]," + to_string(t) + ")";
    return inst;
}

Instance ew_simplex(const Rat& t) {
    auto inst = intro_simplex({lattice_vector(Lattice::M, {1, 0, 0}), lattice_vector(Lattice::M, {0, 1, 0}),
                               lattice_vector(Lattice::M, {1, 1, 2})},
                              t);
    inst.Dprime = canonical_divisor(inst.fan);
    inst.label = "ew_simplex(" + to_string(t) + ")";
    return inst;
}

Instance product_p1(const Rat& a, const Rat& b) {
    Fan f = build_fan({{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                      {lattice_vector(Lattice::N, {1, 0}), lattice_vector(Lattice::N, {0, 1}),
                       lattice_vector(Lattice::N, {-1, 0}), lattice_vector(Lattice::N, {0, -1})},
                      2);
    Instance inst{std::move(f), TDivisor{{0, 0, a, b}}, {}, "product_p1(" + to_string(a) + "," + to_string(b) + ")", {}};
    inst.Dprime = canonical_divisor(inst.fan);
    return inst;
}

Instance quadric_cone() {
    std::vector<LatticeVector> pts;
    for (auto c : std::vector<std::vector<long>>{
             {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {-1, -1, -1}, {-1, -1, 2}, {1, -2, 0}, {-2, 1, 0}}) {
        LatticeVector v = LatticeVector::zero(Lattice::N, 3);
        for (std::size_t i = 0; i < 3; ++i) v[i] = c[i];
        pts.push_back(std::move(v));
    }
    Fan ff = face_fan(pts);
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t c = 0; c < ff.num_cones(); ++c) {
        if (ff.cone(c).rays().size() == 4)
            cones.insert(cones.begin(), ff.cone_rays(c));
        else
            cones.push_back(ff.cone_rays(c));
    }
    Fan f = build_fan(std::move(cones), ff.rays(), 3);
    Instance inst{std::move(f), {}, {}, "quadric_cone", 0};
    inst.D = TDivisor{std::vector<Rat>(inst.fan.rays().size(), Rat(0))};
    inst.Dprime = canonical_divisor(inst.fan);
    return inst;
}

Instance random_instance(std::size_t dim, std::uint64_t seed, const RandomConfig& cfg) {
    if (dim < 1 || dim > 3) throw Error("random instances support dimension 1 to 3");
    if (cfg.max_pts < static_cast<int>(dim) + 1) throw Error("max_pts must exceed the dimension");
    if (cfg.max_den < 1 || cfg.box < 1) throw Error("invalid random configuration");
    std::mt19937_64 eng(seed);
    auto uniform = [&](long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    const Rat target = cfg.target_t.value_or(Rat(static_cast<long>(dim) + 1));

    for (int attempt = 0; attempt < cfg.retries; ++attempt) {
        const int npts = static_cast<int>(uniform(static_cast<long>(dim) + 1, cfg.max_pts));
        std::vector<LatticeVector> pts;
        for (int k = 0; k < npts; ++k) {
            LatticeVector v = LatticeVector::zero(Lattice::M, dim);
            for (auto& c : v.coords) c = uniform(0, cfg.box);
            pts.push_back(std::move(v));
        }
        std::optional<PolytopeFan> pf;
        try {
            pf = normal_fan(pts);
        } catch (const Error&) {
            continue;
        }
        const Fan& f = pf->fan;
        const std::size_t nrays = f.rays().size();
        TDivisor base = support_divisor(*pf);
        Rat w = min_wall_value(f, require_local_data(f, base));
        Rat scale = target / w;
        if (uniform(0, 1) == 1) scale = Rat(ceil(scale));

        Instance inst;
        inst.D = scale * base;
        const long mode = uniform(0, 5);
        TDivisor zero{std::vector<Rat>(nrays, Rat(0))};
        if (mode == 0 && is_q_cartier(f, canonical_divisor(f))) {
            inst.Dprime = canonical_divisor(f);
        } else if (mode == 1) {
            inst.Dprime = zero;
        } else if (f.is_simplicial()) {
            const long den = uniform(1, cfg.max_den);
            inst.Dprime = zero;
            for (auto& c : inst.Dprime.coeffs) c = make_rat(-uniform(0, den), den);
        } else {
            // Minus a rescaled, translated polytope divisor: Q-Cartier with coefficients in [-1, 0].
            auto lp = lattice_points(polytope(f, base));
            const auto& u = lp.points[static_cast<std::size_t>(uniform(0, static_cast<long>(lp.size()) - 1))];
            std::vector<Integer> e;
            Integer top = 0;
            for (std::size_t i = 0; i < nrays; ++i) {
                e.push_back(pf->support[i] + pair(u, f.rays()[i]));
                top = std::max(top, e.back());
            }
            Integer denom = top + uniform(0, cfg.max_den - 1);
            inst.Dprime = zero;
            for (std::size_t i = 0; i < nrays; ++i) inst.Dprime.coeffs[i] = make_rat(-e[i], denom);
        }
        inst.fan = f;
        inst.label = "random(" + std::to_string(dim) + "," + std::to_string(seed) + ")";
        return inst;
    }
    throw Error("degenerate sample after " + std::to_string(cfg.retries) + " retries");
}

}  // namespace toricva
