#include "toricva/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace toricva {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
    }
}

Integer integer_at(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                              : Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            Rat q = parse_rat(j.get<std::string>());
            if (is_integer(q)) return q.get_num();
        } catch (const Error&) {
        }
    }
    fail(where, "expected an integer");
}

std::size_t index_at(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(where, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

Rat rational_at(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(integer_at(j, where));
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const Error& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

const Json& array_at(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

Json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json rat_json(const Rat& q) { return to_string(q); }

Rat rat_from(const Json& j) { return rational_at(j, "report"); }

template <class T>
Json vec_json(const Vec<T>& v) {
    Json a = Json::array();
    for (const auto& c : v.coords) a.push_back(to_string(c));
    return a;
}

RatVector rat_vec_from(const Json& j, Lattice l) {
    RatVector v(l, {});
    for (const auto& c : j) v.coords.push_back(rat_from(c));
    return v;
}

LatticeVector lattice_vec_from(const Json& j, Lattice l) {
    LatticeVector v(l, {});
    for (const auto& c : j) v.coords.push_back(integer_at(c, "report"));
    return v;
}

template <class T, class Fn>
Json array_of(const std::vector<T>& xs, Fn&& fn) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(fn(x));
    return a;
}

template <class T, class Fn>
std::vector<T> vector_from(const Json& j, Fn&& fn) {
    std::vector<T> out;
    for (const auto& x : j) out.push_back(fn(x));
    return out;
}

template <class T, class Fn>
void put_opt(Json& j, const char* key, const std::optional<T>& v, Fn&& fn) {
    if (v) j[key] = fn(*v);
}

template <class T, class Fn>
std::optional<T> get_opt(const Json& j, const char* key, Fn&& fn) {
    if (!j.contains(key)) return std::nullopt;
    return fn(j.at(key));
}

auto id_json = [](const auto& x) { return Json(x); };
auto bool_from = [](const Json& j) { return j.get<bool>(); };
auto size_from = [](const Json& j) { return j.get<std::size_t>(); };
auto string_from = [](const Json& j) { return j.get<std::string>(); };

}  // namespace

InputDocument parse_input(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object()) fail("document", "expected an object");
    for (const auto& [key, value] : j.items())
        if (key != "rank" && key != "rays" && key != "max_cones" && key != "divisors" && key != "options")
            fail(key, "unknown field");
    for (const char* key : {"rank", "rays", "max_cones"})
        if (!j.contains(key)) fail(key, "missing field");

    InputDocument doc;
    doc.rank = index_at(j["rank"], "rank");
    if (doc.rank == 0) fail("rank", "must be positive");
    const auto& rays = array_at(j["rays"], "rays");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        const std::string where = "rays[" + std::to_string(i) + "]";
        const auto& r = array_at(rays[i], where);
        if (r.size() != doc.rank) fail(where, "expected " + std::to_string(doc.rank) + " entries");
        LatticeVector v(Lattice::N, {});
        for (std::size_t k = 0; k < r.size(); ++k) v.coords.push_back(integer_at(r[k], where + "[" + std::to_string(k) + "]"));
        doc.rays.push_back(std::move(v));
    }
    const auto& cones = array_at(j["max_cones"], "max_cones");
    for (std::size_t s = 0; s < cones.size(); ++s) {
        const std::string where = "max_cones[" + std::to_string(s) + "]";
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < array_at(cones[s], where).size(); ++k) {
            const std::string at = where + "[" + std::to_string(k) + "]";
            std::size_t i = index_at(cones[s][k], at);
            if (i >= doc.rays.size()) fail(at, "ray index out of range");
            idx.push_back(i);
        }
        doc.max_cones.push_back(std::move(idx));
    }
    if (j.contains("divisors")) {
        if (!j["divisors"].is_object()) fail("divisors", "expected an object");
        for (const auto& [name, coeffs] : j["divisors"].items()) {
            const std::string where = "divisors." + name;
            if (!valid_name(name) || name == "K") fail(where, "invalid divisor name");
            const auto& arr = array_at(coeffs, where);
            if (arr.size() != doc.rays.size()) fail(where, "expected one coefficient per ray");
            std::vector<Rat> cs;
            for (std::size_t k = 0; k < arr.size(); ++k) cs.push_back(rational_at(arr[k], where + "[" + std::to_string(k) + "]"));
            doc.divisors[name] = std::move(cs);
        }
    }
    if (j.contains("options")) {
        if (!j["options"].is_object()) fail("options", "expected an object");
        doc.options = j["options"];
    }
    return doc;
}

InputDocument read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_input(ss.str());
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json to_json(const InputDocument& doc) {
    Json j;
    j["rank"] = doc.rank;
    j["rays"] = array_of(doc.rays, [](const LatticeVector& v) { return array_of(v.coords, integer_json); });
    j["max_cones"] = doc.max_cones;
    Json divs = Json::object();
    for (const auto& [name, cs] : doc.divisors)
        divs[name] = array_of(cs, [](const Rat& q) { return is_integer(q) ? integer_json(q.get_num()) : Json(to_string(q)); });
    j["divisors"] = divs;
    j["options"] = doc.options;
    return j;
}

InputDocument input_from_instance(const Instance& inst) {
    InputDocument doc;
    doc.rank = inst.fan.rank();
    doc.rays = inst.fan.rays();
    for (std::size_t s = 0; s < inst.fan.num_cones(); ++s) doc.max_cones.push_back(inst.fan.cone_rays(s));
    doc.divisors["D"] = inst.D.coeffs;
    doc.divisors["Dprime"] = inst.Dprime.coeffs;
    doc.options["label"] = inst.label;
    if (inst.focus) doc.options["sigma"] = *inst.focus;
    return doc;
}

Fan build_fan(const InputDocument& doc) {
    try {
        return build_fan(doc.max_cones, doc.rays, doc.rank);
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(std::string("fan: ") + e.what());
    }
}

TDivisor resolve_divisor(const InputDocument& doc, const Fan& f, std::string_view expr) {
    const std::string where = "divisor expression \"" + std::string(expr) + "\"";
    TDivisor total{std::vector<Rat>(f.rays().size(), Rat(0))};
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    bool first = true;
    skip();
    if (pos == expr.size()) fail(where, "empty");
    while (pos < expr.size()) {
        Rat sign = 1;
        if (expr[pos] == '+' || expr[pos] == '-') {
            if (expr[pos] == '-') sign = -1;
            ++pos;
            skip();
        } else if (!first) {
            fail(where, "expected + or -");
        }
        first = false;
        Rat coeff = 1;
        std::size_t start = pos;
        while (pos < expr.size() && (std::isdigit(static_cast<unsigned char>(expr[pos])) || expr[pos] == '/')) ++pos;
        if (pos > start) {
            try {
                coeff = parse_rat(expr.substr(start, pos - start));
            } catch (const Error& e) {
                fail(where, e.what());
            }
            skip();
            if (pos < expr.size() && expr[pos] == '*') {
                ++pos;
                skip();
            }
        }
        start = pos;
        while (pos < expr.size() &&
               (std::isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_' || expr[pos] == '\''))
            ++pos;
        std::string name(expr.substr(start, pos - start));
        if (name.empty()) fail(where, "expected a divisor name at position " + std::to_string(start));
        TDivisor term;
        if (auto it = doc.divisors.find(name); it != doc.divisors.end()) {
            term = TDivisor{it->second};
        } else if (name == "K") {
            term = canonical_divisor(f);
        } else if (name.size() > 1 && name[0] == 'D' &&
                   std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            std::size_t i = std::stoul(name.substr(1));
            if (i == 0 || i > f.rays().size()) fail(where, name + " is out of range (rays are D1..D" + std::to_string(f.rays().size()) + ")");
            term = TDivisor{std::vector<Rat>(f.rays().size(), Rat(0))};
            term.coeffs[i - 1] = 1;
        } else {
            fail(where, "unknown divisor " + name);
        }
        total = total + (sign * coeff) * term;
        skip();
    }
    return total;
}

Instance builtin(std::string_view spec) {
    const std::string where = "builtin \"" + std::string(spec) + "\"";
    std::string name(spec.substr(0, spec.find('(')));
    Json args = Json::array();
    if (name.size() < spec.size()) {
        if (spec.back() != ')') fail(where, "expected a closing parenthesis");
        std::string inner(spec.substr(name.size() + 1, spec.size() - name.size() - 2));
        try {
            args = Json::parse("[" + inner + "]");
        } catch (const Json::parse_error&) {
            fail(where, "arguments are not valid");
        }
    }
    auto arg_count = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) fail(where, "wrong number of arguments");
    };
    auto rat_arg = [&](std::size_t i) { return rational_at(args[i], where + " argument " + std::to_string(i + 1)); };
    auto long_arg = [&](std::size_t i) {
        Integer z = integer_at(args[i], where + " argument " + std::to_string(i + 1));
        if (!z.fits_slong_p()) fail(where, "argument too large");
        return z.get_si();
    };
    try {
        if (name == "projective_space") {
            arg_count(2, 2);
            long n = long_arg(0);
            if (n < 1 || n > 6) fail(where, "dimension must be between 1 and 6");
            return projective_space(static_cast<std::size_t>(n), rat_arg(1));
        }
        if (name == "weighted_112") {
            arg_count(0, 0);
            return weighted_112();
        }
        if (name == "hirzebruch") {
            arg_count(1, 2);
            if (args.size() == 1) return hirzebruch(long_arg(0));
            std::vector<Rat> cs;
            for (const auto& c : array_at(args[1], where + " argument 2")) cs.push_back(rational_at(c, where));
            return hirzebruch(long_arg(0), std::move(cs));
        }
        if (name == "intro_simplex") {
            arg_count(2, 2);
            std::vector<LatticeVector> us;
            for (const auto& u : array_at(args[0], where + " argument 1")) {
                LatticeVector v(Lattice::M, {});
                for (const auto& c : array_at(u, where)) v.coords.push_back(integer_at(c, where));
                us.push_back(std::move(v));
            }
            return intro_simplex(us, rat_arg(1));
        }
        if (name == "ew_simplex") {
            arg_count(1, 1);
            return ew_simplex(rat_arg(0));
        }
        if (name == "product_p1") {
            arg_count(2, 2);
            return product_p1(rat_arg(0), rat_arg(1));
        }
        if (name == "random") {
            arg_count(2, 2);
            long dim = long_arg(0), seed = long_arg(1);
            if (seed < 0) fail(where, "seed must be nonnegative");
            return random_instance(static_cast<std::size_t>(dim), static_cast<std::uint64_t>(seed));
        }
        if (name == "quadric_cone") {
            arg_count(0, 0);
            return quadric_cone();
        }
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        fail(where, e.what());
    }
    fail(where, "unknown builtin " + name);
}

std::vector<std::string> builtin_examples() {
    return {"projective_space(2,3)", "weighted_112", "hirzebruch(1)", "intro_simplex([[1,0],[1,2]],3)",
            "ew_simplex(4)",          "product_p1(2,2)", "quadric_cone", "random(2,1)"};
}

InstanceEcho echo(const Fan& f, std::string label) {
    InstanceEcho e;
    e.label = std::move(label);
    e.rank = f.rank();
    e.rays = f.rays();
    for (std::size_t s = 0; s < f.num_cones(); ++s) e.max_cones.push_back(f.cone_rays(s));
    return e;
}

DivisorReport analyze_divisor(const Fan& f, std::string name, const TDivisor& d, bool very_ample) {
    DivisorReport rep;
    rep.name = std::move(name);
    rep.coeffs = d.coeffs;
    auto r = local_data(f, d);
    if (auto* bad = std::get_if<NotQCartier>(&r)) {
        rep.not_q_cartier_cone = bad->cone;
        return rep;
    }
    const auto& ld = std::get<LocalData>(r);
    rep.q_cartier = true;
    rep.u_sigma = ld.u;
    bool cartier = true;
    for (const auto& u : ld.u) cartier = cartier && is_integral(u);
    rep.cartier = cartier;
    bool nef = true;
    for (const auto& w : f.walls()) {
        Rat v = wall_intersection(f, ld, w);
        nef = nef && v >= 0;
        rep.walls.push_back({w.sigma, w.tau, w.wall_rays, v});
    }
    rep.nef = nef;
    if (!cartier) return rep;
    rep.basepoint_free = nef;
    if (!very_ample) return rep;
    auto p = polytope(f, d);
    bool all = true;
    for (std::size_t s = 0; s < f.num_cones(); ++s) {
        GenerationReport g;
        g.cone = s;
        auto pts = lattice_points(translated_polytope(p, ld, s));
        const auto& dual = f.dual(s);
        auto hb = hilbert_basis(dual);
        bool inside = true;
        for (const auto& q : pts.points) inside = inside && contains(dual, q);
        if (inside) {
            auto res = generates(pts, hb);
            g.generates = res.generates;
            g.missing = res.missing;
        } else {
            // Outside points mean D is not nef here; report the first Hilbert basis element not reached.
            for (const auto& h : hb.elements.points)
                if (!pts.contains(h)) {
                    g.missing = h;
                    break;
                }
        }
        all = all && g.generates;
        rep.generation.push_back(std::move(g));
    }
    rep.very_ample = all;
    return rep;
}

ConeReport cone_report(const ConeDiagnostics& c) { return {c.cone, c.regular, c.t, c.m, c.lambda_min, c.lambda_max}; }

CheckEntry check_entry(const CheckReport& r) {
    CheckEntry e;
    e.statement = r.statement;
    e.label = r.label;
    for (const auto& h : r.hypotheses) e.hypotheses.push_back({h.name, h.holds, h.detail});
    e.conclusion = r.conclusion;
    e.verdict = to_string(r.verdict);
    e.reason = r.reason;
    for (const auto& w : r.witnesses) e.witnesses.push_back({w.kind, w.cone, w.point, w.value});
    for (const auto& c : r.cones) e.cones.push_back(cone_report(c));
    e.very_ample = r.very_ample;
    return e;
}

HilbertReport hilbert_report(const Fan& f, std::size_t sigma, const std::optional<std::pair<std::string, TDivisor>>& d) {
    if (sigma >= f.num_cones()) throw InputError("cone " + std::to_string(sigma) + " does not exist");
    HilbertReport h;
    h.cone = sigma;
    h.dual_rays = f.dual(sigma).rays();
    h.basis = hilbert_basis(f.dual(sigma)).elements.points;
    if (d) {
        h.divisor = d->first;
        auto ld = require_local_data(f, d->second);
        auto t = translated_polytope(polytope(f, d->second), ld, sigma);
        for (const auto& b : h.basis) h.present.push_back(t.contains(to_rat(b)));
    }
    return h;
}

namespace {

Json to_json(const WallReport& w) {
    return {{"sigma", w.sigma}, {"tau", w.tau}, {"wall_rays", w.wall_rays}, {"value", rat_json(w.value)}};
}

Json to_json(const GenerationReport& g) {
    Json j{{"cone", g.cone}, {"generates", g.generates}};
    put_opt(j, "missing", g.missing, vec_json<Integer>);
    return j;
}

Json to_json(const DivisorReport& d) {
    Json j{{"name", d.name}, {"coeffs", array_of(d.coeffs, rat_json)}, {"q_cartier", d.q_cartier}};
    put_opt(j, "not_q_cartier_cone", d.not_q_cartier_cone, id_json);
    put_opt(j, "cartier", d.cartier, id_json);
    put_opt(j, "nef", d.nef, id_json);
    put_opt(j, "basepoint_free", d.basepoint_free, id_json);
    put_opt(j, "very_ample", d.very_ample, id_json);
    j["u_sigma"] = array_of(d.u_sigma, vec_json<Rat>);
    j["walls"] = array_of(d.walls, [](const WallReport& w) { return to_json(w); });
    j["generation"] = array_of(d.generation, [](const GenerationReport& g) { return to_json(g); });
    return j;
}

Json to_json(const ConeReport& c) {
    Json j{{"cone", c.cone}, {"regular", c.regular}, {"t", rat_json(c.t)}, {"m", rat_json(c.m)}};
    put_opt(j, "lambda_min", c.lambda_min, rat_json);
    put_opt(j, "lambda_max", c.lambda_max, rat_json);
    return j;
}

Json to_json(const CheckEntry& e) {
    Json j{{"statement", e.statement}, {"label", e.label}, {"verdict", e.verdict}, {"reason", e.reason}};
    j["hypotheses"] = array_of(e.hypotheses, [](const HypothesisReport& h) {
        return Json{{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}};
    });
    put_opt(j, "conclusion", e.conclusion, id_json);
    j["witnesses"] = array_of(e.witnesses, [](const WitnessReport& w) {
        Json o{{"kind", w.kind}};
        put_opt(o, "cone", w.cone, id_json);
        put_opt(o, "point", w.point, vec_json<Rat>);
        if (w.point) o["point_lattice"] = w.point->ambient == Lattice::N ? "N" : "M";
        put_opt(o, "value", w.value, rat_json);
        return o;
    });
    j["cones"] = array_of(e.cones, [](const ConeReport& c) { return to_json(c); });
    put_opt(j, "very_ample", e.very_ample, id_json);
    return j;
}

ConeReport cone_from(const Json& j) {
    return {j.at("cone").get<std::size_t>(), j.at("regular").get<bool>(), rat_from(j.at("t")), rat_from(j.at("m")),
            get_opt<Rat>(j, "lambda_min", rat_from), get_opt<Rat>(j, "lambda_max", rat_from)};
}

}  // namespace

Json to_json(const ReportDocument& doc) {
    Json j;
    j["command"] = doc.command;
    j["instance"] = Json{{"label", doc.instance.label},
                         {"rank", doc.instance.rank},
                         {"rays", array_of(doc.instance.rays, vec_json<Integer>)},
                         {"max_cones", doc.instance.max_cones}};
    j["divisors"] = array_of(doc.divisors, [](const DivisorReport& d) { return to_json(d); });
    j["cones"] = array_of(doc.cones, [](const ConeReport& c) { return to_json(c); });
    j["checks"] = array_of(doc.checks, [](const CheckEntry& e) { return to_json(e); });
    if (doc.fuzz) {
        const auto& f = *doc.fuzz;
        j["fuzz"] = Json{{"statement", f.statement}, {"dim", f.dim},       {"seed", f.seed},
                         {"count", f.count},         {"holds", f.holds}, {"not_applicable", f.not_applicable},
                         {"falsified", f.falsified}};
    }
    if (doc.hilbert) {
        const auto& h = *doc.hilbert;
        Json o{{"cone", h.cone},
               {"dual_rays", array_of(h.dual_rays, vec_json<Integer>)},
               {"basis", array_of(h.basis, vec_json<Integer>)}};
        put_opt(o, "divisor", h.divisor, id_json);
        if (h.divisor) o["present"] = h.present;
        j["hilbert"] = o;
    }
    j["exit_status"] = doc.exit_status;
    return j;
}

ReportDocument report_from_json(const Json& j) {
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    const auto& in = j.at("instance");
    doc.instance.label = in.at("label").get<std::string>();
    doc.instance.rank = in.at("rank").get<std::size_t>();
    doc.instance.rays = vector_from<LatticeVector>(in.at("rays"), [](const Json& v) { return lattice_vec_from(v, Lattice::N); });
    doc.instance.max_cones = in.at("max_cones").get<std::vector<std::vector<std::size_t>>>();
    for (const auto& d : j.at("divisors")) {
        DivisorReport r;
        r.name = d.at("name").get<std::string>();
        r.coeffs = vector_from<Rat>(d.at("coeffs"), rat_from);
        r.q_cartier = d.at("q_cartier").get<bool>();
        r.not_q_cartier_cone = get_opt<std::size_t>(d, "not_q_cartier_cone", size_from);
        r.cartier = get_opt<bool>(d, "cartier", bool_from);
        r.nef = get_opt<bool>(d, "nef", bool_from);
        r.basepoint_free = get_opt<bool>(d, "basepoint_free", bool_from);
        r.very_ample = get_opt<bool>(d, "very_ample", bool_from);
        r.u_sigma = vector_from<RatVector>(d.at("u_sigma"), [](const Json& v) { return rat_vec_from(v, Lattice::M); });
        r.walls = vector_from<WallReport>(d.at("walls"), [](const Json& w) {
            return WallReport{w.at("sigma").get<std::size_t>(), w.at("tau").get<std::size_t>(),
                              w.at("wall_rays").get<std::vector<std::size_t>>(), rat_from(w.at("value"))};
        });
        r.generation = vector_from<GenerationReport>(d.at("generation"), [](const Json& g) {
            return GenerationReport{g.at("cone").get<std::size_t>(), g.at("generates").get<bool>(),
                                    get_opt<LatticeVector>(g, "missing", [](const Json& v) { return lattice_vec_from(v, Lattice::M); })};
        });
        doc.divisors.push_back(std::move(r));
    }
    doc.cones = vector_from<ConeReport>(j.at("cones"), cone_from);
    for (const auto& e : j.at("checks")) {
        CheckEntry c;
        c.statement = e.at("statement").get<std::string>();
        c.label = e.at("label").get<std::string>();
        c.verdict = e.at("verdict").get<std::string>();
        c.reason = e.at("reason").get<std::string>();
        c.hypotheses = vector_from<HypothesisReport>(e.at("hypotheses"), [](const Json& h) {
            return HypothesisReport{h.at("name").get<std::string>(), h.at("holds").get<bool>(), h.at("detail").get<std::string>()};
        });
        c.conclusion = get_opt<bool>(e, "conclusion", bool_from);
        c.witnesses = vector_from<WitnessReport>(e.at("witnesses"), [](const Json& w) {
            return WitnessReport{w.at("kind").get<std::string>(), get_opt<std::size_t>(w, "cone", size_from),
                                 get_opt<RatVector>(w, "point",
                                                    [&](const Json& v) {
                                                        return rat_vec_from(v, w.value("point_lattice", "M") == "N" ? Lattice::N : Lattice::M);
                                                    }),
                                 get_opt<Rat>(w, "value", rat_from)};
        });
        c.cones = vector_from<ConeReport>(e.at("cones"), cone_from);
        c.very_ample = get_opt<bool>(e, "very_ample", bool_from);
        doc.checks.push_back(std::move(c));
    }
    if (j.contains("fuzz")) {
        const auto& f = j.at("fuzz");
        doc.fuzz = FuzzReport{f.at("statement").get<std::string>(), f.at("dim").get<std::size_t>(),
                              f.at("seed").get<std::uint64_t>(),    f.at("count").get<std::size_t>(),
                              f.at("holds").get<std::size_t>(),     f.at("not_applicable").get<std::size_t>(),
                              f.at("falsified").get<std::size_t>()};
    }
    if (j.contains("hilbert")) {
        const auto& h = j.at("hilbert");
        HilbertReport r;
        r.cone = h.at("cone").get<std::size_t>();
        auto mvec = [](const Json& v) { return lattice_vec_from(v, Lattice::M); };
        r.dual_rays = vector_from<LatticeVector>(h.at("dual_rays"), mvec);
        r.basis = vector_from<LatticeVector>(h.at("basis"), mvec);
        r.divisor = get_opt<std::string>(h, "divisor", string_from);
        if (h.contains("present")) r.present = h.at("present").get<std::vector<bool>>();
        doc.hilbert = std::move(r);
    }
    doc.exit_status = j.at("exit_status").get<int>();
    return doc;
}

namespace {

// Key/value block with keys padded to a common width.
class Block {
  public:
    explicit Block(std::string title) : title_(std::move(title)) {}
    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void write(std::ostream& out) const {
        out << title_ << "\n";
        std::size_t w = 0;
        for (const auto& [k, v] : rows_) w = std::max(w, k.size());
        for (const auto& [k, v] : rows_) {
            out << "  " << k;
            if (!v.empty()) out << std::string(w - k.size(), ' ') << "  " << v;
            out << "\n";
        }
    }

  private:
    std::string title_;
    std::vector<std::pair<std::string, std::string>> rows_;
};

template <class T>
std::string vec_text(const Vec<T>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.rank(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Ray divisors are named D1, D2, ... in expressions.
std::string ray_names(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + ("D" + std::to_string(xs[i] + 1));
    return s;
}

void write_cones(std::ostream& out, const std::vector<ConeReport>& cones, const std::string& title) {
    if (cones.empty()) return;
    Block b(title);
    for (const auto& c : cones) {
        std::string v = "t=" + to_string(c.t) + "  m=" + to_string(c.m);
        v += "  lambda_min=" + (c.lambda_min ? to_string(*c.lambda_min) : std::string("-"));
        v += "  lambda_max=" + (c.lambda_max ? to_string(*c.lambda_max) : std::string("-"));
        v += c.regular ? "  regular" : "  singular";
        b.add("cone " + std::to_string(c.cone), v);
    }
    b.write(out);
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    Block head(doc.command);
    head.add("instance", doc.instance.label);
    head.add("rank", std::to_string(doc.instance.rank));
    head.add("rays", std::to_string(doc.instance.rays.size()));
    head.add("maximal cones", std::to_string(doc.instance.max_cones.size()));
    head.write(out);

    for (const auto& d : doc.divisors) {
        Block b("divisor " + d.name);
        std::string cs;
        for (const auto& c : d.coeffs) cs += (cs.empty() ? "" : " ") + to_string(c);
        b.add("coefficients", cs);
        b.add("Q-Cartier", d.q_cartier ? "yes" : "no (cone " + std::to_string(*d.not_q_cartier_cone) + ")");
        if (d.cartier) b.add("Cartier", yes_no(*d.cartier));
        if (d.nef) b.add("nef", yes_no(*d.nef));
        if (d.basepoint_free) b.add("basepoint free", yes_no(*d.basepoint_free));
        if (d.very_ample) b.add("very ample", yes_no(*d.very_ample));
        for (std::size_t s = 0; s < d.u_sigma.size(); ++s) b.add("u_sigma[" + std::to_string(s) + "]", vec_text(d.u_sigma[s]));
        for (const auto& w : d.walls)
            b.add("wall " + ray_names(w.wall_rays) + " (cones " + std::to_string(w.sigma) + "|" + std::to_string(w.tau) + ")",
                  to_string(w.value));
        for (const auto& g : d.generation)
            b.add("generation cone " + std::to_string(g.cone),
                  g.generates ? "generates" : "missing " + (g.missing ? vec_text(*g.missing) : std::string("?")));
        b.write(out);
    }
    write_cones(out, doc.cones, "cones");
    for (const auto& c : doc.checks) {
        Block b("check " + c.statement + " [" + c.label + "]");
        std::string verdict = c.verdict;
        if (!c.reason.empty()) verdict += " (" + c.reason + ")";
        b.add("verdict", verdict);
        b.add("conclusion", c.conclusion ? yes_no(*c.conclusion) : "not computed");
        for (const auto& h : c.hypotheses) b.add("hypothesis " + h.name, yes_no(h.holds) + (h.detail.empty() ? "" : "  " + h.detail));
        for (const auto& w : c.witnesses) {
            std::string v;
            if (w.cone) v += "cone " + std::to_string(*w.cone);
            if (w.point) v += (v.empty() ? "" : "  ") + vec_text(*w.point);
            if (w.value) v += (v.empty() ? "" : "  ") + to_string(*w.value);
            b.add("witness " + w.kind, v);
        }
        if (c.very_ample) b.add("very ample", yes_no(*c.very_ample));
        b.write(out);
        write_cones(out, c.cones, "  cones");
    }
    if (doc.fuzz) {
        const auto& f = *doc.fuzz;
        Block b("fuzz " + f.statement);
        b.add("dim", std::to_string(f.dim));
        b.add("seed", std::to_string(f.seed));
        b.add("instances", std::to_string(f.count));
        b.add("holds", std::to_string(f.holds));
        b.add("not applicable", std::to_string(f.not_applicable));
        b.add("falsified", std::to_string(f.falsified));
        b.write(out);
    }
    if (doc.hilbert) {
        const auto& h = *doc.hilbert;
        Block b("Hilbert basis of the dual of cone " + std::to_string(h.cone));
        std::string rays;
        for (const auto& r : h.dual_rays) rays += (rays.empty() ? "" : " ") + vec_text(r);
        b.add("dual rays", rays);
        for (std::size_t i = 0; i < h.basis.size(); ++i) {
            std::string v = h.divisor ? (h.present[i] ? "present in " : "missing from ") + *h.divisor : "";
            b.add(vec_text(h.basis[i]), v);
        }
        b.write(out);
    }
    out << "exit status " << doc.exit_status << "\n";
    return out.str();
}

}  // namespace toricva
