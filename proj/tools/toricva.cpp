#include "toricva/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace toricva;

namespace {

struct Loaded {
    InputDocument doc;
    Fan fan;
    std::string label;
    std::optional<std::size_t> focus;
};

// Positional words: the input path, "sigma=N", and divisor assignments NAME=EXPR or bare expressions.
struct Words {
    std::optional<std::string> input;
    std::optional<std::size_t> sigma;
    std::vector<std::pair<std::string, std::string>> divisors;
};

Words split_words(const std::vector<std::string>& words, bool first_is_input) {
    Words w;
    for (const auto& word : words) {
        auto eq = word.find('=');
        if (eq == std::string::npos) {
            if (first_is_input && !w.input) {
                w.input = word;
            } else {
                w.divisors.emplace_back(word, word);
            }
            continue;
        }
        std::string key = word.substr(0, eq), value = word.substr(eq + 1);
        if (key == "sigma" || key == "σ") {
            try {
                std::size_t used = 0;
                w.sigma = std::stoul(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw InputError("sigma: expected a cone index, got \"" + value + "\"");
            }
        } else {
            w.divisors.emplace_back(key, value);
        }
    }
    return w;
}

Loaded load(const std::optional<std::string>& path, const std::optional<std::string>& spec) {
    if (path && spec) throw InputError("give either an input file or --builtin, not both");
    if (spec) {
        Instance inst = builtin(*spec);
        return {input_from_instance(inst), inst.fan, inst.label, inst.focus};
    }
    if (!path) throw InputError("missing input file");
    Loaded l{read_input(*path), Fan{}, std::filesystem::path(*path).filename().string(), std::nullopt};
    l.fan = build_fan(l.doc);
    const auto& opts = l.doc.options;
    if (opts.contains("label") && opts["label"].is_string()) l.label = opts["label"].get<std::string>();
    if (opts.contains("sigma")) {
        if (!opts["sigma"].is_number_unsigned() || opts["sigma"].get<std::size_t>() >= l.fan.num_cones())
            throw InputError("options.sigma: expected a maximal cone index");
        l.focus = opts["sigma"].get<std::size_t>();
    }
    return l;
}

std::optional<std::string> lookup(const Words& w, const std::string& name) {
    for (const auto& [k, v] : w.divisors)
        if (k == name) return v;
    return std::nullopt;
}

Instance instance_of(const Loaded& l, const Words& w) {
    std::string d = lookup(w, "D").value_or("D");
    std::string dp = lookup(w, "Dprime").value_or(l.doc.divisors.count("Dprime") ? "Dprime" : "K");
    if (!lookup(w, "D") && !l.doc.divisors.count("D")) throw InputError("no divisor D: pass D=EXPR");
    return Instance{l.fan, resolve_divisor(l.doc, l.fan, d), resolve_divisor(l.doc, l.fan, dp), l.label, l.focus};
}

std::vector<std::size_t> cones_to_check(const Fan& f, std::optional<std::size_t> sigma, std::optional<std::size_t> focus) {
    if (sigma) {
        if (*sigma >= f.num_cones()) throw InputError("sigma: cone " + std::to_string(*sigma) + " does not exist");
        return {*sigma};
    }
    if (focus) return {*focus};
    std::vector<std::size_t> all(f.num_cones());
    for (std::size_t s = 0; s < all.size(); ++s) all[s] = s;
    return all;
}

struct VerifyOptions {
    std::string statement;
    std::optional<std::size_t> sigma;
    std::optional<Rat> r;
    int interior_bound = 5;
};

std::vector<CheckReport> run_checks(const VerifyOptions& o, const Instance& inst) {
    const auto& s = o.statement;
    if (s == "theorem2") return {check_theorem2(inst)};
    if (s == "fujino") return {check_fujino_plus(inst)};
    if (s == "corollary") return {check_corollary(inst)};
    if (s == "lemma1") return {check_lemma1(inst)};
    std::vector<CheckReport> out;
    for (auto sigma : cones_to_check(inst.fan, o.sigma, inst.focus)) {
        if (s == "proposition") out.push_back(check_proposition(inst, sigma, o.r));
        if (s == "lemma3") out.push_back(check_lemma3(inst, sigma, o.interior_bound));
        if (s == "lemma4") out.push_back(check_lemma4(inst, sigma));
    }
    return out;
}

void emit(const ReportDocument& doc, bool json) {
    if (json) {
        std::cout << to_json(doc).dump(2) << "\n";
    } else {
        std::cout << render_text(doc);
    }
}

int cmd_analyze(const Words& w, const std::optional<std::string>& spec, bool very_ample_flag, bool json) {
    Loaded l = load(w.input, spec);
    bool very_ample = very_ample_flag || l.doc.options.value("very_ample", false);
    ReportDocument doc;
    doc.command = "analyze";
    doc.instance = echo(l.fan, l.label);

    auto named = w.divisors;
    if (named.empty()) {
        for (const char* n : {"D", "Dprime"})
            if (l.doc.divisors.count(n)) named.emplace_back(n, n);
        if (named.empty())
            for (const auto& [n, cs] : l.doc.divisors) named.emplace_back(n, n);
    }
    std::map<std::string, TDivisor> resolved;
    for (const auto& [name, expr] : named) {
        resolved[name] = resolve_divisor(l.doc, l.fan, expr);
        doc.divisors.push_back(analyze_divisor(l.fan, name, resolved[name], very_ample));
    }
    if (resolved.count("D") && resolved.count("Dprime")) {
        Instance inst{l.fan, resolved["D"], resolved["Dprime"], l.label, l.focus};
        doc.divisors.push_back(analyze_divisor(l.fan, "D+Dprime", inst.D + inst.Dprime, very_ample));
        if (is_q_cartier(l.fan, inst.D) && is_q_cartier(l.fan, inst.Dprime))
            for (std::size_t s = 0; s < l.fan.num_cones(); ++s) doc.cones.push_back(cone_report(cone_diagnostics(inst, s)));
    }
    emit(doc, json);
    return doc.exit_status;
}

int cmd_verify(const VerifyOptions& o, const Words& w, const std::optional<std::string>& spec,
               const std::vector<std::string>& fuzz, bool json) {
    ReportDocument doc;
    doc.command = "verify " + o.statement;
    if (!fuzz.empty()) {
        if (w.input || spec) throw InputError("--fuzz replaces the input");
        FuzzReport f;
        f.statement = o.statement;
        try {
            f.dim = std::stoul(fuzz[0]);
            f.seed = std::stoull(fuzz[1]);
            f.count = std::stoul(fuzz[2]);
        } catch (const std::exception&) {
            throw InputError("--fuzz: expected DIM SEED COUNT");
        }
        for (std::size_t i = 0; i < f.count; ++i) {
            Instance inst = random_instance(f.dim, f.seed + i);
            for (const auto& r : run_checks(o, inst)) {
                if (r.verdict == Verdict::Holds) ++f.holds;
                if (r.verdict == Verdict::NotApplicable) ++f.not_applicable;
                if (r.verdict == Verdict::Falsified) {
                    ++f.falsified;
                    doc.checks.push_back(check_entry(r));
                }
            }
        }
        doc.instance.label = "random(" + fuzz[0] + "," + fuzz[1] + "..)";
        doc.instance.rank = f.dim;
        doc.exit_status = f.falsified ? 2 : 0;
        doc.fuzz = f;
    } else {
        Loaded l = load(w.input, spec);
        Instance inst = instance_of(l, w);
        doc.instance = echo(l.fan, l.label);
        for (const auto& r : run_checks(o, inst)) {
            if (r.verdict == Verdict::Falsified) doc.exit_status = 2;
            doc.checks.push_back(check_entry(r));
        }
    }
    emit(doc, json);
    return doc.exit_status;
}

int cmd_hilbert(const Words& w, const std::optional<std::string>& spec, bool json) {
    Loaded l = load(w.input, spec);
    ReportDocument doc;
    doc.command = "hilbert";
    doc.instance = echo(l.fan, l.label);
    std::size_t sigma = w.sigma.value_or(l.focus.value_or(0));
    std::optional<std::pair<std::string, TDivisor>> d;
    if (w.divisors.size() > 1) throw InputError("hilbert takes at most one divisor");
    if (!w.divisors.empty()) d = {w.divisors[0].first, resolve_divisor(l.doc, l.fan, w.divisors[0].second)};
    doc.hilbert = hilbert_report(l.fan, sigma, d);
    emit(doc, json);
    return 0;
}

int cmd_examples(const std::optional<std::string>& spec, const std::optional<std::string>& out) {
    if (!spec) {
        for (const auto& e : builtin_examples()) std::cout << e << "\n";
        return 0;
    }
    std::string text = to_json(input_from_instance(builtin(*spec))).dump(2) + "\n";
    if (!out) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(*out);
    if (!f) throw InputError(*out + ": cannot write file");
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartier, nef, basepoint-free and very ample checks for divisors on complete toric varieties"};
    app.require_subcommand(1);
    bool json = false, very_ample = false;
    std::optional<std::string> spec, out;
    std::vector<std::string> words, fuzz;
    VerifyOptions vo;
    std::string r_text;
    std::optional<std::size_t> sigma_flag;

    auto* analyze = app.add_subcommand("analyze", "Cartier/nef/bpf/very ample verdicts for divisors");
    analyze->add_option("words", words, "INPUT then NAME=EXPR assignments (D=3H Dprime=K)");
    analyze->add_option("--builtin", spec, "use a built-in instance instead of a file");
    analyze->add_flag("--very-ample", very_ample, "run Hilbert basis generation checks");
    analyze->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "check a statement on an instance or on random instances");
    verify->add_option("statement", vo.statement, "theorem2|fujino|corollary|proposition|lemma1|lemma3|lemma4")
        ->required()
        ->check(CLI::IsMember({"theorem2", "fujino", "corollary", "proposition", "lemma1", "lemma3", "lemma4"}));
    verify->add_option("words", words, "INPUT then D=EXPR Dprime=EXPR sigma=N");
    verify->add_option("--builtin", spec, "use a built-in instance instead of a file");
    verify->add_option("--fuzz", fuzz, "DIM SEED COUNT")->expected(3);
    verify->add_option("--sigma", sigma_flag, "maximal cone for cone-local statements");
    verify->add_option("--r", r_text, "local-hypothesis radius for the proposition");
    verify->add_option("--interior-bound", vo.interior_bound, "coordinate bound for interior points (lemma3)")
        ->check(CLI::Range(0, 50));
    verify->add_flag("--json", json, "machine-readable output");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a dual cone, optionally classified against a divisor");
    hilbert->add_option("words", words, "INPUT then sigma=N and an optional NAME=EXPR");
    hilbert->add_option("--builtin", spec, "use a built-in instance instead of a file");
    hilbert->add_option("--sigma", sigma_flag, "maximal cone");
    hilbert->add_flag("--json", json, "machine-readable output");

    auto* examples = app.add_subcommand("examples", "list built-in instances or emit one as an input file");
    examples->add_option("--emit", spec, "built-in to emit, e.g. \"ew_simplex(4)\"");
    examples->add_option("-o,--output", out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (examples->parsed()) return cmd_examples(spec, out);
        Words w = split_words(words, true);
        if (sigma_flag) w.sigma = sigma_flag;
        if (analyze->parsed()) return cmd_analyze(w, spec, very_ample, json);
        if (hilbert->parsed()) return cmd_hilbert(w, spec, json);
        vo.sigma = w.sigma;
        if (!r_text.empty()) {
            try {
                vo.r = parse_rat(r_text);
            } catch (const Error& e) {
                throw InputError(std::string("--r: ") + e.what());
            }
        }
        return cmd_verify(vo, w, spec, fuzz, json);
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
