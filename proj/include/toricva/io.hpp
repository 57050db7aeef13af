#pragma once

// JSON input documents, divisor expressions and report documents.

#include "toricva/harness.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricva {

using Json = nlohmann::json;

/// Malformed input; the message names the offending field.
class InputError : public Error {
  public:
    using Error::Error;
};

struct InputDocument {
    std::size_t rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<std::size_t>> max_cones;
    std::map<std::string, std::vector<Rat>> divisors;
    Json options = Json::object();

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

InputDocument parse_input(const std::string& text);
InputDocument read_input(const std::string& path);
Json to_json(const InputDocument& doc);
InputDocument input_from_instance(const Instance& inst);

Fan build_fan(const InputDocument& doc);

/// Sums like "3H", "D1+K" or "1/2*D2 - K". Names are the document's divisors,
/// K for the canonical divisor, and D1, D2, ... for the ray divisors in order.
TDivisor resolve_divisor(const InputDocument& doc, const Fan& f, std::string_view expr);

/// Parses built-in specs such as "weighted_112", "projective_space(2,3)" or
/// "intro_simplex([[1,0],[1,2]],3)".
Instance builtin(std::string_view spec);
std::vector<std::string> builtin_examples();

struct WallReport {
    std::size_t sigma = 0, tau = 0;
    std::vector<std::size_t> wall_rays;
    Rat value;
    friend bool operator==(const WallReport&, const WallReport&) = default;
};

struct GenerationReport {
    std::size_t cone = 0;
    bool generates = false;
    std::optional<LatticeVector> missing;
    friend bool operator==(const GenerationReport&, const GenerationReport&) = default;
};

struct DivisorReport {
    std::string name;
    std::vector<Rat> coeffs;
    bool q_cartier = false;
    std::optional<std::size_t> not_q_cartier_cone;
    std::optional<bool> cartier, nef, basepoint_free, very_ample;
    std::vector<RatVector> u_sigma;
    std::vector<WallReport> walls;
    std::vector<GenerationReport> generation;
    friend bool operator==(const DivisorReport&, const DivisorReport&) = default;
};

struct ConeReport {
    std::size_t cone = 0;
    bool regular = false;
    Rat t, m;
    std::optional<Rat> lambda_min, lambda_max;
    friend bool operator==(const ConeReport&, const ConeReport&) = default;
};

struct HypothesisReport {
    std::string name;
    bool holds = false;
    std::string detail;
    friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

struct WitnessReport {
    std::string kind;
    std::optional<std::size_t> cone;
    std::optional<RatVector> point;
    std::optional<Rat> value;
    friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct CheckEntry {
    std::string statement;
    std::string label;
    std::vector<HypothesisReport> hypotheses;
    std::optional<bool> conclusion;
    std::string verdict;
    std::string reason;
    std::vector<WitnessReport> witnesses;
    std::vector<ConeReport> cones;
    std::optional<bool> very_ample;
    friend bool operator==(const CheckEntry&, const CheckEntry&) = default;
};

struct FuzzReport {
    std::string statement;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t holds = 0, not_applicable = 0, falsified = 0;
    friend bool operator==(const FuzzReport&, const FuzzReport&) = default;
};

struct HilbertReport {
    std::size_t cone = 0;
    std::vector<LatticeVector> dual_rays;
    std::vector<LatticeVector> basis;
    std::optional<std::string> divisor;
    std::vector<bool> present;  // aligned with basis, when a divisor is named
    friend bool operator==(const HilbertReport&, const HilbertReport&) = default;
};

struct InstanceEcho {
    std::string label;
    std::size_t rank = 0;
    std::vector<LatticeVector> rays;
    std::vector<std::vector<std::size_t>> max_cones;
    friend bool operator==(const InstanceEcho&, const InstanceEcho&) = default;
};

struct ReportDocument {
    std::string command;
    InstanceEcho instance;
    std::vector<DivisorReport> divisors;
    std::vector<ConeReport> cones;
    std::vector<CheckEntry> checks;
    std::optional<FuzzReport> fuzz;
    std::optional<HilbertReport> hilbert;
    int exit_status = 0;
    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

InstanceEcho echo(const Fan& f, std::string label);
DivisorReport analyze_divisor(const Fan& f, std::string name, const TDivisor& d, bool very_ample);
ConeReport cone_report(const ConeDiagnostics& c);
CheckEntry check_entry(const CheckReport& r);
HilbertReport hilbert_report(const Fan& f, std::size_t sigma, const std::optional<std::pair<std::string, TDivisor>>& d);

Json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const Json& j);
/// Human-readable form with aligned fields.
std::string render_text(const ReportDocument& doc);

}  // namespace toricva
