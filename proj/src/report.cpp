#include "pzeta/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "pzeta/errors.hpp"

namespace pzeta {

using json = nlohmann::ordered_json;

namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::pair<Enum, std::string_view>, N>& names,
                           std::string_view text) {
    for (const auto& [value, name] : names) {
        if (name == text) return value;
    }
    return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& names,
                         Enum value) {
    for (const auto& [v, name] : names) {
        if (v == value) return name;
    }
    return "UNKNOWN";
}

constexpr std::array<std::pair<ClaimId, std::string_view>, 3> kClaimNames{{
    {ClaimId::kClaim2_3, "CLAIM2_3"},
    {ClaimId::kClaim4, "CLAIM4"},
    {ClaimId::kMigottiRemark, "MIGOTTI_REMARK"},
}};
constexpr std::array<std::pair<Mode, std::string_view>, 3> kModeNames{{
    {Mode::kSymbolic, "SYMBOLIC"},
    {Mode::kNumeric, "NUMERIC"},
    {Mode::kProbe, "PROBE"},
}};
constexpr std::array<std::pair<Verdict, std::string_view>, 3> kVerdictNames{{
    {Verdict::kRefuted, "REFUTED"},
    {Verdict::kConsistent, "CONSISTENT"},
    {Verdict::kInconclusive, "INCONCLUSIVE"},
}};
constexpr std::array<std::pair<FactKind, std::string_view>, 3> kKindNames{{
    {FactKind::kInfo, "info"},
    {FactKind::kExactMismatch, "exact_mismatch"},
    {FactKind::kDiscrepancy, "discrepancy"},
}};

// JSON has no infinities; non-finite doubles are wrapped as {"float": "inf"}.
json double_to_json(double x) {
    if (std::isfinite(x)) return x;
    const char* tag = std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    return json{{"float", tag}};
}

double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_object() && j.contains("float") && j["float"].is_string()) {
        const auto tag = j["float"].get<std::string>();
        if (tag == "inf") return INFINITY;
        if (tag == "-inf") return -INFINITY;
        if (tag == "nan") return NAN;
    }
    throw DomainError("structured report: expected a number");
}

json value_to_json(const FactValue& v) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return double_to_json(x);
            } else {
                return x;
            }
        },
        v);
}

FactValue value_from_json(const json& j) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) return j.get<std::string>();
    return double_from_json(j);
}

template <typename Enum, std::size_t N>
Enum required_enum(const json& obj, const char* key,
                   const std::array<std::pair<Enum, std::string_view>, N>& names) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw DomainError(std::string("structured report: missing string field '") + key + "'");
    }
    const auto parsed = lookup(names, obj[key].get<std::string>());
    if (!parsed) {
        throw DomainError(std::string("structured report: bad value for '") + key + "'");
    }
    return *parsed;
}

}  // namespace

std::string_view to_string(ClaimId id) { return name_of(kClaimNames, id); }
std::string_view to_string(Mode mode) { return name_of(kModeNames, mode); }
std::string_view to_string(Verdict verdict) { return name_of(kVerdictNames, verdict); }
std::string_view to_string(FactKind kind) { return name_of(kKindNames, kind); }

std::optional<ClaimId> parse_claim_id(std::string_view text) { return lookup(kClaimNames, text); }
std::optional<Mode> parse_mode(std::string_view text) { return lookup(kModeNames, text); }
std::optional<Verdict> parse_verdict(std::string_view text) {
    return lookup(kVerdictNames, text);
}
std::optional<FactKind> parse_fact_kind(std::string_view text) {
    return lookup(kKindNames, text);
}

double round_significant(double x) {
    if (!std::isfinite(x)) return x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

EvidenceFact EvidenceFact::info(std::string name, FactValue value) {
    if (auto* d = std::get_if<double>(&value)) *d = round_significant(*d);
    return {std::move(name), std::move(value), std::nullopt, FactKind::kInfo};
}

EvidenceFact EvidenceFact::measured(std::string name, double value, double error_bound) {
    return {std::move(name), round_significant(value), round_significant(error_bound),
            FactKind::kInfo};
}

EvidenceFact EvidenceFact::discrepancy(std::string name, double difference, double error_bound) {
    return {std::move(name), round_significant(difference), round_significant(error_bound),
            FactKind::kDiscrepancy};
}

EvidenceFact EvidenceFact::mismatch(std::string name, FactValue value) {
    return {std::move(name), std::move(value), std::nullopt, FactKind::kExactMismatch};
}

bool EvidenceFact::is_decisive() const {
    if (kind == FactKind::kExactMismatch) return true;
    if (kind != FactKind::kDiscrepancy || !error_bound) return false;
    const auto* d = std::get_if<double>(&value);
    return d != nullptr && std::isfinite(*error_bound) && std::fabs(*d) > *error_bound;
}

bool ClaimReport::is_well_formed() const {
    if (verdict != Verdict::kRefuted) return true;
    for (const auto& f : evidence) {
        if (f.is_decisive()) return true;
    }
    return false;
}

const EvidenceFact* ClaimReport::find(std::string_view name) const {
    for (const auto& f : evidence) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

std::string to_structured(const ClaimReport& report) {
    json j;
    j["claim_id"] = std::string(to_string(report.claim_id));
    j["mode"] = std::string(to_string(report.mode));
    j["verdict"] = std::string(to_string(report.verdict));
    json evidence = json::array();
    for (const auto& f : report.evidence) {
        json e;
        e["name"] = f.name;
        e["kind"] = std::string(to_string(f.kind));
        e["value"] = value_to_json(f.value);
        if (f.error_bound) e["error_bound"] = double_to_json(*f.error_bound);
        evidence.push_back(std::move(e));
    }
    j["evidence"] = std::move(evidence);
    json params = json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value_to_json(value);
    j["parameters"] = std::move(params);
    return j.dump(2) + "\n";
}

ClaimReport parse_structured(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("structured report: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("structured report: top level must be an object");

    ClaimReport r;
    r.claim_id = required_enum(j, "claim_id", kClaimNames);
    r.mode = required_enum(j, "mode", kModeNames);
    r.verdict = required_enum(j, "verdict", kVerdictNames);

    if (!j.contains("evidence") || !j["evidence"].is_array()) {
        throw DomainError("structured report: missing evidence array");
    }
    for (const auto& e : j["evidence"]) {
        if (!e.is_object() || !e.contains("name") || !e["name"].is_string() ||
            !e.contains("value")) {
            throw DomainError("structured report: malformed evidence entry");
        }
        EvidenceFact f;
        f.name = e["name"].get<std::string>();
        f.kind = required_enum(e, "kind", kKindNames);
        f.value = value_from_json(e["value"]);
        if (e.contains("error_bound")) f.error_bound = double_from_json(e["error_bound"]);
        r.evidence.push_back(std::move(f));
    }
    if (!j.contains("parameters") || !j["parameters"].is_object()) {
        throw DomainError("structured report: missing parameters object");
    }
    for (const auto& [key, value] : j["parameters"].items()) {
        r.parameters.emplace_back(key, value_from_json(value));
    }
    return r;
}

std::string format_value(const FactValue& value) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, bool>) {
                return x ? "true" : "false";
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(x);
            } else if constexpr (std::is_same_v<T, double>) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.15g", x);
                return buf;
            } else {
                return x;
            }
        },
        value);
}

std::string to_text(const ClaimReport& report) {
    std::ostringstream os;
    os << to_string(report.claim_id) << " [" << to_string(report.mode)
       << "]: " << to_string(report.verdict) << "\n";
    os << "parameters:";
    for (const auto& [key, value] : report.parameters) os << " " << key << "=" << format_value(value);
    os << "\nevidence:\n";
    for (const auto& f : report.evidence) {
        os << "  " << f.name << " = " << format_value(f.value);
        if (f.error_bound) os << " +/- " << format_value(*f.error_bound);
        if (f.kind != FactKind::kInfo) os << "  (" << to_string(f.kind) << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace pzeta
