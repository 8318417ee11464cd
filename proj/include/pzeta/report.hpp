#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pzeta {

enum class ClaimId { kClaim2_3, kClaim4, kMigottiRemark };
enum class Mode { kSymbolic, kNumeric, kProbe };
enum class Verdict { kRefuted, kConsistent, kInconclusive };

/// What a piece of evidence contributes to a verdict.
enum class FactKind {
    kInfo,           ///< context only
    kExactMismatch,  ///< an exact inequality (symbolic evidence)
    kDiscrepancy,    ///< a numeric difference carrying its combined error bound
};

std::string_view to_string(ClaimId id);
std::string_view to_string(Mode mode);
std::string_view to_string(Verdict verdict);
std::string_view to_string(FactKind kind);

std::optional<ClaimId> parse_claim_id(std::string_view text);
std::optional<Mode> parse_mode(std::string_view text);
std::optional<Verdict> parse_verdict(std::string_view text);
std::optional<FactKind> parse_fact_kind(std::string_view text);

/// Exact rationals travel as strings ("-691/2730").
using FactValue = std::variant<bool, std::int64_t, double, std::string>;

/// Round to 15 significant digits, the precision of the structured output.
double round_significant(double x);

struct EvidenceFact {
    std::string name;
    FactValue value;
    std::optional<double> error_bound;
    FactKind kind = FactKind::kInfo;

    static EvidenceFact info(std::string name, FactValue value);
    /// Numeric value with its error bound, both rounded to 15 digits.
    static EvidenceFact measured(std::string name, double value, double error_bound);
    static EvidenceFact discrepancy(std::string name, double difference, double error_bound);
    static EvidenceFact mismatch(std::string name, FactValue value);

    /// An exact mismatch, or a discrepancy whose magnitude exceeds its bound.
    bool is_decisive() const;

    friend bool operator==(const EvidenceFact&, const EvidenceFact&) = default;
};

struct ClaimReport {
    ClaimId claim_id = ClaimId::kClaim2_3;
    Mode mode = Mode::kSymbolic;
    Verdict verdict = Verdict::kInconclusive;
    std::vector<EvidenceFact> evidence;
    /// Echo of every input, in a stable order.
    std::vector<std::pair<std::string, FactValue>> parameters;

    /// REFUTED needs at least one decisive fact.
    bool is_well_formed() const;

    const EvidenceFact* find(std::string_view name) const;

    friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

/// One JSON object, UTF-8, fixed key order, trailing newline.
std::string to_structured(const ClaimReport& report);
/// Inverse of to_structured; throws DomainError on malformed input.
ClaimReport parse_structured(std::string_view text);
std::string to_text(const ClaimReport& report);

std::string format_value(const FactValue& value);

}  // namespace pzeta
