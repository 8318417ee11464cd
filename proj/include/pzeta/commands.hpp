#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pzeta/report.hpp"

namespace pzeta {

/// Bad command-line input; the CLI maps it to exit status 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckOptions {
    ClaimId claim = ClaimId::kClaim2_3;
    /// Defaults per claim: SYMBOLIC for CLAIM2_3 and MIGOTTI_REMARK, NUMERIC for CLAIM4.
    std::optional<Mode> mode;
    double s = 2.0;
    /// Defaults: 10^4 for the Dirichlet-series checks, 200 for the cyclotomic flatness check.
    std::optional<std::size_t> max_n;
    double tol = 1e-12;
    int depth = 20;
    /// Probe grid; defaults to 1e-2, 1e-3, 1e-4, 1e-5.
    std::vector<double> eps;
};

Mode default_mode(ClaimId claim);
bool supports(ClaimId claim, Mode mode);

/// Runs one claim check. The verdict is data: only invalid input throws
/// (UsageError); numeric trouble yields an INCONCLUSIVE report with a reason.
ClaimReport run_check(const CheckOptions& options);

/// Accepts the CLI spellings ("claim2_3", "claim4", "migotti") and the
/// report names, case-insensitively.
std::optional<ClaimId> parse_claim_argument(std::string_view text);
std::optional<Mode> parse_mode_argument(std::string_view text);

using TableCell = FactValue;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<TableCell>> rows;
};

struct TableOptions {
    std::string selector;
    std::vector<double> s_values{2.0};
    std::uint32_t n_first = 1;
    std::uint32_t n_last = 120;
    std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5};
    int depth = 20;
    double tol = 1e-12;
};

/// Selectors: zeta, prime-zeta, claim, cyclotomic-height, probe, radical.
Table run_table(const TableOptions& options);
std::vector<std::string> table_selectors();

std::string to_text(const Table& table);
std::string to_structured(const Table& table);

/// "2,3,4" or a single value.
std::vector<double> parse_real_list(std::string_view text);
/// "a..b" or a single integer.
std::pair<std::uint32_t, std::uint32_t> parse_int_range(std::string_view text);
/// "1e-2..1e-5" (decade steps from the first to the last) or a comma list.
std::vector<double> parse_eps_range(std::string_view text);

}  // namespace pzeta
