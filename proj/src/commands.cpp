#include "pzeta/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "pzeta/arith.hpp"
#include "pzeta/cyclotomic.hpp"
#include "pzeta/dirichlet.hpp"
#include "pzeta/errors.hpp"
#include "pzeta/nested_radical.hpp"
#include "pzeta/zeta.hpp"

namespace pzeta {

namespace {

constexpr std::size_t kDefaultSeriesTruncation = 10000;
constexpr std::size_t kDefaultCyclotomicLimit = 200;
const std::vector<double> kDefaultProbeGrid{1e-2, 1e-3, 1e-4, 1e-5};

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

std::string factorization_string(const FactoredInteger& f) {
    std::string out;
    for (const auto& [p, e] : f.factors()) {
        if (!out.empty()) out += "*";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string eps_label(double eps) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0e", eps);
    return buf;
}

void add_reason(ClaimReport& report, const std::exception& e) {
    report.verdict = Verdict::kInconclusive;
    report.evidence.push_back(EvidenceFact::info("reason", std::string(e.what())));
}

void check_symbolic_claim(const CheckOptions& opt, ClaimReport& report) {
    const std::size_t n_max = opt.max_n.value_or(kDefaultSeriesTruncation);
    report.parameters.emplace_back("max_n", static_cast<std::int64_t>(n_max));

    const ClaimSeries series = prime_zeta_claim_series(n_max);
    const auto mismatch = first_mismatch(series.lhs, series.rhs);
    if (!mismatch) {
        report.verdict = Verdict::kConsistent;
        report.evidence.push_back(EvidenceFact::info("coefficients_compared",
                                                     static_cast<std::int64_t>(n_max)));
        return;
    }

    const PrimeTable table(static_cast<std::uint32_t>(std::max<std::size_t>(n_max, 2)));
    const auto indices = mismatch_indices(series.lhs, series.rhs);
    const bool none_two_prime = std::none_of(indices.begin(), indices.end(), [&](std::size_t n) {
        return factorize(n, table).is_two_prime_power();
    });

    report.verdict = Verdict::kRefuted;
    report.evidence.push_back(
        EvidenceFact::mismatch("first_mismatch_index", static_cast<std::int64_t>(mismatch->index)));
    report.evidence.push_back(
        EvidenceFact::info("lhs_coefficient", rational_string(mismatch->lhs)));
    report.evidence.push_back(
        EvidenceFact::info("rhs_coefficient", rational_string(mismatch->rhs)));
    report.evidence.push_back(EvidenceFact::info(
        "first_mismatch_factorization", factorization_string(factorize(mismatch->index, table))));
    report.evidence.push_back(
        EvidenceFact::info("mismatch_count", static_cast<std::int64_t>(indices.size())));
    report.evidence.push_back(
        EvidenceFact::info("no_mismatch_of_form_p^a*q^b", none_two_prime));
}

void check_numeric_claim(const CheckOptions& opt, ClaimReport& report) {
    report.parameters.emplace_back("s", opt.s);
    report.parameters.emplace_back("tol", opt.tol);
    try {
        const EvalResult lhs = claim_lhs(opt.s, opt.tol);
        const EvalResult rhs = claim_rhs(opt.s, opt.tol);
        const EvalResult p = prime_zeta(opt.s, opt.tol);
        const EvalResult p2 = prime_zeta(2 * opt.s, opt.tol);
        const double diff = lhs.value - rhs.value;
        const double bound = lhs.error_bound + rhs.error_bound;

        report.evidence.push_back(EvidenceFact::measured("lhs", lhs.value, lhs.error_bound));
        report.evidence.push_back(EvidenceFact::measured("rhs", rhs.value, rhs.error_bound));
        report.evidence.push_back(EvidenceFact::discrepancy("lhs_minus_rhs", diff, bound));
        report.evidence.push_back(EvidenceFact::measured("prime_zeta_s", p.value, p.error_bound));
        report.evidence.push_back(
            EvidenceFact::measured("prime_zeta_2s", p2.value, p2.error_bound));

        const double half = opt.s / 2;
        if (half == std::floor(half) && half >= 1 && half <= 32) {
            const EvalResult z = euler_even_zeta(static_cast<int>(half));
            const double euler_lhs = 2 / z.value;
            report.evidence.push_back(EvidenceFact::measured(
                "lhs_euler_formula", euler_lhs, 2 * z.error_bound / (z.value * z.value)));
        }
        report.verdict = report.evidence[2].is_decisive() ? Verdict::kRefuted
                                                          : Verdict::kConsistent;
    } catch (const PrecisionError& e) {
        add_reason(report, e);
    } catch (const DomainError& e) {
        add_reason(report, e);
    }
}

void check_probe_claim(const CheckOptions& opt, ClaimReport& report) {
    const auto& grid = opt.eps.empty() ? kDefaultProbeGrid : opt.eps;
    std::string grid_text;
    for (double e : grid) grid_text += (grid_text.empty() ? "" : ",") + eps_label(e);
    report.parameters.emplace_back("eps", grid_text);

    const auto rows = singularity_probe(grid);
    bool all_ok = true;
    for (const auto& row : rows) {
        const std::string tag = "eps=" + eps_label(row.eps);
        if (!row.ok()) {
            all_ok = false;
            report.evidence.push_back(EvidenceFact::info("error[" + tag + "]", row.error));
            continue;
        }
        report.evidence.push_back(
            EvidenceFact::measured("lhs[" + tag + "]", row.lhs->value, row.lhs->error_bound));
        report.evidence.push_back(
            EvidenceFact::measured("rhs[" + tag + "]", row.rhs->value, row.rhs->error_bound));
    }
    if (!all_ok || rows.size() < 3) {
        report.verdict = Verdict::kInconclusive;
        report.evidence.push_back(
            EvidenceFact::info("reason", std::string("probe needs three or more clean rows")));
        return;
    }

    bool lhs_decreasing = true;
    bool rhs_increasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        lhs_decreasing = lhs_decreasing && rows[i].lhs->value < rows[i - 1].lhs->value;
        rhs_increasing = rhs_increasing && rows[i].rhs->value > rows[i - 1].rhs->value;
    }
    const LogQuadraticFit fit = fit_log_quadratic(rows);
    const auto& last = rows.back();
    const double gap = last.rhs->value - last.lhs->value;
    const double gap_bound = last.rhs->error_bound + last.lhs->error_bound;

    report.evidence.push_back(EvidenceFact::info("lhs_decreasing", lhs_decreasing));
    report.evidence.push_back(EvidenceFact::info("rhs_increasing", rhs_increasing));
    report.evidence.push_back(EvidenceFact::info("fit_log2_coefficient", fit.a));
    report.evidence.push_back(EvidenceFact::info("fit_log_coefficient", fit.b));
    report.evidence.push_back(EvidenceFact::info("fit_constant", fit.c));
    report.evidence.push_back(EvidenceFact::info("fit_relative_residual", fit.relative_residual));
    report.evidence.push_back(
        EvidenceFact::discrepancy("rhs_minus_lhs[" + eps_label(last.eps) + "]", gap, gap_bound));

    const bool shape = lhs_decreasing && rhs_increasing && fit.a > 0 &&
                       fit.relative_residual < 0.1;
    report.verdict = shape && report.evidence.back().is_decisive() ? Verdict::kRefuted
                                                                   : Verdict::kInconclusive;
}

void check_claim4(const CheckOptions& opt, ClaimReport& report) {
    const std::size_t n_max = opt.max_n.value_or(kDefaultSeriesTruncation);
    report.parameters.emplace_back("s", opt.s);
    report.parameters.emplace_back("depth", static_cast<std::int64_t>(opt.depth));
    report.parameters.emplace_back("max_n", static_cast<std::int64_t>(n_max));

    // Squaring 1 - P(s) = sqrt(2/zeta(s) - (1 - P(2s))) must reproduce the
    // prime-zeta claim coefficient for coefficient.
    const ClaimSeries squared = squared_radical_series(n_max);
    const ClaimSeries claim = prime_zeta_claim_series(n_max);
    const std::vector<WeightedSeries> squared_diff{{1, squared.lhs}, {-1, squared.rhs}};
    const std::vector<WeightedSeries> claim_diff{{1, claim.rhs}, {-1, claim.lhs}};
    const bool equivalent = linear_combine(squared_diff) == linear_combine(claim_diff);
    report.evidence.push_back(EvidenceFact::info("squared_form_equals_claim_series", equivalent));
    if (const auto m = first_mismatch(squared.lhs, squared.rhs)) {
        report.evidence.push_back(EvidenceFact::mismatch("squared_form_first_mismatch_index",
                                                         static_cast<std::int64_t>(m->index)));
    }

    try {
        const Claim4Check c = claim4_check(opt.s, opt.depth);
        report.evidence.push_back(
            EvidenceFact::measured("one_minus_radical", c.radical_value, c.radical_error_bound));
        report.evidence.push_back(
            EvidenceFact::measured("prime_zeta", c.prime_zeta.value, c.prime_zeta.error_bound));
        const auto gap = EvidenceFact::discrepancy(
            "radical_minus_prime_zeta", c.gap, c.radical_error_bound + c.prime_zeta.error_bound);
        report.evidence.push_back(gap);
        report.verdict = gap.is_decisive() ? Verdict::kRefuted : Verdict::kConsistent;
    } catch (const RadicandError& e) {
        report.evidence.push_back(
            EvidenceFact::info("radicand_error_level", static_cast<std::int64_t>(e.level())));
        add_reason(report, e);
    } catch (const PrecisionError& e) {
        add_reason(report, e);
    } catch (const DomainError& e) {
        add_reason(report, e);
    }
}

std::uint32_t odd_prime_factor_count(const FactoredInteger& f) {
    std::uint32_t count = 0;
    for (const auto& pp : f.factors()) count += pp.prime != 2;
    return count;
}

void check_migotti(const CheckOptions& opt, ClaimReport& report) {
    const std::size_t n_max = opt.max_n.value_or(kDefaultCyclotomicLimit);
    if (n_max < 1 || n_max > kMaxCyclotomicIndex) {
        throw UsageError("--max-n for the cyclotomic check must lie in [1, " +
                         std::to_string(kMaxCyclotomicIndex) + "]");
    }
    report.parameters.emplace_back("max_n", static_cast<std::int64_t>(n_max));

    const IntPolynomial phi105 = cyclotomic(105);
    report.evidence.push_back(
        EvidenceFact::info("phi105_coefficient_x7", phi105.coefficient(7).get_si()));
    report.evidence.push_back(
        EvidenceFact::info("phi105_coefficient_x41", phi105.coefficient(41).get_si()));
    report.evidence.push_back(EvidenceFact::info("phi105_height", phi105.height().get_si()));

    const PrimeTable table(static_cast<std::uint32_t>(std::max<std::size_t>(n_max, 2)));
    std::int64_t checked = 0;
    std::optional<std::uint32_t> violation;
    std::optional<std::uint32_t> first_tall;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const Integer h = height(n);
        if (h > 1 && !first_tall) first_tall = n;
        if (odd_prime_factor_count(factorize(n, table)) <= 2) {
            ++checked;
            if (h != 1 && !violation) violation = n;
        }
    }
    report.evidence.push_back(EvidenceFact::info("indices_with_two_or_fewer_odd_primes", checked));
    if (first_tall) {
        report.evidence.push_back(EvidenceFact::info("first_height_above_one",
                                                     static_cast<std::int64_t>(*first_tall)));
    }
    if (violation) {
        report.evidence.push_back(
            EvidenceFact::mismatch("height_violation_index", static_cast<std::int64_t>(*violation)));
        report.verdict = Verdict::kRefuted;
    } else {
        report.verdict = Verdict::kConsistent;
    }
}

}  // namespace

Mode default_mode(ClaimId claim) {
    switch (claim) {
        case ClaimId::kClaim4:
            return Mode::kNumeric;
        case ClaimId::kClaim2_3:
        case ClaimId::kMigottiRemark:
            break;
    }
    return Mode::kSymbolic;
}

bool supports(ClaimId claim, Mode mode) {
    switch (claim) {
        case ClaimId::kClaim2_3:
            return true;
        case ClaimId::kClaim4:
            return mode == Mode::kNumeric;
        case ClaimId::kMigottiRemark:
            return mode == Mode::kSymbolic;
    }
    return false;
}

std::optional<ClaimId> parse_claim_argument(std::string_view text) {
    const std::string t = lower(text);
    if (t == "claim2_3" || t == "claim2" || t == "claim3") return ClaimId::kClaim2_3;
    if (t == "claim4") return ClaimId::kClaim4;
    if (t == "migotti" || t == "migotti_remark") return ClaimId::kMigottiRemark;
    return std::nullopt;
}

std::optional<Mode> parse_mode_argument(std::string_view text) {
    const std::string t = lower(text);
    if (t == "symbolic") return Mode::kSymbolic;
    if (t == "numeric") return Mode::kNumeric;
    if (t == "probe") return Mode::kProbe;
    return std::nullopt;
}

ClaimReport run_check(const CheckOptions& opt) {
    const Mode mode = opt.mode.value_or(default_mode(opt.claim));
    if (!supports(opt.claim, mode)) {
        throw UsageError(std::string(to_string(opt.claim)) + " does not support mode " +
                         std::string(to_string(mode)));
    }
    if (!(opt.s > 1)) throw UsageError("--s must exceed 1");
    if (!(opt.tol > 0)) throw UsageError("--tol must be positive");
    if (opt.depth < 0 || opt.depth > 60) throw UsageError("--depth must lie in [0, 60]");
    if (opt.max_n && *opt.max_n < 1) throw UsageError("--max-n must be positive");
    if (opt.max_n && *opt.max_n > 10'000'000) throw UsageError("--max-n is limited to 10^7");
    for (double e : opt.eps) {
        if (!(e > 0 && e <= 0.5)) throw UsageError("--eps values must lie in (0, 0.5]");
    }
    for (std::size_t i = 1; i < opt.eps.size(); ++i) {
        if (!(opt.eps[i] < opt.eps[i - 1])) throw UsageError("--eps values must be descending");
    }

    ClaimReport report;
    report.claim_id = opt.claim;
    report.mode = mode;

    switch (opt.claim) {
        case ClaimId::kClaim2_3:
            if (mode == Mode::kSymbolic) {
                check_symbolic_claim(opt, report);
            } else if (mode == Mode::kNumeric) {
                check_numeric_claim(opt, report);
            } else {
                check_probe_claim(opt, report);
            }
            break;
        case ClaimId::kClaim4:
            check_claim4(opt, report);
            break;
        case ClaimId::kMigottiRemark:
            check_migotti(opt, report);
            break;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Tables

std::vector<std::string> table_selectors() {
    return {"zeta", "prime-zeta", "claim", "cyclotomic-height", "probe", "radical"};
}

namespace {

TableCell number_cell(double x) { return round_significant(x); }

Table zeta_table(const TableOptions& opt) {
    Table t{"zeta", {"s", "zeta", "error_bound"}, {}};
    for (double s : opt.s_values) {
        const EvalResult z = zeta_real(s, std::max(opt.tol, kMinTolerance));
        t.rows.push_back({number_cell(s), number_cell(z.value), number_cell(z.error_bound)});
    }
    return t;
}

Table prime_zeta_table(const TableOptions& opt) {
    Table t{"prime-zeta", {"s", "prime_zeta", "error_bound"}, {}};
    for (double s : opt.s_values) {
        const EvalResult p = prime_zeta(s, opt.tol);
        t.rows.push_back({number_cell(s), number_cell(p.value), number_cell(p.error_bound)});
    }
    return t;
}

Table claim_table(const TableOptions& opt) {
    Table t{"claim", {"s", "lhs", "lhs_bound", "rhs", "rhs_bound", "lhs_minus_rhs"}, {}};
    for (double s : opt.s_values) {
        const EvalResult l = claim_lhs(s, opt.tol);
        const EvalResult r = claim_rhs(s, opt.tol);
        t.rows.push_back({number_cell(s), number_cell(l.value), number_cell(l.error_bound),
                          number_cell(r.value), number_cell(r.error_bound),
                          number_cell(l.value - r.value)});
    }
    return t;
}

Table cyclotomic_table(const TableOptions& opt) {
    if (opt.n_first < 1 || opt.n_last > kMaxCyclotomicIndex || opt.n_first > opt.n_last) {
        throw UsageError("--n range must satisfy 1 <= first <= last <= " +
                         std::to_string(kMaxCyclotomicIndex));
    }
    Table t{"cyclotomic-height", {"n", "degree", "height"}, {}};
    for (std::uint32_t n = opt.n_first; n <= opt.n_last; ++n) {
        const IntPolynomial phi = cyclotomic(n);
        const Integer h = phi.height();
        TableCell hc = h.fits_slong_p() ? TableCell(static_cast<std::int64_t>(h.get_si()))
                                        : TableCell(h.get_str());
        t.rows.push_back({static_cast<std::int64_t>(n), static_cast<std::int64_t>(phi.degree()),
                          std::move(hc)});
    }
    return t;
}

Table probe_table(const TableOptions& opt) {
    Table t{"probe", {"eps", "lhs", "lhs_bound", "rhs", "rhs_bound", "status"}, {}};
    try {
        for (const auto& row : singularity_probe(opt.eps)) {
            if (row.lhs && row.rhs) {
                t.rows.push_back({number_cell(row.eps), number_cell(row.lhs->value),
                                  number_cell(row.lhs->error_bound), number_cell(row.rhs->value),
                                  number_cell(row.rhs->error_bound),
                                  row.ok() ? std::string("ok") : row.error});
            } else {
                t.rows.push_back({number_cell(row.eps), std::string("-"), std::string("-"),
                                  std::string("-"), std::string("-"), row.error});
            }
        }
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return t;
}

Table radical_table(const TableOptions& opt) {
    if (opt.depth < 1 || opt.depth > 60) throw UsageError("--depth must lie in [1, 60]");
    Table t{"radical", {"s", "depth", "zero_tail_gap", "one_tail_gap"}, {}};
    for (double s : opt.s_values) {
        for (const auto& row : convergence_report(s, opt.depth)) {
            t.rows.push_back({number_cell(s), static_cast<std::int64_t>(row.depth),
                              row.zero_gap ? number_cell(*row.zero_gap) : TableCell("radicand<0"),
                              number_cell(row.one_gap)});
        }
    }
    return t;
}

}  // namespace

Table run_table(const TableOptions& opt) {
    for (double s : opt.s_values) {
        if (!(s > 1)) throw UsageError("--s values must exceed 1");
    }
    if (!(opt.tol > 0)) throw UsageError("--tol must be positive");
    try {
        if (opt.selector == "zeta") return zeta_table(opt);
        if (opt.selector == "prime-zeta") return prime_zeta_table(opt);
        if (opt.selector == "claim") return claim_table(opt);
        if (opt.selector == "cyclotomic-height") return cyclotomic_table(opt);
        if (opt.selector == "probe") return probe_table(opt);
        if (opt.selector == "radical") return radical_table(opt);
    } catch (const RadicandError& e) {
        throw UsageError(e.what());
    } catch (const PrecisionError& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown table selector '" + opt.selector + "'");
}

std::string to_text(const Table& table) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.columns);
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        for (const auto& c : row) line.push_back(format_value(c));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(table.columns.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    std::ostringstream os;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i > 0) os << "  ";
            os << line[i];
            if (i + 1 < line.size()) os << std::string(width[i] - line[i].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

std::string to_structured(const Table& table) {
    using json = nlohmann::ordered_json;
    json j;
    j["table"] = table.name;
    j["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) {
        json r = json::array();
        for (const auto& c : row) {
            std::visit([&](const auto& x) { r.push_back(x); }, c);
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

double parse_real(std::string_view text) {
    const std::string t(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
        throw UsageError("not a real number: '" + t + "'");
    }
    return v;
}

std::uint32_t parse_uint(std::string_view text) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError("not a non-negative integer: '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(parse_real(part));
    return out;
}

std::pair<std::uint32_t, std::uint32_t> parse_int_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto n = parse_uint(text);
        return {n, n};
    }
    const auto first = parse_uint(text.substr(0, dots));
    const auto last = parse_uint(text.substr(dots + 2));
    if (first > last) throw UsageError("empty range '" + std::string(text) + "'");
    return {first, last};
}

std::vector<double> parse_eps_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) return parse_real_list(text);
    const double first = parse_real(text.substr(0, dots));
    const double last = parse_real(text.substr(dots + 2));
    if (!(first > 0 && last > 0 && last <= first)) {
        throw UsageError("eps range must run downward between positive values");
    }
    const int lo = static_cast<int>(std::lround(std::log10(first)));
    const int hi = static_cast<int>(std::lround(std::log10(last)));
    if (std::fabs(std::log10(first) - lo) > 1e-9 || std::fabs(std::log10(last) - hi) > 1e-9) {
        throw UsageError("eps range endpoints must be powers of ten");
    }
    std::vector<double> out;
    for (int k = lo; k >= hi; --k) out.push_back(std::pow(10.0, k));
    return out;
}

}  // namespace pzeta
