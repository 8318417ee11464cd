#include "pzeta/nested_radical.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "pzeta/errors.hpp"

namespace pzeta {

namespace {

constexpr double kZetaTol = 1e-14;
constexpr int kMaxDepth = 60;

void require_args(double s, int depth) {
    if (!(s > 1)) throw DomainError("nested radical: s must exceed 1");
    if (depth < 0 || depth > kMaxDepth) {
        throw DomainError("nested radical: depth must lie in [0, " + std::to_string(kMaxDepth) +
                          "], got " + std::to_string(depth));
    }
}

/// 2/zeta(2^k s) for k = 0..depth. Arguments past kZetaUnityThreshold give 2.
std::vector<double> numerators(double s, int depth) {
    std::vector<double> out(static_cast<std::size_t>(depth) + 1);
    double x = s;
    for (int k = 0; k <= depth; ++k) {
        out[k] = x > kZetaUnityThreshold ? 2.0 : 2.0 / zeta_real(x, kZetaTol).value;
        x *= 2;
    }
    return out;
}

std::vector<double> evaluate(std::span<const double> numer, double tail) {
    const int depth = static_cast<int>(numer.size()) - 1;
    std::vector<double> levels(numer.size());
    double inner = tail;
    for (int k = depth; k >= 0; --k) {
        const double radicand = numer[k] - inner;
        if (radicand < 0) throw RadicandError(k, radicand);
        inner = std::sqrt(radicand);
        levels[k] = inner;
    }
    return levels;
}

double tail_value(TailMode mode) { return mode == TailMode::kOne ? 1.0 : 0.0; }

}  // namespace

RadicalTrace eval_nested(double s, int depth, TailMode tail_mode) {
    require_args(s, depth);
    const auto numer = numerators(s, depth);
    return {s, depth, tail_mode, evaluate(numer, tail_value(tail_mode))};
}

std::vector<ConvergenceRow> convergence_report(double s, int max_depth) {
    require_args(s, max_depth);
    if (max_depth < 1) throw DomainError("convergence_report: max_depth must be positive");
    const auto numer = numerators(s, max_depth);
    const std::span<const double> all(numer);
    const double reference = evaluate(all, 1.0).front();

    std::vector<ConvergenceRow> rows;
    for (int n = 1; n <= max_depth; ++n) {
        const auto prefix = all.first(static_cast<std::size_t>(n) + 1);
        ConvergenceRow row;
        row.depth = n;
        row.one_gap = std::fabs(evaluate(prefix, 1.0).front() - reference);
        try {
            row.zero_gap = std::fabs(evaluate(prefix, 0.0).front() - reference);
        } catch (const RadicandError&) {
            row.zero_gap.reset();
        }
        rows.push_back(row);
    }
    return rows;
}

FixedPoint tail_fixed_point(double x0) {
    if (!(x0 >= 0 && x0 <= 2)) throw DomainError("tail_fixed_point: x0 must lie in [0, 2]");
    // The map has slope -1/2 at the root, so 200 steps is far more than enough.
    FixedPoint fp{x0, 0};
    for (int i = 1; i <= 200; ++i) {
        const double next = std::sqrt(2.0 - fp.value);
        const double step = std::fabs(next - fp.value);
        fp = {next, i};
        if (step < 1e-15) break;
    }
    return fp;
}

Claim4Check claim4_check(double s, int depth) {
    require_args(s, depth);
    const auto numer = numerators(s, kMaxDepth);
    const std::span<const double> all(numer);
    const auto levels = evaluate(all.first(static_cast<std::size_t>(depth) + 1), 1.0);
    const double f_one = levels.front();

    // The radical is monotone in its tail and every exact tail lies in
    // [0, sqrt 2], so the two extreme tails at the deepest level bracket the
    // limit; the distance from f_one to the far end bounds the truncation.
    double bracket = std::numeric_limits<double>::infinity();
    std::vector<double> deep;
    try {
        deep = evaluate(all, 0.0);
        const double hi = evaluate(all, std::sqrt(2.0)).front();
        bracket = std::max(std::fabs(deep.front() - f_one), std::fabs(hi - f_one));
    } catch (const RadicandError&) {
        deep = levels;
    }
    // First-order propagation of the zeta tolerance and per-level rounding,
    // d r_0 / d radicand_k = prod_{j<=k} 1/(2 r_j); counted once for f_one
    // and once for the bracket ends.
    double numeric = 0.0;
    double amplification = 1.0;
    for (const double r : deep) {
        amplification /= 2 * r;
        numeric += amplification * (2 * kZetaTol + 4 * DBL_EPSILON);
    }

    Claim4Check out;
    out.radical_value = 1.0 - f_one;
    out.radical_error_bound = bracket + 2 * numeric;
    out.prime_zeta = prime_zeta(s);
    out.gap = out.radical_value - out.prime_zeta.value;
    return out;
}

std::optional<double> smallest_real_radical_s(std::span<const double> grid, int max_depth) {
    for (const double s : grid) {
        try {
            for (int n = 1; n <= max_depth; ++n) eval_nested(s, n, TailMode::kOne);
            return s;
        } catch (const RadicandError&) {
        }
    }
    return std::nullopt;
}

}  // namespace pzeta
