#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pzeta/zeta.hpp"

namespace pzeta {

/// Value substituted for the truncated tail of the radical.
enum class TailMode {
    kZero,  ///< innermost sqrt(2/zeta(2^n s))
    kOne,   ///< innermost sqrt(2/zeta(2^n s) - 1), the fixed point of X = sqrt(2 - X)
};

/// Beyond this argument zeta(x) is taken as exactly 1 (zeta(x) - 1 < 2^{1-x}).
inline constexpr double kZetaUnityThreshold = 1000.0;

/// Right-to-left evaluation of
///   sqrt(2/zeta(s) - sqrt(2/zeta(2s) - ... sqrt(2/zeta(2^n s) [- 1])))
/// for depth n. levels[k] is the radical rooted at 2/zeta(2^k s), so
/// levels.front() is the full value and levels.back() the innermost root.
struct RadicalTrace {
    double s = 0.0;
    int depth = 0;
    TailMode tail_mode = TailMode::kOne;
    std::vector<double> levels;

    double value() const { return levels.front(); }

    friend bool operator==(const RadicalTrace&, const RadicalTrace&) = default;
};

/// Throws RadicandError naming the first level (outermost = 0) whose radicand
/// is negative.
RadicalTrace eval_nested(double s, int depth, TailMode tail_mode);

struct ConvergenceRow {
    int depth = 0;
    /// Empty when the zero-tail radical is not real at this depth.
    std::optional<double> zero_gap;
    double one_gap = 0.0;
};

/// Gaps |f(n) - f*| for n = 1..max_depth with f* the one-tail value at max_depth.
std::vector<ConvergenceRow> convergence_report(double s, int max_depth);

struct FixedPoint {
    double value = 0.0;
    int iterations = 0;
};

/// Iterates X <- sqrt(2 - X) from x0 until successive iterates agree to 1e-15.
FixedPoint tail_fixed_point(double x0 = 0.5);

struct Claim4Check {
    /// 1 - f_one(depth)
    double radical_value = 0.0;
    /// Bound on |radical_value - (1 - limit)|: the limit is bracketed by
    /// evaluating with tails 0 and sqrt 2 at the maximum depth.
    double radical_error_bound = 0.0;
    EvalResult prime_zeta;
    /// radical_value - prime_zeta.value
    double gap = 0.0;
};

Claim4Check claim4_check(double s, int depth);

/// Smallest s in `grid` (ascending) for which every one-tail evaluation of
/// depth 1..max_depth is real, or empty when none is.
std::optional<double> smallest_real_radical_s(std::span<const double> grid, int max_depth);

}  // namespace pzeta
