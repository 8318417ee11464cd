#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pzeta {

/// A value with an upper bound on |value - true value|. The bound covers
/// series truncation plus an estimate of accumulated rounding.
struct EvalResult {
    double value = 0.0;
    double error_bound = 0.0;
};

/// Smallest absolute tolerance accepted by zeta_real.
inline constexpr double kMinTolerance = 1e-14;
/// zeta_real and the claim evaluators refuse s <= 1 + kPoleGuard.
inline constexpr double kPoleGuard = 1e-8;

/// Riemann zeta for real s > 1 + kPoleGuard via Euler-Maclaurin summation.
/// Throws DomainError near or below the pole, PrecisionError when tol
/// cannot be met.
EvalResult zeta_real(double s, double tol = kMinTolerance);

/// zeta(s) - 1, accurate in the relative sense even when zeta(s) is
/// within rounding of 1 (large s).
EvalResult zeta_minus_one(double s, double tol = kMinTolerance);

/// zeta(2k) from Euler's formula with an exact Bernoulli number, 1 <= k <= 32.
EvalResult euler_even_zeta(int k);

/// Prime zeta P(s) = sum_k mu(k)/k log zeta(ks).
EvalResult prime_zeta(double s, double tol = 1e-12);

/// Sum over primes p <= prime_limit of p^{-s}; the bound is the integral
/// tail prime_limit^{1-s}/(s-1).
EvalResult prime_zeta_direct(double s, std::uint32_t prime_limit);

/// 2/zeta(s).
EvalResult claim_lhs(double s, double tol = 1e-12);

/// 2 - 2P(s) + P(s)^2 - P(2s).
EvalResult claim_rhs(double s, double tol = 1e-12);

struct ProbeRow {
    double eps = 0.0;
    std::optional<EvalResult> lhs;
    std::optional<EvalResult> rhs;
    /// Non-empty when the row could not be evaluated to a usable accuracy.
    std::string error;

    bool ok() const noexcept { return error.empty(); }
};

/// Evaluates both sides of the claim at s = 1 + eps for each eps.
/// eps must lie in (0, 0.5] and be strictly descending.
std::vector<ProbeRow> singularity_probe(std::span<const double> epsilons);

/// Least-squares fit rhs ~ a L^2 + b L + c with L = log(eps).
struct LogQuadraticFit {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    /// ||residual||_2 / ||rhs||_2
    double relative_residual = 0.0;
};

/// Uses only rows that evaluated cleanly; needs at least three of them.
LogQuadraticFit fit_log_quadratic(std::span<const ProbeRow> rows);

}  // namespace pzeta
