#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pzeta/arith.hpp"

namespace pzeta {

/// Formal Dirichlet series sum_{n=1}^{N} a_n n^{-s} with exact rational
/// coefficients, truncated at N. Coefficients beyond N are unknown, not zero,
/// so binary operations produce a result truncated at the smaller N.
class DirichletSeries {
public:
    /// Zero series truncated at n.
    explicit DirichletSeries(std::size_t truncation);
    /// coeffs[0] is a_1.
    explicit DirichletSeries(std::vector<Rational> coeffs);

    /// delta_1: the constant 1.
    static DirichletSeries unit(std::size_t truncation);

    std::size_t truncation() const noexcept { return coeffs_.size(); }

    /// a_n for 1 <= n <= truncation().
    const Rational& operator[](std::size_t n) const { return coeffs_[n - 1]; }
    const Rational& at(std::size_t n) const;
    void set(std::size_t n, Rational value);

    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const DirichletSeries&, const DirichletSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// zeta(s): a_n = 1.
DirichletSeries zeta_series(std::size_t truncation);

/// P(s): a_n = 1 iff n is prime. Requires truncation <= table.limit().
DirichletSeries prime_zeta_series(std::size_t truncation, const PrimeTable& table);

/// 1/zeta(s): a_n = mu(n).
DirichletSeries mobius_series(std::size_t truncation);

/// Substitution s -> k s: coefficient a_n moves to index n^k.
DirichletSeries dilate(const DirichletSeries& series, unsigned k, std::size_t truncation);

/// Dirichlet convolution, c_n = sum_{d | n} a_d b_{n/d}.
DirichletSeries convolve(const DirichletSeries& a, const DirichletSeries& b);

/// Convolution inverse; throws NonInvertibleError if a_1 = 0.
DirichletSeries invert(const DirichletSeries& a);

struct WeightedSeries {
    Rational weight;
    std::reference_wrapper<const DirichletSeries> series;
};

/// sum_i weight_i * series_i, truncated at the smallest operand truncation.
DirichletSeries linear_combine(std::span<const WeightedSeries> terms);

struct Mismatch {
    std::size_t index;
    Rational lhs;
    Rational rhs;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Smallest n with a_n != b_n. Truncations must be equal.
std::optional<Mismatch> first_mismatch(const DirichletSeries& a, const DirichletSeries& b);

/// Every index n with a_n != b_n, ascending.
std::vector<std::size_t> mismatch_indices(const DirichletSeries& a, const DirichletSeries& b);

/// Both sides of 2/zeta(s) = 2 - 2P(s) + P(s)^2 - P(2s) as Dirichlet series.
struct ClaimSeries {
    DirichletSeries lhs;
    DirichletSeries rhs;
};
ClaimSeries prime_zeta_claim_series(std::size_t truncation);

/// Both sides of the squared radical relation (1 - P(s))^2 = 2/zeta(s) - (1 - P(2s)).
ClaimSeries squared_radical_series(std::size_t truncation);

}  // namespace pzeta
