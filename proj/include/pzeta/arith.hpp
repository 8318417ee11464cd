#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace pzeta {

using Integer = mpz_class;
/// Exact rational. GMP keeps mpq_class values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Least-prime-factor table over [2, limit].
class PrimeTable {
public:
    explicit PrimeTable(std::uint32_t limit);

    std::uint32_t limit() const noexcept { return limit_; }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }

    /// Least prime factor of n, for 2 <= n <= limit.
    std::uint32_t smallest_factor(std::uint32_t n) const;
    bool is_prime(std::uint32_t n) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> lpf_;
};

/// Linear sieve; throws DomainError for limit < 2.
PrimeTable sieve(std::uint32_t limit);

struct PrimePower {
    std::uint32_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class FactoredInteger {
public:
    FactoredInteger(std::uint64_t n, std::vector<PrimePower> factors);

    std::uint64_t value() const noexcept { return n_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }

    /// Number of distinct prime factors.
    std::size_t omega() const noexcept { return factors_.size(); }
    bool is_squarefree() const noexcept;
    /// True when n = p^a q^b for primes p, q and a, b >= 0 (at most two
    /// distinct primes).
    bool is_two_prime_power() const noexcept { return omega() <= 2; }

    std::uint64_t euler_phi() const noexcept;
    /// All positive divisors, ascending.
    std::vector<std::uint64_t> divisors() const;

private:
    std::uint64_t n_;
    std::vector<PrimePower> factors_;
};

/// Throws DomainError unless 1 <= n <= table.limit() (n = 1 is always valid).
FactoredInteger factorize(std::uint64_t n, const PrimeTable& table);

int mobius(const FactoredInteger& n);

/// mu(1..n) in one pass; element 0 is unused and set to 0.
std::vector<int> mobius_table(std::uint32_t n);

inline constexpr unsigned kBernoulliBound = 64;

/// Exact Bernoulli number B_m (convention B_1 = -1/2) from
/// sum_{j=0}^{m} C(m+1, j) B_j = 0. Odd m > 1 and m > bound are rejected.
Rational bernoulli(unsigned m, unsigned bound = kBernoulliBound);

}  // namespace pzeta
