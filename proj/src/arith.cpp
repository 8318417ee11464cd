#include "pzeta/arith.hpp"

#include <algorithm>
#include <string>

#include "pzeta/errors.hpp"

namespace pzeta {

PrimeTable::PrimeTable(std::uint32_t limit) : limit_(limit) {
    if (limit < 2) {
        throw DomainError("sieve limit must be at least 2, got " + std::to_string(limit));
    }
    lpf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    // Linear sieve: every composite is crossed off exactly once, by its
    // least prime factor.
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (lpf_[i] == 0) {
            lpf_[i] = i;
            primes_.push_back(i);
        }
        for (std::uint32_t p : primes_) {
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (p > lpf_[i] || m > limit) break;
            lpf_[m] = p;
        }
    }
}

std::uint32_t PrimeTable::smallest_factor(std::uint32_t n) const {
    if (n < 2 || n > limit_) {
        throw DomainError("smallest_factor: " + std::to_string(n) + " outside [2, " +
                          std::to_string(limit_) + "]");
    }
    return lpf_[n];
}

bool PrimeTable::is_prime(std::uint32_t n) const {
    return n >= 2 && n <= limit_ && lpf_[n] == n;
}

PrimeTable sieve(std::uint32_t limit) { return PrimeTable(limit); }

FactoredInteger::FactoredInteger(std::uint64_t n, std::vector<PrimePower> factors)
    : n_(n), factors_(std::move(factors)) {}

bool FactoredInteger::is_squarefree() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

std::uint64_t FactoredInteger::euler_phi() const noexcept {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factors_) {
        phi *= p - 1;
        for (std::uint32_t i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::vector<std::uint64_t> FactoredInteger::divisors() const {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factors_) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FactoredInteger factorize(std::uint64_t n, const PrimeTable& table) {
    if (n == 0 || n > table.limit()) {
        throw DomainError("factorize: " + std::to_string(n) + " outside [1, " +
                          std::to_string(table.limit()) + "]");
    }
    std::vector<PrimePower> factors;
    auto m = static_cast<std::uint32_t>(n);
    while (m > 1) {
        const std::uint32_t p = table.smallest_factor(m);
        std::uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    return FactoredInteger(n, std::move(factors));
}

int mobius(const FactoredInteger& n) {
    if (!n.is_squarefree()) return 0;
    return n.omega() % 2 == 0 ? 1 : -1;
}

std::vector<int> mobius_table(std::uint32_t n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) return mu;
    mu[1] = 1;
    if (n < 2) return mu;
    const PrimeTable table(n);
    for (std::uint32_t i = 2; i <= n; ++i) {
        const std::uint32_t p = table.smallest_factor(i);
        const std::uint32_t rest = i / p;
        mu[i] = rest % p == 0 ? 0 : -mu[rest];
    }
    return mu;
}

namespace {

std::vector<Rational> bernoulli_table(unsigned upto) {
    std::vector<Rational> b(upto + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= upto; ++m) {
        if (m > 1 && m % 2 == 1) {
            b[m] = 0;
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        Rational acc = 0;
        Integer binom = 1;  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            if (sgn(b[j]) != 0) acc += binom * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / (m + 1);
    }
    return b;
}

}  // namespace

Rational bernoulli(unsigned m, unsigned bound) {
    if (m > 1 && m % 2 == 1) {
        throw DomainError("bernoulli: odd index " + std::to_string(m) + " > 1 is not supported");
    }
    if (m > bound) {
        throw DomainError("bernoulli: index " + std::to_string(m) + " exceeds bound " +
                          std::to_string(bound));
    }
    if (m <= kBernoulliBound) {
        static const std::vector<Rational> cached = bernoulli_table(kBernoulliBound);
        return cached[m];
    }
    return bernoulli_table(m)[m];
}

}  // namespace pzeta
