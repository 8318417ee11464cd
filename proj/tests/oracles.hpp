#pragma once

// Test-only reference implementations. Nothing here calls into the library,
// so each check compares two independent routes.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline int mobius(std::uint64_t n) {
    int sign = 1;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

inline int distinct_prime_count(std::uint64_t n) {
    int count = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ++count;
        while (n % d == 0) n /= d;
    }
    return count + (n > 1 ? 1 : 0);
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::uint64_t a = k, b = n;
        while (b != 0) {
            const auto t = a % b;
            a = b;
            b = t;
        }
        count += a == 1;
    }
    return count;
}

/// Akiyama-Tanigawa algorithm; yields B_1 = +1/2 but agrees with the
/// standard convention for every even index.
inline mpq_class bernoulli(unsigned m) {
    std::vector<mpq_class> a(m + 1);
    for (unsigned k = 0; k <= m; ++k) {
        a[k] = mpq_class(1, k + 1);
        for (unsigned j = k; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
    }
    return a[0];
}

/// Bracket for zeta(s): direct sum to n plus the integral tail
/// int_{n+1}^inf x^{-s} dx <= sum_{k>n} k^{-s} <= int_{n}^inf x^{-s} dx.
inline std::pair<long double, long double> zeta_bracket(long double s, std::uint64_t n) {
    long double sum = 0;
    for (std::uint64_t k = n; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -s);
    const long double lo = std::pow(static_cast<long double>(n + 1), 1 - s) / (s - 1);
    const long double hi = std::pow(static_cast<long double>(n), 1 - s) / (s - 1);
    return {sum + lo, sum + hi};
}

/// Polynomial long division over Q (dense, lowest degree first).
/// Returns {quotient, remainder}; remainder is trimmed.
inline std::pair<std::vector<mpq_class>, std::vector<mpq_class>> poly_divide(
    std::vector<mpq_class> num, const std::vector<mpq_class>& den) {
    auto trim = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(num);
    std::vector<mpq_class> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        const mpq_class f = num.back() / den.back();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        trim(num);
    }
    return {q, num};
}

inline std::vector<mpq_class> poly_multiply(const std::vector<mpq_class>& a,
                                            const std::vector<mpq_class>& b) {
    std::vector<mpq_class> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline std::vector<mpq_class> x_pow_minus_one(std::size_t d) {
    std::vector<mpq_class> p(d + 1);
    p[0] = -1;
    p[d] = 1;
    return p;
}

/// Nested radical evaluated by a fresh recursion, outermost level k:
/// r_k = sqrt(numer[k] - r_{k+1}), with r_{n+1} = tail. Returns NaN when a
/// radicand is negative.
inline double nested_radical(const std::vector<double>& numer, double tail) {
    double inner = tail;
    for (std::size_t k = numer.size(); k-- > 0;) {
        const double r = numer[k] - inner;
        if (r < 0) return std::nan("");
        inner = std::sqrt(r);
    }
    return inner;
}

}  // namespace oracle
