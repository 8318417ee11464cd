#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pzeta/arith.hpp"

namespace pzeta {

/// Dense polynomial over Z; coefficient i multiplies x^i. No trailing zeros,
/// so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);

    /// x^d - 1
    static IntPolynomial binomial(std::uint64_t d);

    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^i; zero past the degree.
    Integer coefficient(std::size_t i) const;
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    /// Multiply in place by x^d - 1.
    void multiply_binomial(std::uint64_t d);
    /// Divide in place by x^d - 1; throws std::logic_error on a nonzero remainder.
    void divide_binomial(std::uint64_t d);

    /// Largest |coefficient|.
    Integer height() const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

inline constexpr std::uint32_t kMaxCyclotomicIndex = 10000;

/// Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}, 1 <= n <= kMaxCyclotomicIndex.
IntPolynomial cyclotomic(std::uint32_t n);

/// Height of Phi_n.
Integer height(std::uint32_t n);

std::string to_string(const IntPolynomial& p);

}  // namespace pzeta
