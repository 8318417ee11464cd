#include "pzeta/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pzeta/errors.hpp"

namespace pzeta {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::binomial(std::uint64_t d) {
    std::vector<Integer> c(d + 1);
    c[0] = -1;
    c[d] += 1;
    return IntPolynomial(std::move(c));
}

Integer IntPolynomial::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

void IntPolynomial::multiply_binomial(std::uint64_t d) {
    if (is_zero()) return;
    // (x^d - 1) p: new[i] = old[i - d] - old[i]
    const std::size_t old_size = coeffs_.size();
    coeffs_.resize(old_size + d);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Integer shifted = i >= d ? coeffs_[i - d] : Integer(0);
        if (i < old_size) shifted -= coeffs_[i];
        coeffs_[i] = std::move(shifted);
    }
    trim();
}

void IntPolynomial::divide_binomial(std::uint64_t d) {
    if (is_zero()) return;
    if (d == 0) throw std::logic_error("divide_binomial: x^0 - 1 is zero");
    const long deg = degree();
    if (deg < static_cast<long>(d)) {
        throw std::logic_error("divide_binomial: divisor degree exceeds dividend degree");
    }
    // p = q (x^d - 1) gives p[i] = q[i - d] - q[i], so q[i] = q[i - d] - p[i].
    const std::size_t q_size = static_cast<std::size_t>(deg) - d + 1;
    std::vector<Integer> q(q_size);
    for (std::size_t i = 0; i < q_size; ++i) {
        q[i] = -coeffs_[i];
        if (i >= d) q[i] += q[i - d];
    }
    for (std::size_t i = q_size; i < coeffs_.size(); ++i) {
        const Integer expected = i >= d ? q[i - d] : Integer(0);
        if (coeffs_[i] != expected) {
            throw std::logic_error("divide_binomial: nonzero remainder dividing by x^" +
                                   std::to_string(d) + " - 1");
        }
    }
    coeffs_ = std::move(q);
    trim();
}

Integer IntPolynomial::height() const {
    Integer h = 0;
    for (const auto& c : coeffs_) {
        if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
    }
    return h;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial cyclotomic(std::uint32_t n) {
    if (n == 0 || n > kMaxCyclotomicIndex) {
        throw DomainError("cyclotomic: n must lie in [1, " + std::to_string(kMaxCyclotomicIndex) +
                          "], got " + std::to_string(n));
    }
    const PrimeTable table(std::max<std::uint32_t>(n, 2));
    const auto divisors = factorize(n, table).divisors();

    // Multiply the mu = +1 factors first so every division is exact.
    IntPolynomial phi(std::vector<Integer>{1});
    for (const auto d : divisors) {
        if (mobius(factorize(n / d, table)) == 1) phi.multiply_binomial(d);
    }
    for (const auto d : divisors) {
        if (mobius(factorize(n / d, table)) == -1) phi.divide_binomial(d);
    }

    const auto phi_n = factorize(n, table).euler_phi();
    if (phi.degree() != static_cast<long>(phi_n) || phi.coefficients().back() != 1) {
        throw std::logic_error("cyclotomic: Phi_" + std::to_string(n) +
                               " failed the degree/monic check");
    }
    return phi;
}

Integer height(std::uint32_t n) { return cyclotomic(n).height(); }

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const Integer& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        const Integer mag = abs(c);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace pzeta
