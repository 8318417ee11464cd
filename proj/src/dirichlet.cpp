#include "pzeta/dirichlet.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pzeta/errors.hpp"

namespace pzeta {

DirichletSeries::DirichletSeries(std::size_t truncation) : coeffs_(truncation) {
    if (truncation == 0) throw DomainError("Dirichlet series truncation must be positive");
}

DirichletSeries::DirichletSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("Dirichlet series truncation must be positive");
}

DirichletSeries DirichletSeries::unit(std::size_t truncation) {
    DirichletSeries out(truncation);
    out.coeffs_[0] = 1;
    return out;
}

const Rational& DirichletSeries::at(std::size_t n) const {
    if (n == 0 || n > coeffs_.size()) {
        throw DomainError("coefficient index " + std::to_string(n) + " outside [1, " +
                          std::to_string(coeffs_.size()) + "]");
    }
    return coeffs_[n - 1];
}

void DirichletSeries::set(std::size_t n, Rational value) {
    if (n == 0 || n > coeffs_.size()) {
        throw DomainError("coefficient index " + std::to_string(n) + " outside [1, " +
                          std::to_string(coeffs_.size()) + "]");
    }
    coeffs_[n - 1] = std::move(value);
}

DirichletSeries zeta_series(std::size_t truncation) {
    return DirichletSeries(std::vector<Rational>(truncation, Rational(1)));
}

DirichletSeries prime_zeta_series(std::size_t truncation, const PrimeTable& table) {
    if (truncation > table.limit()) {
        throw DomainError("prime_zeta_series: truncation " + std::to_string(truncation) +
                          " exceeds prime table limit " + std::to_string(table.limit()));
    }
    DirichletSeries out(truncation);
    for (std::uint32_t p : table.primes()) {
        if (p > truncation) break;
        out.set(p, 1);
    }
    return out;
}

DirichletSeries mobius_series(std::size_t truncation) {
    if (truncation > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("mobius_series: truncation too large");
    }
    const auto mu = mobius_table(static_cast<std::uint32_t>(truncation));
    DirichletSeries out(truncation);
    for (std::size_t n = 1; n <= truncation; ++n) {
        if (mu[n] != 0) out.set(n, mu[n]);
    }
    return out;
}

DirichletSeries dilate(const DirichletSeries& series, unsigned k, std::size_t truncation) {
    if (k == 0) throw DomainError("dilate: k must be positive");
    DirichletSeries out(truncation);
    for (std::size_t n = 1; n <= series.truncation(); ++n) {
        // m = n^k, stopping as soon as it passes the truncation.
        std::size_t m = 1;
        bool fits = true;
        for (unsigned i = 0; i < k; ++i) {
            if (m > truncation / n) {
                fits = false;
                break;
            }
            m *= n;
        }
        if (!fits) break;
        if (sgn(series[n]) != 0) out.set(m, series[n]);
    }
    return out;
}

DirichletSeries convolve(const DirichletSeries& a, const DirichletSeries& b) {
    const std::size_t n_max = std::min(a.truncation(), b.truncation());
    std::vector<Rational> c(n_max);
    for (std::size_t d = 1; d <= n_max; ++d) {
        const Rational& ad = a[d];
        if (sgn(ad) == 0) continue;
        for (std::size_t e = 1; d * e <= n_max; ++e) {
            const Rational& be = b[e];
            if (sgn(be) == 0) continue;
            c[d * e - 1] += ad * be;
        }
    }
    return DirichletSeries(std::move(c));
}

DirichletSeries invert(const DirichletSeries& a) {
    if (sgn(a[1]) == 0) throw NonInvertibleError("invert: a_1 = 0, series is not invertible");
    const std::size_t n_max = a.truncation();
    const Rational inv_a1 = 1 / a[1];

    // acc[n] collects sum_{m | n, m < n} a_{n/m} b_m; b_m is scattered to
    // its multiples as soon as it is final.
    std::vector<Rational> acc(n_max);
    std::vector<Rational> b(n_max);
    for (std::size_t m = 1; m <= n_max; ++m) {
        b[m - 1] = m == 1 ? inv_a1 : Rational(-inv_a1 * acc[m - 1]);
        const Rational& bm = b[m - 1];
        if (sgn(bm) == 0) continue;
        for (std::size_t d = 2; m * d <= n_max; ++d) {
            const Rational& ad = a[d];
            if (sgn(ad) != 0) acc[m * d - 1] += ad * bm;
        }
    }
    return DirichletSeries(std::move(b));
}

DirichletSeries linear_combine(std::span<const WeightedSeries> terms) {
    if (terms.empty()) throw DomainError("linear_combine: empty term list");
    std::size_t n_max = terms.front().series.get().truncation();
    for (const auto& t : terms) n_max = std::min(n_max, t.series.get().truncation());

    std::vector<Rational> out(n_max);
    for (const auto& [weight, ref] : terms) {
        if (sgn(weight) == 0) continue;
        const DirichletSeries& s = ref.get();
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (sgn(s[n]) != 0) out[n - 1] += weight * s[n];
        }
    }
    return DirichletSeries(std::move(out));
}

namespace {

void require_equal_truncation(const DirichletSeries& a, const DirichletSeries& b) {
    if (a.truncation() != b.truncation()) {
        throw DomainError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                          std::to_string(b.truncation()));
    }
}

}  // namespace

std::optional<Mismatch> first_mismatch(const DirichletSeries& a, const DirichletSeries& b) {
    require_equal_truncation(a, b);
    for (std::size_t n = 1; n <= a.truncation(); ++n) {
        if (a[n] != b[n]) return Mismatch{n, a[n], b[n]};
    }
    return std::nullopt;
}

std::vector<std::size_t> mismatch_indices(const DirichletSeries& a, const DirichletSeries& b) {
    require_equal_truncation(a, b);
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= a.truncation(); ++n) {
        if (a[n] != b[n]) out.push_back(n);
    }
    return out;
}

namespace {

PrimeTable table_for(std::size_t truncation) {
    if (truncation > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("truncation too large for the prime table");
    }
    return PrimeTable(std::max<std::uint32_t>(2, static_cast<std::uint32_t>(truncation)));
}

}  // namespace

ClaimSeries prime_zeta_claim_series(std::size_t truncation) {
    const PrimeTable table = table_for(truncation);
    const auto one = DirichletSeries::unit(truncation);
    const auto p = prime_zeta_series(truncation, table);
    const auto p_squared = convolve(p, p);
    const auto p_dilated = dilate(p, 2, truncation);
    const auto inv_zeta = invert(zeta_series(truncation));

    const std::vector<WeightedSeries> lhs_terms{{2, inv_zeta}};
    const std::vector<WeightedSeries> rhs_terms{
        {2, one}, {-2, p}, {1, p_squared}, {-1, p_dilated}};
    return {linear_combine(lhs_terms), linear_combine(rhs_terms)};
}

ClaimSeries squared_radical_series(std::size_t truncation) {
    const PrimeTable table = table_for(truncation);
    const auto one = DirichletSeries::unit(truncation);
    const auto p = prime_zeta_series(truncation, table);
    const auto inv_zeta = invert(zeta_series(truncation));

    const std::vector<WeightedSeries> base_terms{{1, one}, {-1, p}};
    const auto one_minus_p = linear_combine(base_terms);
    const auto p_dilated = dilate(p, 2, truncation);
    const std::vector<WeightedSeries> rhs_terms{{2, inv_zeta}, {-1, one}, {1, p_dilated}};
    return {convolve(one_minus_p, one_minus_p), linear_combine(rhs_terms)};
}

}  // namespace pzeta
