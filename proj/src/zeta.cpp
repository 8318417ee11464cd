#include "pzeta/zeta.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <sstream>

#include "pzeta/arith.hpp"
#include "pzeta/errors.hpp"

namespace pzeta {

namespace {

using Real = long double;

constexpr Real kPi = 3.141592653589793238462643383279502884L;
constexpr Real kRealEps = LDBL_EPSILON;
// Euler-Maclaurin correction terms.
constexpr int kCorrectionTerms = 8;
// Upper limit on the direct-sum length; only reachable within ~1e-7 of the pole.
constexpr Real kMaxTerms = 4e8L;

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Real to_real(const Rational& q) {
    const double hi = q.get_d();
    const double lo = Rational(q - Rational(hi)).get_d();
    return static_cast<Real>(hi) + static_cast<Real>(lo);
}

/// Half an ulp of the double nearest to x.
double double_rounding(Real x) {
    return 0.5 * DBL_EPSILON * static_cast<double>(std::fabs(x));
}

/// B_{2j}/(2j)! for j = 0..kCorrectionTerms+1 (index 0 unused).
const std::array<Real, kCorrectionTerms + 2>& em_coefficients() {
    static const auto table = [] {
        std::array<Real, kCorrectionTerms + 2> c{};
        Integer factorial = 1;
        for (unsigned m = 1; m <= 2 * (kCorrectionTerms + 1); ++m) {
            factorial *= m;
            if (m % 2 == 0) c[m / 2] = to_real(Rational(bernoulli(m) / factorial));
        }
        return c;
    }();
    return table;
}

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(Real x) {
        const Real t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_ += std::fabs(x);
    }
    Real value() const { return sum_ + comp_; }
    Real abs_total() const { return abs_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
    Real abs_ = 0;
};

struct Approx {
    Real value;
    Real bound;
};

/// zeta(s) - 1 by Euler-Maclaurin:
///   sum_{n=2}^{M-1} n^{-s} + M^{1-s}/(s-1) + M^{-s}/2
///     + sum_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} M^{-s-2j+1}
/// The remainder is bounded by the first omitted correction term (real s).
Approx em_zeta_minus_one(Real s, Real tol) {
    const auto& coef = em_coefficients();

    Real m = std::max<Real>(20, std::ceil(10 / (s - 1)));
    auto remainder_at = [&](Real mm) {
        Real rising = 1;  // (s)_{2J+1}
        for (int i = 0; i < 2 * kCorrectionTerms + 1; ++i) rising *= s + i;
        return std::fabs(coef[kCorrectionTerms + 1]) * rising *
               std::pow(mm, -s - 2 * kCorrectionTerms - 1);
    };
    Real remainder = remainder_at(m);
    while (remainder > tol / 2 && 2 * m <= kMaxTerms) {
        m *= 2;
        remainder = remainder_at(m);
    }

    CompensatedSum sum;
    const auto last = static_cast<std::uint64_t>(m) - 1;
    for (std::uint64_t n = last; n >= 2; --n) sum.add(std::pow(static_cast<Real>(n), -s));

    const Real m_pow = std::pow(m, -s);
    sum.add(m * m_pow / (s - 1));
    sum.add(m_pow / 2);
    Real rising = s;         // (s)_{2j-1}
    Real m_power = m_pow / m;  // M^{-s-2j+1}
    for (int j = 1; j <= kCorrectionTerms; ++j) {
        sum.add(coef[j] * rising * m_power);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        m_power /= m * m;
    }

    // One ulp per power plus the compensated-summation error.
    const Real rounding = 8 * kRealEps * sum.abs_total();
    return {sum.value(), remainder + rounding};
}

void require_outside_pole(double s, const char* who) {
    if (!(s > 1)) {
        throw DomainError(std::string(who) + ": s must exceed 1, got " + format_number(s));
    }
    if (s <= 1 + kPoleGuard) {
        throw DomainError(std::string(who) + ": s = 1 + " + format_number(s - 1) +
                          " is inside the pole guard region");
    }
}

void require_tolerance(double tol, const char* who) {
    if (!(tol > 0)) throw DomainError(std::string(who) + ": tolerance must be positive");
}

EvalResult checked(Real value, Real bound, double tol, const char* who) {
    const double total = static_cast<double>(bound) + double_rounding(value);
    if (total > tol) {
        throw PrecisionError(std::string(who) + ": achievable error bound " +
                             format_number(total) + " exceeds tolerance " + format_number(tol));
    }
    return {static_cast<double>(value), total};
}

/// Crude lower bound for zeta(x), x > 1 (zeta(x) > 1/(x-1) and zeta(x) > 1).
Real zeta_lower_bound(Real x) { return std::max<Real>(1, 1 / (x - 1)); }

/// Upper bound for sum_{k>K} |log zeta(ks)|/k, from
/// log zeta(x) <= zeta(x) - 1 <= 2^{-x} (1 + 2/(x-1)).
Real prime_zeta_tail(int k_max, Real s) {
    const Real x = (k_max + 1) * s;
    return (1 + 2 / (x - 1)) * std::pow(Real(2), -x) / (1 - std::pow(Real(2), -s)) / (k_max + 1);
}

Approx prime_zeta_internal(Real s, Real tol) {
    int k_max = 1;
    while (k_max * s <= 60 && prime_zeta_tail(k_max, s) >= tol / 2) ++k_max;
    const Real tail = prime_zeta_tail(k_max, s);

    const auto mu = mobius_table(static_cast<std::uint32_t>(k_max));
    const Real per_term = tol / (4 * k_max);

    CompensatedSum sum;
    Real propagated = 0;
    for (int k = k_max; k >= 1; --k) {
        if (mu[k] == 0) continue;
        const Real x = k * s;
        const Approx zm1 = em_zeta_minus_one(x, per_term * zeta_lower_bound(x));
        const Real log_zeta = std::log1p(zm1.value);
        // |d log zeta| <= |d zeta| / zeta_min
        propagated += zm1.bound / std::max<Real>(1 + zm1.value - zm1.bound, 1) / k;
        sum.add(mu[k] * log_zeta / k);
    }
    const Real rounding = 8 * kRealEps * sum.abs_total();
    return {sum.value(), propagated + tail + rounding};
}

}  // namespace

EvalResult zeta_minus_one(double s, double tol) {
    require_outside_pole(s, "zeta_minus_one");
    require_tolerance(tol, "zeta_minus_one");
    const Approx r = em_zeta_minus_one(s, tol);
    return checked(r.value, r.bound, tol, "zeta_minus_one");
}

EvalResult zeta_real(double s, double tol) {
    require_outside_pole(s, "zeta_real");
    require_tolerance(tol, "zeta_real");
    if (tol < kMinTolerance) {
        throw PrecisionError("zeta_real: tolerance " + format_number(tol) +
                             " is below the working-precision floor " +
                             format_number(kMinTolerance));
    }
    const Approx r = em_zeta_minus_one(s, tol);
    const Real value = 1 + r.value;
    return checked(value, r.bound + kRealEps * value, tol, "zeta_real");
}

EvalResult euler_even_zeta(int k) {
    if (k < 1 || k > 32) {
        throw DomainError("euler_even_zeta: k must lie in [1, 32], got " + std::to_string(k));
    }
    const unsigned m = 2 * static_cast<unsigned>(k);
    Integer factorial = 1;
    for (unsigned i = 2; i <= m; ++i) factorial *= i;
    // zeta(2k) = (-1)^{k-1} (2 pi)^{2k} B_{2k} / (2 (2k)!); the sign cancels.
    const Rational q = abs(bernoulli(m)) / (2 * factorial);
    const Real value = to_real(q) * std::pow(2 * kPi, static_cast<Real>(m));
    const Real bound = (m + 8) * kRealEps * value;
    return {static_cast<double>(value), static_cast<double>(bound) + double_rounding(value)};
}

EvalResult prime_zeta(double s, double tol) {
    require_outside_pole(s, "prime_zeta");
    require_tolerance(tol, "prime_zeta");
    const Approx r = prime_zeta_internal(s, tol);
    return checked(r.value, r.bound, tol, "prime_zeta");
}

EvalResult prime_zeta_direct(double s, std::uint32_t prime_limit) {
    if (!(s > 1)) throw DomainError("prime_zeta_direct: s must exceed 1, got " + format_number(s));
    if (prime_limit < 2) throw DomainError("prime_zeta_direct: prime_limit must be at least 2");
    const PrimeTable table(prime_limit);
    const auto primes = table.primes();
    CompensatedSum sum;
    for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
        sum.add(std::pow(static_cast<Real>(*it), static_cast<Real>(-s)));
    }
    const Real limit = prime_limit;
    const Real tail = std::pow(limit, 1 - static_cast<Real>(s)) / (static_cast<Real>(s) - 1);
    const Real bound = tail + 8 * kRealEps * sum.abs_total();
    return {static_cast<double>(sum.value()),
            static_cast<double>(bound) + double_rounding(sum.value())};
}

EvalResult claim_lhs(double s, double tol) {
    require_outside_pole(s, "claim_lhs");
    require_tolerance(tol, "claim_lhs");
    const Real x = s;
    // d(2/zeta) = 2 dzeta / zeta^2
    const Real zmin = zeta_lower_bound(x);
    const Approx zm1 = em_zeta_minus_one(x, tol * zmin * zmin / 8);
    const Real zeta = 1 + zm1.value;
    const Real value = 2 / zeta;
    const Real zeta_low = std::max<Real>(zeta - zm1.bound, 1);
    const Real bound = 2 * zm1.bound / (zeta * zeta_low) + 4 * kRealEps * value;
    return checked(value, bound, tol, "claim_lhs");
}

EvalResult claim_rhs(double s, double tol) {
    require_outside_pole(s, "claim_rhs");
    require_tolerance(tol, "claim_rhs");
    const Real x = s;
    // First pass fixes the sensitivity 2|1 - P| + e_P of the P(s) terms.
    Approx p = prime_zeta_internal(x, tol / 8);
    const Real sensitivity = 2 * std::fabs(1 - p.value) + 1;
    if (sensitivity * p.bound > tol / 2) {
        p = prime_zeta_internal(x, tol / (4 * sensitivity));
    }
    const Approx p2 = prime_zeta_internal(2 * x, tol / 4);

    const Real one_minus_p = 1 - p.value;
    const Real value = one_minus_p * one_minus_p + 1 - p2.value;
    const Real bound = (2 * std::fabs(one_minus_p) + p.bound) * p.bound + p2.bound +
                       8 * kRealEps * (one_minus_p * one_minus_p + 1 + std::fabs(p2.value));
    return checked(value, bound, tol, "claim_rhs");
}

std::vector<ProbeRow> singularity_probe(std::span<const double> epsilons) {
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        const double eps = epsilons[i];
        if (!(eps > 0 && eps <= 0.5)) {
            throw DomainError("singularity_probe: eps must lie in (0, 0.5], got " +
                              format_number(eps));
        }
        if (i > 0 && !(eps < epsilons[i - 1])) {
            throw DomainError("singularity_probe: eps values must be strictly descending");
        }
    }

    std::vector<ProbeRow> rows;
    rows.reserve(epsilons.size());
    for (const double eps : epsilons) {
        ProbeRow row;
        row.eps = eps;
        const double s = 1 + eps;
        try {
            const EvalResult lhs = claim_lhs(s, 1e-12);
            const EvalResult rhs = claim_rhs(s, 1e-10);
            if (lhs.error_bound >= std::fabs(lhs.value) ||
                rhs.error_bound >= std::fabs(rhs.value)) {
                row.error = "error bound exceeds value";
            }
            row.lhs = lhs;
            row.rhs = rhs;
        } catch (const PrecisionError& e) {
            row.error = e.what();
        } catch (const DomainError& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

LogQuadraticFit fit_log_quadratic(std::span<const ProbeRow> rows) {
    // Normal equations for the basis (L^2, L, 1).
    std::array<std::array<double, 4>, 3> m{};
    std::vector<std::pair<double, double>> points;
    for (const auto& row : rows) {
        if (!row.ok() || !row.rhs) continue;
        points.emplace_back(std::log(row.eps), row.rhs->value);
    }
    if (points.size() < 3) {
        throw DomainError("fit_log_quadratic: need at least three usable probe rows");
    }
    for (const auto& [l, y] : points) {
        const std::array<double, 3> basis{l * l, l, 1.0};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] += basis[i] * basis[j];
            m[i][3] += basis[i] * y;
        }
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
        }
        std::swap(m[col], m[pivot]);
        if (m[col][col] == 0) throw DomainError("fit_log_quadratic: singular design");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    LogQuadraticFit fit;
    fit.a = m[0][3] / m[0][0];
    fit.b = m[1][3] / m[1][1];
    fit.c = m[2][3] / m[2][2];

    double resid2 = 0;
    double norm2 = 0;
    for (const auto& [l, y] : points) {
        const double r = y - (fit.a * l * l + fit.b * l + fit.c);
        resid2 += r * r;
        norm2 += y * y;
    }
    fit.relative_residual = norm2 > 0 ? std::sqrt(resid2 / norm2) : 0.0;
    return fit;
}

}  // namespace pzeta
