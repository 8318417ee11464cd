// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pzeta/arith.hpp"
#include "pzeta/cyclotomic.hpp"
#include "pzeta/dirichlet.hpp"
#include "pzeta/nested_radical.hpp"
#include "pzeta/zeta.hpp"

using namespace pzeta;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double round_to(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(x * scale) / scale;
}

int failures = 0;

void run(int id, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit > 0 && seconds >= time_limit) {
        out.pass = false;
        out.detail << " [runtime " << seconds << " s exceeds " << time_limit << " s]";
    }
    failures += out.pass ? 0 : 1;
    std::printf("criterion %d %s  %s (%.2f s)%s\n", id, out.pass ? "PASS" : "FAIL", title, seconds,
                out.detail.str().c_str());
    std::fflush(stdout);
}

DirichletSeries random_invertible(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> c(n);
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    if (c[0] == 0) c[0] = 1;
    return DirichletSeries(std::move(c));
}

std::uint32_t odd_part(std::uint32_t n) {
    while (n % 2 == 0) n /= 2;
    return n;
}

}  // namespace

int main() {
    run(1, "symbolic refutation: first coefficient mismatch", 1.0, [](Outcome& o) {
        const auto claim = prime_zeta_claim_series(100);
        const auto m = first_mismatch(claim.lhs, claim.rhs);
        o.require(m.has_value(), "a mismatch exists");
        if (!m) return;
        o.detail << " (" << m->index << ", " << m->lhs.get_str() << ", " << m->rhs.get_str() << ")";
        o.require(m->index == 30 && m->lhs == -2 && m->rhs == 0, "mismatch is (30, -2, 0)");
    });

    run(2, "numeric refutation at s = 2", 5.0, [](Outcome& o) {
        const auto lhs = claim_lhs(2.0);
        const auto rhs = claim_rhs(2.0);
        o.detail.precision(10);
        o.detail << " lhs=" << lhs.value << " rhs=" << rhs.value
                 << " |lhs-rhs|=" << std::abs(lhs.value - rhs.value);
        o.require(std::abs(lhs.value - 1.2158542) <= 5e-8, "lhs = 1.2158542");
        o.require(std::abs(rhs.value - 1.2230397) <= 5e-8, "rhs = 1.2230397");
        o.require(std::abs(lhs.value - rhs.value) > 0.007, "|lhs - rhs| > 0.007");
    });

    run(3, "prime zeta cross-validation", 10.0, [](Outcome& o) {
        const auto p = prime_zeta(2.0);
        const auto d = prime_zeta_direct(2.0, 1000000);
        const double diff = std::abs(p.value - d.value);
        o.detail.precision(15);
        o.detail << " P(2)=" << p.value << " +- " << p.error_bound << ", direct=" << d.value
                 << " +- " << d.error_bound;
        o.require(diff <= p.error_bound + d.error_bound, "agreement within combined bounds");
        o.require(round_to(p.value, 4) == 0.4522, "P(2) rounds to 0.4522");
    });

    run(4, "nested radical refutation at s = 2", 0, [](Outcome& o) {
        const auto c = claim4_check(2.0, 12);
        const double combined = c.radical_error_bound + c.prime_zeta.error_bound;
        o.detail.precision(6);
        o.detail << " 1-f=" << c.radical_value << " P(2)=" << c.prime_zeta.value
                 << " gap=" << c.gap << " bound=" << combined;
        o.require(round_to(c.radical_value, 4) == 0.4588, "1 - f_one(12) rounds to 0.4588");
        o.require(std::abs(c.gap) > 10 * combined, "gap exceeds 10x combined bounds");
    });

    run(5, "tail-corrected radical converges faster", 0, [](Outcome& o) {
        const double reference = eval_nested(2.0, 25, TailMode::kOne).value();
        for (int n = 2; n <= 15; ++n) {
            const double one = std::abs(eval_nested(2.0, n, TailMode::kOne).value() - reference);
            const double zero = std::abs(eval_nested(2.0, n, TailMode::kZero).value() - reference);
            o.require(one <= zero, "depth " + std::to_string(n) + " one-tail gap <= zero-tail gap");
        }
        const double limit_gap = std::abs(eval_nested(2.0, 40, TailMode::kZero).value() -
                                          eval_nested(2.0, 40, TailMode::kOne).value());
        o.detail << " limit gap at depth 40=" << limit_gap;
        o.require(limit_gap < 1e-10, "zero and one tail limits agree within 1e-10");
        const double fp = tail_fixed_point().value;
        o.require(std::abs(fp - 1.0) < 1e-12, "tail fixed point is 1");
    });

    run(6, "cyclotomic coefficients", 10.0, [](Outcome& o) {
        const auto p105 = cyclotomic(105);
        o.require(p105.coefficient(7) == -2 && p105.coefficient(41) == -2,
                  "Phi_105 has -2 at x^7 and x^41");
        std::vector<std::vector<mpq_class>> phi(201);
        int flat_checked = 0;
        for (std::uint32_t n = 1; n <= 200; ++n) {
            const auto p = cyclotomic(n);
            for (const auto& c : p.coefficients()) phi[n].emplace_back(c);
            if (oracle::distinct_prime_count(odd_part(n)) <= 2) {
                ++flat_checked;
                o.require(p.height() == 1, "height(" + std::to_string(n) + ") = 1");
            }
        }
        for (std::uint32_t n = 1; n <= 200; ++n) {
            std::vector<mpq_class> prod{1};
            for (std::uint32_t d = 1; d <= n; ++d) {
                if (n % d == 0) prod = oracle::poly_multiply(prod, phi[d]);
            }
            o.require(prod == oracle::x_pow_minus_one(n), "product identity at n=" + std::to_string(n));
        }
        o.detail << " flat indices checked=" << flat_checked;
    });

    run(7, "Dirichlet algebra properties", 0, [](Outcome& o) {
        const auto mu = invert(zeta_series(10000));
        for (std::size_t n = 1; n <= 10000; ++n) {
            if (mu[n] != oracle::mobius(n)) {
                o.require(false, "invert(zeta)_" + std::to_string(n) + " = mu(n)");
                break;
            }
        }
        std::mt19937_64 rng(20240601);
        const auto unit = DirichletSeries::unit(200);
        for (int i = 0; i < 50; ++i) {
            const auto a = random_invertible(rng, 200);
            o.require(convolve(a, invert(a)) == unit, "a * a^-1 = delta_1, trial " + std::to_string(i));
        }
    });

    run(8, "singularity probe shape", 0, [](Outcome& o) {
        const std::vector<double> eps{1e-2, 1e-3, 1e-4, 1e-5};
        const auto rows = singularity_probe(eps);
        for (const auto& r : rows) o.require(r.ok(), "row eps=" + std::to_string(r.eps) + " " + r.error);
        if (!o.pass) return;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            o.require(rows[i].lhs->value < rows[i - 1].lhs->value, "lhs decreasing");
            o.require(rows[i].rhs->value > rows[i - 1].rhs->value, "rhs increasing");
        }
        o.require(rows.back().lhs->value > 0 && rows.back().lhs->value < 10 * rows.back().eps,
                  "lhs tends to 0 with eps");
        const auto fit = fit_log_quadratic(rows);
        o.detail << " a=" << fit.a << " b=" << fit.b << " c=" << fit.c
                 << " residual=" << fit.relative_residual;
        o.require(fit.a > 0, "positive leading coefficient");
        o.require(fit.relative_residual < 0.1, "relative residual < 10%");
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
