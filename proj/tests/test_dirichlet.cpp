#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pzeta/dirichlet.hpp"
#include "pzeta/errors.hpp"

using namespace pzeta;

namespace {

DirichletSeries delta(std::size_t n) { return DirichletSeries::unit(n); }

DirichletSeries ones(std::size_t n) { return DirichletSeries(std::vector<Rational>(n, 1)); }

// Small random rationals; a_1 is forced nonzero when `invertible`.
DirichletSeries random_series(std::mt19937_64& rng, std::size_t n, bool invertible) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    std::vector<Rational> c(n);
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    if (invertible && c[0] == 0) c[0] = Rational(3, 2);
    return DirichletSeries(std::move(c));
}

// Naive divisor-loop convolution, the definition verbatim.
DirichletSeries naive_convolve(const DirichletSeries& a, const DirichletSeries& b) {
    const std::size_t n = std::min(a.truncation(), b.truncation());
    DirichletSeries c(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational sum = 0;
        for (std::size_t d = 1; d <= m; ++d) {
            if (m % d == 0) sum += a[d] * b[m / d];
        }
        c.set(m, sum);
    }
    return c;
}

}  // namespace

TEST_CASE("zeta_series is all ones") {
    CHECK(zeta_series(3) == ones(3));
    CHECK(zeta_series(1) == ones(1));
    CHECK(zeta_series(10) == ones(10));
}

TEST_CASE("prime_zeta_series marks primes") {
    const auto t = sieve(100);
    const auto p6 = prime_zeta_series(6, t);
    CHECK(p6 == DirichletSeries(std::vector<Rational>{0, 1, 1, 0, 1, 0}));
    CHECK(prime_zeta_series(1, t)[1] == 0);

    const auto p30 = prime_zeta_series(30, t);
    int nonzero = 0;
    for (std::size_t n = 1; n <= 30; ++n) {
        CHECK((p30[n] == 1) == oracle::is_prime(n));
        nonzero += p30[n] != 0;
    }
    CHECK(nonzero == 10);
    CHECK_THROWS_AS(prime_zeta_series(101, t), DomainError);
}

TEST_CASE("dilate examples") {
    const auto t = sieve(30);
    const auto p2 = dilate(prime_zeta_series(30, t), 2, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(p2[n] == ((n == 4 || n == 9 || n == 25) ? 1 : 0));
    }
    const auto a = prime_zeta_series(30, t);
    CHECK(dilate(a, 1, 30) == a);
    CHECK(dilate(a, 1, 12) == prime_zeta_series(12, t));

    const auto z2 = dilate(zeta_series(10), 2, 10);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(z2[n] == ((n == 1 || n == 4 || n == 9) ? 1 : 0));
}

TEST_CASE("dilate leaves non-k-th powers at zero") {
    std::mt19937_64 rng(7);
    for (unsigned k = 2; k <= 4; ++k) {
        const auto a = random_series(rng, 40, false);
        const auto d = dilate(a, k, 2000);
        for (std::size_t m = 1; m <= 2000; ++m) {
            std::size_t root = 0;
            std::size_t pow = 1;
            for (std::size_t r = 1;; ++r) {
                pow = 1;
                for (unsigned i = 0; i < k; ++i) pow *= r;
                if (pow >= m) {
                    if (pow == m) root = r;
                    break;
                }
            }
            if (root == 0 || root > a.truncation()) {
                REQUIRE(d[m] == 0);
            } else {
                REQUIRE(d[m] == a[root]);
            }
        }
    }
}

TEST_CASE("convolve examples") {
    const auto t = sieve(100);
    const auto p = prime_zeta_series(100, t);
    const auto pp = convolve(p, p);
    CHECK(pp[4] == 1);
    CHECK(pp[6] == 2);
    CHECK(convolve(zeta_series(100), mobius_series(100)) == delta(100));
    CHECK(convolve(zeta_series(50), zeta_series(80)).truncation() == 50);
}

TEST_CASE("convolve matches the divisor-sum definition") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_series(rng, 120, false);
        const auto b = random_series(rng, 150, false);
        CHECK(convolve(a, b) == naive_convolve(a, b));
    }
}

TEST_CASE("convolve is commutative and associative") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 200, false);
        const auto b = random_series(rng, 200, false);
        const auto c = random_series(rng, 200, false);
        CHECK(convolve(a, b) == convolve(b, a));
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    }
}

TEST_CASE("invert examples") {
    const auto mu = invert(zeta_series(100));
    for (std::size_t n = 1; n <= 100; ++n) CHECK(mu[n] == oracle::mobius(n));
    CHECK(mu[30] == -1);
    CHECK(invert(delta(40)) == delta(40));
}

TEST_CASE("convolve(a, invert(a)) is the unit") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 200, true);
        REQUIRE(convolve(a, invert(a)) == delta(200));
    }
}

TEST_CASE("invert rejects a_1 = 0") {
    DirichletSeries a(10);
    a.set(2, 1);
    CHECK_THROWS_AS(invert(a), NonInvertibleError);
    CHECK_THROWS_AS(invert(a), DomainError);
}

TEST_CASE("linear_combine examples") {
    const auto t = sieve(30);
    const auto d = delta(30);
    const auto p = prime_zeta_series(30, t);
    const std::vector<WeightedSeries> two_minus_2p{{2, d}, {-2, p}};
    CHECK(linear_combine(two_minus_2p)[2] == -2);

    const auto z = zeta_series(10);
    const std::vector<WeightedSeries> zero{{0, z}};
    CHECK(linear_combine(zero) == DirichletSeries(10));

    const auto claim = prime_zeta_claim_series(30);
    CHECK(claim.rhs[4] == 0);

    const auto z20 = zeta_series(20);
    const auto z15 = zeta_series(15);
    const std::vector<WeightedSeries> mixed{{1, z20}, {1, z15}};
    CHECK(linear_combine(mixed).truncation() == 15);
    CHECK_THROWS(linear_combine(std::span<const WeightedSeries>{}));
}

TEST_CASE("first_mismatch examples") {
    const auto claim = prime_zeta_claim_series(100);
    const auto mm = first_mismatch(claim.lhs, claim.rhs);
    REQUIRE(mm.has_value());
    CHECK(*mm == Mismatch{30, -2, 0});

    const auto z = zeta_series(20);
    CHECK_FALSE(first_mismatch(z, z).has_value());
    CHECK(*first_mismatch(z, delta(20)) == Mismatch{2, 1, 0});
    CHECK_THROWS_AS(first_mismatch(z, zeta_series(21)), DomainError);
}

TEST_CASE("claim sides agree below 30 and mismatch only off p^a q^b") {
    constexpr std::size_t kN = 10000;
    const auto claim = prime_zeta_claim_series(kN);
    const auto idx = mismatch_indices(claim.lhs, claim.rhs);
    REQUIRE_FALSE(idx.empty());
    CHECK(idx.front() == 30);

    std::vector<std::size_t> within_100;
    for (auto n : idx) {
        if (n <= 100) within_100.push_back(n);
        CAPTURE(n);
        REQUIRE(oracle::distinct_prime_count(n) >= 3);
    }
    CHECK(within_100 == std::vector<std::size_t>{30, 42, 66, 70, 78});

    // every index with at most two distinct primes agrees
    std::size_t agree = 0;
    for (std::size_t n = 1; n <= kN; ++n) {
        if (oracle::distinct_prime_count(n) <= 2) {
            REQUIRE(claim.lhs[n] == claim.rhs[n]);
            ++agree;
        }
    }
    CHECK(agree > 0);
}

TEST_CASE("lhs of the claim is twice the Mobius series") {
    const auto claim = prime_zeta_claim_series(500);
    for (std::size_t n = 1; n <= 500; ++n) REQUIRE(claim.lhs[n] == 2 * oracle::mobius(n));
}

TEST_CASE("squared radical relation mismatches at 30") {
    const auto sq = squared_radical_series(200);
    const auto mm = first_mismatch(sq.lhs, sq.rhs);
    REQUIRE(mm.has_value());
    CHECK(mm->index == 30);
}
