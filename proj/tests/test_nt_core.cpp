#include "zm/nt_core.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace zm;

TEST_SUITE_BEGIN("nt_core");

TEST_CASE("sieves on small limits") {
    auto t = build_sieves(4);
    CHECK(t.mobius[1] == 1);
    CHECK(t.mobius[2] == -1);
    CHECK(t.mobius[3] == -1);
    CHECK(t.mobius[4] == 0);
    CHECK(t.mertens[1] == 1);
    CHECK(t.mertens[2] == 0);
    CHECK(t.mertens[3] == -1);
    CHECK(t.mertens[4] == -1);

    auto one = build_sieves(1);
    CHECK(one.mobius[1] == 1);
    CHECK(one.divisor_count[1] == 1);

    CHECK(build_sieves(12).divisor_count[12] == 6);
    CHECK_THROWS(build_sieves(0));
}

TEST_CASE("sieve invariants up to 1e4") {
    const std::size_t N = 10000;
    auto t = build_sieves(N);
    // Moebius inversion: sum_{d|n} mu(d) = [n = 1]
    std::vector<int> acc(N + 1, 0);
    for (std::size_t d = 1; d <= N; ++d)
        for (std::size_t m = d; m <= N; m += d) acc[m] += t.mobius[d];
    for (std::size_t n = 1; n <= N; ++n) REQUIRE(acc[n] == (n == 1 ? 1 : 0));

    long long M = 0;
    for (std::size_t n = 1; n <= N; ++n) {
        M += t.mobius[n];
        REQUIRE(t.mertens[n] == M);
    }
    for (std::size_t n : {1u, 2u, 36u, 97u, 360u, 9973u}) {
        unsigned cnt = 0;
        for (std::size_t d = 1; d <= n; ++d) cnt += (n % d == 0);
        CHECK(t.divisor_count[n] == cnt);
    }
    // mu(n) = 0 exactly for non-squarefree n
    for (std::size_t n = 2; n <= 2000; ++n) {
        bool sqfree = true;
        for (std::size_t p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) sqfree = false;
        REQUIRE((t.mobius[n] == 0) == !sqfree);
    }
}

TEST_CASE("characters: counts and examples") {
    auto c1 = characters_mod(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].is_principal);
    CHECK(std::abs(c1[0](7) - 1.0) < 1e-15);

    auto c4 = characters_mod(4);
    REQUIRE(c4.size() == 2);
    for (auto& c : c4)
        if (!c.is_principal) CHECK(std::abs(c(3) + 1.0) < 1e-15);

    auto c5 = characters_mod(5);
    REQUIRE(c5.size() == 4);
    for (auto& c : c5) CHECK(std::abs(std::pow(c(2), 4) - 1.0) < 1e-12);

    CHECK_THROWS(characters_mod(0));
}

TEST_CASE("characters: orthogonality, multiplicativity and conjugation for k <= 50") {
    for (unsigned k = 1; k <= 50; ++k) {
        auto cs = characters_mod(k);
        const unsigned phi = euler_phi(k);
        REQUIRE(cs.size() == phi);
        int principal = 0;
        for (auto& c : cs) {
            principal += c.is_principal;
            for (unsigned n = 0; n < k; ++n) {
                const bool unit = std::gcd(n, k) == 1;
                REQUIRE((std::abs(c(n)) == 0.0) == !unit);
                if (unit) REQUIRE(std::abs(std::abs(c(n)) - 1.0) < 1e-12);
                if (c.is_principal) REQUIRE(std::abs(c(n) - (unit ? 1.0 : 0.0)) < 1e-15);
                for (unsigned m = 0; m < k; ++m) REQUIRE(std::abs(c((m * n) % k) - c(m) * c(n)) < 1e-12);
            }
            // the conjugate is also in the list
            auto cc = c.conj();
            bool found = false;
            for (auto& d : cs) found = found || d.exponent == cc.exponent;
            REQUIRE(found);
        }
        REQUIRE(principal == 1);
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) {
                std::complex<double> row = 0;
                for (unsigned n = 0; n < k; ++n) row += cs[i](n) * std::conj(cs[j](n));
                REQUIRE(std::abs(row - (i == j ? double(phi) : 0.0)) < 1e-9);
            }
        // column orthogonality
        for (unsigned m = 1; m < k; ++m)
            for (unsigned n = 1; n < k; ++n) {
                if (std::gcd(m, k) != 1 || std::gcd(n, k) != 1) continue;
                std::complex<double> col = 0;
                for (auto& c : cs) col += c(m) * std::conj(c(n));
                REQUIRE(std::abs(col - (m == n ? double(phi) : 0.0)) < 1e-9);
            }
    }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(1) == doctest::Approx(1.0));
    CHECK(harmonic(2) == doctest::Approx(1.5));
    CHECK(std::fabs(static_cast<double>(harmonic(10)) - 7381.0 / 2520.0) < 1e-15);
    CHECK_THROWS(harmonic(0));
}

TEST_CASE("Bernoulli numbers and polynomials") {
    const auto& B = BernoulliTable::instance();
    CHECK(B.max_index() >= 60);
    CHECK(static_cast<double>(B.number(0)) == 1.0);
    CHECK(static_cast<double>(B.number(1)) == -0.5);
    CHECK(std::fabs(static_cast<double>(B.number(2)) - 1.0 / 6) < 1e-18);
    CHECK(std::fabs(static_cast<double>(B.number(12)) + 691.0 / 2730) < 1e-15);
    for (unsigned m = 1; 2 * m + 1 <= 60; ++m) CHECK(B.number(2 * m + 1) == 0.0L);
    // zeta(0) = B_1 and zeta(-1) = -B_2/2
    CHECK(static_cast<double>(B.number(1)) == doctest::Approx(-0.5));
    CHECK(static_cast<double>(-B.number(2) / 2) == doctest::Approx(-1.0 / 12));
    // B_j(0) = B_j for j != 1, B_2(x) = x^2 - x + 1/6
    CHECK(std::fabs(static_cast<double>(B.polynomial(2, 0.3L)) - (0.09 - 0.3 + 1.0 / 6)) < 1e-15);
    CHECK(std::fabs(static_cast<double>(B.polynomial(4, 0.0L) - B.number(4))) < 1e-18);
}
TEST_SUITE_END();
