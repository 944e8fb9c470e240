#include <catch2/catch_amalgamated.hpp>

#include <qprism/prism.hpp>

#include "test_util.hpp"

using namespace qprism;
using testutil::random_padic;
using testutil::random_tower;

TEST_CASE("distinguished elements of the base prism") {
    const unsigned N = 16, M = 48;
    SECTION("xi_r equals [p^r]_q") {
        for (unsigned p : {2u, 3u}) {
            for (unsigned r : {1u, 2u, 3u}) {
                unsigned long pr = 1;
                for (unsigned i = 0; i < r; ++i) pr *= p;
                if (pr >= M) continue;
                CHECK(xi_r(p, N, M, r) == q_int_tower(p, N, M, pr));
            }
        }
    }
    SECTION("phi_power_xi is frobenius iterated on xi") {
        for (unsigned p : {2u, 3u}) {
            TowerSeries f = xi_tilde(p, N, M);
            for (unsigned r = 0; r <= 2; ++r) {
                CHECK(phi_power_xi(p, N, M, r) == f);
                f = f.frobenius();
            }
        }
    }
    SECTION("phi(xi) at p=2 is 1 + q^2 = 2 + 2s + s^2") {
        TowerSeries f = phi_power_xi(2, N, M, 1);
        CHECK(f.coeff(0) == 2);
        CHECK(f.coeff(1) == 2);
        CHECK(f.coeff(2) == 1);
        CHECK(f.poly_degree() == 2);
    }
}

TEST_CASE("delta operator") {
    const unsigned N = 12, M = 20;
    SECTION("delta(q) = 0") {
        for (unsigned p : {2u, 3u, 5u}) CHECK(delta(q_element(p, N, M)).is_zero());
    }
    SECTION("delta(xi) at q=1 equals 1 - p^(p-1)") {
        for (unsigned p : {2u, 3u, 5u}) {
            PadicNum v = delta(xi_tilde(p, N, M)).evaluate_q1();
            Int expect = mod_floor(Int(1) - int_pow(p, p - 1), int_pow(p, N - 1));
            CHECK(v.value() == expect);
        }
    }
    SECTION("phi(x) = x^p + p delta(x)") {
        std::mt19937_64 rng(71);
        for (unsigned p : {2u, 3u}) {
            for (int t = 0; t < 6; ++t) {
                TowerSeries f = random_tower(rng, p, N, M);
                TowerSeries lhs = f.frobenius().reduced(N - 1, M);
                TowerSeries rhs = f.pow(p).reduced(N - 1, M) + delta(f).scaled(Int(p));
                CHECK(lhs == rhs);
            }
        }
    }
    SECTION("delta-ring axioms on random inputs") {
        std::mt19937_64 rng(72);
        for (unsigned p : {2u, 3u}) {
            TowerSeries zero(p, 0, N, M);
            CHECK(delta(zero).is_zero());
            CHECK(delta(TowerSeries::one(p, 0, N, M)).is_zero());
            for (int t = 0; t < 5; ++t) {
                TowerSeries x = random_tower(rng, p, N, M);
                TowerSeries y = random_tower(rng, p, N, M);
                // delta(x+y) = delta(x) + delta(y) + (x^p + y^p - (x+y)^p)/p
                TowerSeries diff = x.pow(p) + y.pow(p) - (x + y).pow(p);
                TowerSeries corr(p, 0, N - 1, M);
                for (unsigned i = 0; i < M; ++i) {
                    Int c = diff.coeff(i);
                    REQUIRE(mpz_divisible_ui_p(c.get_mpz_t(), p));
                    corr.set_coeff(i, c / p);
                }
                CHECK(delta(x + y) == delta(x) + delta(y) + corr);
                // delta(xy) = x^p delta(y) + y^p delta(x) + p delta(x) delta(y)
                TowerSeries lhs = delta(x * y);
                TowerSeries rhs = x.pow(p).reduced(N - 1, M) * delta(y) +
                                  y.pow(p).reduced(N - 1, M) * delta(x) +
                                  (delta(x) * delta(y)).scaled(Int(p));
                CHECK(lhs == rhs);
            }
        }
    }
    SECTION("guard digit is required") {
        TowerSeries f(2, 0, 1, 4);
        CHECK_THROWS_WITH(delta(f), Catch::Matchers::ContainsSubstring("guard digit"));
    }
}

TEST_CASE("is_distinguished") {
    const unsigned N = 12, M = 32;
    for (unsigned p : {2u, 3u}) {
        CHECK(is_distinguished(xi_tilde(p, N, M)).distinguished);
        CHECK(!is_distinguished(TowerSeries::one(p, 0, N, M)).distinguished);
        for (unsigned r = 1; r <= 3; ++r) {
            if ((p - 1) * int_pow(p, r) >= M) continue;
            auto rep = is_distinguished(phi_power_xi(p, N, M, r));
            CHECK(rep.distinguished);
            CHECK(rep.delta_at_q1.is_unit());
        }
    }
}

TEST_CASE("nygaard filtration certificates") {
    const unsigned N = 14, M = 32;
    for (unsigned p : {2u, 3u}) {
        TowerSeries mu = mu_element(p, N, M);
        SECTION("mu has level exactly 1 at p=" + std::to_string(p)) {
            NygaardCertificate c = nygaard_level(mu, 4);
            CHECK(c.level == 1);
            CHECK(c.quotient == mu.reduced(N, M - (p - 1)));
            CHECK(c.verify());
        }
        SECTION("mu^2 has level exactly 2 at p=" + std::to_string(p)) {
            NygaardCertificate c = nygaard_level(mu * mu, 4);
            CHECK(c.level == 2);
            CHECK(c.verify());
        }
        SECTION("units have level 0 at p=" + std::to_string(p)) {
            NygaardCertificate c = nygaard_level(TowerSeries::one(p, 0, N, M), 4);
            CHECK(c.level == 0);
            CHECK(c.verify());
        }
    }
    SECTION("tampered certificates fail") {
        NygaardCertificate c = nygaard_level(mu_element(2, N, M), 2);
        c.level += 1;
        CHECK(!c.verify());
    }
    SECTION("multiplicativity at certificate level") {
        std::mt19937_64 rng(81);
        for (unsigned p : {2u, 3u}) {
            TowerSeries mu = mu_element(p, N, M);
            for (int t = 0; t < 4; ++t) {
                TowerSeries f = mu * random_tower(rng, p, N, M);
                TowerSeries g = mu * random_tower(rng, p, N, M);
                unsigned lf = nygaard_level(f, 3).level;
                unsigned lg = nygaard_level(g, 3).level;
                NygaardCertificate c = nygaard_level(f * g, lf + lg);
                CHECK(c.level >= lf + lg);
                CHECK(c.verify());
            }
        }
    }
}

TEST_CASE("q-factorial factorization certificates") {
    const unsigned N = 16, M = 96;
    SECTION("p=2, n=2: [2]_q = xi, unit 1") {
        FactorizationCertificate c = qfact_factorize(2, N, M, 2);
        CHECK(c.exponents == std::vector<unsigned long>{1});
        CHECK(c.unit == TowerSeries::one(2, 0, N, M - 1));
        CHECK(c.verify());
    }
    SECTION("p=2, n=4: exponents [2,1], unit [3]_q") {
        FactorizationCertificate c = qfact_factorize(2, N, M, 4);
        CHECK(c.exponents == std::vector<unsigned long>{2, 1});
        CHECK(c.unit == q_int_tower(2, N, c.order, 3));
        CHECK(c.unit_passes_unit_test());
        CHECK(c.verify());
    }
    SECTION("p=3, n=3: exponents [1], unit [2]_q") {
        FactorizationCertificate c = qfact_factorize(3, N, M, 3);
        CHECK(c.exponents == std::vector<unsigned long>{1});
        CHECK(c.unit == q_int_tower(3, N, c.order, 2));
        CHECK(c.verify());
    }
    SECTION("exponent lists are floor(n/p^r) and certificates verify") {
        for (unsigned p : {2u, 3u}) {
            for (unsigned long n = 1; n <= p * p + 2; ++n) {
                FactorizationCertificate c = qfact_factorize(p, 12, 64, n);
                auto expect = qfact_exponents(p, n);
                CHECK(c.exponents == expect);
                CHECK(c.unit_passes_unit_test());
                CHECK(c.verify());
            }
        }
    }
    SECTION("order exhaustion is reported") {
        CHECK_THROWS_WITH(qfact_factorize(2, 8, 4, 8),
                          Catch::Matchers::ContainsSubstring("exhausted"));
    }
}

TEST_CASE("rank-1 elements") {
    const unsigned N = 12, M = 24;
    std::mt19937_64 rng(91);
    for (unsigned p : {2u, 3u}) {
        CHECK(rank_one_check(q_element(p, N, M)));
        CHECK(rank_one_check(TowerSeries::one(p, 0, N, M)));
        PadicNum a = random_padic(rng, p, N + factorial_valuation(p, M));
        CHECK(rank_one_check(binomial_qpower(a, M, N)));
        TowerSeries mu = mu_element(p, N, M);
        CHECK(!rank_one_check(TowerSeries::one(p, 0, N, M) + mu * mu));
    }
}

TEST_CASE("q-divided powers") {
    const unsigned N = 16, M = 64;
    SECTION("x = q kills gamma_n for n >= 2") {
        for (unsigned p : {2u, 3u}) {
            auto [g, c] = qdivided_power(q_element(p, N, M), 3);
            CHECK(g.is_zero());
            CHECK(c.level >= 3);
            CHECK(c.verify());
        }
    }
    SECTION("closed form for x = q^m against the exact polynomial oracle") {
        for (unsigned p : {2u, 3u}) {
            for (unsigned long m : {1ul, 2ul, 3ul, 5ul, 7ul}) {
                for (unsigned long n : {1ul, 2ul, 3ul, 4ul}) {
                    TowerSeries x = q_element(p, N, M).pow(m);
                    auto [g, cert] = qdivided_power(x, n);
                    // gamma_(n,q)(q^m - 1) = q^(n(n-1)/2) (q-1)^n binom(m,n)_q
                    LaurentPoly oracle =
                        m >= n ? q_binomial(static_cast<unsigned>(m), static_cast<unsigned>(n))
                                     .mul_monomial(1, static_cast<int>(n * (n - 1) / 2))
                               : LaurentPoly();
                    LaurentPoly qm1 = LaurentPoly::q(1) - LaurentPoly::one();
                    for (unsigned long i = 0; i < n; ++i) oracle = oracle * qm1;
                    // embed the polynomial oracle into the truncated tower window
                    TowerSeries expect(p, 0, g.precision(), g.order());
                    for (const auto& [mo, co] : oracle.terms()) {
                        TowerSeries qe = TowerSeries::one_plus_s_pow(p, 0, g.precision(),
                                                                     g.order(), mo.q);
                        expect = expect + qe.scaled(co);
                    }
                    CHECK(g == expect);
                    CHECK(cert.level >= n);
                    CHECK(cert.verify());
                }
            }
        }
    }
    SECTION("seeded rank-1 inputs carry level >= n certificates") {
        std::mt19937_64 rng(101);
        for (unsigned p : {2u, 3u}) {
            unsigned work = N + factorial_valuation(p, M);
            for (int t = 0; t < 3; ++t) {
                TowerSeries x = binomial_qpower(random_padic(rng, p, work), M, N);
                for (unsigned long n : {2ul, 4ul}) {
                    auto [g, cert] = qdivided_power(x, n);
                    CHECK(cert.level >= n);
                    CHECK(cert.verify());
                }
            }
        }
    }
    SECTION("hypothesis failures are rejected") {
        TowerSeries mu = mu_element(2, N, M);
        TowerSeries bad = TowerSeries::one(2, 0, N, M) + mu * mu;
        CHECK_THROWS_WITH(qdivided_power(bad, 2),
                          Catch::Matchers::ContainsSubstring("rank 1"));
    }
}

TEST_CASE("cyclotomic congruence reports") {
    for (unsigned p : {2u, 3u}) {
        for (unsigned r : {1u, 2u}) {
            CongruenceReport rep = congruence_check(p, r);
            CHECK(rep.product_congruence);
            CHECK(rep.frobenius_congruence);
            CHECK(rep.unit == LaurentPoly::one());
            CHECK(rep.pass());
        }
    }
}
