#include <catch2/catch_amalgamated.hpp>

#include <qprism/qcomb.hpp>

#include <random>

using namespace qprism;

namespace {

// Independent oracle for the Gaussian binomial: exact dense division
// [n]_q! / ([k]_q! [n-k]_q!) over the integers. Kept free of the Pascal
// recursion that the implementation uses.
detail::QPoly dense_q_int(unsigned n) {
    detail::QPoly f(n, 0);
    for (unsigned i = 0; i < n; ++i) f[i] = 1;
    return f;
}

detail::QPoly dense_mul(const detail::QPoly& a, const detail::QPoly& b) {
    detail::QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

detail::QPoly dense_q_factorial(unsigned n) {
    detail::QPoly r{Int(1)};
    for (unsigned k = 1; k <= n; ++k) r = dense_mul(r, dense_q_int(k));
    return r;
}

LaurentPoly q_binomial_oracle(unsigned n, unsigned k) {
    detail::QPoly num = dense_q_factorial(n);
    detail::QPoly den = dense_mul(dense_q_factorial(k), dense_q_factorial(n - k));
    detail::QPoly quot = detail::qpoly_divexact(num, den);
    LaurentPoly r;
    for (std::size_t i = 0; i < quot.size(); ++i)
        r += LaurentPoly::monomial(quot[i], static_cast<int>(i));
    return r;
}

}  // namespace

TEST_CASE("q_int basics") {
    CHECK(q_int(0).is_zero());
    CHECK(q_int(1) == LaurentPoly::one());
    // [3]_q = 1 + q + q^2
    CHECK(q_int(3) == LaurentPoly::one() + LaurentPoly::q(1) + LaurentPoly::q(2));
    // [-2]_q = -q^(-2) - q^(-1)
    CHECK(q_int(-2) == -(LaurentPoly::q(-2) + LaurentPoly::q(-1)));
    CHECK(q_int(3).str() == "1 + q + q^2");
}

TEST_CASE("q_factorial basics") {
    CHECK(q_factorial(0) == LaurentPoly::one());
    CHECK(q_factorial(2) == LaurentPoly::one() + LaurentPoly::q(1));
    // [3]_q! = 1 + 2q + 2q^2 + q^3
    LaurentPoly expect = LaurentPoly::one() + LaurentPoly::monomial(2, 1) +
                         LaurentPoly::monomial(2, 2) + LaurentPoly::q(3);
    CHECK(q_factorial(3) == expect);
}

TEST_CASE("q_binomial against rational-division oracle") {
    CHECK(q_binomial(7, 0) == LaurentPoly::one());
    CHECK(q_binomial(2, 1) == q_int(2));
    LaurentPoly b42 = LaurentPoly::one() + LaurentPoly::q(1) + LaurentPoly::monomial(2, 2) +
                      LaurentPoly::q(3) + LaurentPoly::q(4);
    CHECK(q_binomial(4, 2) == b42);
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(q_binomial(n, k) == q_binomial_oracle(n, k));
    CHECK_THROWS_AS(q_binomial(3, 4), std::invalid_argument);
}

TEST_CASE("q_pochhammer basics") {
    CHECK(q_pochhammer(0) == LaurentPoly::one());
    CHECK(q_pochhammer(1) == LaurentPoly::x() + LaurentPoly::y());
    // (x,y;q)_2 = x^2 + (1+q) x y + q y^2
    LaurentPoly expect = LaurentPoly::x(2) + LaurentPoly::monomial(1, 0, 1, 1) +
                         LaurentPoly::monomial(1, 1, 1, 1) + LaurentPoly::monomial(1, 1, 0, 2);
    CHECK(q_pochhammer(2) == expect);
}

TEST_CASE("q_derivative") {
    // monomial rule: x^3 -> [3]_q x^2
    CHECK(q_derivative(LaurentPoly::x(3)) == q_int(3) * LaurentPoly::x(2));
    CHECK(q_derivative(LaurentPoly(Int(42))).is_zero());
    // Pochhammer rule at n = 3
    CHECK(q_derivative(q_pochhammer(3)) == q_int(3) * q_pochhammer(2));
    // negative exponents
    CHECK(q_derivative(LaurentPoly::x(-1)) == q_int(-1) * LaurentPoly::x(-2));
}

TEST_CASE("cyclotomic reduction") {
    SECTION("modulus reduces to zero") {
        for (unsigned p : {2u, 3u, 5u})
            for (unsigned r : {1u, 2u}) {
                auto mod = cyclotomic_modulus(p, r);
                LaurentPoly f;
                for (std::size_t i = 0; i < mod.size(); ++i)
                    f += LaurentPoly::monomial(mod[i], static_cast<int>(i));
                CHECK(cyclotomic_reduce(f, p, r).is_zero());
            }
    }
    SECTION("zeta_3 cubes to 1") {
        auto r = cyclotomic_reduce(LaurentPoly::q(3), 3, 1);
        CHECK(r == cyclotomic_reduce(LaurentPoly::one(), 3, 1));
    }
    SECTION("negative exponents are cleared by units") {
        auto a = cyclotomic_reduce(LaurentPoly::q(-1), 3, 1);
        auto b = cyclotomic_reduce(LaurentPoly::q(2), 3, 1);
        CHECK(a == b);
    }
    SECTION("x^2 - y^2 vs (x-y)(x-qy) at p=2, r=1") {
        LaurentPoly lhs = LaurentPoly::x(2) - LaurentPoly::y(2);
        LaurentPoly rhs = (LaurentPoly::x() - LaurentPoly::y()) *
                          (LaurentPoly::x() - LaurentPoly::q(1) * LaurentPoly::y());
        CHECK(cyclotomic_reduce(lhs, 2, 1) == cyclotomic_reduce(rhs, 2, 1));
    }
    SECTION("coefficient vector shape") {
        auto e = cyclotomic_reduce(q_int(5), 3, 2);
        CHECK(e.coeff_vector().size() == 6);  // deg Phi_9 = 9 - 3
    }
}

TEST_CASE("check_identity") {
    CHECK(check_identity("pascal", {5, 2}).pass);
    CHECK(check_identity("binomial-theorem", {0}).pass);
    CHECK(check_identity("cyclotomic-congruence", {3, 2}).pass);
    CHECK(check_identity("addition", {4, -7}).pass);
    CHECK(check_identity("negation", {6}).pass);
    CHECK(check_identity("pochhammer-derivative", {5}).pass);
    CHECK(check_identity("leibniz", {12345}).pass);
    CHECK_THROWS_AS(check_identity("no-such-identity", {1}), std::invalid_argument);
    CHECK_THROWS_AS(check_identity("pascal", {2, 3}), std::invalid_argument);
}

TEST_CASE("identity families over small ranges") {
    for (long n = 1; n <= 10; ++n)
        for (long k = 1; k <= n; ++k) CHECK(check_identity("pascal", {n, k}).pass);
    for (long n = 0; n <= 8; ++n) CHECK(check_identity("binomial-theorem", {n}).pass);
    for (long n = 1; n <= 8; ++n) CHECK(check_identity("pochhammer-derivative", {n}).pass);
    for (long n = -8; n <= 8; ++n)
        for (long k = -8; k <= 8; k += 3) CHECK(check_identity("addition", {n, k}).pass);
    for (long s = 0; s < 10; ++s) CHECK(check_identity("leibniz", {s}).pass);
}

TEST_CASE("q-number divisibility relation for n | m") {
    // [m]_q = [m/n]_(q^n) [n]_q
    for (long n : {2L, 3L, 5L})
        for (long f : {2L, 3L, 4L}) {
            long m = n * f;
            LaurentPoly lhs = q_int(m);
            LaurentPoly rhs = q_int(f).subst_q_power(static_cast<int>(n)) * q_int(n);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("laurent division by q-1 rejects non-divisible input") {
    CHECK_THROWS_AS(LaurentPoly::one().divexact_q_minus_1(), std::domain_error);
    CHECK_THROWS_AS((LaurentPoly::q(1) + LaurentPoly::one()).divexact_q_minus_1(),
                    std::domain_error);
    CHECK((LaurentPoly::q(1) - LaurentPoly::one()).divexact_q_minus_1() == LaurentPoly::one());
}
