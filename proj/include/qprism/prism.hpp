#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "qcomb.hpp"
#include "tower.hpp"

namespace qprism {

/// The distinguished element xi = [p]_q = 1 + q + ... + q^(p-1) at level 0.
inline TowerSeries xi_tilde(unsigned p, unsigned precision, unsigned order) {
    TowerSeries r(p, 0, precision, order);
    for (unsigned i = 0; i < p; ++i)
        r = r + TowerSeries::one_plus_s_pow(p, 0, precision, order, static_cast<long>(i));
    return r;
}

/// phi^r(xi) = [p]_(q^(p^r)) = sum_(i<p) q^(i p^r), a polynomial of degree
/// (p-1) p^r in the level variable.
inline TowerSeries phi_power_xi(unsigned p, unsigned precision, unsigned order, unsigned r) {
    long pr = 1;
    for (unsigned i = 0; i < r; ++i) pr *= p;
    TowerSeries res(p, 0, precision, order);
    for (unsigned i = 0; i < p; ++i)
        res = res + TowerSeries::one_plus_s_pow(p, 0, precision, order,
                                                static_cast<long>(i) * pr);
    return res;
}

/// xi_r = xi phi(xi) ... phi^(r-1)(xi) = [p^r]_q; xi_0 = 1.
inline TowerSeries xi_r(unsigned p, unsigned precision, unsigned order, unsigned r) {
    TowerSeries res = TowerSeries::one(p, 0, precision, order);
    for (unsigned i = 0; i < r; ++i) res = res * phi_power_xi(p, precision, order, i);
    return res;
}

/// [n]_q as a tower element at level 0.
inline TowerSeries q_int_tower(unsigned p, unsigned precision, unsigned order, unsigned long n) {
    TowerSeries r(p, 0, precision, order);
    for (unsigned long i = 0; i < n; ++i)
        r = r + TowerSeries::one_plus_s_pow(p, 0, precision, order, static_cast<long>(i));
    return r;
}

/// [n]_q! as a tower element at level 0.
inline TowerSeries q_factorial_tower(unsigned p, unsigned precision, unsigned order,
                                     unsigned long n) {
    TowerSeries r = TowerSeries::one(p, 0, precision, order);
    for (unsigned long k = 2; k <= n; ++k) r = r * q_int_tower(p, precision, order, k);
    return r;
}

/// delta(f) = (phi(f) - f^p) / p. The caller supplies one guard digit: the
/// result carries coefficient precision N - 1.
inline TowerSeries delta(const TowerSeries& f) {
    const unsigned p = f.prime();
    if (f.precision() < 2)
        throw std::domain_error("delta: needs one guard digit of coefficient precision");
    TowerSeries diff = f.frobenius() - f.pow(p);
    TowerSeries r(p, f.level(), f.precision() - 1, f.order());
    for (unsigned i = 0; i < f.order(); ++i) {
        const Int& v = diff.coeff(i);
        if (!mpz_divisible_ui_p(v.get_mpz_t(), p))
            throw std::logic_error("delta: phi(f) - f^p not divisible by p (internal inconsistency)");
        Int w;
        mpz_divexact_ui(w.get_mpz_t(), v.get_mpz_t(), p);
        r.set_coeff(i, w);
    }
    return r;
}

struct DistinguishedReport {
    bool distinguished = false;
    PadicNum delta_at_q1;  // evaluate_q1(delta(f))
    PadicNum f_at_q1;      // evaluate_q1(f)
};

/// f is distinguished iff delta(f) evaluates to a p-adic unit at q = 1 and f
/// itself is not a unit.
inline DistinguishedReport is_distinguished(const TowerSeries& f) {
    PadicNum dq1 = delta(f).evaluate_q1();
    PadicNum fq1 = f.evaluate_q1();
    return DistinguishedReport{dq1.is_unit() && !fq1.is_unit(), dq1, fq1};
}

/// Witness that phi(element) = xi^level * quotient at the stated precision,
/// certifying element in Nygaard^(>= level).
struct NygaardCertificate {
    TowerSeries element;
    unsigned level = 0;
    TowerSeries quotient;
    unsigned precision = 0;
    unsigned order = 0;
    bool exhausted = false;  // precision ran out before the cap was reached

    bool verify() const {
        TowerSeries lhs = element.frobenius();
        TowerSeries x = xi_tilde(element.prime(), precision, lhs.order());
        TowerSeries rhs = x.pow(level) * quotient;
        return lhs.congruent_to(rhs, precision, order);
    }
};

/// Largest n <= cap with phi(f) divisible by xi^n, with quotient witness.
/// The certified precision shrinks along the division chain when the
/// dividend carries an unknown series tail (see distinguished_divide).
inline NygaardCertificate nygaard_level(const TowerSeries& f, unsigned cap) {
    const unsigned p = f.prime();
    const unsigned deg = p - 1;  // degree of xi as a polynomial in s
    TowerSeries g = f.frobenius();
    unsigned lvl = 0;
    unsigned certified = g.precision();
    bool exhausted = false;
    while (lvl < cap) {
        if (g.order() <= deg) {
            exhausted = true;
            break;
        }
        TowerSeries x = xi_tilde(p, g.precision(), g.order());
        DivisionResult dr = distinguished_divide(g, x, certified);
        if (!dr.divisible) break;
        certified = dr.certificate.precision;
        g = dr.certificate.quotient;
        ++lvl;
    }
    return NygaardCertificate{f, lvl, g, certified, g.order(), exhausted};
}

/// Witness for [n]_q! = u * prod_r phi^(r-1)(xi)^(a_r) with a_r = floor(n/p^r)
/// and u a unit.
struct FactorizationCertificate {
    unsigned prime = 2;
    unsigned long n = 1;
    std::vector<unsigned long> exponents;  // exponents[r-1] = a_r
    TowerSeries unit;
    unsigned precision = 0;
    unsigned order = 0;

    bool unit_passes_unit_test() const { return unit.evaluate_q1().is_unit(); }

    bool verify() const {
        TowerSeries prod = unit;
        for (std::size_t r = 1; r <= exponents.size(); ++r) {
            TowerSeries fx = phi_power_xi(prime, precision, order, static_cast<unsigned>(r - 1));
            for (unsigned long i = 0; i < exponents[r - 1]; ++i) prod = prod * fx;
        }
        TowerSeries fact = q_factorial_tower(prime, precision, order, n);
        return prod.congruent_to(fact, precision, order) && unit_passes_unit_test();
    }
};

/// Exponent list a_r = floor(n / p^r) for r = 1, 2, ...
inline std::vector<unsigned long> qfact_exponents(unsigned p, unsigned long n) {
    std::vector<unsigned long> a;
    for (unsigned long q = n / p; q > 0; q /= p) a.push_back(q);
    return a;
}

/// Factorizes [n]_q! into distinguished factors and an explicit unit by
/// dividing out each phi^(r-1)(xi) in turn.
inline FactorizationCertificate qfact_factorize(unsigned p, unsigned precision, unsigned order,
                                                unsigned long n) {
    if (n < 1) throw std::invalid_argument("qfact_factorize: n must be >= 1");
    std::vector<unsigned long> exponents = qfact_exponents(p, n);
    unsigned long total_deg = 0, pr = 1;
    for (std::size_t r = 1; r <= exponents.size(); ++r) {
        total_deg += exponents[r - 1] * (p - 1) * pr;
        pr *= p;
    }
    if (total_deg >= order)
        throw std::domain_error("qfact_factorize: series order " + std::to_string(order) +
                                " exhausted by divisor degree " + std::to_string(total_deg));
    // [n]_q! is a polynomial of degree n(n-1)/2; computing at that order makes
    // every division tail-free and hence exact at full coefficient precision.
    unsigned internal = std::max<unsigned long>(order, n * (n - 1) / 2 + 2);
    TowerSeries acc = q_factorial_tower(p, precision, internal, n);
    for (std::size_t r = 1; r <= exponents.size(); ++r) {
        for (unsigned long i = 0; i < exponents[r - 1]; ++i) {
            TowerSeries fx = phi_power_xi(p, precision, acc.order(), static_cast<unsigned>(r - 1));
            DivisionResult dr = distinguished_divide(acc, fx);
            if (!dr.divisible || dr.certificate.precision != precision)
                throw std::logic_error("qfact_factorize: expected divisibility failed (internal)");
            acc = dr.certificate.quotient;
        }
    }
    TowerSeries unit = acc.reduced(precision, order - static_cast<unsigned>(total_deg));
    return FactorizationCertificate{p, n, std::move(exponents), unit, precision, unit.order()};
}

/// Rank-1 test: phi(x) = x^p at the working precision.
inline bool rank_one_check(const TowerSeries& x) {
    return (x.frobenius() - x.pow(x.prime())).is_zero();
}

/// q-divided power gamma_(n,q)(x-1) = (x-1)(x-q)...(x-q^(n-1)) / [n]_q!,
/// formed by dividing the Pochhammer product factor-by-factor through the
/// factorization certificate of [n]_q! and inverting the remaining unit.
/// Requires x of rank 1 with x - 1 in Nygaard^(>=1); returns the divided
/// power together with a Nygaard certificate of its level (>= n).
inline std::pair<TowerSeries, NygaardCertificate> qdivided_power(const TowerSeries& x,
                                                                 unsigned long n) {
    if (n < 1) throw std::invalid_argument("qdivided_power: n must be >= 1");
    const unsigned p = x.prime();
    if (!rank_one_check(x))
        throw std::domain_error("qdivided_power: hypothesis failure (x is not of rank 1)");
    TowerSeries xm1 = x - TowerSeries::one(p, x.level(), x.precision(), x.order());
    if (!xm1.is_zero() && nygaard_level(xm1, 1).level < 1)
        throw std::domain_error("qdivided_power: hypothesis failure (x - 1 not in Nygaard^(>=1))");

    long ph = 1;
    for (unsigned i = 0; i < x.level(); ++i) ph *= p;
    TowerSeries poch = TowerSeries::one(p, x.level(), x.precision(), x.order());
    for (unsigned long i = 0; i < n; ++i) {
        TowerSeries qi = TowerSeries::one_plus_s_pow(p, x.level(), x.precision(), x.order(),
                                                     static_cast<long>(i) * ph);
        poch = poch * (x - qi);
    }
    FactorizationCertificate fc = qfact_factorize(p, x.precision(), x.order(), n);
    TowerSeries acc = poch;
    unsigned certified = x.precision();
    for (std::size_t r = 1; r <= fc.exponents.size(); ++r) {
        for (unsigned long i = 0; i < fc.exponents[r - 1]; ++i) {
            TowerSeries fx = phi_power_xi(p, x.precision(), acc.order(), static_cast<unsigned>(r - 1));
            DivisionResult dr = distinguished_divide(acc, fx, certified);
            if (!dr.divisible)
                throw std::domain_error(
                    "qdivided_power: Pochhammer product not divisible at precision (hypothesis failure)");
            certified = dr.certificate.precision;
            acc = dr.certificate.quotient;
        }
    }
    TowerSeries gamma =
        (acc * fc.unit.reduced(x.precision(), acc.order()).inv()).reduced(certified, acc.order());
    NygaardCertificate cert = nygaard_level(gamma, static_cast<unsigned>(n));
    return {gamma, cert};
}

struct CongruenceReport {
    unsigned prime = 2;
    unsigned r = 1;
    bool product_congruence = false;  // x^(p^r) - y^(p^r) = prod (x - q^i y) mod phi^(r-1)(xi)
    bool frobenius_congruence = false;  // phi^r(xi) = p * unit  mod xi
    LaurentPoly unit;                   // the unit in the second congruence
    std::string evidence;

    bool pass() const { return product_congruence && frobenius_congruence; }
};

/// Verifies the two cyclotomic congruences at level r by exact reduction.
inline CongruenceReport congruence_check(unsigned p, unsigned r) {
    if (r < 1) throw std::invalid_argument("congruence_check: r must be >= 1");
    CongruenceReport rep;
    rep.prime = p;
    rep.r = r;
    long pr = 1;
    for (unsigned i = 0; i < r; ++i) pr *= p;

    LaurentPoly lhs = LaurentPoly::x(static_cast<int>(pr)) - LaurentPoly::y(static_cast<int>(pr));
    detail::CyclicQXY prod(p, r);
    for (long i = 0; i < pr; ++i) prod.mul_factor(i);
    auto ra = cyclotomic_reduce(lhs, p, r);
    auto rb = cyclotomic_reduce(prod.to_laurent(), p, r);
    rep.product_congruence = (ra == rb);
    if (!rep.product_congruence) rep.evidence = (ra.value() - rb.value()).str();

    // phi^r(xi) = sum_(i<p) q^(i p^r); reduced mod xi (the level-1 modulus)
    // this is p * u. For the base prism u = 1 exactly: verified, not assumed.
    LaurentPoly phir;
    for (unsigned i = 0; i < p; ++i)
        phir += LaurentPoly::q(static_cast<int>(static_cast<long>(i) * pr));
    auto red = cyclotomic_reduce(phir, p, 1);
    auto expect = cyclotomic_reduce(LaurentPoly(Int(p)), p, 1);
    rep.frobenius_congruence = (red == expect);
    rep.unit = LaurentPoly::one();
    if (!rep.frobenius_congruence) rep.evidence += " phi^r(xi) mod xi = " + red.str();
    return rep;
}

}  // namespace qprism
