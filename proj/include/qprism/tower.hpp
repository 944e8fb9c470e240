#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "padic.hpp"

namespace qprism {

/// Truncated element of A_h = Z_p[[q^(1/p^h) - 1]]: a series in the level
/// variable s = q^(1/p^h) - 1 of order M whose coefficients are held mod p^N.
/// The level h is part of an element's identity; cross-level arithmetic
/// requires an explicit embed().
class TowerSeries {
public:
    TowerSeries(unsigned p, unsigned level, unsigned precision, unsigned order)
        : p_(p), level_(level), prec_(precision), order_(order),
          mod_(int_pow(p, precision)), c_(order, Int(0)) {
        if (p_ < 2) throw std::invalid_argument("TowerSeries: prime must be >= 2");
        if (prec_ < 1 || order_ < 1)
            throw std::invalid_argument("TowerSeries: precision and order must be >= 1");
    }

    static TowerSeries constant(unsigned p, unsigned level, unsigned precision, unsigned order,
                                const Int& c) {
        TowerSeries r(p, level, precision, order);
        r.c_[0] = mod_floor(c, r.mod_);
        return r;
    }
    static TowerSeries one(unsigned p, unsigned level, unsigned precision, unsigned order) {
        return constant(p, level, precision, order, 1);
    }

    /// (1 + s)^e truncated, for any integer e (negative e via the integral
    /// binomial series).
    static TowerSeries one_plus_s_pow(unsigned p, unsigned level, unsigned precision,
                                      unsigned order, long e) {
        TowerSeries r(p, level, precision, order);
        for (unsigned k = 0; k < order; ++k) {
            Int b = binomial(e, k);
            if (e >= 0 && k > static_cast<unsigned long>(e)) break;
            r.c_[k] = mod_floor(b, r.mod_);
        }
        return r;
    }

    unsigned prime() const { return p_; }
    unsigned level() const { return level_; }
    unsigned precision() const { return prec_; }
    unsigned order() const { return order_; }
    const Int& modulus() const { return mod_; }
    const Int& coeff(unsigned i) const { return c_.at(i); }

    void set_coeff(unsigned i, const Int& v) { c_.at(i) = mod_floor(v, mod_); }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    /// Highest index with a nonzero coefficient, or -1 for the zero series.
    long poly_degree() const {
        for (std::size_t i = c_.size(); i-- > 0;)
            if (c_[i] != 0) return static_cast<long>(i);
        return -1;
    }

    /// Constant coefficient as a p-adic number (the map q -> 1).
    PadicNum evaluate_q1() const { return PadicNum(p_, prec_, c_[0]); }

    bool is_unit() const { return evaluate_q1().is_unit(); }

    TowerSeries reduced(unsigned precision, unsigned order) const {
        if (precision > prec_ || order > order_)
            throw std::domain_error("TowerSeries: cannot raise precision");
        TowerSeries r(p_, level_, precision, order);
        for (unsigned i = 0; i < order; ++i) r.c_[i] = mod_floor(c_[i], r.mod_);
        return r;
    }

    friend TowerSeries operator+(const TowerSeries& a, const TowerSeries& b) {
        auto [n, m] = a.aligned(b);
        TowerSeries r(a.p_, a.level_, n, m);
        for (unsigned i = 0; i < m; ++i) r.c_[i] = mod_floor(a.c_[i] + b.c_[i], r.mod_);
        return r;
    }
    friend TowerSeries operator-(const TowerSeries& a, const TowerSeries& b) {
        auto [n, m] = a.aligned(b);
        TowerSeries r(a.p_, a.level_, n, m);
        for (unsigned i = 0; i < m; ++i) r.c_[i] = mod_floor(a.c_[i] - b.c_[i], r.mod_);
        return r;
    }
    TowerSeries operator-() const {
        TowerSeries r(p_, level_, prec_, order_);
        for (unsigned i = 0; i < order_; ++i) r.c_[i] = mod_floor(-c_[i], mod_);
        return r;
    }

    friend TowerSeries operator*(const TowerSeries& a, const TowerSeries& b) {
        auto [n, m] = a.aligned(b);
        TowerSeries r(a.p_, a.level_, n, m);
        std::vector<Int> acc(m, Int(0));
        for (unsigned i = 0; i < m; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j + i < m; ++j) {
                if (b.c_[j] == 0) continue;
                acc[i + j] += a.c_[i] * b.c_[j];
            }
        }
        for (unsigned i = 0; i < m; ++i) r.c_[i] = mod_floor(acc[i], r.mod_);
        return r;
    }

    TowerSeries scaled(const Int& c) const {
        TowerSeries r(p_, level_, prec_, order_);
        for (unsigned i = 0; i < order_; ++i) r.c_[i] = mod_floor(c_[i] * c, mod_);
        return r;
    }
    TowerSeries scaled(const PadicNum& a) const {
        if (a.prime() != p_) throw std::invalid_argument("TowerSeries: mismatched primes");
        unsigned n = std::min(prec_, a.precision());
        return reduced(n, order_).scaled(a.value());
    }

    TowerSeries pow(unsigned long e) const {
        TowerSeries r = one(p_, level_, prec_, order_);
        TowerSeries base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse; requires the constant term to be a p-adic unit.
    TowerSeries inv() const {
        if (!is_unit())
            throw std::domain_error("TowerSeries: not a unit in A_h (constant term divisible by p)");
        TowerSeries r(p_, level_, prec_, order_);
        Int b0;
        mpz_invert(b0.get_mpz_t(), c_[0].get_mpz_t(), mod_.get_mpz_t());
        r.c_[0] = b0;
        for (unsigned k = 1; k < order_; ++k) {
            Int acc = 0;
            for (unsigned j = 1; j <= k; ++j) {
                if (c_[j] == 0) continue;
                acc += c_[j] * r.c_[k - j];
            }
            r.c_[k] = mod_floor(-b0 * acc, mod_);
        }
        return r;
    }

    /// Frobenius lift: the substitution s -> (1+s)^p - 1 at the same level,
    /// i.e. q^(1/p^h) -> q^(p/p^h).
    TowerSeries frobenius() const {
        TowerSeries r = substituted_one_plus_s_pow();
        return r;
    }

    /// Re-reads the element at a finer tower level h' >= h via
    /// s_h = (1 + s_h')^(p^(h'-h)) - 1.
    TowerSeries embed(unsigned to_level) const {
        if (to_level < level_) throw std::invalid_argument("TowerSeries: embed only raises the level");
        TowerSeries r = *this;
        for (unsigned h = level_; h < to_level; ++h) r = r.substituted_one_plus_s_pow();
        r.level_ = to_level;
        return r;
    }

    /// phi^(-1) as a level shift: identical coefficients read in the variable
    /// q^(1/p^(h+1)) - 1. frobenius(phi_inverse(f)) equals embed(f, h+1).
    TowerSeries phi_inverse() const {
        TowerSeries r = *this;
        r.level_ = level_ + 1;
        return r;
    }

    /// Exact division by the level variable s: the constant coefficient must
    /// vanish. Drops one order of truncation.
    TowerSeries divexact_s() const {
        if (c_[0] != 0) throw std::domain_error("TowerSeries: not divisible by s");
        if (order_ < 2) throw std::domain_error("TowerSeries: no order left after dividing by s");
        TowerSeries r(p_, level_, prec_, order_ - 1);
        for (unsigned i = 0; i + 1 < order_; ++i) r.c_[i] = c_[i + 1];
        return r;
    }

    /// Multiplication by s^k at fixed order (top coefficients fall off).
    TowerSeries shifted_up(unsigned k) const {
        TowerSeries r(p_, level_, prec_, order_);
        for (unsigned i = 0; i + k < order_; ++i) r.c_[i + k] = c_[i];
        return r;
    }

    bool operator==(const TowerSeries& o) const {
        return p_ == o.p_ && level_ == o.level_ && prec_ == o.prec_ && order_ == o.order_ &&
               c_ == o.c_;
    }

    /// Equality after reducing both sides to a common (precision, order).
    bool congruent_to(const TowerSeries& o, unsigned precision, unsigned order) const {
        if (p_ != o.p_ || level_ != o.level_) return false;
        return reduced(precision, order) == o.reduced(precision, order);
    }

    std::string str() const {
        std::ostringstream os;
        std::string var = level_ == 0 ? "s" : ("s_" + std::to_string(level_));
        bool any = false;
        for (unsigned i = 0; i < order_; ++i) {
            if (c_[i] == 0) continue;
            if (any) os << " + ";
            any = true;
            os << c_[i].get_str();
            if (i >= 1) os << "*" << var;
            if (i >= 2) os << "^" << i;
        }
        if (!any) os << "0";
        os << " + O(" << var << "^" << order_ << "), coeffs mod " << p_ << "^" << prec_;
        return os.str();
    }

private:
    unsigned p_, level_, prec_, order_;
    Int mod_;
    std::vector<Int> c_;

    std::pair<unsigned, unsigned> aligned(const TowerSeries& o) const {
        if (p_ != o.p_) throw std::invalid_argument("TowerSeries: mismatched primes");
        if (level_ != o.level_)
            throw std::invalid_argument(
                "TowerSeries: mismatched tower levels (use embed() explicitly)");
        return {std::min(prec_, o.prec_), std::min(order_, o.order_)};
    }

    /// Horner evaluation of this series at t = (1+s)^p - 1.
    TowerSeries substituted_one_plus_s_pow() const {
        // t has coefficients binom(p, k) at s^k for k = 1..p.
        std::vector<Int> t(p_ + 1, Int(0));
        for (unsigned k = 1; k <= p_; ++k) t[k] = binomial(static_cast<long>(p_), k);
        TowerSeries res = constant(p_, level_, prec_, order_, c_[order_ - 1]);
        for (std::size_t i = order_ - 1; i-- > 0;) {
            res = res.mul_by_poly(t);
            res.c_[0] = mod_floor(res.c_[0] + c_[i], mod_);
        }
        return res;
    }

    TowerSeries mul_by_poly(const std::vector<Int>& t) const {
        TowerSeries r(p_, level_, prec_, order_);
        std::vector<Int> acc(order_, Int(0));
        for (unsigned i = 0; i < order_; ++i) {
            if (c_[i] == 0) continue;
            for (unsigned k = 0; k < t.size() && i + k < order_; ++k) {
                if (t[k] == 0) continue;
                acc[i + k] += c_[i] * t[k];
            }
        }
        for (unsigned i = 0; i < order_; ++i) r.c_[i] = mod_floor(acc[i], mod_);
        return r;
    }
};

/// q as an element of A_h: (1+s)^(p^h) at level h.
inline TowerSeries q_element(unsigned p, unsigned precision, unsigned order, unsigned level = 0) {
    long e = 1;
    for (unsigned i = 0; i < level; ++i) e *= p;
    return TowerSeries::one_plus_s_pow(p, level, precision, order, e);
}

/// mu = q - 1 at level 0 (the series s).
inline TowerSeries mu_element(unsigned p, unsigned precision, unsigned order) {
    TowerSeries r(p, 0, precision, order);
    if (order < 2) throw std::domain_error("mu_element: order must be >= 2");
    r.set_coeff(1, Int(1));
    return r;
}

/// Self-verifying witness that divisor * quotient = dividend at the stated
/// precision.
struct DivisibilityCertificate {
    TowerSeries dividend, divisor, quotient;
    unsigned precision = 0;
    unsigned order = 0;

    bool verify() const {
        TowerSeries prod = divisor * quotient;
        return prod.congruent_to(dividend, precision, order);
    }
};

struct DivisionResult {
    bool divisible = false;
    DivisibilityCertificate certificate;  // valid when divisible
    TowerSeries remainder;                // nonzero evidence when not divisible
};

/// Weierstrass-style division of f by a distinguished polynomial d (unit
/// leading coefficient, all lower coefficients divisible by p), p-digit by
/// p-digit. The remainder is a polynomial of degree < deg d.
///
/// Precision contract: the computed quotient and remainder solve
/// q*d + r = f exactly over Z/p^N up to s^M, so a remainder that vanishes
/// identically certifies divisibility at full precision (N, M - deg). When f
/// is the truncation of a longer series, its unknown s-tail contaminates one
/// further digit of the remainder every deg s-orders, so an exactly divisible
/// series can still leave junk in the remainder above digit M/deg - 1. The
/// divisibility verdict therefore tests the remainder at the sound digit
/// count min(claimed_precision, M/deg - 1) and the certificate carries the
/// precision actually certified.
inline DivisionResult distinguished_divide(const TowerSeries& f, const TowerSeries& d,
                                           unsigned claimed_precision = 0) {
    if (f.prime() != d.prime()) throw std::invalid_argument("distinguished_divide: mismatched primes");
    if (f.level() != d.level())
        throw std::invalid_argument("distinguished_divide: mismatched tower levels");
    const unsigned p = f.prime();
    const unsigned N = std::min(f.precision(), d.precision());
    const unsigned M = std::min(f.order(), d.order());
    long degl = d.reduced(N, M).poly_degree();
    if (degl < 1) throw std::invalid_argument("distinguished_divide: divisor is not a polynomial of degree >= 1");
    const unsigned deg = static_cast<unsigned>(degl);
    if (deg >= M)
        throw std::domain_error("distinguished_divide: series order too small for divisor degree");
    TowerSeries dd = d.reduced(N, M);
    for (unsigned i = 0; i < deg; ++i)
        if (!mpz_divisible_ui_p(dd.coeff(i).get_mpz_t(), p))
            throw std::invalid_argument(
                "distinguished_divide: divisor not distinguished (low coefficient not divisible by p)");
    if (mpz_divisible_ui_p(dd.coeff(deg).get_mpz_t(), p))
        throw std::invalid_argument(
            "distinguished_divide: divisor not distinguished (leading coefficient not a unit)");

    const Int pz(p);
    Int lead_mod_p = mod_floor(dd.coeff(deg), pz);
    Int lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), lead_mod_p.get_mpz_t(), pz.get_mpz_t());

    const Int modN = int_pow(p, N);
    TowerSeries fr = f.reduced(N, M);
    std::vector<Int> e(M);
    for (unsigned i = 0; i < M; ++i) e[i] = fr.coeff(i);
    TowerSeries quot(p, f.level(), N, M - deg);
    TowerSeries rem(p, f.level(), N, deg);
    Int pj(1);
    for (unsigned j = 0; j < N; ++j) {
        // digit j of the running error, a polynomial over F_p
        std::vector<Int> ebar(M);
        for (unsigned i = 0; i < M; ++i) ebar[i] = mod_floor(e[i] / pj, pz);
        // mod p the divisor is lead * s^deg, so the digit splits directly
        std::vector<Int> qbar(M - deg, Int(0)), rbar(deg, Int(0));
        for (unsigned i = 0; i < deg; ++i) rbar[i] = ebar[i];
        for (unsigned i = deg; i < M; ++i) qbar[i - deg] = mod_floor(lead_inv * ebar[i], pz);
        for (unsigned i = 0; i < M - deg; ++i)
            quot.set_coeff(i, quot.coeff(i) + pj * qbar[i]);
        for (unsigned i = 0; i < deg; ++i) rem.set_coeff(i, rem.coeff(i) + pj * rbar[i]);
        // e -= p^j (qbar * d + rbar); products never reach s^M, so nothing is
        // truncated and the division is exact.
        for (unsigned i = 0; i < M - deg; ++i) {
            if (qbar[i] == 0) continue;
            for (unsigned k = 0; k <= deg; ++k) e[i + k] -= pj * qbar[i] * dd.coeff(k);
        }
        for (unsigned i = 0; i < deg; ++i) e[i] -= pj * rbar[i];
        pj *= p;
        for (unsigned i = 0; i < M; ++i) e[i] = mod_floor(e[i], modN);
    }

    if (claimed_precision == 0 || claimed_precision > N) claimed_precision = N;
    unsigned sound = std::max(1u, std::min(claimed_precision, M / deg - 1));
    DivisionResult res{false, DivisibilityCertificate{fr, dd, quot, claimed_precision, M - deg},
                       rem};
    if (rem.is_zero()) {
        res.divisible = true;
    } else if (rem.reduced(sound, deg).is_zero()) {
        res.divisible = true;
        res.certificate.precision = sound;
    }
    return res;
}

/// q^a for a p-adic exponent a: the binomial series sum_k binom(a,k) (q-1)^k
/// at level 0, truncated at the given order with coefficients mod p^N.
/// Requires a at working precision >= N + v_p(order!).
inline TowerSeries binomial_qpower(const PadicNum& a, unsigned order, unsigned precision) {
    const unsigned p = a.prime();
    unsigned needed = precision + factorial_valuation(p, order);
    if (a.precision() < needed)
        throw std::domain_error("binomial_qpower: insufficient exponent precision; need >= " +
                                std::to_string(needed) + " digits, have " +
                                std::to_string(a.precision()));
    TowerSeries r(p, 0, precision, order);
    r.set_coeff(0, Int(1));
    for (unsigned k = 1; k < order; ++k) {
        PadicNum b = padic_binomial(a, k);
        r.set_coeff(k, b.value());
    }
    return r;
}

}  // namespace qprism
