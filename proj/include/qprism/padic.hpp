#pragma once

#include <optional>
#include <string>

#include "numeric.hpp"

namespace qprism {

/// Truncated p-adic integer: a value in [0, p^N) together with its explicit
/// precision N. Precision is data, never ambient state; binary operations
/// carry the minimum of the operand precisions.
class PadicNum {
public:
    PadicNum(unsigned p, unsigned precision, Int value)
        : p_(p), prec_(precision), v_(std::move(value)) {
        if (p_ < 2) throw std::invalid_argument("PadicNum: prime must be >= 2");
        if (prec_ < 1) throw std::invalid_argument("PadicNum: precision must be >= 1");
        v_ = mod_floor(v_, modulus());
    }

    unsigned prime() const { return p_; }
    unsigned precision() const { return prec_; }
    const Int& value() const { return v_; }
    Int modulus() const { return int_pow(p_, prec_); }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return !mpz_divisible_ui_p(v_.get_mpz_t(), p_); }

    PadicNum reduced(unsigned precision) const {
        if (precision > prec_)
            throw std::domain_error("PadicNum: cannot raise precision from " +
                                    std::to_string(prec_) + " to " + std::to_string(precision));
        return PadicNum(p_, precision, v_);
    }

    friend PadicNum operator+(const PadicNum& a, const PadicNum& b) {
        unsigned n = a.aligned(b);
        return PadicNum(a.p_, n, a.v_ + b.v_);
    }
    friend PadicNum operator-(const PadicNum& a, const PadicNum& b) {
        unsigned n = a.aligned(b);
        return PadicNum(a.p_, n, a.v_ - b.v_);
    }
    friend PadicNum operator*(const PadicNum& a, const PadicNum& b) {
        unsigned n = a.aligned(b);
        return PadicNum(a.p_, n, a.v_ * b.v_);
    }
    PadicNum operator-() const { return PadicNum(p_, prec_, -v_); }

    PadicNum inv() const {
        if (!is_unit()) throw std::domain_error("PadicNum: not a unit");
        Int r;
        Int m = modulus();
        if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("PadicNum: not a unit");
        return PadicNum(p_, prec_, r);
    }

    PadicNum pow(unsigned long e) const {
        Int r;
        Int m = modulus();
        mpz_powm_ui(r.get_mpz_t(), v_.get_mpz_t(), e, m.get_mpz_t());
        return PadicNum(p_, prec_, r);
    }

    /// Division by p: drops one digit of precision and fails loudly on
    /// non-divisible input; silent rounding is forbidden.
    PadicNum div_exact_p() const {
        if (prec_ < 2) throw std::domain_error("PadicNum: no precision left after dividing by p");
        if (!mpz_divisible_ui_p(v_.get_mpz_t(), p_))
            throw std::domain_error("PadicNum: value not divisible by p");
        Int r;
        mpz_divexact_ui(r.get_mpz_t(), v_.get_mpz_t(), p_);
        return PadicNum(p_, prec_ - 1, r);
    }

    bool operator==(const PadicNum& o) const {
        return p_ == o.p_ && prec_ == o.prec_ && v_ == o.v_;
    }

    /// Congruence at the finer of the two stated precisions' minimum.
    bool congruent_to(const PadicNum& o) const {
        if (p_ != o.p_) return false;
        unsigned n = std::min(prec_, o.prec_);
        Int m = int_pow(p_, n);
        return mod_floor(v_, m) == mod_floor(o.v_, m);
    }

    std::string str() const {
        return v_.get_str() + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
    }

private:
    unsigned p_, prec_;
    Int v_;

    unsigned aligned(const PadicNum& o) const {
        if (p_ != o.p_) throw std::invalid_argument("PadicNum: mismatched primes");
        return std::min(prec_, o.prec_);
    }
};

/// v_p of the stored value; std::nullopt means indistinguishable from zero
/// (only "valuation >= N" is knowable).
inline std::optional<unsigned> valuation(const PadicNum& a) {
    if (a.is_zero()) return std::nullopt;
    return p_valuation(a.prime(), a.value());
}

/// Teichmuller lift: the unique x with x = a0 mod p and x^p = x mod p^N,
/// computed by iterating x -> x^p until two successive iterates agree.
/// Linear convergence (one digit per step) bounds the iteration count by N.
inline PadicNum teichmuller(unsigned p, const Int& a0, unsigned precision) {
    PadicNum x(p, precision, a0);
    for (unsigned i = 0; i <= precision + 1; ++i) {
        PadicNum y = x.pow(p);
        if (y == x) return x;
        x = y;
    }
    throw std::logic_error("teichmuller: iteration failed to stabilize");
}

/// binom(a, k) = a(a-1)...(a-k+1)/k! as a p-adic integer. Consumes
/// v_p(k!) digits of the input precision; the result carries
/// precision(a) - v_p(k!).
inline PadicNum padic_binomial(const PadicNum& a, unsigned long k) {
    const unsigned p = a.prime();
    if (k == 0) return PadicNum(p, a.precision(), 1);
    unsigned w = factorial_valuation(p, k);
    if (a.precision() <= w)
        throw std::domain_error("padic_binomial: insufficient precision; need at least " +
                                std::to_string(w + 1) + " digits, have " +
                                std::to_string(a.precision()));
    Int m = a.modulus();
    Int num = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= a.value() - Int(i);
        num = mod_floor(num, m);
    }
    // k! = p^w u with u a unit: strip p^w from the numerator exactly, then
    // multiply by u^{-1} at the reduced precision.
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    Int pw = int_pow(p, w);
    Int unit = fact / pw;
    if (!mpz_divisible_p(num.get_mpz_t(), pw.get_mpz_t()))
        throw std::logic_error("padic_binomial: numerator lost p-divisibility");
    unsigned out_prec = a.precision() - w;
    Int mout = int_pow(p, out_prec);
    Int q = num / pw;
    Int uinv;
    if (mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), mout.get_mpz_t()) == 0)
        throw std::logic_error("padic_binomial: unit part of k! not invertible");
    return PadicNum(p, out_prec, q * uinv);
}

}  // namespace qprism
