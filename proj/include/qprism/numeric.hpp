#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qprism {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(unsigned base, unsigned exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline Int int_pow(const Int& base, unsigned exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// Binomial coefficient binom(n, k) for any integer n (negative upper index
/// follows the usual polynomial extension, so the result is always integral).
inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(long n, unsigned long k) { return binomial(Int(n), k); }

/// v_p(n) for nonzero n.
inline unsigned p_valuation(unsigned p, Int n) {
    if (n == 0) throw std::domain_error("p_valuation: argument is zero");
    unsigned v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    return v;
}

/// v_p(k!) by Legendre's formula.
inline unsigned factorial_valuation(unsigned p, unsigned long k) {
    unsigned long v = 0;
    for (unsigned long q = k / p; q > 0; q /= p) v += q;
    return static_cast<unsigned>(v);
}

/// Representative of a mod m in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_prime(unsigned p) {
    Int z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

inline std::string dec_string(const Int& v) { return v.get_str(10); }

}  // namespace qprism
