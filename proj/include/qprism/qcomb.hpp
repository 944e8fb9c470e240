#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "laurent.hpp"

namespace qprism {

/// [n]_q = (q^n - 1)/(q - 1) for any integer n; [0]_q = 0, and for n < 0 the
/// negation rule [-n]_q = -q^(-n) [n]_q gives a Laurent polynomial.
inline LaurentPoly q_int(long n) {
    LaurentPoly r;
    if (n >= 0) {
        for (long i = 0; i < n; ++i) r += LaurentPoly::q(static_cast<int>(i));
    } else {
        for (long i = n; i < 0; ++i) r -= LaurentPoly::q(static_cast<int>(i));
    }
    return r;
}

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
inline LaurentPoly q_factorial(unsigned n) {
    LaurentPoly r = LaurentPoly::one();
    for (unsigned k = 1; k <= n; ++k) r *= q_int(k);
    return r;
}

/// Gaussian binomial binom(n, k)_q, computed by the q-Pascal recursion
///   binom(n,k)_q = q^k binom(n-1,k)_q + binom(n-1,k-1)_q
/// so integrality is structural. Memoized per thread.
inline LaurentPoly q_binomial(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("q_binomial: k > n");
    if (k == 0 || k == n) return LaurentPoly::one();
    thread_local std::map<std::pair<unsigned, unsigned>, LaurentPoly> cache;
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    LaurentPoly v = q_binomial(n - 1, k).mul_monomial(1, static_cast<int>(k)) +
                    q_binomial(n - 1, k - 1);
    cache[{n, k}] = v;
    return v;
}

/// Generalized q-Pochhammer symbol (x,y;q)_n = (x+y)(x+qy)...(x+q^(n-1)y),
/// with (x,y;q)_0 = 1.
inline LaurentPoly q_pochhammer(unsigned n) {
    LaurentPoly r = LaurentPoly::one();
    for (unsigned i = 0; i < n; ++i)
        r *= LaurentPoly::x() + LaurentPoly::monomial(1, static_cast<int>(i), 0, 1);
    return r;
}

/// (x,-1;q)_n = (x-1)(x-q)...(x-q^(n-1)).
inline LaurentPoly q_pochhammer_x1(unsigned n) {
    LaurentPoly r = LaurentPoly::one();
    for (unsigned i = 0; i < n; ++i)
        r *= LaurentPoly::x() - LaurentPoly::q(static_cast<int>(i));
    return r;
}

/// q-derivative with respect to x: (f(qx) - f(x)) / ((q-1) x). The numerator
/// is always divisible by (q-1)x on Laurent polynomials.
inline LaurentPoly q_derivative(const LaurentPoly& f) {
    LaurentPoly num = f.subst_x_to_qx() - f;
    if (num.is_zero()) return num;
    return num.divexact_q_minus_1().mul_monomial(1, 0, -1);
}

namespace detail {

/// Deterministic small Laurent polynomial in q and x (degree <= 10 in each).
inline LaurentPoly random_laurent_qx(std::mt19937_64& rng, int max_abs_exp = 5,
                                     int terms = 5, long coeff_bound = 9) {
    std::uniform_int_distribution<int> de(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    LaurentPoly f;
    for (int t = 0; t < terms; ++t)
        f += LaurentPoly::monomial(Int(dc(rng)), de(rng), de(rng), 0);
    return f;
}

}  // namespace detail

struct IdentityReport {
    std::string name;
    std::vector<long> params;
    bool pass = false;
    std::string difference;  // exact polynomial difference when failing
};

/// Checks one of the named exact q-identities at the given parameters.
/// Throws std::invalid_argument for unknown names or out-of-range parameters.
inline IdentityReport check_identity(const std::string& name, const std::vector<long>& params) {
    IdentityReport rep{name, params, false, ""};
    auto need = [&](std::size_t n) {
        if (params.size() != n)
            throw std::invalid_argument("check_identity: " + name + " expects " +
                                        std::to_string(n) + " parameter(s)");
    };
    LaurentPoly lhs, rhs;
    if (name == "addition") {
        need(2);
        long n = params[0], k = params[1];
        lhs = q_int(n + k);
        rhs = q_int(n).mul_monomial(1, static_cast<int>(k)) + q_int(k);
    } else if (name == "negation") {
        need(1);
        long n = params[0];
        lhs = q_int(-n);
        rhs = -q_int(n).mul_monomial(1, static_cast<int>(-n));
    } else if (name == "pascal") {
        need(2);
        long n = params[0], k = params[1];
        if (k < 1 || k > n) throw std::invalid_argument("check_identity: pascal needs 1 <= k <= n");
        lhs = q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        // binom(n-1, n)_q = 0 in the k = n edge of the recursion
        rhs = (k == n ? LaurentPoly()
                      : q_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k))
                            .mul_monomial(1, static_cast<int>(k))) +
              q_binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1));
    } else if (name == "binomial-theorem") {
        need(1);
        long n = params[0];
        if (n < 0) throw std::invalid_argument("check_identity: binomial-theorem needs n >= 0");
        lhs = q_pochhammer(static_cast<unsigned>(n));
        for (long k = 0; k <= n; ++k) {
            int qe = static_cast<int>(k * (k - 1) / 2);
            rhs += q_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))
                       .mul_monomial(1, qe, static_cast<int>(n - k), static_cast<int>(k));
        }
    } else if (name == "pochhammer-derivative") {
        need(1);
        long n = params[0];
        if (n < 1) throw std::invalid_argument("check_identity: pochhammer-derivative needs n >= 1");
        lhs = q_derivative(q_pochhammer(static_cast<unsigned>(n)));
        rhs = q_int(n) * q_pochhammer(static_cast<unsigned>(n - 1));
    } else if (name == "leibniz") {
        need(1);
        std::mt19937_64 rng(static_cast<std::uint64_t>(params[0]));
        LaurentPoly f = detail::random_laurent_qx(rng);
        LaurentPoly g = detail::random_laurent_qx(rng);
        lhs = q_derivative(f * g);
        rhs = q_derivative(f) * g.subst_x_to_qx() + f * q_derivative(g);
    } else if (name == "cyclotomic-congruence") {
        need(2);
        long p = params[0], r = params[1];
        if (p < 2 || r < 1)
            throw std::invalid_argument("check_identity: cyclotomic-congruence needs p >= 2, r >= 1");
        long pr = 1;
        for (long i = 0; i < r; ++i) pr *= p;
        LaurentPoly a = LaurentPoly::x(static_cast<int>(pr)) - LaurentPoly::y(static_cast<int>(pr));
        detail::CyclicQXY prod(static_cast<unsigned>(p), static_cast<unsigned>(r));
        for (long i = 0; i < pr; ++i) prod.mul_factor(i);
        auto ra = cyclotomic_reduce(a, static_cast<unsigned>(p), static_cast<unsigned>(r));
        auto rb = cyclotomic_reduce(prod.to_laurent(), static_cast<unsigned>(p),
                                    static_cast<unsigned>(r));
        rep.pass = (ra == rb);
        if (!rep.pass) rep.difference = (ra.value() - rb.value()).str();
        return rep;
    } else {
        throw std::invalid_argument("check_identity: unknown identity '" + name + "'");
    }
    rep.pass = (lhs == rhs);
    if (!rep.pass) rep.difference = (lhs - rhs).str();
    return rep;
}

}  // namespace qprism
