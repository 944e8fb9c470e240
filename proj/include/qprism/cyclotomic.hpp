#pragma once

#include <map>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "numeric.hpp"

namespace qprism {

namespace detail {

/// Dense univariate polynomial over Int, coefficient of q^i at index i.
using QPoly = std::vector<Int>;

inline void qpoly_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Exact long division a / b over the integers (b with leading coefficient
/// +-1 is always safe). Throws if the division leaves a remainder or a
/// non-integral quotient step occurs.
inline QPoly qpoly_divexact(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    QPoly divisor = b;
    qpoly_trim(divisor);
    if (divisor.empty()) throw std::domain_error("qpoly_divexact: division by zero");
    if (a.empty()) return {};
    if (a.size() < divisor.size()) throw std::domain_error("qpoly_divexact: not divisible");
    const Int& lead = divisor.back();
    QPoly quot(a.size() - divisor.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int& top = a[i + divisor.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("qpoly_divexact: not divisible");
        Int c = top / lead;
        quot[i] = c;
        for (std::size_t j = 0; j < divisor.size(); ++j)
            a[i + j] -= c * divisor[j];
    }
    qpoly_trim(a);
    if (!a.empty()) throw std::domain_error("qpoly_divexact: nonzero remainder");
    return quot;
}

/// In-place remainder of f modulo the monic polynomial m.
inline void qpoly_mod_monic(QPoly& f, const QPoly& m) {
    if (m.empty() || m.back() != 1) throw std::invalid_argument("qpoly_mod_monic: modulus not monic");
    qpoly_trim(f);
    std::size_t deg = m.size() - 1;
    while (f.size() > deg) {
        Int c = f.back();
        std::size_t off = f.size() - 1 - deg;
        if (c != 0)
            for (std::size_t j = 0; j < deg; ++j) f[off + j] -= c * m[j];
        f.pop_back();
        qpoly_trim(f);
        if (f.size() <= deg) break;
    }
    f.resize(deg, 0);
}

}  // namespace detail

/// phi^(r-1)([p]_q) = (q^(p^r) - 1) / (q^(p^(r-1)) - 1), the minimal polynomial
/// of a primitive p^r-th root of unity, computed by exact division.
inline detail::QPoly cyclotomic_modulus(unsigned p, unsigned r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_modulus: level must be >= 1");
    if (p < 2) throw std::invalid_argument("cyclotomic_modulus: bad prime");
    unsigned long pr = 1, prm1 = 1;
    for (unsigned i = 0; i < r; ++i) pr *= p;
    for (unsigned i = 0; i + 1 < r; ++i) prm1 *= p;
    detail::QPoly num(pr + 1, 0), den(prm1 + 1, 0);
    num[0] = -1;
    num[pr] = 1;
    den[0] = -1;
    den[prm1] = 1;
    return detail::qpoly_divexact(num, den);
}

/// Image of a Laurent polynomial in Z[q^(+-1)][x^(+-1), y^(+-1)] inside
/// Z[zeta_(p^r)][x^(+-1), y^(+-1)], stored as the unique remainder with
/// q-exponents in [0, deg) per (x, y) slice.
class CyclotomicElement {
public:
    CyclotomicElement(unsigned p, unsigned r)
        : p_(p), r_(r), modulus_(cyclotomic_modulus(p, r)) {}

    static CyclotomicElement reduce(const LaurentPoly& f, unsigned p, unsigned r) {
        CyclotomicElement e(p, r);
        e.value_ = e.reduce_poly(f);
        return e;
    }

    unsigned prime() const { return p_; }
    unsigned level() const { return r_; }
    std::size_t modulus_degree() const { return modulus_.size() - 1; }
    const LaurentPoly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    bool operator==(const CyclotomicElement& o) const {
        return p_ == o.p_ && r_ == o.r_ && value_ == o.value_;
    }

    CyclotomicElement mul(const CyclotomicElement& o) const {
        require_compatible(o);
        CyclotomicElement e(p_, r_);
        e.value_ = e.reduce_poly(value_ * o.value_);
        return e;
    }
    CyclotomicElement add(const CyclotomicElement& o) const {
        require_compatible(o);
        CyclotomicElement e(p_, r_);
        e.value_ = value_ + o.value_;
        return e;
    }

    /// Dense coefficient vector of length deg = p^r - p^(r-1); only defined
    /// for elements with no x or y part.
    std::vector<Int> coeff_vector() const {
        if (value_.depends_on_x() || value_.depends_on_y())
            throw std::domain_error("coeff_vector: element has x or y terms");
        std::vector<Int> v(modulus_degree(), 0);
        for (const auto& [m, c] : value_.terms()) v[static_cast<std::size_t>(m.q)] = c;
        return v;
    }

    std::string str() const { return value_.str(); }

private:
    unsigned p_, r_;
    detail::QPoly modulus_;
    LaurentPoly value_;

    void require_compatible(const CyclotomicElement& o) const {
        if (p_ != o.p_ || r_ != o.r_)
            throw std::invalid_argument("CyclotomicElement: mismatched prime or level");
    }

    LaurentPoly reduce_poly(const LaurentPoly& f) const {
        if (f.is_zero()) return {};
        long pr = 1;
        for (unsigned i = 0; i < r_; ++i) pr *= p_;
        std::map<std::pair<int, int>, std::map<int, Int>> slices;
        for (const auto& [m, c] : f.terms()) slices[{m.x, m.y}][m.q] = c;
        LaurentPoly out;
        for (const auto& [xy, sl] : slices) {
            int lo = sl.begin()->first;
            // q is a unit mod the modulus: clear negative exponents by
            // multiplying with q^(m p^r), a reduction of 1.
            long shift = 0;
            if (lo < 0) shift = ((-static_cast<long>(lo) + pr - 1) / pr) * pr;
            detail::QPoly dense(static_cast<std::size_t>(sl.rbegin()->first + shift + 1), 0);
            for (const auto& [e, c] : sl) dense[static_cast<std::size_t>(e + shift)] = c;
            detail::qpoly_mod_monic(dense, modulus_);
            for (std::size_t i = 0; i < dense.size(); ++i)
                if (dense[i] != 0)
                    out += LaurentPoly::monomial(dense[i], static_cast<int>(i), xy.first, xy.second);
        }
        return out;
    }
};

inline CyclotomicElement cyclotomic_reduce(const LaurentPoly& f, unsigned p, unsigned r) {
    return CyclotomicElement::reduce(f, p, r);
}

namespace detail {

/// Bivariate polynomial in x, y whose coefficients live in Z[q]/(q^(p^r)-1),
/// represented as cyclic vectors of length p^r. Used to build long products
/// like (x-y)(x-qy)...(x-q^(p^r-1)y) cheaply before one final reduction
/// modulo the cyclotomic polynomial (which divides q^(p^r)-1).
class CyclicQXY {
public:
    CyclicQXY(unsigned p, unsigned r) : n_(1) {
        for (unsigned i = 0; i < r; ++i) n_ *= p;
        slices_[{0, 0}] = std::vector<Int>(n_, 0);
        slices_[{0, 0}][0] = 1;  // the constant 1
    }

    /// this <- this * (x - q^k y)
    void mul_factor(long k) {
        std::map<std::pair<int, int>, std::vector<Int>> out;
        long rot = ((k % static_cast<long>(n_)) + n_) % static_cast<long>(n_);
        for (const auto& [xy, v] : slices_) {
            auto& vx = out[{xy.first + 1, xy.second}];
            if (vx.empty()) vx.assign(n_, 0);
            for (std::size_t i = 0; i < n_; ++i) vx[i] += v[i];
            auto& vy = out[{xy.first, xy.second + 1}];
            if (vy.empty()) vy.assign(n_, 0);
            for (std::size_t i = 0; i < n_; ++i)
                vy[(i + rot) % n_] -= v[i];
        }
        slices_ = std::move(out);
    }

    LaurentPoly to_laurent() const {
        LaurentPoly r;
        for (const auto& [xy, v] : slices_)
            for (std::size_t i = 0; i < n_; ++i)
                if (v[i] != 0)
                    r += LaurentPoly::monomial(v[i], static_cast<int>(i), xy.first, xy.second);
        return r;
    }

private:
    std::size_t n_;
    std::map<std::pair<int, int>, std::vector<Int>> slices_;
};

}  // namespace detail

}  // namespace qprism
