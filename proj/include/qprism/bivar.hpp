#pragma once

#include <string>
#include <vector>

#include "ratseries.hpp"

namespace qprism {

/// Truncated element of Q[[q-1, x-1]] with exact rational coefficients.
/// Column j holds the coefficient of (x-1)^j as a series in u = q-1, so the
/// truncation window is rectangular: u-order order_q(), t-order order_x().
class BivarSeries {
public:
    BivarSeries(unsigned order_q, unsigned order_x)
        : mq_(order_q), col_(order_x, RatSeries(order_q)) {
        if (order_q < 1 || order_x < 1)
            throw std::invalid_argument("BivarSeries: truncation orders must be >= 1");
    }

    static BivarSeries constant(const Rat& v, unsigned mq, unsigned mx) {
        BivarSeries r(mq, mx);
        r.col_[0] = RatSeries::constant(v, mq);
        return r;
    }
    static BivarSeries one(unsigned mq, unsigned mx) { return constant(Rat(1), mq, mx); }

    /// The element x = 1 + (x-1).
    static BivarSeries x(unsigned mq, unsigned mx) {
        BivarSeries r = one(mq, mx);
        if (mx >= 2) r.col_[1] = RatSeries::one(mq);
        return r;
    }

    /// 1/x = 1 + (1-x) + (1-x)^2 + ...
    static BivarSeries inv_x(unsigned mq, unsigned mx) {
        BivarSeries r(mq, mx);
        for (unsigned j = 0; j < mx; ++j)
            r.col_[j] = RatSeries::constant(Rat(j % 2 == 0 ? 1 : -1), mq);
        return r;
    }

    /// A univariate series in u, embedded as the x-degree-0 column.
    static BivarSeries from_univar(const RatSeries& f, unsigned mx) {
        BivarSeries r(f.order(), mx);
        r.col_[0] = f;
        return r;
    }

    unsigned order_q() const { return mq_; }
    unsigned order_x() const { return static_cast<unsigned>(col_.size()); }

    const RatSeries& column(unsigned j) const { return col_.at(j); }
    void set_column(unsigned j, const RatSeries& s) {
        if (s.order() != mq_) throw std::invalid_argument("BivarSeries: column order mismatch");
        col_.at(j) = s;
    }
    const Rat& coeff(unsigned i, unsigned j) const { return col_.at(j).coeff(i); }
    void set_coeff(unsigned i, unsigned j, const Rat& v) { col_.at(j).set_coeff(i, v); }

    bool is_zero() const {
        for (const auto& c : col_)
            if (!c.is_zero()) return false;
        return true;
    }

    BivarSeries truncated(unsigned mq, unsigned mx) const {
        if (mx > order_x()) throw std::domain_error("BivarSeries: cannot extend truncation order");
        BivarSeries r(mq, mx);
        for (unsigned j = 0; j < mx; ++j) r.col_[j] = col_[j].truncated(mq);
        return r;
    }

    /// Zero-padding; only meaningful for exact polynomial data.
    BivarSeries extended(unsigned mq, unsigned mx) const {
        BivarSeries r(mq, mx);
        for (unsigned j = 0; j < std::min(mx, order_x()); ++j)
            r.col_[j] = col_[j].extended(mq).truncated(mq);
        return r;
    }

    friend BivarSeries operator+(const BivarSeries& a, const BivarSeries& b) {
        auto [mq, mx] = common(a, b);
        BivarSeries r(mq, mx);
        for (unsigned j = 0; j < mx; ++j)
            r.col_[j] = a.col_[j].truncated(mq) + b.col_[j].truncated(mq);
        return r;
    }
    friend BivarSeries operator-(const BivarSeries& a, const BivarSeries& b) {
        auto [mq, mx] = common(a, b);
        BivarSeries r(mq, mx);
        for (unsigned j = 0; j < mx; ++j)
            r.col_[j] = a.col_[j].truncated(mq) - b.col_[j].truncated(mq);
        return r;
    }
    BivarSeries operator-() const {
        BivarSeries r(mq_, order_x());
        for (unsigned j = 0; j < order_x(); ++j) r.col_[j] = -col_[j];
        return r;
    }
    friend BivarSeries operator*(const BivarSeries& a, const BivarSeries& b) {
        auto [mq, mx] = common(a, b);
        BivarSeries r(mq, mx);
        for (unsigned ja = 0; ja < mx; ++ja) {
            if (a.col_[ja].is_zero()) continue;
            RatSeries ca = a.col_[ja].truncated(mq);
            for (unsigned jb = 0; ja + jb < mx; ++jb) {
                if (b.col_[jb].is_zero()) continue;
                r.col_[ja + jb] = r.col_[ja + jb] + ca * b.col_[jb].truncated(mq);
            }
        }
        return r;
    }

    BivarSeries scaled(const Rat& v) const {
        BivarSeries r(mq_, order_x());
        for (unsigned j = 0; j < order_x(); ++j) r.col_[j] = col_[j].scaled(v);
        return r;
    }

    /// Multiplication by a univariate series in u (acts on every column).
    BivarSeries mul_univar(const RatSeries& f) const {
        BivarSeries r(std::min(mq_, f.order()), order_x());
        RatSeries ft = f.truncated(r.mq_);
        for (unsigned j = 0; j < order_x(); ++j) {
            if (col_[j].is_zero()) continue;
            r.col_[j] = col_[j].truncated(r.mq_) * ft;
        }
        return r;
    }

    /// Inverse; requires a nonzero constant coefficient (unit of the
    /// truncated ring).
    BivarSeries inv() const {
        if (coeff(0, 0) == 0)
            throw std::domain_error("BivarSeries: constant coefficient is zero, not invertible");
        BivarSeries r(mq_, order_x());
        RatSeries b0 = col_[0].inv();
        r.col_[0] = b0;
        for (unsigned k = 1; k < order_x(); ++k) {
            RatSeries acc(mq_);
            for (unsigned j = 1; j <= k; ++j) {
                if (col_[j].is_zero()) continue;
                acc = acc + col_[j] * r.col_[k - j];
            }
            r.col_[k] = -(b0 * acc);
        }
        return r;
    }

    /// Substitution x -> qx. In the coordinates u = q-1, t = x-1 this sends
    /// t to t + u(1+t); computed by a Horner scheme over the columns.
    BivarSeries shift_x_to_qx() const {
        // X = (qx) - 1 = t + u + u t
        BivarSeries X(mq_, order_x());
        X.col_[0] = RatSeries::u(mq_);
        if (order_x() >= 2) X.col_[1] = RatSeries::one(mq_) + RatSeries::u(mq_);
        BivarSeries res(mq_, order_x());
        res.col_[0] = col_[order_x() - 1];
        for (std::size_t j = order_x() - 1; j-- > 0;) {
            res = res * X;
            res.col_[0] = res.col_[0] + col_[j];
        }
        return res;
    }

    /// q-derivative (f(qx) - f(x)) / ((q-1) x). Division by q-1 is a
    /// coefficient shift in u (one u-order is consumed); division by the unit
    /// x is a multiplication by the geometric series. Output truncation:
    /// (order_q - 1, order_x - 1).
    BivarSeries nabla_q() const {
        if (mq_ < 2 || order_x() < 2)
            throw std::domain_error("nabla_q: truncation orders must be >= 2");
        BivarSeries num = shift_x_to_qx() - *this;
        BivarSeries r(mq_ - 1, order_x() - 1);
        for (unsigned j = 0; j + 1 < order_x(); ++j) r.col_[j] = num.col_[j].divexact_u();
        return r * inv_x(mq_ - 1, order_x() - 1);
    }

    /// Evaluation at x = 1: the x-degree-0 column.
    RatSeries eval_x1() const { return col_[0]; }

    /// Reduction modulo q-1: the coefficients of (x-1)^j at u = 0.
    std::vector<Rat> mod_q_minus_1() const {
        std::vector<Rat> v(order_x());
        for (unsigned j = 0; j < order_x(); ++j) v[j] = col_[j].coeff(0);
        return v;
    }

    bool operator==(const BivarSeries& o) const {
        return mq_ == o.mq_ && col_ == o.col_;
    }

    /// Equality after truncating both sides to a common window.
    bool agrees_on(const BivarSeries& o, unsigned mq, unsigned mx) const {
        return truncated(mq, mx) == o.truncated(mq, mx);
    }

    std::string str() const {
        std::string s;
        bool any = false;
        for (unsigned j = 0; j < order_x(); ++j) {
            if (col_[j].is_zero()) continue;
            if (any) s += " + ";
            any = true;
            s += "(" + col_[j].str() + ")";
            if (j >= 1) s += "*t";
            if (j >= 2) s += "^" + std::to_string(j);
        }
        if (!any) s = "0";
        return s + " + O(t^" + std::to_string(order_x()) + ")";
    }

private:
    unsigned mq_;
    std::vector<RatSeries> col_;

    static std::pair<unsigned, unsigned> common(const BivarSeries& a, const BivarSeries& b) {
        return {std::min(a.mq_, b.mq_), std::min(a.order_x(), b.order_x())};
    }
};

/// log of a 1-unit in Q[[q-1, x-1]].
inline BivarSeries series_log(const BivarSeries& f) {
    if (f.coeff(0, 0) != 1)
        throw std::domain_error("series_log: constant term must be 1");
    BivarSeries g = f - BivarSeries::one(f.order_q(), f.order_x());
    BivarSeries acc(f.order_q(), f.order_x());
    BivarSeries pw = g;
    unsigned kmax = f.order_q() + f.order_x();
    for (unsigned k = 1; k <= kmax && !pw.is_zero(); ++k) {
        acc = acc + pw.scaled(Rat(k % 2 == 1 ? 1 : -1, k));
        pw = pw * g;
    }
    return acc;
}

/// (x,-1;q)_n / [n]_q! for n = 0, 1, ...: the q-Taylor basis elements,
/// generated incrementally.
class QTaylorBasis {
public:
    QTaylorBasis(unsigned mq, unsigned mx)
        : current_(BivarSeries::one(mq, mx)), n_(0), mq_(mq), mx_(mx) {}

    unsigned index() const { return n_; }
    const BivarSeries& value() const { return current_; }

    void advance() {
        ++n_;
        // multiply by (x - q^(n-1)) / [n]_q
        BivarSeries factor(mq_, mx_);
        factor.set_column(0, RatSeries::one(mq_) -
                                 RatSeries::one_plus_u_pow(static_cast<long>(n_) - 1, mq_));
        if (mx_ >= 2) factor.set_column(1, RatSeries::one(mq_));
        current_ = (current_ * factor).mul_univar(
            RatSeries::q_int(static_cast<long>(n_), mq_).inv());
    }

private:
    BivarSeries current_;
    unsigned n_;
    unsigned mq_, mx_;
};

/// q-Taylor coefficients a_n = nabla_q^n(f)|_(x=1) for n < count, each a
/// univariate series in u. Successive q-derivatives consume one order in
/// each variable, so a_n is reported at u-order order_q(f) - n.
inline std::vector<RatSeries> qtaylor_expand(const BivarSeries& f, unsigned count) {
    if (count > f.order_x() || count > f.order_q())
        throw std::domain_error("qtaylor_expand: truncation orders too small for " +
                                std::to_string(count) + " coefficients");
    std::vector<RatSeries> a;
    a.reserve(count);
    BivarSeries g = f;
    for (unsigned n = 0; n < count; ++n) {
        a.push_back(g.eval_x1());
        if (n + 1 == count) break;
        g = g.nabla_q();
    }
    return a;
}

/// sum_n a_n (x,-1;q)_n / [n]_q! truncated at (mq, mx).
inline BivarSeries qtaylor_reconstruct(const std::vector<RatSeries>& coeffs, unsigned mq,
                                       unsigned mx) {
    BivarSeries acc(mq, mx);
    QTaylorBasis basis(mq, mx);
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (n > 0) basis.advance();
        if (coeffs[n].is_zero()) continue;
        RatSeries an = coeffs[n].order() >= mq ? coeffs[n].truncated(mq) : coeffs[n].extended(mq);
        acc = acc + basis.value().mul_univar(an);
    }
    return acc;
}

}  // namespace qprism
