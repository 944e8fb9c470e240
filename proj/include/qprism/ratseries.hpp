#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace qprism {

/// Truncated univariate power series over Q in the variable u = q - 1.
class RatSeries {
public:
    explicit RatSeries(unsigned order) : c_(order) {
        if (order < 1) throw std::invalid_argument("RatSeries: order must be >= 1");
    }

    static RatSeries constant(const Rat& v, unsigned order) {
        RatSeries r(order);
        r.c_[0] = v;
        return r;
    }
    static RatSeries one(unsigned order) { return constant(Rat(1), order); }
    static RatSeries u(unsigned order) {
        RatSeries r(order);
        if (order >= 2) r.c_[1] = 1;
        return r;
    }

    /// (1 + u)^e = q^e as a series in u, for any integer e.
    static RatSeries one_plus_u_pow(long e, unsigned order) {
        RatSeries r(order);
        for (unsigned k = 0; k < order; ++k) {
            if (e >= 0 && k > static_cast<unsigned long>(e)) break;
            r.c_[k] = Rat(binomial(e, k));
        }
        return r;
    }

    /// [n]_q = ((1+u)^n - 1)/u = sum_k binom(n, k+1) u^k, any integer n.
    static RatSeries q_int(long n, unsigned order) {
        RatSeries r(order);
        for (unsigned k = 0; k < order; ++k) r.c_[k] = Rat(binomial(n, k + 1));
        return r;
    }

    /// [n]_q! as a series in u.
    static RatSeries q_factorial(unsigned long n, unsigned order) {
        RatSeries r = one(order);
        for (unsigned long k = 2; k <= n; ++k) r = r * q_int(static_cast<long>(k), order);
        return r;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()); }
    const Rat& coeff(unsigned i) const { return c_.at(i); }
    void set_coeff(unsigned i, const Rat& v) {
        c_.at(i) = v;
        c_.at(i).canonicalize();
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (v != 0) return false;
        return true;
    }

    RatSeries truncated(unsigned order) const {
        if (order > c_.size()) throw std::domain_error("RatSeries: cannot extend truncation order");
        RatSeries r(order);
        for (unsigned i = 0; i < order; ++i) r.c_[i] = c_[i];
        return r;
    }

    /// Zero-pads to a larger order; only meaningful when the series is known
    /// to be an exact polynomial of degree below the current order.
    RatSeries extended(unsigned order) const {
        if (order < c_.size()) return truncated(order);
        RatSeries r(order);
        for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        return r;
    }

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b) {
        unsigned m = std::min(a.order(), b.order());
        RatSeries r(m);
        for (unsigned i = 0; i < m; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b) {
        unsigned m = std::min(a.order(), b.order());
        RatSeries r(m);
        for (unsigned i = 0; i < m; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    RatSeries operator-() const {
        RatSeries r(order());
        for (unsigned i = 0; i < order(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
        unsigned m = std::min(a.order(), b.order());
        RatSeries r(m);
        for (unsigned i = 0; i < m; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned j = 0; j + i < m; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    RatSeries scaled(const Rat& v) const {
        RatSeries r(order());
        for (unsigned i = 0; i < order(); ++i) r.c_[i] = c_[i] * v;
        return r;
    }

    /// Inverse; requires a nonzero constant coefficient.
    RatSeries inv() const {
        if (c_[0] == 0) throw std::domain_error("RatSeries: constant term is zero, not invertible");
        RatSeries r(order());
        Rat b0 = 1 / c_[0];
        r.c_[0] = b0;
        for (unsigned k = 1; k < order(); ++k) {
            Rat acc(0);
            for (unsigned j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -b0 * acc;
        }
        return r;
    }

    /// Exact division by u; the constant coefficient must vanish. Drops one
    /// order of truncation.
    RatSeries divexact_u() const {
        if (c_[0] != 0) throw std::domain_error("RatSeries: not divisible by u");
        if (order() < 2) throw std::domain_error("RatSeries: no order left after dividing by u");
        RatSeries r(order() - 1);
        for (unsigned i = 0; i + 1 < order(); ++i) r.c_[i] = c_[i + 1];
        return r;
    }

    /// log of a 1-unit: sum_(k>=1) (-1)^(k-1) (f-1)^k / k.
    RatSeries log() const {
        if (c_[0] != 1) throw std::domain_error("RatSeries: log requires constant term 1");
        RatSeries g = *this - one(order());
        RatSeries acc(order());
        RatSeries pw = g;
        for (unsigned k = 1; k < order() && !pw.is_zero(); ++k) {
            Rat c(k % 2 == 1 ? 1 : -1, k);
            acc = acc + pw.scaled(c);
            pw = pw * g;
        }
        return acc;
    }

    bool operator==(const RatSeries& o) const { return c_ == o.c_; }

    std::string str() const {
        std::ostringstream os;
        bool any = false;
        for (unsigned i = 0; i < order(); ++i) {
            if (c_[i] == 0) continue;
            if (any) os << " + ";
            any = true;
            os << c_[i].get_str();
            if (i >= 1) os << "*u";
            if (i >= 2) os << "^" << i;
        }
        if (!any) os << "0";
        os << " + O(u^" << order() << ")";
        return os.str();
    }

private:
    std::vector<Rat> c_;
};

}  // namespace qprism
