#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace qprism {

/// Exponent vector of a monomial q^q x^x y^y (exponents may be negative).
struct Monomial {
    int q = 0;
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse Laurent polynomial in q, x, y over arbitrary-precision integers.
/// Stored in normalized form: no zero coefficients are kept, so equality is
/// coefficient-wise map equality.
class LaurentPoly {
public:
    using Terms = std::map<Monomial, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int c) {
        if (c != 0) terms_[Monomial{}] = std::move(c);
    }
    explicit LaurentPoly(long c) : LaurentPoly(Int(c)) {}

    static LaurentPoly monomial(Int c, int qe, int xe = 0, int ye = 0) {
        LaurentPoly r;
        if (c != 0) r.terms_[Monomial{qe, xe, ye}] = std::move(c);
        return r;
    }
    static LaurentPoly q(int e = 1) { return monomial(1, e, 0, 0); }
    static LaurentPoly x(int e = 1) { return monomial(1, 0, e, 0); }
    static LaurentPoly y(int e = 1) { return monomial(1, 0, 0, e); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Int coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(Monomial{ma.q + mb.q, ma.x + mb.x, ma.y + mb.y}, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Int& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
        return r;
    }

    /// Multiply by the monomial c q^qe x^xe y^ye.
    LaurentPoly mul_monomial(const Int& c, int qe, int xe = 0, int ye = 0) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [m, v] : terms_)
            r.terms_[Monomial{m.q + qe, m.x + xe, m.y + ye}] = v * c;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // ---- substitutions ----

    /// x -> q x
    LaurentPoly subst_x_to_qx() const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.terms_[Monomial{m.q + m.x, m.x, m.y}] = c;
        return r;
    }

    /// y -> q^k y
    LaurentPoly subst_y_to_qky(int k) const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.terms_[Monomial{m.q + k * m.y, m.x, m.y}] = c;
        return r;
    }

    /// q -> q^m, m >= 1
    LaurentPoly subst_q_power(int m) const {
        if (m < 1) throw std::invalid_argument("subst_q_power: exponent must be >= 1");
        LaurentPoly r;
        for (const auto& [mo, c] : terms_) r.terms_[Monomial{mo.q * m, mo.x, mo.y}] = c;
        return r;
    }

    /// y -> +1 or -1
    LaurentPoly eval_y_sign(int sign) const {
        if (sign != 1 && sign != -1) throw std::invalid_argument("eval_y_sign: sign must be +-1");
        LaurentPoly r;
        for (const auto& [m, c] : terms_) {
            Int v = (sign == -1 && (m.y % 2 != 0)) ? Int(-c) : c;
            r.add_term(Monomial{m.q, m.x, 0}, v);
        }
        return r;
    }

    /// q -> 1
    LaurentPoly eval_q1() const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) r.add_term(Monomial{0, m.x, m.y}, c);
        return r;
    }

    int min_exp_q() const { return min_exp([](const Monomial& m) { return m.q; }); }
    int max_exp_q() const { return max_exp([](const Monomial& m) { return m.q; }); }
    int min_exp_x() const { return min_exp([](const Monomial& m) { return m.x; }); }
    int max_exp_x() const { return max_exp([](const Monomial& m) { return m.x; }); }
    int min_exp_y() const { return min_exp([](const Monomial& m) { return m.y; }); }
    int max_exp_y() const { return max_exp([](const Monomial& m) { return m.y; }); }

    bool depends_on_x() const {
        return std::any_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.x != 0; });
    }
    bool depends_on_y() const {
        return std::any_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return t.first.y != 0; });
    }

    /// Exact division by (q - 1); throws if the argument is not divisible.
    LaurentPoly divexact_q_minus_1() const {
        if (is_zero()) return LaurentPoly();
        // Work per (x, y) slice: each slice is a univariate Laurent polynomial
        // in q whose coefficients must sum to zero.
        std::map<std::pair<int, int>, std::map<int, Int>> slices;
        for (const auto& [m, c] : terms_) slices[{m.x, m.y}][m.q] = c;
        LaurentPoly r;
        for (const auto& [xy, sl] : slices) {
            int lo = sl.begin()->first;
            int hi = sl.rbegin()->first;
            if (hi == lo) throw std::domain_error("divexact_q_minus_1: not divisible");
            // f = (q-1) h with h_e supported on [lo, hi-1]:
            //   h_{hi-1} = c_hi,  h_{e-1} = c_e + h_e,  and c_lo must equal -h_lo.
            std::vector<Int> h(static_cast<std::size_t>(hi - lo), 0);
            Int carry = 0;
            for (int e = hi; e > lo; --e) {
                auto it = sl.find(e);
                carry += (it == sl.end() ? Int(0) : it->second);
                h[static_cast<std::size_t>(e - 1 - lo)] = carry;
            }
            auto it = sl.find(lo);
            Int clo = (it == sl.end() ? Int(0) : it->second);
            if (clo != -h[0]) throw std::domain_error("divexact_q_minus_1: not divisible");
            for (int e = lo; e < hi; ++e)
                r.add_term(Monomial{e, xy.first, xy.second}, h[static_cast<std::size_t>(e - lo)]);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string vars = var_string(m);
            if (vars.empty()) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << "*";
                os << vars;
            }
        }
        return os.str();
    }

private:
    Terms terms_;

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    template <typename F>
    int min_exp(F f) const {
        if (terms_.empty()) return 0;
        int m = f(terms_.begin()->first);
        for (const auto& [mo, c] : terms_) m = std::min(m, f(mo));
        return m;
    }
    template <typename F>
    int max_exp(F f) const {
        if (terms_.empty()) return 0;
        int m = f(terms_.begin()->first);
        for (const auto& [mo, c] : terms_) m = std::max(m, f(mo));
        return m;
    }

    static std::string var_string(const Monomial& m) {
        std::ostringstream os;
        bool any = false;
        auto put = [&](const char* name, int e) {
            if (e == 0) return;
            if (any) os << "*";
            any = true;
            os << name;
            if (e != 1) os << "^" << e;
        };
        put("q", m.q);
        put("x", m.x);
        put("y", m.y);
        return os.str();
    }
};

}  // namespace qprism
