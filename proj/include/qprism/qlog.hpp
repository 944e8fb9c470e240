#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bivar.hpp"
#include "prism.hpp"
#include "tower.hpp"

namespace qprism {

/// The formal q-logarithm in Q[[q-1, x-1]]:
///   log_q(x) = sum_(n>=1) (-1)^(n-1) q^(-n(n-1)/2) (x,-1;q)_n / [n]_q.
inline BivarSeries qlog_formal(unsigned mq, unsigned mx) {
    BivarSeries acc(mq, mx);
    // running Pochhammer (x,-1;q)_n and prefactor q^(-n(n-1)/2)
    BivarSeries poch = BivarSeries::one(mq, mx);
    RatSeries qinv = RatSeries::one_plus_u_pow(-1, mq);
    RatSeries qinv_pow = RatSeries::one(mq);  // q^(-(n-1))
    RatSeries pref = RatSeries::one(mq);      // q^(-n(n-1)/2)
    for (unsigned n = 1; n <= mq + mx; ++n) {
        // poch <- poch * (x - q^(n-1)), pref <- pref * q^(-(n-1))
        BivarSeries factor(mq, mx);
        factor.set_column(0, RatSeries::one(mq) -
                                 RatSeries::one_plus_u_pow(static_cast<long>(n) - 1, mq));
        if (mx >= 2) factor.set_column(1, RatSeries::one(mq));
        poch = poch * factor;
        pref = pref * qinv_pow;
        qinv_pow = qinv_pow * qinv;
        if (poch.is_zero()) break;
        RatSeries scale = pref * RatSeries::q_int(static_cast<long>(n), mq).inv();
        BivarSeries term = poch.mul_univar(scale);
        acc = (n % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

struct CharacterizationReport {
    unsigned order = 0;
    bool derivative_is_inv_x = false;   // nabla_q(log_q) = 1/x
    bool vanishes_at_one = false;       // log_q(1) = 0
    bool classical_comparison = false;  // log(q) log_q(x) = (q-1) log(x)
    bool pass() const { return derivative_is_inv_x && vanishes_at_one && classical_comparison; }
};

/// Verifies the defining properties of the formal q-logarithm at truncation
/// (M, M). The derivative check needs an x-margin because the substitution
/// x -> qx mixes the two variables near the truncation boundary.
inline CharacterizationReport verify_characterization(unsigned M) {
    if (M < 2) throw std::invalid_argument("verify_characterization: order must be >= 2");
    CharacterizationReport rep;
    rep.order = M;

    BivarSeries L = qlog_formal(M + 1, 2 * M + 3);
    BivarSeries dL = L.nabla_q();  // orders (M, 2M+2)
    rep.derivative_is_inv_x = dL.agrees_on(BivarSeries::inv_x(M, M), M, M);

    rep.vanishes_at_one = L.eval_x1().is_zero();

    BivarSeries Lt = L.truncated(M, M);
    RatSeries logq = RatSeries::one_plus_u_pow(1, M).log();
    BivarSeries lhs = Lt.mul_univar(logq);
    BivarSeries rhs = series_log(BivarSeries::x(M, M)).mul_univar(RatSeries::u(M));
    rep.classical_comparison = (lhs == rhs);
    return rep;
}

/// Convergence bookkeeping for the prism-level q-logarithm.
struct QLogReport {
    std::string input;
    unsigned terms_used = 0;
    /// Number of distinguished factors of [n]_q! at the cutoff, i.e. its
    /// (p, xi)-adic valuation sum_r floor(n/p^r); monotone in n.
    unsigned long factorial_valuation_at_cutoff = 0;
    /// s-adic lower bound for the first omitted term: term n has s-order
    /// >= n, so the sum is exact at the output order once n reaches it.
    unsigned series_valuation_at_cutoff = 0;
    unsigned precision = 0;
    unsigned order = 0;
    bool nygaard_level1 = false;          // log_q(x) in Nygaard^(>=1)
    bool congruent_x_minus_1_mod_n2 = false;  // log_q(x) = x-1 mod Nygaard^(>=2)
};

/// Exponent guard digits consumed by qlog_element: writing the input as q^a,
/// the summation needs a only modulo p^(input precision), and the resulting
/// error of every partial term lies in the ideal (p, s)^(N_in - v_max). The
/// output is therefore exact at coefficient precision
/// N_in - out_order - floor(log_p(out_order)).
inline unsigned qlog_precision_overhead(unsigned p, unsigned out_order) {
    unsigned vmax = 0;
    for (unsigned long t = out_order; t >= p; t /= p) ++vmax;
    return out_order + vmax;
}

/// Input coefficient precision needed for a q-logarithm exact at
/// (precision, out_order).
inline unsigned qlog_required_precision(unsigned p, unsigned precision, unsigned out_order) {
    return precision + qlog_precision_overhead(p, out_order);
}

/// Prism-level q-logarithm
///   log_q(x) = sum_(n>=1) (-1)^(n-1) q^(-n(n-1)/2) [n-1]_q! gamma_(n,q)(x-1)
/// for x of rank 1 with x - 1 in Nygaard^(>=1), i.e. x = q^a.
///
/// Each term collapses: (x - q^i) = q^i s [a-i]_q with [b]_q := (q^b - 1)/(q-1),
/// so the q^(-n(n-1)/2) prefactor cancels and
///   term_n = (-1)^(n-1) s^n (prod_(i<n) [a-i]_q) / [n]_q.
/// Writing n = p^v n' and choosing i* = a mod p^v (so p^v divides a - i*),
/// [a-i*]_q / [p^v]_q = [(a-i*)/p^v]_(q^(p^v)) is itself a binomial-type
/// series and [n']_(q^(p^v)) is a unit, which makes every term a product of
/// explicitly computable series: no distinguished division is needed and the
/// only precision cost is the exponent guard above. Terms are summed for
/// n < out_order; the first omitted term has s-order >= out_order, and the
/// factorial valuation of [n-1]_q! at the cutoff is reported as the p-adic
/// side of the tail bound.
inline std::pair<TowerSeries, QLogReport> qlog_element(const TowerSeries& x, unsigned out_order) {
    const unsigned p = x.prime();
    const unsigned N_in = x.precision();
    const unsigned M_in = x.order();
    if (out_order < 2) throw std::invalid_argument("qlog_element: output order must be >= 2");
    if (M_in < out_order + 1)
        throw std::domain_error("qlog_element: precision exhausted (need input order >= " +
                                std::to_string(out_order + 1) + ", have " + std::to_string(M_in) +
                                ")");
    unsigned overhead = qlog_precision_overhead(p, out_order);
    if (N_in <= overhead + 1)
        throw std::domain_error(
            "qlog_element: precision exhausted (need input coefficient precision > " +
            std::to_string(overhead + 1) + ", have " + std::to_string(N_in) + ")");
    const unsigned N_out = N_in - overhead;
    if (!rank_one_check(x))
        throw std::domain_error("qlog_element: hypothesis failure (x is not of rank 1)");
    TowerSeries one = TowerSeries::one(p, x.level(), N_in, M_in);
    TowerSeries xm1 = x - one;
    if (!xm1.is_zero() && nygaard_level(xm1, 1).level < 1)
        throw std::domain_error("qlog_element: hypothesis failure (x - 1 not in Nygaard^(>=1))");

    // the exponent a with x = q^a, known modulo p^N_in; verified below
    const Int a = x.coeff(1);
    {
        TowerSeries rebuilt(p, x.level(), N_in, M_in);
        for (unsigned k = 0; k < M_in; ++k) rebuilt.set_coeff(k, binomial(a, k));
        unsigned check_prec = N_in > M_in ? N_in - M_in : 1;
        if (!x.congruent_to(rebuilt, check_prec, M_in))
            throw std::domain_error(
                "qlog_element: hypothesis failure (input is not a q-power at precision)");
    }

    long ph = 1;
    for (unsigned i = 0; i < x.level(); ++i) ph *= p;
    const unsigned M = out_order;  // working series order for all products
    unsigned vmax = 0;
    for (unsigned long t = out_order; t >= p; t /= p) ++vmax;

    // w_i = (x q^(-i) - 1)/s = [a-i]_q as a series; hole_prod[v] maintains
    // prod_(i<n, i != a mod p^v) w_i while full_prod keeps all factors.
    TowerSeries qinv = q_element(p, N_in, M + 1, x.level()).inv();
    TowerSeries z = x.reduced(N_in, M + 1);  // x q^(-i)
    TowerSeries full_prod = TowerSeries::one(p, x.level(), N_in, M);
    std::vector<TowerSeries> hole_prod(vmax + 1, full_prod);
    std::vector<Int> hole_index(vmax + 1);
    for (unsigned v = 1; v <= vmax; ++v) hole_index[v] = mod_floor(a, int_pow(p, v));

    TowerSeries acc(p, x.level(), N_in, M);
    unsigned terms = 0;
    for (unsigned n = 1; n < out_order; ++n) {
        // fold in w_(n-1)
        TowerSeries w =
            (z - TowerSeries::one(p, x.level(), N_in, M + 1)).divexact_s();
        z = z * qinv;
        full_prod = full_prod * w;
        for (unsigned v = 1; v <= vmax; ++v)
            if (hole_index[v] != n - 1) hole_prod[v] = hole_prod[v] * w;

        if (w.is_zero()) {
            // a zero factor (x an exact integer power of q) kills this and
            // every later term, through the hole products as well
            break;
        }
        unsigned v = 0;
        unsigned long npart = n;
        while (npart % p == 0) {
            npart /= p;
            ++v;
        }
        long pv = 1;
        for (unsigned i = 0; i < v; ++i) pv *= p;

        TowerSeries term = v == 0 ? full_prod : hole_prod[v];
        if (v > 0) {
            // [(a - i*)/p^v]_(q^(p^v)) with i* = a mod p^v, from exact integer
            // binomials of a representative of the quotient exponent
            Int bq = (a - hole_index[v]) / pv;
            bq = mod_floor(bq, int_pow(p, N_in - v));
            TowerSeries t(p, x.level(), N_in, M);
            // (Q^b - 1)/(Q - 1) = sum_(k>=1) binom(b,k) (Q-1)^(k-1)
            TowerSeries Qm1 = TowerSeries::one_plus_s_pow(p, x.level(), N_in, M, pv * ph) -
                              TowerSeries::one(p, x.level(), N_in, M);
            TowerSeries pw = TowerSeries::one(p, x.level(), N_in, M);
            for (unsigned k = 1; k <= M; ++k) {
                t = t + pw.scaled(binomial(bq, k));
                pw = pw * Qm1;
                if (pw.is_zero()) break;
            }
            term = term * t;
        }
        // unit part [n']_(q^(p^v))
        TowerSeries unit_part(p, x.level(), N_in, M);
        for (unsigned long i = 0; i < npart; ++i)
            unit_part = unit_part + TowerSeries::one_plus_s_pow(p, x.level(), N_in, M,
                                                                static_cast<long>(i) * pv * ph);
        term = term * unit_part.inv();
        term = term.shifted_up(n);
        acc = (n % 2 == 1) ? acc + term : acc - term;
        terms = n;
    }

    TowerSeries result = acc.reduced(N_out, out_order);
    QLogReport rep;
    rep.input = x.str();
    rep.terms_used = terms;
    unsigned long fv = 0;
    for (unsigned long q = terms / p; q > 0; q /= p) fv += q;
    rep.factorial_valuation_at_cutoff = fv;
    rep.series_valuation_at_cutoff = out_order;
    rep.precision = N_out;
    rep.order = out_order;
    rep.nygaard_level1 = nygaard_level(result, 1).level >= 1;
    TowerSeries diff = xm1.reduced(N_out, out_order) - result;
    rep.congruent_x_minus_1_mod_n2 = nygaard_level(diff, 2).level >= 2;
    return {result, rep};
}

struct AdditivityReport {
    bool pass = false;
    TowerSeries lhs;  // log_q(xy)
    TowerSeries rhs;  // log_q(x) + log_q(y)
};

/// log_q(xy) = log_q(x) + log_q(y) at the common output precision.
inline AdditivityReport verify_additivity(const TowerSeries& x, const TowerSeries& y,
                                          unsigned out_order) {
    TowerSeries lx = qlog_element(x, out_order).first;
    TowerSeries ly = qlog_element(y, out_order).first;
    TowerSeries lxy = qlog_element(x * y, out_order).first;
    TowerSeries rhs = lx + ly;
    return AdditivityReport{lxy == rhs, lxy, rhs};
}

struct EigenspaceReport {
    bool pass = false;
    TowerSeries difference;  // phi(y) - xi y
};

/// Membership in the Frobenius eigenspace: phi(y) = xi * y at precision.
inline EigenspaceReport eigenspace_check(const TowerSeries& y) {
    TowerSeries lhs = y.frobenius();
    TowerSeries rhs = xi_tilde(y.prime(), y.precision(), y.order()) * y;
    TowerSeries diff = lhs - rhs;
    return EigenspaceReport{diff.is_zero(), diff};
}

/// Element eps^a of the Tate module T_p(R^x) for R = Z_p^cycl, identified
/// with its exponent a; the Teichmuller-type representative [eps^a] is the
/// rank-1 element q^a.
struct TateExponent {
    PadicNum a;
};

struct TraceModelReport {
    TowerSeries value;  // log_q(q^a)
    QLogReport log_report;
    EigenspaceReport eigenspace;
    bool equals_a_mu = false;  // value == a (q-1) coefficient-exactly
    bool pass() const { return equals_a_mu && eigenspace.pass; }
};

/// Model case of the degree-2 trace: a -> log_q(q^a), which must land in the
/// phi = xi eigenspace and equal a (q-1) exactly at precision. The exponent
/// must carry qlog_required_precision(...) + v_p((out_order+1)!) digits.
inline TraceModelReport trace_map_model(const TateExponent& t, unsigned precision,
                                        unsigned out_order) {
    const unsigned p = t.a.prime();
    unsigned in_order = out_order + 1;
    unsigned in_prec = qlog_required_precision(p, precision, out_order);
    TowerSeries x = binomial_qpower(t.a, in_order, in_prec);
    auto [y, rep] = qlog_element(x, out_order);
    EigenspaceReport eig = eigenspace_check(y);
    TowerSeries amu = mu_element(p, precision, out_order).scaled(t.a.reduced(precision));
    bool eq = (y == amu);
    return TraceModelReport{y, rep, eig, eq};
}

}  // namespace qprism
