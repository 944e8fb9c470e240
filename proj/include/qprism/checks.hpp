#pragma once

#include <algorithm>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace qprism {

enum class Verdict { pass, fail, skip };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "skip";
    }
}

/// One report entry. The claim string states the identity or contract being
/// verified, so failures are traceable to a concrete mathematical statement.
struct CheckResult {
    std::string check_id;
    std::string claim;
    json params;
    Verdict verdict = Verdict::skip;
    json evidence;
};

inline json to_json(const CheckResult& c) {
    return json{{"check_id", c.check_id},
                {"claim", c.claim},
                {"params", c.params},
                {"verdict", verdict_name(c.verdict)},
                {"evidence", c.evidence}};
}

struct RunConfig {
    unsigned prime = 3;
    unsigned precision = 32;  // coefficient precision N
    unsigned order = 64;      // series truncation order M
    unsigned level_cap = 2;   // highest tower level exercised
    unsigned bivar_order_q = 20;
    unsigned bivar_order_x = 20;
    std::uint64_t seed = 0;
    std::vector<std::string> suites;  // empty = all
    std::string out_path;

    void validate() const {
        if (!is_prime(prime))
            throw std::invalid_argument("config: --prime must be a prime number");
        if (precision < 1 || order < 1)
            throw std::invalid_argument("config: --precision and --order must be >= 1");
        if (bivar_order_q < 1 || bivar_order_x < 1)
            throw std::invalid_argument("config: bivariate truncation orders must be >= 1");
    }
};

inline json to_json(const RunConfig& c) {
    return json{{"prime", c.prime},
                {"precision", c.precision},
                {"order", c.order},
                {"level_cap", c.level_cap},
                {"bivar_order_q", c.bivar_order_q},
                {"bivar_order_x", c.bivar_order_x},
                {"seed", c.seed},
                {"suites", c.suites.empty() ? json::array({"qcomb", "padic", "series", "prism",
                                                           "qlog"})
                                            : json(c.suites)}};
}

namespace checks {

namespace detail {

inline CheckResult made(std::string id, std::string claim, json params, bool ok,
                        json evidence = json::object()) {
    return CheckResult{std::move(id), std::move(claim), std::move(params),
                       ok ? Verdict::pass : Verdict::fail, std::move(evidence)};
}

inline CheckResult skipped(std::string id, std::string claim, json params, std::string why) {
    return CheckResult{std::move(id), std::move(claim), std::move(params), Verdict::skip,
                       json{{"reason", std::move(why)}}};
}

inline Int random_value(std::mt19937_64& rng, unsigned p, unsigned digits) {
    Int m = int_pow(p, digits);
    Int v = 0;
    std::uniform_int_distribution<unsigned long> d;
    for (unsigned i = 0; i * 16 < digits * 4 + 32; ++i) v = v * 65536 + (d(rng) & 0xffff);
    return mod_floor(v, m);
}

inline TowerSeries random_series(std::mt19937_64& rng, unsigned p, unsigned precision,
                                 unsigned order, unsigned level = 0) {
    TowerSeries f(p, level, precision, order);
    for (unsigned i = 0; i < order; ++i) f.set_coeff(i, random_value(rng, p, precision));
    return f;
}

}  // namespace detail

inline std::vector<CheckResult> suite_qcomb(const RunConfig& cfg) {
    using detail::made;
    std::vector<CheckResult> out;
    auto family = [&](const std::string& id, const std::string& claim, const std::string& name,
                      const std::vector<std::vector<long>>& tuples) {
        json params = json::array();
        std::string diff;
        bool ok = true;
        for (const auto& t : tuples) {
            IdentityReport r = check_identity(name, t);
            if (!r.pass) {
                ok = false;
                diff = r.difference;
                params.push_back(t);
            }
        }
        json ev = ok ? json{{"cases", tuples.size()}}
                     : json{{"failing_params", params}, {"difference", diff}};
        out.push_back(made("qcomb." + id, claim, json{{"cases", tuples.size()}}, ok, ev));
    };

    std::vector<std::vector<long>> tuples;
    for (long n = 1; n <= 30; ++n)
        for (long k = 1; k <= n; ++k) tuples.push_back({n, k});
    family("pascal", "binom(n,k)_q = q^k binom(n-1,k)_q + binom(n-1,k-1)_q for 1<=k<=n<=30",
           "pascal", tuples);

    tuples.clear();
    for (long n = 0; n <= 20; ++n) tuples.push_back({n});
    family("binomial_theorem",
           "(x,y;q)_n = sum_k q^(k(k-1)/2) binom(n,k)_q x^(n-k) y^k for n<=20",
           "binomial-theorem", tuples);

    tuples.clear();
    for (long n = 1; n <= 20; ++n) tuples.push_back({n});
    family("pochhammer_derivative", "nabla_q((x,y;q)_n) = [n]_q (x,y;q)_(n-1) for n<=20",
           "pochhammer-derivative", tuples);

    tuples.clear();
    for (long n = -20; n <= 20; ++n)
        for (long k = -20; k <= 20; k += 5) tuples.push_back({n, k});
    family("addition", "[n+k]_q = q^k [n]_q + [k]_q for |n|,|k| <= 20", "addition", tuples);

    tuples.clear();
    for (long n = -20; n <= 20; ++n) tuples.push_back({n});
    family("negation", "[-n]_q = -q^(-n) [n]_q for |n| <= 20", "negation", tuples);

    tuples.clear();
    for (long s = 0; s < 10; ++s) tuples.push_back({static_cast<long>(cfg.seed) + s});
    family("leibniz", "nabla_q(fg) = nabla_q(f) g(qx) + f nabla_q(g) on random Laurent inputs",
           "leibniz", tuples);

    tuples.clear();
    for (long p : {2L, 3L, 5L})
        for (long r : {1L, 2L, 3L}) tuples.push_back({p, r});
    family("cyclotomic_congruence",
           "x^(p^r) - y^(p^r) = (x-y)(x-qy)...(x-q^(p^r-1)y) mod phi^(r-1)(xi) for p in {2,3,5}, "
           "r in {1,2,3}",
           "cyclotomic-congruence", tuples);

    // [m]_q = [m/n]_(q^n) [n]_q for n | m
    {
        bool ok = true;
        for (long n : {2L, 3L, 5L})
            for (long f : {2L, 3L, 4L})
                ok = ok && (q_int(n * f) == q_int(f).subst_q_power(static_cast<int>(n)) * q_int(n));
        out.push_back(made("qcomb.divisor_relation", "[m]_q = [m/n]_(q^n) [n]_q when n | m",
                           json::object(), ok));
    }
    return out;
}

inline std::vector<CheckResult> suite_padic(const RunConfig& cfg) {
    using detail::made;
    std::vector<CheckResult> out;
    const unsigned p = cfg.prime;
    const unsigned N = std::min(cfg.precision, 64u);
    std::mt19937_64 rng(cfg.seed ^ 0x7064616369636bULL);

    {
        bool ok = true;
        for (unsigned a0 = 0; a0 < p; ++a0) {
            PadicNum t = teichmuller(p, Int(a0), N);
            ok = ok && t.pow(p) == t && mod_floor(t.value(), Int(p)) == a0;
        }
        out.push_back(made("padic.teichmuller_fixed_point",
                           "teich(a0)^p = teich(a0) mod p^N and teich(a0) = a0 mod p",
                           json{{"precision", N}}, ok));
    }
    {
        bool ok = true;
        for (unsigned a = 1; a < p; ++a)
            for (unsigned b = 1; b < p; ++b)
                ok = ok && teichmuller(p, Int(a) * Int(b), N) ==
                               teichmuller(p, Int(a), N) * teichmuller(p, Int(b), N);
        out.push_back(made("padic.teichmuller_multiplicative",
                           "teich(ab mod p) = teich(a) teich(b) mod p^N", json{{"precision", N}},
                           ok));
    }
    {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            PadicNum a(p, N, detail::random_value(rng, p, N));
            PadicNum am1 = a - PadicNum(p, N, 1);
            for (unsigned k = 1; k <= 5 && k < N; ++k) {
                if (N <= factorial_valuation(p, k)) continue;
                PadicNum lhs = padic_binomial(a, k);
                PadicNum rhs = padic_binomial(am1, k) + padic_binomial(am1, k - 1);
                ok = ok && lhs.congruent_to(rhs);
            }
        }
        out.push_back(made("padic.binomial_pascal",
                           "binom(a,k) = binom(a-1,k) + binom(a-1,k-1) at matching precision",
                           json{{"samples", 20}}, ok));
    }
    {
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            PadicNum a(p, N, detail::random_value(rng, p, N));
            if (!a.is_unit()) continue;
            ok = ok && (a * a.inv()).value() == 1;
        }
        out.push_back(made("padic.unit_inverse", "x inv(x) = 1 for random units",
                           json{{"samples", 20}}, ok));
    }
    if (N >= 4) {
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            PadicNum hi(p, N, detail::random_value(rng, p, N));
            PadicNum lo = hi.reduced(N / 2);
            PadicNum other(p, N, detail::random_value(rng, p, N));
            ok = ok && (hi * other).reduced(N / 2) == lo * other.reduced(N / 2);
            ok = ok && (hi + other).reduced(N / 2) == lo + other.reduced(N / 2);
        }
        out.push_back(made("padic.precision_contract",
                           "documented output precision matches higher-precision recomputation",
                           json{{"samples", 20}}, ok));
    } else {
        out.push_back(detail::skipped("padic.precision_contract",
                                      "documented output precision matches higher-precision "
                                      "recomputation",
                                      json::object(), "insufficient precision (need N >= 4)"));
    }
    return out;
}

inline std::vector<CheckResult> suite_series(const RunConfig& cfg) {
    using detail::made;
    using detail::skipped;
    std::vector<CheckResult> out;
    const unsigned p = cfg.prime;
    const unsigned N = cfg.precision;
    const unsigned M = cfg.order;
    std::mt19937_64 rng(cfg.seed ^ 0x73657269657343ULL);

    {
        bool ok = true;
        for (int t = 0; t < 8; ++t) {
            TowerSeries f = detail::random_series(rng, p, N, M);
            TowerSeries g = detail::random_series(rng, p, N, M);
            ok = ok && (f + g).frobenius() == f.frobenius() + g.frobenius();
            ok = ok && (f * g).frobenius() == f.frobenius() * g.frobenius();
        }
        out.push_back(made("series.frobenius_homomorphism",
                           "phi(f+g) = phi(f)+phi(g) and phi(fg) = phi(f)phi(g)",
                           json{{"samples", 8}}, ok));
    }
    if (M >= 2) {
        TowerSeries mu = mu_element(p, N, M);
        out.push_back(made("series.phi_mu", "phi(mu) = xi mu", json::object(),
                           mu.frobenius() == xi_tilde(p, N, M) * mu));
    } else {
        out.push_back(skipped("series.phi_mu", "phi(mu) = xi mu", json::object(),
                              "insufficient order (need M >= 2)"));
    }
    {
        bool ok = true;
        for (int t = 0; t < 6; ++t) {
            TowerSeries f = detail::random_series(rng, p, N, M);
            ok = ok && f.phi_inverse().frobenius() == f.embed(1);
        }
        out.push_back(made("series.phi_inverse_embed", "frobenius(phi_inverse(f)) = embed(f, h+1)",
                           json{{"samples", 6}}, ok));
    }
    if (M >= p) {
        TowerSeries f = q_element(p, N, M).pow(p) - TowerSeries::one(p, 0, N, M);
        DivisionResult dr = distinguished_divide(f, xi_tilde(p, N, M));
        bool ok = dr.divisible && dr.certificate.verify() &&
                  dr.certificate.quotient == mu_element(p, N, M - (p - 1));
        DivisionResult nd = distinguished_divide(mu_element(p, N, M), xi_tilde(p, N, M));
        ok = ok && !nd.divisible && !nd.remainder.is_zero();
        out.push_back(made("series.distinguished_divide",
                           "(q^p - 1)/xi = mu with re-verifiable certificate; mu itself is not "
                           "divisible by xi",
                           json::object(), ok));
    } else {
        out.push_back(skipped("series.distinguished_divide",
                              "(q^p - 1)/xi = mu with re-verifiable certificate", json::object(),
                              "insufficient order (need M >= p)"));
    }
    {
        unsigned work = N + factorial_valuation(p, M);
        bool ok = true;
        for (int t = 0; t < 6; ++t) {
            PadicNum a(p, work, detail::random_value(rng, p, work));
            PadicNum b(p, work, detail::random_value(rng, p, work));
            TowerSeries qa = binomial_qpower(a, M, N);
            TowerSeries qb = binomial_qpower(b, M, N);
            ok = ok && qa * qb == binomial_qpower(a + b, M, N);
            ok = ok && rank_one_check(qa);
        }
        PadicNum m1(p, work, Int(-1));
        ok = ok && binomial_qpower(m1, M, N) == q_element(p, N, M).inv();
        out.push_back(made("series.qpower_exponent_homomorphism",
                           "q^a q^b = q^(a+b) and phi(q^a) = (q^a)^p; q^(-1) = inv(q)",
                           json{{"samples", 6}}, ok));
    }
    {
        bool ok = true;
        for (int t = 0; t < 5; ++t) {
            TowerSeries f = detail::random_series(rng, p, N, M, t % (cfg.level_cap + 1));
            json j = to_json(f);
            ok = ok && tower_from_json(j) == f && to_json(tower_from_json(j)).dump() == j.dump();
        }
        out.push_back(made("series.json_round_trip",
                           "serialization round-trips bit-exactly", json{{"samples", 5}}, ok));
    }

    const unsigned bq = cfg.bivar_order_q, bx = cfg.bivar_order_x;
    if (bq >= 6 && bx >= 6) {
        std::uniform_int_distribution<long> numd(-9, 9);
        std::uniform_int_distribution<long> dend(1, 9);
        std::uniform_int_distribution<unsigned> iu(0, 3), ju(0, 3);
        auto rand_poly = [&](unsigned mq, unsigned mx) {
            BivarSeries f(mq, mx);
            for (int t = 0; t < 6; ++t) {
                Rat v(numd(rng), dend(rng));
                v.canonicalize();
                f.set_coeff(iu(rng), ju(rng), v);
            }
            return f;
        };
        {
            bool ok = true;
            for (int t = 0; t < 4; ++t) {
                BivarSeries f = rand_poly(bq, bx);
                BivarSeries g = rand_poly(bq, bx);
                BivarSeries lhs = (f * g).nabla_q();
                BivarSeries rhs = f.nabla_q() * g.shift_x_to_qx().truncated(bq - 1, bx - 1) +
                                  f.truncated(bq - 1, bx - 1) * g.nabla_q();
                ok = ok && lhs == rhs;
            }
            out.push_back(made("series.bivar_leibniz",
                               "nabla_q(fg) = nabla_q(f) g(qx) + f nabla_q(g) on truncated series",
                               json{{"samples", 4}}, ok));
        }
        {
            bool ok = true;
            unsigned count = std::min(bx, 8u);
            unsigned head = bq + 6;  // u-headroom for exact polynomial expansion
            for (int t = 0; t < 4; ++t) {
                BivarSeries f = rand_poly(bq, bx);
                auto a = qtaylor_expand(f.extended(head, bx), count);
                bool all_zero = true;
                for (const auto& an : a) all_zero = all_zero && an.is_zero();
                if (all_zero) ok = ok && f.truncated(bq, count).is_zero();
                BivarSeries back = qtaylor_reconstruct(a, bq, count);
                ok = ok && back == f.truncated(bq, count);
            }
            out.push_back(made("series.qtaylor_round_trip",
                               "expand-then-reconstruct is the identity; vanishing expansion "
                               "implies vanishing series",
                               json{{"samples", 4}}, ok));
        }
        {
            bool ok = true;
            for (int t = 0; t < 4; ++t) {
                BivarSeries f = rand_poly(bq, bx);
                BivarSeries g = rand_poly(bq, bx);
                f.set_coeff(0, 0, Rat(1));
                g.set_coeff(0, 0, Rat(1));
                ok = ok && series_log(f * g) == series_log(f) + series_log(g);
            }
            out.push_back(made("series.log_homomorphism", "log(xy) = log(x) + log(y) on 1-units",
                               json{{"samples", 4}}, ok));
        }
    } else {
        out.push_back(skipped("series.bivar_leibniz", "q-Leibniz rule on truncated series",
                              json::object(), "insufficient bivariate truncation orders"));
        out.push_back(skipped("series.qtaylor_round_trip", "expand-then-reconstruct identity",
                              json::object(), "insufficient bivariate truncation orders"));
        out.push_back(skipped("series.log_homomorphism", "log(xy) = log(x) + log(y)",
                              json::object(), "insufficient bivariate truncation orders"));
    }
    return out;
}

inline std::vector<CheckResult> suite_prism(const RunConfig& cfg) {
    using detail::made;
    using detail::skipped;
    std::vector<CheckResult> out;
    const unsigned p = cfg.prime;
    const unsigned N = cfg.precision;
    const unsigned M = cfg.order;
    std::mt19937_64 rng(cfg.seed ^ 0x707269736d3171ULL);

    if (N >= 2) {
        bool ok = delta(q_element(p, N, M)).is_zero();
        PadicNum v = delta(xi_tilde(p, N, M)).evaluate_q1();
        ok = ok && v.value() == mod_floor(Int(1) - int_pow(p, p - 1), int_pow(p, N - 1));
        ok = ok && v.is_unit();
        out.push_back(made("prism.delta_xi_unit",
                           "delta(q) = 0 and evaluate_q1(delta(xi)) = 1 - p^(p-1), a unit",
                           json::object(), ok));
    } else {
        out.push_back(skipped("prism.delta_xi_unit", "evaluate_q1(delta(xi)) = 1 - p^(p-1)",
                              json::object(), "insufficient precision (delta needs a guard digit)"));
    }
    if (N >= 2) {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            TowerSeries x = detail::random_series(rng, p, N, M);
            TowerSeries y = detail::random_series(rng, p, N, M);
            ok = ok && x.frobenius().reduced(N - 1, M) ==
                           x.pow(p).reduced(N - 1, M) + delta(x).scaled(Int(p));
            TowerSeries lhs = delta(x * y);
            TowerSeries rhs = x.pow(p).reduced(N - 1, M) * delta(y) +
                              y.pow(p).reduced(N - 1, M) * delta(x) +
                              (delta(x) * delta(y)).scaled(Int(p));
            ok = ok && lhs == rhs;
        }
        ok = ok && delta(TowerSeries::one(p, 0, N, M)).is_zero() &&
             delta(TowerSeries(p, 0, N, M)).is_zero();
        out.push_back(made("prism.delta_ring_axioms",
                           "delta(0)=0, delta(1)=0, delta(xy) = x^p delta(y) + y^p delta(x) + p "
                           "delta(x) delta(y), phi(x) = x^p + p delta(x)",
                           json{{"samples", 10}}, ok));
    } else {
        out.push_back(skipped("prism.delta_ring_axioms", "delta-ring axioms", json::object(),
                              "insufficient precision (delta needs a guard digit)"));
    }
    {
        bool ok = true;
        json ran = json::array();
        for (unsigned r = 1; r <= 3; ++r) {
            unsigned long pr = 1;
            for (unsigned i = 0; i < r; ++i) pr *= p;
            if (pr >= M || N < 2) continue;
            ran.push_back(r);
            ok = ok && xi_r(p, N, M, r) == q_int_tower(p, N, M, pr);
            if ((p - 1) * pr < M) ok = ok && is_distinguished(phi_power_xi(p, N, M, r)).distinguished;
        }
        if (ran.empty())
            out.push_back(skipped("prism.xi_r", "xi_r = [p^r]_q and phi^r(xi) distinguished",
                                  json::object(), "insufficient order for any level"));
        else
            out.push_back(made("prism.xi_r", "xi_r = [p^r]_q and phi^r(xi) is distinguished",
                               json{{"levels", ran}}, ok));
    }
    if (M >= 2 * p) {
        TowerSeries mu = mu_element(p, N, M);
        NygaardCertificate c1 = nygaard_level(mu, 3);
        NygaardCertificate c2 = nygaard_level(mu * mu, 3);
        NygaardCertificate c0 = nygaard_level(TowerSeries::one(p, 0, N, M), 3);
        bool ok = c1.level == 1 && c1.verify() && c2.level >= 2 && c2.verify() && c0.level == 0;
        out.push_back(made("prism.nygaard_mu",
                           "mu in Nygaard^(>=1) with quotient mu; mu^2 in Nygaard^(>=2); units "
                           "at level 0",
                           json::object(), ok));
        bool okm = true;
        for (int t = 0; t < 4; ++t) {
            TowerSeries f = mu * detail::random_series(rng, p, N, M);
            TowerSeries g = mu * detail::random_series(rng, p, N, M);
            unsigned lf = nygaard_level(f, 2).level;
            unsigned lg = nygaard_level(g, 2).level;
            NygaardCertificate c = nygaard_level(f * g, lf + lg);
            okm = okm && c.level >= lf + lg && c.verify();
        }
        out.push_back(made("prism.nygaard_multiplicative",
                           "nygaard_level(fg) >= nygaard_level(f) + nygaard_level(g)",
                           json{{"samples", 4}}, okm));
    } else {
        out.push_back(skipped("prism.nygaard_mu", "Nygaard levels of mu and mu^2", json::object(),
                              "insufficient order"));
        out.push_back(skipped("prism.nygaard_multiplicative", "Nygaard multiplicativity",
                              json::object(), "insufficient order"));
    }
    {
        unsigned long max_n = 1;
        for (unsigned i = 0; i < 3; ++i) max_n *= p;
        json verified = json::array();
        json failing = json::object();
        bool ok = true;
        bool any = false;
        for (unsigned long n = 1; n <= max_n; ++n) {
            unsigned long total = 0, pr = p;
            for (unsigned long q = n / p; q > 0; q /= p) {
                total += q * (p - 1) * (pr / p);
                pr *= p;
            }
            if (total >= M) continue;
            any = true;
            FactorizationCertificate c = qfact_factorize(p, N, M, n);
            bool this_ok = c.exponents == qfact_exponents(p, n) && c.unit_passes_unit_test() &&
                           c.verify();
            if (!this_ok && ok) failing = to_json(c);  // embed the first failing certificate
            ok = ok && this_ok;
            verified.push_back(n);
        }
        if (!any)
            out.push_back(skipped("prism.qfactorial_factorization",
                                  "[n]_q! = u prod_r phi^(r-1)(xi)^floor(n/p^r)", json::object(),
                                  "insufficient order for any n"));
        else
            out.push_back(made("prism.qfactorial_factorization",
                               "[n]_q! = u prod_r phi^(r-1)(xi)^floor(n/p^r) with unit u, "
                               "certificate re-verifies",
                               json{{"n", verified}}, ok,
                               ok ? json::object() : json{{"failing_certificate", failing}}));
    }
    if (M >= 16 && N >= 2) {
        unsigned work = N + factorial_valuation(p, M);
        bool ok = true;
        json failing = json::object();
        for (int t = 0; t < 3; ++t) {
            PadicNum a(p, work, detail::random_value(rng, p, work));
            TowerSeries x = binomial_qpower(a, M, N);
            for (unsigned long n : {2ul, 3ul}) {
                auto [g, cert] = qdivided_power(x, n);
                bool this_ok = cert.level >= n && cert.verify();
                if (!this_ok && ok) failing = to_json(cert);
                ok = ok && this_ok;
            }
        }
        out.push_back(made("prism.qdivided_nygaard",
                           "gamma_(n,q)(x-1) lies in Nygaard^(>=n) with re-verifiable certificate",
                           json{{"samples", 3}}, ok,
                           ok ? json::object() : json{{"failing_certificate", failing}}));
    } else {
        out.push_back(skipped("prism.qdivided_nygaard", "gamma_(n,q)(x-1) in Nygaard^(>=n)",
                              json::object(), "insufficient precision or order"));
    }
    {
        bool ok = true;
        for (unsigned r = 1; r <= 3; ++r) {
            CongruenceReport rep = congruence_check(p, r);
            ok = ok && rep.pass() && rep.unit == LaurentPoly::one();
        }
        out.push_back(made("prism.congruences",
                           "x^(p^r) - y^(p^r) = prod_i (x - q^i y) mod phi^(r-1)(xi), and "
                           "phi^r(xi) = p*unit mod xi (unit verified = 1)",
                           json{{"r", {1, 2, 3}}}, ok));
    }
    return out;
}

inline std::vector<CheckResult> suite_qlog(const RunConfig& cfg) {
    using detail::made;
    using detail::skipped;
    std::vector<CheckResult> out;
    const unsigned p = cfg.prime;
    std::mt19937_64 rng(cfg.seed ^ 0x716c6f67ULL);

    unsigned Mb = std::min(cfg.bivar_order_q, cfg.bivar_order_x);
    if (Mb >= 4) {
        CharacterizationReport rep = verify_characterization(Mb);
        out.push_back(made("qlog.characterization",
                           "nabla_q(log_q) = 1/x, log_q(1) = 0, log(q) log_q(x) = (q-1) log(x)",
                           json{{"order", Mb}},
                           rep.pass(),
                           json{{"derivative", rep.derivative_is_inv_x},
                                {"value_at_one", rep.vanishes_at_one},
                                {"classical", rep.classical_comparison}}));
    } else {
        out.push_back(skipped("qlog.characterization", "q-logarithm characterization",
                              json::object(), "insufficient bivariate truncation orders"));
    }
    if (Mb >= 8) {
        unsigned count = std::min(8u, Mb / 2);
        unsigned target = Mb / 2;
        auto a = qtaylor_expand(qlog_formal(target + count + 4, 2 * count + 8), count);
        bool ok = a[0].is_zero();
        for (unsigned n = 1; n < count; ++n) {
            RatSeries expect =
                RatSeries::q_factorial(n - 1, target) *
                RatSeries::one_plus_u_pow(
                    -static_cast<long>(n) * (static_cast<long>(n) - 1) / 2, target);
            if (n % 2 == 0) expect = -expect;
            ok = ok && a[n].truncated(target) == expect;
        }
        out.push_back(made("qlog.taylor_coefficients",
                           "qtaylor_expand(log_q): a_0 = 0, a_n = (-1)^(n-1) q^(-n(n-1)/2) "
                           "[n-1]_q!",
                           json{{"count", count}}, ok));
    } else {
        out.push_back(skipped("qlog.taylor_coefficients", "q-Taylor coefficients of log_q",
                              json::object(), "insufficient bivariate truncation orders"));
    }

    unsigned out_order = std::min(cfg.order >= 1 ? cfg.order - 1 : 0, 24u);
    if (out_order < 2 || cfg.precision < 2) {
        out.push_back(skipped("qlog.trace_model", "log_q(q^a) = a (q-1)", json::object(),
                              "insufficient precision or order (need N >= 2, M >= 3)"));
        out.push_back(skipped("qlog.additivity", "log_q(xy) = log_q(x) + log_q(y)", json::object(),
                              "insufficient precision or order (need N >= 2, M >= 3)"));
        out.push_back(skipped("qlog.eigenspace", "phi(mu) = xi mu", json::object(),
                              "insufficient precision or order (need N >= 2, M >= 3)"));
        return out;
    }
    unsigned n_out = std::min(cfg.precision, 16u);
    unsigned a_prec = qlog_required_precision(p, n_out, out_order) +
                      factorial_valuation(p, out_order + 1);
    {
        bool ok = true;
        json samples = json::array();
        for (int t = 0; t < 5; ++t) {
            Int av = detail::random_value(rng, p, a_prec);
            TraceModelReport rep = trace_map_model({PadicNum(p, a_prec, av)}, n_out, out_order);
            ok = ok && rep.pass() && rep.log_report.nygaard_level1 &&
                 rep.log_report.congruent_x_minus_1_mod_n2;
            samples.push_back(mod_floor(av, int_pow(p, 4)).get_str());
        }
        TraceModelReport one = trace_map_model({PadicNum(p, a_prec, 1)}, n_out, out_order);
        ok = ok && one.pass() && one.value == mu_element(p, n_out, out_order);
        out.push_back(made("qlog.trace_model",
                           "log_q(q^a) = a (q-1) exactly at precision, lands in the phi = xi "
                           "eigenspace, and is = q^a - 1 mod Nygaard^(>=2)",
                           json{{"precision", n_out}, {"order", out_order}, {"samples", samples}},
                           ok));
    }
    {
        bool ok = true;
        unsigned in_prec = qlog_required_precision(p, n_out, out_order);
        for (int t = 0; t < 3; ++t) {
            PadicNum a(p, a_prec, detail::random_value(rng, p, a_prec));
            PadicNum b(p, a_prec, detail::random_value(rng, p, a_prec));
            TowerSeries x = binomial_qpower(a, out_order + 1, in_prec);
            TowerSeries y = binomial_qpower(b, out_order + 1, in_prec);
            ok = ok && verify_additivity(x, y, out_order).pass;
        }
        out.push_back(made("qlog.additivity", "log_q(xy) = log_q(x) + log_q(y) on the q^a family",
                           json{{"samples", 3}}, ok));
    }
    {
        unsigned M = cfg.order;
        TowerSeries mu = mu_element(p, std::max(cfg.precision, 2u), std::max(M, 4u));
        bool ok = eigenspace_check(mu).pass && eigenspace_check(mu.scaled(Int(7))).pass &&
                  !eigenspace_check(mu * mu).pass;
        out.push_back(made("qlog.eigenspace",
                           "phi(y) = xi y holds for y = a mu and fails for y = mu^2",
                           json::object(), ok));
    }
    return out;
}

}  // namespace checks

inline std::vector<std::string> all_suite_names() {
    return {"qcomb", "padic", "series", "prism", "qlog"};
}

inline std::vector<CheckResult> run_one_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "qcomb") return checks::suite_qcomb(cfg);
    if (name == "padic") return checks::suite_padic(cfg);
    if (name == "series") return checks::suite_series(cfg);
    if (name == "prism") return checks::suite_prism(cfg);
    if (name == "qlog") return checks::suite_qlog(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

/// Runs the selected suites in a parallel worker pool (all checks are pure
/// value computations). Report assembly is order-independent: entries are
/// sorted by check_id before emission.
inline std::vector<CheckResult> run_suites(const RunConfig& cfg) {
    cfg.validate();
    std::vector<std::string> names = cfg.suites.empty() ? all_suite_names() : cfg.suites;
    auto known = all_suite_names();
    for (const auto& name : names)
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown suite: " + name);
    std::vector<std::future<std::vector<CheckResult>>> futures;
    futures.reserve(names.size());
    for (const auto& name : names)
        futures.push_back(std::async(std::launch::async,
                                     [name, &cfg] { return run_one_suite(name, cfg); }));
    std::vector<CheckResult> all;
    for (auto& f : futures) {
        auto part = f.get();
        all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
    return all;
}

inline json report_json(const RunConfig& cfg, const std::vector<CheckResult>& results) {
    unsigned pass = 0, fail = 0, skip = 0;
    json entries = json::array();
    for (const auto& r : results) {
        entries.push_back(to_json(r));
        switch (r.verdict) {
            case Verdict::pass: ++pass; break;
            case Verdict::fail: ++fail; break;
            case Verdict::skip: ++skip; break;
        }
    }
    return json{{"config", to_json(cfg)},
                {"checks", entries},
                {"summary", json{{"pass", pass}, {"fail", fail}, {"skip", skip}}}};
}

}  // namespace qprism
