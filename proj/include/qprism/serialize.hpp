#pragma once

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "bivar.hpp"
#include "prism.hpp"
#include "qlog.hpp"
#include "tower.hpp"

namespace qprism {

using json = nlohmann::json;

namespace detail {

/// CRC-64/ECMA-182 over a byte string. Detects every error burst of at most
/// 64 bits, in particular any single-byte corruption of a certificate file.
inline std::uint64_t crc64(const std::string& data) {
    static const auto table = [] {
        std::array<std::uint64_t, 256> t{};
        const std::uint64_t poly = 0x42F0E1EBA9EA3693ULL;
        for (unsigned i = 0; i < 256; ++i) {
            std::uint64_t c = static_cast<std::uint64_t>(i) << 56;
            for (int b = 0; b < 8; ++b) c = (c & 0x8000000000000000ULL) ? (c << 1) ^ poly : c << 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint64_t crc = 0;
    for (unsigned char ch : data) crc = table[(crc >> 56) ^ ch] ^ (crc << 8);
    return crc;
}

inline std::string crc64_hex(const json& payload) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(crc64(payload.dump())));
    return buf;
}

/// Attaches a payload digest so that corruption of any byte is detectable
/// even where the verification equation leaves a coefficient p-adically
/// unconstrained (high-order element coefficients enter phi with large
/// valuation).
inline json with_digest(json payload) {
    payload["crc64"] = crc64_hex(payload);
    return payload;
}

inline bool digest_ok(json j) {
    if (!j.contains("crc64")) return true;  // digest is optional on input
    std::string stored = j.at("crc64").get<std::string>();
    j.erase("crc64");
    return stored == crc64_hex(j);
}

}  // namespace detail

// ---- TowerSeries: {prime, level, coeff_precision, order, coefficients} ----

inline json to_json(const TowerSeries& f) {
    json coeffs = json::array();
    for (unsigned i = 0; i < f.order(); ++i) coeffs.push_back(f.coeff(i).get_str());
    return json{{"prime", f.prime()},
                {"level", f.level()},
                {"coeff_precision", f.precision()},
                {"order", f.order()},
                {"coefficients", coeffs}};
}

inline TowerSeries tower_from_json(const json& j) {
    unsigned p = j.at("prime").get<unsigned>();
    unsigned level = j.at("level").get<unsigned>();
    unsigned prec = j.at("coeff_precision").get<unsigned>();
    unsigned order = j.at("order").get<unsigned>();
    const json& coeffs = j.at("coefficients");
    if (!coeffs.is_array() || coeffs.size() != order)
        throw std::invalid_argument("tower_from_json: order does not match coefficient count");
    if (!is_prime(p)) throw std::invalid_argument("tower_from_json: prime field is not prime");
    TowerSeries f(p, level, prec, order);
    Int mod = int_pow(p, prec);
    for (unsigned i = 0; i < order; ++i) {
        Int v(coeffs[i].get<std::string>());
        if (v < 0 || v >= mod)
            throw std::invalid_argument("tower_from_json: coefficient out of range [0, p^N)");
        f.set_coeff(i, v);
    }
    return f;
}

// ---- BivarSeries: nested arrays of "num/den" strings ----

inline std::string rat_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos || pos == 0 || pos + 1 == s.size())
        throw std::invalid_argument("rat_from_string: expected \"num/den\"");
    Int num(s.substr(0, pos));
    Int den(s.substr(pos + 1));
    if (den < 1) throw std::invalid_argument("rat_from_string: denominator must be positive");
    if (gcd(num, den) != 1)
        throw std::invalid_argument("rat_from_string: not in canonical form");
    return Rat(num, den);
}

inline json to_json(const BivarSeries& f) {
    json cols = json::array();
    for (unsigned j = 0; j < f.order_x(); ++j) {
        json col = json::array();
        for (unsigned i = 0; i < f.order_q(); ++i) col.push_back(rat_string(f.coeff(i, j)));
        cols.push_back(col);
    }
    return json{{"order_q", f.order_q()}, {"order_x", f.order_x()}, {"coefficients", cols}};
}

inline BivarSeries bivar_from_json(const json& j) {
    unsigned mq = j.at("order_q").get<unsigned>();
    unsigned mx = j.at("order_x").get<unsigned>();
    const json& cols = j.at("coefficients");
    if (!cols.is_array() || cols.size() != mx)
        throw std::invalid_argument("bivar_from_json: order_x does not match column count");
    BivarSeries f(mq, mx);
    for (unsigned jx = 0; jx < mx; ++jx) {
        const json& col = cols[jx];
        if (!col.is_array() || col.size() != mq)
            throw std::invalid_argument("bivar_from_json: order_q does not match row count");
        for (unsigned i = 0; i < mq; ++i)
            f.set_coeff(i, jx, rat_from_string(col[i].get<std::string>()));
    }
    return f;
}

// ---- certificates, discriminated by "kind" ----

inline json to_json(const DivisibilityCertificate& c) {
    return detail::with_digest(json{{"kind", "divisibility"},
                {"dividend", to_json(c.dividend)},
                {"divisor", to_json(c.divisor)},
                {"quotient", to_json(c.quotient)},
                {"precision", c.precision},
                {"order", c.order}});
}

inline DivisibilityCertificate divisibility_from_json(const json& j) {
    return DivisibilityCertificate{tower_from_json(j.at("dividend")),
                                   tower_from_json(j.at("divisor")),
                                   tower_from_json(j.at("quotient")),
                                   j.at("precision").get<unsigned>(),
                                   j.at("order").get<unsigned>()};
}

inline json to_json(const NygaardCertificate& c) {
    return detail::with_digest(json{{"kind", "nygaard"},
                {"element", to_json(c.element)},
                {"level", c.level},
                {"quotient", to_json(c.quotient)},
                {"precision", c.precision},
                {"order", c.order},
                {"exhausted", c.exhausted}});
}

inline NygaardCertificate nygaard_from_json(const json& j) {
    return NygaardCertificate{tower_from_json(j.at("element")),
                              j.at("level").get<unsigned>(),
                              tower_from_json(j.at("quotient")),
                              j.at("precision").get<unsigned>(),
                              j.at("order").get<unsigned>(),
                              j.value("exhausted", false)};
}

inline json to_json(const FactorizationCertificate& c) {
    return detail::with_digest(json{{"kind", "factorization"},
                {"prime", c.prime},
                {"n", c.n},
                {"exponents", c.exponents},
                {"unit", to_json(c.unit)},
                {"precision", c.precision},
                {"order", c.order}});
}

inline FactorizationCertificate factorization_from_json(const json& j) {
    return FactorizationCertificate{j.at("prime").get<unsigned>(),
                                    j.at("n").get<unsigned long>(),
                                    j.at("exponents").get<std::vector<unsigned long>>(),
                                    tower_from_json(j.at("unit")),
                                    j.at("precision").get<unsigned>(),
                                    j.at("order").get<unsigned>()};
}

inline json to_json(const QLogReport& r) {
    return json{{"input", r.input},
                {"terms_used", r.terms_used},
                {"factorial_valuation_at_cutoff", r.factorial_valuation_at_cutoff},
                {"series_valuation_at_cutoff", r.series_valuation_at_cutoff},
                {"precision", r.precision},
                {"order", r.order},
                {"nygaard_level1", r.nygaard_level1},
                {"congruent_x_minus_1_mod_n2", r.congruent_x_minus_1_mod_n2}};
}

struct RecheckResult {
    bool ok = false;
    std::string detail;
};

/// Standalone re-verifier: rebuilds a certificate from its JSON form and
/// re-checks it by multiplication. Any parse error, range violation, or
/// failed verification reports failure.
inline RecheckResult recheck_certificate(const json& j) {
    try {
        if (!detail::digest_ok(j)) return {false, "certificate rejected: payload digest mismatch"};
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "divisibility") {
            DivisibilityCertificate c = divisibility_from_json(j);
            bool ok = c.verify();
            return {ok, ok ? "divisibility certificate verified"
                           : "divisor*quotient != dividend at stated precision"};
        }
        if (kind == "nygaard") {
            NygaardCertificate c = nygaard_from_json(j);
            bool ok = c.verify();
            return {ok, ok ? "nygaard certificate verified"
                           : "phi(element) != xi^level * quotient at stated precision"};
        }
        if (kind == "factorization") {
            FactorizationCertificate c = factorization_from_json(j);
            bool ok = c.verify();
            return {ok, ok ? "factorization certificate verified"
                           : "unit * product of distinguished factors != [n]_q! at stated precision"};
        }
        return {false, "unknown certificate kind: " + kind};
    } catch (const std::exception& e) {
        return {false, std::string("certificate rejected: ") + e.what()};
    }
}

}  // namespace qprism
