#pragma once

#include <qprism/qprism.hpp>

#include <random>

namespace qprism::testutil {

inline Int random_int_bits(std::mt19937_64& rng, unsigned bits) {
    Int v = 0;
    std::uniform_int_distribution<unsigned long> d;
    for (unsigned i = 0; i < bits / 16 + 1; ++i) v = v * (1UL << 16) + (d(rng) & 0xffff);
    return v;
}

inline PadicNum random_padic(std::mt19937_64& rng, unsigned p, unsigned prec) {
    return PadicNum(p, prec, random_int_bits(rng, prec * 4 + 16));
}

inline TowerSeries random_tower(std::mt19937_64& rng, unsigned p, unsigned prec, unsigned order,
                                unsigned level = 0) {
    TowerSeries f(p, level, prec, order);
    for (unsigned i = 0; i < order; ++i) f.set_coeff(i, random_int_bits(rng, prec * 4 + 16));
    return f;
}

inline RatSeries random_ratseries(std::mt19937_64& rng, unsigned order, long bound = 9) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    RatSeries f(order);
    for (unsigned i = 0; i < order; ++i) {
        Rat v(num(rng), den(rng));
        v.canonicalize();
        f.set_coeff(i, v);
    }
    return f;
}

inline BivarSeries random_bivar(std::mt19937_64& rng, unsigned mq, unsigned mx, unsigned terms = 6,
                                long bound = 9) {
    std::uniform_int_distribution<unsigned> di(0, mq - 1), dj(0, mx - 1);
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    BivarSeries f(mq, mx);
    for (unsigned t = 0; t < terms; ++t) {
        Rat v(num(rng), den(rng));
        v.canonicalize();
        f.set_coeff(di(rng), dj(rng), v);
    }
    return f;
}

}  // namespace qprism::testutil
