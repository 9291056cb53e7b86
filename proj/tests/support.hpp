#pragma once

#include <random>
#include <vector>

#include "iterroot/field.hpp"
#include "iterroot/poly.hpp"

namespace testsupport {

using iterroot::Eisenstein;
using iterroot::Rational;

// Deterministic rational sampler shared by the randomized suites.
class Sampler {
public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    Rational rational(long max_num = 999, long max_den = 999) {
        std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
        return iterroot::make_rational(num(rng_), den(rng_));
    }

    Rational nonzero_rational(long max_num = 999, long max_den = 999) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    Eisenstein field(long max_num = 99, long max_den = 9) {
        return Eisenstein{rational(max_num, max_den), rational(max_num, max_den)};
    }

    Eisenstein nonzero_field(long max_num = 99, long max_den = 9) {
        for (;;) {
            Eisenstein x = field(max_num, max_den);
            if (!x.is_zero()) return x;
        }
    }

    // Monic polynomial of the given degree with rational coefficients.
    iterroot::Polynomial<Eisenstein> monic(std::size_t degree, long max_num = 9,
                                           long max_den = 4) {
        std::vector<Eisenstein> c(degree + 1);
        for (std::size_t i = 0; i < degree; ++i)
            c[i] = Eisenstein{rational(max_num, max_den), Rational(0)};
        c[degree] = Eisenstein(1);
        return iterroot::Polynomial<Eisenstein>(std::move(c));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
