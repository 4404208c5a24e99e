#pragma once

#include "g2/algebra.hpp"

#include <array>
#include <random>

namespace g2::testing {

// Random rational num/den with |num| <= h, 1 <= den <= h.
inline Rational random_rational(std::mt19937_64& rng, int h = 20)
{
    std::uniform_int_distribution<int> num(-h, h), den(1, h);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Pairwise distinct rationals avoiding 0 and 1.
inline std::array<Rational, 3> random_rosenhain(std::mt19937_64& rng, int h = 20)
{
    for (;;) {
        std::array<Rational, 3> l{random_rational(rng, h), random_rational(rng, h), random_rational(rng, h)};
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            if (l[i] == 0 || l[i] == 1)
                ok = false;
            for (int j = i + 1; j < 3; ++j)
                if (l[i] == l[j])
                    ok = false;
        }
        if (ok)
            return l;
    }
}

inline Real rel_err(const Complex& a, const Complex& b)
{
    Real s = std::max(abs(a), abs(b));
    return s == 0 ? Real(0) : Real(abs(a - b) / s);
}

}  // namespace g2::testing
