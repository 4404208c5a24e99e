#pragma once

#include "g2/kummer.hpp"
#include "g2/sspgraph.hpp"

#include <random>
#include <vector>

namespace g2::testing {

// Points of a quartic surface over F_p: fix (w, x, y) at random and solve for z.
template <class Model>
std::vector<Point4<Fp>> surface_points(const Model& m, std::uint64_t p, std::mt19937_64& rng, size_t count)
{
    std::vector<Point4<Fp>> out;
    Fp zero(0, p), one(1, p);
    while (out.size() < count) {
        Fp w = Fp::random(p, rng), x = Fp::random(p, rng), y = Fp::random(p, rng);
        // interpolate the quartic in z through five values
        std::vector<Fp> xs, ys;
        for (int t = 0; t < 5; ++t) {
            xs.push_back(Fp(t, p));
            ys.push_back(m.eval(Point4<Fp>{w, x, y, xs.back()}));
        }
        Poly<Fp> f(zero);
        for (int i = 0; i < 5; ++i) {
            Poly<Fp> basis({one}, zero);
            Fp den = one;
            for (int j = 0; j < 5; ++j) {
                if (i == j)
                    continue;
                basis = basis * Poly<Fp>({-xs[j], one}, zero);
                den = den * (xs[i] - xs[j]);
            }
            f = f + basis.scale(ys[i] / den);
        }
        if (f.is_zero_poly())
            continue;
        for (const Fp& z : poly_roots(f))
            if (out.size() < count)
                out.push_back({w, x, y, z});
    }
    return out;
}

// Affine points of the Rosenhain curve over F_p.
inline std::vector<CurvePoint<Fp>> curve_points(const std::array<Fp, 3>& l, std::mt19937_64& rng, size_t count)
{
    const std::uint64_t p = l[0].modulus();
    std::vector<CurvePoint<Fp>> out;
    auto f = rosenhain_sextic(l[0], l[1], l[2]);
    Fp zero(0, p), one(1, p);
    while (out.size() < count) {
        Fp x = Fp::random(p, rng);
        Fp v = f.eval(x, one);
        if (is_zero(v))
            continue;
        auto r = poly_roots(Poly<Fp>({-v, zero, one}, zero));
        if (!r.empty())
            out.push_back({x, r[0], one});
    }
    return out;
}

}  // namespace g2::testing
