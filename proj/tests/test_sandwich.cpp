#include "g2/sandwich.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace g2;
using g2::testing::random_rational;

namespace {

// Random Legendre modulus together with a rational point on its curve.
std::pair<Rational, LegendrePoint<Rational>> random_modulus_with_point(std::mt19937_64& rng)
{
    for (;;) {
        Rational x = random_rational(rng, 9), y = random_rational(rng, 9);
        if (x == 0 || x == 1 || y == 0)
            continue;
        Rational L = legendre_modulus_through(x, y);
        if (L == 0 || L == 1)
            continue;
        return {L, {x, y, Rational(1)}};
    }
}

Rational affine_x(const LegendrePoint<Rational>& P) { return P.x / P.z; }
Rational affine_y(const LegendrePoint<Rational>& P) { return P.y / P.z; }

}  // namespace

TEST(Legendre, DuplicationMatchesChordTangent)
{
    std::mt19937_64 rng(1);
    for (int it = 0; it < 10; ++it) {
        auto [L, P] = random_modulus_with_point(rng);
        ASSERT_TRUE(on_legendre(L, P));
        auto D = mult2_legendre(L, P);
        auto A = legendre_add(L, P, P);
        EXPECT_TRUE(on_legendre(L, D));
        EXPECT_TRUE(legendre_points_equal(D, A));
    }
    // 2-torsion goes to the identity
    Rational L(5);
    EXPECT_TRUE(is_identity(mult2_legendre(L, LegendrePoint<Rational>{Rational(1), Rational(0), Rational(1)})));
}

TEST(Legendre, AdditionIsAssociativeOnSamples)
{
    std::mt19937_64 rng(2);
    auto [L, P] = random_modulus_with_point(rng);
    auto P2 = legendre_add(L, P, P);
    auto P3 = legendre_add(L, P2, P);
    auto lhs = legendre_add(L, legendre_add(L, P, P2), P3);
    auto rhs = legendre_add(L, P, legendre_add(L, P2, P3));
    EXPECT_EQ(affine_x(lhs), affine_x(rhs));
    EXPECT_EQ(affine_y(lhs), affine_y(rhs));
    EXPECT_TRUE(on_legendre(L, lhs));
}

TEST(Quadrics, LegendreChartRoundTrip)
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
        auto [L, P] = random_modulus_with_point(rng);
        for (int sign : {1, -1}) {
            auto X = legendre_to_quadrics(L, P, sign);
            auto [r1, r2] = quadric_residuals(L, X);
            EXPECT_EQ(r1, 0);
            EXPECT_EQ(r2, 0);
            EXPECT_TRUE(legendre_points_equal(quadrics_to_legendre(L, X, sign), P));
        }
    }
}

TEST(Sandwich, PsiHatLandsOnTheQuartic)
{
    std::mt19937_64 rng(4);
    for (int it = 0; it < 5; ++it) {
        auto [L1, P1] = random_modulus_with_point(rng);
        auto [L2, P2] = random_modulus_with_point(rng);
        if (L1 == L2)
            continue;
        SandwichModuli<Rational> M{L1, L2};
        auto p = kummer_projection(P1, P2);
        EXPECT_EQ(M.double_quadric(p), 0);
        for (int sign : {1, -1}) {
            auto Z = psi_hat(M, p, sign);
            EXPECT_EQ(M.k3x(Z), 0);
            // negating one factor swaps the two lifts
            LegendrePoint<Rational> N1{P1.x, -P1.y, P1.z};
            EXPECT_EQ(psi_hat(M, kummer_projection(N1, P2), -sign), Z);
            EXPECT_EQ(M.double_quadric(psi(M, Z, sign)), 0);
        }
    }
}

TEST(Sandwich, CompositionIsDoublingOnRationalSamples)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        Rational L1, L2;
        LegendrePoint<Rational> P1, P2;
        do {
            std::tie(L1, P1) = random_modulus_with_point(rng);
            std::tie(L2, P2) = random_modulus_with_point(rng);
        } while (L1 == L2);
        SandwichModuli<Rational> M{L1, L2};
        int exact = 0;
        for (const auto& [a, b] : sandwich_exact_samples(L1, P1, L2, P2, 4))
            for (int sign : {1, -1}) {
                try {
                    EXPECT_TRUE(sandwich_sample_exact(M, a, b, sign));
                    ++exact;
                } catch (const std::domain_error&) {
                }
            }
        EXPECT_GE(exact, 10) << "L1=" << to_string(L1) << " L2=" << to_string(L2);
    }
}

TEST(Sandwich, CompositionIsDoublingOverC)
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 5; ++trial) {
        auto [L1, P1] = random_modulus_with_point(rng);
        auto [L2, P2] = random_modulus_with_point(rng);
        if (L1 == L2)
            continue;
        Complex c1(Real(L1.get_d()), Real(0)), c2(Real(L2.get_d()), Real(0));
        SandwichModuli<Complex> M{c1, c2};
        Real worst = 0;
        for (int i = 0; i < 100; ++i) {
            auto a = legendre_complex_point(c1, rng), b = legendre_complex_point(c2, rng);
            for (int sign : {1, -1})
                worst = std::max(worst, sandwich_sample_residual(M, a, b, sign));
        }
        EXPECT_LT(worst, Real(1e-9));
    }
}

TEST(Sandwich, ChartsAgreeWhereBothAreDefined)
{
    std::mt19937_64 rng(7);
    auto [L1, P1] = random_modulus_with_point(rng);
    Rational L2;
    LegendrePoint<Rational> P2;
    do {
        std::tie(L2, P2) = random_modulus_with_point(rng);
    } while (L2 == L1);
    SandwichModuli<Rational> M{L1, L2};
    for (const auto& [a, b] : sandwich_exact_samples(L1, P1, L2, P2, 3)) {
        auto Z = psi_hat(M, kummer_projection(a, b), 1);
        if (M.chart_Q(Z) == 0 || M.chart_R(Z) == 0)
            continue;
        PsiChart used;
        auto q = psi(M, Z, 1, &used);
        EXPECT_EQ(used, PsiChart::Q);
        EXPECT_TRUE(product_points_equal(q, psi_chart_R(M, Z, 1)));
    }
}

TEST(Sandwich, DoubleQuadricDoublingStaysOnTheSurface)
{
    std::mt19937_64 rng(8);
    auto [L1, P1] = random_modulus_with_point(rng);
    auto [L2, P2] = random_modulus_with_point(rng);
    SandwichModuli<Rational> M{L1, L2};
    auto p = kummer_projection(P1, P2);
    auto d = kummer_double(M, p);
    EXPECT_EQ(M.double_quadric(d), 0);
    EXPECT_TRUE(product_points_equal(d, kummer_projection(mult2_legendre(L1, P1), mult2_legendre(L2, P2))));
}

TEST(Sandwich, RejectsDegenerateModuli)
{
    SandwichModuli<Rational> M{Rational(3), Rational(3)};
    EXPECT_THROW(M.validate(), std::invalid_argument);
    EXPECT_THROW(legendre_modulus_through(Rational(1), Rational(2)), std::invalid_argument);
}

TEST(Bridge, BakerRoundTripIsAScalar)
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 20; ++it) {
        Rational l2 = random_rational(rng), l3 = random_rational(rng);
        Point4<Rational> Z{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
        Rational scalar = -2 * l2 * l3 * (1 - l2) * (1 - l3);
        auto back = baker_to_k3x(k3x_to_baker(Z, l2, l3), l2, l3);
        for (int i = 0; i < 4; ++i)
            EXPECT_EQ(back[i], scalar * Z[i]);
        auto B = k3x_to_baker(baker_to_k3x(Z, l2, l3), l2, l3);
        for (int i = 0; i < 4; ++i)
            EXPECT_EQ(B[i], scalar * Z[i]);
    }
}

TEST(Bridge, RescaledQuarticIsAHudsonQuartic)
{
    // K^2 + K'^2 = 1 from Pythagorean triples keeps everything rational.
    Rational K1(3, 5), K1p(4, 5), K2(5, 13), K2p(12, 13);
    SandwichModuli<Rational> M{K1 * K1, K2 * K2};
    auto H = k3x_hudson_moduli(K1, K2, K1p, K2p);
    EXPECT_EQ(H.D, 0);
    std::mt19937_64 rng(10);
    for (int it = 0; it < 10; ++it) {
        Point4<Rational> P{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
        EXPECT_EQ(k3x_rescaled(M, K1, K2, K1p, K2p, P), H.eval(P));
    }
}
