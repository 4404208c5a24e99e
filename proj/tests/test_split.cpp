#include "g2/split.hpp"
#include "g2/sspgraph.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace g2;
using g2::testing::random_rational;

namespace {

const std::uint64_t kP = 10007;

Fp fp(std::int64_t v) { return Fp(v, kP); }

std::optional<Fp> fp_sqrt(const Fp& v)
{
    Fp zero = fp(0);
    if (is_zero(v))
        return zero;
    auto r = poly_roots(Poly<Fp>({-v, zero, fp(1)}, zero));
    if (r.empty())
        return std::nullopt;
    return r[0];
}

// Random affine point on y^2 = f(x, 1) with y != 0.
CurveXYZ<Fp> random_point(const BinaryForm<Fp>& f, std::mt19937_64& rng)
{
    for (;;) {
        Fp x = Fp::random(kP, rng);
        auto y = fp_sqrt(f.eval(x, fp(1)));
        if (y && !is_zero(*y) && !is_zero(x))
            return {x, *y, fp(1)};
    }
}

// Special curve over F_p with all square roots available.
SpecialRosenhain<Fp> random_special(std::mt19937_64& rng)
{
    for (;;) {
        Fp k2 = Fp::random(kP, rng), k3 = Fp::random(kP, rng);
        try {
            auto S = SpecialRosenhain<Fp>::from_k(k2, k3);
            auto r = fp_sqrt((fp(1) - S.l2) * (fp(1) - S.l3));
            if (!r || is_zero(*r))
                continue;
            S.r = *r;
            S.validate();
            return S;
        } catch (const std::invalid_argument&) {
        }
    }
}

}  // namespace

TEST(Special, ModuliSatisfyTheirRelations)
{
    std::mt19937_64 rng(1);
    for (int it = 0; it < 10; ++it) {
        Rational k2 = random_rational(rng), k3 = random_rational(rng);
        if (k2 * k2 == 1 || k3 * k3 == 1)
            continue;
        auto [L1, L2] = special_moduli(k2, k3);
        auto [a, b] = special_moduli_relations<Rational>(k2 * k2, k3 * k3, L1, L2);
        EXPECT_EQ(a, 0);
        EXPECT_EQ(b, 0);
    }
}

TEST(Special, GluedCurveHasTheSpecialIgusaPoint)
{
    std::mt19937_64 rng(2);
    int checked = 0;
    while (checked < 8) {
        Rational k2 = random_rational(rng), k3 = random_rational(rng);
        SpecialRosenhain<Rational> S;
        std::pair<Rational, Rational> L;
        try {
            S = SpecialRosenhain<Rational>::from_k(k2, k3);
            L = special_moduli(k2, k3);
            auto g = glue(L.first, L.second);
            EXPECT_TRUE(igusa_equal(igusa_invariants(g), igusa_invariants(S.sextic())));
            EXPECT_TRUE(split_detect(g).split);
            EXPECT_TRUE(split_detect(S.sextic()).split);
            ++checked;
        } catch (const std::exception&) {
        }
    }
}

TEST(Special, QuotientMapsLandOnTheirTargets)
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 5; ++it) {
        auto S = random_special(rng);
        auto f = S.sextic();
        for (int l = 1; l <= 2; ++l) {
            EllipticCurve<Fp> E = legendre_curve(special_psi_target(S, l));
            for (int k = 0; k < 5; ++k) {
                auto P = random_point(f, rng);
                ASSERT_TRUE(on_curve(f, P));
                auto img = special_psi(S, l, P);
                EXPECT_TRUE(E.contains(img)) << "l=" << l;
                // psi_l factors through the involution j_l
                EXPECT_TRUE(projective3_equal(special_psi(S, l, special_involution(S, l, P)), img));
            }
        }
    }
}

TEST(Special, InvolutionPermutesWeierstrassPointsLikeTheKernel)
{
    auto S = SpecialRosenhain<Rational>::from_k(Rational(2), Rational(3));
    for (int l = 1; l <= 2; ++l) {
        auto perm = involution_on_weierstrass(S, l);
        std::array<int, 6> expect{4, 2, 1, 5, 0, 3};  // x -> l2 l3 / x
        EXPECT_EQ(perm, expect);
    }
    auto K = special_kernel_group();
    EXPECT_EQ(K.str(), "{P0,P15,P23,P46}");
}

TEST(Special, InvolutionIsAnInvolution)
{
    std::mt19937_64 rng(4);
    auto S = random_special(rng);
    auto f = S.sextic();
    for (int l = 1; l <= 2; ++l)
        for (int k = 0; k < 5; ++k) {
            auto P = random_point(f, rng);
            auto Q = special_involution(S, l, P);
            EXPECT_TRUE(on_curve(f, Q));
            EXPECT_TRUE(weighted_curve_points_equal(special_involution(S, l, Q), P));
        }
}

TEST(Special, ValidationRejectsBadData)
{
    EXPECT_THROW((SpecialRosenhain<Rational>::from_k(Rational(1), Rational(3))), std::invalid_argument);
    EXPECT_THROW((SpecialRosenhain<Rational>::from_k(Rational(2), Rational(2))), std::invalid_argument);
    SpecialRosenhain<Rational> S{Rational(4), Rational(9), Rational(5), std::nullopt, std::nullopt, std::nullopt};
    EXPECT_THROW(S.validate(), std::invalid_argument);
}

TEST(Bolza, QuotientMapsLandOnTheEllipticCurves)
{
    std::mt19937_64 rng(5);
    BolzaCurve<Fp> c{fp(3), fp(17)};
    auto f = c.sextic();
    auto Q = bolza_quotients(c);
    for (int k = 0; k < 10; ++k) {
        auto P = random_point(f, rng);
        EXPECT_TRUE(Q.E1.contains(bolza_psi1(P)));
        EXPECT_TRUE(Q.E2.contains(bolza_psi2(P)));
    }
    auto j = bolza_j_pair(Rational(3), Rational(17));
    BolzaCurve<Rational> cq{Rational(3), Rational(17)};
    auto Qq = bolza_quotients(cq);
    EXPECT_EQ(Qq.E1.j(), j.first);
    EXPECT_EQ(Qq.E2.j(), j.second);
    EXPECT_THROW((BolzaCurve<Rational>{Rational(3), Rational(3)}.require_smooth()), std::invalid_argument);
}

TEST(Gluing, LegendreCurveJ)
{
    for (int n : {-7, -2, 3, 5, 11}) {
        Rational L(n, 4);
        L.canonicalize();
        EXPECT_EQ(legendre_curve(L).j(), legendre_j(L));
    }
}

TEST(Gluing, OrbitOfTwoThree)
{
    auto orb = anharmonic_orbit(Rational(2), Rational(3));
    std::array<std::pair<Rational, Rational>, 6> expect{{{Rational(2), Rational(3)},
                                                         {Rational(-1), Rational(-1, 2)},
                                                         {Rational(1, 2), Rational(2, 3)},
                                                         {Rational(1, 2), Rational(1, 3)},
                                                         {Rational(2), Rational(3, 2)},
                                                         {Rational(-1), Rational(-2)}}};
    EXPECT_EQ(orb, expect);
    auto I = igusa_invariants(glue(Rational(2), Rational(3)));
    for (const auto& [a, b] : orb)
        EXPECT_TRUE(igusa_equal(igusa_invariants(glue(a, b)), I)) << to_string(a) << "," << to_string(b);
    EXPECT_TRUE(split_detect(glue(Rational(2), Rational(3))).split);
}

TEST(Gluing, RejectsDegenerateData)
{
    EXPECT_THROW(glue(Rational(2), Rational(2)), std::invalid_argument);
    EXPECT_THROW(glue(Rational(0), Rational(2)), std::invalid_argument);
    EXPECT_THROW(anharmonic_orbit(Rational(1), Rational(2)), std::invalid_argument);
}

TEST(Detect, RosenhainReportCarriesPringsheimFactors)
{
    auto rep = split_detect_rosenhain(Rational(6), Rational(2), Rational(3));
    EXPECT_TRUE(rep.split);
    ASSERT_TRUE(rep.pringsheim.has_value());
    EXPECT_TRUE(rep.pringsheim->on_humbert4());
    auto gen = split_detect_rosenhain(Rational(4), Rational(2), Rational(9));
    EXPECT_FALSE(gen.split);
    EXPECT_NE(gen.q, 0);
}
