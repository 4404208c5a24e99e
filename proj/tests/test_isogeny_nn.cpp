#include "g2/isogeny_nn.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace g2;

namespace {

CVec2 add(const CVec2& a, const CVec2& b) { return {a[0] + b[0], a[1] + b[1]}; }

// Distinct subgroups of order p^2 in (Z/p)^4 spanned by pairs of vectors that make_kernel accepts.
std::set<std::set<std::array<long, 4>>> accepted_subgroups(long p, long& rejected_non_isotropic)
{
    std::vector<TorsionGen> all;
    for (long a0 = 0; a0 < p; ++a0)
        for (long a1 = 0; a1 < p; ++a1)
            for (long b0 = 0; b0 < p; ++b0)
                for (long b1 = 0; b1 < p; ++b1)
                    all.push_back({{a0, a1}, {b0, b1}});
    std::set<std::set<std::array<long, 4>>> out;
    rejected_non_isotropic = 0;
    for (size_t i = 1; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            TorsionKernel raw{p, {all[i], all[j]}};
            if (raw.order() != p * p)
                continue;
            try {
                auto G = make_kernel(p, all[i], all[j]);
                std::set<std::array<long, 4>> s;
                for (const auto& g : G.elements())
                    s.insert({g.a[0], g.a[1], g.b[0], g.b[1]});
                out.insert(s);
            } catch (const std::domain_error&) {
                ++rejected_non_isotropic;
            }
        }
    return out;
}

}  // namespace

TEST(FourSquares, SmallestDecompositions)
{
    EXPECT_EQ(four_square(1).a, (std::array<long, 4>{1, 0, 0, 0}));
    EXPECT_EQ(four_square(2).a, (std::array<long, 4>{1, 1, 0, 0}));
    EXPECT_EQ(four_square(3).a, (std::array<long, 4>{1, 1, 1, 0}));
    EXPECT_EQ(four_square(7).a, (std::array<long, 4>{2, 1, 1, 1}));
    EXPECT_THROW(four_square(0), std::invalid_argument);
    for (long n = 1; n < 60; ++n) {
        auto d = four_square(n);
        EXPECT_EQ(d.a[0] * d.a[0] + d.a[1] * d.a[1] + d.a[2] * d.a[2] + d.a[3] * d.a[3], n);
        auto F = quaternion_matrix(d);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                long dot = 0;
                for (int k = 0; k < 4; ++k)
                    dot += F[k][i] * F[k][j];
                EXPECT_EQ(dot, i == j ? n : 0);
            }
    }
}

TEST(Kernels, MaximalIsotropicSubgroupCount)
{
    // (p^2 + 1)(p + 1) Lagrangian subgroups in (Z/p)^4
    for (long p : {2L, 3L}) {
        long rejected = 0;
        auto groups = accepted_subgroups(p, rejected);
        EXPECT_EQ(static_cast<long>(groups.size()), (p * p + 1) * (p + 1)) << p;
        EXPECT_GT(rejected, 0);
    }
}

TEST(Kernels, TypesAndValidation)
{
    EXPECT_EQ(btype_kernel(3).type(), KernelType::BType);
    EXPECT_EQ(atype_kernel(3).type(), KernelType::AType);
    auto mixed = make_kernel(3, {{1, 0}, {0, 0}}, {{0, 0}, {0, 1}});
    EXPECT_EQ(mixed.type(), KernelType::General);
    EXPECT_THROW(make_kernel(3, {{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}), std::domain_error);  // pairing nontrivial
    EXPECT_THROW(make_kernel(3, {{1, 0}, {0, 0}}, {{2, 0}, {0, 0}}), std::domain_error);  // dependent
    EXPECT_THROW(make_kernel(0, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}), std::invalid_argument);
    std::mt19937_64 rng(1);
    SiegelPoint tau = random_siegel(rng);
    EXPECT_THROW(lr_null_points(tau, mixed, four_square(3)), std::domain_error);
    EXPECT_THROW(lr_null_points(tau, btype_kernel(3), four_square(5)), std::invalid_argument);
}

TEST(LubiczRobert, DegreeOneIsTheIdentity)
{
    std::mt19937_64 rng(2);
    SiegelPoint tau = random_siegel(rng);
    auto U = lr_null_points(tau, btype_kernel(1), four_square(1));
    auto D = dual_nulls(tau);
    std::array<Complex, 4> d{D.at(1), D.at(2), D.at(3), D.at(4)};
    EXPECT_LT(projective_distance(U.coords, d), Real(1e-20));
}

TEST(LubiczRobert, DegreeTwoMatchesDualNullsAndRichelot)
{
    std::mt19937_64 rng(3);
    for (int it = 0; it < 3; ++it) {
        SiegelPoint tau = random_siegel(rng);
        auto U = lr_null_points(tau, btype_kernel(2), four_square(2));
        auto D = dual_nulls(tau.scaled(Real(2)));
        std::array<Complex, 4> d{D.at(1), D.at(2), D.at(3), D.at(4)};
        EXPECT_LT(projective_distance(U.coords, d), Real(1e-6));
        auto [dist, rel] = lr_richelot_gate(tau);
        EXPECT_LT(dist, Real(1e-6));
        EXPECT_LT(rel, Real(1e-6));
    }
}

TEST(LubiczRobert, DegreeThreeKernelInvarianceAndOracle)
{
    std::mt19937_64 rng(4);
    SiegelPoint tau = random_siegel(rng);
    for (const auto& G : {btype_kernel(3), atype_kernel(3)}) {
        auto d = four_square(3);
        CVec2 z = random_cvec2(rng, 0.2);
        auto base = lr_evaluate(tau, G, d, z);
        EXPECT_LT(projective_distance(base.coords, lr_direct_oracle(tau, G, z)), Real(1e-5));
        for (const auto& g : G.gens) {
            auto shifted = lr_evaluate(tau, G, d, add(z, torsion_point(tau, g, 3)));
            EXPECT_LT(projective_distance(shifted.coords, base.coords), Real(1e-6));
        }
        auto U = lr_null_points(tau, G, d);
        EXPECT_LT(projective_distance(U.coords, lr_direct_oracle(tau, G, {Complex(0), Complex(0)})), Real(1e-5));
        EXPECT_LT(lr_hudson_residual(U.coords, base.coords), Real(1e-8));
    }
}

TEST(LubiczRobert, NonKernelShiftMovesTheImage)
{
    std::mt19937_64 rng(5);
    SiegelPoint tau = random_siegel(rng);
    auto G = btype_kernel(3);
    CVec2 z = random_cvec2(rng, 0.2);
    auto base = lr_evaluate(tau, G, four_square(3), z);
    auto moved = lr_evaluate(tau, G, four_square(3), add(z, torsion_point(tau, {{1, 0}, {0, 0}}, 3)));
    EXPECT_GT(projective_distance(base.coords, moved.coords), Real(1e-3));
}

TEST(RationalNormalCurve, WeierstrassSpanRank)
{
    std::vector<std::optional<Rational>> roots{Rational(0), Rational(1), Rational(2), Rational(5), Rational(-3),
                                               std::nullopt};
    for (long n = 1; n <= 5; ++n)
        EXPECT_EQ(weierstrass_span(roots, n, Rational(0)), std::min<long>(6, 2 * n + 1)) << n;
    auto v = rho_embed(2, Rational(3), Rational(1));
    EXPECT_EQ(v, (std::vector<Rational>{1, 3, 9, 27, 81}));
}
