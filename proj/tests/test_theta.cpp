#include "g2/theta.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <set>

using namespace g2;
using g2::testing::rel_err;

namespace {

using cd = std::complex<double>;

Real real_of(const Rational& q) { return Real(q.get_d()); }

cd to_cd(const Complex& x) { return {to_double(x.re), to_double(x.im)}; }

// Plain double-precision box sum over |n_i| <= 12, independent of the library's truncation logic.
cd brute_theta(const ThetaChar& c, const CVec2& z, const SiegelPoint& tau)
{
    const double pi = 3.14159265358979323846;
    double a1 = c.a[0].get_d(), a2 = c.a[1].get_d(), b1 = c.b[0].get_d(), b2 = c.b[1].get_d();
    cd t11 = to_cd(tau.t11), t12 = to_cd(tau.t12), t22 = to_cd(tau.t22), z1 = to_cd(z[0]), z2 = to_cd(z[1]);
    cd sum = 0;
    for (int n1 = -12; n1 <= 12; ++n1)
        for (int n2 = -12; n2 <= 12; ++n2) {
            double m1 = n1 + a1, m2 = n2 + a2;
            cd e = t11 * m1 * m1 + 2.0 * t12 * m1 * m2 + t22 * m2 * m2 + 2.0 * (m1 * (z1 + b1) + m2 * (z2 + b2));
            sum += std::exp(cd(0, pi) * e);
        }
    return sum;
}

double cd_rel(const Complex& a, cd b)
{
    cd x = to_cd(a);
    return std::abs(x - b) / std::max(1.0, std::abs(b));
}

Real max_of(const auto& arr)
{
    Real m = 0;
    for (const auto& x : arr)
        m = std::max(m, Real(x));
    return m;
}

}  // namespace

TEST(ThetaTable, ParityAndDistinctness)
{
    std::set<std::string> seen;
    for (int i = 0; i < 16; ++i) {
        const auto& c = theta_table()[i];
        EXPECT_EQ(c.parity(), i < 10 ? 0 : 1) << c.str();
        // parity computed directly: 4 a.b mod 2
        Rational dot = 4 * (c.a[0] * c.b[0] + c.a[1] * c.b[1]);
        EXPECT_EQ(mpz_class(dot.get_num()) % 2 == 0, i < 10);
        seen.insert(c.str());
    }
    EXPECT_EQ(seen.size(), 16u);
    for (const auto& d : dual_table()) {
        EXPECT_EQ(d.b[0], 0);
        EXPECT_EQ(d.b[1], 0);
    }
}

TEST(ThetaValue, MatchesBruteForceSum)
{
    std::mt19937_64 rng(17);
    for (int it = 0; it < 5; ++it) {
        SiegelPoint tau = random_siegel(rng);
        CVec2 z = random_cvec2(rng, 0.3);
        for (const auto& c : theta_table())
            EXPECT_LT(cd_rel(theta_value(c, z, tau), brute_theta(c, z, tau)), 1e-12) << c.str();
    }
}

TEST(ThetaValue, OddNullsVanishAndParityUnderNegation)
{
    std::mt19937_64 rng(3);
    SiegelPoint tau = random_siegel(rng);
    CVec2 z = random_cvec2(rng), mz{-z[0], -z[1]}, z0{Complex(0), Complex(0)};
    Real scale = abs(theta_value(theta_table()[0], z0, tau));
    for (int i = 0; i < 16; ++i) {
        const auto& c = theta_table()[i];
        Complex a = theta_value(c, z, tau), b = theta_value(c, mz, tau);
        Complex expect = i < 10 ? b : -b;
        EXPECT_LT(rel_err(a, expect), Real(1e-20)) << i + 1;
        if (i >= 10) {
            EXPECT_LT(abs(theta_value(c, z0, tau)) / scale, Real(1e-20)) << i + 1;
        }
    }
}

TEST(ThetaValue, QuasiPeriodicity)
{
    // theta[a;b](z + e_j) = e(a_j) theta[a;b](z) and theta[a;b](z + tau e_1) = e(-b_1 - z_1 - tau_11/2) theta[a;b](z)
    std::mt19937_64 rng(5);
    SiegelPoint tau = random_siegel(rng);
    CVec2 z = random_cvec2(rng, 0.2);
    for (const auto& c : theta_table()) {
        Complex base = theta_value(c, z, tau);
        CVec2 z1{z[0] + Complex(1), z[1]};
        EXPECT_LT(rel_err(theta_value(c, z1, tau), e2pi(real_of(c.a[0])) * base), Real(1e-20));
        CVec2 zt{z[0] + tau.t11, z[1] + tau.t12};
        Complex arg = Complex(real_of(c.b[0])) + z[0] + tau.t11 / Complex(2);
        Complex factor = cexp(Complex(2 * pi_real() * arg.im, -2 * pi_real() * arg.re));
        EXPECT_LT(rel_err(theta_value(c, zt, tau), factor * base), Real(1e-18)) << c.str();
    }
}

TEST(ThetaValue, TermCountGrowsAsTolShrinks)
{
    std::mt19937_64 rng(1);
    SiegelPoint tau = random_siegel(rng);
    CVec2 z0{Complex(0), Complex(0)};
    EXPECT_LE(theta_term_count(z0, tau, 1e-6), theta_term_count(z0, tau, 1e-12));
    EXPECT_LE(theta_term_count(z0, tau, 1e-12), theta_term_count(z0, tau, 1e-30));
}

TEST(Siegel, RandomPeriodsHaveRequestedSpectrum)
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 50; ++it) {
        SiegelPoint t = random_siegel(rng);
        Real lo = t.min_imag_eigenvalue();
        EXPECT_GE(lo, Real(0.8) - Real(1e-20));
        // trace - min = max eigenvalue
        Real hi = t.t11.im + t.t22.im - lo;
        EXPECT_LE(hi, Real(2.0) + Real(1e-20));
        for (const Complex* e : {&t.t11, &t.t12, &t.t22})
            EXPECT_LE(abs(Complex(e->re)), Real(0.5));
    }
}

TEST(Siegel, NegInverseIsAnInverse)
{
    std::mt19937_64 rng(10);
    SiegelPoint t = random_siegel(rng), m = t.neg_inverse();
    // (-tau^{-1}) tau = -I
    EXPECT_LT(abs(m.t11 * t.t11 + m.t12 * t.t12 + Complex(1)), Real(1e-30));
    EXPECT_LT(abs(m.t11 * t.t12 + m.t12 * t.t22), Real(1e-30));
    EXPECT_LT(abs(m.t12 * t.t12 + m.t22 * t.t22 + Complex(1)), Real(1e-30));
    EXPECT_GT(m.min_imag_eigenvalue(), Real(0));
}

TEST(ThetaIdentities, PicardAndThomaeResiduals)
{
    std::mt19937_64 rng(23);
    for (int it = 0; it < 20; ++it) {
        ThetaNulls n = even_nulls(random_siegel(rng));
        EXPECT_LT(max_of(picard_residuals(n)), Real(1e-8));
        EXPECT_LT(max_of(thomae_residuals(n)), Real(1e-8));
    }
}

TEST(ThetaIdentities, FrobeniusDoublingRiemann)
{
    std::mt19937_64 rng(29);
    for (int it = 0; it < 5; ++it) {
        SiegelPoint tau = random_siegel(rng);
        ThetaNulls n = even_nulls(tau);
        DualThetaNulls d = dual_nulls(tau);
        EXPECT_LT(frobenius_check(n), Real(1e-10));
        EXPECT_LT(doubling_check(n, d), Real(1e-10));
        EXPECT_LT(doubling_z_check(tau, random_cvec2(rng)), Real(1e-10));
        EXPECT_LT(riemann_check(tau, random_cvec2(rng), random_cvec2(rng)), Real(1e-10));
        EXPECT_LT(satake_maps(n, d).residual, Real(1e-10));
    }
}

TEST(ThetaIdentities, TransposedNullsStartWithDualNulls)
{
    std::mt19937_64 rng(31);
    SiegelPoint tau = random_siegel(rng);
    ThetaNulls t = transposed_nulls(tau.scaled(Real(2)));
    DualThetaNulls d = dual_nulls(tau);
    for (int i = 1; i <= 4; ++i)
        EXPECT_LT(rel_err(t.at(i), d.at(i)), Real(1e-20));
}

TEST(ThetaIdentities, ThomaeLambdasAreRosenhainRoots)
{
    std::mt19937_64 rng(37);
    auto l = thomae_lambdas(even_nulls(random_siegel(rng)));
    for (int i = 0; i < 3; ++i) {
        EXPECT_GT(abs(l[i]), Real(1e-6));
        EXPECT_GT(abs(l[i] - Complex(1)), Real(1e-6));
        for (int j = i + 1; j < 3; ++j)
            EXPECT_GT(abs(l[i] - l[j]), Real(1e-6));
    }
}

TEST(ThetaIdentities, VeroneseOfDualNullsGivesSquares)
{
    std::mt19937_64 rng(41);
    SiegelPoint tau = random_siegel(rng);
    ThetaNulls n = even_nulls(tau, 1e-30);
    auto v = veronese_map(dual_nulls(tau, 1e-30).th);
    for (int i = 0; i < 10; ++i)
        EXPECT_LT(rel_err(v[i], n.sq(i + 1)), Real(1e-20)) << i + 1;
}
