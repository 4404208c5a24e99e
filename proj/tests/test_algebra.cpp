#include "g2/algebra.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <optional>

using namespace g2;
using g2::testing::random_rational;

TEST(Rational, ParsesCanonicalForms)
{
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational(" 17 "), Rational(17));
    EXPECT_EQ(parse_rational("+5/-10"), Rational(-1, 2));
    EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(Rational, RejectsMalformedLiterals)
{
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
    EXPECT_THROW(inv(Rational(0)), std::domain_error);
}

TEST(Fp, FieldAxiomsAgainstIntegerArithmetic)
{
    const std::uint64_t p = 101;
    for (std::int64_t a = -5; a < 120; a += 7)
        for (std::int64_t b = 1; b < 101; b += 9) {
            Fp x(a, p), y(b, p);
            EXPECT_EQ((x * y).value(), static_cast<std::uint64_t>((((a % 101) + 101) % 101) * b % 101));
            EXPECT_EQ((x / y) * y, x);
            EXPECT_EQ(x + y - y, x);
        }
    EXPECT_THROW(Fp(0, p).inverse(), std::domain_error);
    EXPECT_THROW(Fp(1, 7) + Fp(1, 11), std::invalid_argument);
}

TEST(Fp, QuadraticResiduesMatchBruteForce)
{
    const std::uint64_t p = 43;
    std::vector<bool> square(p, false);
    for (std::uint64_t x = 0; x < p; ++x)
        square[x * x % p] = true;
    for (std::uint64_t a = 0; a < p; ++a)
        EXPECT_EQ(Fp::from_u64(a, p).is_square(), square[a]) << a;
    EXPECT_FALSE(Fp::from_u64(smallest_nonresidue(p), p).is_square());
}

TEST(Fp, PrimalityOfSmallIntegers)
{
    auto trial = [](std::uint64_t n) {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    };
    for (std::uint64_t n = 0; n < 2000; ++n)
        EXPECT_EQ(is_prime_u64(n), trial(n)) << n;
    EXPECT_THROW(require_odd_prime(2), std::invalid_argument);
    EXPECT_THROW(require_odd_prime(15), std::invalid_argument);
}

TEST(Fp2, MultiplicativeGroupAndFrobenius)
{
    const std::uint64_t p = 13;
    std::mt19937_64 rng(5);
    Fp2 like = Fp2::make(0, 0, p);
    Integer order(static_cast<unsigned long>(p * p - 1));
    for (int i = 0; i < 50; ++i) {
        Fp2 x = Fp2::random(like, rng);
        if (x.is_zero())
            continue;
        EXPECT_EQ(x.pow(order), lift(like, 1));
        EXPECT_EQ(x * x.inverse(), lift(like, 1));
        EXPECT_EQ(x.pow(Integer(static_cast<unsigned long>(p))), x.conj());
    }
    EXPECT_THROW(like.inverse(), std::domain_error);
}

TEST(Fp2, SquareRootOfNonresidueExists)
{
    const std::uint64_t p = 31;
    Fp2 s = Fp2::make(0, 1, p);
    EXPECT_EQ(s * s, lift(s, static_cast<long>(smallest_nonresidue(p))));
}

TEST(Poly, DivisionAndGcd)
{
    Rational z(0);
    // (x - 1)(x - 2)(x + 3) and (x - 2)(x + 5)
    Poly<Rational> f({6, -7, 0, 1}, z), g({-10, 3, 1}, z);
    Poly<Rational> q(z), r(z);
    f.divmod(g, q, r);
    EXPECT_EQ(q * g + r, f);
    EXPECT_LT(r.degree(), g.degree());
    EXPECT_EQ(poly_gcd(f, g), Poly<Rational>({-2, 1}, z));
    EXPECT_THROW(f.divmod(Poly<Rational>(z), q, r), std::domain_error);
}

TEST(Poly, ResultantEqualsProductOverRoots)
{
    std::mt19937_64 rng(11);
    Rational z(0);
    for (int it = 0; it < 10; ++it) {
        std::vector<Rational> a{random_rational(rng), random_rational(rng), random_rational(rng)};
        std::vector<Rational> b{random_rational(rng), random_rational(rng)};
        Poly<Rational> f({1}, z), g({1}, z);
        for (auto& r : a)
            f = f * Poly<Rational>({-r, 1}, z);
        for (auto& r : b)
            g = g * Poly<Rational>({-r, 1}, z);
        Rational expect = 1;
        for (auto& x : a)
            for (auto& y : b)
                expect *= x - y;
        EXPECT_EQ(resultant(f, g), expect);
    }
}

TEST(Poly, DiscriminantOfQuadraticAndCubic)
{
    Rational z(0);
    EXPECT_EQ(poly_discriminant(Poly<Rational>({5, 3, 1}, z)), Rational(9 - 20));
    // x^3 + a x + b: -4 a^3 - 27 b^2
    EXPECT_EQ(poly_discriminant(Poly<Rational>({1, -3, 0, 1}, z)), Rational(-4 * -27 - 27));
    EXPECT_EQ(poly_discriminant(Poly<Rational>({2, -3, 0, 1}, z)), Rational(0));
}

TEST(Poly, PowmodMatchesRepeatedMultiplication)
{
    const std::uint64_t p = 7;
    Fp z(0, p);
    Poly<Fp> m({Fp(3, p), Fp(1, p), Fp(0, p), Fp(1, p)}, z), x({Fp(2, p), Fp(1, p)}, z);
    Poly<Fp> acc({Fp(1, p)}, z);
    for (int e = 0; e < 40; ++e) {
        EXPECT_EQ(poly_powmod(x, Integer(e), m), acc % m) << e;
        acc = (acc * x) % m;
    }
}

TEST(BinaryForm, DiscriminantMatchesRootProduct)
{
    // g = 2 (x - z)(x - 3z)(x + 2z) z, a quartic with a simple root at infinity
    Rational z(0);
    std::vector<std::optional<Rational>> roots{Rational(1), Rational(3), Rational(-2), std::nullopt};
    BinaryForm<Rational> g(0, {Rational(2)});
    for (const auto& r : roots)
        g = g * (r ? BinaryForm<Rational>(1, {-*r, Rational(1)}) : BinaryForm<Rational>(1, {Rational(1), z}));
    // disc = lead^(2n-2) prod_{i<j} (r_i - r_j)^2 with the root at infinity contributing 1
    Rational lead = 2;
    Rational expect = power(lead, 6);
    std::vector<Rational> fin{1, 3, -2};
    for (size_t i = 0; i < fin.size(); ++i)
        for (size_t j = i + 1; j < fin.size(); ++j)
            expect *= (fin[i] - fin[j]) * (fin[i] - fin[j]);
    EXPECT_EQ(binary_discriminant(g), expect);
}

TEST(BinaryForm, SubstitutionComposes)
{
    std::mt19937_64 rng(3);
    BinaryForm<Rational> f(3, {random_rational(rng), random_rational(rng), random_rational(rng), Rational(1)});
    Rational x(2, 3), zz(5, 7);
    // f(p x + q z, r x + s z) evaluated at (x, z) equals f at the transformed point
    Rational p(1), q(2), r(-1), s(3);
    auto g = f.substitute(p, q, r, s);
    EXPECT_EQ(g.eval(x, zz), f.eval(p * x + q * zz, r * x + s * zz));
}

TEST(BinaryForm, TransvectantSymmetry)
{
    std::mt19937_64 rng(9);
    auto rnd = [&](int n) {
        std::vector<Rational> c;
        for (int i = 0; i <= n; ++i)
            c.push_back(random_rational(rng));
        return BinaryForm<Rational>(n, c);
    };
    auto f = rnd(4), g = rnd(4);
    for (int k = 0; k <= 4; ++k) {
        auto a = transvectant(f, g, k), b = transvectant(g, f, k);
        for (size_t i = 0; i < a.a.size(); ++i)
            EXPECT_EQ(a.a[i], (k % 2 ? Rational(-b.a[i]) : b.a[i]));
    }
}

TEST(Matrix, DeterminantMatchesLeibnizFormula)
{
    std::mt19937_64 rng(2);
    for (int it = 0; it < 5; ++it) {
        std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
        for (auto& row : m)
            for (auto& x : row)
                x = random_rational(rng, 5);
        Rational leibniz = 0;
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            int inversions = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    inversions += perm[i] > perm[j];
            Rational t = inversions % 2 ? -1 : 1;
            for (int i = 0; i < 4; ++i)
                t *= m[i][perm[i]];
            leibniz += t;
        } while (std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(determinant(m), leibniz);
    }
}

TEST(Matrix, RankOfDependentRows)
{
    std::vector<std::vector<Rational>> m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(matrix_rank(m), 2u);
    m[1][2] = 7;
    EXPECT_EQ(matrix_rank(m), 3u);
}

TEST(WeightedProjective, ScalingByWeightsIsEqual)
{
    std::vector<int> w{2, 4, 6, 10};
    WeightedProjPoint<Rational> a({3, 5, -7, 11}, w);
    Rational l(2, 3);
    WeightedProjPoint<Rational> b({power(l, 2) * 3, power(l, 4) * 5, power(l, 6) * -7, power(l, 10) * 11}, w);
    EXPECT_TRUE(weighted_proj_equal(a, b));
    WeightedProjPoint<Rational> c({power(l, 2) * 3, power(l, 4) * 5, power(l, 6) * -7, power(l, 9) * 11}, w);
    EXPECT_FALSE(weighted_proj_equal(a, c));
    EXPECT_THROW(WeightedProjPoint<Rational>({0, 0}, {1, 2}), std::invalid_argument);
}

TEST(WeightedProjective, ComplexToleranceVersion)
{
    std::vector<int> w{1, 2, 3};
    WeightedProjPoint<Complex> a({Complex(1, 2), Complex(3, -1), Complex(0.5, 0.25)}, w);
    Complex l(0.3, 1.7);
    WeightedProjPoint<Complex> b({l * a.coords[0], power(l, 2) * a.coords[1], power(l, 3) * a.coords[2]}, w);
    EXPECT_TRUE(weighted_proj_equal(a, b, 1e-20));
    b.coords[2] = b.coords[2] * Complex(1.001, 0);
    EXPECT_FALSE(weighted_proj_equal(a, b, 1e-6));
}

TEST(Complex, ExpAndSqrt)
{
    Complex z(0.3, -1.2);
    Complex s = csqrt(z);
    EXPECT_LT(abs(s * s - z), Real(1e-30));
    EXPECT_LT(abs(cexp(Complex(Real(0), pi_real())) + Complex(1)), Real(1e-30));
    EXPECT_LT(abs(e2pi(Real(1) / 4) - Complex(0, 1)), Real(1e-30));
    EXPECT_THROW(Complex(1) / Complex(0), std::domain_error);
}

TEST(Complex, PrecisionScopeRestores)
{
    unsigned before = Real::default_precision();
    {
        PrecisionScope s(256);
        EXPECT_GE(Real::default_precision(), 77u);
    }
    EXPECT_EQ(Real::default_precision(), before);
    EXPECT_THROW(PrecisionScope(32), std::invalid_argument);
}
