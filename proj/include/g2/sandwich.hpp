#pragma once

#include "g2/kummer.hpp"
#include "g2/split.hpp"

#include <numeric>
#include <random>

namespace g2 {

// ---------------------------------------------------------------------------
// Legendre curves y^2 z = x (x - z)(x - L z)

template <class R>
struct LegendrePoint {
    R x, y, z;  // z = 0 is the identity [0 : 1 : 0] or [1 : 0 : 0] by convention below
};

template <class R>
bool on_legendre(const R& L, const LegendrePoint<R>& P)
{
    return P.y * P.y * P.z == P.x * (P.x - P.z) * (P.x - L * P.z);
}

template <class R>
bool is_identity(const LegendrePoint<R>& P)
{
    return is_zero(P.z) && (is_zero(P.y) || is_zero(P.x));
}

// Duplication [x : y : z] -> [2 (x^2 - L z^2)^2 y z : q00 q10 q01 : 8 y^3 z^3] with
// q00 = x^2 - 2 L x z + L z^2, q10 = x^2 - 2 x z + L z^2, q01 = x^2 - L z^2.
// A 2-torsion input (all-zero output) returns the identity [1 : 0 : 0].
template <class R>
LegendrePoint<R> mult2_legendre(const R& L, const LegendrePoint<R>& P)
{
    if (!on_legendre(L, P))
        throw std::invalid_argument("mult2_legendre: point not on the Legendre curve");
    const R &x = P.x, &y = P.y, &z = P.z;
    R zero = lift(L, 0), one = lift(L, 1);
    if (is_identity(P))
        return {one, zero, zero};
    R q01 = x * x - L * z * z;
    R q00 = x * x - lift(L, 2) * L * x * z + L * z * z;
    R q10 = x * x - lift(L, 2) * x * z + L * z * z;
    LegendrePoint<R> out{lift(L, 2) * q01 * q01 * y * z, q00 * q10 * q01, lift(L, 8) * y * y * y * z * z * z};
    if (is_zero(out.x) && is_zero(out.z))
        return {one, zero, zero};
    return out;
}

// Chord-tangent addition on y^2 = x (x - 1)(x - L) in affine coordinates; identity has z = 0.
template <class R>
LegendrePoint<R> legendre_add(const R& L, const LegendrePoint<R>& P, const LegendrePoint<R>& Q)
{
    R zero = lift(L, 0), one = lift(L, 1);
    if (is_identity(P))
        return Q;
    if (is_identity(Q))
        return P;
    R x1 = P.x / P.z, y1 = P.y / P.z, x2 = Q.x / Q.z, y2 = Q.y / Q.z;
    R a = -(one + L);
    R m;
    if (x1 == x2) {
        if (y1 == -y2)
            return {one, zero, zero};
        m = (lift(L, 3) * x1 * x1 + lift(L, 2) * a * x1 + L) / (lift(L, 2) * y1);
    } else {
        m = (y2 - y1) / (x2 - x1);
    }
    R x3 = m * m - a - x1 - x2;
    R y3 = -(y1 + m * (x3 - x1));
    return {x3, y3, one};
}

// ---------------------------------------------------------------------------
// Quadric-intersection model I: X01^2 = X10^2 + X11^2, X00^2 = X10^2 + (1 - L) X11^2

template <class R>
std::pair<R, R> quadric_residuals(const R& L, const Point4<R>& X)
{
    R one = lift(L, 1);
    return {X[1] * X[1] - X[2] * X[2] - X[3] * X[3], X[0] * X[0] - X[2] * X[2] - (one - L) * X[3] * X[3]};
}

// [x : y : z] -> [x^2 - 2 L x z + L z^2 : x^2 - L z^2 : x^2 - 2 x z + L z^2 : sign 2 y z]
template <class R>
Point4<R> legendre_to_quadrics(const R& L, const LegendrePoint<R>& P, int sign = 1)
{
    const R &x = P.x, &z = P.z;
    R two = lift(L, 2);
    R w = two * P.y * z;
    if (sign < 0)
        w = -w;
    return {x * x - two * L * x * z + L * z * z, x * x - L * z * z, x * x - two * x * z + L * z * z, w};
}

// [L (X10 - X00) : sign L (L - 1) X11 : (1 - L) X01 + L X10 - X00]
template <class R>
LegendrePoint<R> quadrics_to_legendre(const R& L, const Point4<R>& X, int sign = 1)
{
    R one = lift(L, 1);
    R y = L * (L - one) * X[3];
    if (sign < 0)
        y = -y;
    return {L * (X[2] - X[0]), y, (one - L) * X[1] + L * X[2] - X[0]};
}

template <class R>
bool legendre_points_equal(const LegendrePoint<R>& a, const LegendrePoint<R>& b)
{
    return projective3_equal<R>({a.x, a.y, a.z}, {b.x, b.y, b.z});
}

// ---------------------------------------------------------------------------
// Double quadric y12^2 = x1 z1 (x1 - z1)(x1 - L1 z1) x2 z2 (x2 - z2)(x2 - L2 z2)

template <class R>
struct ProductKummerPoint {
    R x1, z1, x2, z2, y12;
};

template <class R>
struct SandwichModuli {
    R L1, L2;

    void validate() const { require_gluing_data(L1, L2); }

    R cubic(const R& x, const R& z, const R& L) const { return x * z * (x - z) * (x - L * z); }
    R double_quadric(const ProductKummerPoint<R>& p) const
    {
        return p.y12 * p.y12 - cubic(p.x1, p.z1, L1) * cubic(p.x2, p.z2, L2);
    }
    // Defining quartic of the surface in P(Z00, Z01, Z10, Z11).
    R k3x(const Point4<R>& Z) const
    {
        R one = lift(L1, 1), two = lift(L1, 2);
        R a = Z[0] * Z[0], b = Z[1] * Z[1], c = Z[2] * Z[2], d = Z[3] * Z[3];
        R m1 = one - L1, m2 = one - L2, p = L1 * L2, m = m1 * m2;
        return a * a + m * b * b + p * c * c + p * m * d * d - (two - L1 - L2) * (a * b + p * c * d) -
               (two * p - L1 - L2) * (a * d + b * c) - (L1 + L2) * (a * c + m * b * d);
    }
    R chart_Q(const Point4<R>& Z) const
    {
        R one = lift(L1, 1);
        return Z[0] * Z[0] - (one - L1) * Z[1] * Z[1] - L1 * Z[2] * Z[2] + L1 * (one - L2) * Z[3] * Z[3];
    }
    R chart_R(const Point4<R>& Z) const
    {
        R one = lift(L1, 1);
        return Z[0] * Z[0] - (one - L2) * Z[1] * Z[1] - L2 * Z[2] * Z[2] + L2 * (one - L1) * Z[3] * Z[3];
    }
};

// Projective equality under (x1, z1, x2, z2, y12) ~ (mu x1, mu z1, nu x2, nu z2, mu^2 nu^2 y12).
template <class R>
bool product_points_equal(const ProductKummerPoint<R>& a, const ProductKummerPoint<R>& b)
{
    if (a.x1 * b.z1 != b.x1 * a.z1 || a.x2 * b.z2 != b.x2 * a.z2)
        return false;
    const R& sa1 = is_zero(a.z1) ? a.x1 : a.z1;
    const R& sb1 = is_zero(b.z1) ? b.x1 : b.z1;
    const R& sa2 = is_zero(a.z2) ? a.x2 : a.z2;
    const R& sb2 = is_zero(b.z2) ? b.x2 : b.z2;
    if (is_zero(sa1) || is_zero(sb1) || is_zero(sa2) || is_zero(sb2))
        return false;
    return a.y12 * sb1 * sb1 * sb2 * sb2 == b.y12 * sa1 * sa1 * sa2 * sa2;
}

// Relative distance between two product points over C under the same equivalence.
inline Real product_points_residual(const ProductKummerPoint<Complex>& a, const ProductKummerPoint<Complex>& b)
{
    auto cross = [](const Complex& p, const Complex& q, const Complex& r, const Complex& s) {
        Real n = (abs(p) + abs(q)) * (abs(r) + abs(s));
        return n == 0 ? Real(0) : Real(abs(p * s - r * q) / n);
    };
    Real r1 = cross(a.x1, a.z1, b.x1, b.z1);
    Real r2 = cross(a.x2, a.z2, b.x2, b.z2);
    const Complex& sa1 = abs(a.z1) >= abs(a.x1) ? a.z1 : a.x1;
    const Complex& sb1 = abs(a.z1) >= abs(a.x1) ? b.z1 : b.x1;
    const Complex& sa2 = abs(a.z2) >= abs(a.x2) ? a.z2 : a.x2;
    const Complex& sb2 = abs(a.z2) >= abs(a.x2) ? b.z2 : b.x2;
    Complex lhs = a.y12 * sb1 * sb1 * sb2 * sb2, rhs = b.y12 * sa1 * sa1 * sa2 * sa2;
    Real n = abs(lhs) + abs(rhs);
    Real r3 = n == 0 ? Real(0) : Real(abs(lhs - rhs) / n);
    return std::max({r1, r2, r3});
}

// pi(P1, P2) with y12 = z1 z2 y1 y2.
template <class R>
ProductKummerPoint<R> kummer_projection(const LegendrePoint<R>& P1, const LegendrePoint<R>& P2)
{
    return {P1.x, P1.z, P2.x, P2.z, P1.z * P2.z * P1.y * P2.y};
}

// psi_hat_sign : (x1, z1, x2, z2, y12) -> [Z00 : Z01 : Z10 : Z11]
template <class R>
Point4<R> psi_hat(const SandwichModuli<R>& M, const ProductKummerPoint<R>& p, int sign)
{
    const R &x1 = p.x1, &z1 = p.z1, &x2 = p.x2, &z2 = p.z2;
    R two = lift(x1, 2);
    R w = lift(x1, 4) * p.y12;
    if (sign < 0)
        w = -w;
    Point4<R> Z{(x1 * x1 - two * M.L1 * x1 * z1 + M.L1 * z1 * z1) * (x2 * x2 - two * M.L2 * x2 * z2 + M.L2 * z2 * z2),
                (x1 * x1 - M.L1 * z1 * z1) * (x2 * x2 - M.L2 * z2 * z2),
                (x1 * x1 - two * x1 * z1 + M.L1 * z1 * z1) * (x2 * x2 - two * x2 * z2 + M.L2 * z2 * z2), w};
    if (all_zero(Z))
        throw std::domain_error("psi_hat: point in the base locus");
    return Z;
}

enum class PsiChart { Q, R };

// psi_sign : [Z00 : Z01 : Z10 : Z11] -> (x1, z1, x2, z2, y12), using the Q chart unless it degenerates.
template <class R>
ProductKummerPoint<R> psi(const SandwichModuli<R>& M, const Point4<R>& Z, int sign, PsiChart* used = nullptr)
{
    R d = M.L1 - M.L2;
    R prod = Z[0] * Z[1] * Z[2] * Z[3];
    R Q = M.chart_Q(Z);
    ProductKummerPoint<R> out;
    if (!is_zero(Q)) {
        out = {Q, d * Z[3] * Z[3], d * Z[1] * Z[1], Q, d * d * Q * Q * prod};
        if (used)
            *used = PsiChart::Q;
    } else {
        R Rv = M.chart_R(Z);
        if (is_zero(Rv))
            throw std::domain_error("psi: both charts degenerate (base locus)");
        out = {-d * Z[1] * Z[1], Rv, Rv, -d * Z[3] * Z[3], d * d * Rv * Rv * prod};
        if (used)
            *used = PsiChart::R;
    }
    if (sign < 0)
        out.y12 = -out.y12;
    return out;
}

// Explicit second chart, for consistency checks.
template <class R>
ProductKummerPoint<R> psi_chart_R(const SandwichModuli<R>& M, const Point4<R>& Z, int sign)
{
    R d = M.L1 - M.L2;
    R Rv = M.chart_R(Z);
    ProductKummerPoint<R> out{-d * Z[1] * Z[1], Rv, Rv, -d * Z[3] * Z[3], d * d * Rv * Rv * Z[0] * Z[1] * Z[2] * Z[3]};
    if (sign < 0)
        out.y12 = -out.y12;
    return out;
}

// pi o ([2] x [2]) written on the double quadric:
// ((x1^2 - L1 z1^2)^2, 4 c1, (x2^2 - L2 z2^2)^2, 4 c2, 4 y12 q(1) q(2)) with c_l the Legendre cubics.
template <class R>
ProductKummerPoint<R> kummer_double(const SandwichModuli<R>& M, const ProductKummerPoint<R>& p)
{
    auto q = [](const R& x, const R& z, const R& L) -> R {
        R two = lift(L, 2);
        return (x * x - two * L * x * z + L * z * z) * (x * x - two * x * z + L * z * z) * (x * x - L * z * z);
    };
    R a = p.x1 * p.x1 - M.L1 * p.z1 * p.z1, b = p.x2 * p.x2 - M.L2 * p.z2 * p.z2;
    R four = lift(M.L1, 4);
    return {a * a, four * M.cubic(p.x1, p.z1, M.L1), b * b, four * M.cubic(p.x2, p.z2, M.L2),
            four * p.y12 * q(p.x1, p.z1, M.L1) * q(p.x2, p.z2, M.L2)};
}

// Hudson moduli (D = 0) of the rescaled surface, with K_l^2 = L_l and K_l'^2 = 1 - L_l.
template <class R>
HudsonModel<R> k3x_hudson_moduli(const R& K1, const R& K2, const R& K1p, const R& K2p)
{
    return {(K1p * K1p + K2p * K2p) / (K1p * K2p),
            -((K1 * K2p) * (K1 * K2p) + (K1p * K2) * (K1p * K2)) / (K1 * K2 * K1p * K2p),
            (K1 * K1 + K2 * K2) / (K1 * K2), lift(K1, 0)};
}

// The quartic at Z00 = x, Z01 = y / sqrt(K1' K2'), Z10 = z / sqrt(K1 K2), Z11 = w / sqrt(K1 K2 K1' K2').
// Only squares of the coordinates enter, so no square roots are needed.
template <class R>
R k3x_rescaled(const SandwichModuli<R>& M, const R& K1, const R& K2, const R& K1p, const R& K2p, const Point4<R>& wxyz)
{
    const R &w = wxyz[0], &x = wxyz[1], &y = wxyz[2], &z = wxyz[3];
    R a = x * x, b = y * y / (K1p * K2p), c = z * z / (K1 * K2), d = w * w / (K1 * K2 * K1p * K2p);
    R one = lift(K1, 1), two = lift(K1, 2);
    R m1 = one - M.L1, m2 = one - M.L2, p = M.L1 * M.L2, m = m1 * m2;
    return a * a + m * b * b + p * c * c + p * m * d * d - (two - M.L1 - M.L2) * (a * b + p * c * d) -
           (two * p - M.L1 - M.L2) * (a * d + b * c) - (M.L1 + M.L2) * (a * c + m * b * d);
}

// ---------------------------------------------------------------------------
// Bridge to the Baker quartic with l1 = l2 l3

template <class R>
Point4<R> k3x_to_baker(const Point4<R>& Zp, const R& l2, const R& l3)
{
    R one = lift(l2, 1);
    R q = l2 * l3, s = l2 + l3, m = (one - l2) * (one - l3);
    const R &Z00 = Zp[0], &Z01 = Zp[1], &Z10 = Zp[2], &Z11 = Zp[3];
    return {Z01 - Z10 - Z11, -m * Z00 + (one + q) * Z01 - s * Z10, q * (Z01 - Z10 + Z11),
            -q * (m * Z00 + (one + q) * Z01 - s * Z10)};
}

// Inverse of k3x_to_baker up to the scalar -2 l2 l3 (1 - l2)(1 - l3).
template <class R>
Point4<R> baker_to_k3x(const Point4<R>& B, const R& l2, const R& l3)
{
    R one = lift(l2, 1);
    R q = l2 * l3, s = l2 + l3, m = (one - l2) * (one - l3);
    const R &W = B[0], &X = B[1], &Y = B[2], &Z = B[3];
    return {q * X + Z, q * s * W - q * X + s * Y + Z, q * (q + one) * W - q * X + (q + one) * Y + Z,
            q * m * W - m * Y};
}

// Sample points: every rational point P on a Legendre curve gives L = x - y^2 / (x (x - 1)).
template <class R>
R legendre_modulus_through(const R& x, const R& y)
{
    R one = lift(x, 1);
    if (is_zero(x) || x == one)
        throw std::invalid_argument("legendre_modulus_through: x must avoid 0 and 1");
    return x - y * y / (x * (x - one));
}

// Rational points on y^2 = x (x - 1)(x - L) with x = a/b, |a| <= height, 1 <= b <= height (y >= 0).
inline std::vector<LegendrePoint<Rational>> legendre_rational_points(const Rational& L, int height, size_t max_count)
{
    std::vector<LegendrePoint<Rational>> out;
    for (int b = 1; b <= height && out.size() < max_count; ++b)
        for (int a = -height; a <= height && out.size() < max_count; ++a) {
            if (std::gcd(a, b) != 1)
                continue;
            Rational x(a, b);
            Rational v = x * (x - 1) * (x - L);
            if (sgn(v) <= 0)
                continue;
            Integer n = v.get_num(), d = v.get_den();
            if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
                continue;
            out.push_back({x, Rational(Integer(sqrt(n)), Integer(sqrt(d))), Rational(1)});
        }
    return out;
}

// Exact samples i P1 + j P2 style: the multiples P, 2P, ..., kP of a point on each factor, paired up.
inline std::vector<std::pair<LegendrePoint<Rational>, LegendrePoint<Rational>>> sandwich_exact_samples(
    const Rational& L1, const LegendrePoint<Rational>& P1, const Rational& L2, const LegendrePoint<Rational>& P2,
    int multiples)
{
    std::vector<LegendrePoint<Rational>> A{P1}, B{P2};
    for (int i = 1; i < multiples; ++i) {
        A.push_back(legendre_add(L1, A.back(), P1));
        B.push_back(legendre_add(L2, B.back(), P2));
    }
    std::vector<std::pair<LegendrePoint<Rational>, LegendrePoint<Rational>>> out;
    for (const auto& a : A)
        for (const auto& b : B)
            if (!is_identity(a) && !is_identity(b) && !is_zero(a.y) && !is_zero(b.y))
                out.push_back({a, b});
    return out;
}

// Random point on y^2 = x (x - 1)(x - L) over C.
inline LegendrePoint<Complex> legendre_complex_point(const Complex& L, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double a = u(rng), b = u(rng);
    Complex x(a, b);
    return {x, csqrt(x * (x - Complex(1)) * (x - L)), Complex(1)};
}

// psi_sign(psi_hat_sign(pi(P1, P2))) against pi(2 P1, 2 P2): exact equality.
inline bool sandwich_sample_exact(const SandwichModuli<Rational>& M, const LegendrePoint<Rational>& P1,
                                  const LegendrePoint<Rational>& P2, int sign)
{
    auto p = kummer_projection(P1, P2);
    return product_points_equal(psi(M, psi_hat(M, p, sign), sign), kummer_double(M, p));
}

// Same over C, as a relative residual.
inline Real sandwich_sample_residual(const SandwichModuli<Complex>& M, const LegendrePoint<Complex>& P1,
                                     const LegendrePoint<Complex>& P2, int sign)
{
    auto p = kummer_projection(P1, P2);
    return product_points_residual(psi(M, psi_hat(M, p, sign), sign), kummer_double(M, p));
}

}  // namespace g2
