#pragma once

#include "g2/curves.hpp"
#include "g2/richelot.hpp"

namespace g2 {

// Weighted projective point [X : Y : Z] on y^2 = f(X, Z) with Y of weight 3.
template <class R>
using CurveXYZ = std::array<R, 3>;

// y^2 z = x^3 + a2 x^2 z + a4 x z^2 + a6 z^3
template <class R>
struct EllipticCurve {
    R a2, a4, a6;

    R eval(const std::array<R, 3>& p) const
    {
        const R &x = p[0], &y = p[1], &z = p[2];
        return y * y * z - (x * x * x + a2 * x * x * z + a4 * x * z * z + a6 * z * z * z);
    }
    bool contains(const std::array<R, 3>& p) const { return is_zero(eval(p)); }
    R discriminant() const
    {
        auto k = [&](long n) { return lift(a2, n); };
        R b2 = k(4) * a2, b4 = k(2) * a4, b6 = k(4) * a6, b8 = k(4) * a2 * a6 - a4 * a4;
        return -b2 * b2 * b8 - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
    }
    R j() const
    {
        R d = discriminant();
        if (is_zero(d))
            throw std::domain_error("singular cubic");
        R b2 = lift(a2, 4) * a2, b4 = lift(a2, 2) * a4;
        R c4 = b2 * b2 - lift(a2, 24) * b4;
        return c4 * c4 * c4 / d;
    }
};

template <class R>
EllipticCurve<R> legendre_curve(const R& L)
{
    return {-(lift(L, 1) + L), L, lift(L, 0)};
}

template <class R>
bool on_curve(const BinaryForm<R>& f, const CurveXYZ<R>& P)
{
    return P[1] * P[1] == f.eval(P[0], P[2]);
}

// ---------------------------------------------------------------------------
// Bolza model Y^2 = X^6 + s1 X^4 Z^2 + s2 X^2 Z^4 + Z^6

template <class R>
struct BolzaCurve {
    R s1, s2;

    BinaryForm<R> sextic() const { return bolza_sextic(s1, s2); }
    void require_smooth() const
    {
        if (is_zero(binary_discriminant(sextic())))
            throw std::invalid_argument("Bolza sextic is singular");
    }
};

template <class R>
struct BolzaQuotients {
    EllipticCurve<R> E1, E2;
};

// E1: y^2 = x^3 + s2 x^2 + s1 x + 1 and E2 with s1, s2 exchanged.
template <class R>
BolzaQuotients<R> bolza_quotients(const BolzaCurve<R>& c)
{
    c.require_smooth();
    R one = lift(c.s1, 1);
    return {{c.s2, c.s1, one}, {c.s1, c.s2, one}};
}

template <class R>
std::array<R, 3> bolza_psi1(const CurveXYZ<R>& P)
{
    if (is_zero(P[0]) || is_zero(P[2]))
        throw std::invalid_argument("Bolza quotient maps need XZ != 0");
    return {P[0] * P[2] * P[2], P[1], P[0] * P[0] * P[0]};
}

template <class R>
std::array<R, 3> bolza_psi2(const CurveXYZ<R>& P)
{
    if (is_zero(P[0]) || is_zero(P[2]))
        throw std::invalid_argument("Bolza quotient maps need XZ != 0");
    return {P[0] * P[0] * P[2], P[1], P[2] * P[2] * P[2]};
}

// ---------------------------------------------------------------------------
// Rosenhain curves on the component l1 = l2 l3

template <class R>
struct SpecialRosenhain {
    R l2, l3;
    std::optional<R> q, r, k2, k3;  // q^2 = l2 l3, r^2 = (1 - l2)(1 - l3), k_i^2 = l_i

    R l1() const { return l2 * l3; }
    BinaryForm<R> sextic() const { return rosenhain_sextic(l1(), l2, l3); }

    void validate() const
    {
        R zero = lift(l2, 0), one = lift(l2, 1);
        for (const R* l : {&l2, &l3})
            if (*l == zero || *l == one)
                throw std::invalid_argument("l2, l3 must avoid 0 and 1");
        if (l2 == l3 || l2 * l3 == one)
            throw std::invalid_argument("need l2 != l3^(+-1)");
        if (q && *q * *q != l1())
            throw std::invalid_argument("inconsistent square root q");
        if (r && *r * *r != (one - l2) * (one - l3))
            throw std::invalid_argument("inconsistent square root r");
        if (k2 && *k2 * *k2 != l2)
            throw std::invalid_argument("inconsistent square root k2");
        if (k3 && *k3 * *k3 != l3)
            throw std::invalid_argument("inconsistent square root k3");
    }

    static SpecialRosenhain from_k(const R& k2v, const R& k3v)
    {
        SpecialRosenhain s{k2v * k2v, k3v * k3v, k2v * k3v, std::nullopt, k2v, k3v};
        s.validate();
        return s;
    }
};

// Legendre moduli of the two elliptic quotients from square roots k2, k3.
template <class R>
std::pair<R, R> special_moduli(const R& k2, const R& k3)
{
    R one = lift(k2, 1);
    R den = (one - k2 * k2) * (one - k3 * k3);
    if (is_zero(den))
        throw std::domain_error("special_moduli: k2^2 or k3^2 equals 1");
    return {-(k2 - k3) * (k2 - k3) / den, -(k2 + k3) * (k2 + k3) / den};
}

// Residuals of the product and sum relations that tie (L1, L2) to (l2, l3).
template <class R>
std::pair<R, R> special_moduli_relations(const R& l2, const R& l3, const R& L1, const R& L2)
{
    R one = lift(l2, 1);
    R den = (one - l2) * (one - l3);
    return {L1 * L2 - ((l2 + l3) * (l2 + l3) - lift(l2, 4) * l2 * l3) / (den * den),
            L1 + L2 + lift(l2, 2) * (l2 + l3) / den};
}

// psi_l(P) = [r (X - l2 Z)(X - l3 Z) X Z : (X - (-1)^l q Z) Y : r^3 X^2 Z^2], [1:0:0] when XZ = 0.
template <class R>
std::array<R, 3> special_psi(const SpecialRosenhain<R>& S, int l, const CurveXYZ<R>& P)
{
    if (!S.q || !S.r)
        throw std::invalid_argument("special_psi needs the square roots q and r");
    if (l != 1 && l != 2)
        throw std::invalid_argument("quotient index must be 1 or 2");
    const R &X = P[0], &Y = P[1], &Z = P[2];
    R zero = lift(X, 0), one = lift(X, 1);
    if (is_zero(X) || is_zero(Z))
        return {one, zero, zero};
    const R& r = *S.r;
    R sq = *S.q;
    if (l == 1)
        sq = -sq;
    return {r * (X - S.l2 * Z) * (X - S.l3 * Z) * X * Z, (X - sq * Z) * Y, r * r * r * X * X * Z * Z};
}

// Legendre modulus of the target of psi_l. With q = k2 k3, psi_1 lands on the curve with
// -(k2 + k3)^2 / ((1 - k2^2)(1 - k3^2)) and psi_2 on the one with (k2 - k3)^2.
template <class R>
R special_psi_target(const SpecialRosenhain<R>& S, int l)
{
    if (!S.q || !S.k2 || !S.k3)
        throw std::invalid_argument("special_psi_target needs q, k2, k3");
    auto [L1, L2] = special_moduli(*S.k2, *S.k3);
    bool q_plus = *S.q == *S.k2 * *S.k3;
    if (!q_plus && *S.q != -(*S.k2 * *S.k3))
        throw std::invalid_argument("q must equal +-k2 k3");
    bool to_L2 = (l == 1) == q_plus;
    return to_L2 ? L2 : L1;
}

// j_l : [X : Y : Z] -> [l2 l3 Z : (-1)^(l+1) l2 l3 q Y : X]
template <class R>
CurveXYZ<R> special_involution(const SpecialRosenhain<R>& S, int l, const CurveXYZ<R>& P)
{
    if (!S.q)
        throw std::invalid_argument("special_involution needs q");
    R y = S.l1() * *S.q * P[1];
    if (l == 2)
        y = -y;
    return {S.l1() * P[2], y, P[0]};
}

template <class R>
bool weighted_curve_points_equal(const CurveXYZ<R>& a, const CurveXYZ<R>& b)
{
    // [X:Y:Z] ~ [tX : t^3 Y : tZ]
    if (a[0] * b[2] != a[2] * b[0])
        return false;
    const R& sa = is_zero(a[0]) ? a[2] : a[0];
    const R& sb = is_zero(b[0]) ? b[2] : b[0];
    return a[1] * sb * sb * sb == b[1] * sa * sa * sa;
}

template <class R>
bool projective3_equal(const std::array<R, 3>& a, const std::array<R, 3>& b)
{
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

// Weierstrass points P1..P6 = (l2 l3, l2, l3, 0, 1, infinity) with Y = 0.
template <class R>
std::array<CurveXYZ<R>, 6> special_weierstrass_points(const SpecialRosenhain<R>& S)
{
    R zero = lift(S.l2, 0), one = lift(S.l2, 1);
    return {{{S.l1(), zero, one}, {S.l2, zero, one}, {S.l3, zero, one}, {zero, zero, one}, {one, zero, one},
             {one, zero, zero}}};
}

// Index permutation of the Weierstrass points induced by j_l (0-based).
template <class R>
std::array<int, 6> involution_on_weierstrass(const SpecialRosenhain<R>& S, int l)
{
    auto P = special_weierstrass_points(S);
    std::array<int, 6> perm;
    for (int i = 0; i < 6; ++i) {
        perm[i] = -1;
        auto img = special_involution(S, l, P[i]);
        for (int j = 0; j < 6; ++j)
            if (weighted_curve_points_equal(img, P[j]))
                perm[i] = j;
        if (perm[i] < 0)
            throw std::logic_error("involution does not preserve the Weierstrass points");
    }
    return perm;
}

// Kernel of the splitting isogeny in the marking (P1..P6) = (l2 l3, l2, l3, 0, 1, infinity).
inline GoepelGroup special_kernel_group()
{
    return goepel_from_partition(PairPartition::parse("15|23|46"));
}

// ---------------------------------------------------------------------------
// Legendre gluing

template <class R>
void require_gluing_data(const R& L1, const R& L2)
{
    R zero = lift(L1, 0), one = lift(L1, 1);
    for (const R* L : {&L1, &L2})
        if (*L == zero || *L == one)
            throw std::invalid_argument("gluing moduli must avoid 0 and 1");
    if (L1 == L2)
        throw std::invalid_argument("gluing moduli must be distinct");
}

// Y^2 = (X^2 - Z^2)(X^2 - (L1/L2) Z^2)(X^2 - ((1 - L1)/(1 - L2)) Z^2)
template <class R>
BinaryForm<R> glue(const R& L1, const R& L2)
{
    require_gluing_data(L1, L2);
    R zero = lift(L1, 0), one = lift(L1, 1);
    BinaryForm<R> f(0, {one});
    for (const R& c : std::array<R, 3>{one, L1 / L2, (one - L1) / (one - L2)})
        f = f * BinaryForm<R>(2, {-c, zero, one});
    if (is_zero(binary_discriminant(f)))
        throw std::domain_error("glued sextic is degenerate");
    return f;
}

// {L1, L2} followed by the five images under the anharmonic group.
template <class R>
std::array<std::pair<R, R>, 6> anharmonic_orbit(const R& L1, const R& L2)
{
    require_gluing_data(L1, L2);
    R one = lift(L1, 1);
    auto maps = std::array<std::function<R(const R&)>, 6>{
        [](const R& L) -> R { return L; },
        [&](const R& L) -> R { return one / (one - L); },
        [&](const R& L) -> R { return (L - one) / L; },
        [&](const R& L) -> R { return one / L; },
        [&](const R& L) -> R { return L / (L - one); },
        [&](const R& L) -> R { return one - L; }};
    std::array<std::pair<R, R>, 6> out;
    for (int i = 0; i < 6; ++i)
        out[i] = {maps[i](L1), maps[i](L2)};
    return out;
}

// Split detection for a sextic: the modular form Q and, for Rosenhain input, the Pringsheim product.
template <class R>
struct SplitReport {
    R q;
    bool split;
    std::optional<PringsheimReport<R>> pringsheim;
};

template <class R>
SplitReport<R> split_detect(const BinaryForm<R>& f)
{
    auto Q = q_modular(igusa_invariants(f));
    return {Q.value, is_zero(Q.value), std::nullopt};
}

template <class R>
SplitReport<R> split_detect_rosenhain(const R& l1, const R& l2, const R& l3)
{
    SplitReport<R> rep = split_detect(rosenhain_sextic(l1, l2, l3));
    rep.pringsheim = pringsheim_product(l1, l2, l3);
    return rep;
}

}  // namespace g2
