#pragma once

#include "g2/algebra.hpp"

#include <array>
#include <optional>
#include <utility>

namespace g2 {

// Sextic y^2 = a6 x^6 + ... + a0 as a binary form of degree 6.
template <class R>
BinaryForm<R> make_sextic(const std::vector<R>& a)
{
    if (a.size() != 7)
        throw std::invalid_argument("a sextic needs seven coefficients a0..a6");
    return BinaryForm<R>(6, a);
}

// Product of (x - r z) over finite roots and z for each root at infinity (nullopt).
template <class R>
BinaryForm<R> form_from_roots(const std::vector<std::optional<R>>& roots, const R& like)
{
    R zero = lift(like, 0), one = lift(like, 1);
    BinaryForm<R> f(0, {one});
    for (const auto& r : roots) {
        if (r)
            f = f * BinaryForm<R>(1, {-*r, one});
        else
            f = f * BinaryForm<R>(1, {one, zero});
    }
    return f;
}

// Rosenhain model x z (x - z)(x - l1 z)(x - l2 z)(x - l3 z).
template <class R>
BinaryForm<R> rosenhain_sextic(const R& l1, const R& l2, const R& l3)
{
    R zero = lift(l1, 0), one = lift(l1, 1);
    return form_from_roots<R>({zero, one, l1, l2, l3, std::nullopt}, l1);
}

template <class R>
void require_rosenhain(const R& l1, const R& l2, const R& l3)
{
    R zero = lift(l1, 0), one = lift(l1, 1);
    for (const R* l : {&l1, &l2, &l3})
        if (*l == zero || *l == one)
            throw std::invalid_argument("Rosenhain roots must avoid 0 and 1");
    if (l1 == l2 || l1 == l3 || l2 == l3)
        throw std::invalid_argument("Rosenhain roots must be pairwise distinct");
}

template <class R>
struct IgusaPoint {
    R J2, J4, J6, J10;

    WeightedProjPoint<R> weighted() const { return WeightedProjPoint<R>({J2, J4, J6, J10}, {2, 4, 6, 10}); }
};

template <class R>
bool igusa_equal(const IgusaPoint<R>& a, const IgusaPoint<R>& b)
{
    return weighted_proj_equal(a.weighted(), b.weighted());
}

inline bool igusa_equal(const IgusaPoint<Complex>& a, const IgusaPoint<Complex>& b, double tol)
{
    return weighted_proj_equal(a.weighted(), b.weighted(), tol);
}

// Clebsch invariants A, B, C (and the auxiliary covariants) of a binary sextic.
template <class R>
struct ClebschInvariants {
    R A, B, C, D;
};

template <class R>
ClebschInvariants<R> clebsch_invariants(const BinaryForm<R>& f)
{
    if (f.n != 6)
        throw std::invalid_argument("Clebsch invariants need a binary sextic");
    BinaryForm<R> i = transvectant(f, f, 4);
    BinaryForm<R> delta = transvectant(i, i, 2);
    BinaryForm<R> y1 = transvectant(f, i, 4);
    BinaryForm<R> y2 = transvectant(i, y1, 2);
    BinaryForm<R> y3 = transvectant(i, y2, 2);
    return {transvectant(f, f, 6).a[0], transvectant(i, i, 4).a[0], transvectant(i, delta, 4).a[0],
            transvectant(y3, y1, 2).a[0]};
}

namespace detail {
template <class R>
void require_char_ok(const R&)
{
}
inline void require_char_ok(const Fp& x)
{
    std::uint64_t p = x.modulus();
    if (p == 2 || p == 3 || p == 5)
        throw std::domain_error("Igusa invariants via transvectants need characteristic > 5");
}
inline void require_char_ok(const Fp2& x) { require_char_ok(x.c0()); }
}  // namespace detail

// Igusa-Clebsch invariants [J2:J4:J6:J10]; J10 is the binary-form discriminant.
template <class R>
IgusaPoint<R> igusa_invariants(const BinaryForm<R>& f)
{
    detail::require_char_ok(f.a[0]);
    if (f.n != 6)
        throw std::invalid_argument("igusa_invariants needs a binary sextic");
    R J10 = binary_discriminant(f);
    if (is_zero(J10))
        throw std::domain_error("singular sextic: discriminant vanishes");
    ClebschInvariants<R> c = clebsch_invariants(f);
    auto k = [&](long n) { return lift(c.A, n); };
    R J2 = k(-120) * c.A;
    R J4 = k(-720) * c.A * c.A + k(6750) * c.B;
    R J6 = k(8640) * c.A * c.A * c.A - k(108000) * c.A * c.B + k(202500) * c.C;
    return {J2, J4, J6, J10};
}

template <class R>
struct SiegelFormValues {
    R psi4, psi6, chi10, chi12;
};

template <class R>
SiegelFormValues<R> siegel_from_igusa(const IgusaPoint<R>& I)
{
    if (is_zero(I.J10))
        throw std::domain_error("J10 = 0: degenerate curve");
    auto k = [&](long n) { return lift(I.J10, n); };
    R psi4 = I.J4 / k(4);
    R chi10 = -I.J10 / k(16384);
    R chi12 = -I.J2 * chi10 / k(24);
    R psi6 = -(k(3) / k(8)) * (I.J6 + k(32) * psi4 * chi12 / chi10);
    return {psi4, psi6, chi10, chi12};
}

template <class R>
IgusaPoint<R> igusa_from_siegel(const SiegelFormValues<R>& s)
{
    if (is_zero(s.chi10))
        throw std::domain_error("chi10 = 0: not a Jacobian");
    auto k = [&](long n) { return lift(s.chi10, n); };
    R J2 = -k(24) * s.chi12 / s.chi10;
    R J4 = k(4) * s.psi4;
    R J6 = -(k(8) / k(3)) * s.psi6 - k(32) * s.psi4 * s.chi12 / s.chi10;
    R J10 = -k(16384) * s.chi10;
    return {J2, J4, J6, J10};
}

// The degree-60 polynomial Q = 2^12 3^9 chi35^2 / chi10 in the even generators.
template <class R>
R chi35_polynomial(const SiegelFormValues<R>& s)
{
    const R &a = s.psi4, &b = s.psi6, &c = s.chi10, &e = s.chi12;
    auto k = [&](long n) { return lift(a, n); };
    auto p = [](const R& x, long n) { return power(x, n); };
    R P = k(16777216L * 14348907L) * p(e, 5)                       // 2^24 3^15
          - k(8192L * 19683L) * p(a, 3) * p(e, 4)                  // 2^13 3^9
          - k(8192L * 19683L) * p(b, 2) * p(e, 4)                  // 2^13 3^9
          + k(27) * p(a, 6) * p(e, 3)                              // 3^3
          - k(54) * p(a, 3) * p(b, 2) * p(e, 3)                    // 2 3^3
          - k(16384L * 6561L) * p(a, 2) * b * c * p(e, 3)          // 2^14 3^8
          - k(8388608L * 531441L * 25L) * a * p(c, 2) * p(e, 3)    // 2^23 3^12 5^2
          + k(27) * p(b, 4) * p(e, 3)                              // 3^3
          + k(2048L * 729L * 37L) * p(a, 4) * p(c, 2) * p(e, 2)    // 2^11 3^6 37
          + k(2048L * 729L * 35L) * a * p(b, 2) * p(c, 2) * p(e, 2)  // 2^11 3^6 5 7
          - k(8388608L * 19683L * 125L) * b * p(c, 3) * p(e, 2)    // 2^23 3^9 5^3
          - k(9) * p(a, 7) * p(c, 2) * e                           // 3^2
          + k(18) * p(a, 4) * p(b, 2) * p(c, 2) * e                // 2 3^2
          + k(2048L * 243L * 95L) * p(a, 3) * b * p(c, 3) * e      // 2^11 3^5 5 19
          + k(1048576L * 6561L * 125L * 11L) * p(a, 2) * p(c, 4) * e  // 2^20 3^8 5^3 11
          - k(9) * a * p(b, 4) * p(c, 2) * e                       // 3^2
          + k(2048L * 243L * 25L) * p(b, 3) * p(c, 3) * e          // 2^11 3^5 5^2
          - k(2) * p(a, 6) * b * p(c, 3)                           // 2
          - k(4096L * 81L) * p(a, 5) * p(c, 4)                     // 2^12 3^4
          + k(4) * p(a, 3) * p(b, 3) * p(c, 3)                     // 2^2
          + k(4096L * 81L * 25L) * p(a, 2) * p(b, 2) * p(c, 4)     // 2^12 3^4 5^2
          + k(2097152L * 2187L * 625L) * a * b * p(c, 5)           // 2^21 3^7 5^4
          - k(2) * p(b, 5) * p(c, 3)                               // 2
          + k(4294967296L * 19683L * 3125L) * p(c, 6);             // 2^32 3^9 5^5
    return P;
}

template <class R>
struct QModular {
    R value;           // Q evaluated at the given representative of the Igusa point
    int weight = 60;   // Q scales by l^60 under J_{2i} -> l^{2i} J_{2i}
};

template <class R>
QModular<R> q_modular(const IgusaPoint<R>& I)
{
    SiegelFormValues<R> s = siegel_from_igusa(I);
    if (is_zero(s.chi10))
        throw std::domain_error("chi10 = 0");
    return {chi35_polynomial(s), 60};
}

// chi35^2 = chi10 Q / (2^12 3^9)
template <class R>
R chi35_squared(const SiegelFormValues<R>& s)
{
    return s.chi10 * chi35_polynomial(s) / (lift(s.chi10, 4096) * lift(s.chi10, 19683));
}

// -2^22 chi35^2 / chi10^4 for the given representative.
template <class R>
R pringsheim_modular_side(const IgusaPoint<R>& I)
{
    SiegelFormValues<R> s = siegel_from_igusa(I);
    return -lift(s.chi10, 4194304) * chi35_squared(s) / power(s.chi10, 4);
}

template <class R>
struct PringsheimReport {
    std::array<R, 15> factors;  // squared factors
    R product;
    bool on_humbert4() const { return is_zero(product); }
};

template <class R>
PringsheimReport<R> pringsheim_product(const R& l1, const R& l2, const R& l3)
{
    require_rosenhain(l1, l2, l3);
    std::array<R, 15> f = {l1 - l2 * l3,
                           l2 - l1 * l3,
                           l3 - l1 * l2,
                           l1 - l2 - l3 + l2 * l3,
                           -l1 + l2 - l3 + l1 * l3,
                           -l1 - l2 + l3 + l1 * l2,
                           l1 * l2 + l1 * l3 - l2 * l3 - l1,
                           l1 * l2 + l2 * l3 - l1 * l3 - l2,
                           l1 * l3 + l2 * l3 - l1 * l2 - l3,
                           l1 * l2 - l1 * l3 - l1 + l3,
                           l1 * l3 - l2 * l3 - l1 + l3,
                           l1 * l2 - l2 * l3 - l1 + l2,
                           l1 * l2 - l1 * l3 + l1 - l2,
                           l1 * l3 - l2 * l3 + l2 - l3,
                           l1 * l2 - l2 * l3 - l2 + l3};
    R prod = lift(l1, 1);
    for (auto& x : f) {
        x = x * x;
        prod = prod * x;
    }
    return {f, prod};
}

// j = 256 (L^2 - L + 1)^3 / (L^2 (L - 1)^2) for y^2 = x (x - 1)(x - L).
template <class R>
R legendre_j(const R& L)
{
    R zero = lift(L, 0), one = lift(L, 1);
    if (L == zero || L == one)
        throw std::domain_error("Legendre parameter must avoid 0 and 1");
    R t = L * L - L + one;
    R d = L * (L - one);
    return lift(L, 256) * t * t * t / (d * d);
}

template <class R>
BinaryForm<R> bolza_sextic(const R& s1, const R& s2)
{
    R zero = lift(s1, 0), one = lift(s1, 1);
    return make_sextic<R>({one, zero, s2, zero, s1, zero, one});
}

// j-invariants of y^2 = x^3 + s2 x^2 + s1 x + 1 and of the curve with s1, s2 exchanged.
template <class R>
std::pair<R, R> bolza_j_pair(const R& s1, const R& s2)
{
    auto k = [&](long n) { return lift(s1, n); };
    R den = k(4) * (s1 * s1 * s1 + s2 * s2 * s2) - (s1 * s2) * (s1 * s2) - k(18) * s1 * s2 + k(27);
    if (is_zero(den))
        throw std::domain_error("degenerate Bolza sextic");
    R n1 = k(3) * s1 - s2 * s2, n2 = k(3) * s2 - s1 * s1;
    return {k(256) * n1 * n1 * n1 / den, k(256) * n2 * n2 * n2 / den};
}

// Shioda-Inose quartic y^2 z w - 4 x^3 z + 3 alpha x z w^2 + beta z w^3 + gamma x z^2 w
//   - (delta z^2 w^2 + w^4)/2 = 0.
template <class R>
struct SIQuartic {
    R alpha, beta, gamma, delta;

    // Value of the defining polynomial at [x:y:z:w].
    R eval(const R& x, const R& y, const R& z, const R& w) const
    {
        auto k = [&](long n) { return lift(x, n); };
        return y * y * z * w - k(4) * x * x * x * z + k(3) * alpha * x * z * w * w + beta * z * w * w * w +
               gamma * x * z * z * w - (delta * z * z * w * w + w * w * w * w) / k(2);
    }
};

template <class R>
IgusaPoint<R> si_igusa(const SIQuartic<R>& q)
{
    if (is_zero(q.gamma))
        throw std::domain_error("gamma = 0: the associated curve is degenerate");
    auto k = [&](long n) { return lift(q.gamma, n); };
    R g2 = q.gamma * q.gamma;
    return {k(24) * q.delta, k(36) * q.alpha * g2, k(72) * (k(4) * q.alpha * q.delta + q.beta * q.gamma) * g2,
            k(4) * g2 * g2 * g2};
}

// [alpha:beta:gamma:delta] = [psi4 : psi6 : 2^12 3^5 chi10 : 2^12 3^6 chi12] in P(2,3,5,6).
template <class R>
SIQuartic<R> si_from_igusa(const IgusaPoint<R>& I)
{
    SiegelFormValues<R> s = siegel_from_igusa(I);
    auto k = [&](long n) { return lift(s.chi10, n); };
    return {s.psi4, s.psi6, k(4096L * 243L) * s.chi10, k(4096L * 729L) * s.chi12};
}

template <class R>
WeightedProjPoint<R> si_weighted(const SIQuartic<R>& q)
{
    return WeightedProjPoint<R>({q.alpha, q.beta, q.gamma, q.delta}, {2, 3, 5, 6});
}

// Absolute invariants used as canonical keys; distinguishes the J2 = 0 strata.
template <class R>
std::vector<R> absolute_invariants(const IgusaPoint<R>& I)
{
    if (is_zero(I.J10))
        throw std::domain_error("J10 = 0");
    R zero = lift(I.J10, 0);
    if (!is_zero(I.J2))
        return {lift(zero, 1), power(I.J2, 5) / I.J10, power(I.J2, 3) * I.J4 / I.J10, I.J2 * I.J2 * I.J6 / I.J10};
    if (!is_zero(I.J4))
        return {lift(zero, 2), power(I.J4, 5) / (I.J10 * I.J10), I.J4 * I.J6 / I.J10, zero};
    if (!is_zero(I.J6))
        return {lift(zero, 3), power(I.J10, 3) / power(I.J6, 5), zero, zero};
    return {lift(zero, 4), zero, zero, zero};
}

}  // namespace g2
