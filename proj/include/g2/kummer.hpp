#pragma once

#include "g2/curves.hpp"
#include "g2/theta.hpp"

#include <variant>

namespace g2 {

template <class R>
using Point4 = std::array<R, 4>;

template <class R>
bool all_zero(const Point4<R>& p)
{
    return std::all_of(p.begin(), p.end(), [](const R& v) { return is_zero(v); });
}

// Exact gradient of a polynomial of degree <= 4 through f'(0) = (8(f(1) - f(-1)) - (f(2) - f(-2)))/12.
template <class R, class F>
Point4<R> gradient4(const F& f, const Point4<R>& p)
{
    Point4<R> g;
    R twelve = lift(p[0], 12);
    for (int i = 0; i < 4; ++i) {
        auto at = [&](long t) {
            Point4<R> q = p;
            q[i] = q[i] + lift(p[0], t);
            return f(q);
        };
        g[i] = (lift(p[0], 8) * (at(1) - at(-1)) - (at(2) - at(-2))) / twelve;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Shioda sextic and odd tropes

// Odd tropes in the order T1..T3 = l_i^2 z1 - l_i z2 + z3, T4 = z3, T5 = z1 - z2 + z3, T6 = z1,
// which is the order satisfying the three linear trope relations.
template <class R>
std::array<R, 6> odd_tropes(const std::array<R, 3>& l, const R& z1, const R& z2, const R& z3)
{
    std::array<R, 6> t;
    for (int i = 0; i < 3; ++i)
        t[i] = l[i] * l[i] * z1 - l[i] * z2 + z3;
    t[3] = z3;
    t[4] = z1 - z2 + z3;
    t[5] = z1;
    return t;
}

// Coefficient vectors (of z1, z2, z3) of the six odd tropes.
template <class R>
std::array<std::array<R, 3>, 6> odd_trope_lines(const std::array<R, 3>& l)
{
    R zero = lift(l[0], 0), one = lift(l[0], 1);
    std::array<std::array<R, 3>, 6> out;
    for (int i = 0; i < 3; ++i)
        out[i] = {l[i] * l[i], -l[i], one};
    out[3] = {zero, zero, one};
    out[4] = {one, -one, one};
    out[5] = {one, zero, zero};
    return out;
}

// A line a z1 + b z2 + c z3 = 0 is tangent to z2^2 - 4 z1 z3 = 0 iff b^2 - a c = 0.
template <class R>
R conic_tangency(const std::array<R, 3>& line)
{
    return line[1] * line[1] - line[0] * line[2];
}

// Residuals T_i - ((1 - l_i) T4 + l_i T5 + l_i (l_i - 1) T6) for i = 1..3.
template <class R>
std::array<R, 3> trope_relations(const std::array<R, 3>& l, const std::array<R, 6>& T)
{
    R one = lift(l[0], 1);
    std::array<R, 3> r;
    for (int i = 0; i < 3; ++i)
        r[i] = T[i] - ((one - l[i]) * T[3] + l[i] * T[4] + l[i] * (l[i] - one) * T[5]);
    return r;
}

template <class R>
struct ShiodaSexticModel {
    std::array<R, 3> l;

    R branch(const R& z1, const R& z2, const R& z3) const
    {
        auto t = odd_tropes(l, z1, z2, z3);
        R p = t[0];
        for (int i = 1; i < 6; ++i)
            p = p * t[i];
        return p;
    }
    R eval(const R& z1, const R& z2, const R& z3, const R& zt4) const { return zt4 * zt4 - branch(z1, z2, z3); }
};

// ---------------------------------------------------------------------------
// Cassels-Flynn and Baker quartics

template <class R>
struct LValues {
    R L1, L2, L3, L4;
};

template <class R>
LValues<R> l_values(const std::array<R, 3>& l)
{
    R one = lift(l[0], 1);
    R s1 = l[0] + l[1] + l[2], s2 = l[0] * l[1] + l[0] * l[2] + l[1] * l[2], s3 = l[0] * l[1] * l[2];
    return {s3, s2 + s3, s1 + s2, one + s1};
}

template <class R>
struct CasselsFlynnModel {
    std::array<R, 3> l;
    LValues<R> L;

    explicit CasselsFlynnModel(std::array<R, 3> lam) : l(lam), L(l_values(lam)) {}

    R K2(const R& z1, const R& z2, const R& z3) const { return z2 * z2 - lift(z1, 4) * z1 * z3; }
    R K1(const R& z1, const R& z2, const R& z3) const
    {
        auto k = [&](long n) { return lift(z1, n); };
        return -k(2) * z2 * z3 * z3 - k(2) * L.L1 * z1 * z1 * z2 + k(4) * L.L2 * z1 * z1 * z3 -
               k(2) * L.L3 * z1 * z2 * z3 + k(4) * L.L4 * z1 * z3 * z3;
    }
    R K0(const R& z1, const R& z2, const R& z3) const
    {
        auto k = [&](long n) { return lift(z1, n); };
        R z1s = z1 * z1, z3s = z3 * z3;
        return L.L1 * L.L1 * z1s * z1s - k(2) * L.L1 * L.L3 * z1s * z1 * z3 +
               (k(2) * L.L1 - k(4) * L.L2 * L.L4 + L.L3 * L.L3) * z1s * z3s + k(4) * L.L1 * L.L4 * z1s * z2 * z3 +
               k(2) * (-k(2) * L.L1 * z2 * z2 * z3 + k(2) * L.L2 * z2 * z3s - L.L3 * z3s * z3) * z1 + z3s * z3s;
    }
    R eval(const Point4<R>& z) const
    {
        return K2(z[0], z[1], z[2]) * z[3] * z[3] + K1(z[0], z[1], z[2]) * z[3] + K0(z[0], z[1], z[2]);
    }
};

template <class R>
struct BakerModel {
    LValues<R> L;

    std::array<std::array<R, 4>, 4> matrix(const Point4<R>& p) const
    {
        const R &W = p[0], &X = p[1], &Y = p[2], &Z = p[3];
        R zero = lift(W, 0), two = lift(W, 2);
        return {{{zero, L.L1 * W, -Z, Y},
                 {L.L1 * W, two * L.L2 * W + two * Z, L.L3 * W - Y, X},
                 {-Z, L.L3 * W - Y, two * L.L4 * W - two * X, W},
                 {Y, X, W, zero}}};
    }
    R eval(const Point4<R>& p) const
    {
        auto m = matrix(p);
        std::vector<std::vector<R>> v(4);
        for (int i = 0; i < 4; ++i)
            v[i] = std::vector<R>(m[i].begin(), m[i].end());
        return determinant(v);
    }
};

// Shioda (z1, z2, z3, z~4) to Baker [W : X : Y : Z].
template <class R>
Point4<R> shioda_to_baker(const std::array<R, 3>& l, const R& z1, const R& z2, const R& z3, const R& zt4)
{
    LValues<R> L = l_values(l);
    auto k = [&](long n) { return lift(z1, n); };
    R K2 = z2 * z2 - k(4) * z1 * z3;
    R Z = k(2) * zt4 - (L.L1 * z1 * z1 * z2 - k(2) * L.L2 * z1 * z1 * z3 + L.L3 * z1 * z2 * z3 -
                          k(2) * L.L4 * z1 * z3 * z3 + z2 * z3 * z3);
    return {K2 * z1, K2 * z2, K2 * z3, Z};
}

// Baker [W:X:Y:Z] = [K2 z1 : K2 z2 : K2 z3 : K2 z4 + K1] inverted projectively.
template <class R>
Point4<R> baker_to_cf(const CasselsFlynnModel<R>& cf, const Point4<R>& b)
{
    R k = cf.K2(b[0], b[1], b[2]);
    if (is_zero(k))
        throw std::domain_error("Baker to Cassels-Flynn: K2 vanishes (tangent-conic locus)");
    return {k * b[0], k * b[1], k * b[2], k * b[3] - cf.K1(b[0], b[1], b[2])};
}

template <class R>
Point4<R> cf_to_baker(const CasselsFlynnModel<R>& cf, const Point4<R>& z)
{
    R k2 = cf.K2(z[0], z[1], z[2]);
    return {k2 * z[0], k2 * z[1], k2 * z[2], k2 * z[3] + cf.K1(z[0], z[1], z[2])};
}

// z~4 = (2 K2 z4 + K1)/4 read as z4 = (4 z~4 - K1)/(2 K2), written projectively.
template <class R>
Point4<R> shioda_to_cf(const CasselsFlynnModel<R>& cf, const R& z1, const R& z2, const R& z3, const R& zt4)
{
    R k2 = cf.K2(z1, z2, z3);
    if (is_zero(k2))
        throw std::domain_error("Shioda to Cassels-Flynn: K2 vanishes (tangent-conic locus)");
    R two = lift(z1, 2);
    return {two * k2 * z1, two * k2 * z2, two * k2 * z3, lift(z1, 4) * zt4 - cf.K1(z1, z2, z3)};
}

template <class R>
R cf_to_shioda_zt4(const CasselsFlynnModel<R>& cf, const Point4<R>& z)
{
    return (lift(z[0], 2) * cf.K2(z[0], z[1], z[2]) * z[3] + cf.K1(z[0], z[1], z[2])) / lift(z[0], 4);
}

// Point (x : y : z) on y^2 = x z (x - z)(x - l1 z)(x - l2 z)(x - l3 z); z = 0 is the point at infinity.
template <class R>
struct CurvePoint {
    R x, y, z;
};

template <class R>
bool on_rosenhain_curve(const std::array<R, 3>& l, const CurvePoint<R>& P)
{
    BinaryForm<R> f = rosenhain_sextic(l[0], l[1], l[2]);
    if (is_zero(P.z))
        return is_zero(P.y) && !is_zero(P.x);
    R zi = inv(P.z);
    R x = P.x * zi, y = P.y * zi * zi * zi;
    return y * y == f.eval(x, lift(x, 1));
}

template <class R>
struct KummerImage {
    R z1, z2, z3, zt4;                // Shioda coordinates
    std::optional<Point4<R>> cf;       // Cassels-Flynn point, absent when K2 = 0
    bool conjugate_pair = false;       // Q is the hyperelliptic conjugate of P
};

template <class R>
KummerImage<R> kummer_map(const std::array<R, 3>& l, const CurvePoint<R>& P, const CurvePoint<R>& Q)
{
    if (!on_rosenhain_curve(l, P) || !on_rosenhain_curve(l, Q))
        throw std::invalid_argument("kummer_map: point not on the Rosenhain curve");
    KummerImage<R> out;
    out.z1 = P.z * Q.z;
    out.z2 = P.x * Q.z + Q.x * P.z;
    out.z3 = P.x * Q.x;
    out.zt4 = P.y * Q.y;
    out.conjugate_pair = P.x * Q.z == Q.x * P.z && P.y * power(Q.z, 3) == -(Q.y * power(P.z, 3));
    CasselsFlynnModel<R> cf(l);
    if (!is_zero(cf.K2(out.z1, out.z2, out.z3)))
        out.cf = shioda_to_cf(cf, out.z1, out.z2, out.z3, out.zt4);
    return out;
}

// ---------------------------------------------------------------------------
// Hudson, Goepel and Rosenhain quartics

template <class R>
struct HudsonModel {
    R A, B, C, D;

    R eval(const Point4<R>& p) const
    {
        const R &w = p[0], &x = p[1], &y = p[2], &z = p[3];
        R w2 = w * w, x2 = x * x, y2 = y * y, z2 = z * z;
        return w2 * w2 + x2 * x2 + y2 * y2 + z2 * z2 + lift(w, 2) * D * w * x * y * z - A * (w2 * z2 + x2 * y2) -
               B * (w2 * x2 + y2 * z2) - C * (w2 * y2 + x2 * z2);
    }
    // D^2 - (A^2 + B^2 + C^2 + ABC - 4)
    R constraint() const { return D * D - (A * A + B * B + C * C + A * B * C - lift(A, 4)); }
};

template <class R>
struct GoepelModel {
    R alpha, beta, gamma, delta2;  // only delta^2 enters the quartic

    R phi(const Point4<R>& p) const
    {
        const R &P = p[0], &Q = p[1], &Rr = p[2], &S = p[3];
        return P * P + Q * Q + Rr * Rr + S * S - alpha * (P * S + Q * Rr) - beta * (P * Q + Rr * S) -
               gamma * (P * Rr + Q * S);
    }
    R eval(const Point4<R>& p) const
    {
        R f = phi(p);
        return f * f - lift(f, 4) * delta2 * p[0] * p[1] * p[2] * p[3];
    }
    R constraint() const
    {
        return delta2 - (alpha * alpha + beta * beta + gamma * gamma + alpha * beta * gamma - lift(alpha, 4));
    }
};

template <class R>
struct RosenhainQuarticModel {
    R a, b, c, d2;

    R eval(const Point4<R>& Y) const
    {
        const R &Y0 = Y[0], &Y1 = Y[1], &Y2 = Y[2], &Y3 = Y[3];
        R two = lift(Y0, 2);
        R s01 = Y0 * Y0 * Y1 * Y1 + Y2 * Y2 * Y3 * Y3;
        R s02 = Y0 * Y0 * Y2 * Y2 + Y1 * Y1 * Y3 * Y3;
        R s03 = Y0 * Y0 * Y3 * Y3 + Y1 * Y1 * Y2 * Y2;
        return a * a * s01 + b * b * s02 + c * c * s03 + two * a * b * (Y0 * Y1 - Y2 * Y3) * (Y0 * Y2 + Y1 * Y3) -
               two * a * c * (Y0 * Y1 + Y2 * Y3) * (Y0 * Y3 + Y1 * Y2) +
               two * b * c * (Y0 * Y2 - Y1 * Y3) * (Y0 * Y3 - Y1 * Y2) + d2 * Y0 * Y1 * Y2 * Y3;
    }
};

// [Y0 : Y1 : Y2 : Y3] -> [Y1 Y2 Y3 : Y0 Y2 Y3 : Y0 Y1 Y3 : Y0 Y1 Y2]
template <class R>
Point4<R> cremona(const Point4<R>& Y)
{
    return {Y[1] * Y[2] * Y[3], Y[0] * Y[2] * Y[3], Y[0] * Y[1] * Y[3], Y[0] * Y[1] * Y[2]};
}

// Three quadrics t_i^2 = (1 - l_i) t4^2 + l_i t5^2 + l_i (l_i - 1) t6^2 in P^5.
template <class R>
struct ThreeQuadricsModel {
    std::array<R, 3> l;

    std::array<R, 3> eval(const std::array<R, 6>& t) const
    {
        std::array<R, 6> T;
        for (int i = 0; i < 6; ++i)
            T[i] = t[i] * t[i];
        return trope_relations(l, T);
    }
};

template <class R>
using KummerModel = std::variant<ShiodaSexticModel<R>, CasselsFlynnModel<R>, BakerModel<R>, HudsonModel<R>,
                                 GoepelModel<R>, RosenhainQuarticModel<R>, ThreeQuadricsModel<R>>;

inline const char* kummer_model_name(size_t index)
{
    static const char* names[] = {"shioda", "cassels_flynn", "baker", "hudson", "goepel", "rosenhain", "three_quadrics"};
    return names[index];
}

// Defining polynomial at a point; the three-quadric model returns the sum of squares of its residuals'
// nonzero pattern collapsed to the first nonzero residual.
template <class R>
R model_eval(const KummerModel<R>& m, const std::vector<R>& point)
{
    if (std::all_of(point.begin(), point.end(), [](const R& v) { return is_zero(v); }))
        throw std::invalid_argument("model_eval: all-zero point");
    return std::visit(
        [&](const auto& model) -> R {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, ShiodaSexticModel<R>>) {
                if (point.size() != 4)
                    throw std::invalid_argument("Shioda sextic needs (z1, z2, z3, z~4)");
                return model.eval(point[0], point[1], point[2], point[3]);
            } else if constexpr (std::is_same_v<M, ThreeQuadricsModel<R>>) {
                if (point.size() != 6)
                    throw std::invalid_argument("three-quadrics model needs a point of P^5");
                std::array<R, 6> t;
                std::copy(point.begin(), point.end(), t.begin());
                for (const R& r : model.eval(t))
                    if (!is_zero(r))
                        return r;
                return lift(point[0], 0);
            } else {
                if (point.size() != 4)
                    throw std::invalid_argument("quartic models need a point of P^3");
                return model.eval(Point4<R>{point[0], point[1], point[2], point[3]});
            }
        },
        m);
}

// ---------------------------------------------------------------------------
// Parameter dictionaries

namespace detail {
// A, B, C, D as rational functions of a seed [w0 : x0 : y0 : z0].
template <class R>
std::array<R, 4> abcd_from_seed(const Point4<R>& s)
{
    R w = s[0] * s[0], x = s[1] * s[1], y = s[2] * s[2], z = s[3] * s[3];
    R dA = w * z - x * y, dB = w * x - y * z, dC = w * y - x * z;
    if (is_zero(dA) || is_zero(dB) || is_zero(dC))
        throw std::domain_error("seed parameters: vanishing denominator");
    R prod = lift(w, 1);
    for (int e : {1, -1})
        for (int f : {1, -1}) {
            R E = lift(w, e), F = lift(w, f);
            prod = prod * (w + E * x + F * y + E * F * z);
        }
    return {(w * w - x * x - y * y + z * z) / dA, (w * w + x * x - y * y - z * z) / dB,
            (w * w - x * x + y * y - z * z) / dC, s[0] * s[1] * s[2] * s[3] * prod / (dA * dB * dC)};
}
}  // namespace detail

template <class R>
HudsonModel<R> hudson_from_seed(const Point4<R>& s)
{
    auto p = detail::abcd_from_seed(s);
    return {p[0], p[1], p[2], p[3]};
}

// Goepel parameters matched to a Hudson seed so that the linear map of hudson_to_goepel applies.
template <class R>
GoepelModel<R> goepel_from_seed(const Point4<R>& s)
{
    R w = s[0] * s[0], x = s[1] * s[1], y = s[2] * s[2], z = s[3] * s[3];
    R two = lift(w, 2);
    R dy = w * y - x * z, dx = w * x - y * z, dz = w * z - x * y;
    if (is_zero(dx) || is_zero(dy) || is_zero(dz))
        throw std::domain_error("seed parameters: vanishing denominator");
    R prod = lift(w, 1);
    for (int e : {1, -1})
        for (int f : {1, -1}) {
            R E = lift(w, e), F = lift(w, f);
            prod = prod * (w + E * x + F * y + E * F * z);
        }
    R d2 = lift(w, 16) * w * w * x * x * y * y * z * z * prod / (dy * dy * dx * dx * dz * dz);
    return {two * (w * y + x * z) / dy, two * (w * x + y * z) / dx, two * (w * z + x * y) / dz, d2};
}

// Rosenhain quartic parameters with T the seed (the theta parameterization uses T = Theta nulls).
template <class R>
RosenhainQuarticModel<R> rosenhainq_from_seed(const Point4<R>& T)
{
    auto k = [&](long n) { return lift(T[0], n); };
    R s1 = T[0] * T[0], s2 = T[1] * T[1], s3 = T[2] * T[2], s4 = T[3] * T[3];
    R S = s1 + s2 + s3 + s4, Pm = s1 - s2 - s3 + s4, Qm = s1 + s2 - s3 - s4, Rm = s1 - s2 + s3 - s4;
    R a = (k(2) * T[0] * T[3] - k(2) * T[1] * T[2]) * (k(2) * T[0] * T[3] + k(2) * T[1] * T[2]) *
          (k(2) * T[0] * T[2] + k(2) * T[1] * T[3]);
    R b = Qm * Rm * (k(2) * T[0] * T[1] - k(2) * T[2] * T[3]);
    R c = Pm * S * (k(2) * T[0] * T[1] + k(2) * T[2] * T[3]);
    R d2 = k(256) * T[0] * T[1] * T[3] * T[2] * (s1 * s4 - s2 * s3) * (s1 * s1 - s2 * s2 - s3 * s3 + s4 * s4) +
           k(8) * (s1 + s4) * (s2 + s3) * S * S * Pm * Pm + k(8) * (s1 - s4) * (s2 - s3) * Qm * Qm * Rm * Rm -
           k(32) * (s1 * s2 + s3 * s4) * S * Rm * Pm * Qm;
    return {a, b, c, d2};
}

// Goepel parameters from theta_1..theta_4 at tau: the seed formulas evaluated at the even nulls.
template <class R>
GoepelModel<R> goepel_from_theta(const Point4<R>& th)
{
    auto p = detail::abcd_from_seed(th);
    return {p[0], p[1], p[2], p[3] * p[3]};
}

template <class R>
R goepel_delta_from_theta(const Point4<R>& th)
{
    return detail::abcd_from_seed(th)[3];
}

template <class R>
HudsonModel<R> hudson_from_rosenhain(const std::array<R, 3>& l)
{
    const R &l1 = l[0], &l2 = l[1], &l3 = l[2];
    R one = lift(l1, 1), two = lift(l1, 2), four = lift(l1, 4);
    if (l1 == one || l2 == l3)
        throw std::domain_error("Hudson parameters need l1 != 1 and l2 != l3");
    R den = (l2 - l3) * (l1 - one);
    return {two * (l1 + one) / (l1 - one),
            two * (l1 * l2 + l1 * l3 - two * l2 * l3 - two * l1 + l2 + l3) / den,
            two * (l3 + l2) / (l3 - l2), four * (l1 - l2 * l3) / den};
}

// Goepel parameters from the Rosenhain roots L of the isogenous curve; delta is returned separately.
template <class R>
GoepelModel<R> goepel_from_rosenhain(const std::array<R, 3>& L)
{
    HudsonModel<R> h = hudson_from_rosenhain(L);
    return {h.A, h.B, h.C, h.D * h.D};
}

template <class R>
R goepel_delta_from_rosenhain(const std::array<R, 3>& L)
{
    R one = lift(L[0], 1);
    return lift(L[0], 4) * (L[0] - L[1] * L[2]) / ((L[0] - one) * (L[2] - L[1]));
}

// ---------------------------------------------------------------------------
// Transformations between the even models

// P = w0 w + x0 x + y0 y + z0 z, Q = w0 w + x0 x - y0 y - z0 z, R = w0 w - x0 x - y0 y + z0 z,
// S = w0 w - x0 x + y0 y - z0 z.
template <class R>
Point4<R> hudson_to_goepel(const Point4<R>& s, const Point4<R>& v)
{
    R a = s[0] * v[0], b = s[1] * v[1], c = s[2] * v[2], d = s[3] * v[3];
    return {a + b + c + d, a + b - c - d, a - b - c + d, a - b + c - d};
}

namespace detail {
template <class R>
std::array<std::array<R, 4>, 4> rosenhain_transform_matrix(const Point4<R>& s)
{
    const R &w = s[0], &x = s[1], &y = s[2], &z = s[3];
    return {{{w, x, y, z}, {w, x, -y, -z}, {z, y, x, w}, {z, y, -x, -w}}};
}

template <class R>
Point4<R> solve4(std::array<std::array<R, 4>, 4> m, Point4<R> rhs)
{
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        double best = 0;
        for (int r = c; r < 4; ++r)
            if (pivot_weight(m[r][c]) > best) {
                best = pivot_weight(m[r][c]);
                piv = r;
            }
        if (piv < 0)
            throw std::domain_error("singular linear transformation");
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        R pinv = inv(m[c][c]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || is_zero(m[r][c]))
                continue;
            R f = m[r][c] * pinv;
            for (int k = c; k < 4; ++k)
                m[r][k] = m[r][k] - f * m[c][k];
            rhs[r] = rhs[r] - f * rhs[c];
        }
    }
    for (int r = 0; r < 4; ++r)
        rhs[r] = rhs[r] / m[r][r];
    return rhs;
}
}  // namespace detail

template <class R>
Point4<R> hudson_to_rosenhainq(const Point4<R>& s, const Point4<R>& v)
{
    auto m = detail::rosenhain_transform_matrix(s);
    Point4<R> out;
    for (int i = 0; i < 4; ++i)
        out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] + m[i][3] * v[3];
    return out;
}

template <class R>
Point4<R> rosenhainq_to_hudson(const Point4<R>& s, const Point4<R>& Y)
{
    return detail::solve4(detail::rosenhain_transform_matrix(s), Y);
}

template <class R>
Point4<R> goepel_to_hudson(const Point4<R>& s, const Point4<R>& g)
{
    std::array<std::array<R, 4>, 4> m = {{{s[0], s[1], s[2], s[3]},
                                          {s[0], s[1], -s[2], -s[3]},
                                          {s[0], -s[1], -s[2], s[3]},
                                          {s[0], -s[1], s[2], -s[3]}}};
    return detail::solve4(m, g);
}

struct SquaringFlags {
    bool coordinate_plane = false;  // the fibre through this point has 2 or 4 points instead of 8
};

// [w : x : y : z] -> [w^2 : x^2 : y^2 : z^2] onto the Goepel quartic with (alpha, beta, gamma, delta) = (A, B, C, D).
template <class R>
std::pair<Point4<R>, GoepelModel<R>> squaring_isogeny(const HudsonModel<R>& H, const Point4<R>& v,
                                                      SquaringFlags* flags = nullptr)
{
    if (all_zero(v))
        throw std::invalid_argument("squaring_isogeny: all-zero point");
    if (flags)
        flags->coordinate_plane = std::any_of(v.begin(), v.end(), [](const R& c) { return is_zero(c); });
    return {{v[0] * v[0], v[1] * v[1], v[2] * v[2], v[3] * v[3]}, GoepelModel<R>{H.A, H.B, H.C, H.D * H.D}};
}

// ---------------------------------------------------------------------------
// Nodes

template <class R>
std::vector<Point4<R>> hudson_nodes(const Point4<R>& s)
{
    const R &w = s[0], &x = s[1], &y = s[2], &z = s[3];
    return {{w, x, y, z},    {-w, -x, y, z},  {-w, x, -y, z},  {-w, x, y, -z},  {x, w, z, y},   {-x, -w, z, y},
            {-x, w, -z, y},  {-x, w, z, -y},  {y, z, w, x},    {-y, -z, w, x},  {-y, z, -w, x}, {-y, z, w, -x},
            {z, y, x, w},    {-z, -y, x, w},  {-z, y, -x, w},  {-z, y, x, -w}};
}

// Nodes of the Goepel quartic attached to the seed; these are the images of the Hudson nodes
// under hudson_to_goepel.
template <class R>
std::vector<Point4<R>> goepel_nodes(const Point4<R>& s)
{
    const R &w = s[0], &x = s[1], &y = s[2], &z = s[3];
    R ww = w * w, xx = x * x, yy = y * y, zz = z * z, zero = lift(w, 0);
    R p2 = ww + xx + yy + zz, q2 = ww + xx - yy - zz, r2 = ww - xx + yy - zz, s2 = ww - xx - yy + zz;
    R wx = w * x, yz = y * z, wz = w * z, xy = x * y, wy = w * y, xz = x * z;
    return {{p2, q2, s2, r2},
            {q2, p2, r2, s2},
            {s2, r2, p2, q2},
            {r2, s2, q2, p2},
            {wx + yz, wx - yz, zero, zero},
            {wx - yz, wx + yz, zero, zero},
            {zero, zero, wx + yz, wx - yz},
            {zero, zero, wx - yz, wx + yz},
            {wz + xy, zero, wz - xy, zero},
            {zero, wz + xy, zero, wz - xy},
            {wz - xy, zero, wz + xy, zero},
            {zero, wz - xy, zero, wz + xy},
            {wy + xz, zero, zero, wy - xz},
            {zero, wy + xz, wy - xz, zero},
            {zero, wy - xz, wy + xz, zero},
            {wy - xz, zero, zero, wy + xz}};
}

// Singular points of the Cassels-Flynn quartic: they lie over the singular points of the branch
// sextic (pairwise intersections of the six odd tropes) and at [0:0:0:1]; each candidate is kept
// only if the gradient vanishes there.
template <class R>
std::vector<Point4<R>> cf_nodes(const CasselsFlynnModel<R>& cf)
{
    R zero = lift(cf.l[0], 0), one = lift(cf.l[0], 1);
    auto F = [&](const Point4<R>& p) { return cf.eval(p); };
    auto singular = [&](const Point4<R>& p) {
        if (!is_zero(F(p)))
            return false;
        for (const R& g : gradient4<R>(F, p))
            if (!is_zero(g))
                return false;
        return true;
    };
    std::vector<Point4<R>> out;
    Point4<R> origin{zero, zero, zero, one};
    if (singular(origin))
        out.push_back(origin);
    auto lines = odd_trope_lines(cf.l);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            const auto &a = lines[i], &b = lines[j];
            std::array<R, 3> z = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
            R k2 = cf.K2(z[0], z[1], z[2]);
            if (is_zero(k2))
                continue;
            R k1 = cf.K1(z[0], z[1], z[2]);
            Point4<R> p{lift(zero, 2) * k2 * z[0], lift(zero, 2) * k2 * z[1], lift(zero, 2) * k2 * z[2], -k1};
            if (singular(p))
                out.push_back(p);
        }
    return out;
}

template <class R>
bool projectively_equal(const Point4<R>& a, const Point4<R>& b)
{
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a[i] * b[j] != a[j] * b[i])
                return false;
    return !all_zero(a) && !all_zero(b);
}

template <class R>
bool is_singular_point(const std::function<R(const Point4<R>&)>& F, const Point4<R>& p)
{
    if (!is_zero(F(p)))
        return false;
    for (const R& g : gradient4<R>(F, p))
        if (!is_zero(g))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Theta parameterizations over C

struct ThetaCoordinateResiduals {
    Real goepel, hudson, rosenhain;
};

ThetaCoordinateResiduals theta_coordinate_checks(const SiegelPoint& tau, const CVec2& z, double tol = 1e-12);

}  // namespace g2
