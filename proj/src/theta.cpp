#include "g2/theta.hpp"

#include <cmath>
#include <limits>

namespace g2 {

namespace {

Rational half() { return Rational(1, 2); }

Real rel_diff(const Complex& x, const Complex& y)
{
    Real s = std::max(abs(x), abs(y));
    if (s == 0)
        return Real(0);
    return abs(x - y) / s;
}

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

}  // namespace

SiegelPoint::SiegelPoint(Complex a, Complex b, Complex c) : t11(std::move(a)), t12(std::move(b)), t22(std::move(c))
{
    if (!is_finite(t11) || !is_finite(t12) || !is_finite(t22))
        throw std::invalid_argument("period matrix entries must be finite");
    if (!(t11.im > 0) || !(t11.im * t22.im - t12.im * t12.im > 0))
        throw std::invalid_argument("Im(tau) is not positive definite");
}

SiegelPoint SiegelPoint::scaled(const Real& s) const
{
    Complex k(s);
    return SiegelPoint(t11 * k, t12 * k, t22 * k);
}

SiegelPoint SiegelPoint::neg_inverse() const
{
    Complex det = t11 * t22 - t12 * t12;
    return SiegelPoint(-t22 / det, t12 / det, -t11 / det);
}

SiegelPoint SiegelPoint::neg_conj() const { return SiegelPoint(-conj(t11), -conj(t12), -conj(t22)); }

Real SiegelPoint::min_imag_eigenvalue() const
{
    Real tr = t11.im + t22.im, det = t11.im * t22.im - t12.im * t12.im;
    return (tr - boost::multiprecision::sqrt(tr * tr - 4 * det)) / 2;
}

SiegelPoint random_siegel(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> re(-0.5, 0.5), ev(lo, hi), ang(0.0, 3.14159265358979323846);
    double e1 = ev(rng), e2 = ev(rng), t = ang(rng);
    double c = std::cos(t), s = std::sin(t);
    double i11 = e1 * c * c + e2 * s * s, i12 = (e1 - e2) * c * s, i22 = e1 * s * s + e2 * c * c;
    double r11 = re(rng), r12 = re(rng), r22 = re(rng);
    return SiegelPoint(Complex(r11, i11), Complex(r12, i12), Complex(r22, i22));
}

CVec2 random_cvec2(std::mt19937_64& rng, double scale)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    return {Complex(a, b), Complex(c, d)};
}

int ThetaChar::parity() const
{
    Rational s = 4 * (a[0] * b[0] + a[1] * b[1]);
    if (s.get_den() != 1)
        throw std::invalid_argument("parity needs half-integral characteristics");
    Integer r = s.get_num() % 2;
    return r == 0 ? 0 : 1;
}

std::string ThetaChar::str() const
{
    return "[(" + to_string(a[0]) + "," + to_string(a[1]) + ");(" + to_string(b[0]) + "," + to_string(b[1]) + ")]";
}

const std::array<ThetaChar, 16>& theta_table()
{
    static const std::array<ThetaChar, 16> table = [] {
        Rational o(0), h = half();
        using P = std::array<Rational, 2>;
        return std::array<ThetaChar, 16>{{
            {P{o, o}, P{o, o}},  // theta_1
            {P{o, o}, P{h, h}},  // theta_2
            {P{o, o}, P{h, o}},  // theta_3
            {P{o, o}, P{o, h}},  // theta_4
            {P{h, o}, P{o, o}},  // theta_5
            {P{h, o}, P{o, h}},  // theta_6
            {P{o, h}, P{o, o}},  // theta_7
            {P{h, h}, P{o, o}},  // theta_8
            {P{o, h}, P{h, o}},  // theta_9
            {P{h, h}, P{h, h}},  // theta_10
            {P{h, o}, P{h, o}},  // theta_11 (odd)
            {P{o, h}, P{h, h}},  // theta_12 (odd)
            {P{h, o}, P{h, h}},  // theta_13 (odd)
            {P{o, h}, P{o, h}},  // theta_14 (odd)
            {P{h, h}, P{h, o}},  // theta_15 (odd)
            {P{h, h}, P{o, h}},  // theta_16 (odd)
        }};
    }();
    return table;
}

const std::array<ThetaChar, 4>& dual_table()
{
    static const std::array<ThetaChar, 4> table = [] {
        Rational o(0), h = half();
        using P = std::array<Rational, 2>;
        return std::array<ThetaChar, 4>{{
            {P{o, o}, P{o, o}},
            {P{h, h}, P{o, o}},
            {P{h, o}, P{o, o}},
            {P{o, h}, P{o, o}},
        }};
    }();
    return table;
}

const std::array<std::array<int, 4>, 4>& doubling_signs()
{
    static const std::array<std::array<int, 4>, 4> s = {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}}};
    return s;
}

namespace {

struct Truncation {
    Real c1, c2;  // centre of the Gaussian in the lattice variable m = n + a
    Real radius;
};

// Tail bound: lattice points with |m - c| in [k, k+1) number at most 16(k+1), and each term is at
// most E exp(-pi lambda_min k^2), where E = exp(pi v^T Y^{-1} v) is the envelope.
Truncation truncation(const CVec2& z, const SiegelPoint& tau, double tol)
{
    if (!(tol > 0))
        throw std::invalid_argument("theta tolerance must be positive");
    unsigned bits = static_cast<unsigned>(std::ceil(Real::default_precision() / 0.30102999566398120));
    if (tol < std::ldexp(1.0, -static_cast<int>(bits) + 8))
        throw std::domain_error("theta tolerance unachievable at the working precision");
    const Real &y11 = tau.t11.im, &y12 = tau.t12.im, &y22 = tau.t22.im;
    Real det = y11 * y22 - y12 * y12;
    const Real &v1 = z[0].im, &v2 = z[1].im;
    // c = -Y^{-1} v
    Real c1 = -(y22 * v1 - y12 * v2) / det, c2 = -(-y12 * v1 + y11 * v2) / det;
    double lam = to_double(tau.min_imag_eigenvalue());
    const double pi = 3.14159265358979323846;
    // Bound relative to max(1, E): sum_{k >= R} 16 (k+1) exp(-pi lam k^2) < tol.
    double R = 1;
    for (;; R += 1) {
        double s = 0;
        for (double k = R; k < R + 200; k += 1) {
            double t = 16 * (k + 1) * std::exp(-pi * lam * k * k);
            s += t;
            if (t < 1e-300)
                break;
        }
        if (s < tol)
            break;
        if (R > 1e6)
            throw std::domain_error("theta truncation radius diverges");
    }
    return {c1, c2, Real(R)};
}

}  // namespace

long theta_term_count(const CVec2& z, const SiegelPoint& tau, double tol)
{
    Truncation t = truncation(z, tau, tol);
    double r = to_double(t.radius);
    return static_cast<long>(std::ceil(3.14159265358979323846 * (r + 1) * (r + 1)));
}

Complex theta_value(const ThetaChar& c, const CVec2& z, const SiegelPoint& tau, double tol)
{
    Truncation t = truncation(z, tau, tol);
    Real a1 = to_real(c.a[0]), a2 = to_real(c.a[1]);
    Real b1 = to_real(c.b[0]), b2 = to_real(c.b[1]);
    Real pi = pi_real();
    Complex w1 = z[0] + Complex(b1), w2 = z[1] + Complex(b2);
    long lo1 = static_cast<long>(boost::multiprecision::ceil(t.c1 - a1 - t.radius).convert_to<double>());
    long hi1 = static_cast<long>(boost::multiprecision::floor(t.c1 - a1 + t.radius).convert_to<double>());
    long lo2 = static_cast<long>(boost::multiprecision::ceil(t.c2 - a2 - t.radius).convert_to<double>());
    long hi2 = static_cast<long>(boost::multiprecision::floor(t.c2 - a2 + t.radius).convert_to<double>());
    Real r2 = t.radius * t.radius;
    Complex sum(0);
    for (long n1 = lo1; n1 <= hi1; ++n1) {
        Real m1 = Real(n1) + a1;
        for (long n2 = lo2; n2 <= hi2; ++n2) {
            Real m2 = Real(n2) + a2;
            Real d1 = m1 - t.c1, d2 = m2 - t.c2;
            if (d1 * d1 + d2 * d2 > r2)
                continue;
            // pi i (m^T tau m) + 2 pi i m^T (z + b)
            Complex q = tau.t11 * Complex(m1 * m1) + tau.t12 * Complex(2 * m1 * m2) + tau.t22 * Complex(m2 * m2);
            Complex l = w1 * Complex(m1) + w2 * Complex(m2);
            Complex e = q + l * Complex(2);
            sum += cexp(Complex(-pi * e.im, pi * e.re));
        }
    }
    if (!is_finite(sum))
        throw std::domain_error("theta series overflowed");
    return sum;
}

bool ThetaNulls::chi10_degenerate(double tol) const
{
    Real mx = 0, mn = -1;
    for (const auto& v : th) {
        Real a = abs(v);
        mx = std::max(mx, a);
        if (mn < 0 || a < mn)
            mn = a;
    }
    return mn <= Real(tol) * mx;
}

ThetaNulls even_nulls(const SiegelPoint& tau, double tol)
{
    ThetaNulls n;
    CVec2 z0{Complex(0), Complex(0)};
    for (int i = 0; i < 10; ++i)
        n.th[i] = theta_value(theta_table()[i], z0, tau, tol);
    return n;
}

DualThetaNulls dual_nulls(const SiegelPoint& tau, double tol)
{
    DualThetaNulls d;
    CVec2 z0{Complex(0), Complex(0)};
    SiegelPoint t2 = tau.scaled(Real(2));
    for (int i = 0; i < 4; ++i)
        d.th[i] = theta_value(dual_table()[i], z0, t2, tol);
    return d;
}

ThetaNulls transposed_nulls(const SiegelPoint& tau2, double tol)
{
    ThetaNulls n;
    CVec2 z0{Complex(0), Complex(0)};
    for (int i = 0; i < 10; ++i)
        n.th[i] = theta_value(theta_table()[i].transposed(), z0, tau2, tol);
    return n;
}

std::array<Complex, 10> squares(const ThetaNulls& n)
{
    std::array<Complex, 10> s;
    for (int i = 0; i < 10; ++i)
        s[i] = n.th[i] * n.th[i];
    return s;
}

std::array<Complex, 3> thomae_lambdas(const std::array<Complex, 10>& s)
{
    auto S = [&](int i) -> const Complex& { return s[i - 1]; };
    if (is_zero(S(2)) || is_zero(S(4)) || is_zero(S(10)))
        throw std::domain_error("Rosenhain roots undefined: theta_2, theta_4 or theta_10 vanishes");
    return {S(1) * S(3) / (S(2) * S(4)), S(3) * S(8) / (S(4) * S(10)), S(1) * S(8) / (S(2) * S(10))};
}

std::array<Complex, 3> thomae_lambdas(const ThetaNulls& n) { return thomae_lambdas(squares(n)); }

std::array<Real, 6> picard_residuals(const ThetaNulls& n)
{
    auto s = squares(n);
    auto S = [&](int i) -> const Complex& { return s[i - 1]; };
    auto l = thomae_lambdas(s);
    Complex one(1);
    return {rel_diff(l[0] - one, S(7) * S(9) / (S(2) * S(4))),
            rel_diff(l[1] - one, S(5) * S(9) / (S(4) * S(10))),
            rel_diff(l[2] - one, S(5) * S(7) / (S(2) * S(10))),
            rel_diff(l[1] - l[0], S(3) * S(6) * S(9) / (S(2) * S(4) * S(10))),
            rel_diff(l[2] - l[0], S(1) * S(6) * S(7) / (S(2) * S(4) * S(10))),
            rel_diff(l[2] - l[1], S(5) * S(6) * S(8) / (S(2) * S(4) * S(10)))};
}

std::array<Real, 10> thomae_residuals(const ThetaNulls& n)
{
    auto l = thomae_lambdas(n);
    const Complex &l1 = l[0], &l2 = l[1], &l3 = l[2];
    Complex one(1);
    std::array<Complex, 10> rhs = {
        l3 * l1 * (l2 - one) * (l3 - l1),
        l2 * (l2 - one) * (l3 - l1),
        l2 * l1 * (l3 - one) * (l2 - l1),
        l3 * (l3 - one) * (l2 - l1),
        l1 * (l2 - one) * (l3 - one) * (l3 - l2),
        (l3 - l2) * (l3 - l1) * (l2 - l1),
        l2 * (l3 - one) * (l1 - one) * (l3 - l1),
        l2 * l3 * (l3 - l2) * (l1 - one),
        l3 * (l2 - one) * (l1 - one) * (l2 - l1),
        l1 * (l1 - one) * (l3 - l2),
    };
    std::array<Complex, 10> ratio;
    Complex mean(0);
    for (int i = 0; i < 10; ++i) {
        Complex f = n.th[i] * n.th[i];
        ratio[i] = f * f / rhs[i];
        mean += ratio[i];
    }
    mean = mean / Complex(10);
    std::array<Real, 10> res;
    for (int i = 0; i < 10; ++i)
        res[i] = abs(ratio[i] - mean) / abs(mean);
    return res;
}

Real frobenius_check(const ThetaNulls& n)
{
    auto s = squares(n);
    auto S = [&](int i) -> const Complex& { return s[i - 1]; };
    std::array<Real, 6> r = {
        rel_diff(S(5) * S(6), S(1) * S(4) - S(2) * S(3)),
        rel_diff(S(7) * S(9), S(1) * S(3) - S(2) * S(4)),
        rel_diff(S(8) * S(10), S(1) * S(2) - S(3) * S(4)),
        rel_diff(S(5) * S(5) + S(6) * S(6), S(1) * S(1) - S(2) * S(2) - S(3) * S(3) + S(4) * S(4)),
        rel_diff(S(7) * S(7) + S(9) * S(9), S(1) * S(1) - S(2) * S(2) + S(3) * S(3) - S(4) * S(4)),
        rel_diff(S(8) * S(8) + S(10) * S(10), S(1) * S(1) + S(2) * S(2) - S(3) * S(3) - S(4) * S(4)),
    };
    return *std::max_element(r.begin(), r.end());
}

std::array<Complex, 10> veronese_map(const std::array<Complex, 4>& T)
{
    std::array<Complex, 4> S;
    for (int j = 0; j < 4; ++j)
        S[j] = T[j] * T[j];
    std::array<Complex, 10> v;
    for (int i = 0; i < 4; ++i) {
        Complex acc(0);
        for (int j = 0; j < 4; ++j)
            acc += doubling_signs()[i][j] > 0 ? S[j] : -S[j];
        v[i] = acc;
    }
    Complex two(2);
    v[4] = two * (T[0] * T[2] + T[1] * T[3]);
    v[5] = two * (T[0] * T[2] - T[1] * T[3]);
    v[6] = two * (T[0] * T[3] + T[1] * T[2]);
    v[7] = two * (T[0] * T[1] + T[2] * T[3]);
    v[8] = two * (T[0] * T[3] - T[1] * T[2]);
    v[9] = two * (T[0] * T[1] - T[2] * T[3]);
    return v;
}

Real doubling_check(const ThetaNulls& n, const DualThetaNulls& d)
{
    auto v = veronese_map(d.th);
    Real r = 0;
    for (int i = 0; i < 10; ++i)
        r = std::max(r, rel_diff(n.th[i] * n.th[i], v[i]));
    return r;
}

Real doubling_z_check(const SiegelPoint& tau, const CVec2& z, double tol)
{
    SiegelPoint t2 = tau.scaled(Real(2));
    CVec2 z0{Complex(0), Complex(0)}, zz{z[0] * Complex(2), z[1] * Complex(2)};
    std::array<Complex, 4> th0, thz, Th0, Thz, Th2z;
    for (int i = 0; i < 4; ++i) {
        th0[i] = theta_value(theta_table()[i], z0, tau, tol);
        thz[i] = theta_value(theta_table()[i], z, tau, tol);
        Th0[i] = theta_value(dual_table()[i], z0, t2, tol);
        Thz[i] = theta_value(dual_table()[i], z, t2, tol);
        Th2z[i] = theta_value(dual_table()[i], zz, t2, tol);
    }
    const auto& e = doubling_signs();
    Real r = 0;
    for (int i = 0; i < 4; ++i) {
        Complex a(0), b(0), c(0);
        for (int j = 0; j < 4; ++j) {
            Complex s = e[i][j] > 0 ? Complex(1) : Complex(-1);
            a += s * Thz[j] * Thz[j];
            b += s * thz[j] * thz[j];
            c += s * Th0[j] * Th2z[j];
        }
        r = std::max(r, rel_diff(th0[i] * thz[i], a));
        r = std::max(r, rel_diff(Complex(4) * Th0[i] * Th2z[i], b));
        r = std::max(r, rel_diff(thz[i] * thz[i], c));
    }
    return r;
}

Real riemann_check(const SiegelPoint& tau, const CVec2& z1, const CVec2& z2, double tol)
{
    SiegelPoint t2 = tau.scaled(Real(2));
    const ThetaChar& zero = theta_table()[0];
    CVec2 p{z1[0] + z2[0], z1[1] + z2[1]}, m{z1[0] - z2[0], z1[1] - z2[1]};
    CVec2 a{z1[0] * Complex(2), z1[1] * Complex(2)}, b{z2[0] * Complex(2), z2[1] * Complex(2)};
    Complex lhs = theta_value(zero, p, tau, tol) * theta_value(zero, m, tau, tol);
    Complex rhs(0);
    for (const auto& c : dual_table())
        rhs += theta_value(c, a, t2, tol) * theta_value(c, b, t2, tol);
    return rel_diff(lhs, rhs);
}

SatakeImages satake_maps(const ThetaNulls& n, const DualThetaNulls& d)
{
    SatakeImages out;
    out.square = squares(n);
    out.veronese = veronese_map(d.th);
    out.residual = 0;
    for (int i = 0; i < 10; ++i)
        out.residual = std::max(out.residual, rel_diff(out.square[i], out.veronese[i]));
    return out;
}

}  // namespace g2
