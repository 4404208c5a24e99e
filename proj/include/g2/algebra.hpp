#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g2 {

// ---------------------------------------------------------------------------
// Exact rationals (GMP)

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational parse_rational(std::string_view s)
{
    std::string t(s);
    t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
    if (t.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    auto check = [](const std::string& part) {
        size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size())
            throw std::invalid_argument("malformed rational literal");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("malformed rational literal: " + part);
    };
    std::string num = t.substr(0, slash), den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    check(num);
    check(den);
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    Integer n(num), d(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational lift(const Rational&, long n) { return Rational(n); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inv(const Rational& x)
{
    if (is_zero(x))
        throw std::domain_error("division by zero");
    return 1 / x;
}

// ---------------------------------------------------------------------------
// Prime field F_p with a runtime modulus carried by every element

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// Throws unless p is an odd prime below 2^62.
inline void require_odd_prime(std::uint64_t p)
{
    if (p == 2)
        throw std::invalid_argument("p = 2 is not supported");
    if (p >= (1ull << 62) || !is_prime_u64(p))
        throw std::invalid_argument("modulus is not an odd prime: " + std::to_string(p));
}

class Fp {
public:
    Fp() = default;
    Fp(std::int64_t v, std::uint64_t p) : p_(p)
    {
        if (p == 0)
            throw std::invalid_argument("Fp modulus must be positive");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    static Fp from_u64(std::uint64_t v, std::uint64_t p)
    {
        Fp x;
        x.p_ = p;
        x.v_ = v % p;
        return x;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const
    {
        check(o);
        std::uint64_t s = v_ + o.v_;
        return from_u64(s >= p_ ? s - p_ : s, p_);
    }
    Fp operator-(const Fp& o) const
    {
        check(o);
        return from_u64(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator-() const { return from_u64(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator*(const Fp& o) const
    {
        check(o);
        return from_u64(mulmod(v_, o.v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }
    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp pow(std::uint64_t e) const { return from_u64(powmod(v_, e, p_), p_); }
    Fp inverse() const
    {
        if (v_ == 0)
            throw std::domain_error("division by zero in F_p");
        return pow(p_ - 2);
    }
    bool is_square() const { return v_ == 0 || pow((p_ - 1) / 2).v_ == 1; }

    static Fp random(std::uint64_t p, std::mt19937_64& rng)
    {
        return from_u64(std::uniform_int_distribution<std::uint64_t>(0, p - 1)(rng), p);
    }

private:
    void check(const Fp& o) const
    {
        if (p_ != o.p_)
            throw std::invalid_argument("F_p modulus mismatch");
    }
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline Fp lift(const Fp& like, long n) { return Fp(n, like.modulus()); }
inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp inv(const Fp& x) { return x.inverse(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

// Smallest quadratic non-residue modulo p.
inline std::uint64_t smallest_nonresidue(std::uint64_t p)
{
    require_odd_prime(p);
    for (std::uint64_t a = 2; a < p; ++a)
        if (powmod(a, (p - 1) / 2, p) == p - 1)
            return a;
    throw std::logic_error("no quadratic non-residue found");
}

// F_{p^2} = F_p[s]/(s^2 - ns), element c0 + c1 s.
class Fp2 {
public:
    Fp2() = default;
    Fp2(Fp c0, Fp c1, Fp ns) : c0_(c0), c1_(c1), ns_(ns)
    {
        if (c0.modulus() != c1.modulus() || c0.modulus() != ns.modulus())
            throw std::invalid_argument("F_p2 component modulus mismatch");
    }
    // Element of the standard model of F_{p^2} for prime p.
    static Fp2 make(std::int64_t c0, std::int64_t c1, std::uint64_t p)
    {
        Fp ns = Fp::from_u64(smallest_nonresidue(p), p);
        return Fp2(Fp(c0, p), Fp(c1, p), ns);
    }

    const Fp& c0() const { return c0_; }
    const Fp& c1() const { return c1_; }
    const Fp& ns() const { return ns_; }
    std::uint64_t characteristic() const { return ns_.modulus(); }

    Fp2 operator+(const Fp2& o) const { return Fp2(c0_ + o.c0_, c1_ + o.c1_, ns_); }
    Fp2 operator-(const Fp2& o) const { return Fp2(c0_ - o.c0_, c1_ - o.c1_, ns_); }
    Fp2 operator-() const { return Fp2(-c0_, -c1_, ns_); }
    Fp2 operator*(const Fp2& o) const
    {
        if (ns_ != o.ns_)
            throw std::invalid_argument("F_p2 model mismatch");
        return Fp2(c0_ * o.c0_ + ns_ * c1_ * o.c1_, c0_ * o.c1_ + c1_ * o.c0_, ns_);
    }
    Fp2 operator/(const Fp2& o) const { return *this * o.inverse(); }
    Fp2& operator+=(const Fp2& o) { return *this = *this + o; }
    Fp2& operator-=(const Fp2& o) { return *this = *this - o; }
    Fp2& operator*=(const Fp2& o) { return *this = *this * o; }
    Fp2& operator/=(const Fp2& o) { return *this = *this / o; }
    bool operator==(const Fp2& o) const { return c0_ == o.c0_ && c1_ == o.c1_ && ns_ == o.ns_; }
    bool operator!=(const Fp2& o) const { return !(*this == o); }

    Fp2 conj() const { return Fp2(c0_, -c1_, ns_); }
    Fp norm() const { return c0_ * c0_ - ns_ * c1_ * c1_; }
    Fp2 inverse() const
    {
        Fp n = norm();
        if (n.value() == 0)
            throw std::domain_error("division by zero in F_p2");
        Fp ni = n.inverse();
        return Fp2(c0_ * ni, -(c1_ * ni), ns_);
    }
    Fp2 pow(const Integer& e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        Fp2 r = Fp2(Fp(1, ns_.modulus()), Fp(0, ns_.modulus()), ns_), b = *this;
        size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = r * r;
            if (mpz_tstbit(e.get_mpz_t(), i))
                r = r * b;
        }
        return r;
    }
    bool is_zero() const { return c0_.value() == 0 && c1_.value() == 0; }
    bool in_prime_field() const { return c1_.value() == 0; }

    static Fp2 random(const Fp2& like, std::mt19937_64& rng)
    {
        std::uint64_t p = like.characteristic();
        return Fp2(Fp::random(p, rng), Fp::random(p, rng), like.ns_);
    }

private:
    Fp c0_, c1_, ns_;
};

inline Fp2 lift(const Fp2& like, long n)
{
    std::uint64_t p = like.characteristic();
    return Fp2(Fp(n, p), Fp(0, p), like.ns());
}
inline bool is_zero(const Fp2& x) { return x.is_zero(); }
inline Fp2 inv(const Fp2& x) { return x.inverse(); }
inline std::string to_string(const Fp2& x)
{
    return "[" + std::to_string(x.c0().value()) + "," + std::to_string(x.c1().value()) + "]";
}

// ---------------------------------------------------------------------------
// Complex numbers over MPFR reals

using Real = boost::multiprecision::mpfr_float;

constexpr unsigned kDefaultPrecisionBits = 128;

inline unsigned bits_to_digits10(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)); }

// Programs start at kDefaultPrecisionBits rather than the MPFR backend's 20-digit default.
inline const bool kDefaultPrecisionInstalled = [] {
    Real::default_precision(bits_to_digits10(kDefaultPrecisionBits));
    return true;
}();

// Sets the working precision (mantissa bits) of newly created reals for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : old_(Real::default_precision())
    {
        if (bits < 64)
            throw std::invalid_argument("complex precision must be at least 64 bits");
        Real::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionScope() { Real::default_precision(old_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned old_;
};

struct Complex {
    Real re{0}, im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}
    Complex(long r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Complex operator/(const Complex& o) const
    {
        Real d = o.re * o.re + o.im * o.im;
        if (d == 0)
            throw std::domain_error("complex division by zero");
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
    Complex& operator/=(const Complex& o) { return *this = *this / o; }
    bool operator==(const Complex& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Complex& o) const { return !(*this == o); }
};

inline Complex lift(const Complex&, long n) { return Complex(Real(n)); }
inline bool is_zero(const Complex& x) { return x.re == 0 && x.im == 0; }
inline Complex inv(const Complex& x) { return Complex(1) / x; }
inline Real abs(const Complex& x) { return boost::multiprecision::hypot(x.re, x.im); }
inline Complex conj(const Complex& x) { return {x.re, -x.im}; }
inline Complex cexp(const Complex& x)
{
    Real m = boost::multiprecision::exp(x.re);
    return {m * boost::multiprecision::cos(x.im), m * boost::multiprecision::sin(x.im)};
}
inline Complex csqrt(const Complex& x)
{
    Real r = abs(x);
    if (r == 0)
        return Complex(0);
    Real a = boost::multiprecision::sqrt((r + x.re) / 2);
    Real b = boost::multiprecision::sqrt((r - x.re) / 2);
    if (x.im < 0)
        b = -b;
    return {a, b};
}
inline Real pi_real() { return boost::math::constants::pi<Real>(); }
// exp(2 pi i t) for real t
inline Complex e2pi(const Real& t)
{
    Real a = 2 * pi_real() * t;
    return {boost::multiprecision::cos(a), boost::multiprecision::sin(a)};
}
inline bool is_finite(const Complex& x)
{
    return boost::multiprecision::isfinite(x.re) && boost::multiprecision::isfinite(x.im);
}
inline std::string to_string(const Real& x, int digits = 30) { return x.str(digits, std::ios_base::scientific); }
inline std::string to_string(const Complex& x) { return "[" + to_string(x.re) + "," + to_string(x.im) + "]"; }
inline double to_double(const Real& x) { return x.convert_to<double>(); }

// ---------------------------------------------------------------------------
// Generic helpers over the four coefficient rings

template <class R>
R power(const R& x, long e)
{
    if (e < 0)
        return power(inv(x), -e);
    R r = lift(x, 1), b = x;
    while (e) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Pivot quality used by elimination: exact rings only distinguish zero from nonzero.
template <class R>
double pivot_weight(const R& x)
{
    return is_zero(x) ? 0.0 : 1.0;
}
template <>
inline double pivot_weight<Complex>(const Complex& x)
{
    return to_double(abs(x));
}

// Determinant by Gaussian elimination with pivoting (exact over fields).
template <class R>
R determinant(std::vector<std::vector<R>> m)
{
    size_t n = m.size();
    if (n == 0)
        throw std::invalid_argument("empty matrix");
    R det = lift(m[0][0], 1);
    for (size_t c = 0; c < n; ++c) {
        size_t best = c;
        double bw = pivot_weight(m[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            double w = pivot_weight(m[r][c]);
            if (w > bw) {
                bw = w;
                best = r;
            }
        }
        if (bw == 0.0)
            return lift(m[0][0], 0);
        if (best != c) {
            std::swap(m[best], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        R pinv = inv(m[c][c]);
        for (size_t r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c]))
                continue;
            R f = m[r][c] * pinv;
            for (size_t k = c; k < n; ++k)
                m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

// Rank by elimination; entries with pivot_weight <= tol count as zero.
template <class R>
size_t matrix_rank(std::vector<std::vector<R>> m, double tol = 0.0)
{
    size_t rows = m.size();
    if (rows == 0)
        return 0;
    size_t cols = m[0].size(), rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t best = rank;
        double bw = pivot_weight(m[rank][c]);
        for (size_t r = rank + 1; r < rows; ++r) {
            double w = pivot_weight(m[r][c]);
            if (w > bw) {
                bw = w;
                best = r;
            }
        }
        if (bw <= tol)
            continue;
        std::swap(m[best], m[rank]);
        R pinv = inv(m[rank][c]);
        for (size_t r = rank + 1; r < rows; ++r) {
            R f = m[r][c] * pinv;
            for (size_t k = c; k < cols; ++k)
                m[r][k] = m[r][k] - f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Univariate polynomials, coefficients stored from low to high degree

template <class R>
class Poly {
public:
    explicit Poly(R zero) : zero_(lift(zero, 0)) {}
    Poly(std::vector<R> c, R zero) : c_(std::move(c)), zero_(lift(zero, 0)) { trim(); }

    static Poly monomial(const R& coeff, size_t d)
    {
        std::vector<R> c(d + 1, lift(coeff, 0));
        c[d] = coeff;
        return Poly(std::move(c), coeff);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const R& operator[](size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& zero() const { return zero_; }
    const R& lead() const
    {
        if (c_.empty())
            throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator+(const Poly& o) const
    {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), zero_);
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = (*this)[i] + o[i];
        return Poly(std::move(r), zero_);
    }
    Poly operator-(const Poly& o) const
    {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), zero_);
        for (size_t i = 0; i < r.size(); ++i)
            r[i] = (*this)[i] - o[i];
        return Poly(std::move(r), zero_);
    }
    Poly operator-() const
    {
        std::vector<R> r = c_;
        for (auto& x : r)
            x = -x;
        return Poly(std::move(r), zero_);
    }
    Poly operator*(const Poly& o) const
    {
        if (c_.empty() || o.c_.empty())
            return Poly(zero_);
        std::vector<R> r(c_.size() + o.c_.size() - 1, zero_);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r), zero_);
    }
    Poly scale(const R& s) const
    {
        std::vector<R> r = c_;
        for (auto& x : r)
            x = x * s;
        return Poly(std::move(r), zero_);
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    R eval(const R& x) const
    {
        R acc = zero_;
        for (size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }
    Poly derivative() const
    {
        if (c_.size() <= 1)
            return Poly(zero_);
        std::vector<R> r(c_.size() - 1, zero_);
        for (size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * lift(zero_, static_cast<long>(i));
        return Poly(std::move(r), zero_);
    }

    // Euclidean division over a field.
    void divmod(const Poly& d, Poly& q, Poly& r) const
    {
        if (d.is_zero_poly())
            throw std::domain_error("polynomial division by zero");
        r = *this;
        q = Poly(zero_);
        if (degree() < d.degree())
            return;
        std::vector<R> qc(degree() - d.degree() + 1, zero_);
        std::vector<R> rc = c_;
        R li = inv(d.lead());
        for (int k = degree() - d.degree(); k >= 0; --k) {
            R f = rc[k + d.degree()] * li;
            qc[k] = f;
            for (int j = 0; j <= d.degree(); ++j)
                rc[k + j] = rc[k + j] - f * d.c_[j];
        }
        rc.resize(d.degree());
        q = Poly(std::move(qc), zero_);
        r = Poly(std::move(rc), zero_);
    }
    Poly operator%(const Poly& d) const
    {
        Poly q(zero_), r(zero_);
        divmod(d, q, r);
        return r;
    }
    Poly operator/(const Poly& d) const
    {
        Poly q(zero_), r(zero_);
        divmod(d, q, r);
        return q;
    }
    Poly monic() const { return c_.empty() ? *this : scale(inv(lead())); }

private:
    void trim()
    {
        while (!c_.empty() && is_zero(c_.back()))
            c_.pop_back();
    }
    std::vector<R> c_;
    R zero_;
};

template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b)
{
    while (!b.is_zero_poly()) {
        Poly<R> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// base^e mod m for a nonnegative big exponent.
template <class R>
Poly<R> poly_powmod(const Poly<R>& base, const Integer& e, const Poly<R>& m)
{
    Poly<R> r = Poly<R>::monomial(lift(base.zero(), 1), 0) % m, b = base % m;
    size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = (r * b) % m;
    }
    return r;
}

// Resultant through the Sylvester determinant.
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g)
{
    if (f.is_zero_poly() || g.is_zero_poly())
        throw std::invalid_argument("resultant of the zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0)
        return lift(f.zero(), 1);
    if (m == 0)
        return power(f.lead(), n);
    if (n == 0)
        return power(g.lead(), m);
    size_t sz = static_cast<size_t>(m + n);
    std::vector<std::vector<R>> s(sz, std::vector<R>(sz, f.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            s[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[n + i][i + j] = g[n - j];
    return determinant(s);
}

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
template <class R>
R poly_discriminant(const Poly<R>& f)
{
    if (f.is_zero_poly())
        throw std::invalid_argument("discriminant of the zero polynomial");
    int d = f.degree();
    if (d < 1)
        throw std::invalid_argument("discriminant needs degree >= 1");
    if (d == 1)
        return lift(f.zero(), 1);
    R r = resultant(f, f.derivative()) / f.lead();
    if ((d * (d - 1) / 2) % 2)
        return R(-r);
    return r;
}

// ---------------------------------------------------------------------------
// Binary forms f(x, z) = sum_i a_i x^i z^(n-i) of declared degree n

template <class R>
struct BinaryForm {
    int n = 0;
    std::vector<R> a;  // a[i] is the coefficient of x^i z^(n-i)

    BinaryForm() = default;
    BinaryForm(int deg, std::vector<R> coeffs) : n(deg), a(std::move(coeffs))
    {
        if (deg < 0 || a.size() != static_cast<size_t>(deg + 1))
            throw std::invalid_argument("binary form coefficient count must equal degree + 1");
    }
    static BinaryForm from_poly(const Poly<R>& p, int deg)
    {
        if (p.degree() > deg)
            throw std::invalid_argument("polynomial degree exceeds declared form degree");
        std::vector<R> c(deg + 1, p.zero());
        for (int i = 0; i <= deg; ++i)
            c[i] = p[i];
        return BinaryForm(deg, std::move(c));
    }
    const R& zero_like() const { return a.at(0); }
    Poly<R> dehomogenize() const { return Poly<R>(a, a.at(0)); }
    bool is_zero_form() const
    {
        return std::all_of(a.begin(), a.end(), [](const R& c) { return is_zero(c); });
    }

    R eval(const R& x, const R& z) const
    {
        R acc = lift(a[0], 0), zp = lift(a[0], 1);
        std::vector<R> xp(n + 1, lift(a[0], 1));
        for (int i = 1; i <= n; ++i)
            xp[i] = xp[i - 1] * x;
        for (int i = n; i >= 0; --i) {
            acc = acc + a[i] * xp[i] * zp;
            zp = zp * z;
        }
        return acc;
    }

    BinaryForm operator*(const BinaryForm& o) const
    {
        std::vector<R> c(n + o.n + 1, lift(a[0], 0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= o.n; ++j)
                c[i + j] = c[i + j] + a[i] * o.a[j];
        return BinaryForm(n + o.n, std::move(c));
    }
    BinaryForm operator+(const BinaryForm& o) const
    {
        if (n != o.n)
            throw std::invalid_argument("adding binary forms of different degree");
        std::vector<R> c(a);
        for (int i = 0; i <= n; ++i)
            c[i] = c[i] + o.a[i];
        return BinaryForm(n, std::move(c));
    }
    BinaryForm operator-(const BinaryForm& o) const
    {
        if (n != o.n)
            throw std::invalid_argument("subtracting binary forms of different degree");
        std::vector<R> c(a);
        for (int i = 0; i <= n; ++i)
            c[i] = c[i] - o.a[i];
        return BinaryForm(n, std::move(c));
    }
    BinaryForm scale(const R& s) const
    {
        std::vector<R> c(a);
        for (auto& x : c)
            x = x * s;
        return BinaryForm(n, std::move(c));
    }
    bool operator==(const BinaryForm& o) const { return n == o.n && a == o.a; }

    BinaryForm dx() const
    {
        if (n == 0)
            return BinaryForm(0, {lift(a[0], 0)});
        std::vector<R> c(n, lift(a[0], 0));
        for (int i = 1; i <= n; ++i)
            c[i - 1] = a[i] * lift(a[0], i);
        return BinaryForm(n - 1, std::move(c));
    }
    BinaryForm dz() const
    {
        if (n == 0)
            return BinaryForm(0, {lift(a[0], 0)});
        std::vector<R> c(n, lift(a[0], 0));
        for (int i = 0; i < n; ++i)
            c[i] = a[i] * lift(a[0], n - i);
        return BinaryForm(n - 1, std::move(c));
    }

    // f(p x + q z, r x + s z)
    BinaryForm substitute(const R& p, const R& q, const R& r, const R& s) const
    {
        R zero = lift(a[0], 0);
        BinaryForm X(1, {q, p}), Z(1, {s, r});
        BinaryForm acc(n, std::vector<R>(n + 1, zero));
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a[i]))
                continue;
            BinaryForm t(0, {a[i]});
            for (int k = 0; k < i; ++k)
                t = t * X;
            for (int k = 0; k < n - i; ++k)
                t = t * Z;
            acc = acc + t;
        }
        return acc;
    }
};

// Transvectant (f, g)_k with the normalization (m-k)!(n-k)!/(m! n!).
template <class R>
BinaryForm<R> transvectant(const BinaryForm<R>& f, const BinaryForm<R>& g, int k)
{
    if (k > f.n || k > g.n)
        throw std::invalid_argument("transvectant order exceeds form degree");
    auto fact = [](int m) {
        long r = 1;
        for (int i = 2; i <= m; ++i)
            r *= i;
        return r;
    };
    R zero = lift(f.a[0], 0);
    BinaryForm<R> acc(f.n + g.n - 2 * k, std::vector<R>(f.n + g.n - 2 * k + 1, zero));
    for (int i = 0; i <= k; ++i) {
        BinaryForm<R> df = f, dg = g;
        for (int t = 0; t < k - i; ++t)
            df = df.dx();
        for (int t = 0; t < i; ++t)
            df = df.dz();
        for (int t = 0; t < i; ++t)
            dg = dg.dx();
        for (int t = 0; t < k - i; ++t)
            dg = dg.dz();
        long binom = fact(k) / (fact(i) * fact(k - i));
        BinaryForm<R> term = (df * dg).scale(lift(zero, (i % 2) ? -binom : binom));
        acc = acc + term;
    }
    R num = lift(zero, fact(f.n - k) * fact(g.n - k));
    R den = lift(zero, fact(f.n)) * lift(zero, fact(g.n));
    return acc.scale(num / den);
}

// Discriminant of a binary form: prod over root pairs of (alpha_i beta_j - alpha_j beta_i)^2 with the
// leading scalar absorbed; a simple root at infinity contributes through the next coefficient.
template <class R>
R binary_discriminant(const BinaryForm<R>& f)
{
    if (f.is_zero_form())
        throw std::invalid_argument("discriminant of the zero form");
    if (f.n < 1)
        throw std::invalid_argument("discriminant needs degree >= 1");
    if (!is_zero(f.a[f.n]))
        return poly_discriminant(f.dehomogenize());
    if (is_zero(f.a[f.n - 1]))
        return lift(f.a[0], 0);  // double root at infinity
    if (f.n == 1)
        return lift(f.a[0], 1);
    std::vector<R> c(f.a.begin(), f.a.end() - 1);
    BinaryForm<R> g(f.n - 1, c);
    return f.a[f.n - 1] * f.a[f.n - 1] * binary_discriminant(g);
}

// ---------------------------------------------------------------------------
// Weighted projective points

template <class R>
struct WeightedProjPoint {
    std::vector<R> coords;
    std::vector<int> weights;

    WeightedProjPoint(std::vector<R> c, std::vector<int> w) : coords(std::move(c)), weights(std::move(w))
    {
        if (coords.size() != weights.size() || coords.empty())
            throw std::invalid_argument("weighted point: coordinate and weight counts differ");
        for (int x : weights)
            if (x <= 0)
                throw std::invalid_argument("weighted point: weights must be positive");
        if (std::all_of(coords.begin(), coords.end(), [](const R& v) { return is_zero(v); }))
            throw std::invalid_argument("weighted point: all coordinates are zero");
    }
};

namespace detail {
inline void check_weights(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a != b)
        throw std::invalid_argument("weighted_proj_equal: mismatched weight vectors");
}
}  // namespace detail

// Exact test over a field: equal zero patterns and a_i^(w_j/g) b_j^(w_i/g) = a_j^(w_i/g) b_i^(w_j/g)
// for every pair with g = gcd(w_i, w_j).
template <class R>
bool weighted_proj_equal(const WeightedProjPoint<R>& a, const WeightedProjPoint<R>& b)
{
    detail::check_weights(a.weights, b.weights);
    size_t n = a.coords.size();
    for (size_t i = 0; i < n; ++i)
        if (is_zero(a.coords[i]) != is_zero(b.coords[i]))
            return false;
    for (size_t i = 0; i < n; ++i) {
        if (is_zero(a.coords[i]))
            continue;
        for (size_t j = i + 1; j < n; ++j) {
            if (is_zero(a.coords[j]))
                continue;
            int g = std::gcd(a.weights[i], a.weights[j]);
            long ei = a.weights[j] / g, ej = a.weights[i] / g;
            R lhs = power(a.coords[i], ei) * power(b.coords[j], ej);
            R rhs = power(a.coords[j], ej) * power(b.coords[i], ei);
            if (lhs != rhs)
                return false;
        }
    }
    return true;
}

// Numerical test over C: both points are first normalized so that max |c_i|^(1/w_i) = 1,
// then zero patterns are compared at tol and the pairwise relations at relative tol.
inline bool weighted_proj_equal(const WeightedProjPoint<Complex>& a, const WeightedProjPoint<Complex>& b,
                                double tol)
{
    detail::check_weights(a.weights, b.weights);
    auto normalize = [](const WeightedProjPoint<Complex>& p) {
        Real s = 0;
        for (size_t i = 0; i < p.coords.size(); ++i) {
            Real m = boost::multiprecision::pow(abs(p.coords[i]), Real(1) / p.weights[i]);
            if (m > s)
                s = m;
        }
        std::vector<Complex> c = p.coords;
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = c[i] / Complex(boost::multiprecision::pow(s, p.weights[i]));
        return c;
    };
    std::vector<Complex> x = normalize(a), y = normalize(b);
    size_t n = x.size();
    std::vector<bool> zx(n), zy(n);
    for (size_t i = 0; i < n; ++i) {
        zx[i] = abs(x[i]) <= tol;
        zy[i] = abs(y[i]) <= tol;
        if (zx[i] != zy[i])
            return false;
    }
    for (size_t i = 0; i < n; ++i) {
        if (zx[i])
            continue;
        for (size_t j = i + 1; j < n; ++j) {
            if (zx[j])
                continue;
            int g = std::gcd(a.weights[i], a.weights[j]);
            long ei = a.weights[j] / g, ej = a.weights[i] / g;
            Complex lhs = power(x[i], ei) * power(y[j], ej);
            Complex rhs = power(x[j], ej) * power(y[i], ei);
            Real scale = std::max(abs(lhs), abs(rhs));
            if (abs(lhs - rhs) > tol * scale)
                return false;
        }
    }
    return true;
}

}  // namespace g2
