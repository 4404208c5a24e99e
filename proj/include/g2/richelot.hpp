#pragma once

#include "g2/curves.hpp"
#include "g2/theta.hpp"

#include <bit>
#include <set>
#include <sstream>

namespace g2 {

// 2-torsion point P_ij (1 <= i < j <= 6) or the identity P0; P_i6 marks the pair with the root at infinity.
struct TwoTorsionLabel {
    int i = 0, j = 0;

    static TwoTorsionLabel identity() { return {}; }
    static TwoTorsionLabel make(int a, int b)
    {
        if (a < 1 || a > 6 || b < 1 || b > 6)
            throw std::invalid_argument("torsion label indices must lie in 1..6");
        if (a == b)
            return identity();
        return a < b ? TwoTorsionLabel{a, b} : TwoTorsionLabel{b, a};
    }
    bool is_identity() const { return i == 0; }
    std::string str() const { return is_identity() ? "P0" : "P" + std::to_string(i) + std::to_string(j); }
    // Subset of {1..6} as a bitmask, used for the symmetric-difference group law.
    unsigned mask() const { return is_identity() ? 0u : (1u << (i - 1)) | (1u << (j - 1)); }
    auto operator<=>(const TwoTorsionLabel&) const = default;
};

namespace detail {
inline TwoTorsionLabel label_from_mask(unsigned m)
{
    // Even subsets of {1..6} modulo complement; pick the representative of size <= 2.
    if (std::popcount(m) > 2)
        m = (~m) & 63u;
    if (m == 0)
        return TwoTorsionLabel::identity();
    if (std::popcount(m) != 2)
        throw std::logic_error("odd subset in the 2-torsion group law");
    int a = std::countr_zero(m) + 1;
    int b = 31 - std::countl_zero(m) + 1;
    return TwoTorsionLabel::make(a, b);
}
}  // namespace detail

// P_ij + P_jk = P_ik, P_ij + P_kl = P_mn for disjoint pairs, u + u = P0.
inline TwoTorsionLabel torsion_add(const TwoTorsionLabel& u, const TwoTorsionLabel& v)
{
    return detail::label_from_mask(u.mask() ^ v.mask());
}

inline std::vector<TwoTorsionLabel> all_torsion_labels()
{
    std::vector<TwoTorsionLabel> out{TwoTorsionLabel::identity()};
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            out.push_back(TwoTorsionLabel::make(a, b));
    return out;
}

// Alternating pairing: e(P_ij, P_kl) = |{i,j} ∩ {k,l}| mod 2.
inline int torsion_pairing(const TwoTorsionLabel& u, const TwoTorsionLabel& v)
{
    return std::popcount(u.mask() & v.mask()) & 1;
}

// Partition of {1..6} into three pairs, written "12|34|56".
struct PairPartition {
    std::array<std::pair<int, int>, 3> pairs;

    std::string str() const
    {
        std::string s;
        for (int k = 0; k < 3; ++k) {
            if (k)
                s += "|";
            s += std::to_string(pairs[k].first) + std::to_string(pairs[k].second);
        }
        return s;
    }
    static PairPartition parse(const std::string& text)
    {
        std::vector<int> digits;
        for (char ch : text) {
            if (ch == '|' || ch == ' ')
                continue;
            if (ch < '1' || ch > '6')
                throw std::invalid_argument("partition must use digits 1..6: " + text);
            digits.push_back(ch - '0');
        }
        if (digits.size() != 6)
            throw std::invalid_argument("partition needs three pairs: " + text);
        std::vector<std::pair<int, int>> ps;
        for (int k = 0; k < 3; ++k)
            ps.push_back(std::minmax(digits[2 * k], digits[2 * k + 1]));
        std::sort(ps.begin(), ps.end());
        unsigned seen = 0;
        for (auto& p : ps) {
            if (p.first == p.second)
                throw std::invalid_argument("partition pair repeats an index: " + text);
            seen |= (1u << p.first) | (1u << p.second);
        }
        if (std::popcount(seen) != 6)
            throw std::invalid_argument("partition must cover 1..6 exactly once: " + text);
        return {{ps[0], ps[1], ps[2]}};
    }
    auto operator<=>(const PairPartition&) const = default;
};

// The 15 pair partitions of {1..6} in lexicographic order.
inline std::vector<PairPartition> pair_partitions()
{
    std::vector<PairPartition> out;
    for (int b = 2; b <= 6; ++b) {
        std::vector<int> rest;
        for (int x = 2; x <= 6; ++x)
            if (x != b)
                rest.push_back(x);
        for (int k = 1; k < 4; ++k) {
            std::vector<int> r2;
            for (int t = 1; t < 4; ++t)
                if (t != k)
                    r2.push_back(rest[t]);
            out.push_back({{std::pair{1, b}, std::pair{rest[0], rest[k]}, std::pair{r2[0], r2[1]}}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct GoepelGroup {
    std::array<TwoTorsionLabel, 4> points;  // P0 first

    std::string str() const
    {
        std::string s = "{";
        for (int k = 0; k < 4; ++k)
            s += (k ? "," : "") + points[k].str();
        return s + "}";
    }
};

inline GoepelGroup goepel_from_partition(const PairPartition& p)
{
    return {{TwoTorsionLabel::identity(), TwoTorsionLabel::make(p.pairs[0].first, p.pairs[0].second),
             TwoTorsionLabel::make(p.pairs[1].first, p.pairs[1].second),
             TwoTorsionLabel::make(p.pairs[2].first, p.pairs[2].second)}};
}

inline std::vector<GoepelGroup> enumerate_goepel()
{
    std::vector<GoepelGroup> out;
    for (const auto& p : pair_partitions())
        out.push_back(goepel_from_partition(p));
    return out;
}

inline bool is_subgroup(const std::vector<TwoTorsionLabel>& g)
{
    std::set<TwoTorsionLabel> s(g.begin(), g.end());
    if (!s.count(TwoTorsionLabel::identity()))
        return false;
    for (const auto& u : g)
        for (const auto& v : g)
            if (!s.count(torsion_add(u, v)))
                return false;
    return true;
}

inline bool is_isotropic(const std::vector<TwoTorsionLabel>& g)
{
    for (const auto& u : g)
        for (const auto& v : g)
            if (torsion_pairing(u, v))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Richelot construction on binary quadratic forms

// [A, B] = A' B - A B' for quadratics, computed on the forms so that roots at infinity are allowed.
template <class R>
BinaryForm<R> bracket(const BinaryForm<R>& A, const BinaryForm<R>& B)
{
    if (A.n != 2 || B.n != 2)
        throw std::invalid_argument("bracket needs two quadratic forms");
    const R &a0 = A.a[0], &a1 = A.a[1], &a2 = A.a[2];
    const R &b0 = B.a[0], &b1 = B.a[1], &b2 = B.a[2];
    return BinaryForm<R>(2, {a1 * b0 - a0 * b1, lift(a0, 2) * (a2 * b0 - a0 * b2), a2 * b1 - a1 * b2});
}

// Determinant of the coefficient rows in the basis {x^2, xz, z^2}.
template <class R>
R delta_abc(const BinaryForm<R>& A, const BinaryForm<R>& B, const BinaryForm<R>& C)
{
    std::vector<std::vector<R>> m = {{A.a[2], A.a[1], A.a[0]}, {B.a[2], B.a[1], B.a[0]}, {C.a[2], C.a[1], C.a[0]}};
    return determinant(m);
}

template <class R>
struct QuadraticSplitting {
    BinaryForm<R> A, B, C;
    PairPartition partition;
};

template <class R>
BinaryForm<R> linear_factor(const std::optional<R>& root, const R& like)
{
    R zero = lift(like, 0), one = lift(like, 1);
    if (root)
        return BinaryForm<R>(1, {-*root, one});
    return BinaryForm<R>(1, {one, zero});
}

// Splitting for the labeled roots r_1..r_6 (nullopt = infinity); the leading scalar is put on A.
template <class R>
QuadraticSplitting<R> splitting_for(const std::vector<std::optional<R>>& roots, const R& lead,
                                    const PairPartition& p)
{
    if (roots.size() != 6)
        throw std::invalid_argument("a splitting needs six labeled roots");
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = a + 1; b < 6; ++b)
            if (roots[a] == roots[b])
                throw std::invalid_argument("repeated roots: the sextic is singular");
    auto quad = [&](const std::pair<int, int>& q) {
        return linear_factor(roots[q.first - 1], lead) * linear_factor(roots[q.second - 1], lead);
    };
    return {quad(p.pairs[0]).scale(lead), quad(p.pairs[1]), quad(p.pairs[2]), p};
}

template <class R>
std::vector<QuadraticSplitting<R>> enumerate_splittings(const std::vector<std::optional<R>>& roots, const R& lead)
{
    std::vector<QuadraticSplitting<R>> out;
    for (const auto& p : pair_partitions())
        out.push_back(splitting_for(roots, lead, p));
    return out;
}

template <class R>
struct RichelotCodomain {
    BinaryForm<R> sextic;  // [A,B][A,C][B,C] / Delta
    R delta;
};

template <class R>
RichelotCodomain<R> richelot_codomain(const QuadraticSplitting<R>& s)
{
    R d = delta_abc(s.A, s.B, s.C);
    if (is_zero(d))
        throw std::domain_error("Delta_ABC = 0: the quotient is a product of elliptic curves");
    BinaryForm<R> f = bracket(s.A, s.B) * bracket(s.A, s.C) * bracket(s.B, s.C);
    return {f.scale(inv(d)), d};
}

// Dual splitting A^ = [B,C], B^ = [A,C], C^ = [A,B] of the codomain.
template <class R>
QuadraticSplitting<R> dual_splitting(const QuadraticSplitting<R>& s)
{
    return {bracket(s.B, s.C), bracket(s.A, s.C), bracket(s.A, s.B), s.partition};
}

// Labeled Weierstrass roots of the Rosenhain curve: P1..P6 = l1, l2, l3, 0, 1, infinity.
template <class R>
std::vector<std::optional<R>> rosenhain_roots(const R& l1, const R& l2, const R& l3)
{
    return {l1, l2, l3, lift(l1, 0), lift(l1, 1), std::nullopt};
}

// The lattice-halving splitting A = (x - l1 z)(x - z), B = (x - l2 z)(x - l3 z), C = x z,
// i.e. the partition 15|23|46 of the labeled roots.
template <class R>
QuadraticSplitting<R> lattice_halving_splitting(const R& l1, const R& l2, const R& l3)
{
    return splitting_for(rosenhain_roots(l1, l2, l3), lift(l1, 1), PairPartition::parse("15|23|46"));
}

// ---------------------------------------------------------------------------
// Rescaled moduli

// l_i' = (l_i + l_j l_k)/l with the branch l (l^2 = l1 l2 l3) supplied by the caller.
template <class R>
std::array<R, 3> rescale_moduli(const R& l1, const R& l2, const R& l3, const R& l)
{
    if (is_zero(l))
        throw std::domain_error("rescaling branch must be nonzero");
    return {(l1 + l2 * l3) / l, (l2 + l1 * l3) / l, (l3 + l1 * l2) / l};
}

// Exact rationals: the branch is the positive square root; raises when l1 l2 l3 is not a square.
inline std::array<Rational, 3> rescale_moduli(const Rational& l1, const Rational& l2, const Rational& l3)
{
    Rational prod = l1 * l2 * l3;
    if (sgn(prod) <= 0)
        throw std::domain_error("l1 l2 l3 is not a square in Q; supply a branch in an extension");
    Integer n = prod.get_num(), d = prod.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        throw std::domain_error("l1 l2 l3 is not a square in Q; supply a branch in an extension");
    Integer sn = sqrt(n), sd = sqrt(d);
    return rescale_moduli(l1, l2, l3, Rational(sn, sd));
}

// L1' = 2(2 l1' - l2' - l3')/(l2' - l3'), with the two difference relations giving L2', L3'.
// The same formulas invert the map.
template <class R>
std::array<R, 3> isogenous_moduli(const std::array<R, 3>& lp)
{
    const R &a = lp[0], &b = lp[1], &c = lp[2];
    R two = lift(a, 2), four = lift(a, 4);
    if (b == c)
        throw std::domain_error("l2' = l3': degenerate (2,2) configuration");
    if (a == two || a == -two)
        throw std::domain_error("l1' = +-2: degenerate (2,2) configuration");
    R L1 = two * (two * a - b - c) / (b - c);
    R k = -four * (a - b) * (a - c) / (b - c);
    return {L1, L1 + k / (a + two), L1 + k / (a - two)};
}

template <class R>
std::array<R, 3> isogenous_moduli_inverse(const std::array<R, 3>& Lp)
{
    return isogenous_moduli(Lp);
}

// Residuals of the six rescaled relations between l' and L' (relative, complex).
inline std::array<Real, 6> rescaled_relation_residuals(const std::array<Complex, 3>& lp, const std::array<Complex, 3>& Lp)
{
    auto side = [](const std::array<Complex, 3>& x, const std::array<Complex, 3>& y, Real* out) {
        Complex two(2), four(4);
        Complex k = -four * (x[0] - x[1]) * (x[0] - x[2]) / (x[1] - x[2]);
        Complex r[3] = {y[0] - two * (two * x[0] - x[1] - x[2]) / (x[1] - x[2]),
                        y[1] - y[0] - k / (x[0] + two), y[2] - y[0] - k / (x[0] - two)};
        Complex s[3] = {y[0], y[1] - y[0], y[2] - y[0]};
        for (int i = 0; i < 3; ++i) {
            Real scale = std::max(abs(s[i]), Real(1e-300));
            out[i] = abs(r[i]) / scale;
        }
    };
    std::array<Real, 6> out;
    side(lp, Lp, out.data());
    side(Lp, lp, out.data() + 3);
    return out;
}

// Square-root branch l = theta1^2 theta3^2 theta8^2 / (theta2^2 theta4^2 theta10^2) of l1 l2 l3.
inline Complex theta_branch(const std::array<Complex, 10>& sq)
{
    return sq[0] * sq[2] * sq[7] / (sq[1] * sq[3] * sq[9]);
}

struct ThetaCodomainModuli {
    std::array<Complex, 3> Lambda;
    Complex mu;  // quadratic twist; its sign depends on the signs of theta_1..theta_4
};

// Codomain Rosenhain roots from theta_1..theta_4 at tau alone.
inline ThetaCodomainModuli theta_codomain_moduli(const ThetaNulls& n)
{
    const Complex &t1 = n.at(1), &t2 = n.at(2), &t3 = n.at(3), &t4 = n.at(4);
    Complex s1 = t1 * t1, s2 = t2 * t2, s3 = t3 * t3, s4 = t4 * t4, prod = t1 * t2 * t3 * t4;
    Complex S = s1 + s2 + s3 + s4, P = s1 - s2 - s3 + s4, Q = s1 + s2 - s3 - s4, Rr = s1 - s2 + s3 - s4;
    Complex E = s1 * s2 + s3 * s4 + Complex(2) * prod, F = s1 * s2 - s3 * s4;
    if (is_zero(Q) || is_zero(Rr) || is_zero(F) || is_zero(prod) || is_zero(S) || is_zero(P))
        throw std::domain_error("theta codomain moduli: vanishing denominator");
    Complex d = t1 * t2 - t3 * t4;
    return {{S * P / (Q * Rr), P * E / (Rr * F), S * E / (Q * F)},
            d * d * Q * Rr / (Complex(4) * prod * S * P)};
}

}  // namespace g2
