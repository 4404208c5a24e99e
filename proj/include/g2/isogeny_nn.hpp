#pragma once

#include "g2/kummer.hpp"
#include "g2/richelot.hpp"
#include "g2/theta.hpp"

#include <array>
#include <vector>

namespace g2 {

// n = a1^2 + a2^2 + a3^2 + a4^2 with a1 >= a2 >= a3 >= a4 >= 0; the lexicographically smallest such tuple.
struct FourSquare {
    long n;
    std::array<long, 4> a;
};

FourSquare four_square(long n);

// 4x4 integer matrix of left multiplication by a1 + a2 i + a3 j + a4 k; F^T F = n I.
std::array<std::array<long, 4>, 4> quaternion_matrix(const FourSquare& d);

// n-torsion point (tau a + b)/n with a, b in (Z/n)^2.
struct TorsionGen {
    std::array<long, 2> a, b;
};

enum class KernelType { BType, AType, General };

struct TorsionKernel {
    long n;
    std::array<TorsionGen, 2> gens;

    // All n^2 combinations c1 g1 + c2 g2 reduced mod n (duplicates kept if the generators are dependent).
    std::vector<TorsionGen> elements() const;
    long order() const;  // number of distinct elements
    // exp(2 pi i (a1.b2 - a2.b1)/n) == 1
    bool isotropic() const;
    KernelType type() const;
};

TorsionKernel make_kernel(long n, const TorsionGen& g1, const TorsionGen& g2);
// Kernel {b/n}: the codomain has period n tau (for n = 2 this is the lattice-halving kernel).
TorsionKernel btype_kernel(long n);
// Kernel {tau a/n}: handled through tau' = -tau^{-1}, z' = tau^{-1} z.
TorsionKernel atype_kernel(long n);

CVec2 torsion_point(const SiegelPoint& tau, const TorsionGen& g, long n);

struct LRResult {
    std::array<Complex, 4> coords;  // indexed like dual_table()
    long theta_evaluations = 0;
};

// Level-two theta null point of the codomain.
LRResult lr_null_points(const SiegelPoint& tau, const TorsionKernel& G, const FourSquare& d, double tol = 1e-12);
// Image of the point z of the domain.
LRResult lr_evaluate(const SiegelPoint& tau, const TorsionKernel& G, const FourSquare& d, const CVec2& z,
                     double tol = 1e-12);

// Period of the codomain in the normalization used by lr_null_points (n tau or -n tau^{-1}).
SiegelPoint lr_codomain_period(const SiegelPoint& tau, const TorsionKernel& G);
// Independent oracle: theta[d;0](2 n z', 2 n tau') evaluated directly at the codomain period.
std::array<Complex, 4> lr_direct_oracle(const SiegelPoint& tau, const TorsionKernel& G, const CVec2& z,
                                        double tol = 1e-12);

// Maximum of |u_i v_j - u_j v_i| / (|u| |v|) over pairs: zero iff projectively equal.
Real projective_distance(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v);

// Rosenhain roots of the codomain from level-two null coordinates (dual nulls at the codomain).
std::array<Complex, 3> lr_codomain_lambdas(const std::array<Complex, 4>& U);

// n = 2 gate: the codomain Rosenhain roots from the Lubicz-Robert null point against the Richelot
// moduli. Returns {distance to the transposed Thomae roots, max rescaled-relation residual}.
std::pair<Real, Real> lr_richelot_gate(const SiegelPoint& tau, double tol = 1e-12);

// Residual of the codomain Hudson quartic (parameters from the LR null point) at an LR image.
Real lr_hudson_residual(const std::array<Complex, 4>& nulls, const std::array<Complex, 4>& image);

// ---------------------------------------------------------------------------
// Rational normal curve of degree 2n

// [z^{2n} : x z^{2n-1} : ... : x^{2n}]
template <class R>
std::vector<R> rho_embed(long n, const R& x, const R& z)
{
    if (n < 1)
        throw std::invalid_argument("rho_embed needs n >= 1");
    std::vector<R> v;
    v.reserve(2 * n + 1);
    for (long k = 0; k <= 2 * n; ++k)
        v.push_back(power(x, k) * power(z, 2 * n - k));
    return v;
}

// Rank of the 6 x (2n+1) matrix of rho_2n at the Weierstrass points (nullopt = infinity).
template <class R>
long weierstrass_span(const std::vector<std::optional<R>>& roots, long n, const R& like)
{
    std::vector<std::vector<R>> rows;
    for (const auto& r : roots)
        rows.push_back(r ? rho_embed(n, *r, lift(like, 1)) : rho_embed(n, lift(like, 1), lift(like, 0)));
    return matrix_rank(rows);
}

}  // namespace g2
