#pragma once

#include "g2/algebra.hpp"

#include <array>
#include <random>
#include <string>

namespace g2 {

using CVec2 = std::array<Complex, 2>;

// Symmetric 2x2 complex matrix with positive definite imaginary part.
struct SiegelPoint {
    Complex t11, t12, t22;

    SiegelPoint(Complex a, Complex b, Complex c);

    SiegelPoint scaled(const Real& s) const;
    SiegelPoint neg_inverse() const;  // -tau^{-1}
    SiegelPoint neg_conj() const;     // -conj(tau)
    Real min_imag_eigenvalue() const;
};

// Random period: Re entries uniform in [-1/2, 1/2], Im with eigenvalues uniform in [lo, hi].
SiegelPoint random_siegel(std::mt19937_64& rng, double lo = 0.8, double hi = 2.0);
// Random point with real and imaginary parts uniform in [-scale, scale].
CVec2 random_cvec2(std::mt19937_64& rng, double scale = 0.5);

// Characteristic [a; b] with a, b in Q^2 (half-integers for the labeled table).
struct ThetaChar {
    std::array<Rational, 2> a, b;

    int parity() const;  // 4 a.b mod 2 for half-integral characteristics
    ThetaChar transposed() const { return {b, a}; }
    std::string str() const;
};

// theta_1 .. theta_16: the first ten are even, the last six odd.
const std::array<ThetaChar, 16>& theta_table();
// Characteristic [a; 0] of Theta_1 .. Theta_4.
const std::array<ThetaChar, 4>& dual_table();
// Sign rows e_ij of the degree-two doubling identities.
const std::array<std::array<int, 4>, 4>& doubling_signs();

// Lattice sum with tail bound below tol; for large Im z the bound is relative to the Gaussian
// envelope exp(pi v^T (Im tau)^{-1} v), v = Im z.
Complex theta_value(const ThetaChar& c, const CVec2& z, const SiegelPoint& tau, double tol = 1e-12);
// Number of lattice terms theta_value uses at (z, tau, tol).
long theta_term_count(const CVec2& z, const SiegelPoint& tau, double tol);

struct ThetaNulls {
    std::array<Complex, 10> th;

    const Complex& at(int label) const { return th.at(label - 1); }  // 1-based labels
    Complex sq(int label) const { return at(label) * at(label); }
    // True when some null is below tol relative to the largest (chi10 vanishes).
    bool chi10_degenerate(double tol = 1e-20) const;
};

struct DualThetaNulls {
    std::array<Complex, 4> th;

    const Complex& at(int label) const { return th.at(label - 1); }
};

ThetaNulls even_nulls(const SiegelPoint& tau, double tol = 1e-12);
DualThetaNulls dual_nulls(const SiegelPoint& tau, double tol = 1e-12);
// theta[b_i; a_i](0, tau2) for the even table: at tau2 = 2 tau these are the nulls of the
// Richelot-isogenous surface, with the first four equal to the dual nulls of tau.
ThetaNulls transposed_nulls(const SiegelPoint& tau2, double tol = 1e-12);

// Squared nulls theta_i^2 as plain numbers (projective data for the algebraic layer).
std::array<Complex, 10> squares(const ThetaNulls& n);

std::array<Complex, 3> thomae_lambdas(const std::array<Complex, 10>& sq);
std::array<Complex, 3> thomae_lambdas(const ThetaNulls& n);

// Relative residuals of the six Picard-type identities for lambda_i - 1 and lambda_j - lambda_i.
std::array<Real, 6> picard_residuals(const ThetaNulls& n);
// theta_i^4 against the Thomae products with one fitted constant; relative residuals.
std::array<Real, 10> thomae_residuals(const ThetaNulls& n);

// Maximum residual of the three product and three fourth-power Frobenius identities.
Real frobenius_check(const ThetaNulls& n);
// Maximum residual of the degree-two doubling of theta_1..theta_10 from Theta_1..Theta_4.
Real doubling_check(const ThetaNulls& n, const DualThetaNulls& d);
// Maximum residual of the z-dependent doubling identities at (tau, z).
Real doubling_z_check(const SiegelPoint& tau, const CVec2& z, double tol = 1e-12);
// theta(z1+z2) theta(z1-z2) against sum_a theta[a;0](2 z1, 2 tau) theta[a;0](2 z2, 2 tau).
Real riemann_check(const SiegelPoint& tau, const CVec2& z1, const CVec2& z2, double tol = 1e-12);

// The ten quadratics in Theta_1..Theta_4 that equal theta_1^2 .. theta_10^2.
std::array<Complex, 10> veronese_map(const std::array<Complex, 4>& T);

struct SatakeImages {
    std::array<Complex, 10> square;    // theta_i^2
    std::array<Complex, 10> veronese;  // quadratics in Theta_j
    Real residual;                     // max relative difference of the two images
};
SatakeImages satake_maps(const ThetaNulls& n, const DualThetaNulls& d);

}  // namespace g2
