#include "g2/isogeny_nn.hpp"

#include <map>
#include <set>

namespace g2 {

namespace {

long mod(long x, long n) { return ((x % n) + n) % n; }

Real max_abs(const std::array<Complex, 4>& p)
{
    Real m = 0;
    for (const auto& c : p)
        m = std::max(m, abs(c));
    return m;
}

// Matrix-vector product with a symmetric 2x2 complex matrix.
CVec2 mat_vec(const SiegelPoint& t, const CVec2& z)
{
    return {t.t11 * z[0] + t.t12 * z[1], t.t12 * z[0] + t.t22 * z[1]};
}

// Reduce to a b-type problem: the effective period and the point z' in its coordinates.
struct Reduced {
    SiegelPoint tau;
    CVec2 z;
};

Reduced reduce(const SiegelPoint& tau, const TorsionKernel& G, const CVec2& z)
{
    switch (G.type()) {
    case KernelType::BType:
        return {tau, z};
    case KernelType::AType: {
        SiegelPoint m = tau.neg_inverse();
        CVec2 w = mat_vec(m, z);
        return {m, {-w[0], -w[1]}};  // tau^{-1} z
    }
    default:
        throw std::domain_error("Lubicz-Robert: only kernels {b/n} and {tau a/n} are supported");
    }
}

// The core sum at period tau (b-type kernel) and y = 2 n z.
LRResult lr_sum(const SiegelPoint& tau, const FourSquare& d, const CVec2& y, double tol)
{
    const long n = d.n;
    const auto F = quaternion_matrix(d);
    const auto& dual = dual_table();
    SiegelPoint tau2 = tau.scaled(Real(2));
    Complex cn{Real(n)};

    // dual index of a_u c mod 1: c itself for odd a_u, the zero characteristic otherwise
    auto char_of = [&](int u, int c) { return (d.a[u] % 2 != 0) ? c : 0; };

    // V[u][c][j0 * n + j1] = e(-c.j/n) theta[c;0](a_u y/n + j/n, 2 tau)
    long evaluations = 0;
    std::array<std::map<int, std::vector<Complex>>, 4> V;
    for (int u = 0; u < 4; ++u) {
        std::set<int> needed;
        for (int c = 0; c < 4; ++c)
            needed.insert(char_of(u, c));
        Complex au{Real(d.a[u])};
        CVec2 base{au * y[0] / cn, au * y[1] / cn};
        for (int c : needed) {
            std::vector<Complex> row(n * n);
            const auto& ch = dual[c];
            Real c0 = ch.a[0].get_d(), c1 = ch.a[1].get_d();
            for (long j0 = 0; j0 < n; ++j0)
                for (long j1 = 0; j1 < n; ++j1) {
                    CVec2 x{base[0] + Complex(Real(j0) / n), base[1] + Complex(Real(j1) / n)};
                    Complex th = theta_value(ch, x, tau2, tol);
                    ++evaluations;
                    row[j0 * n + j1] = e2pi(-(c0 * j0 + c1 * j1) / n) * th;
                }
            V[u][c] = std::move(row);
        }
    }

    LRResult out;
    out.theta_evaluations = evaluations;
    std::array<const std::vector<Complex>*, 4> rows;
    for (int c = 0; c < 4; ++c) {
        for (int u = 0; u < 4; ++u)
            rows[u] = &V[u].at(char_of(u, c));
        Complex acc(0);
        for (long k10 = 0; k10 < n; ++k10)
            for (long k11 = 0; k11 < n; ++k11)
                for (long k20 = 0; k20 < n; ++k20)
                    for (long k21 = 0; k21 < n; ++k21) {
                        Complex prod(1);
                        for (int u = 0; u < 4; ++u) {
                            long j0 = mod(F[u][0] * k10 + F[u][1] * k20, n);
                            long j1 = mod(F[u][0] * k11 + F[u][1] * k21, n);
                            prod *= (*rows[u])[j0 * n + j1];
                        }
                        acc += prod;
                    }
        out.coords[c] = acc / Complex(Real(n * n * n * n));
    }
    return out;
}

}  // namespace

FourSquare four_square(long n)
{
    if (n < 1)
        throw std::invalid_argument("four_square needs n >= 1");
    // Non-increasing tuples, scanning a1 upward so the first hit is lexicographically smallest.
    for (long a1 = 0; a1 * a1 <= n; ++a1)
        for (long a2 = 0; a2 <= a1; ++a2)
            for (long a3 = 0; a3 <= a2; ++a3)
                for (long a4 = 0; a4 <= a3; ++a4)
                    if (a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 == n)
                        return {n, {a1, a2, a3, a4}};
    throw std::logic_error("four_square: no decomposition found");
}

std::array<std::array<long, 4>, 4> quaternion_matrix(const FourSquare& d)
{
    auto [a1, a2, a3, a4] = d.a;
    return {{{a1, -a2, -a3, -a4}, {a2, a1, -a4, a3}, {a3, a4, a1, -a2}, {a4, -a3, a2, a1}}};
}

std::vector<TorsionGen> TorsionKernel::elements() const
{
    std::vector<TorsionGen> out;
    for (long c1 = 0; c1 < n; ++c1)
        for (long c2 = 0; c2 < n; ++c2) {
            TorsionGen g;
            for (int i = 0; i < 2; ++i) {
                g.a[i] = mod(c1 * gens[0].a[i] + c2 * gens[1].a[i], n);
                g.b[i] = mod(c1 * gens[0].b[i] + c2 * gens[1].b[i], n);
            }
            out.push_back(g);
        }
    return out;
}

long TorsionKernel::order() const
{
    std::set<std::array<long, 4>> s;
    for (const auto& g : elements())
        s.insert({g.a[0], g.a[1], g.b[0], g.b[1]});
    return static_cast<long>(s.size());
}

bool TorsionKernel::isotropic() const
{
    const auto &g1 = gens[0], &g2 = gens[1];
    long e = g1.a[0] * g2.b[0] + g1.a[1] * g2.b[1] - g2.a[0] * g1.b[0] - g2.a[1] * g1.b[1];
    return mod(e, n) == 0;
}

KernelType TorsionKernel::type() const
{
    auto zero = [&](const std::array<long, 2>& v) { return mod(v[0], n) == 0 && mod(v[1], n) == 0; };
    if (order() != n * n)
        return KernelType::General;
    if (zero(gens[0].a) && zero(gens[1].a))
        return KernelType::BType;
    if (zero(gens[0].b) && zero(gens[1].b))
        return KernelType::AType;
    return KernelType::General;
}

TorsionKernel make_kernel(long n, const TorsionGen& g1, const TorsionGen& g2)
{
    if (n < 1)
        throw std::invalid_argument("kernel order must be >= 1");
    TorsionKernel G{n, {g1, g2}};
    if (n > 1 && G.order() != n * n)
        throw std::domain_error("generators do not span a subgroup of order n^2");
    if (!G.isotropic())
        throw std::domain_error("kernel is not isotropic for the Weil pairing");
    return G;
}

TorsionKernel btype_kernel(long n)
{
    return make_kernel(n, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
}

TorsionKernel atype_kernel(long n)
{
    return make_kernel(n, {{1, 0}, {0, 0}}, {{0, 1}, {0, 0}});
}

CVec2 torsion_point(const SiegelPoint& tau, const TorsionGen& g, long n)
{
    CVec2 a{Complex(Real(g.a[0])), Complex(Real(g.a[1]))};
    CVec2 ta = mat_vec(tau, a);
    Complex cn{Real(n)};
    return {(ta[0] + Complex(Real(g.b[0]))) / cn, (ta[1] + Complex(Real(g.b[1]))) / cn};
}

LRResult lr_null_points(const SiegelPoint& tau, const TorsionKernel& G, const FourSquare& d, double tol)
{
    return lr_evaluate(tau, G, d, {Complex(0), Complex(0)}, tol);
}

LRResult lr_evaluate(const SiegelPoint& tau, const TorsionKernel& G, const FourSquare& d, const CVec2& z,
                     double tol)
{
    if (d.n != G.n)
        throw std::invalid_argument("four-square decomposition and kernel have different n");
    if (G.n == 1) {
        // Identity: theta[c;0](2z, 2 tau)
        LRResult out;
        CVec2 y{z[0] * Complex(Real(2)), z[1] * Complex(Real(2))};
        for (int c = 0; c < 4; ++c)
            out.coords[c] = theta_value(dual_table()[c], y, tau.scaled(Real(2)), tol);
        out.theta_evaluations = 4;
        return out;
    }
    Reduced r = reduce(tau, G, z);
    Complex s{Real(2 * G.n)};
    return lr_sum(r.tau, d, {s * r.z[0], s * r.z[1]}, tol);
}

SiegelPoint lr_codomain_period(const SiegelPoint& tau, const TorsionKernel& G)
{
    return reduce(tau, G, {Complex(0), Complex(0)}).tau.scaled(Real(G.n));
}

std::array<Complex, 4> lr_direct_oracle(const SiegelPoint& tau, const TorsionKernel& G, const CVec2& z, double tol)
{
    Reduced r = reduce(tau, G, z);
    SiegelPoint t = r.tau.scaled(Real(2 * G.n));
    Complex s{Real(2 * G.n)};
    CVec2 y{s * r.z[0], s * r.z[1]};
    std::array<Complex, 4> out;
    for (int c = 0; c < 4; ++c)
        out[c] = theta_value(dual_table()[c], y, t, tol);
    return out;
}

Real projective_distance(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v)
{
    Real nu = max_abs(u), nv = max_abs(v);
    if (nu == 0 || nv == 0)
        throw std::domain_error("projective_distance: zero vector");
    Real m = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            m = std::max(m, Real(abs(u[i] * v[j] - u[j] * v[i]) / (nu * nv)));
    return m;
}

std::array<Complex, 3> lr_codomain_lambdas(const std::array<Complex, 4>& U)
{
    return thomae_lambdas(veronese_map(U));
}

std::pair<Real, Real> lr_richelot_gate(const SiegelPoint& tau, double tol)
{
    // The LR null point is Theta(2 tau); its Veronese image gives theta_i^2(2 tau), and the
    // transposed characteristics permute labels by (2 8)(3 5)(4 7)(6 9).
    static const int perm[10] = {1, 8, 5, 7, 3, 9, 4, 2, 6, 10};
    LRResult U = lr_null_points(tau, btype_kernel(2), four_square(2), tol);
    auto sq2 = veronese_map(U.coords);
    std::array<Complex, 10> tsq;
    for (int i = 0; i < 10; ++i)
        tsq[i] = sq2[perm[i] - 1];
    auto Lambda = thomae_lambdas(tsq);

    auto direct = thomae_lambdas(transposed_nulls(tau.scaled(Real(2)), tol));
    Real dist = 0;
    for (int i = 0; i < 3; ++i)
        dist = std::max(dist, Real(abs(Lambda[i] - direct[i]) / std::max(Real(1), Real(abs(direct[i])))));

    auto sq = squares(even_nulls(tau, tol));
    auto l = thomae_lambdas(sq);
    auto lp = rescale_moduli(l[0], l[1], l[2], theta_branch(sq));
    auto Lp = rescale_moduli(Lambda[0], Lambda[1], Lambda[2], theta_branch(tsq));
    Real rel = 0;
    for (const auto& x : rescaled_relation_residuals(lp, Lp))
        rel = std::max(rel, x);
    return {dist, rel};
}

Real lr_hudson_residual(const std::array<Complex, 4>& nulls, const std::array<Complex, 4>& image)
{
    HudsonModel<Complex> H = hudson_from_seed(Point4<Complex>(nulls));
    Point4<Complex> p(image);
    Real m = max_abs(p);
    return abs(H.eval(p)) / (pow(m, 4) * (1 + abs(H.A) + abs(H.B) + abs(H.C) + 2 * abs(H.D)));
}

}  // namespace g2
