#pragma once

#include "g2/curves.hpp"
#include "g2/richelot.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace g2 {

// ---------------------------------------------------------------------------
// Finite-field helpers

inline Integer field_order(const Fp& x) { return Integer(static_cast<unsigned long>(x.modulus())); }
inline Integer field_order(const Fp2& x)
{
    Integer p(static_cast<unsigned long>(x.characteristic()));
    return p * p;
}
inline std::uint64_t field_characteristic(const Fp& x) { return x.modulus(); }
inline std::uint64_t field_characteristic(const Fp2& x) { return x.characteristic(); }
inline Fp random_like(const Fp& like, std::mt19937_64& rng) { return Fp::random(like.modulus(), rng); }
inline Fp2 random_like(const Fp2& like, std::mt19937_64& rng) { return Fp2::random(like, rng); }
inline std::pair<std::uint64_t, std::uint64_t> sort_key(const Fp& x) { return {0, x.value()}; }
inline std::pair<std::uint64_t, std::uint64_t> sort_key(const Fp2& x) { return {x.c1().value(), x.c0().value()}; }

// Distinct roots in the base field of a nonzero polynomial (Cantor-Zassenhaus equal-degree splitting).
// The result is sorted, and the internal randomness is fixed, so the output is deterministic.
template <class R>
std::vector<R> poly_roots(const Poly<R>& f)
{
    if (f.is_zero_poly())
        throw std::invalid_argument("roots of the zero polynomial");
    if (f.degree() < 1)
        return {};
    const R& like = f.zero();
    Integer q = field_order(like);
    Poly<R> x = Poly<R>::monomial(lift(like, 1), 1);
    Poly<R> m = f.monic();
    Poly<R> g = poly_gcd(m, poly_powmod(x, q, m) - x);  // product of the distinct linear factors

    std::vector<R> out;
    std::mt19937_64 rng(0x2545F4914F6CDD1DULL);
    std::vector<Poly<R>> work{g};
    Integer half = (q - 1) / 2;
    while (!work.empty()) {
        Poly<R> h = work.back();
        work.pop_back();
        if (h.degree() < 1)
            continue;
        if (h.degree() == 1) {
            out.push_back(-h[0] / h[1]);
            continue;
        }
        for (;;) {
            Poly<R> t = Poly<R>({random_like(like, rng), lift(like, 1)}, like);
            Poly<R> s = poly_gcd(h, poly_powmod(t, half, h) - Poly<R>::monomial(lift(like, 1), 0));
            if (s.degree() > 0 && s.degree() < h.degree()) {
                work.push_back(s);
                work.push_back(h / s);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const R& a, const R& b) { return sort_key(a) < sort_key(b); });
    return out;
}

// Roots of a binary form as points of P^1 (nullopt = infinity), each listed once.
template <class R>
std::vector<std::optional<R>> form_roots(const BinaryForm<R>& f)
{
    Poly<R> p = f.dehomogenize();
    std::vector<std::optional<R>> out;
    for (const auto& r : poly_roots(p))
        out.push_back(r);
    if (p.degree() < f.n)
        out.push_back(std::nullopt);
    return out;
}

// Cartier-Manin matrix of y^2 = f(x): entries are the coefficients of x^{ip-j} in f^{(p-1)/2}, i, j = 1, 2.
template <class R>
std::array<std::array<R, 2>, 2> cartier_manin(const BinaryForm<R>& f)
{
    std::uint64_t p = field_characteristic(f.a[0]);
    if (p == 2)
        throw std::domain_error("Cartier-Manin test needs odd p");
    if (f.n != 6)
        throw std::invalid_argument("Cartier-Manin test needs a binary sextic");
    Poly<R> base = f.dehomogenize();
    Poly<R> h = Poly<R>::monomial(lift(f.a[0], 1), 0);
    for (std::uint64_t k = 0; k < (p - 1) / 2; ++k)
        h = h * base;
    std::array<std::array<R, 2>, 2> m;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            m[i - 1][j - 1] = h[static_cast<size_t>(i * p - j)];
    return m;
}

template <class R>
bool is_superspecial(const BinaryForm<R>& f)
{
    if (is_zero(binary_discriminant(f)))
        throw std::domain_error("singular sextic");
    for (const auto& row : cartier_manin(f))
        for (const auto& e : row)
            if (!is_zero(e))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Graph over F_{p^2}

// Canonical key: absolute invariants of the Igusa point, serialized.
std::string node_key(const BinaryForm<Fp2>& f);

struct GraphNode {
    BinaryForm<Fp2> sextic;
    std::vector<std::optional<Fp2>> roots;  // six labeled roots, sorted; infinity last
    std::string key;

    static GraphNode from_sextic(const BinaryForm<Fp2>& f);
};

struct WalkStep {
    std::string splitting;  // partition label "12|34|56"
    std::string from;
    std::optional<std::string> to;  // nullopt = SPLIT (Delta_ABC = 0)
    bool split() const { return !to.has_value(); }
};

struct Neighbor {
    WalkStep step;
    std::optional<BinaryForm<Fp2>> codomain;
};

// The 15 Richelot steps in canonical splitting order.
std::vector<Neighbor> neighbors(const GraphNode& node);

// True when the node's Igusa point has Q = 0.
bool node_q_zero(const GraphNode& node);

// Default start node at p: the first superspecial curve among y^2 = x^5 - x, x^6 - 1, x^5 - 1, x^6 + 1,
// then a deterministic search over Rosenhain triples in F_p.
GraphNode start_node(std::uint64_t p);

struct WalkResult {
    std::vector<WalkStep> steps;
    std::vector<std::string> nodes;  // visited keys, start first
    bool all_superspecial = true;
    std::optional<BinaryForm<Fp2>> last;
};

// Random walk: each step picks uniformly among the non-split neighbors.
WalkResult walk(const GraphNode& start, long steps, std::uint64_t seed);

struct FindSplitResult {
    bool found = false;
    WalkResult path;
    std::string reason;  // "split-neighbor" or "q-zero"
    std::optional<std::string> split_label;
    long steps_used = 0;
};

FindSplitResult find_split_path(const GraphNode& start, long budget, std::uint64_t seed);

struct HashResult {
    std::string key;
    std::vector<WalkStep> steps;
    bool weak = false;  // a SPLIT was selected; the walk stopped there
};

// Message bits are consumed three at a time (zero-padded); each digit selects among the non-backtracking
// splittings in canonical order, modulo their number.
HashResult cds_hash(const std::vector<int>& bits, const GraphNode& start);
std::vector<int> hex_to_bits(const std::string& hex);

std::string sextic_to_string(const BinaryForm<Fp2>& f);

}  // namespace g2
