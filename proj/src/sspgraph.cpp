#include "g2/sspgraph.hpp"

namespace g2 {

namespace {

Fp2 fp2(std::int64_t v, const Fp2& like)
{
    return lift(like, static_cast<long>(v));
}

BinaryForm<Fp2> sextic_from_coeffs(const std::vector<std::int64_t>& c, std::uint64_t p)
{
    Fp2 like = Fp2::make(0, 0, p);
    std::vector<Fp2> a;
    for (auto v : c)
        a.push_back(fp2(v, like));
    return BinaryForm<Fp2>(6, a);
}

Fp2 leading_coefficient(const BinaryForm<Fp2>& f)
{
    Poly<Fp2> p = f.dehomogenize();
    return p.lead();
}

std::optional<BinaryForm<Fp2>> try_superspecial(const BinaryForm<Fp2>& f)
{
    if (is_zero(binary_discriminant(f)))
        return std::nullopt;
    if (!is_superspecial(f))
        return std::nullopt;
    return f;
}

}  // namespace

std::string sextic_to_string(const BinaryForm<Fp2>& f)
{
    std::string s = "[";
    for (int i = 0; i <= f.n; ++i) {
        if (i)
            s += ",";
        s += to_string(f.a[i]);
    }
    return s + "]";
}

std::string node_key(const BinaryForm<Fp2>& f)
{
    auto inv = absolute_invariants(igusa_invariants(f));
    std::string s;
    for (size_t i = 0; i < inv.size(); ++i) {
        if (i)
            s += ";";
        s += to_string(inv[i]);
    }
    return s;
}

GraphNode GraphNode::from_sextic(const BinaryForm<Fp2>& f)
{
    if (f.n != 6)
        throw std::invalid_argument("graph nodes are binary sextics");
    if (is_zero(binary_discriminant(f)))
        throw std::domain_error("singular sextic");
    auto roots = form_roots(f);
    if (roots.size() != 6)
        throw std::domain_error("Weierstrass points are not all defined over F_{p^2}");
    return {f, roots, node_key(f)};
}

std::vector<Neighbor> neighbors(const GraphNode& node)
{
    Fp2 lead = leading_coefficient(node.sextic);
    std::vector<Neighbor> out;
    for (const auto& s : enumerate_splittings(node.roots, lead)) {
        Neighbor nb;
        nb.step.splitting = s.partition.str();
        nb.step.from = node.key;
        Fp2 d = delta_abc(s.A, s.B, s.C);
        if (!is_zero(d)) {
            auto cod = richelot_codomain(s);
            nb.codomain = cod.sextic;
            nb.step.to = node_key(cod.sextic);
        }
        out.push_back(std::move(nb));
    }
    return out;
}

bool node_q_zero(const GraphNode& node)
{
    return is_zero(q_modular(igusa_invariants(node.sextic)).value);
}

GraphNode start_node(std::uint64_t p)
{
    require_odd_prime(p);
    if (p < 7)
        throw std::domain_error("graph walks need p >= 7 (Igusa invariants need characteristic > 5)");
    // coefficient lists a_0 .. a_6 of x^i z^{6-i}
    const std::vector<std::vector<std::int64_t>> candidates = {
        {0, -1, 0, 0, 0, 1, 0},  // x^5 - x
        {-1, 0, 0, 0, 0, 0, 1},  // x^6 - 1
        {-1, 0, 0, 0, 0, 1, 0},  // x^5 - 1
        {1, 0, 0, 0, 0, 0, 1},   // x^6 + 1
    };
    for (const auto& c : candidates)
        if (auto f = try_superspecial(sextic_from_coeffs(c, p)))
            return GraphNode::from_sextic(*f);
    Fp2 like = Fp2::make(0, 0, p);
    for (std::uint64_t a = 2; a < p; ++a)
        for (std::uint64_t b = a + 1; b < p; ++b)
            for (std::uint64_t c = b + 1; c < p; ++c) {
                auto f = rosenhain_sextic(fp2(a, like), fp2(b, like), fp2(c, like));
                if (auto g = try_superspecial(f))
                    return GraphNode::from_sextic(*g);
            }
    throw std::domain_error("no superspecial start curve found");
}

WalkResult walk(const GraphNode& start, long steps, std::uint64_t seed)
{
    if (steps < 0)
        throw std::invalid_argument("steps must be nonnegative");
    std::mt19937_64 rng(seed);
    WalkResult out;
    GraphNode cur = start;
    out.nodes.push_back(cur.key);
    out.all_superspecial = is_superspecial(cur.sextic);
    for (long i = 0; i < steps; ++i) {
        auto nbs = neighbors(cur);
        std::vector<size_t> moves;
        for (size_t k = 0; k < nbs.size(); ++k)
            if (!nbs[k].step.split())
                moves.push_back(k);
        if (moves.empty())
            throw std::domain_error("all 15 Richelot steps split at node " + cur.key);
        size_t pick = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
        out.steps.push_back(nbs[pick].step);
        cur = GraphNode::from_sextic(*nbs[pick].codomain);
        out.nodes.push_back(cur.key);
        out.all_superspecial = out.all_superspecial && is_superspecial(cur.sextic);
    }
    out.last = cur.sextic;
    return out;
}

FindSplitResult find_split_path(const GraphNode& start, long budget, std::uint64_t seed)
{
    if (budget < 0)
        throw std::invalid_argument("budget must be nonnegative");
    std::mt19937_64 rng(seed);
    FindSplitResult out;
    GraphNode cur = start;
    out.path.nodes.push_back(cur.key);
    for (long i = 0;; ++i) {
        auto nbs = neighbors(cur);
        for (const auto& nb : nbs)
            if (nb.step.split()) {
                out.found = true;
                out.reason = "split-neighbor";
                out.split_label = nb.step.splitting;
                out.path.steps.push_back(nb.step);
                break;
            }
        if (!out.found && node_q_zero(cur)) {
            out.found = true;
            out.reason = "q-zero";
        }
        if (out.found || i >= budget) {
            out.steps_used = i;
            out.path.last = cur.sextic;
            return out;
        }
        std::vector<size_t> moves;
        for (size_t k = 0; k < nbs.size(); ++k)
            if (!nbs[k].step.split())
                moves.push_back(k);
        size_t pick = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
        out.path.steps.push_back(nbs[pick].step);
        cur = GraphNode::from_sextic(*nbs[pick].codomain);
        out.path.nodes.push_back(cur.key);
    }
}

std::vector<int> hex_to_bits(const std::string& hex)
{
    std::vector<int> bits;
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            v = ch - 'A' + 10;
        else
            throw std::invalid_argument(std::string("not a hex digit: ") + ch);
        for (int k = 3; k >= 0; --k)
            bits.push_back((v >> k) & 1);
    }
    return bits;
}

HashResult cds_hash(const std::vector<int>& bits, const GraphNode& start)
{
    if (bits.empty())
        throw std::invalid_argument("message must be nonempty");
    HashResult out;
    GraphNode cur = start;
    std::optional<std::string> prev;
    for (size_t i = 0; i < bits.size(); i += 3) {
        int digit = 0;
        for (size_t k = i; k < i + 3; ++k)
            digit = 2 * digit + (k < bits.size() ? bits[k] : 0);
        auto nbs = neighbors(cur);
        std::vector<size_t> cand;
        for (size_t k = 0; k < nbs.size(); ++k)
            if (!prev || !nbs[k].step.to || *nbs[k].step.to != *prev)
                cand.push_back(k);
        if (cand.empty())
            throw std::domain_error("no non-backtracking step at node " + cur.key);
        const Neighbor& nb = nbs[cand[static_cast<size_t>(digit) % cand.size()]];
        out.steps.push_back(nb.step);
        if (nb.step.split()) {
            out.weak = true;
            out.key = cur.key;
            return out;
        }
        prev = cur.key;
        cur = GraphNode::from_sextic(*nb.codomain);
    }
    out.key = cur.key;
    return out;
}

}  // namespace g2
