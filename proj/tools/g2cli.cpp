// Command-line front end: every subcommand prints one JSON document (or flattened text).
#include "g2/isogeny_nn.hpp"
#include "g2/kummer.hpp"
#include "g2/richelot.hpp"
#include "g2/sandwich.hpp"
#include "g2/split.hpp"
#include "g2/sspgraph.hpp"
#include "g2/theta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace g2;

namespace {

// Input errors detected by the front end itself (exit code 2).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

constexpr double kThetaTol = 1e-12;
constexpr double kCheckTol = 1e-8;

// ---------------------------------------------------------------------------
// Fields and element parsing

enum class FieldKind { Q, Fp, Fp2 };

struct FieldSpec {
    FieldKind kind = FieldKind::Q;
    std::uint64_t p = 0;
};

FieldSpec parse_field(const json& j)
{
    FieldSpec f;
    if (j.is_null())
        return f;
    std::string type = j.value("type", "Q");
    if (type == "Q")
        return f;
    if (!j.contains("p") || !j["p"].is_number_unsigned())
        throw UsageError("finite field needs an unsigned integer p");
    f.p = j["p"].get<std::uint64_t>();
    require_odd_prime(f.p);
    if (type == "Fp")
        f.kind = FieldKind::Fp;
    else if (type == "Fp2")
        f.kind = FieldKind::Fp2;
    else
        throw UsageError("field type must be Q, Fp or Fp2");
    return f;
}

json field_json(const FieldSpec& f)
{
    if (f.kind == FieldKind::Q)
        return {{"type", "Q"}};
    return {{"type", f.kind == FieldKind::Fp ? "Fp" : "Fp2"}, {"p", f.p}};
}

Rational rational_of(const json& v)
{
    if (v.is_number_integer())
        return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    throw UsageError("expected a rational as an integer or a string \"a/b\": " + v.dump());
}

Fp fp_of_rational(const Rational& q, std::uint64_t p)
{
    auto reduce = [&](const Integer& n) {
        Integer r = n % Integer(static_cast<unsigned long>(p));
        if (r < 0)
            r += Integer(static_cast<unsigned long>(p));
        return Fp::from_u64(r.get_ui(), p);
    };
    Fp d = reduce(q.get_den());
    if (is_zero(d))
        throw std::domain_error("denominator vanishes modulo p");
    return reduce(q.get_num()) / d;
}

template <class R>
R element(const json& v, const R& like);

template <>
Rational element(const json& v, const Rational&)
{
    return rational_of(v);
}

template <>
Fp element(const json& v, const Fp& like)
{
    return fp_of_rational(rational_of(v), like.modulus());
}

template <>
Fp2 element(const json& v, const Fp2& like)
{
    std::uint64_t p = like.characteristic();
    if (v.is_array()) {
        if (v.size() != 2)
            throw UsageError("F_p2 elements are [c0, c1]");
        return Fp2(fp_of_rational(rational_of(v[0]), p), fp_of_rational(rational_of(v[1]), p), like.ns());
    }
    return Fp2(fp_of_rational(rational_of(v), p), Fp(0, p), like.ns());
}

json elem_json(const Rational& x) { return to_string(x); }
json elem_json(const Fp& x) { return x.value(); }
json elem_json(const Fp2& x) { return json::array({x.c0().value(), x.c1().value()}); }
json elem_json(const Complex& x) { return json::array({to_string(x.re, 25), to_string(x.im, 25)}); }

template <class R>
json elems_json(const std::vector<R>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(elem_json(x));
    return a;
}

template <class R, size_t N>
json elems_json(const std::array<R, N>& v)
{
    return elems_json(std::vector<R>(v.begin(), v.end()));
}

Rational like_of(const FieldSpec&, const Rational*) { return Rational(0); }
Fp like_of(const FieldSpec& f, const Fp*) { return Fp(0, f.p); }
Fp2 like_of(const FieldSpec& f, const Fp2*) { return Fp2::make(0, 0, f.p); }

// ---------------------------------------------------------------------------
// Curves

template <class R>
struct CurveInput {
    std::string model;
    BinaryForm<R> sextic;
    std::optional<std::array<R, 3>> rosenhain;
    std::optional<std::vector<std::optional<R>>> roots;  // labeled Weierstrass roots when known
    R lead;
    std::optional<R> legendre;
};

template <class R>
json sextic_json(const BinaryForm<R>& f, const FieldSpec& fs)
{
    return {{"model", "sextic"}, {"coefficients", elems_json(f.a)}, {"field", field_json(fs)}};
}

template <class R>
CurveInput<R> parse_curve(const json& j, const FieldSpec& fs)
{
    R like = like_of(fs, static_cast<R*>(nullptr));
    CurveInput<R> c{j.value("model", ""), {}, {}, {}, lift(like, 1), {}};
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key))
            throw UsageError(std::string("curve model ") + c.model + " needs \"" + key + "\"");
        return j[key];
    };
    if (c.model == "sextic") {
        const json& a = need("coefficients");
        if (!a.is_array() || a.size() != 7)
            throw UsageError("sextic coefficients are a0..a6 (coefficient of x^i z^(6-i))");
        std::vector<R> co;
        for (const auto& v : a)
            co.push_back(element(v, like));
        c.sextic = BinaryForm<R>(6, co);
        if (c.sextic.is_zero_form())
            throw UsageError("zero sextic");
        Poly<R> p = c.sextic.dehomogenize();
        c.lead = p.lead();
    } else if (c.model == "rosenhain") {
        const json& l = need("lambda");
        if (!l.is_array() || l.size() != 3)
            throw UsageError("rosenhain lambda is [l1, l2, l3]");
        std::array<R, 3> lam{element(l[0], like), element(l[1], like), element(l[2], like)};
        require_rosenhain(lam[0], lam[1], lam[2]);
        c.rosenhain = lam;
        c.sextic = rosenhain_sextic(lam[0], lam[1], lam[2]);
        c.roots = rosenhain_roots(lam[0], lam[1], lam[2]);
    } else if (c.model == "bolza") {
        const json& s = need("s");
        if (!s.is_array() || s.size() != 2)
            throw UsageError("bolza s is [s1, s2]");
        c.sextic = bolza_sextic(element(s[0], like), element(s[1], like));
        c.lead = c.sextic.dehomogenize().lead();
    } else if (c.model == "roots") {
        const json& r = need("roots");
        if (!r.is_array() || r.size() != 6)
            throw UsageError("roots model needs six entries (null = infinity)");
        std::vector<std::optional<R>> roots;
        for (const auto& v : r)
            roots.push_back(v.is_null() ? std::nullopt : std::optional<R>(element(v, like)));
        if (j.contains("lead"))
            c.lead = element(j["lead"], like);
        c.sextic = form_from_roots(roots, like).scale(c.lead);
        c.roots = roots;
    } else if (c.model == "legendre") {
        c.legendre = element(need("lambda"), like);
    } else {
        throw UsageError("curve model must be sextic, rosenhain, bolza, roots or legendre");
    }
    return c;
}

// Labeled roots: stored ones, otherwise root finding over finite fields.
template <class R>
std::vector<std::optional<R>> curve_roots(const CurveInput<R>& c)
{
    if (c.roots)
        return *c.roots;
    if constexpr (std::is_same_v<R, Rational>) {
        throw std::domain_error("roots of a sextic over Q are not computed; use the rosenhain or roots model");
    } else {
        auto r = form_roots(c.sextic);
        if (r.size() != 6)
            throw std::domain_error("the sextic does not split over the given field");
        return r;
    }
}

template <class R>
json igusa_point_json(const IgusaPoint<R>& I)
{
    return {{"J2", elem_json(I.J2)}, {"J4", elem_json(I.J4)}, {"J6", elem_json(I.J6)}, {"J10", elem_json(I.J10)}};
}

struct Context {
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned precision_bits = kDefaultPrecisionBits;
};

// Dispatch a curve-consuming job on the field named in the curve JSON.
json with_curve(const std::string& curve_text, const std::vector<std::string>& rosenhain,
                const std::function<json(const CurveInput<Rational>&, const FieldSpec&)>& fq,
                const std::function<json(const CurveInput<Fp>&, const FieldSpec&)>& fp,
                const std::function<json(const CurveInput<Fp2>&, const FieldSpec&)>& fp2)
{
    json j;
    if (!rosenhain.empty()) {
        if (rosenhain.size() != 3)
            throw UsageError("--rosenhain takes three values");
        j = {{"model", "rosenhain"}, {"lambda", rosenhain}};
    } else if (!curve_text.empty()) {
        try {
            j = json::parse(curve_text);
        } catch (const json::parse_error& e) {
            throw UsageError(std::string("--curve is not valid JSON: ") + e.what());
        }
    } else {
        throw UsageError("give --curve <json> or --rosenhain l1 l2 l3");
    }
    FieldSpec fs = parse_field(j.contains("field") ? j["field"] : json());
    switch (fs.kind) {
    case FieldKind::Q:
        return fq(parse_curve<Rational>(j, fs), fs);
    case FieldKind::Fp:
        return fp(parse_curve<Fp>(j, fs), fs);
    default:
        return fp2(parse_curve<Fp2>(j, fs), fs);
    }
}

template <class R>
json curve_invariants(const CurveInput<R>& c, const FieldSpec& fs)
{
    if (c.legendre)
        return {{"model", "legendre"}, {"j", elem_json(legendre_j(*c.legendre))}, {"field", field_json(fs)}};
    auto I = igusa_invariants(c.sextic);
    return {{"curve", sextic_json(c.sextic, fs)},
            {"igusa", igusa_point_json(I)},
            {"absolute", elems_json(absolute_invariants(I))}};
}

template <class R>
json curve_q(const CurveInput<R>& c, const FieldSpec&)
{
    if (c.legendre)
        throw UsageError("Q is defined for genus-two curves");
    auto Q = q_modular(igusa_invariants(c.sextic));
    return {{"q", elem_json(Q.value)}, {"split", is_zero(Q.value)}, {"weight", Q.weight}};
}

template <class R>
json curve_pringsheim(const CurveInput<R>& c, const FieldSpec&)
{
    if (!c.rosenhain)
        throw UsageError("pringsheim needs a Rosenhain curve");
    const auto& l = *c.rosenhain;
    auto rep = pringsheim_product(l[0], l[1], l[2]);
    R modular = pringsheim_modular_side(igusa_invariants(c.sextic));
    json zeros = json::array();
    for (int i = 0; i < 15; ++i)
        if (is_zero(rep.factors[i]))
            zeros.push_back(i + 1);
    return {{"product", elem_json(rep.product)},
            {"modular_side", elem_json(modular)},
            {"equal", rep.product == modular},
            {"vanishing_factors", zeros},
            {"humbert4", rep.on_humbert4()}};
}

template <class R>
json richelot_step(const CurveInput<R>& c, const FieldSpec& fs, const std::string& splitting)
{
    auto roots = curve_roots(c);
    auto s = splitting_for(roots, c.lead, PairPartition::parse(splitting));
    auto cod = richelot_codomain(s);
    return {{"splitting", s.partition.str()},
            {"delta", elem_json(cod.delta)},
            {"codomain", sextic_json(cod.sextic, fs)},
            {"igusa", igusa_point_json(igusa_invariants(cod.sextic))}};
}

template <class R>
json split_detect_json(const CurveInput<R>& c, const FieldSpec&)
{
    SplitReport<R> rep = c.rosenhain ? split_detect_rosenhain((*c.rosenhain)[0], (*c.rosenhain)[1], (*c.rosenhain)[2])
                                     : split_detect(c.sextic);
    json out = {{"q", elem_json(rep.q)}, {"split", rep.split}};
    if (rep.pringsheim) {
        json zeros = json::array();
        for (int i = 0; i < 15; ++i)
            if (is_zero(rep.pringsheim->factors[i]))
                zeros.push_back(i + 1);
        out["pringsheim"] = {{"product", elem_json(rep.pringsheim->product)}, {"vanishing_factors", zeros}};
    }
    return out;
}

// ---------------------------------------------------------------------------
// Complex input

Real real_of(const json& v)
{
    if (v.is_number())
        return Real(v.get<double>());
    if (v.is_string())
        return Real(v.get<std::string>());
    throw UsageError("expected a real number: " + v.dump());
}

Complex complex_of(const json& v)
{
    if (v.is_array() && v.size() == 2)
        return Complex(real_of(v[0]), real_of(v[1]));
    return Complex(real_of(v), Real(0));
}

json complex_json(const Complex& z) { return elem_json(z); }

SiegelPoint parse_tau(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--tau is not valid JSON: ") + e.what());
    }
    SiegelPoint t = [&] {
        if (j.is_object())
            return SiegelPoint(complex_of(j.at("t11")), complex_of(j.at("t12")), complex_of(j.at("t22")));
        if (j.is_array() && j.size() == 3)
            return SiegelPoint(complex_of(j[0]), complex_of(j[1]), complex_of(j[2]));
        throw UsageError("--tau is {\"t11\":[re,im],\"t12\":..,\"t22\":..} or [t11, t12, t22]");
    }();
    if (t.min_imag_eigenvalue() <= 0)
        throw std::domain_error("Im tau is not positive definite");
    return t;
}

json tau_json(const SiegelPoint& t)
{
    return {{"t11", complex_json(t.t11)}, {"t12", complex_json(t.t12)}, {"t22", complex_json(t.t22)}};
}

CVec2 parse_point(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--point is not valid JSON: ") + e.what());
    }
    if (!j.is_array() || j.size() != 2)
        throw UsageError("--point is [z1, z2] with complex entries [re, im]");
    return {complex_of(j[0]), complex_of(j[1])};
}

json max_json(const Real& r, double tol) { return {{"max", to_double(r)}, {"tol", tol}, {"pass", r < tol}}; }

template <size_t N>
Real max_of(const std::array<Real, N>& a)
{
    Real m = 0;
    for (const auto& x : a)
        m = std::max(m, x);
    return m;
}

// ---------------------------------------------------------------------------
// Output

void flatten(const json& j, const std::string& prefix, std::ostream& os)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
        for (size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, const std::string& format, std::ostream& os)
{
    if (format == "text")
        flatten(j, "", os);
    else
        os << j.dump(2) << "\n";
}

int fail(const std::string& code, const std::string& message, int exit_code, const std::string& format)
{
    emit({{"error", {{"code", code}, {"message", message}}}}, format, std::cout);
    return exit_code;
}

unsigned precision_from_env()
{
    const char* env = std::getenv("G2_PRECISION");
    if (!env || !*env)
        return kDefaultPrecisionBits;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 64 || v > 100000)
        throw UsageError("G2_PRECISION must be an integer number of bits in [64, 100000]");
    return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"g2: genus-two curves, Kummer surfaces, Richelot and (n,n)-isogenies"};
    app.require_subcommand(1);
    Context ctx;
    app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", ctx.seed, "64-bit seed for every random choice");

    std::function<json()> job;
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    // shared option storage
    std::string curve_text, splitting, tau_text, point_text, from = "rosenhain", to, model, kernel = "b", mode = "exact",
                                                                msg;
    std::vector<std::string> rosenhain, seed_point, branch;
    std::string l1_text, l2_text;
    double tol = kThetaTol;
    long count = 10, n = 3, steps = 100, budget = 10000;
    std::uint64_t p = 13;

    auto add_curve = [&](CLI::App* s) {
        s->add_option("--curve", curve_text, "curve JSON");
        s->add_option("--rosenhain", rosenhain, "Rosenhain roots l1 l2 l3")->expected(3);
    };

    // curve
    auto* curve = group("curve", "Igusa invariants, the modular form Q, the Pringsheim product");
    auto* c_inv = leaf(curve, "invariants", "Igusa-Clebsch invariants and absolute invariants");
    add_curve(c_inv);
    c_inv->callback([&] {
        job = [&] { return with_curve(curve_text, rosenhain, curve_invariants<Rational>, curve_invariants<Fp>,
                                      curve_invariants<Fp2>); };
    });
    auto* c_q = leaf(curve, "q", "evaluate Q; zero iff the Jacobian is (2,2)-split");
    add_curve(c_q);
    c_q->callback([&] {
        job = [&] { return with_curve(curve_text, rosenhain, curve_q<Rational>, curve_q<Fp>, curve_q<Fp2>); };
    });
    auto* c_pr = leaf(curve, "pringsheim", "product of the 15 squared factors against the modular side");
    add_curve(c_pr);
    c_pr->callback([&] {
        job = [&] { return with_curve(curve_text, rosenhain, curve_pringsheim<Rational>, curve_pringsheim<Fp>,
                                      curve_pringsheim<Fp2>); };
    });

    // theta
    auto* theta = group("theta", "theta constants and identity checks");
    auto* t_nulls = leaf(theta, "nulls", "the ten even theta constants");
    t_nulls->add_option("--tau", tau_text, "period matrix JSON (random when omitted)");
    t_nulls->add_option("--tol", tol, "series truncation tolerance");
    t_nulls->callback([&] {
        job = [&] {
            std::mt19937_64 rng(ctx.seed);
            SiegelPoint tau = tau_text.empty() ? random_siegel(rng) : parse_tau(tau_text);
            ThetaNulls nn = even_nulls(tau, tol);
            json vals = json::array();
            for (int i = 0; i < 10; ++i)
                vals.push_back({{"label", i + 1}, {"char", theta_table()[i].str()}, {"value", complex_json(nn.th[i])}});
            return json{{"tau", tau_json(tau)}, {"tol", tol}, {"nulls", vals}};
        };
    });
    auto* t_check = leaf(theta, "check", "Picard, Thomae, Frobenius and doubling residuals");
    t_check->add_option("--tau", tau_text, "period matrix JSON (random when omitted)");
    t_check->add_option("--tol", tol, "series truncation tolerance");
    t_check->callback([&] {
        job = [&] {
            std::mt19937_64 rng(ctx.seed);
            SiegelPoint tau = tau_text.empty() ? random_siegel(rng) : parse_tau(tau_text);
            ThetaNulls nn = even_nulls(tau, tol);
            DualThetaNulls d = dual_nulls(tau, tol);
            return json{{"tau", tau_json(tau)},
                        {"picard", max_json(max_of(picard_residuals(nn)), kCheckTol)},
                        {"thomae", max_json(max_of(thomae_residuals(nn)), kCheckTol)},
                        {"frobenius", max_json(frobenius_check(nn), kCheckTol)},
                        {"doubling", max_json(doubling_check(nn, d), kCheckTol)}};
        };
    });

    // richelot
    auto* rich = group("richelot", "Richelot (2,2)-isogenies");
    auto* r_step = leaf(rich, "step", "codomain sextic for one quadratic splitting");
    add_curve(r_step);
    r_step->add_option("--splitting", splitting, "pair partition such as 12|34|56")->required();
    r_step->callback([&] {
        job = [&] {
            return with_curve(
                curve_text, rosenhain,
                [&](const CurveInput<Rational>& c, const FieldSpec& f) { return richelot_step(c, f, splitting); },
                [&](const CurveInput<Fp>& c, const FieldSpec& f) { return richelot_step(c, f, splitting); },
                [&](const CurveInput<Fp2>& c, const FieldSpec& f) { return richelot_step(c, f, splitting); });
        };
    });
    auto* r_mod = leaf(rich, "moduli", "rescaled moduli and the isogenous Rosenhain moduli");
    r_mod->add_option("--rosenhain", rosenhain, "Rosenhain roots l1 l2 l3")->expected(3)->required();
    r_mod->add_option("--branch", branch, "square root l of l1 l2 l3 (default: the positive rational root)")
        ->expected(1);
    r_mod->callback([&] {
        job = [&] {
            std::array<Rational, 3> l{parse_rational(rosenhain[0]), parse_rational(rosenhain[1]),
                                      parse_rational(rosenhain[2])};
            require_rosenhain(l[0], l[1], l[2]);
            std::array<Rational, 3> lp;
            if (branch.empty()) {
                lp = rescale_moduli(l[0], l[1], l[2]);
            } else {
                Rational b = parse_rational(branch[0]);
                if (b * b != l[0] * l[1] * l[2])
                    throw std::domain_error("--branch does not square to l1 l2 l3");
                lp = rescale_moduli(l[0], l[1], l[2], b);
            }
            auto Lp = isogenous_moduli(lp);
            return json{{"lambda", elems_json(l)},
                        {"rescaled", elems_json(lp)},
                        {"isogenous_rescaled", elems_json(Lp)},
                        {"round_trip", isogenous_moduli_inverse(Lp) == lp}};
        };
    });

    // kummer
    auto* kum = group("kummer", "Kummer surface models");
    auto* k_model = leaf(kum, "model", "parameters of a Kummer model");
    k_model->add_option("--from", from, "rosenhain or seed")->check(CLI::IsMember({"rosenhain", "seed"}));
    k_model->add_option("--to", to, "target model")
        ->required()
        ->check(CLI::IsMember({"hudson", "goepel", "baker", "cf", "shioda", "rosenhainq"}));
    k_model->add_option("--rosenhain", rosenhain, "Rosenhain roots l1 l2 l3")->expected(3);
    k_model->add_option("--point", seed_point, "seed point w x y z")->expected(4);
    k_model->callback([&] {
        job = [&]() -> json {
            if (from == "seed") {
                if (seed_point.size() != 4)
                    throw UsageError("--from seed needs --point w x y z");
                Point4<Rational> s;
                for (int i = 0; i < 4; ++i)
                    s[i] = parse_rational(seed_point[i]);
                if (to == "hudson") {
                    auto H = hudson_from_seed(s);
                    return {{"model", "hudson"},
                            {"parameters", {{"A", elem_json(H.A)}, {"B", elem_json(H.B)}, {"C", elem_json(H.C)},
                                            {"D", elem_json(H.D)}}},
                            {"constraint", elem_json(H.constraint())}};
                }
                if (to == "goepel") {
                    auto G = goepel_from_seed(s);
                    return {{"model", "goepel"},
                            {"parameters", {{"alpha", elem_json(G.alpha)}, {"beta", elem_json(G.beta)},
                                            {"gamma", elem_json(G.gamma)}, {"delta2", elem_json(G.delta2)}}},
                            {"constraint", elem_json(G.constraint())}};
                }
                if (to == "rosenhainq") {
                    auto Rq = rosenhainq_from_seed(s);
                    return {{"model", "rosenhainq"},
                            {"parameters", {{"a", elem_json(Rq.a)}, {"b", elem_json(Rq.b)}, {"c", elem_json(Rq.c)},
                                            {"d2", elem_json(Rq.d2)}}}};
                }
                throw UsageError("--from seed supports hudson, goepel and rosenhainq");
            }
            if (rosenhain.size() != 3)
                throw UsageError("--from rosenhain needs --rosenhain l1 l2 l3");
            std::array<Rational, 3> l{parse_rational(rosenhain[0]), parse_rational(rosenhain[1]),
                                      parse_rational(rosenhain[2])};
            require_rosenhain(l[0], l[1], l[2]);
            if (to == "hudson") {
                auto H = hudson_from_rosenhain(l);
                return {{"model", "hudson"},
                        {"parameters", {{"A", elem_json(H.A)}, {"B", elem_json(H.B)}, {"C", elem_json(H.C)},
                                        {"D", elem_json(H.D)}}},
                        {"constraint", elem_json(H.constraint())}};
            }
            if (to == "goepel") {
                auto G = goepel_from_rosenhain(l);
                return {{"model", "goepel"},
                        {"parameters", {{"alpha", elem_json(G.alpha)}, {"beta", elem_json(G.beta)},
                                        {"gamma", elem_json(G.gamma)}, {"delta2", elem_json(G.delta2)}}},
                        {"delta", elem_json(goepel_delta_from_rosenhain(l))},
                        {"constraint", elem_json(G.constraint())}};
            }
            if (to == "baker" || to == "cf") {
                auto L = l_values(l);
                return {{"model", to == "cf" ? "cassels_flynn" : "baker"},
                        {"lambda", elems_json(l)},
                        {"L", json::array({elem_json(L.L1), elem_json(L.L2), elem_json(L.L3), elem_json(L.L4)})}};
            }
            if (to == "shioda")
                return {{"model", "shioda"}, {"lambda", elems_json(l)}};
            throw UsageError("--from rosenhain supports hudson, goepel, baker, cf and shioda");
        };
    });
    auto* k_nodes = leaf(kum, "nodes", "the sixteen nodes, each verified singular");
    k_nodes->add_option("--model", model, "hudson, goepel or cf")
        ->required()
        ->check(CLI::IsMember({"hudson", "goepel", "cf"}));
    k_nodes->add_option("--point", seed_point, "seed point w x y z (hudson, goepel)")->expected(4);
    k_nodes->add_option("--rosenhain", rosenhain, "Rosenhain roots (cf)")->expected(3);
    k_nodes->callback([&] {
        job = [&]() -> json {
            std::vector<Point4<Rational>> nodes;
            std::function<Rational(const Point4<Rational>&)> F;
            if (model == "cf") {
                if (rosenhain.size() != 3)
                    throw UsageError("cf nodes need --rosenhain l1 l2 l3");
                std::array<Rational, 3> l{parse_rational(rosenhain[0]), parse_rational(rosenhain[1]),
                                          parse_rational(rosenhain[2])};
                require_rosenhain(l[0], l[1], l[2]);
                auto cf = std::make_shared<CasselsFlynnModel<Rational>>(l);
                nodes = cf_nodes(*cf);
                F = [cf](const Point4<Rational>& q) { return cf->eval(q); };
            } else {
                if (seed_point.size() != 4)
                    throw UsageError("hudson/goepel nodes need --point w x y z");
                Point4<Rational> s;
                for (int i = 0; i < 4; ++i)
                    s[i] = parse_rational(seed_point[i]);
                if (model == "hudson") {
                    auto H = hudson_from_seed(s);
                    nodes = hudson_nodes(s);
                    F = [H](const Point4<Rational>& q) { return H.eval(q); };
                } else {
                    auto G = goepel_from_seed(s);
                    nodes = goepel_nodes(s);
                    F = [G](const Point4<Rational>& q) { return G.eval(q); };
                }
            }
            json list = json::array();
            bool all = true;
            for (const auto& q : nodes) {
                bool sing = is_singular_point(F, q);
                all = all && sing;
                list.push_back({{"point", elems_json(q)}, {"singular", sing}});
            }
            return {{"model", model}, {"count", nodes.size()}, {"all_singular", all}, {"nodes", list}};
        };
    });
    auto* k_check = leaf(kum, "check", "theta-coordinate residuals of the Goepel, Hudson and Rosenhain quartics");
    k_check->add_option("--tau", tau_text, "period matrix JSON (random when omitted)");
    k_check->add_option("--point", point_text, "point z as [z1, z2] (random when omitted)");
    k_check->callback([&] {
        job = [&] {
            std::mt19937_64 rng(ctx.seed);
            SiegelPoint tau = tau_text.empty() ? random_siegel(rng) : parse_tau(tau_text);
            CVec2 z = point_text.empty() ? random_cvec2(rng) : parse_point(point_text);
            auto r = theta_coordinate_checks(tau, z, kThetaTol);
            return json{{"tau", tau_json(tau)},
                        {"point", json::array({complex_json(z[0]), complex_json(z[1])})},
                        {"goepel", max_json(r.goepel, kCheckTol)},
                        {"hudson", max_json(r.hudson, kCheckTol)},
                        {"rosenhain", max_json(r.rosenhain, kCheckTol)}};
        };
    });

    // split
    auto* spl = group("split", "(2,2)-split Jacobians");
    auto* s_det = leaf(spl, "detect", "Q and, for Rosenhain input, the Pringsheim factors");
    add_curve(s_det);
    s_det->callback([&] {
        job = [&] { return with_curve(curve_text, rosenhain, split_detect_json<Rational>, split_detect_json<Fp>,
                                      split_detect_json<Fp2>); };
    });
    auto* s_glue = leaf(spl, "glue", "genus-two curve glued from two Legendre curves");
    s_glue->add_option("--l1", l1_text, "first Legendre modulus")->required();
    s_glue->add_option("--l2", l2_text, "second Legendre modulus")->required();
    s_glue->callback([&] {
        job = [&] {
            Rational L1 = parse_rational(l1_text), L2 = parse_rational(l2_text);
            auto f = glue(L1, L2);
            auto Q = q_modular(igusa_invariants(f));
            FieldSpec fs;
            return json{{"curve", sextic_json(f, fs)},
                        {"igusa", igusa_point_json(igusa_invariants(f))},
                        {"q", elem_json(Q.value)},
                        {"split", is_zero(Q.value)}};
        };
    });
    auto* s_orb = leaf(spl, "orbit", "the gluing pair under the anharmonic group");
    s_orb->add_option("--l1", l1_text, "first Legendre modulus")->required();
    s_orb->add_option("--l2", l2_text, "second Legendre modulus")->required();
    s_orb->callback([&] {
        job = [&] {
            auto orb = anharmonic_orbit(parse_rational(l1_text), parse_rational(l2_text));
            json list = json::array();
            for (const auto& [a, b] : orb)
                list.push_back(json::array({elem_json(a), elem_json(b)}));
            return json{{"orbit", list}};
        };
    });

    // sandwich
    auto* sand = group("sandwich", "the double-cover sandwich of the product Kummer surface");
    auto* w_chk = leaf(sand, "check", "psi o psi_hat against pi o ([2] x [2])");
    w_chk->add_option("--l1", l1_text, "first Legendre modulus")->required();
    w_chk->add_option("--l2", l2_text, "second Legendre modulus")->required();
    w_chk->add_option("--samples", count, "number of samples")->check(CLI::PositiveNumber);
    w_chk->add_option("--mode", mode, "exact or complex")->check(CLI::IsMember({"exact", "complex"}));
    w_chk->callback([&] {
        job = [&]() -> json {
            Rational L1 = parse_rational(l1_text), L2 = parse_rational(l2_text);
            SandwichModuli<Rational> M{L1, L2};
            M.validate();
            long passed = 0, tested = 0, exceptional = 0;
            if (mode == "exact") {
                auto A = legendre_rational_points(L1, 40, 4), B = legendre_rational_points(L2, 40, 4);
                if (A.empty() || B.empty())
                    throw std::domain_error("no small rational points found on one of the Legendre curves");
                std::vector<std::pair<LegendrePoint<Rational>, LegendrePoint<Rational>>> samples;
                for (const auto& a : A)
                    for (const auto& b : B)
                        for (const auto& s : sandwich_exact_samples(L1, a, L2, b, 3))
                            samples.push_back(s);
                for (const auto& [a, b] : samples) {
                    if (tested >= count)
                        break;
                    for (int sign : {1, -1}) {
                        try {
                            passed += sandwich_sample_exact(M, a, b, sign) ? 1 : 0;
                            ++tested;
                        } catch (const std::domain_error&) {
                            ++exceptional;
                        }
                    }
                }
                return {{"mode", mode}, {"tested", tested}, {"passed", passed}, {"exceptional", exceptional},
                        {"pass", tested > 0 && passed == tested}};
            }
            std::mt19937_64 rng(ctx.seed);
            Complex c1(Real(L1.get_d()), Real(0)), c2(Real(L2.get_d()), Real(0));
            SandwichModuli<Complex> MC{c1, c2};
            Real worst = 0;
            for (long i = 0; i < count; ++i) {
                auto a = legendre_complex_point(c1, rng);
                auto b = legendre_complex_point(c2, rng);
                for (int sign : {1, -1}) {
                    worst = std::max(worst, sandwich_sample_residual(MC, a, b, sign));
                    ++tested;
                }
            }
            return {{"mode", mode}, {"tested", tested}, {"residual", max_json(worst, 1e-9)}};
        };
    });

    // lr
    auto* lr = group("lr", "(n,n)-isogenies through theta sums");
    auto* lr_iso = leaf(lr, "isogeny", "codomain theta null point and the image of a point");
    lr_iso->add_option("--tau", tau_text, "period matrix JSON (random when omitted)");
    lr_iso->add_option("--n", n, "isogeny degree")->check(CLI::PositiveNumber);
    lr_iso->add_option("--kernel", kernel,
                       "b (kernel {b/n}), a (kernel {tau a/n}) or generators \"a1,a2,b1,b2;a1,a2,b1,b2\"");
    lr_iso->add_option("--point", point_text, "point z as [z1, z2]");
    lr_iso->callback([&] {
        job = [&] {
            std::mt19937_64 rng(ctx.seed);
            SiegelPoint tau = tau_text.empty() ? random_siegel(rng) : parse_tau(tau_text);
            TorsionKernel G = [&] {
                if (kernel == "b")
                    return btype_kernel(n);
                if (kernel == "a")
                    return atype_kernel(n);
                std::array<TorsionGen, 2> g;
                std::stringstream ss(kernel);
                std::string part;
                int k = 0;
                while (std::getline(ss, part, ';')) {
                    if (k >= 2)
                        throw UsageError("--kernel has two generators");
                    std::array<long, 4> v{};
                    std::stringstream ps(part);
                    std::string num;
                    int i = 0;
                    while (std::getline(ps, num, ',')) {
                        if (i >= 4)
                            throw UsageError("a generator is a1,a2,b1,b2");
                        try {
                            v[i++] = std::stol(num);
                        } catch (const std::exception&) {
                            throw UsageError("not an integer in --kernel: " + num);
                        }
                    }
                    if (i != 4)
                        throw UsageError("a generator is a1,a2,b1,b2");
                    g[k++] = {{v[0], v[1]}, {v[2], v[3]}};
                }
                if (k != 2)
                    throw UsageError("--kernel has two generators");
                return make_kernel(n, g[0], g[1]);
            }();
            FourSquare d = four_square(n);
            auto U = lr_null_points(tau, G, d, kThetaTol);
            CVec2 zero{Complex(0), Complex(0)};
            json out = {{"tau", tau_json(tau)},
                        {"n", n},
                        {"four_square", d.a},
                        {"kernel", G.type() == KernelType::BType ? "b" : "a"},
                        {"codomain_period", tau_json(lr_codomain_period(tau, G))},
                        {"null_point", elems_json(U.coords)},
                        {"oracle_distance", to_double(projective_distance(U.coords, lr_direct_oracle(tau, G, zero)))},
                        {"theta_evaluations", U.theta_evaluations}};
            if (!point_text.empty()) {
                CVec2 z = parse_point(point_text);
                auto P = lr_evaluate(tau, G, d, z, kThetaTol);
                out["image"] = elems_json(P.coords);
                out["image_oracle_distance"] = to_double(projective_distance(P.coords, lr_direct_oracle(tau, G, z)));
                out["hudson_residual"] = to_double(lr_hudson_residual(U.coords, P.coords));
            }
            return out;
        };
    });

    // graph
    auto* graph = group("graph", "superspecial Richelot isogeny graph over F_{p^2}");
    auto add_p = [&](CLI::App* s) { s->add_option("--p", p, "odd prime >= 7"); };
    auto step_json = [](const WalkStep& s) {
        return json{{"splitting", s.splitting}, {"from", s.from}, {"to", s.to ? json(*s.to) : json(nullptr)},
                    {"split", s.split()}};
    };
    auto* g_walk = leaf(graph, "walk", "random walk; each step moves to a non-split neighbor");
    add_p(g_walk);
    g_walk->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);
    g_walk->callback([&] {
        job = [&] {
            GraphNode s = start_node(p);
            auto w = walk(s, steps, ctx.seed);
            json st = json::array();
            for (const auto& x : w.steps)
                st.push_back(step_json(x));
            return json{{"p", p},
                        {"start", sextic_to_string(s.sextic)},
                        {"steps", st},
                        {"end", w.nodes.back()},
                        {"all_superspecial", w.all_superspecial}};
        };
    });
    auto* g_hash = leaf(graph, "hash", "hash a hex message by a non-backtracking walk");
    add_p(g_hash);
    g_hash->add_option("--msg", msg, "message in hex")->required();
    g_hash->callback([&] {
        job = [&] {
            GraphNode s = start_node(p);
            HashResult h = cds_hash(hex_to_bits(msg), s);
            json st = json::array();
            for (const auto& x : h.steps)
                st.push_back(step_json(x));
            return json{{"p", p}, {"msg", msg}, {"hash", h.key}, {"weak_parameter", h.weak}, {"steps", st}};
        };
    });
    auto* g_find = leaf(graph, "findsplit", "walk until a node with a split neighbor or Q = 0");
    add_p(g_find);
    g_find->add_option("--budget", budget, "maximum number of steps")->check(CLI::NonNegativeNumber);
    g_find->callback([&] {
        job = [&] {
            GraphNode s = start_node(p);
            auto r = find_split_path(s, budget, ctx.seed);
            json st = json::array();
            for (const auto& x : r.path.steps)
                st.push_back(step_json(x));
            if (!r.found)
                throw std::domain_error("budget exhausted after " + std::to_string(r.steps_used) + " steps");
            return json{{"p", p},          {"found", r.found},           {"reason", r.reason},
                        {"steps_used", r.steps_used}, {"steps", st}, {"end", r.path.nodes.back()}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2, ctx.format);
    }

    try {
        ctx.precision_bits = precision_from_env();
        PrecisionScope scope(ctx.precision_bits);
        json result = job();
        bool weak = result.is_object() && result.value("weak_parameter", false);
        result["meta"] = {{"seed", ctx.seed},
                          {"precision_bits", ctx.precision_bits},
                          {"theta_tol", kThetaTol},
                          {"check_tol", kCheckTol}};
        emit(result, ctx.format, std::cout);
        return weak ? 1 : 0;
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2, ctx.format);
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what(), 2, ctx.format);
    } catch (const std::domain_error& e) {
        return fail("domain", e.what(), 1, ctx.format);
    } catch (const json::exception& e) {
        return fail("usage", e.what(), 2, ctx.format);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1, ctx.format);
    }
}
