#ifndef QRM_DYNAMICS_HPP
#define QRM_DYNAMICS_HPP

// Quadratic rational maps: normal forms, homogeneous lifts, dynatomic and
// multiplier polynomials, and the sigma invariants.

#include "qrm/polyring.hpp"
#include "qrm/quadfield.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qrm {

/// The lift of a map has a common projective root, or a GAB pair has a*b == 1.
struct DegenerateMap : std::domain_error {
    using std::domain_error::domain_error;
};

/// z(z + a)/(bz + 1)
struct Gab {
    QuadRat a;
    QuadRat b;
};

/// z + 1/z
struct HMap {};

/// z^2 + c
struct Fc {
    QuadRat c;
};

/// The conjugacy class with fixed-point invariants (sigma1, sigma2).
struct Sigma {
    QuadRat s1;
    QuadRat s2;
};

struct Raw {
    HomogPairMap<QuadRat> f;
};

using QuadMapSpec = std::variant<Gab, HMap, Fc, Sigma, Raw>;

struct SigmaPair {
    QuadRat sigma1;
    QuadRat sigma2;

    QuadRat sigma3() const { return sigma1 - QuadRat(2); }
    friend bool operator==(const SigmaPair& a, const SigmaPair& b)
    {
        return a.sigma1 == b.sigma1 && a.sigma2 == b.sigma2;
    }
};

using Form = HomogForm<QuadRat>;
using Poly = UniPoly<QuadRat>;
using PairMap = HomogPairMap<QuadRat>;

// ---------------------------------------------------------------------------
// Normal forms and lifts
// ---------------------------------------------------------------------------

namespace detail {

inline Form quad_form(QuadRat y2, QuadRat xy, QuadRat x2)
{
    return Form(2, {std::move(y2), std::move(xy), std::move(x2)});
}

inline std::optional<QuadRat> repeated_root(const Poly& p)
{
    // gcd(p, p') over the field
    Poly a = p;
    Poly b = derivative(p);
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.degree() != 1) {
        return std::nullopt;
    }
    return -(a.coeff(0) / a.coeff(1));
}

inline PairMap lift_from_sigma(const QuadRat& s1, const QuadRat& s2);

} // namespace detail

inline bool fixed_point_identity_holds(const QuadRat& l1, const QuadRat& l2, const QuadRat& l3)
{
    const QuadRat one(1);
    if (l1 == one || l2 == one || l3 == one) {
        throw std::domain_error("fixed-point identity: a multiplier equals 1");
    }
    return (one - l1).inverse() + (one - l2).inverse() + (one - l3).inverse() == one;
}

/// Normal form with fixed-point multipliers l1, l2, l3.
inline QuadMapSpec map_from_fixed_multipliers(const QuadRat& l1, const QuadRat& l2, const QuadRat& l3)
{
    const QuadRat one(1);
    if (!(l1 * l2 * l3 == l1 + l2 + l3 - QuadRat(2))) {
        throw std::invalid_argument("inconsistent multiplier triple: sigma3 != sigma1 - 2");
    }
    if (l1 == one && l2 == one && l3 == one) {
        return HMap{};
    }
    const std::pair<const QuadRat*, const QuadRat*> orders[] = {{&l1, &l2}, {&l1, &l3}, {&l2, &l3}};
    for (const auto& [a, b] : orders) {
        if (!(*a * *b == one)) {
            return Gab{*a, *b};
        }
    }
    throw std::logic_error("map_from_fixed_multipliers: no admissible ordering");
}

inline PairMap lift_of(const QuadMapSpec& spec)
{
    struct Visitor {
        PairMap operator()(const Gab& g) const
        {
            if (g.a * g.b == QuadRat(1)) {
                throw DegenerateMap("gab(a,b) requires a*b != 1");
            }
            return make_pair_map(detail::quad_form(0, g.a, 1), detail::quad_form(1, g.b, 0));
        }
        PairMap operator()(const HMap&) const
        {
            return make_pair_map(detail::quad_form(1, 0, 1), detail::quad_form(0, 1, 0));
        }
        PairMap operator()(const Fc& f) const
        {
            return make_pair_map(detail::quad_form(f.c, 0, 1), detail::quad_form(1, 0, 0));
        }
        PairMap operator()(const Sigma& s) const { return detail::lift_from_sigma(s.s1, s.s2); }
        PairMap operator()(const Raw& r) const
        {
            if (r.f.degree() != 2) {
                throw std::invalid_argument("raw lift must have degree 2");
            }
            try {
                return make_pair_map(r.f.g, r.f.h);
            } catch (const std::domain_error& e) {
                throw DegenerateMap(e.what());
            }
        }
    };
    try {
        return std::visit(Visitor{}, spec);
    } catch (const DegenerateMap&) {
        throw;
    } catch (const std::domain_error& e) {
        throw DegenerateMap(e.what());
    }
}

namespace detail {

// A map whose fixed points are the roots of p and whose multiplier at each
// root r equals r: f(z) = z - p(z)/q(z) with q(r) = p'(r)/(1 - r).
inline PairMap lift_from_sigma(const QuadRat& s1, const QuadRat& s2)
{
    const QuadRat two(2);
    const Poly p(std::vector<QuadRat>{-(s1 - two), s2, -s1, QuadRat(1)});
    const QuadRat p_at_1 = p.eval(QuadRat(1));
    if (p_at_1.is_zero()) {
        // Multipliers {1, 1, s1 - 2}.
        const QuadRat nu = s1 - two;
        return nu == QuadRat(1) ? lift_of(HMap{}) : lift_of(Gab{nu, QuadRat(1)});
    }
    if (auto r = repeated_root(p)) {
        const QuadRat third = s1 - two * *r;
        return lift_of(map_from_fixed_multipliers(*r, *r, third));
    }
    // (1 - z)^(-1) = s(z)/p(1) mod p, where p = p(1) + (z - 1)s(z).
    const Poly s = divmod(p, Poly(std::vector<QuadRat>{QuadRat(-1), QuadRat(1)})).first;
    const Poly q = divmod(derivative(p) * s, p).second;
    const Poly q_scaled = p_at_1.inverse() * q;
    if (q_scaled.degree() != 2 || !q_scaled.is_monic()) {
        throw std::logic_error("sigma normal form: denominator is not monic quadratic");
    }
    const Poly num = Poly::variable() * q_scaled - p;
    return make_pair_map(quad_form(num.coeff(0), num.coeff(1), num.coeff(2)),
                         quad_form(q_scaled.coeff(0), q_scaled.coeff(1), q_scaled.coeff(2)));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Dynatomic forms
// ---------------------------------------------------------------------------

/// (G_k, H_k) for k = 1..n.
inline std::vector<std::pair<Form, Form>> iterates(const PairMap& f, int n)
{
    if (n < 1) {
        throw std::invalid_argument("iterates: n must be positive");
    }
    std::vector<std::pair<Form, Form>> out{{f.g, f.h}};
    for (int k = 2; k <= n; ++k) {
        const auto& [g, h] = out.back();
        Form g2 = substitute(f.g, g, h);
        Form h2 = substitute(f.h, g, h);
        out.emplace_back(std::move(g2), std::move(h2));
    }
    return out;
}

namespace detail {

inline Form fixed_form(const Form& g, const Form& h) { return Form::y() * g - Form::x() * h; }

inline Form dynatomic_from_iterates(const std::vector<std::pair<Form, Form>>& its, int n)
{
    Form num(0, {QuadRat(1)});
    Form den(0, {QuadRat(1)});
    for (std::int64_t k : divisors_of(static_cast<std::int64_t>(n))) {
        const int mu = mobius(n / k);
        if (mu == 0) {
            continue;
        }
        const auto& [g, h] = its[static_cast<std::size_t>(k - 1)];
        if (mu == 1) {
            num = num * fixed_form(g, h);
        } else {
            den = den * fixed_form(g, h);
        }
    }
    return exact_div(num, den);
}

} // namespace detail

inline Form dynatomic(const PairMap& f, int n)
{
    return detail::dynatomic_from_iterates(iterates(f, n), n);
}

/// Trace form T_n = dG_n/dx + dH_n/dy.
inline Form trace_form(const Form& g, const Form& h)
{
    return partial_derivative(g, Var::X) + partial_derivative(h, Var::Y);
}

// ---------------------------------------------------------------------------
// Multiplier polynomials
// ---------------------------------------------------------------------------

enum class LinearForm { Y, X, XMinusY, Other };

struct MultiplierPoly {
    int n = 0;
    Poly poly;
    LinearForm used_linear_form = LinearForm::Y;
};

struct MultOptions {
    bool use_cache = true;
    /// Skip the first `first_form` linear forms of the fallback order.
    int first_form = 0;
};

/// k-th linear form of the fallback order y, x, x - y, x + y, x - 2y, x + 2y, ...
inline Form candidate_linear_form(int k)
{
    switch (k) {
    case 0:
        return Form::y();
    case 1:
        return Form::x();
    default: {
        const long shift = (k % 2 == 0) ? -(k / 2) : (k - 1) / 2;
        return Form::linear(QuadRat(1), QuadRat(shift));
    }
    }
}

inline LinearForm linear_form_tag(int k)
{
    switch (k) {
    case 0:
        return LinearForm::Y;
    case 1:
        return LinearForm::X;
    case 2:
        return LinearForm::XMinusY;
    default:
        return LinearForm::Other;
    }
}

inline std::string to_string(LinearForm f)
{
    switch (f) {
    case LinearForm::Y:
        return "y";
    case LinearForm::X:
        return "x";
    case LinearForm::XMinusY:
        return "x-y";
    default:
        return "other";
    }
}

namespace detail {

/// Phi(root of P), which vanishes iff P divides Phi.
inline QuadRat value_at_root(const Form& phi, const Form& p)
{
    // P = a x + b y has root [-b : a]
    return phi.eval(-p.coeff(0), p.coeff(1));
}

inline MultiplierPoly compute_multiplier_poly(const PairMap& f, int n, int first_form)
{
    const auto its = iterates(f, n);
    const Form phi = detail::dynatomic_from_iterates(its, n);
    const auto& [gn, hn] = its.back();
    const Form tn = trace_form(gn, hn);

    int k = first_form;
    Form p = candidate_linear_form(k);
    for (; value_at_root(phi, p).is_zero(); p = candidate_linear_form(++k)) {
        if (k > 2 * phi.degree() + 4) {
            throw std::logic_error("no admissible linear form");
        }
    }

    const Form q = substitute(p, gn, hn);
    std::int64_t dn = 1;
    for (int i = 0; i < n; ++i) {
        dn *= f.degree();
    }
    const Form r = QuadRat(dn) * q - p * tn;

    std::vector<Poly> bc;
    bc.reserve(q.coeffs().size());
    for (std::size_t i = 0; i < q.coeffs().size(); ++i) {
        bc.emplace_back(std::vector<QuadRat>{r.coeffs()[i], q.coeffs()[i]});
    }
    const HomogForm<Poly> b(q.degree(), std::move(bc));
    const Poly full = resultant_lambda(phi, b, phi.degree());
    const QuadRat lead = homog_resultant(phi, q);
    if (lead.is_zero()) {
        throw std::logic_error("res(Phi_n, P o F^n) vanished for an admissible P");
    }
    if (full.degree() != phi.degree() || !(full.leading() == lead)) {
        throw std::logic_error("lambda-resultant leading coefficient mismatch");
    }
    const Poly monic = lead.inverse() * full;
    MultiplierPoly out;
    out.n = n;
    out.poly = poly_nth_root(monic, n);
    out.used_linear_form = linear_form_tag(k);
    return out;
}

class MultiplierCache {
public:
    std::optional<Poly> find(const std::string& key)
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void store(const std::string& key, const Poly& p)
    {
        std::lock_guard<std::mutex> lock(mu_);
        table_[key] = p;
    }

    void clear()
    {
        std::lock_guard<std::mutex> lock(mu_);
        table_.clear();
    }

    static MultiplierCache& instance()
    {
        static MultiplierCache cache;
        return cache;
    }

private:
    std::mutex mu_;
    std::map<std::string, Poly> table_;
};

inline std::string cache_key(const QuadRat& s1, const QuadRat& s2, int n)
{
    // Field tag keeps equal-looking values from different fields apart.
    std::string tag = std::to_string(s1.disc().value()) + ":" + std::to_string(s2.disc().value());
    return to_string(s1) + "|" + to_string(s2) + "|" + tag + "|" + std::to_string(n);
}

} // namespace detail

inline void clear_multiplier_cache() { detail::MultiplierCache::instance().clear(); }

/// M_1 of the lift, read as lambda^3 - sigma1 lambda^2 + sigma2 lambda - sigma3.
inline SigmaPair sigma_of_lift(const PairMap& f)
{
    const Poly m1 = detail::compute_multiplier_poly(f, 1, 0).poly;
    SigmaPair s{-m1.coeff(2), m1.coeff(1)};
    if (!(-m1.coeff(0) == s.sigma3())) {
        throw std::logic_error("M_1 constant term violates sigma3 = sigma1 - 2");
    }
    return s;
}

inline SigmaPair sigma_of(const QuadMapSpec& spec)
{
    if (const auto* s = std::get_if<Sigma>(&spec)) {
        return SigmaPair{s->s1, s->s2};
    }
    return sigma_of_lift(lift_of(spec));
}

inline MultiplierPoly multiplier_poly(const QuadMapSpec& spec, int n, const MultOptions& opt = {})
{
    if (n < 1) {
        throw std::invalid_argument("multiplier_poly: n must be positive");
    }
    const PairMap f = lift_of(spec);
    if (!opt.use_cache || opt.first_form != 0) {
        return detail::compute_multiplier_poly(f, n, opt.first_form);
    }
    const SigmaPair s = std::holds_alternative<Sigma>(spec) ? sigma_of(spec) : sigma_of_lift(f);
    const std::string key = detail::cache_key(s.sigma1, s.sigma2, n);
    auto& cache = detail::MultiplierCache::instance();
    if (auto hit = cache.find(key)) {
        return MultiplierPoly{n, *hit, LinearForm::Y};
    }
    MultiplierPoly m = detail::compute_multiplier_poly(f, n, 0);
    cache.store(key, m.poly);
    return m;
}

/// The coefficients sigma_j^(n), j = 1..deg M_n, from the closed formulas in
/// sigma1, sigma2; M_n = sum_j (-1)^j sigma_j^(n) lambda^(deg - j).
inline std::vector<QuadRat> closed_form_sigma(const SigmaPair& sig, int n)
{
    const QuadRat& s1 = sig.sigma1;
    const QuadRat& s2 = sig.sigma2;
    auto c = [](long v) { return QuadRat(v); };
    const QuadRat t = c(2) * s1 + s2;
    switch (n) {
    case 2:
        return {t};
    case 3: {
        const QuadRat a = s1 * t + c(3) * s1 + c(2);
        const QuadRat u = s1 + s2;
        const QuadRat b = t * u * u - s1 * (s1 + c(2) * s2) + c(12) * s1 + c(28);
        return {a, b};
    }
    case 4: {
        const QuadRat s1sq = s1 * s1;
        const QuadRat s2sq = s2 * s2;
        const QuadRat u = s1 + s2;
        const QuadRat a = t * s1sq + (s1 - s2) * (c(3) * s1 + s2) + c(10) * s1;
        const QuadRat b = t * s1sq * u * u +
                          (s1 - s2) * (c(7) * s1sq * s1 + c(9) * s1sq * s2 + c(5) * s1 * s2sq + s2sq * s2) +
                          (c(26) * s1 - s2) * s1sq + c(4) * s1 * (c(16) * s1 - c(5) * s2) +
                          c(4) * (c(10) * s1 - c(13) * s2) + c(48);
        const QuadRat d =
            s2sq * u * u * t * t +
            s1 * t * (s1sq * s1 - c(2) * s1sq * s2 - s1 * s2sq - c(2) * s2sq * s2) +
            s1 * (c(27) * s1sq * s1 + c(30) * s1sq * s2 + c(68) * s1 * s2sq + c(28) * s2sq * s2) +
            c(4) * (c(26) * s1sq * s1 + s1sq * s2 + c(32) * s1 * s2sq + c(15) * s2sq * s2) +
            c(8) * (c(37) * s1sq - c(19) * s1 * s2 - c(6) * s2sq) + c(32) * (c(20) * s1 + c(3) * s2) + c(304);
        return {a, b, d};
    }
    default:
        throw std::invalid_argument("closed_form_sigma: n must be 2, 3 or 4");
    }
}

/// Monic polynomial with the given sigma_j^(n) coefficients.
inline Poly poly_from_sigmas(const std::vector<QuadRat>& sig)
{
    const std::size_t k = sig.size();
    std::vector<QuadRat> c(k + 1, QuadRat(0));
    c[k] = QuadRat(1);
    for (std::size_t j = 1; j <= k; ++j) {
        c[k - j] = (j % 2 == 1) ? -sig[j - 1] : sig[j - 1];
    }
    return Poly(std::move(c));
}

} // namespace qrm

#endif // QRM_DYNAMICS_HPP
