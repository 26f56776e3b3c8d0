#ifndef QRM_FACTORIZE_HPP
#define QRM_FACTORIZE_HPP

// Factorization of low-degree monic polynomials over R_D and its fraction field.

#include "qrm/numeric_roots.hpp"
#include "qrm/polyring.hpp"
#include "qrm/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qrm {

using Poly = UniPoly<QuadRat>;

struct UnsupportedDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Factorization {
    std::vector<std::pair<Poly, int>> factors;
    bool splits = false;

    Poly product() const
    {
        Poly p(QuadRat(1));
        for (const auto& [f, m] : factors) {
            p = p * pow(f, m);
        }
        return p;
    }
};

/// z lies in R_D: integral, and irrational parts belong to the field of D.
inline bool in_ring(const QuadRat& z, Discriminant d)
{
    return z.is_integral() && (z.is_rational() || z.disc() == d);
}

namespace detail {

/// Cauchy bound on |root|, rounded up, for a monic polynomial.
inline mpz_class cauchy_bound_sq(const std::vector<QuadInt>& c)
{
    // |r| <= 1 + max |c_i|, so N(r) <= (1 + sqrt(max N(c_i)))^2.
    mpz_class m = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        m = std::max(m, norm(c[i]));
    }
    const mpz_class r = isqrt(m) + 2;
    return r * r;
}

inline QuadInt eval_int(const std::vector<QuadInt>& c, const QuadInt& z)
{
    QuadInt acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

/// A root among the R_D points with N(r) | N(c_0), searched in increasing norm.
inline std::optional<QuadInt> divisor_search(const std::vector<QuadInt>& c, Discriminant d,
                                             const mpz_class& budget)
{
    const mpz_class n0 = norm(c.front());
    const mpz_class bound = cauchy_bound_sq(c);
    const std::vector<mpz_class> divs = divisors_of(n0);
    // Each norm shell costs about sqrt(4k/D) trial points.
    mpz_class cost = 0;
    for (const auto& k : divs) {
        if (k > bound) {
            break;
        }
        cost += isqrt(4 * k / d.value()) + 1;
    }
    if (cost > budget) {
        return std::nullopt;
    }
    for (const auto& k : divs) {
        if (k > bound) {
            break;
        }
        for (const auto& r : enum_norm_eq(d, k)) {
            if (eval_int(c, r).is_zero()) {
                return r;
            }
        }
    }
    return std::nullopt;
}

/// Lattice points of R_D next to numerically computed roots.
inline std::vector<QuadInt> numeric_candidates(const std::vector<QuadInt>& c, Discriminant d)
{
    std::vector<cld> cc;
    for (const auto& v : c) {
        cc.push_back(to_complex(QuadRat(v)));
    }
    const long double s = std::sqrt(static_cast<long double>(d.value()));
    std::vector<QuadInt> out;
    for (const cld& z : polynomial_roots(cc)) {
        long double yr = 0, xr = 0;
        if (d.kind() == AlphaKind::Whole) {
            yr = z.imag() / s;
            xr = z.real();
        } else {
            yr = 2 * z.imag() / s;
            xr = z.real() - yr / 2;
        }
        if (!std::isfinite(xr) || !std::isfinite(yr) || std::fabs(xr) > 1e17L || std::fabs(yr) > 1e17L) {
            continue;
        }
        const mpz_class y0(static_cast<double>(std::llround(yr)));
        for (long dy = -1; dy <= 1; ++dy) {
            const mpz_class y = y0 + dy;
            const long double xc = d.kind() == AlphaKind::Whole ? xr : xr + (yr - y.get_d()) / 2;
            const mpz_class x0(static_cast<double>(std::llround(xc)));
            for (long dx = -1; dx <= 1; ++dx) {
                out.emplace_back(mpz_class(x0 + dx), y, d);
            }
        }
    }
    return out;
}

/// Roots in R_D, with multiplicity, of a monic polynomial with R_D coefficients.
/// Candidates come from rounding numerical roots; when that finds nothing the
/// exact divisor search runs if its cost stays within budget. Every root is
/// confirmed by exact evaluation.
inline std::vector<QuadInt> integral_roots(std::vector<QuadInt> c, Discriminant d,
                                           const mpz_class& budget = mpz_class(2000000))
{
    std::vector<QuadInt> roots;
    while (c.size() > 1 && c.front().is_zero()) {
        roots.emplace_back();
        c.erase(c.begin());
    }
    while (c.size() > 1) {
        std::optional<QuadInt> found;
        if (c.size() == 2) {
            found = -c[0];
        } else {
            for (const auto& r : numeric_candidates(c, d)) {
                if (eval_int(c, r).is_zero()) {
                    found = r;
                    break;
                }
            }
            if (!found) {
                found = divisor_search(c, d, budget);
            }
        }
        if (!found) {
            break;
        }
        // Synthetic division by (lambda - r).
        std::vector<QuadInt> q(c.size() - 1);
        QuadInt acc = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            q[i] = acc;
            acc = c[i] + acc * *found;
        }
        roots.push_back(*found);
        c = std::move(q);
    }
    return roots;
}

/// Exhaustive divisor-based root search, without numerical shortcuts.
inline std::vector<QuadInt> integral_roots_exhaustive(std::vector<QuadInt> c, Discriminant d)
{
    std::vector<QuadInt> roots;
    while (c.size() > 1 && c.front().is_zero()) {
        roots.emplace_back();
        c.erase(c.begin());
    }
    while (c.size() > 1) {
        auto found = divisor_search(c, d, mpz_class(-1) + mpz_class("1000000000000000000000000"));
        if (!found) {
            break;
        }
        std::vector<QuadInt> q(c.size() - 1);
        QuadInt acc = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            q[i] = acc;
            acc = c[i] + acc * *found;
        }
        roots.push_back(*found);
        c = std::move(q);
    }
    return roots;
}

inline bool factor_less(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    for (int i = 0; i <= a.degree(); ++i) {
        const mpq_class ra = real_part(a.coeff(i)), rb = real_part(b.coeff(i));
        if (ra != rb) {
            return ra < rb;
        }
        const mpq_class ia = imag_coeff(a.coeff(i)), ib = imag_coeff(b.coeff(i));
        if (ia != ib) {
            return ia < ib;
        }
    }
    return false;
}

inline void canonicalize(Factorization& f)
{
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
    std::vector<std::pair<Poly, int>> merged;
    for (auto& fm : f.factors) {
        if (!merged.empty() && merged.back().first == fm.first) {
            merged.back().second += fm.second;
        } else {
            merged.push_back(std::move(fm));
        }
    }
    f.factors = std::move(merged);
}

/// Integer L > 0 with L * (coefficients) integral.
inline mpz_class coeff_denominator(const Poly& p)
{
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    return l;
}

inline Discriminant poly_disc(const Poly& p, Discriminant fallback)
{
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational()) {
            if (!(c.disc() == fallback)) {
                throw std::invalid_argument("polynomial coefficients lie outside Q(i*sqrt(D))");
            }
        }
    }
    return fallback;
}

/// Roots in Q(i sqrt D), with multiplicity, of a monic polynomial over that field.
inline std::vector<QuadRat> field_roots(const Poly& p, Discriminant d)
{
    if (!p.is_monic()) {
        throw std::invalid_argument("expected a monic polynomial");
    }
    poly_disc(p, d);
    // lambda = mu / L turns p into a monic integral polynomial in mu.
    const mpz_class l = coeff_denominator(p);
    const int k = p.degree();
    std::vector<QuadInt> c(static_cast<std::size_t>(k) + 1);
    mpz_class lp = 1;
    for (int i = k; i >= 0; --i) {
        const QuadRat v = p.coeff(i) * QuadRat(lp);
        c[static_cast<std::size_t>(i)] = *v.to_quadint();
        lp *= l;
    }
    std::vector<QuadRat> out;
    for (const auto& r : integral_roots(std::move(c), d)) {
        out.emplace_back(r, l);
    }
    return out;
}

} // namespace detail

/// Roots of p in R_D with multiplicity (p monic with R_D coefficients).
inline std::vector<QuadInt> roots_in_RD(const Poly& p, Discriminant d)
{
    std::vector<QuadInt> out;
    for (const auto& r : detail::field_roots(p, d)) {
        if (in_ring(r, d)) {
            out.push_back(*r.to_quadint());
        }
    }
    return out;
}

/// Factorization into monic irreducibles over Q(i sqrt D) for degree <= 3,
/// perfect squares of such, or polynomials whose non-linear part has degree
/// <= 3. splits means every factor is linear with its root in R_D.
inline Factorization factor_over_RD(const Poly& p, Discriminant d)
{
    if (!p.is_monic()) {
        throw std::invalid_argument("factor_over_RD: polynomial must be monic");
    }
    Factorization out;
    if (p.degree() >= 4) {
        // Squares first: the square root has far smaller coefficients.
        std::optional<Poly> root;
        try {
            root = poly_nth_root(p, 2);
        } catch (const NotAPerfectPower&) {
        }
        if (root) {
            Factorization half = factor_over_RD(*root, d);
            for (auto& [f, m] : half.factors) {
                out.factors.emplace_back(std::move(f), 2 * m);
            }
            out.splits = half.splits;
            return out;
        }
    }
    Poly rest = p;
    for (const auto& r : detail::field_roots(p, d)) {
        const Poly lin(std::vector<QuadRat>{-r, QuadRat(1)});
        rest = exact_div(rest, lin);
        out.factors.emplace_back(lin, 1);
    }
    if (rest.degree() >= 4) {
        Poly root;
        try {
            root = poly_nth_root(rest, 2);
        } catch (const NotAPerfectPower&) {
            throw UnsupportedDegree("factor_over_RD: irreducible part of degree " + std::to_string(rest.degree()) +
                                    " is not a perfect square");
        }
        Factorization half = factor_over_RD(root, d);
        for (auto& [f, m] : half.factors) {
            out.factors.emplace_back(std::move(f), 2 * m);
        }
    } else if (rest.degree() >= 1) {
        out.factors.emplace_back(rest, 1);
    }
    detail::canonicalize(out);
    out.splits = std::all_of(out.factors.begin(), out.factors.end(), [&](const auto& fm) {
        return fm.first.degree() == 1 && in_ring(fm.first.coeff(0), d);
    });
    if (!(out.product() == p)) {
        throw std::logic_error("factor_over_RD: reconstruction failed");
    }
    return out;
}

/// Monic integer cubic without an integer root.
inline bool irreducible_over_Q_cubic(const Poly& p)
{
    if (p.degree() != 3 || !p.is_monic()) {
        throw std::invalid_argument("irreducible_over_Q_cubic: need a monic cubic");
    }
    for (const auto& c : p.coeffs()) {
        if (!c.is_rational() || !c.is_integral()) {
            throw std::invalid_argument("irreducible_over_Q_cubic: need integer coefficients");
        }
    }
    const mpz_class c0 = p.coeff(0).num().x();
    if (sgn(c0) == 0) {
        return false;
    }
    for (const auto& k : divisors_of(mpz_class(abs(c0)))) {
        for (const mpz_class r : {k, mpz_class(-k)}) {
            if (p.eval(QuadRat(r)).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

template <class T>
T discriminant(const UniPoly<T>& p)
{
    switch (p.degree()) {
    case 2: {
        const T a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
        return b * b - T(4) * a * c;
    }
    case 3: {
        const T a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
        return b * b * c * c - T(4) * a * c * c * c - T(4) * b * b * b * d - T(27) * a * a * d * d +
               T(18) * a * b * c * d;
    }
    default:
        throw UnsupportedDegree("discriminant: degree must be 2 or 3");
    }
}

} // namespace qrm

#endif // QRM_FACTORIZE_HPP
