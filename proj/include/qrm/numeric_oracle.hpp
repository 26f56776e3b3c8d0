#ifndef QRM_NUMERIC_ORACLE_HPP
#define QRM_NUMERIC_ORACLE_HPP

// Floating-point cycle multipliers, used to cross-check the exact pipeline.

#include "qrm/dynamics.hpp"
#include "qrm/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace qrm {

struct OracleResult {
    /// One multiplier per cycle.
    std::vector<std::complex<double>> multipliers;
    /// Set when two roots of Phi_n are closer than 1e-9.
    bool ill_conditioned = false;
};

namespace detail {

inline std::vector<cld> complex_coeffs(const Form& f)
{
    std::vector<cld> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        c.push_back(to_complex(v));
    }
    return c;
}

struct CForm {
    std::vector<cld> c; // c[i] multiplies x^i y^(m-i)

    int degree() const { return static_cast<int>(c.size()) - 1; }

    cld eval(cld x, cld y) const
    {
        const int m = degree();
        cld acc = 0;
        std::vector<cld> yp(c.size(), cld(1));
        for (int i = 1; i <= m; ++i) {
            yp[static_cast<std::size_t>(i)] = yp[static_cast<std::size_t>(i - 1)] * y;
        }
        for (int i = m; i >= 0; --i) {
            acc = acc * x + c[static_cast<std::size_t>(i)] * yp[static_cast<std::size_t>(m - i)];
        }
        return acc;
    }

    CForm dx() const
    {
        CForm out;
        for (int i = 1; i <= degree(); ++i) {
            out.c.push_back(static_cast<long double>(i) * c[static_cast<std::size_t>(i)]);
        }
        if (out.c.empty()) {
            out.c.push_back(0);
        }
        return out;
    }

    CForm dy() const
    {
        CForm out;
        const int m = degree();
        for (int i = 0; i < m; ++i) {
            out.c.push_back(static_cast<long double>(m - i) * c[static_cast<std::size_t>(i)]);
        }
        if (out.c.empty()) {
            out.c.push_back(0);
        }
        return out;
    }
};

struct ProjPoint {
    cld x;
    cld y;
};

inline long double chordal(const ProjPoint& a, const ProjPoint& b)
{
    const long double na = std::sqrt(std::norm(a.x) + std::norm(a.y));
    const long double nb = std::sqrt(std::norm(b.x) + std::norm(b.y));
    return std::abs(a.x * b.y - a.y * b.x) / (na * nb);
}

inline cld det2(cld a1, cld a2, cld b1, cld b2) { return a1 * b2 - a2 * b1; }

} // namespace detail

inline OracleResult numeric_cycle_oracle(const QuadMapSpec& spec, int n)
{
    using namespace detail;
    const PairMap f = lift_of(spec);
    const Form phi = dynatomic(f, n);
    const CForm g{complex_coeffs(f.g)};
    const CForm h{complex_coeffs(f.h)};
    const CForm gx = g.dx(), gy = g.dy(), hx = h.dx(), hy = h.dy();

    OracleResult out;
    std::vector<ProjPoint> pts;
    const int at_inf = phi.y_multiplicity();
    for (int i = 0; i < at_inf; ++i) {
        pts.push_back({1, 0});
    }
    std::vector<cld> finite;
    const auto pc = complex_coeffs(phi);
    finite.assign(pc.begin(), pc.begin() + (phi.degree() - at_inf + 1));
    for (const cld& z : polynomial_roots(finite)) {
        pts.push_back({z, 1});
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (chordal(pts[i], pts[j]) < 1e-9L) {
                out.ill_conditioned = true;
            }
        }
    }

    auto nearest = [&](const ProjPoint& q) {
        std::size_t best = 0;
        long double dist = std::numeric_limits<long double>::infinity();
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const long double d = chordal(q, pts[k]);
            if (d < dist) {
                dist = d;
                best = k;
            }
        }
        return best;
    };

    std::vector<bool> used(pts.size(), false);
    for (std::size_t start = 0; start < pts.size(); ++start) {
        if (used[start]) {
            continue;
        }
        cld mult = 1;
        std::size_t cur = start;
        std::size_t len = 0;
        do {
            used[cur] = true;
            const ProjPoint& p = pts[cur];
            const ProjPoint img{g.eval(p.x, p.y), h.eval(p.x, p.y)};
            const std::size_t next = nearest(img);
            const ProjPoint& q = pts[next];
            // F(p) = mu * q
            const cld mu = (img.x * std::conj(q.x) + img.y * std::conj(q.y)) / (std::norm(q.x) + std::norm(q.y));
            const ProjPoint w{-std::conj(p.y), std::conj(p.x)};
            const ProjPoint wq{-std::conj(q.y), std::conj(q.x)};
            const cld dfx = gx.eval(p.x, p.y) * w.x + gy.eval(p.x, p.y) * w.y;
            const cld dfy = hx.eval(p.x, p.y) * w.x + hy.eval(p.x, p.y) * w.y;
            mult *= det2(q.x, q.y, dfx / mu, dfy / mu) / det2(q.x, q.y, wq.x, wq.y);
            cur = next;
            ++len;
        } while (cur != start && len < static_cast<std::size_t>(n));
        if (cur != start) {
            out.ill_conditioned = true;
        }
        out.multipliers.emplace_back(static_cast<double>(mult.real()), static_cast<double>(mult.imag()));
    }
    return out;
}

/// Roots of an exact polynomial with multiplicity, as complex doubles.
/// Repeated roots are located on the squarefree parts.
inline std::vector<std::complex<double>> numeric_roots(const Poly& p)
{
    std::vector<std::complex<double>> out;
    if (p.degree() <= 0) {
        return out;
    }
    // Yun: p = prod w_k^k
    Poly a = poly_gcd(p, derivative(p));
    Poly b = exact_div(p, a);
    Poly c = exact_div(derivative(p), a);
    Poly d = c - derivative(b);
    for (int k = 1; b.degree() > 0; ++k) {
        const Poly w = poly_gcd(b, d);
        if (w.degree() > 0) {
            std::vector<cld> coeffs;
            for (const auto& v : w.coeffs()) {
                coeffs.push_back(to_complex(v));
            }
            for (const auto& z : detail::polynomial_roots(coeffs)) {
                for (int i = 0; i < k; ++i) {
                    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
                }
            }
        }
        b = exact_div(b, w);
        c = exact_div(d, w);
        d = c - derivative(b);
    }
    return out;
}

} // namespace qrm

#endif // QRM_NUMERIC_ORACLE_HPP
