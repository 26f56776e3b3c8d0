#ifndef QRM_TESTS_SUPPORT_HPP
#define QRM_TESTS_SUPPORT_HPP

// Shared generators and independent oracles for the test suites.

#include "qrm/dynamics.hpp"
#include "qrm/numeric_roots.hpp"
#include "qrm/quadfield.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qrm::testing {

using cplx = std::complex<long double>;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline QuadInt random_quadint(Discriminant d, long bound)
{
    return QuadInt(uniform(-bound, bound), uniform(-bound, bound), d);
}

inline QuadRat random_rational(long num_bound, long den_bound)
{
    mpq_class q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return QuadRat(q);
}

inline QuadRat random_quadrat(Discriminant d, long num_bound, long den_bound)
{
    return QuadRat(random_quadint(d, num_bound), mpz_class(uniform(1, den_bound)));
}

inline const std::vector<long>& small_discs()
{
    static const std::vector<long> v{1, 2, 3, 5, 7, 11, 15, 19};
    return v;
}

/// Norm straight from the definition of the basis: x^2 + D y^2, or
/// x^2 + x y + (D + 1)/4 y^2 when alpha = (1 + i sqrt D)/2.
inline mpz_class norm_by_formula(const QuadInt& z)
{
    const long d = z.disc().value();
    if (d % 4 == 3) {
        return z.x() * z.x() + z.x() * z.y() + ((d + 1) / 4) * z.y() * z.y();
    }
    return z.x() * z.x() + d * z.y() * z.y();
}

/// Complex value computed from the basis definition, independent of to_complex.
inline cplx embed(const QuadRat& z)
{
    const long d = z.disc().value();
    const long double s = std::sqrt(static_cast<long double>(d));
    const cplx alpha = d % 4 == 3 ? cplx(0.5L, s / 2) : cplx(0, s);
    const long double den = z.den().get_d();
    return (cplx(static_cast<long double>(z.num().x().get_d())) + static_cast<long double>(z.num().y().get_d()) * alpha) / den;
}

inline long double distance(cplx a, cplx b) { return std::abs(a - b); }

/// Determinant by fraction-field Gaussian elimination.
inline QuadRat gauss_determinant(std::vector<std::vector<QuadRat>> m)
{
    const std::size_t n = m.size();
    QuadRat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return QuadRat(0);
        }
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) {
                continue;
            }
            const QuadRat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return det;
}

/// Roots of a homogeneous form as points [z : 1], plus the count at infinity.
struct FormRoots {
    std::vector<cplx> finite;
    int at_infinity = 0;
    cplx lead;
};

inline FormRoots form_roots(const HomogForm<QuadRat>& f)
{
    FormRoots out;
    out.at_infinity = f.y_multiplicity();
    std::vector<cplx> c;
    for (int i = 0; i <= f.degree() - out.at_infinity; ++i) {
        c.push_back(embed(f.coeff(i)));
    }
    out.lead = c.back();
    out.finite = detail::polynomial_roots(c);
    return out;
}

/// Pairs every a with a distinct nearest b; returns the largest distance.
inline long double match_distance(std::vector<cplx> a, std::vector<cplx> b)
{
    if (a.size() != b.size()) {
        return std::numeric_limits<long double>::infinity();
    }
    long double worst = 0;
    for (const auto& z : a) {
        auto it = std::min_element(b.begin(), b.end(),
                                   [&](const cplx& u, const cplx& v) { return distance(u, z) < distance(v, z); });
        worst = std::max(worst, distance(*it, z));
        b.erase(it);
    }
    return worst;
}

inline std::vector<QuadMapSpec> sample_maps()
{
    const Discriminant d1(1), d3(3), d7(7);
    return {
        Gab{QuadRat(2), QuadRat(3)},
        Gab{QuadRat(mpq_class(3, 7)), QuadRat(mpq_class(-5, 11))},
        Gab{QuadRat(QuadInt(1, 1, d1)), QuadRat(-1)},
        Fc{QuadRat(mpq_class(-3, 4))},
        Fc{QuadRat(QuadInt(0, 1, d3))},
        HMap{},
        Sigma{QuadRat(QuadInt(-1, 1, d7)), QuadRat(5)},
    };
}

} // namespace qrm::testing

#endif // QRM_TESTS_SUPPORT_HPP
