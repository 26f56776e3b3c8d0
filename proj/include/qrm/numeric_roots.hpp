#ifndef QRM_NUMERIC_ROOTS_HPP
#define QRM_NUMERIC_ROOTS_HPP

// Complex roots of dense polynomials via companion-matrix eigenvalues.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

namespace qrm {

using cld = std::complex<long double>;

namespace detail {

inline cld horner(const std::vector<cld>& p, cld z)
{
    cld acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

/// Roots of sum p[i] z^i (p.back() != 0) via companion-matrix eigenvalues,
/// polished by Newton steps in extended precision.
inline std::vector<cld> polynomial_roots(const std::vector<cld>& p)
{
    const int m = static_cast<int>(p.size()) - 1;
    std::vector<cld> roots;
    if (m <= 0) {
        return roots;
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(m, m);
    const cld lead = p.back();
    for (int i = 0; i < m; ++i) {
        const cld v = -p[static_cast<std::size_t>(i)] / lead;
        comp(0, m - 1 - i) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
        if (i + 1 < m) {
            comp(i + 1, i) = 1.0;
        }
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<cld> dp;
    for (int i = 1; i <= m; ++i) {
        dp.push_back(static_cast<long double>(i) * p[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < m; ++i) {
        const auto e = solver.eigenvalues()[i];
        cld z(e.real(), e.imag());
        for (int step = 0; step < 4; ++step) {
            const cld d = horner(dp, z);
            if (std::abs(d) == 0.0L) {
                break;
            }
            const cld next = z - horner(p, z) / d;
            if (std::abs(horner(p, next)) > std::abs(horner(p, z))) {
                break;
            }
            z = next;
        }
        roots.push_back(z);
    }
    return roots;
}

} // namespace detail

} // namespace qrm

#endif // QRM_NUMERIC_ROOTS_HPP
