#ifndef QRM_FORMAT_HPP
#define QRM_FORMAT_HPP

// Text rendering of polynomials and factorizations in radical notation.

#include "qrm/factorize.hpp"
#include "qrm/polyring.hpp"
#include "qrm/quadfield.hpp"

#include <string>
#include <vector>

namespace qrm {

namespace detail {

inline bool is_plain_integer(const QuadRat& c) { return c.is_rational() && c.is_integral(); }

inline std::string monomial(const std::string& var, int k)
{
    if (k == 0) {
        return "";
    }
    if (k == 1) {
        return var;
    }
    return var + "^" + std::to_string(k);
}

} // namespace detail

/// e.g. "λ^2+(22+4i)λ+121+40i", "((99-3i√3)/2)λ^2" for a non-monic leading term.
inline std::string to_string(const UniPoly<QuadRat>& p, const std::string& var = "λ")
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const QuadRat& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        const std::string body = to_string(c);
        const bool first = out.empty();
        if (k == 0) {
            if (body.front() == '-' || first) {
                out += body;
            } else {
                out += "+" + body;
            }
            continue;
        }
        const std::string mono = detail::monomial(var, k);
        if (c == QuadRat(1)) {
            out += (first ? "" : "+") + mono;
        } else if (c == QuadRat(-1)) {
            out += "-" + mono;
        } else if (detail::is_plain_integer(c)) {
            out += (body.front() == '-' || first ? "" : "+") + body + mono;
        } else {
            out += (first ? "" : "+") + ("(" + body + ")") + mono;
        }
    }
    return out;
}

/// Homogeneous form in x, y with descending powers of x.
inline std::string to_string(const HomogForm<QuadRat>& f)
{
    std::string out;
    const int m = f.degree();
    for (int i = m; i >= 0; --i) {
        const QuadRat& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        std::string mono = detail::monomial("x", i);
        const std::string ym = detail::monomial("y", m - i);
        if (!mono.empty() && !ym.empty()) {
            mono += "*";
        }
        mono += ym;
        const std::string body = to_string(c);
        const bool first = out.empty();
        if (mono.empty()) {
            out += (body.front() == '-' || first ? "" : "+") + body;
        } else if (c == QuadRat(1)) {
            out += (first ? "" : "+") + mono;
        } else if (c == QuadRat(-1)) {
            out += "-" + mono;
        } else if (detail::is_plain_integer(c)) {
            out += (body.front() == '-' || first ? "" : "+") + body + "*" + mono;
        } else {
            out += (first ? "" : "+") + ("(" + body + ")*") + mono;
        }
    }
    return out.empty() ? "0" : out;
}

/// A single factor prints bare; otherwise "(f1)(f2)^2".
inline std::string to_string(const Factorization& f, const std::string& var = "λ")
{
    if (f.factors.empty()) {
        return "1";
    }
    if (f.factors.size() == 1 && f.factors.front().second == 1) {
        return to_string(f.factors.front().first, var);
    }
    std::string out;
    for (const auto& [g, m] : f.factors) {
        out += "(" + to_string(g, var) + ")";
        if (m > 1) {
            out += "^" + std::to_string(m);
        }
    }
    return out;
}

/// Coordinates over (1, alpha_D) as "[x, y]" followed by the denominator.
inline std::string coordinate_string(const QuadRat& c)
{
    return "[" + c.num().x().get_str() + "," + c.num().y().get_str() + "]/" + c.den().get_str();
}

} // namespace qrm

#endif // QRM_FORMAT_HPP
