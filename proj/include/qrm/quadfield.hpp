#ifndef QRM_QUADFIELD_HPP
#define QRM_QUADFIELD_HPP

// Exact arithmetic in the ring of integers R_D = Z[alpha_D] of Q(i*sqrt(D)) and
// in its fraction field. Elements are stored in coordinates over (1, alpha_D):
//   alpha_D = i*sqrt(D)          when D = 1, 2 (mod 4)
//   alpha_D = (1 + i*sqrt(D))/2  when D = 3 (mod 4)
//
// Rational integers (y == 0) embed in every R_D, so an element with y == 0 is
// compatible with any discriminant; mixing two elements with nonzero y and
// different discriminants throws.

#include "qrm/arith.hpp"

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace qrm {

enum class AlphaKind { Whole, Half };

class Discriminant {
public:
    Discriminant() = default;

    explicit Discriminant(std::int64_t d) : d_(d)
    {
        if (!is_squarefree(d)) {
            throw std::invalid_argument("D must be a positive squarefree integer, got " +
                                        std::to_string(d));
        }
    }

    std::int64_t value() const noexcept { return d_; }
    AlphaKind kind() const noexcept { return d_ % 4 == 3 ? AlphaKind::Half : AlphaKind::Whole; }

    /// Coefficient of y^2 in the norm form: D, or (D+1)/4 for the half basis.
    std::int64_t norm_coeff() const noexcept { return kind() == AlphaKind::Half ? (d_ + 1) / 4 : d_; }

    friend bool operator==(Discriminant a, Discriminant b) noexcept { return a.d_ == b.d_; }

private:
    std::int64_t d_ = 1;
};

class QuadInt {
public:
    QuadInt() = default;
    QuadInt(long v) : x_(v) {}
    QuadInt(int v) : x_(v) {}
    QuadInt(mpz_class v) : x_(std::move(v)) {}
    QuadInt(mpz_class x, mpz_class y, Discriminant d) : x_(std::move(x)), y_(std::move(y)), d_(d) {}

    static QuadInt alpha(Discriminant d) { return QuadInt(0, 1, d); }

    const mpz_class& x() const noexcept { return x_; }
    const mpz_class& y() const noexcept { return y_; }
    Discriminant disc() const noexcept { return d_; }

    bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0; }
    bool is_rational() const { return sgn(y_) == 0; }

    QuadInt conj() const
    {
        if (d_.kind() == AlphaKind::Half) {
            return QuadInt(x_ + y_, -y_, d_);
        }
        return QuadInt(x_, -y_, d_);
    }

    QuadInt operator-() const { return QuadInt(-x_, -y_, d_); }

    QuadInt& operator+=(const QuadInt& o)
    {
        d_ = merged(o);
        x_ += o.x_;
        y_ += o.y_;
        return *this;
    }
    QuadInt& operator-=(const QuadInt& o)
    {
        d_ = merged(o);
        x_ -= o.x_;
        y_ -= o.y_;
        return *this;
    }
    QuadInt& operator*=(const QuadInt& o)
    {
        *this = *this * o;
        return *this;
    }

    friend QuadInt operator+(QuadInt a, const QuadInt& b) { return a += b; }
    friend QuadInt operator-(QuadInt a, const QuadInt& b) { return a -= b; }

    friend QuadInt operator*(const QuadInt& a, const QuadInt& b)
    {
        const Discriminant d = a.merged(b);
        if (a.is_rational()) {
            return QuadInt(a.x_ * b.x_, a.x_ * b.y_, d);
        }
        if (b.is_rational()) {
            return QuadInt(a.x_ * b.x_, a.y_ * b.x_, d);
        }
        mpz_class yy = a.y_ * b.y_;
        mpz_class x = a.x_ * b.x_ - d.norm_coeff() * yy;
        mpz_class y = a.x_ * b.y_ + a.y_ * b.x_;
        if (d.kind() == AlphaKind::Half) {
            y += yy;
        }
        return QuadInt(std::move(x), std::move(y), d);
    }

    friend bool operator==(const QuadInt& a, const QuadInt& b)
    {
        if (a.x_ != b.x_ || a.y_ != b.y_) {
            return false;
        }
        return a.is_rational() || a.d_ == b.d_;
    }

    /// Discriminant of a binary operation's result; throws on incompatible fields.
    Discriminant merged(const QuadInt& o) const
    {
        if (o.is_rational()) {
            return d_;
        }
        if (is_rational()) {
            return o.d_;
        }
        if (!(d_ == o.d_)) {
            throw std::invalid_argument("arithmetic between different quadratic fields");
        }
        return d_;
    }

private:
    mpz_class x_{0};
    mpz_class y_{0};
    Discriminant d_{};
};

inline bool is_zero(const QuadInt& z) { return z.is_zero(); }

/// |z|^2, a nonnegative integer.
inline mpz_class norm(const QuadInt& z)
{
    const Discriminant d = z.disc();
    mpz_class n = z.x() * z.x() + d.norm_coeff() * z.y() * z.y();
    if (d.kind() == AlphaKind::Half) {
        n += z.x() * z.y();
    }
    return n;
}

/// 2*Re(z) as an integer.
inline mpz_class twice_real(const QuadInt& z)
{
    return z.disc().kind() == AlphaKind::Half ? mpz_class(2 * z.x() + z.y()) : mpz_class(2 * z.x());
}

/// Integer V with Im(z) = V*sqrt(D)/2.
inline mpz_class twice_imag(const QuadInt& z)
{
    return z.disc().kind() == AlphaKind::Half ? z.y() : mpz_class(2 * z.y());
}

/// a/b when b divides a in R_D.
inline std::optional<QuadInt> divide(const QuadInt& a, const QuadInt& b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by zero in R_D");
    }
    const Discriminant d = a.merged(b);
    if (b.is_rational()) {
        if (!mpz_divisible_p(a.x().get_mpz_t(), b.x().get_mpz_t()) ||
            !mpz_divisible_p(a.y().get_mpz_t(), b.x().get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class x, y;
        mpz_divexact(x.get_mpz_t(), a.x().get_mpz_t(), b.x().get_mpz_t());
        mpz_divexact(y.get_mpz_t(), a.y().get_mpz_t(), b.x().get_mpz_t());
        return QuadInt(std::move(x), std::move(y), d);
    }
    const QuadInt num = a * b.conj();
    const mpz_class n = norm(b);
    if (!mpz_divisible_p(num.x().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.y().get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class x, y;
    mpz_divexact(x.get_mpz_t(), num.x().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(y.get_mpz_t(), num.y().get_mpz_t(), n.get_mpz_t());
    return QuadInt(std::move(x), std::move(y), d);
}

inline QuadInt exact_quotient(const QuadInt& a, const QuadInt& b)
{
    auto q = divide(a, b);
    if (!q) {
        throw std::domain_error("inexact division in R_D");
    }
    return *q;
}

inline bool canonical_less(const QuadInt& a, const QuadInt& b)
{
    return std::tie(a.x(), a.y()) < std::tie(b.x(), b.y());
}

/// Element of Q(i*sqrt(D)) kept in lowest terms: num/den with den > 0 and
/// gcd(num.x, num.y, den) = 1.
class QuadRat {
public:
    QuadRat() = default;
    QuadRat(long v) : num_(v) {}
    QuadRat(int v) : num_(v) {}
    QuadRat(mpz_class v) : num_(std::move(v)) {}
    QuadRat(const mpq_class& q) : num_(q.get_num()), den_(q.get_den()) {}
    QuadRat(QuadInt v) : num_(std::move(v)) {}
    QuadRat(QuadInt num, mpz_class den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const QuadInt& num() const noexcept { return num_; }
    const mpz_class& den() const noexcept { return den_; }
    Discriminant disc() const noexcept { return num_.disc(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    bool is_rational() const { return num_.is_rational(); }

    std::optional<QuadInt> to_quadint() const
    {
        if (den_ != 1) {
            return std::nullopt;
        }
        return num_;
    }

    mpq_class to_mpq() const
    {
        if (!is_rational()) {
            throw std::domain_error("element is not rational");
        }
        mpq_class q(num_.x(), den_);
        q.canonicalize();
        return q;
    }

    QuadRat conj() const { return QuadRat(num_.conj(), den_, Reduced{}); }
    QuadRat operator-() const { return QuadRat(-num_, den_, Reduced{}); }

    QuadRat inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("inverse of zero");
        }
        const mpz_class n = norm(num_);
        return QuadRat(num_.conj() * QuadInt(den_), n);
    }

    friend QuadRat operator+(const QuadRat& a, const QuadRat& b)
    {
        if (a.den_ == b.den_) {
            return QuadRat(a.num_ + b.num_, a.den_);
        }
        return QuadRat(a.num_ * QuadInt(b.den_) + b.num_ * QuadInt(a.den_), a.den_ * b.den_);
    }
    friend QuadRat operator-(const QuadRat& a, const QuadRat& b) { return a + (-b); }
    friend QuadRat operator*(const QuadRat& a, const QuadRat& b)
    {
        return QuadRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QuadRat operator/(const QuadRat& a, const QuadRat& b) { return a * b.inverse(); }

    QuadRat& operator+=(const QuadRat& o) { return *this = *this + o; }
    QuadRat& operator-=(const QuadRat& o) { return *this = *this - o; }
    QuadRat& operator*=(const QuadRat& o) { return *this = *this * o; }
    QuadRat& operator/=(const QuadRat& o) { return *this = *this / o; }

    friend bool operator==(const QuadRat& a, const QuadRat& b) { return a.den_ == b.den_ && a.num_ == b.num_; }

private:
    struct Reduced {};
    QuadRat(QuadInt num, mpz_class den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize()
    {
        if (sgn(den_) == 0) {
            throw std::domain_error("zero denominator");
        }
        if (sgn(den_) < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        if (num_.is_zero()) {
            den_ = 1;
            num_ = QuadInt();
            return;
        }
        mpz_class g = gcd(gcd(num_.x(), num_.y()), den_);
        if (g != 1) {
            num_ = QuadInt(num_.x() / g, num_.y() / g, num_.disc());
            den_ /= g;
        }
    }

    QuadInt num_{};
    mpz_class den_{1};
};

inline bool is_zero(const QuadRat& z) { return z.is_zero(); }

inline mpq_class norm(const QuadRat& z)
{
    mpq_class q(norm(z.num()), z.den() * z.den());
    q.canonicalize();
    return q;
}

inline mpq_class real_part(const QuadRat& z)
{
    mpq_class q(twice_real(z.num()), 2 * z.den());
    q.canonicalize();
    return q;
}

/// Rational r with Im(z) = r*sqrt(D).
inline mpq_class imag_coeff(const QuadRat& z)
{
    mpq_class q(twice_imag(z.num()), 2 * z.den());
    q.canonicalize();
    return q;
}

/// Radical coordinates: z = (re + im*i*sqrt(D))/den in lowest terms, den > 0.
struct Radical {
    mpz_class re;
    mpz_class im;
    mpz_class den;
};

inline Radical radical_form(const QuadRat& z)
{
    mpz_class re = twice_real(z.num());
    mpz_class im = twice_imag(z.num());
    mpz_class den = 2 * z.den();
    mpz_class g = gcd(gcd(re, im), den);
    return Radical{re / g, im / g, den / g};
}

/// Inverse of radical_form; the discriminant must accompany a nonzero im.
inline QuadRat from_radical(const mpz_class& re, const mpz_class& im, const mpz_class& den, Discriminant d)
{
    if (d.kind() == AlphaKind::Half) {
        // re + im*i*sqrt(D) = (re - im) + 2*im*alpha
        return QuadRat(QuadInt(re - im, 2 * im, d), den);
    }
    return QuadRat(QuadInt(re, im, d), den);
}

inline std::complex<long double> to_complex(const QuadRat& z)
{
    const Radical r = radical_form(z);
    const long double den = r.den.get_d();
    const long double s = std::sqrt(static_cast<long double>(z.disc().value()));
    return {static_cast<long double>(r.re.get_d()) / den, static_cast<long double>(r.im.get_d()) * s / den};
}

namespace detail {

inline std::string imaginary_unit(Discriminant d)
{
    return d.value() == 1 ? std::string("i") : "i√" + std::to_string(d.value());
}

inline std::string imaginary_term(const mpz_class& im, Discriminant d)
{
    if (im == 1) {
        return imaginary_unit(d);
    }
    if (im == -1) {
        return "-" + imaginary_unit(d);
    }
    return im.get_str() + imaginary_unit(d);
}

} // namespace detail

/// Radical notation, e.g. "(-3+i√7)/2", "121+40i", "-3/4", "-i√2".
inline std::string to_string(const QuadRat& z)
{
    const Radical r = radical_form(z);
    std::string numer;
    bool two_terms = false;
    if (sgn(r.im) == 0) {
        numer = r.re.get_str();
    } else if (sgn(r.re) == 0) {
        numer = detail::imaginary_term(r.im, z.disc());
    } else {
        two_terms = true;
        numer = r.re.get_str() + (sgn(r.im) > 0 ? "+" : "") + detail::imaginary_term(r.im, z.disc());
    }
    if (r.den == 1) {
        return numer;
    }
    if (two_terms) {
        return "(" + numer + ")/" + r.den.get_str();
    }
    return numer + "/" + r.den.get_str();
}

inline std::string to_string(const QuadInt& z) { return to_string(QuadRat(z)); }

inline std::ostream& operator<<(std::ostream& os, const QuadRat& z) { return os << to_string(z); }
inline std::ostream& operator<<(std::ostream& os, const QuadInt& z) { return os << to_string(z); }

// ---------------------------------------------------------------------------
// Lattice enumeration
// ---------------------------------------------------------------------------

namespace detail {

inline void sort_by_norm(std::vector<QuadInt>& v)
{
    std::vector<std::pair<mpz_class, QuadInt>> keyed;
    keyed.reserve(v.size());
    for (auto& z : v) {
        keyed.emplace_back(norm(z), std::move(z));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) {
            return a.first < b.first;
        }
        return canonical_less(a.second, b.second);
    });
    v.clear();
    for (auto& [n, z] : keyed) {
        v.push_back(std::move(z));
    }
}

} // namespace detail

/// All z in R_D with N(z) <= bound, ordered by norm then coordinates.
inline std::vector<QuadInt> enum_norm_le(Discriminant d, std::int64_t bound)
{
    std::vector<QuadInt> out;
    if (bound < 0) {
        return out;
    }
    const mpz_class b(static_cast<long>(bound));
    const mpz_class dd(static_cast<long>(d.value()));
    mpz_class xmax, ymax;
    if (d.kind() == AlphaKind::Whole) {
        xmax = isqrt(b);
        ymax = isqrt(b / dd);
    } else {
        xmax = isqrt(b) + isqrt(b / dd) + 1;
        ymax = isqrt(4 * b / dd);
    }
    for (long y = -ymax.get_si(); y <= ymax.get_si(); ++y) {
        for (long x = -xmax.get_si(); x <= xmax.get_si(); ++x) {
            QuadInt z(mpz_class(x), mpz_class(y), d);
            if (norm(z) <= b) {
                out.push_back(std::move(z));
            }
        }
    }
    detail::sort_by_norm(out);
    return out;
}

/// All z in R_D with N(z) == n.
inline std::vector<QuadInt> enum_norm_eq(Discriminant d, const mpz_class& n)
{
    std::vector<QuadInt> out;
    if (sgn(n) < 0) {
        return out;
    }
    if (sgn(n) == 0) {
        out.emplace_back();
        return out;
    }
    const mpz_class dd(static_cast<long>(d.value()));
    if (d.kind() == AlphaKind::Whole) {
        // x^2 + D y^2 = n
        const mpz_class ymax = isqrt(n / dd);
        for (mpz_class y = -ymax; y <= ymax; ++y) {
            const mpz_class r = n - dd * y * y;
            if (!is_perfect_square(r)) {
                continue;
            }
            const mpz_class s = isqrt(r);
            out.emplace_back(s, y, d);
            if (sgn(s) != 0) {
                out.emplace_back(-s, y, d);
            }
        }
    } else {
        // (2x + y)^2 + D y^2 = 4n
        const mpz_class ymax = isqrt(4 * n / dd);
        for (mpz_class y = -ymax; y <= ymax; ++y) {
            const mpz_class r = 4 * n - dd * y * y;
            if (!is_perfect_square(r)) {
                continue;
            }
            const mpz_class u = isqrt(r);
            if (mpz_class(u - y) % 2 != 0) {
                continue;
            }
            out.emplace_back(mpz_class((u - y) / 2), y, d);
            if (sgn(u) != 0) {
                out.emplace_back(mpz_class((-u - y) / 2), y, d);
            }
        }
    }
    detail::sort_by_norm(out);
    return out;
}

/// All nonzero z in R_D whose norm divides n0.
inline std::vector<QuadInt> enum_norm_divides(Discriminant d, const mpz_class& n0)
{
    if (sgn(n0) <= 0) {
        throw std::invalid_argument("enum_norm_divides: N0 must be positive");
    }
    std::vector<QuadInt> out;
    for (const auto& k : divisors_of(n0)) {
        auto part = enum_norm_eq(d, k);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

/// The square root of z in R_D with Im > 0 (or Im == 0 and Re >= 0), if any.
inline std::optional<QuadInt> sqrt_in_RD(const QuadInt& z)
{
    if (z.is_zero()) {
        return QuadInt();
    }
    const Discriminant d = z.disc();
    const mpz_class n = norm(z);
    if (!is_perfect_square(n)) {
        return std::nullopt;
    }
    const mpz_class t = isqrt(n);
    // w = (a + b i sqrt(D))/2:  a^2 = U + 2t,  D b^2 = 2t - U,  a b = V
    const mpz_class u = twice_real(z);
    const mpz_class v = twice_imag(z);
    const mpz_class a2 = u + 2 * t;
    const mpz_class db2 = 2 * t - u;
    const mpz_class dd(static_cast<long>(d.value()));
    if (!is_perfect_square(a2) || db2 % dd != 0 || !is_perfect_square(db2 / dd)) {
        return std::nullopt;
    }
    mpz_class a = isqrt(a2);
    mpz_class b = isqrt(db2 / dd);
    if (sgn(v) < 0) {
        a = -a;
    }
    // Canonical sign: b > 0, or b == 0 and a >= 0.
    if (sgn(b) == 0 && sgn(a) < 0) {
        a = -a;
    }
    if ((a - b) % 2 != 0) {
        return std::nullopt;
    }
    std::optional<QuadInt> w;
    if (d.kind() == AlphaKind::Whole) {
        if (a % 2 != 0 || b % 2 != 0) {
            return std::nullopt;
        }
        w = QuadInt(mpz_class(a / 2), mpz_class(b / 2), d);
    } else {
        w = QuadInt(mpz_class((a - b) / 2), b, d);
    }
    if (!(*w * *w == z)) {
        return std::nullopt;
    }
    return w;
}

/// Nonzero z in R_D with Re(1/z) >= t. These lie in the closed disk
/// |z - 1/(2t)| <= 1/(2t), hence N(z) <= 1/t^2.
inline std::vector<QuadInt> inverse_halfplane_points(Discriminant d, const mpq_class& t)
{
    if (sgn(t) <= 0) {
        throw std::invalid_argument("inverse_halfplane_points: t must be positive");
    }
    mpq_class inv_sq = 1 / (t * t);
    mpz_class bound = inv_sq.get_num() / inv_sq.get_den();
    std::vector<QuadInt> out;
    for (auto& z : enum_norm_le(d, bound.get_si())) {
        if (z.is_zero()) {
            continue;
        }
        // Re(1/z) = Re(z)/N(z) >= p/q  <=>  2Re(z) * q >= 2 p N(z)
        if (twice_real(z) * t.get_den() >= 2 * t.get_num() * norm(z)) {
            out.push_back(std::move(z));
        }
    }
    return out;
}

} // namespace qrm

#endif // QRM_QUADFIELD_HPP
