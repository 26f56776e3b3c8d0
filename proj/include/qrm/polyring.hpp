#ifndef QRM_POLYRING_HPP
#define QRM_POLYRING_HPP

// Dense univariate polynomials and binary homogeneous forms over exact
// coefficient domains, with resultants computed by fraction-free elimination.

#include "qrm/arith.hpp"
#include "qrm/bareiss.hpp"
#include "qrm/quadfield.hpp"

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qrm {

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline bool is_zero(const mpq_class& v) { return sgn(v) == 0; }
template <class F>
bool is_zero(const std::complex<F>& v)
{
    return v == std::complex<F>();
}

/// Raised when an exact division leaves a remainder. Inside the multiplier
/// pipeline this always indicates a logic error upstream.
struct NonDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by poly_nth_root when the input is not an n-th power.
struct NotAPerfectPower : std::domain_error {
    using std::domain_error::domain_error;
};

/// nu(n) = sum over k | n of mobius(n/k) d^k.
inline std::int64_t nu(std::int64_t n, std::int64_t d)
{
    if (n < 1 || d < 2) {
        throw std::invalid_argument("nu: need n >= 1 and d >= 2");
    }
    std::int64_t total = 0;
    for (std::int64_t k : divisors_of(n)) {
        std::int64_t p = 1;
        for (std::int64_t i = 0; i < k; ++i) {
            p *= d;
        }
        total += mobius(n / k) * p;
    }
    return total;
}

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

/// Dense univariate polynomial, constant term first; the zero polynomial has
/// no coefficients.
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(T constant) : c_{std::move(constant)} { trim(); }

    static UniPoly variable() { return UniPoly(std::vector<T>{T(0), T(1)}); }

    static UniPoly monomial(T coeff, int k)
    {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c[static_cast<std::size_t>(k)] = std::move(coeff);
        return UniPoly(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<T>& coeffs() const noexcept { return c_; }

    T coeff(int i) const
    {
        if (i < 0 || i > degree()) {
            return T(0);
        }
        return c_[static_cast<std::size_t>(i)];
    }

    const T& leading() const
    {
        if (c_.empty()) {
            throw std::domain_error("leading coefficient of the zero polynomial");
        }
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    template <class U>
    U eval(const U& x) const
    {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + U(*it);
        }
        return acc;
    }

    UniPoly operator-() const
    {
        std::vector<T> c = c_;
        for (auto& v : c) {
            v = -v;
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            c[i] = a.c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            c[i] = c[i] + b.c_[i];
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return UniPoly();
        }
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (qrm::is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return UniPoly(std::move(c));
    }

    friend UniPoly operator*(const T& s, const UniPoly& p)
    {
        std::vector<T> c = p.c_;
        for (auto& v : c) {
            v = s * v;
        }
        return UniPoly(std::move(c));
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && qrm::is_zero(c_.back())) {
            c_.pop_back();
        }
    }

    std::vector<T> c_;
};

template <class T>
bool is_zero(const UniPoly<T>& p)
{
    return p.is_zero();
}

template <class T>
UniPoly<T> pow(const UniPoly<T>& p, int e)
{
    UniPoly<T> result(T(1));
    UniPoly<T> base = p;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

template <class T>
UniPoly<T> derivative(const UniPoly<T>& p)
{
    std::vector<T> c;
    for (int i = 1; i <= p.degree(); ++i) {
        c.push_back(T(i) * p.coeff(i));
    }
    return UniPoly<T>(std::move(c));
}

/// Quotient and remainder over a field.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {UniPoly<T>(), a};
    }
    std::vector<T> rem = a.coeffs();
    std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, T(0));
    const T& lead = b.leading();
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        const T q = rem[static_cast<std::size_t>(k + db)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (qrm::is_zero(q)) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            auto& r = rem[static_cast<std::size_t>(k + j)];
            r = r - q * b.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly<T>(std::move(quo)), UniPoly<T>(std::move(rem))};
}

/// a / b, throwing NonDivisible when b does not divide a.
template <class T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw NonDivisible("exact_div: nonzero remainder");
    }
    return q;
}

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <class T>
UniPoly<T> poly_gcd(UniPoly<T> a, UniPoly<T> b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    std::vector<T> c = a.coeffs();
    const T lead = a.leading();
    for (auto& v : c) {
        v = v / lead;
    }
    return UniPoly<T>(std::move(c));
}

/// The monic M with M^n == q. Coefficients come from the power series of
/// q^(1/n) in 1/lambda, then the candidate is checked by exact powering.
template <class T>
UniPoly<T> poly_nth_root(const UniPoly<T>& q, int n)
{
    if (n < 1) {
        throw std::invalid_argument("poly_nth_root: n must be positive");
    }
    if (!q.is_monic()) {
        throw std::invalid_argument("poly_nth_root: input must be monic");
    }
    if (n == 1) {
        return q;
    }
    const int m = q.degree();
    if (m % n != 0) {
        throw NotAPerfectPower("poly_nth_root: degree not divisible by n");
    }
    const int k = m / n;
    // Reversed series r(t) = t^m q(1/t) = 1 + r_1 t + ...; y = r^(1/n) satisfies
    // j y_j = sum_{i=1..j} (i/n - (j - i)) r_i y_{j-i}.
    std::vector<T> r(static_cast<std::size_t>(k) + 1, T(0));
    for (int i = 0; i <= k; ++i) {
        r[static_cast<std::size_t>(i)] = q.coeff(m - i);
    }
    std::vector<T> y(static_cast<std::size_t>(k) + 1, T(0));
    y[0] = T(1);
    for (int j = 1; j <= k; ++j) {
        T acc(0);
        for (int i = 1; i <= j; ++i) {
            const T factor = T(i) / T(n) - T(j - i);
            acc = acc + factor * r[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j - i)];
        }
        y[static_cast<std::size_t>(j)] = acc / T(j);
    }
    std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
    for (int j = 0; j <= k; ++j) {
        c[static_cast<std::size_t>(k - j)] = y[static_cast<std::size_t>(j)];
    }
    UniPoly<T> root(std::move(c));
    if (!(pow(root, n) == q)) {
        throw NotAPerfectPower("poly_nth_root: input is not an n-th power");
    }
    return root;
}

// ---------------------------------------------------------------------------
// HomogForm
// ---------------------------------------------------------------------------

/// Binary form of declared degree m: sum of c_i x^i y^(m-i), i = 0..m.
template <class T>
class HomogForm {
public:
    HomogForm() = default;

    HomogForm(int degree, std::vector<T> coeffs) : degree_(degree), c_(std::move(coeffs))
    {
        if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1) {
            throw std::invalid_argument("HomogForm: need degree + 1 coefficients");
        }
    }

    static HomogForm zero(int degree)
    {
        return HomogForm(degree, std::vector<T>(static_cast<std::size_t>(degree) + 1, T(0)));
    }

    /// a*x + b*y
    static HomogForm linear(T a, T b) { return HomogForm(1, {std::move(b), std::move(a)}); }
    static HomogForm x() { return linear(T(1), T(0)); }
    static HomogForm y() { return linear(T(0), T(1)); }

    int degree() const noexcept { return degree_; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    const T& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const
    {
        for (const auto& v : c_) {
            if (!qrm::is_zero(v)) {
                return false;
            }
        }
        return true;
    }

    template <class U>
    U eval(const U& x, const U& y) const
    {
        // Horner in x with explicit y powers.
        U acc(0);
        U ypow(1);
        std::vector<U> ypows(c_.size(), U(1));
        for (std::size_t i = 1; i < c_.size(); ++i) {
            ypow = ypow * y;
            ypows[i] = ypow;
        }
        for (int i = degree_; i >= 0; --i) {
            acc = acc * x + U(c_[static_cast<std::size_t>(i)]) * ypows[static_cast<std::size_t>(degree_ - i)];
        }
        return acc;
    }

    /// Value at y = 1 as a univariate polynomial in x.
    UniPoly<T> dehomogenize() const { return UniPoly<T>(c_); }

    /// Multiplicity of [1:0] as a root, i.e. the power of y dividing the form.
    int y_multiplicity() const
    {
        int k = 0;
        for (int i = degree_; i >= 0 && qrm::is_zero(c_[static_cast<std::size_t>(i)]); --i) {
            ++k;
        }
        return k;
    }

    HomogForm operator-() const
    {
        std::vector<T> c = c_;
        for (auto& v : c) {
            v = -v;
        }
        return HomogForm(degree_, std::move(c));
    }

    friend HomogForm operator+(const HomogForm& a, const HomogForm& b)
    {
        if (a.degree_ != b.degree_) {
            throw std::invalid_argument("adding forms of different degrees");
        }
        std::vector<T> c = a.c_;
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i] = c[i] + b.c_[i];
        }
        return HomogForm(a.degree_, std::move(c));
    }

    friend HomogForm operator-(const HomogForm& a, const HomogForm& b) { return a + (-b); }

    friend HomogForm operator*(const HomogForm& a, const HomogForm& b)
    {
        std::vector<T> c(static_cast<std::size_t>(a.degree_ + b.degree_) + 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (qrm::is_zero(a.c_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return HomogForm(a.degree_ + b.degree_, std::move(c));
    }

    friend HomogForm operator*(const T& s, const HomogForm& f)
    {
        std::vector<T> c = f.c_;
        for (auto& v : c) {
            v = s * v;
        }
        return HomogForm(f.degree_, std::move(c));
    }

    friend bool operator==(const HomogForm& a, const HomogForm& b)
    {
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }

private:
    int degree_ = 0;
    std::vector<T> c_{T(0)};
};

template <class T>
bool is_zero(const HomogForm<T>& f)
{
    return f.is_zero();
}

template <class T>
HomogForm<T> pow(const HomogForm<T>& f, int e)
{
    HomogForm<T> result(0, {T(1)});
    for (int i = 0; i < e; ++i) {
        result = result * f;
    }
    return result;
}

enum class Var { X, Y };

template <class T>
HomogForm<T> partial_derivative(const HomogForm<T>& f, Var v)
{
    const int m = f.degree();
    if (m == 0) {
        return HomogForm<T>::zero(0);
    }
    std::vector<T> c(static_cast<std::size_t>(m), T(0));
    for (int i = 0; i < m; ++i) {
        if (v == Var::X) {
            c[static_cast<std::size_t>(i)] = T(i + 1) * f.coeff(i + 1);
        } else {
            c[static_cast<std::size_t>(i)] = T(m - i) * f.coeff(i);
        }
    }
    return HomogForm<T>(m - 1, std::move(c));
}

/// f(g, h) for forms g, h of a common degree.
template <class T>
HomogForm<T> substitute(const HomogForm<T>& f, const HomogForm<T>& g, const HomogForm<T>& h)
{
    if (g.degree() != h.degree()) {
        throw std::invalid_argument("substitute: g and h must have equal degree");
    }
    const int m = f.degree();
    std::vector<HomogForm<T>> gp{HomogForm<T>(0, {T(1)})};
    std::vector<HomogForm<T>> hp{HomogForm<T>(0, {T(1)})};
    for (int i = 1; i <= m; ++i) {
        gp.push_back(gp.back() * g);
        hp.push_back(hp.back() * h);
    }
    HomogForm<T> acc = HomogForm<T>::zero(m * g.degree());
    for (int i = 0; i <= m; ++i) {
        if (qrm::is_zero(f.coeff(i))) {
            continue;
        }
        acc = acc + f.coeff(i) * (gp[static_cast<std::size_t>(i)] * hp[static_cast<std::size_t>(m - i)]);
    }
    return acc;
}

/// a / b for forms, throwing NonDivisible when b does not divide a.
template <class T>
HomogForm<T> exact_div(const HomogForm<T>& a, const HomogForm<T>& b)
{
    if (b.is_zero()) {
        throw std::domain_error("division by the zero form");
    }
    const int dq = a.degree() - b.degree();
    if (dq < 0) {
        throw NonDivisible("exact_div: divisor has larger degree");
    }
    if (a.is_zero()) {
        return HomogForm<T>::zero(dq);
    }
    UniPoly<T> q = exact_div(a.dehomogenize(), b.dehomogenize());
    if (q.degree() > dq) {
        throw NonDivisible("exact_div: quotient degree exceeds form degree");
    }
    std::vector<T> c(static_cast<std::size_t>(dq) + 1, T(0));
    for (int i = 0; i <= q.degree(); ++i) {
        c[static_cast<std::size_t>(i)] = q.coeff(i);
    }
    return HomogForm<T>(dq, std::move(c));
}

template <class T, class F>
auto map_coeffs(const HomogForm<T>& f, F fn) -> HomogForm<decltype(fn(std::declval<const T&>()))>
{
    using U = decltype(fn(std::declval<const T&>()));
    std::vector<U> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        c.push_back(fn(v));
    }
    return HomogForm<U>(f.degree(), std::move(c));
}

/// Lift F = (G, H) of a rational map: two forms of a common degree d >= 2.
/// Resultant nonvanishing is checked by make_pair_map.
template <class T>
struct HomogPairMap {
    HomogForm<T> g;
    HomogForm<T> h;

    int degree() const noexcept { return g.degree(); }
};

/// (G_n, H_n) with F^n = (G_n, H_n), by repeated outer substitution.
template <class T>
std::pair<HomogForm<T>, HomogForm<T>> compose_pair(const HomogPairMap<T>& f, int n)
{
    if (n < 1) {
        throw std::invalid_argument("compose_pair: n must be positive");
    }
    HomogForm<T> g = f.g;
    HomogForm<T> h = f.h;
    for (int k = 1; k < n; ++k) {
        HomogForm<T> g2 = substitute(f.g, g, h);
        HomogForm<T> h2 = substitute(f.h, g, h);
        g = std::move(g2);
        h = std::move(h2);
    }
    return {std::move(g), std::move(h)};
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

namespace detail {

/// Positive integer L with L*f integral, coefficientwise.
inline mpz_class denominator_lcm(const std::vector<QuadRat>& c)
{
    mpz_class l = 1;
    for (const auto& v : c) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    }
    return l;
}

inline std::vector<QuadInt> scaled_integral(const std::vector<QuadRat>& c, const mpz_class& l)
{
    std::vector<QuadInt> out;
    out.reserve(c.size());
    for (const auto& v : c) {
        mpz_class f = l / v.den();
        out.push_back(v.num() * QuadInt(f));
    }
    return out;
}

inline Discriminant common_disc(const std::vector<QuadInt>& a, const std::vector<QuadInt>& b)
{
    QuadInt acc;
    for (const auto* list : {&a, &b}) {
        for (const auto& v : *list) {
            if (!v.is_rational()) {
                acc.merged(v);
                acc = QuadInt::alpha(v.disc());
            }
        }
    }
    return acc.disc();
}

/// Sylvester determinant of two integral forms given by ascending coefficient
/// lists (index i is the x^i y^(m-i) coefficient). Rows of A come first, each
/// listing coefficients from x^m down.
inline QuadInt sylvester_determinant(const std::vector<QuadInt>& a, const std::vector<QuadInt>& b)
{
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) {
        return QuadInt(1);
    }
    bool rational = true;
    for (const auto& v : a) {
        rational = rational && v.is_rational();
    }
    for (const auto& v : b) {
        rational = rational && v.is_rational();
    }
    if (rational) {
        IntMatrix mat(size);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t i = 0; i <= m; ++i) {
                mat.at(r, r + i) = a[m - i].x();
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t j = 0; j <= n; ++j) {
                mat.at(n + r, r + j) = b[n - j].x();
            }
        }
        return QuadInt(bareiss_determinant(std::move(mat)));
    }
    const Discriminant d = common_disc(a, b);
    QuadMatrix mat(size, d);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) {
            mat.set(r, r + i, a[m - i]);
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) {
            mat.set(n + r, r + j, b[n - j]);
        }
    }
    return bareiss_determinant(std::move(mat));
}

} // namespace detail

/// Homogeneous resultant with the convention res(x, y) = 1: Sylvester matrix
/// with the rows of A first, coefficients listed from the x^deg end.
inline QuadRat homog_resultant(const HomogForm<QuadRat>& a, const HomogForm<QuadRat>& b)
{
    if (a.is_zero() && b.is_zero()) {
        throw std::invalid_argument("homog_resultant: both forms are zero");
    }
    const mpz_class la = detail::denominator_lcm(a.coeffs());
    const mpz_class lb = detail::denominator_lcm(b.coeffs());
    QuadInt det = detail::sylvester_determinant(detail::scaled_integral(a.coeffs(), la),
                                                detail::scaled_integral(b.coeffs(), lb));
    mpz_class scale;
    mpz_class tmp;
    mpz_pow_ui(scale.get_mpz_t(), la.get_mpz_t(), static_cast<unsigned long>(b.degree()));
    mpz_pow_ui(tmp.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
    scale *= tmp;
    return QuadRat(std::move(det), scale);
}

template <class T>
bool has_common_root(const HomogForm<T>& a, const HomogForm<T>& b)
{
    return homog_resultant(a, b).is_zero();
}

template <class T>
HomogPairMap<T> make_pair_map(HomogForm<T> g, HomogForm<T> h)
{
    if (g.degree() != h.degree() || g.degree() < 2) {
        throw std::invalid_argument("pair map needs two forms of a common degree >= 2");
    }
    if (homog_resultant(g, h).is_zero()) {
        throw std::domain_error("degenerate lift: G and H share a projective root");
    }
    return HomogPairMap<T>{std::move(g), std::move(h)};
}

/// Interpolation sample points 0, 1, -1, 2, -2, ...
inline long sample_point(std::size_t k)
{
    const long half = static_cast<long>((k + 1) / 2);
    return (k % 2 == 1) ? half : -half;
}

/// Polynomial of degree <= points.size() - 1 through (points[k], values[k]),
/// via Newton divided differences.
inline UniPoly<QuadRat> interpolate(const std::vector<long>& points, const std::vector<QuadRat>& values)
{
    const std::size_t n = points.size();
    std::vector<QuadRat> dd = values;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / QuadRat(points[i] - points[i - level]);
        }
    }
    UniPoly<QuadRat> acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * UniPoly<QuadRat>(std::vector<QuadRat>{QuadRat(-points[i]), QuadRat(1)}) + UniPoly<QuadRat>(dd[i]);
    }
    return acc;
}

/// res(A, B) as a polynomial in lambda, where B has coefficients in K[lambda].
/// Evaluates the Sylvester determinant at degree_bound + 1 integer points and
/// interpolates exactly.
inline UniPoly<QuadRat> resultant_lambda(const HomogForm<QuadRat>& a, const HomogForm<UniPoly<QuadRat>>& b,
                                         int degree_bound)
{
    int max_lambda_deg = 0;
    for (const auto& c : b.coeffs()) {
        max_lambda_deg = std::max(max_lambda_deg, c.degree());
    }
    if (degree_bound < a.degree() * max_lambda_deg) {
        throw std::invalid_argument("resultant_lambda: degree bound below deg(A) * lambda-degree of B");
    }
    const mpz_class la = detail::denominator_lcm(a.coeffs());
    std::vector<QuadRat> all_b;
    for (const auto& c : b.coeffs()) {
        all_b.insert(all_b.end(), c.coeffs().begin(), c.coeffs().end());
    }
    const mpz_class lb = detail::denominator_lcm(all_b);
    const std::vector<QuadInt> a_int = detail::scaled_integral(a.coeffs(), la);

    std::vector<long> points;
    std::vector<QuadRat> values;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(degree_bound); ++k) {
        const long t = sample_point(k);
        std::vector<QuadRat> bt;
        bt.reserve(b.coeffs().size());
        for (const auto& c : b.coeffs()) {
            bt.push_back(c.eval(QuadRat(t)));
        }
        points.push_back(t);
        values.emplace_back(detail::sylvester_determinant(a_int, detail::scaled_integral(bt, lb)));
    }
    UniPoly<QuadRat> poly = interpolate(points, values);
    mpz_class scale, tmp;
    mpz_pow_ui(scale.get_mpz_t(), la.get_mpz_t(), static_cast<unsigned long>(b.degree()));
    mpz_pow_ui(tmp.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
    scale *= tmp;
    return QuadRat(QuadInt(1), scale) * poly;
}

} // namespace qrm

#endif // QRM_POLYRING_HPP
