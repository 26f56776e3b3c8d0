#ifndef QRM_PARSE_HPP
#define QRM_PARSE_HPP

// Parsing of field elements, polynomials in lambda and map specifications.
//
// Literals: integers, "i", "i√7", "i*sqrt(7)", "sqrt(-7)"; operators + - * / ^
// and parentheses, with implicit multiplication. Whitespace is ignored and the
// Unicode minus sign is accepted. The polynomial variable is λ, l, L or lambda.
//
// Map grammar: gab(a,b) | h | fc(c) | sigma(s1,s2).

#include "qrm/dynamics.hpp"
#include "qrm/polyring.hpp"
#include "qrm/quadfield.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrm {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void replace_all(std::string& s, const std::string& from, const std::string& to)
{
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size()) {
        s.replace(pos, from.size(), to);
    }
}

inline std::string normalize_input(std::string s)
{
    std::string out;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            out += ch;
        }
    }
    replace_all(out, "\xE2\x88\x92", "-"); // U+2212 minus
    replace_all(out, "\xC2\xB7", "*");     // middle dot
    replace_all(out, "\xC2\xB2", "^2");
    replace_all(out, "\xC2\xB3", "^3");
    replace_all(out, "\xE2\x81\xB4", "^4");
    replace_all(out, "\xE2\x81\xB5", "^5");
    replace_all(out, "\xE2\x81\xB6", "^6");
    replace_all(out, "lambda", "L");
    replace_all(out, "\xCE\xBB", "L"); // λ
    replace_all(out, "**", "^");
    return out;
}

class Parser {
public:
    explicit Parser(std::string text) : s_(normalize_input(std::move(text))) {}

    UniPoly<QuadRat> parse_all()
    {
        if (s_.empty()) {
            fail("empty expression");
        }
        UniPoly<QuadRat> v = expr();
        if (pos_ != s_.size()) {
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("parse error at offset " + std::to_string(pos_) + " in \"" + s_ + "\": " + msg);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    bool starts_with(const std::string& t) const { return s_.compare(pos_, t.size(), t) == 0; }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    UniPoly<QuadRat> expr()
    {
        UniPoly<QuadRat> v = term();
        while (true) {
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    bool starts_primary() const
    {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' || c == 'L' || c == 'l' ||
               starts_with("sqrt") || starts_with("\xE2\x88\x9A");
    }

    UniPoly<QuadRat> term()
    {
        UniPoly<QuadRat> v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const UniPoly<QuadRat> d = unary();
                if (d.degree() != 0) {
                    fail("division by a non-constant");
                }
                v = d.leading().inverse() * v;
            } else if (starts_primary()) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    UniPoly<QuadRat> unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    UniPoly<QuadRat> power()
    {
        UniPoly<QuadRat> base = primary();
        if (accept('^')) {
            const std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                ++pos_;
            }
            if (start == pos_ || pos_ - start > 4) {
                fail("expected a small exponent");
            }
            return pow(base, std::stoi(s_.substr(start, pos_ - start)));
        }
        return base;
    }

    mpz_class integer()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return mpz_class(s_.substr(start, pos_ - start));
    }

    /// s * i * sqrt(D') for N = s^2 D'.
    QuadRat imaginary_sqrt(const mpz_class& n)
    {
        if (sgn(n) <= 0) {
            fail("radicand must be positive");
        }
        if (n > 1000000000) {
            fail("radicand too large");
        }
        long rest = n.get_si();
        long s = 1;
        for (long p = 2; p * p <= rest; ++p) {
            while (rest % (p * p) == 0) {
                rest /= p * p;
                s *= p;
            }
        }
        const Discriminant d(rest);
        // i*sqrt(D) = alpha (whole) or 2*alpha - 1 (half)
        QuadInt unit = d.kind() == AlphaKind::Whole ? QuadInt::alpha(d) : QuadInt(-1, 2, d);
        return QuadRat(QuadInt(s) * unit);
    }

    UniPoly<QuadRat> primary()
    {
        if (accept('(')) {
            UniPoly<QuadRat> v = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return UniPoly<QuadRat>(QuadRat(integer()));
        }
        if (accept('L') || accept('l')) {
            return UniPoly<QuadRat>::variable();
        }
        if (starts_with("sqrt(-")) {
            pos_ += 6;
            const mpz_class n = integer();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return UniPoly<QuadRat>(imaginary_sqrt(n));
        }
        if (accept('i')) {
            if (starts_with("\xE2\x88\x9A")) { // √
                pos_ += 3;
                const bool paren = accept('(');
                const mpz_class n = integer();
                if (paren && !accept(')')) {
                    fail("expected ')'");
                }
                return UniPoly<QuadRat>(imaginary_sqrt(n));
            }
            if (starts_with("*sqrt(") || starts_with("sqrt(")) {
                pos_ += starts_with("*") ? 6 : 5;
                const mpz_class n = integer();
                if (!accept(')')) {
                    fail("expected ')'");
                }
                return UniPoly<QuadRat>(imaginary_sqrt(n));
            }
            return UniPoly<QuadRat>(imaginary_sqrt(1));
        }
        fail(at_end() ? "unexpected end of input" : "unexpected '" + std::string(1, peek()) + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

inline std::vector<std::string> split_args(const std::string& s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') {
            ++depth;
        } else if (ch == ')') {
            --depth;
        }
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

inline UniPoly<QuadRat> parse_poly(const std::string& text)
{
    try {
        return detail::Parser(text).parse_all();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("parse error: ") + e.what());
    }
}

/// A constant expression.
inline QuadRat parse_value(const std::string& text)
{
    const UniPoly<QuadRat> p = parse_poly(text);
    if (p.degree() > 0) {
        throw ParseError("expected a constant, got a polynomial: " + text);
    }
    return p.coeff(0);
}

inline QuadMapSpec parse_map(const std::string& text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
    }
    if (s == "h") {
        return HMap{};
    }
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') {
        throw ParseError("unknown map \"" + text + "\"; expected gab(a,b), h, fc(c) or sigma(s1,s2)");
    }
    const std::string name = s.substr(0, open);
    const auto args = detail::split_args(s.substr(open + 1, s.size() - open - 2));
    auto want = [&](std::size_t k) {
        if (args.size() != k) {
            throw ParseError(name + " takes " + std::to_string(k) + " argument(s)");
        }
    };
    if (name == "gab") {
        want(2);
        return Gab{parse_value(args[0]), parse_value(args[1])};
    }
    if (name == "fc") {
        want(1);
        return Fc{parse_value(args[0])};
    }
    if (name == "sigma") {
        want(2);
        return Sigma{parse_value(args[0]), parse_value(args[1])};
    }
    throw ParseError("unknown map family \"" + name + "\"");
}

/// Canonical text of a map spec.
inline std::string to_string(const QuadMapSpec& spec)
{
    struct Visitor {
        std::string operator()(const Gab& g) const { return "gab(" + to_string(g.a) + "," + to_string(g.b) + ")"; }
        std::string operator()(const HMap&) const { return "h"; }
        std::string operator()(const Fc& f) const { return "fc(" + to_string(f.c) + ")"; }
        std::string operator()(const Sigma& s) const
        {
            return "sigma(" + to_string(s.s1) + "," + to_string(s.s2) + ")";
        }
        std::string operator()(const Raw&) const { return "raw"; }
    };
    return std::visit(Visitor{}, spec);
}

} // namespace qrm

#endif // QRM_PARSE_HPP
