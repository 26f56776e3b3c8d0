#ifndef QRM_CLASSIFY_HPP
#define QRM_CLASSIFY_HPP

// Classification of quadratic rational maps whose multipliers at periods up
// to n_max lie in R_D, split into three branches by the fixed-point data:
// nondegenerate (no multiplier 0 or 1), superattracting (some multiplier 0)
// and multiple fixed point (some multiplier 1).

#include "qrm/dynamics.hpp"
#include "qrm/factorize.hpp"
#include "qrm/format.hpp"
#include "qrm/parse.hpp"
#include "qrm/tables.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrm {

/// A candidate survived every period but is not a known power, Chebyshev or
/// Lattes map; the reproduction would be falsified.
struct SurvivorNotRecognized : std::logic_error {
    using std::logic_error::logic_error;
};

using Triple = std::array<QuadRat, 3>;

struct TripleCandidate {
    std::array<QuadInt, 3> mu;
    std::array<QuadInt, 3> lambda;
    Discriminant D;
};

enum class Outcome { PowerMap, ChebyshevMap, Lattes, Excluded };

struct Verdict {
    Outcome outcome = Outcome::Excluded;
    /// Index into lattes_rows() for Outcome::Lattes.
    int lattes_row = -1;
    /// Least failing period for Outcome::Excluded.
    int period = 0;
    Factorization witness;
};

inline std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::PowerMap:
        return "power";
    case Outcome::ChebyshevMap:
        return "chebyshev";
    case Outcome::Lattes:
        return "lattes";
    default:
        return "excluded";
    }
}

/// Survivor class label: "power", "chebyshev" or "lattes:<row>".
inline std::string survivor_label(const Verdict& v)
{
    if (v.outcome == Outcome::Lattes) {
        return "lattes:" + std::to_string(v.lattes_row + 1);
    }
    return to_string(v.outcome);
}

// ---------------------------------------------------------------------------
// Unit-fraction triples
// ---------------------------------------------------------------------------

namespace detail {

/// Re(1/mu) and Im(1/mu)/sqrt(D) as rationals.
inline std::pair<mpq_class, mpq_class> inverse_coords(const QuadInt& mu)
{
    const mpz_class n = norm(mu);
    mpq_class re(twice_real(mu), 2 * n);
    mpq_class im(-twice_imag(mu), 2 * n);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

/// Descending Re(1/mu), ties by descending Im(1/mu).
inline bool canonical_before(const QuadInt& a, const QuadInt& b)
{
    const auto [ra, ia] = inverse_coords(a);
    const auto [rb, ib] = inverse_coords(b);
    if (ra != rb) {
        return ra > rb;
    }
    return ia > ib;
}

inline std::string triple_key(const std::array<QuadInt, 3>& t)
{
    return to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]);
}

} // namespace detail

/// Unordered triples of mu in R_D \ {0, 1} with 1/mu1 + 1/mu2 + 1/mu3 = 1, in
/// canonical order.
inline std::vector<TripleCandidate> enumerate_unit_fraction_triples(Discriminant d)
{
    const QuadInt one(1);
    auto drop_one = [&](std::vector<QuadInt> v) {
        v.erase(std::remove_if(v.begin(), v.end(), [&](const QuadInt& z) { return z == one; }), v.end());
        return v;
    };
    std::vector<TripleCandidate> out;
    std::set<std::string> seen;
    for (const auto& mu3 : drop_one(inverse_halfplane_points(d, mpq_class(1, 3)))) {
        const mpq_class re3 = detail::inverse_coords(mu3).first;
        mpq_class t = (1 - re3) / 2;
        if (t < mpq_class(1, 4)) {
            t = mpq_class(1, 4);
        }
        for (const auto& mu2 : drop_one(inverse_halfplane_points(d, t))) {
            const QuadRat inv1 = QuadRat(1) - QuadRat(mu2).inverse() - QuadRat(mu3).inverse();
            if (inv1.is_zero()) {
                continue;
            }
            const auto mu1 = inv1.inverse().to_quadint();
            if (!mu1 || *mu1 == one || (!mu1->is_rational() && !(mu1->disc() == d))) {
                continue;
            }
            std::array<QuadInt, 3> mu{QuadInt(mu1->x(), mu1->y(), d), mu2, mu3};
            std::sort(mu.begin(), mu.end(), detail::canonical_before);
            const std::string key = detail::triple_key(mu);
            if (!seen.insert(key).second) {
                continue;
            }
            TripleCandidate c{mu, {}, d};
            for (int j = 0; j < 3; ++j) {
                c.lambda[static_cast<std::size_t>(j)] = one - mu[static_cast<std::size_t>(j)];
            }
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const TripleCandidate& a, const TripleCandidate& b) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (detail::canonical_before(a.mu[j], b.mu[j])) {
                return true;
            }
            if (detail::canonical_before(b.mu[j], a.mu[j])) {
                return false;
            }
        }
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Lattes recognition
// ---------------------------------------------------------------------------

inline Triple parse_triple(const std::string& text)
{
    const auto parts = detail::split_args(text);
    if (parts.size() != 3) {
        throw ParseError("expected three comma-separated values: " + text);
    }
    return Triple{parse_value(parts[0]), parse_value(parts[1]), parse_value(parts[2])};
}

namespace detail {

inline std::vector<std::string> sorted_keys(const Triple& t)
{
    std::vector<std::string> k{to_string(t[0]), to_string(t[1]), to_string(t[2])};
    std::sort(k.begin(), k.end());
    return k;
}

} // namespace detail

/// Index into lattes_rows() of the row with these fixed-point multipliers.
inline std::optional<int> lattes_recognize(const Triple& t)
{
    const auto key = detail::sorted_keys(t);
    const auto& rows = lattes_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (detail::sorted_keys(parse_triple(rows[i].multipliers)) == key) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

/// Rows of lattes_rows() whose multipliers all lie in R_D.
inline std::vector<int> lattes_rows_in(Discriminant d)
{
    std::vector<int> out;
    const auto& rows = lattes_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Triple t = parse_triple(rows[i].multipliers);
        if (std::all_of(t.begin(), t.end(), [&](const QuadRat& z) { return in_ring(z, d); })) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Splitting checks
// ---------------------------------------------------------------------------

/// Factorization used to decide splitting. When the irreducible part is out of
/// reach of factor_over_RD it is kept as a single (possibly reducible) factor;
/// splitting is then decided by the number of roots in R_D.
inline Factorization splitting_factorization(const Poly& p, Discriminant d)
{
    try {
        return factor_over_RD(p, d);
    } catch (const UnsupportedDegree&) {
    }
    Factorization out;
    Poly rest = p;
    for (const auto& r : detail::field_roots(p, d)) {
        const Poly lin(std::vector<QuadRat>{-r, QuadRat(1)});
        rest = exact_div(rest, lin);
        out.factors.emplace_back(lin, 1);
    }
    out.factors.emplace_back(rest, 1);
    detail::canonicalize(out);
    out.splits = false;
    return out;
}

/// Least n in [n_from, n_max] whose M_n does not split over R_D.
inline std::optional<std::pair<int, Factorization>> first_failure(const QuadMapSpec& spec, Discriminant d,
                                                                  int n_from, int n_max)
{
    for (int n = n_from; n <= n_max; ++n) {
        const Poly m = multiplier_poly(spec, n).poly;
        Factorization f = splitting_factorization(m, d);
        if (!f.splits) {
            return std::make_pair(n, std::move(f));
        }
    }
    return std::nullopt;
}

inline Verdict excluded(std::pair<int, Factorization> failure)
{
    Verdict v;
    v.outcome = Outcome::Excluded;
    v.period = failure.first;
    v.witness = std::move(failure.second);
    return v;
}

// ---------------------------------------------------------------------------
// Branches
// ---------------------------------------------------------------------------

struct TripleResult {
    TripleCandidate triple;
    Verdict verdict;
};

inline Triple lambda_triple(const TripleCandidate& c)
{
    return Triple{QuadRat(c.lambda[0]), QuadRat(c.lambda[1]), QuadRat(c.lambda[2])};
}

inline std::vector<TripleResult> classify_nondegenerate(Discriminant d, int n_max = 5)
{
    if (n_max < 3) {
        throw std::invalid_argument("classify_nondegenerate: n_max must be at least 3");
    }
    std::vector<TripleResult> out;
    for (const auto& cand : enumerate_unit_fraction_triples(d)) {
        const Triple lam = lambda_triple(cand);
        const QuadMapSpec spec = map_from_fixed_multipliers(lam[0], lam[1], lam[2]);
        TripleResult r{cand, {}};
        if (auto fail = first_failure(spec, d, 2, n_max)) {
            r.verdict = excluded(std::move(*fail));
        } else if (lam[0] == QuadRat(-2) && lam[1] == QuadRat(-2) && lam[2] == QuadRat(-2)) {
            r.verdict.outcome = Outcome::PowerMap;
        } else if (auto row = lattes_recognize(lam)) {
            r.verdict.outcome = Outcome::Lattes;
            r.verdict.lattes_row = *row;
        } else {
            throw SurvivorNotRecognized("triple " + detail::triple_key(cand.lambda) + " survives every period");
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// The a = (e^2 + 8)/(2e) in R_D with N(e) | 64, sorted by norm.
inline std::vector<QuadInt> superattracting_a_values(Discriminant d)
{
    std::vector<QuadInt> out;
    std::set<std::string> seen;
    for (const auto& e : enum_norm_divides(d, 64)) {
        const QuadRat a = (QuadRat(e * e) + QuadRat(8)) / QuadRat(QuadInt(2) * e);
        if (!in_ring(a, d)) {
            continue;
        }
        if (seen.insert(to_string(a)).second) {
            out.push_back(*a.to_quadint());
        }
    }
    detail::sort_by_norm(out);
    return out;
}

/// c = 0 together with c = (1 - a^2)/4 over superattracting_a_values(D).
inline std::vector<QuadRat> superattracting_c_values(Discriminant d)
{
    std::vector<QuadRat> out{QuadRat(0)};
    std::set<std::string> seen{to_string(QuadRat(0))};
    for (const auto& a : superattracting_a_values(d)) {
        const QuadRat c = (QuadRat(1) - QuadRat(a * a)) / QuadRat(4);
        if (seen.insert(to_string(c)).second) {
            out.push_back(c);
        }
    }
    return out;
}

struct ParamResult {
    /// c for z^2 + c, a for z(z + a)/(z + 1), or "h".
    std::string param;
    Verdict verdict;
};

inline std::vector<ParamResult> classify_superattracting(Discriminant d, int n_max = 5)
{
    std::vector<ParamResult> out;
    for (const auto& c : superattracting_c_values(d)) {
        ParamResult r{to_string(c), {}};
        if (auto fail = first_failure(Fc{c}, d, 1, n_max)) {
            r.verdict = excluded(std::move(*fail));
        } else if (c.is_zero()) {
            r.verdict.outcome = Outcome::PowerMap;
        } else if (c == QuadRat(-2)) {
            r.verdict.outcome = Outcome::ChebyshevMap;
        } else {
            throw SurvivorNotRecognized("z^2 + " + to_string(c) + " survives every period");
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// The a = (c^2 - 2c + 9)/(4c) in R_D \ {1} with N(c) | 81, sorted by norm.
inline std::vector<QuadInt> multiple_fixed_a_values(Discriminant d)
{
    std::vector<QuadInt> out;
    std::set<std::string> seen;
    for (const auto& c : enum_norm_divides(d, 81)) {
        const QuadRat a = (QuadRat(c * c) - QuadRat(QuadInt(2) * c) + QuadRat(9)) / QuadRat(QuadInt(4) * c);
        if (!in_ring(a, d) || a == QuadRat(1)) {
            continue;
        }
        if (seen.insert(to_string(a)).second) {
            out.push_back(*a.to_quadint());
        }
    }
    detail::sort_by_norm(out);
    return out;
}

/// Every candidate with a multiple fixed point, with its verdict. Throws
/// SurvivorNotRecognized if any candidate survives.
inline std::vector<ParamResult> classify_multiple_fixed(Discriminant d, int n_max = 5)
{
    std::vector<ParamResult> out;
    {
        ParamResult r{"h", {}};
        auto fail = first_failure(HMap{}, d, 1, n_max);
        if (!fail) {
            throw SurvivorNotRecognized("z + 1/z survives every period");
        }
        r.verdict = excluded(std::move(*fail));
        out.push_back(std::move(r));
    }
    for (const auto& a : multiple_fixed_a_values(d)) {
        ParamResult r{to_string(a), {}};
        auto fail = first_failure(Gab{QuadRat(a), QuadRat(1)}, d, 1, n_max);
        if (!fail) {
            throw SurvivorNotRecognized("gab(" + to_string(a) + ",1) survives every period");
        }
        r.verdict = excluded(std::move(*fail));
        out.push_back(std::move(r));
    }
    return out;
}

struct ClassificationReport {
    Discriminant D;
    int n_max = 5;
    std::vector<TripleResult> nondegenerate;
    std::vector<ParamResult> superattracting;
    std::vector<ParamResult> multiple_fixed;
    /// Distinct survivor classes, sorted.
    std::vector<std::string> survivors;
};

inline std::vector<std::string> expected_survivors(Discriminant d)
{
    std::vector<std::string> s{"chebyshev", "power"};
    for (int row : lattes_rows_in(d)) {
        s.push_back("lattes:" + std::to_string(row + 1));
    }
    std::sort(s.begin(), s.end());
    return s;
}

inline ClassificationReport full_classification(Discriminant d, int n_max = 5)
{
    ClassificationReport rep;
    rep.D = d;
    rep.n_max = n_max;
    rep.nondegenerate = classify_nondegenerate(d, n_max);
    rep.superattracting = classify_superattracting(d, n_max);
    rep.multiple_fixed = classify_multiple_fixed(d, n_max);
    std::set<std::string> labels;
    for (const auto& r : rep.nondegenerate) {
        if (r.verdict.outcome != Outcome::Excluded) {
            labels.insert(survivor_label(r.verdict));
        }
    }
    for (const auto& r : rep.superattracting) {
        if (r.verdict.outcome != Outcome::Excluded) {
            labels.insert(survivor_label(r.verdict));
        }
    }
    rep.survivors.assign(labels.begin(), labels.end());
    if (n_max >= 5 && rep.survivors != expected_survivors(d)) {
        throw SurvivorNotRecognized("survivor set differs from power, Chebyshev and the Lattes rows in R_D");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Table verification
// ---------------------------------------------------------------------------

/// Parses "(f1)(f2)^2" or a bare polynomial into monic factors.
inline Factorization parse_factorization(const std::string& text)
{
    const std::string s = detail::normalize_input(text);
    Factorization f;
    if (s.empty() || s.front() != '(') {
        f.factors.emplace_back(parse_poly(s), 1);
    } else {
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] != '(') {
                throw ParseError("malformed factorization: " + text);
            }
            int depth = 0;
            std::size_t end = pos;
            for (; end < s.size(); ++end) {
                if (s[end] == '(') {
                    ++depth;
                } else if (s[end] == ')' && --depth == 0) {
                    break;
                }
            }
            if (end >= s.size()) {
                throw ParseError("unbalanced parentheses: " + text);
            }
            const Poly g = parse_poly(s.substr(pos + 1, end - pos - 1));
            pos = end + 1;
            int mult = 1;
            if (pos < s.size() && s[pos] == '^') {
                std::size_t start = ++pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    ++pos;
                }
                mult = std::stoi(s.substr(start, pos - start));
            }
            f.factors.emplace_back(g, mult);
        }
    }
    detail::canonicalize(f);
    return f;
}

inline QuadMapSpec row_spec(const TableRow& row)
{
    switch (row.kind) {
    case RowKind::Triple: {
        const Triple t = parse_triple(row.param);
        return map_from_fixed_multipliers(t[0], t[1], t[2]);
    }
    case RowKind::Quadratic:
        return Fc{parse_value(row.param)};
    default:
        return Gab{parse_value(row.param), QuadRat(1)};
    }
}

struct RowCheck {
    TableRow row;
    std::string computed;
    bool ok = false;
    std::string error;
};

/// Recomputes M_n for each row and compares its factorization with the
/// expected one. Failures are reported, never thrown.
inline std::vector<RowCheck> verify_rows(const std::vector<TableRow>& rows)
{
    std::vector<RowCheck> out;
    for (const auto& row : rows) {
        RowCheck c{row, "", false, ""};
        try {
            const Discriminant d(row.D);
            const Poly m = multiplier_poly(row_spec(row), row.n).poly;
            const Factorization got = splitting_factorization(m, d);
            c.computed = to_string(got);
            const Factorization want = parse_factorization(row.expected);
            c.ok = !got.splits && got.factors == want.factors;
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

inline std::vector<RowCheck> verify_tables(const std::string& table = "")
{
    std::vector<TableRow> rows;
    const std::string id = canonical_table_id(table);
    for (auto& r : reference_rows()) {
        if (id.empty() || r.table == id) {
            rows.push_back(std::move(r));
        }
    }
    if (!id.empty() && rows.empty()) {
        throw std::invalid_argument("unknown table \"" + table + "\"");
    }
    return verify_rows(rows);
}

} // namespace qrm

#endif // QRM_CLASSIFY_HPP
