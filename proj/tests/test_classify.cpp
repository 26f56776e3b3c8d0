#include "qrm/classify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qrm;
using namespace qrm::testing;

namespace {

std::set<std::string> as_set(const std::vector<QuadInt>& v)
{
    std::set<std::string> s;
    for (const auto& z : v) {
        s.insert(to_string(z));
    }
    return s;
}

std::set<std::string> as_set(const std::vector<QuadRat>& v)
{
    std::set<std::string> s;
    for (const auto& z : v) {
        s.insert(to_string(z));
    }
    return s;
}

std::set<std::string> strings(std::initializer_list<const char*> l)
{
    std::set<std::string> s;
    for (const char* p : l) {
        s.insert(to_string(parse_value(p)));
    }
    return s;
}

std::string unordered_key(const std::array<QuadInt, 3>& t)
{
    std::vector<std::string> k{to_string(t[0]), to_string(t[1]), to_string(t[2])};
    std::sort(k.begin(), k.end());
    return k[0] + "," + k[1] + "," + k[2];
}

} // namespace

TEST(Triples, PublishedCounts)
{
    const std::vector<std::pair<long, std::size_t>> expected{{1, 23}, {2, 9}, {3, 27}, {7, 14}, {11, 3}, {15, 5}};
    for (const auto& [d, n] : expected) {
        EXPECT_EQ(enumerate_unit_fraction_triples(Discriminant(d)).size(), n) << "D=" << d;
    }
}

TEST(Triples, GenericRing)
{
    for (long d : {5L, 6L, 19L, 23L, 163L}) {
        const auto t = enumerate_unit_fraction_triples(Discriminant(d));
        std::set<std::string> keys;
        for (const auto& c : t) {
            keys.insert(unordered_key(c.mu));
        }
        EXPECT_EQ(keys, (std::set<std::string>{"2,3,6", "2,4,4", "3,3,3"})) << d;
    }
}

TEST(Triples, InvariantsHold)
{
    for (long dv : small_discs()) {
        for (const auto& c : enumerate_unit_fraction_triples(Discriminant(dv))) {
            QuadRat s(0);
            for (const auto& mu : c.mu) {
                EXPECT_FALSE(mu.is_zero());
                EXPECT_FALSE(mu == QuadInt(1));
                s += QuadRat(mu).inverse();
            }
            EXPECT_EQ(s, QuadRat(1));
            const Triple l = lambda_triple(c);
            EXPECT_EQ(l[0] * l[1] * l[2], l[0] + l[1] + l[2] - QuadRat(2));
            EXPECT_TRUE(fixed_point_identity_holds(l[0], l[1], l[2]));
            EXPECT_FALSE(detail::canonical_before(c.mu[1], c.mu[0]));
            EXPECT_FALSE(detail::canonical_before(c.mu[2], c.mu[1]));
        }
    }
}

TEST(Triples, BruteForceCompleteness)
{
    // Every triple with all three norms <= 64 must be enumerated.
    for (long dv = 1; dv <= 30; ++dv) {
        if (!is_squarefree(dv)) {
            continue;
        }
        const Discriminant d(dv);
        std::set<std::string> listed;
        for (const auto& c : enumerate_unit_fraction_triples(d)) {
            listed.insert(unordered_key(c.mu));
        }
        std::vector<QuadInt> pts;
        for (auto& z : enum_norm_le(d, 64)) {
            if (!z.is_zero() && !(z == QuadInt(1))) {
                pts.push_back(z);
            }
        }
        std::size_t misses = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i; j < pts.size(); ++j) {
                const QuadRat r = QuadRat(1) - QuadRat(pts[i]).inverse() - QuadRat(pts[j]).inverse();
                if (r.is_zero()) {
                    continue;
                }
                const QuadRat m3 = r.inverse();
                if (!in_ring(m3, d) || m3 == QuadRat(1) || norm(m3) > 64) {
                    continue;
                }
                const QuadInt z3 = *m3.to_quadint();
                const std::array<QuadInt, 3> t{pts[i], pts[j], QuadInt(z3.x(), z3.y(), d)};
                if (!listed.count(unordered_key(t))) {
                    ++misses;
                }
            }
        }
        EXPECT_EQ(misses, 0u) << "D=" << dv;
    }
}

TEST(Lattes, Recognition)
{
    const auto r1 = lattes_recognize(parse_triple("-4, -1-i, -1+i"));
    ASSERT_TRUE(r1.has_value());
    EXPECT_EQ(lattes_rows()[static_cast<std::size_t>(*r1)].n, 4);
    EXPECT_EQ(lattes_rows()[static_cast<std::size_t>(*r1)].a, "1+i");
    const auto r2 = lattes_recognize(parse_triple("i√2, -2, -i√2"));
    ASSERT_TRUE(r2.has_value());
    EXPECT_EQ(lattes_rows()[static_cast<std::size_t>(*r2)].lattice, "Z[i√2]");
    EXPECT_FALSE(lattes_recognize(parse_triple("-2, -2, -2")).has_value());
}

TEST(Lattes, RowsSatisfyFixedPointIdentity)
{
    EXPECT_EQ(lattes_rows().size(), 8u);
    for (const auto& row : lattes_rows()) {
        const Triple t = parse_triple(row.multipliers);
        EXPECT_TRUE(fixed_point_identity_holds(t[0], t[1], t[2])) << row.multipliers;
        for (const auto& z : t) {
            EXPECT_TRUE(in_ring(z, Discriminant(row.D)));
        }
    }
    EXPECT_EQ(lattes_rows_in(Discriminant(1)).size(), 3u);
    EXPECT_EQ(lattes_rows_in(Discriminant(2)).size(), 1u);
    EXPECT_EQ(lattes_rows_in(Discriminant(7)).size(), 4u);
    EXPECT_TRUE(lattes_rows_in(Discriminant(3)).empty());
}

TEST(Lattes, RowsSurviveFivePeriods)
{
    for (const auto& row : lattes_rows()) {
        const Triple t = parse_triple(row.multipliers);
        const QuadMapSpec spec = map_from_fixed_multipliers(t[0], t[1], t[2]);
        EXPECT_FALSE(first_failure(spec, Discriminant(row.D), 1, 5).has_value()) << row.multipliers;
    }
}

TEST(Superattracting, CandidateSets)
{
    EXPECT_EQ(as_set(superattracting_a_values(Discriminant(1))), strings({"-3", "-2", "-i", "i", "2", "3"}));
    EXPECT_EQ(as_set(superattracting_a_values(Discriminant(2))), strings({"-3", "0", "3"}));
    EXPECT_EQ(as_set(superattracting_a_values(Discriminant(3))),
              strings({"-3", "(-3-i√3)/2", "(-3+i√3)/2", "(3-i√3)/2", "(3+i√3)/2", "3"}));
    EXPECT_EQ(as_set(superattracting_a_values(Discriminant(7))), strings({"-3", "-1", "1", "3"}));
    EXPECT_EQ(as_set(superattracting_a_values(Discriminant(19))), strings({"-3", "3"}));
    EXPECT_EQ(as_set(superattracting_c_values(Discriminant(1))), strings({"0", "-2", "-3/4", "1/2"}));
    EXPECT_EQ(as_set(superattracting_c_values(Discriminant(2))), strings({"0", "-2", "1/4"}));
    EXPECT_EQ(as_set(superattracting_c_values(Discriminant(3))),
              strings({"0", "-2", "(-1-3i√3)/8", "(-1+3i√3)/8"}));
    EXPECT_EQ(as_set(superattracting_c_values(Discriminant(7))), strings({"0", "-2"}));
    EXPECT_EQ(as_set(superattracting_c_values(Discriminant(23))), strings({"0", "-2"}));
}

TEST(Superattracting, Verdicts)
{
    for (const auto& r : classify_superattracting(Discriminant(1))) {
        if (r.param == "1/2") {
            EXPECT_EQ(r.verdict.outcome, Outcome::Excluded);
            EXPECT_EQ(r.verdict.period, 4);
            EXPECT_EQ(to_string(r.verdict.witness), "λ^3-44λ^2+784λ-8896");
        }
        if (r.param == "0") {
            EXPECT_EQ(r.verdict.outcome, Outcome::PowerMap);
        }
        if (r.param == "-2") {
            EXPECT_EQ(r.verdict.outcome, Outcome::ChebyshevMap);
        }
    }
}

TEST(MultipleFixed, CandidateSets)
{
    EXPECT_EQ(as_set(multiple_fixed_a_values(Discriminant(2))), strings({"-3", "-2", "-1", "0", "2"}));
    EXPECT_EQ(as_set(multiple_fixed_a_values(Discriminant(3))),
              strings({"-3", "-2", "(-1-i√3)/2", "(-1+i√3)/2", "2"}));
    EXPECT_EQ(as_set(multiple_fixed_a_values(Discriminant(1))), strings({"-3", "-2", "2"}));
    EXPECT_EQ(as_set(multiple_fixed_a_values(Discriminant(31))), strings({"-3", "-2", "2"}));
}

TEST(MultipleFixed, EveryCandidateExcluded)
{
    for (long d : {1L, 2L, 3L, 7L, 19L}) {
        for (const auto& r : classify_multiple_fixed(Discriminant(d))) {
            EXPECT_EQ(r.verdict.outcome, Outcome::Excluded) << r.param;
            if (r.param == "h") {
                EXPECT_EQ(r.verdict.period, 5);
            }
            if (r.param == "-3") {
                EXPECT_EQ(to_string(r.verdict.witness), "(λ-31)(λ^2+80λ+1231)");
            }
        }
    }
}

TEST(Nondegenerate, WitnessForGenericTriple)
{
    for (const auto& r : classify_nondegenerate(Discriminant(19))) {
        const std::string key = unordered_key(r.triple.lambda);
        if (key == "-1,-2,-5") {
            EXPECT_EQ(r.verdict.outcome, Outcome::Excluded);
            EXPECT_EQ(r.verdict.period, 4);
            EXPECT_EQ(to_string(r.verdict.witness), "λ^3-159λ^2+7419λ-84221");
        } else if (key == "-2,-2,-2") {
            EXPECT_EQ(r.verdict.outcome, Outcome::PowerMap);
        } else {
            EXPECT_EQ(r.verdict.period, 5);
            EXPECT_EQ(to_string(r.verdict.witness), "(λ^3+267λ^2+20871λ+414157)^2");
        }
    }
    EXPECT_THROW(classify_nondegenerate(Discriminant(1), 2), std::invalid_argument);
}

TEST(Nondegenerate, ExclusionsHaveNonlinearFactor)
{
    for (long d : {1L, 7L}) {
        for (const auto& r : classify_nondegenerate(Discriminant(d))) {
            if (r.verdict.outcome != Outcome::Excluded) {
                continue;
            }
            EXPECT_FALSE(r.verdict.witness.splits);
            EXPECT_GE(r.verdict.period, 2);
            for (const auto& l : lambda_triple(r.triple)) {
                EXPECT_FALSE(l.is_zero());
                EXPECT_FALSE(l == QuadRat(1));
            }
        }
    }
}

TEST(FullClassification, SurvivorSets)
{
    EXPECT_EQ(full_classification(Discriminant(1)).survivors,
              (std::vector<std::string>{"chebyshev", "lattes:1", "lattes:2", "lattes:3", "power"}));
    EXPECT_EQ(full_classification(Discriminant(2)).survivors,
              (std::vector<std::string>{"chebyshev", "lattes:4", "power"}));
    EXPECT_EQ(full_classification(Discriminant(7)).survivors.size(), 6u);
    EXPECT_EQ(full_classification(Discriminant(19)).survivors, (std::vector<std::string>{"chebyshev", "power"}));
}

TEST(Tables, RowCounts)
{
    std::map<std::string, int> counts;
    for (const auto& r : reference_rows()) {
        ++counts[r.table];
    }
    EXPECT_EQ(counts["cases3"], 13);
    EXPECT_EQ(counts["cases4"], 11);
    EXPECT_EQ(counts["cases5"], 8);
    EXPECT_EQ(counts["super"], 5);
    EXPECT_EQ(counts["simple"], 4);
}

TEST(Tables, SingleTableVerifies)
{
    const auto rows = verify_tables("proofSuper");
    EXPECT_EQ(rows.size(), 5u);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.ok) << r.row.id() << " " << r.computed;
    }
    EXPECT_THROW(verify_tables("nope"), std::invalid_argument);
}

TEST(Tables, CorruptedRowReported)
{
    std::vector<TableRow> rows;
    for (const auto& r : reference_rows()) {
        if (r.table == "simple") {
            rows.push_back(r);
        }
    }
    rows[1].expected = "λ^3-47λ^2+779λ-4862";
    rows[2].param = "not a number";
    const auto checks = verify_rows(rows);
    ASSERT_EQ(checks.size(), 4u);
    EXPECT_TRUE(checks[0].ok);
    EXPECT_FALSE(checks[1].ok);
    EXPECT_EQ(checks[1].computed, "λ^3-47λ^2+779λ-4861");
    EXPECT_FALSE(checks[2].ok);
    EXPECT_FALSE(checks[2].error.empty());
    EXPECT_TRUE(checks[3].ok);
}

TEST(Tables, ParseFactorization)
{
    const Factorization f = parse_factorization("(λ-1)(λ^2+2λ+37)");
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.product(), parse_poly("λ^3+λ^2+35λ-37"));
    const Factorization g = parse_factorization("(λ^3+(3+3i√2)λ^2+(-27-42i√2)λ+3-343i√2)^2");
    ASSERT_EQ(g.factors.size(), 1u);
    EXPECT_EQ(g.factors[0].second, 2);
    EXPECT_THROW(parse_factorization("(λ-1"), ParseError);
}
