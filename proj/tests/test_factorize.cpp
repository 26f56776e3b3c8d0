#include "qrm/classify.hpp"
#include "qrm/factorize.hpp"
#include "qrm/format.hpp"
#include "qrm/parse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace qrm;
using namespace qrm::testing;

namespace {

Poly poly(const std::string& s) { return parse_poly(s); }

Poly linear(const QuadRat& r) { return Poly(std::vector<QuadRat>{-r, QuadRat(1)}); }

std::vector<QuadInt> coeffs_int(const Poly& p)
{
    std::vector<QuadInt> c;
    for (const auto& v : p.coeffs()) {
        c.push_back(*v.to_quadint());
    }
    return c;
}

std::vector<std::string> sorted_strings(const std::vector<QuadInt>& v)
{
    std::vector<std::string> s;
    for (const auto& z : v) {
        s.push_back(to_string(z));
    }
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST(InRing, Membership)
{
    EXPECT_TRUE(in_ring(parse_value("(1+i√7)/2"), Discriminant(7)));
    EXPECT_FALSE(in_ring(parse_value("(1+i√7)/2"), Discriminant(3)));
    EXPECT_FALSE(in_ring(parse_value("(1+i)/2"), Discriminant(1)));
    EXPECT_TRUE(in_ring(QuadRat(-5), Discriminant(11)));
    EXPECT_FALSE(in_ring(parse_value("1/2"), Discriminant(11)));
}

TEST(RootSearch, NumericRouteAgreesWithExhaustive)
{
    for (long dv : small_discs()) {
        const Discriminant d(dv);
        for (int k = 0; k < 20; ++k) {
            Poly p(QuadRat(1));
            const int nroots = static_cast<int>(uniform(1, 3));
            for (int j = 0; j < nroots; ++j) {
                p = p * linear(QuadRat(random_quadint(d, 12)));
            }
            if (uniform(0, 1) == 1) {
                // an irreducible-looking quadratic factor
                p = p * Poly(std::vector<QuadRat>{QuadRat(uniform(2, 30) * 2 + 1), QuadRat(1), QuadRat(1)});
            }
            const auto c = coeffs_int(p);
            EXPECT_EQ(sorted_strings(detail::integral_roots(c, d)),
                      sorted_strings(detail::integral_roots_exhaustive(c, d)))
                << to_string(p);
        }
    }
}

TEST(Factor, ReconstructsRandomProducts)
{
    for (long dv : small_discs()) {
        const Discriminant d(dv);
        for (int k = 0; k < 25; ++k) {
            Poly p(QuadRat(1));
            bool all_integral = true;
            const int nlin = static_cast<int>(uniform(0, 3));
            for (int j = 0; j < nlin; ++j) {
                QuadRat r = uniform(0, 3) == 0 ? random_quadrat(d, 10, 3) : QuadRat(random_quadint(d, 10));
                all_integral = all_integral && in_ring(r, d);
                p = p * linear(r);
            }
            bool has_quad = false;
            if (nlin == 0 || uniform(0, 1) == 1) {
                // x^2 - 3 has no root in any imaginary quadratic field
                p = p * poly("λ^2-3");
                has_quad = true;
            }
            const Factorization f = factor_over_RD(p, d);
            EXPECT_EQ(f.product(), p);
            EXPECT_EQ(f.splits, all_integral && !has_quad) << to_string(p);
            for (const auto& [g, m] : f.factors) {
                EXPECT_TRUE(g.is_monic());
                EXPECT_GE(m, 1);
            }
        }
    }
}

TEST(Factor, SquaredCubic)
{
    const Poly cubic = poly("λ^3-309λ^2+27399λ-696691");
    const Factorization f = factor_over_RD(cubic * cubic, Discriminant(1));
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].first, cubic);
    EXPECT_EQ(f.factors[0].second, 2);
    EXPECT_FALSE(f.splits);
    EXPECT_EQ(to_string(f), "(λ^3-309λ^2+27399λ-696691)^2");
}

TEST(Factor, QuadraticIrrationalRoots)
{
    // roots (1+i√7)/2 and 3: splits in R_7, not in R_3
    const Poly p = linear(parse_value("(1+i√7)/2")) * linear(QuadRat(3));
    EXPECT_TRUE(factor_over_RD(p, Discriminant(7)).splits);
    const auto roots = roots_in_RD(p, Discriminant(7));
    EXPECT_EQ(roots.size(), 2u);
    // (λ - 1/2)(λ + 1): field root 1/2 is not in R_D
    const Factorization g = factor_over_RD(linear(parse_value("1/2")) * linear(QuadRat(-1)), Discriminant(2));
    EXPECT_FALSE(g.splits);
    EXPECT_EQ(g.factors.size(), 2u);
}

TEST(Factor, UnsupportedQuartic)
{
    // irreducible quartic that is not a square
    EXPECT_THROW(factor_over_RD(poly("λ^4-10λ^2+1"), Discriminant(1)), UnsupportedDegree);
    EXPECT_THROW(factor_over_RD(poly("2λ-1"), Discriminant(1)), std::invalid_argument);
}

TEST(IrreducibleCubic, WitnessPolynomials)
{
    EXPECT_TRUE(irreducible_over_Q_cubic(poly("λ^3-159λ^2+7419λ-84221")));
    EXPECT_TRUE(irreducible_over_Q_cubic(poly("λ^3-309λ^2+27399λ-696691")));
    EXPECT_TRUE(irreducible_over_Q_cubic(poly("λ^3+9λ^2+123λ+1307")));
    EXPECT_FALSE(irreducible_over_Q_cubic(poly("(λ-31)(λ^2+80λ+1231)")));
}

TEST(Discriminant, QuadraticAndCubic)
{
    EXPECT_EQ(discriminant(poly("λ^2+80λ+1231")), QuadRat(80 * 80 - 4 * 1231));
    // product of squared root differences for (λ-1)(λ-2)(λ-4)
    EXPECT_EQ(discriminant(poly("(λ-1)(λ-2)(λ-4)")), QuadRat(1 * 9 * 4));
    // disc M_3 of g_{a,1} = 2^4 (a + 2)(a - 1)^3
    for (long a = -5; a <= 5; ++a) {
        const Poly m3(std::vector<QuadRat>{QuadRat(36 * a * a * a + 112 * a * a + 124 * a + 89),
                                           QuadRat(-4 * a * a - 16 * a - 18), QuadRat(1)});
        EXPECT_EQ(discriminant(m3), QuadRat(16 * (a + 2) * (a - 1) * (a - 1) * (a - 1)));
    }
}

TEST(Factor, QuadraticSplittingTwoRoutes)
{
    // route 2: discriminant is a square in R_D and (-b +- sqrt)/2 lands in R_D
    int split_count = 0;
    for (int k = 0; k < 500; ++k) {
        const Discriminant d(small_discs()[static_cast<std::size_t>(k) % small_discs().size()]);
        Poly p;
        if (k % 2 == 0) {
            p = linear(QuadRat(random_quadint(d, 15))) * linear(QuadRat(random_quadint(d, 15)));
        } else {
            p = Poly(std::vector<QuadRat>{QuadRat(random_quadint(d, 30)), QuadRat(random_quadint(d, 30)), QuadRat(1)});
        }
        const QuadInt b = *p.coeff(1).to_quadint();
        const QuadInt c = *p.coeff(0).to_quadint();
        bool by_disc = false;
        if (const auto s = sqrt_in_RD(b * b - QuadInt(4) * c)) {
            by_disc = in_ring((QuadRat(-b) + QuadRat(*s)) / QuadRat(2), d) &&
                      in_ring((QuadRat(-b) - QuadRat(*s)) / QuadRat(2), d);
        }
        const bool by_factor = factor_over_RD(p, d).splits;
        EXPECT_EQ(by_factor, by_disc) << to_string(p) << " D=" << d.value();
        split_count += by_factor ? 1 : 0;
    }
    EXPECT_GE(split_count, 250);
}

TEST(Factor, NonlinearFactorsHaveNoRoots)
{
    for (const auto& row : reference_rows()) {
        const Discriminant d(row.D);
        for (const auto& [g, m] : factor_over_RD(parse_factorization(row.expected).product(), d).factors) {
            if (g.degree() >= 2) {
                EXPECT_TRUE(roots_in_RD(g, d).empty()) << row.id();
            }
        }
    }
}

TEST(IrreducibleCubic, NoRootsInAnyRing)
{
    const std::vector<Poly> cubics{poly("λ^3-159λ^2+7419λ-84221"), poly("λ^3-309λ^2+27399λ-696691"),
                                   poly("λ^3+9λ^2+123λ+1307"), poly("λ^3-231λ^2+17211λ-407861"),
                                   poly("λ^3+267λ^2+20871λ+414157")};
    for (const auto& p : cubics) {
        ASSERT_TRUE(irreducible_over_Q_cubic(p)) << to_string(p);
        for (long dv = 1; dv <= 50; ++dv) {
            if (is_squarefree(dv)) {
                EXPECT_TRUE(roots_in_RD(p, Discriminant(dv)).empty()) << to_string(p) << " D=" << dv;
            }
        }
    }
}

TEST(Discriminant, FcFixedMultipliers)
{
    // disc of lambda^3 - 2 lambda^2 + 4c lambda is -4(4c - 1)(4c)^2
    for (int k = 0; k < 10; ++k) {
        const QuadRat c = random_rational(30, 7);
        const Poly m1 = poly("λ^3-2λ^2") + Poly::monomial(QuadRat(4) * c, 1);
        EXPECT_EQ(discriminant(m1), QuadRat(-4) * (QuadRat(4) * c - QuadRat(1)) * QuadRat(16) * c * c);
    }
    EXPECT_EQ(discriminant(poly("λ^2")), QuadRat(0));
}
