#include "vtxalg/errors.hpp"
#include "vtxalg/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vtx;

TEST(Rational, ParsesLowestTerms)
{
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-2/3"), Rational(-2, 3));
    EXPECT_EQ(to_string(Rational(-2, 3)), "-2/3");
    EXPECT_EQ(to_string(Rational(5)), "5");
}

TEST(Rational, RejectsMalformed)
{
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("2/4"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, BinomialMatchesPascal)
{
    // Pascal's rule C(n, i) = C(n-1, i) + C(n-1, i-1) holds for every integer n.
    for (long n = -6; n <= 8; ++n)
        for (long i = 1; i <= 8; ++i)
            EXPECT_EQ(binomial(n, i), binomial(n - 1, i) + binomial(n - 1, i - 1)) << n << " " << i;
    EXPECT_EQ(binomial(5, 2), Rational(10));
    EXPECT_EQ(binomial(-1, 3), Rational(-1));
    EXPECT_EQ(binomial(-2, 2), Rational(3));
    EXPECT_EQ(binomial(3, 5), Rational(0));
    EXPECT_EQ(factorial(5), Rational(120));
}

TEST(Subspace, CanonicalBasisIndependentOfInsertionOrder)
{
    std::vector<VectorQ> vs = {{1, 2, 3}, {2, 4, 7}, {0, 0, 1}, {1, 1, 1}};
    Subspace a(3), b(3);
    for (const auto &v : vs)
        a.insert(v);
    for (auto it = vs.rbegin(); it != vs.rend(); ++it)
        b.insert(*it);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.dim(), 3u);
}

TEST(Subspace, CoordinatesReconstructVector)
{
    Subspace s(4);
    s.insert({1, 0, 2, 0});
    s.insert({0, 1, 1, 1});
    VectorQ v = {3, -2, 4, -2};
    ASSERT_TRUE(s.contains(v));
    auto c = s.coordinates(v);
    ASSERT_TRUE(c);
    VectorQ r = zero_vector(4);
    for (std::size_t i = 0; i < s.dim(); ++i)
        axpy(r, (*c)[i], s.basis()[i]);
    EXPECT_EQ(r, v);
    EXPECT_FALSE(s.contains({0, 0, 0, 1}));
    EXPECT_FALSE(s.insert({1, 1, 3, 1}));
}

TEST(Nullspace, RandomMatricesSatisfyRankNullity)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5;
        std::vector<VectorQ> rows(3, zero_vector(n));
        for (auto &r : rows)
            for (auto &x : r)
                x = d(rng);
        auto ker = nullspace(rows, n);
        EXPECT_EQ(ker.size() + rank(rows, n), n);
        for (const auto &k : ker)
            for (const auto &r : rows) {
                Rational s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    s += r[i] * k[i];
                EXPECT_EQ(s, 0);
            }
    }
}

TEST(SolveCombination, FindsExactCoefficients)
{
    std::vector<VectorQ> vs = {{1, 0, 1}, {0, 1, 1}};
    auto c = solve_combination(vs, {2, 3, 5});
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], 2);
    EXPECT_EQ((*c)[1], 3);
    EXPECT_FALSE(solve_combination(vs, {1, 1, 0}));
}

TEST(Matrix, ProductAndIdentity)
{
    Matrix a(2, 2);
    a(0, 1) = 1;
    EXPECT_TRUE((a * a).is_zero());
    EXPECT_EQ(Matrix::identity(2) * a, a);
    EXPECT_EQ(a.apply({3, 4}), (VectorQ{4, 0}));
}
