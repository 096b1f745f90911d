#include <random>

#include <gtest/gtest.h>

#include "qschur/laurent.hpp"

using qschur::Laurent;

namespace {

Laurent random_poly(std::mt19937& rng)
{
    std::vector<Laurent::Term> t;
    const int len = static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k)
        t.emplace_back(static_cast<int>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 9) - 4);
    return Laurent::from_terms(t);
}

// number of k-dimensional subspaces of F_q^m, counted by the orbit formula
long long grassmann_count(long q, int m, int k)
{
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long long a = 1, b = 1;
        for (int e = 0; e < m - i; ++e)
            a *= q;
        for (int e = 0; e < k - i; ++e)
            b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

}  // namespace

TEST(Laurent, NormalFormDropsZeros)
{
    const Laurent p = Laurent::from_terms({{2, 3}, {-1, 1}, {2, -3}, {0, 0}});
    EXPECT_EQ(p, Laurent::monomial(-1));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.min_exp(), -1);
    EXPECT_EQ(p.max_exp(), -1);
}

TEST(Laurent, RingOperationsAgreeWithEvaluation)
{
    std::mt19937 rng(11);
    const mpq_class x(7, 3);
    for (int trial = 0; trial < 200; ++trial) {
        const Laurent a = random_poly(rng), b = random_poly(rng);
        EXPECT_EQ(qschur::eval_at(a * b, x), qschur::eval_at(a, x) * qschur::eval_at(b, x));
        EXPECT_EQ(qschur::eval_at(a + b, x), qschur::eval_at(a, x) + qschur::eval_at(b, x));
        EXPECT_EQ(qschur::eval_at(a.bar(), x), qschur::eval_at(a, 1 / x));
        EXPECT_EQ(a.bar().bar(), a);
    }
}

TEST(Laurent, ExactDivision)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Laurent a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero())
            continue;
        EXPECT_EQ((a * b).divide_exact(b), a);
    }
    EXPECT_THROW(Laurent::monomial(2).divide_exact(Laurent::monomial(1) + Laurent(1)), qschur::InexactDivision);
}

TEST(Laurent, QuantumIntegers)
{
    EXPECT_EQ(qschur::qint(3), Laurent::from_terms({{-2, 1}, {0, 1}, {2, 1}}));
    EXPECT_EQ(qschur::qint(0), Laurent());
    EXPECT_EQ(qschur::qint(-2), -qschur::qint(2));
    EXPECT_EQ(qschur::qfactorial(3), qschur::qint(3) * qschur::qint(2));
    EXPECT_EQ(qschur::gauss_bracket(3), Laurent::from_terms({{0, 1}, {2, 1}, {4, 1}}));
}

TEST(Laurent, GaussianBinomialCountsSubspaces)
{
    for (long q : {3L, 5L, 7L})
        for (int m = 0; m <= 5; ++m)
            for (int k = 0; k <= m; ++k)
                EXPECT_EQ(qschur::eval_q(qschur::gauss_binom(m, k), q), mpq_class(static_cast<long>(grassmann_count(q, m, k))))
                    << "q=" << q << " m=" << m << " k=" << k;
}

TEST(Laurent, EvalAtSquareRoot)
{
    EXPECT_EQ(qschur::eval_q(Laurent::monomial(-2, 3), 5), mpq_class(3, 5));
    EXPECT_THROW(qschur::eval_q(Laurent::monomial(1), 3), qschur::OddExponent);
    const auto [x, y] = qschur::eval_q_sqrt(Laurent::monomial(3) + Laurent(2), 3);
    EXPECT_EQ(x, 2);
    EXPECT_EQ(y, 3);
}

TEST(Laurent, Formatting)
{
    EXPECT_EQ(Laurent().str(), "0");
    EXPECT_FALSE(Laurent::monomial(-1, 2).str().empty());
}
