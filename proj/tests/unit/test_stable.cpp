#include <gtest/gtest.h>

#include "qschur/checks.hpp"
#include "qschur/stable.hpp"

using namespace qschur;

TEST(Stable, WorkedExample)
{
    const Report r = checks::worked_example();
    EXPECT_TRUE(r.passed()) << r.str();
}

TEST(Stable, TMultiplication)
{
    const Report r = checks::t_calculus(8, 41);
    EXPECT_TRUE(r.passed()) << r.str();
}

TEST(Stable, TSquaredLeadingCoefficient)
{
    const Algebra ki(Context{Family::Ki, 1, 0});
    const Weight lambda{0, 1, 0};
    ASSERT_TRUE(ki.is_label(ThetaMatrix::diag(lambda)));
    const Element t2 = t_power(ki, 2, lambda);
    ThetaMatrix top = ThetaMatrix::diag(lambda);
    top.add_theta(1, 1, -2);
    top.add_theta(1, 3, 2);
    EXPECT_EQ(t2.coeff(top), qfactorial(2)) << t2.str();
}

TEST(Stable, IdempotentsAreOrthogonal)
{
    const Algebra kj(Context{Family::Kj, 1, 0});
    const Weight a{0, 1, 0}, b{2, 1, 2}, c{1, -1, 1};
    EXPECT_EQ(kj.mul(kj.idempotent(a), kj.idempotent(a)), kj.idempotent(a));
    EXPECT_TRUE(kj.mul(kj.idempotent(a), kj.idempotent(b)).is_zero());
    EXPECT_FALSE(kj.idempotent(c).is_zero());
}

TEST(Stable, KjRelationsInWindow)
{
    const Report r = relations_kj(1, {-2, 3});
    EXPECT_TRUE(r.passed()) << r.str();
    const Report p = divided_powers(1, 3, {-2, 3});
    EXPECT_TRUE(p.passed()) << p.str();
}

TEST(Stable, PhiIsCompatibleWithCanonicalBases)
{
    const Report r = checks::compat_phi(Family::SchurJ, 1, 1, 2);
    EXPECT_TRUE(r.passed()) << r.str();
}

TEST(Stable, FitOfAGeneratorProduct)
{
    const Algebra kj(Context{Family::Kj, 1, 0});
    const ThetaMatrix up = ThetaMatrix::from_rows(1, {{0, 1, 0}, {0, 1, 0}, {0, 1, 0}});
    const ThetaMatrix lo = ThetaMatrix::from_rows(1, {{0, 0, 0}, {1, 1, 1}, {0, 0, 0}});
    ASSERT_EQ(up.co(), lo.ro());
    const StabilizationFit fit = stabilization_fit({up, lo}, Shift::Full, kj);
    EXPECT_EQ(fit.limit, kj.mul(kj.std(up), kj.std(lo)));
}

TEST(Stable, ShiftedMatrices)
{
    const ThetaMatrix a = ThetaMatrix::diag({1, 1, 1});
    const ThetaMatrix full = shifted(a, Shift::Full, 2);
    const ThetaMatrix breve = shifted(a, Shift::Breve, 2);
    EXPECT_EQ(full(2, 2), 1 + 2 * 2);
    EXPECT_EQ(full(1, 1), 1 + 2 * 2);
    EXPECT_EQ(breve(2, 2), 1);
    EXPECT_EQ(breve(1, 1), 1 + 2);
    EXPECT_EQ(shift_exponent(Shift::Full, 2), -4);
    EXPECT_EQ(shift_exponent(Shift::Breve, 2), -2);
}
