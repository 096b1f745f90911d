#include <random>

#include <gtest/gtest.h>

#include "qschur/checks.hpp"
#include "qschur/relations.hpp"

using namespace qschur;

namespace {

Element random_element(const Algebra& alg, const std::vector<ThetaMatrix>& labels, std::mt19937& rng)
{
    Element x = alg.zero();
    for (int k = 0; k < 3; ++k)
        x.add(labels[rng() % labels.size()], Laurent::monomial(static_cast<int>(rng() % 5) - 2,
                                                               static_cast<int>(rng() % 5) - 2));
    return x;
}

}  // namespace

TEST(Schur, UnitIsSumOfIdempotents)
{
    for (Family f : {Family::SchurJ, Family::SchurI}) {
        const Algebra alg(Context{f, 2, 2});
        const Element one = alg.unit();
        for (const auto& a : enumerate(alg.labels())) {
            EXPECT_EQ(alg.mul(one, alg.std(a)), alg.std(a)) << a.str();
            EXPECT_EQ(alg.mul(alg.std(a), one), alg.std(a)) << a.str();
        }
    }
}

TEST(Schur, ProductIsAssociative)
{
    const Algebra alg(Context{Family::SchurJ, 1, 2});
    const auto labels = enumerate(alg.labels());
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const Element x = random_element(alg, labels, rng), y = random_element(alg, labels, rng),
                      z = random_element(alg, labels, rng);
        EXPECT_EQ(alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z)));
    }
}

TEST(Schur, BarIsAnAntilinearRingInvolution)
{
    const Algebra alg(Context{Family::SchurJ, 1, 2});
    const auto labels = enumerate(alg.labels());
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Element x = random_element(alg, labels, rng), y = random_element(alg, labels, rng);
        EXPECT_EQ(alg.bar(alg.bar(x)), x);
        EXPECT_EQ(alg.bar(alg.mul(x, y)), alg.mul(alg.bar(x), alg.bar(y)));
        EXPECT_EQ(alg.bar(Laurent::monomial(1) * x), Laurent::monomial(-1) * alg.bar(x));
    }
}

TEST(Schur, MonomialsAreBarInvariantAndTriangular)
{
    for (int d : {1, 2, 3}) {
        const Algebra alg(Context{Family::SchurJ, 1, d});
        for (const auto& a : enumerate(alg.labels())) {
            const Element m = alg.monomial(a);
            EXPECT_EQ(alg.bar(m), m) << a.str();
            EXPECT_EQ(m.coeff(a), Laurent(1)) << a.str();
            for (const auto& [b, c] : m.terms())
                EXPECT_TRUE(sqsubseteq(b, a)) << b.str() << " under " << a.str();
        }
    }
}

TEST(Schur, CanonicalBasisFinite)
{
    for (int d : {1, 2}) {
        const Report r = checks::canonical_finite(Family::SchurJ, 1, d);
        EXPECT_TRUE(r.passed()) << r.str();
    }
    const Report ri = checks::canonical_finite(Family::SchurI, 2, 2);
    EXPECT_TRUE(ri.passed()) << ri.str();
}

TEST(Schur, CanonicalBasisStableWindow)
{
    const Report r = checks::canonical_stable(Context{Family::Kj, 1, 0}, 2, -2, 2);
    EXPECT_TRUE(r.passed()) << r.str();
}

TEST(Schur, GeneratorRelations)
{
    const Report rj = relations_schur_j(1, 2);
    EXPECT_TRUE(rj.passed()) << rj.str();
    const Report ri = relations_schur_i(2, 1);
    EXPECT_TRUE(ri.passed()) << ri.str();
}

TEST(Schur, StructureConstantsAgainstCounts)
{
    const Report r = checks::oracle_structure_constants(Family::SchurJ, 1, 1, 3);
    EXPECT_TRUE(r.passed()) << r.str();
}

TEST(Schur, RejectsForeignInput)
{
    const Algebra j(Context{Family::SchurJ, 1, 1});
    const Algebra i(Context{Family::SchurI, 1, 1});
    ThetaMatrix bad(1);
    bad.set(2, 2, 3);
    bad.set(1, 1, 1);
    EXPECT_THROW(j.std(bad), BadLabel);
    const auto a = enumerate(j.labels()).front();
    const auto b = enumerate(i.labels()).front();
    EXPECT_THROW(j.mul(j.std(a), i.std(b)), ContextMismatch);
}

TEST(Schur, ProductOfMismatchedWeightsVanishes)
{
    const Algebra alg(Context{Family::SchurJ, 1, 1});
    const auto labels = enumerate(alg.labels());
    for (const auto& a : labels)
        for (const auto& b : labels)
            if (a.co() != b.ro())
                EXPECT_TRUE(alg.mul(alg.std(a), alg.std(b)).is_zero());
}
