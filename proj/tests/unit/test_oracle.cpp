#include <set>

#include <gtest/gtest.h>

#include "qschur/checks.hpp"
#include "qschur/oracle.hpp"

using namespace qschur;
using namespace qschur::oracle;

namespace {

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

}  // namespace

TEST(Oracle, FlagCountsOrthogonal)
{
    for (int q : {3, 5}) {
        Geometry g(FieldConfig{q, 3, Form::Symmetric});
        // isotropic lines of a nondegenerate conic: q + 1
        EXPECT_EQ(enumerate_flags(g, 3, FlagShape::Complete).size(), static_cast<std::size_t>(q + 1));
        EXPECT_EQ(enumerate_flags(g, 3, FlagShape::Any).size(), static_cast<std::size_t>(q + 2));
    }
    Geometry g5(FieldConfig{3, 5, Form::Symmetric});
    // isotropic lines and planes in dimension 5: (q^4 - 1)/(q - 1) each
    const long long lines = (ipow(3, 4) - 1) / 2;
    EXPECT_EQ(static_cast<long long>(enumerate_flags(g5, 5, FlagShape::Complete).size()), lines * (3 + 1));
    EXPECT_EQ(static_cast<long long>(enumerate_flags(g5, 3, FlagShape::Any).size()), 1 + 2 * lines);
}

TEST(Oracle, FlagCountsSymplectic)
{
    for (int q : {3, 5}) {
        Geometry g(FieldConfig{q, 2, Form::Skew});
        EXPECT_EQ(enumerate_flags(g, 2, FlagShape::Complete).size(), static_cast<std::size_t>(q + 1));
        Geometry g4(FieldConfig{q, 4, Form::Skew});
        // Lagrangian planes of a symplectic 4-space: (q^2 + 1)(q + 1)
        EXPECT_EQ(static_cast<long long>(enumerate_flags(g4, 2, FlagShape::Any).size()), (q * q + 1) * (q + 1));
    }
}

TEST(Oracle, RelativePositionOfAFlagWithItselfIsDiagonal)
{
    Geometry g(FieldConfig{3, 5, Form::Symmetric});
    const auto flags = enumerate_flags(g, 3, FlagShape::Any);
    for (std::size_t k = 0; k < flags.size(); k += 7) {
        const ThetaMatrix a = as_theta(relative_position(g, flags[k], flags[k]));
        EXPECT_TRUE(a.is_diagonal());
        EXPECT_EQ(a.ro(), flag_weight(g, flags[k]));
    }
}

TEST(Oracle, OrbitsAreLabelledByXi)
{
    Geometry g(FieldConfig{3, 5, Form::Symmetric});
    const auto flags = enumerate_flags(g, 3, FlagShape::Any);
    std::set<ThetaMatrix> seen;
    for (const auto& f : flags)
        for (const auto& h : flags)
            seen.insert(as_theta(relative_position(g, f, h)));
    const auto xi = enumerate({SetKind::Xi, 1, 2});
    EXPECT_EQ(seen, std::set<ThetaMatrix>(xi.begin(), xi.end()));
}

TEST(Oracle, InterpolationRecoversPolynomial)
{
    // 1 + 2 q + q^3
    std::vector<std::pair<long, long long>> samples;
    for (long q : {3L, 5L, 7L, 11L, 13L})
        samples.emplace_back(q, 1 + 2 * q + q * q * q);
    EXPECT_EQ(interpolate_in_v2(samples, 3), Laurent::from_terms({{0, 1}, {2, 2}, {6, 1}}));
    samples.back().second += 1;
    EXPECT_THROW(interpolate_in_v2(samples, 3), InterpolationInconsistent);
}

TEST(Oracle, StructureConstantTables)
{
    for (long q : {3L, 5L}) {
        const Report r = checks::oracle_structure_constants(Family::SchurJ, 1, 1, q);
        EXPECT_TRUE(r.passed()) << r.str();
    }
    const Report r2 = checks::oracle_structure_constants(Family::SchurJ, 1, 2, 3);
    EXPECT_TRUE(r2.passed()) << r2.str();
}

TEST(Oracle, ModuleActions)
{
    const Report b = checks::oracle_module_type_b(1, 1, 3);
    EXPECT_TRUE(b.passed()) << b.str();
    const Report c = checks::oracle_module_type_c(1, 1, 3);
    EXPECT_TRUE(c.passed()) << c.str();
}
