#include <set>

#include <gtest/gtest.h>

#include "qschur/checks.hpp"
#include "qschur/matrix.hpp"

using namespace qschur;

namespace {

// All theta-symmetric N x N matrices with nonnegative entries and total D,
// built cell pair by cell pair without the library enumerator.
std::set<ThetaMatrix> brute_xi(int n, int d, bool iota)
{
    const int N = 2 * n + 1, c = n + 1, D = 2 * d + 1;
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const int mi = N + 1 - i, mj = N + 1 - j;
            if (std::pair(i, j) <= std::pair(mi, mj))
                cells.emplace_back(i, j);
        }
    std::set<ThetaMatrix> out;
    ThetaMatrix a(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == cells.size()) {
            if (left == 0)
                out.insert(a);
            return;
        }
        const auto [i, j] = cells[k];
        const int weight = (i == c && j == c) ? 1 : 2;
        for (int x = 0; x * weight <= left; ++x) {
            if (iota && (i == c || j == c) && x != (i == j ? 1 : 0))
                continue;
            a.set(i, j, x);
            rec(k + 1, left - x * weight);
        }
        a.set(i, j, 0);
    };
    rec(0, D);
    return out;
}

}  // namespace

TEST(IndexSets, CountsAgainstClosedFormulas)
{
    const Report r = checks::counting(3, 4);
    EXPECT_TRUE(r.passed()) << r.str();
}

TEST(IndexSets, EnumerationMatchesBruteForce)
{
    for (int n : {1, 2})
        for (int d = 1; d <= 3; ++d)
            for (bool iota : {false, true}) {
                const SetTag tag{iota ? SetKind::IXi : SetKind::Xi, n, d};
                const auto listed = enumerate(tag);
                const std::set<ThetaMatrix> got(listed.begin(), listed.end());
                EXPECT_EQ(got.size(), listed.size()) << "duplicates";
                EXPECT_EQ(got, brute_xi(n, d, iota)) << "n=" << n << " d=" << d << " iota=" << iota;
                EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
            }
}

TEST(IndexSets, SmallestCase)
{
    const auto xi = enumerate({SetKind::Xi, 1, 1});
    ASSERT_EQ(xi.size(), 5u);
    EXPECT_EQ(enumerate({SetKind::IXi, 1, 1}).size(), 2u);
    EXPECT_EQ(enumerate_words({SetKind::Pi, 1, 2}).size(), 9u);
    EXPECT_EQ(enumerate_words({SetKind::IPi, 2, 3}).size(), 64u);
}

TEST(IndexSets, IotaWordsAvoidTheCenter)
{
    for (const Word& w : enumerate_words({SetKind::IPi, 2, 3}))
        for (int r : w)
            EXPECT_NE(r, 3);
}

TEST(IndexSets, WordsAndPiMatricesRoundTrip)
{
    for (int n : {1, 2})
        for (const Word& w : enumerate_words({SetKind::Pi, n, 3})) {
            const RectMatrix b = pi_of_word(n, w);
            EXPECT_EQ(word_of_pi(n, b), w);
            int total = 0;
            for (int x : word_weight(n, w))
                total += x;
            EXPECT_EQ(total, 2 * 3 + 1);
        }
}

TEST(IndexSets, OrbitDimensionFormula)
{
    for (int d = 1; d <= 3; ++d)
        for (const auto& a : enumerate({SetKind::Xi, 2, d}))
            EXPECT_EQ(d_lower(a), d_lower_closed(a)) << a.str();
}

TEST(IndexSets, DownSetIsOrdered)
{
    const SetTag tag{SetKind::Xi, 1, 3};
    for (const auto& a : enumerate(tag)) {
        const auto below = down_set(a, tag);
        EXPECT_NE(std::find(below.begin(), below.end(), a), below.end());
        for (const auto& b : below) {
            EXPECT_TRUE(sqsubseteq(b, a));
            EXPECT_EQ(b.ro(), a.ro());
            EXPECT_EQ(b.co(), a.co());
            if (b != a)
                EXPECT_LT(order_height(b), order_height(a));
        }
    }
}

TEST(IndexSets, ThetaSymmetry)
{
    EXPECT_TRUE(is_theta_symmetric(1, {{1, 0, 2}, {0, 3, 0}, {2, 0, 1}}));
    EXPECT_FALSE(is_theta_symmetric(1, {{1, 0, 2}, {0, 3, 0}, {1, 0, 1}}));
    EXPECT_THROW(ThetaMatrix::from_rows(1, {{1, 0, 2}, {0, 3, 0}, {1, 0, 1}}), std::invalid_argument);
}
