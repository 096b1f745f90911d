#include <gtest/gtest.h>

#include "qschur/checks.hpp"
#include "qschur/tensor.hpp"

using namespace qschur;

namespace {

const Laurent v2 = Laurent::monomial(2);

// e_r T_j written out case by case from the swap rules
TensorElement expected_hecke(int n, const Word& r, int j)
{
    const int d = static_cast<int>(r.size());
    const int N = 2 * n + 1;
    TensorElement out;
    Word s = r;
    int lhs, rhs;
    if (j < d) {
        std::swap(s[j - 1], s[j]);
        lhs = r[j - 1];
        rhs = r[j];
    } else {
        s[d - 1] = N + 1 - r[d - 1];
        lhs = r[d - 1];
        rhs = n + 1;
    }
    if (lhs < rhs) {
        out.add(s, 1);
    } else if (lhs == rhs) {
        out.add(r, v2);
    } else {
        out.add(r, v2 - Laurent(1));
        out.add(s, v2);
    }
    return out;
}

TensorElement act_word(const TensorSpace& sp, TensorElement x, const std::vector<int>& js)
{
    return hecke_word(sp, x, js);
}

}  // namespace

TEST(Tensor, HeckeSmallestCases)
{
    const TensorSpace sp{1, 1, false};
    EXPECT_EQ(hecke_act(sp, TensorElement::basis({1}), 1), TensorElement::basis({3}));
    EXPECT_EQ(hecke_act(sp, TensorElement::basis({2}), 1), TensorElement::basis({2}).scaled(v2));
    TensorElement want;
    want.add({3}, v2 - Laurent(1));
    want.add({1}, v2);
    EXPECT_EQ(hecke_act(sp, TensorElement::basis({3}), 1), want);
}

TEST(Tensor, HeckeFormulasOnAllWords)
{
    for (int n : {1, 2})
        for (int d : {1, 2, 3}) {
            const TensorSpace sp{n, d, false};
            for (const Word& w : sp.words())
                for (int j = 1; j <= d; ++j)
                    EXPECT_EQ(hecke_act(sp, TensorElement::basis(w), j), expected_hecke(n, w, j));
        }
}

TEST(Tensor, HeckeRelations)
{
    const TensorSpace sp{1, 3, false};
    for (const Word& w : sp.words()) {
        const TensorElement x = TensorElement::basis(w);
        for (int j = 1; j <= 3; ++j) {
            // (T - v^2)(T + 1) = T^2 - (v^2 - 1) T - v^2
            TensorElement q = act_word(sp, x, {j, j});
            q -= act_word(sp, x, {j}).scaled(v2 - Laurent(1));
            q -= x.scaled(v2);
            EXPECT_TRUE(q.is_zero());
        }
        EXPECT_EQ(act_word(sp, x, {1, 2, 1}), act_word(sp, x, {2, 1, 2}));
        EXPECT_EQ(act_word(sp, x, {3, 2, 3, 2}), act_word(sp, x, {2, 3, 2, 3}));
        EXPECT_EQ(act_word(sp, x, {1, 3}), act_word(sp, x, {3, 1}));
    }
}

TEST(Tensor, OmegaRoundTrip)
{
    const TensorSpace sp{2, 2, false};
    for (const Word& w : sp.words()) {
        const TensorElement x = TensorElement::basis(w, Flavor::V);
        EXPECT_EQ(omega_inverse(sp, omega(sp, x)), x);
    }
}

TEST(Tensor, GeneratorsCommuteWithHecke)
{
    const TensorSpace sp{2, 2, false};
    for (const Word& w : sp.words()) {
        const TensorElement x = TensorElement::basis(w);
        for (int j = 1; j <= sp.d; ++j)
            for (Gen g : {Gen::E, Gen::F})
                for (int i = 1; i <= sp.n; ++i)
                    EXPECT_EQ(schur_gen_act(sp, g, i, hecke_act(sp, x, j)),
                              hecke_act(sp, schur_gen_act(sp, g, i, x), j))
                        << gen_name(g, i) << " T_" << j;
    }
}

TEST(Tensor, AlgebraElementsActMultiplicatively)
{
    const Algebra alg(Context{Family::SchurJ, 1, 2});
    const TensorSpace sp{1, 2, false};
    const auto labels = enumerate(alg.labels());
    for (const Word& w : sp.words())
        for (std::size_t a = 0; a < labels.size(); a += 3)
            for (std::size_t b = 0; b < labels.size(); b += 4) {
                const Element x = alg.std(labels[a]), y = alg.std(labels[b]);
                const TensorElement t = TensorElement::basis(w);
                EXPECT_EQ(schur_elem_act(alg, alg.mul(x, y), t),
                          schur_elem_act(alg, x, schur_elem_act(alg, y, t)));
            }
}

TEST(Tensor, DualitySmall)
{
    const std::vector<mpq_class> points{mpq_class(7, 5), mpq_class(11, 3)};
    for (bool iota : {false, true}) {
        const Report r = checks::duality({1, 2, iota}, points);
        EXPECT_TRUE(r.passed()) << r.str();
    }
}

TEST(Tensor, TypeCHeckeQuadratic)
{
    for (int N : {2, 3}) {
        for (const Word& w : words_typec(N, 2)) {
            const TensorElement x = TensorElement::basis(w);
            for (int j = 1; j <= 2; ++j) {
                TensorElement q = hecke_act_typec(N, hecke_act_typec(N, x, j), j);
                q -= hecke_act_typec(N, x, j).scaled(v2 - Laurent(1));
                q -= x.scaled(v2);
                EXPECT_TRUE(q.is_zero()) << "N=" << N;
            }
        }
    }
}
