#include "qschur/stable.hpp"

#include <algorithm>
#include <set>

namespace qschur {

// ---- weights --------------------------------------------------------------

namespace {

Weight move_alpha(const Weight& lambda, int i, int sign)
{
    const int n = static_cast<int>(lambda.size()) / 2;
    if (i < 1 || i > n)
        throw std::invalid_argument("root index out of range");
    ThetaMatrix m = ThetaMatrix::diag(lambda);
    m.add_theta(i, i, -sign);
    m.add_theta(i + 1, i + 1, sign);
    return m.ro();
}

}  // namespace

Weight minus_alpha(const Weight& lambda, int i) { return move_alpha(lambda, i, +1); }
Weight plus_alpha(const Weight& lambda, int i) { return move_alpha(lambda, i, -1); }

// ---- left multiplication ----------------------------------------------------

Element left_e(const Algebra& alg, int i, const Element& x, int r)
{
    Element out = alg.zero();
    for (const auto& [a, c] : x.terms()) {
        const Element g = alg.e_pow_at(i, r, a.ro());
        if (!g.is_zero())
            out += alg.mul_gen(g.terms().begin()->first, alg.std(a)).scaled(c);
    }
    return out;
}

Element left_f(const Algebra& alg, int i, const Element& x, int r)
{
    Element out = alg.zero();
    for (const auto& [a, c] : x.terms()) {
        const Element g = alg.f_pow_at(i, r, a.ro());
        if (!g.is_zero())
            out += alg.mul_gen(g.terms().begin()->first, alg.std(a)).scaled(c);
    }
    return out;
}

Element left_t(const Algebra& alg, const Element& x)
{
    Element out = alg.zero();
    for (const auto& [a, c] : x.terms())
        out += alg.mul(alg.t_at(a.ro()), alg.std(a)).scaled(c);
    return out;
}

// ---- t-calculus -------------------------------------------------------------

namespace {

void require_i_family(const Algebra& alg)
{
    const Family f = alg.context().family;
    if (f != Family::SchurI && f != Family::Ki)
        throw std::invalid_argument("the t-calculus lives in the i-families");
}

}  // namespace

Element t_mul(const Algebra& alg, const Element& x)
{
    require_i_family(alg);
    const int n = alg.context().n, N = 2 * n + 1;
    Element out = alg.zero();
    for (const auto& [a, c] : x.terms()) {
        int upper = 0;  // sum_{l <= i} a_{n+2,l}
        int lower = 0;  // sum_{l < i} a_{n,l}
        for (int i = 1; i <= N; ++i) {
            upper += a(n + 2, i);
            ThetaMatrix z = a;
            z.add_theta(n, i, -1);
            z.add_theta(n + 2, i, 1);
            if (alg.is_label(z)) {
                const int e = upper - lower - (i > n + 1 ? 1 : 0);
                out.add(z, c * gauss_bracket(a(n + 2, i) + 1).bar().shifted(e));
            }
            lower += a(n, i);
        }
    }
    return out;
}

Element t_mul_composed(const Algebra& alg, const Element& x)
{
    require_i_family(alg);
    const int n = alg.context().n;
    Element out = alg.zero();
    for (const auto& [a, c] : x.terms()) {
        const Weight lambda = a.ro();
        ThetaMatrix lo = ThetaMatrix::diag(lambda);
        lo.add_theta(n, n, -1);
        lo.add_theta(n + 1, n, 1);
        ThetaMatrix up = ThetaMatrix::diag(lambda);
        up.add_theta(n, n, -1);
        up.add_theta(n, n + 1, 1);
        Element y = alg.std(a);
        if (member(lo, alg.ambient()) && member(up, alg.ambient()))
            y = alg.mul_gen(up, alg.mul_gen(lo, y));
        else
            y = alg.zero();
        const auto ln = static_cast<std::size_t>(n - 1), lc = static_cast<std::size_t>(n);
        y -= alg.std(a).scaled(qint(lambda[ln] - lambda[lc]));
        out += y.scaled(c);
    }
    return out;
}

Element t_power(const Algebra& alg, int k, const Weight& lambda)
{
    if (k < 0)
        throw std::invalid_argument("negative power of t");
    Element x = alg.idempotent(lambda);
    for (int j = 0; j < k; ++j)
        x = t_mul(alg, x);
    return x;
}

// ---- maps -------------------------------------------------------------------

Element phi(const Algebra& target, const Element& x)
{
    Element out = target.zero();
    for (const auto& [a, c] : x.terms())
        if (a.n() == target.context().n && target.is_label(a))
            out.add(a, c);
    return out;
}

bool in_ideal_J(const Element& x)
{
    for (const auto& [a, c] : x.terms())
        if (a(a.center(), a.center()) >= 0)
            return false;
    return true;
}

Element quotient_map(const Algebra& target, const Element& x)
{
    if (x.context().family != Family::Kj)
        throw ContextMismatch("the quotient by J starts from kj");
    const Family f = target.context().family;
    if (f != Family::KjGreater && f != Family::Ki)
        throw ContextMismatch("the quotient by J lands in kj-greater or ki");
    Element out = target.zero();
    for (const auto& [a, c] : x.terms()) {
        if (a(a.center(), a.center()) < 0)
            continue;
        if (!target.is_label(a))
            throw BadLabel(a.str() + " survives the quotient but is not a label of " +
                           family_name(f));
        out.add(a, c);
    }
    return out;
}

Element chi_map(const Algebra& ki, const Element& x)
{
    for (const auto& [a, c] : x.terms()) {
        const auto mid = static_cast<std::size_t>(a.n());
        if (a.ro()[mid] != 1 || a.co()[mid] != 1)
            throw WeightMismatch(a.str() + " does not have center weight 1");
    }
    return quotient_map(ki, x);
}

// ---- stabilization ----------------------------------------------------------

ThetaMatrix shifted(const ThetaMatrix& a, Shift s, int p)
{
    ThetaMatrix out = a;
    const int n = a.n();
    for (int i = 1; i <= n; ++i)
        out.add_theta(i, i, s == Shift::Full ? 2 * p : p);
    if (s == Shift::Full)
        out.set(n + 1, n + 1, a(n + 1, n + 1) + 2 * p);
    return out;
}

int shift_exponent(Shift s, int p)
{
    return s == Shift::Full ? -2 * p : -p;
}

Laurent FittedConstant::value(int e) const
{
    Laurent acc;
    for (const auto& [k, c] : numer)
        acc += c.shifted(k * e);
    return acc.divide_exact(denom);
}

namespace {

using Poly = std::vector<Laurent>;  // coefficients in increasing powers of w

Poly poly_mul_linear(const Poly& p, const Laurent& root)  // p * (w - root)
{
    Poly out(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k + 1] += p[k];
        out[k] -= p[k] * root;
    }
    return out;
}

int mass(const ThetaMatrix& a)
{
    int m = 0;
    for (int i = 1; i <= a.N(); ++i)
        for (int j = 1; j <= a.N(); ++j)
            if (i != j)
                m += a(i, j);
    return m / 2;
}

}  // namespace

StabilizationFit stabilization_fit(const std::vector<ThetaMatrix>& factors, Shift shift,
                                   const Algebra& stable_alg, int degree_bound, int extra_samples)
{
    if (factors.empty())
        throw std::invalid_argument("empty product");
    const int n = factors.front().n();
    const long long total = factors.front().total();
    int off = 0, pmin = 0;
    for (const auto& a : factors) {
        if (a.n() != n || a.total() != total)
            throw std::invalid_argument("factors must share rank and total sum");
        if (!stable_alg.is_label(a))
            throw BadLabel(a.str() + " is not a label of " + family_name(stable_alg.context().family));
        off += mass(a);
        for (int i = 1; i <= a.N(); ++i) {
            int need = 0;
            if (i == n + 1)
                need = shift == Shift::Full ? (2 - a(i, i)) / 2 : 0;
            else
                need = shift == Shift::Full ? (1 - a(i, i)) / 2 : -a(i, i);
            pmin = std::max(pmin, need);
        }
    }
    if (shift == Shift::Breve)
        for (const auto& a : factors)
            if (a(n + 1, n + 1) < 1)
                throw BadLabel("the breve shift needs a positive center");

    StabilizationFit fit;
    fit.shift = shift;
    fit.degree_bound = degree_bound >= 0 ? degree_bound : 2 * off;
    int p0 = pmin + off + 2;
    p0 += p0 % 2;
    const int B = fit.degree_bound;
    const int K = 2 * B + 1;
    const int samples = K + std::max(extra_samples, 0);
    for (int j = 0; j < samples; ++j)
        fit.samples.push_back(p0 + 2 * j);

    // sampled products, keyed by unshifted label
    std::map<ThetaMatrix, std::vector<Laurent>> table;
    for (std::size_t j = 0; j < fit.samples.size(); ++j) {
        const int p = fit.samples[j];
        const long long tot = total + (shift == Shift::Full ? 2LL * p * (2 * n + 1) : 2LL * p * n);
        Algebra fin(Context{Family::SchurJ, n, static_cast<int>((tot - 1) / 2)});
        Element x = fin.std(shifted(factors.back(), shift, p));
        for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it)
            x = fin.mul(fin.std(shifted(*it, shift, p)), x);
        for (const auto& [z, c] : x.terms()) {
            auto& row = table[shifted(z, shift, -p)];
            row.resize(fit.samples.size());
            row[j] = c;
        }
    }

    // Lagrange basis over the first K nodes, scaled by the Vandermonde
    // product; w^B * G(w) is fitted as a polynomial of degree < K
    std::vector<Laurent> w;
    for (int j = 0; j < K; ++j)
        w.push_back(Laurent::monomial(shift_exponent(shift, fit.samples[static_cast<std::size_t>(j)])));
    Laurent vdm(1);
    for (int a = 0; a < K; ++a)
        for (int b = a + 1; b < K; ++b)
            vdm *= w[static_cast<std::size_t>(a)] - w[static_cast<std::size_t>(b)];
    std::vector<Poly> basis;
    for (int j = 0; j < K; ++j) {
        Laurent scale(j % 2 == 0 ? 1 : -1);
        Poly p{Laurent(1)};
        for (int a = 0; a < K; ++a) {
            if (a == j)
                continue;
            p = poly_mul_linear(p, w[static_cast<std::size_t>(a)]);
            for (int b = a + 1; b < K; ++b)
                if (b != j)
                    scale *= w[static_cast<std::size_t>(a)] - w[static_cast<std::size_t>(b)];
        }
        for (auto& c : p)
            c *= scale;
        basis.push_back(std::move(p));
    }

    fit.limit = stable_alg.zero();
    for (auto& [z, row] : table) {
        FittedConstant fc;
        fc.z = z;
        fc.samples = row;
        fc.denom = vdm;
        Poly acc(static_cast<std::size_t>(K));
        for (int j = 0; j < K; ++j)
            for (int k = 0; k < K; ++k)
                acc[static_cast<std::size_t>(k)] +=
                    row[static_cast<std::size_t>(j)].shifted(B * shift_exponent(shift, fit.samples[static_cast<std::size_t>(j)])) *
                    basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        for (int k = 0; k < K; ++k)
            if (!acc[static_cast<std::size_t>(k)].is_zero())
                fc.numer.emplace(k - B, acc[static_cast<std::size_t>(k)]);
        for (std::size_t j = static_cast<std::size_t>(K); j < row.size(); ++j) {
            Laurent got;
            try {
                got = fc.value(shift_exponent(shift, fit.samples[j]));
            } catch (const InexactDivision&) {
                throw FitUnstable("coefficient of " + z.str() + " is not reproduced at p = " +
                                  std::to_string(fit.samples[j]));
            }
            if (got != row[j])
                throw FitUnstable("coefficient of " + z.str() + " is not reproduced at p = " +
                                  std::to_string(fit.samples[j]));
        }
        Laurent lim;
        try {
            lim = fc.at_w1();
        } catch (const InexactDivision&) {
            throw FitUnstable("coefficient of " + z.str() + " has a non-Laurent value at w = 1");
        }
        if (!lim.is_zero()) {
            if (!stable_alg.is_label(z))
                throw FitUnstable(z.str() + " survives at w = 1 but is not a label");
            fit.limit.add(z, lim);
        }
        fit.constants.push_back(std::move(fc));
    }
    return fit;
}

}  // namespace qschur
