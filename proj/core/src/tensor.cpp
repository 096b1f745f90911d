#include "qschur/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qschur {

// ---- spaces and elements ----------------------------------------------------

std::string flavor_name(Flavor f)
{
    switch (f) {
    case Flavor::E: return "e";
    case Flavor::Tilde: return "tilde";
    case Flavor::V: return "v";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s)
{
    if (s == "e")
        return Flavor::E;
    if (s == "tilde")
        return Flavor::Tilde;
    if (s == "v")
        return Flavor::V;
    throw std::invalid_argument("unknown flavor '" + s + "'");
}

bool TensorSpace::contains(const Word& w) const
{
    if (static_cast<int>(w.size()) != d)
        return false;
    for (int r : w)
        if (r < 1 || r > N() || (iota && r == n + 1))
            return false;
    return true;
}

std::vector<Word> TensorSpace::words() const
{
    return enumerate_words(SetTag{iota ? SetKind::IPi : SetKind::Pi, n, d});
}

TensorElement TensorElement::basis(const Word& w, Flavor f)
{
    TensorElement x;
    x.flavor = f;
    x.terms.emplace(w, Laurent(1));
    return x;
}

void TensorElement::add(const Word& w, const Laurent& c)
{
    if (c.is_zero())
        return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    if (o.flavor != flavor && !o.is_zero() && !is_zero())
        throw std::invalid_argument("tensor flavors differ");
    if (is_zero())
        flavor = o.flavor;
    for (const auto& [w, c] : o.terms)
        add(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    return *this += o.scaled(Laurent(-1));
}

TensorElement TensorElement::scaled(const Laurent& c) const
{
    TensorElement out;
    out.flavor = flavor;
    if (c.is_zero())
        return out;
    for (const auto& [w, a] : terms)
        out.terms.emplace(w, a * c);
    return out;
}

std::string TensorElement::str() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    const char* sym = flavor == Flavor::E ? "e" : flavor == Flavor::Tilde ? "e~" : "v";
    for (const auto& [w, c] : terms) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")" << sym << "_";
        for (int r : w)
            os << r;
    }
    return os.str();
}

namespace {

TensorElement empty_like(const TensorElement& x)
{
    TensorElement out;
    out.flavor = x.flavor;
    return out;
}

int count(const Word& w, int a)
{
    int c = 0;
    for (int r : w)
        c += r == a ? 1 : 0;
    return c;
}

const Laurent& v2() { static const Laurent x = Laurent::monomial(2); return x; }
const Laurent& v2m1() { static const Laurent x = Laurent::monomial(2) - Laurent(1); return x; }
const Laurent& v1() { static const Laurent x = Laurent::monomial(1); return x; }

// one Hecke step given the comparison of the two letters being exchanged
void hecke_step(TensorElement& out, const Word& r, const Word& s, int cmp, const Laurent& c, bool geometric)
{
    const Laurent& swap = geometric ? v2() : v1();
    if (cmp < 0) {
        out.add(s, geometric ? c : c * v1());
    } else if (cmp == 0) {
        out.add(r, c * v2());
    } else {
        out.add(r, c * v2m1());
        out.add(s, c * swap);
    }
}

}  // namespace

// ---- Hecke action -------------------------------------------------------------

TensorElement hecke_act(const TensorSpace& sp, const TensorElement& x, int j)
{
    if (j < 1 || j > sp.d)
        throw std::out_of_range("Hecke generator index out of range");
    const bool geometric = x.flavor == Flavor::E;
    TensorElement out = empty_like(x);
    const auto J = static_cast<std::size_t>(j - 1);
    for (const auto& [r, c] : x.terms) {
        Word s = r;
        int cmp;
        if (j < sp.d) {
            std::swap(s[J], s[J + 1]);
            cmp = r[J] < r[J + 1] ? -1 : r[J] == r[J + 1] ? 0 : 1;
        } else {
            s[J] = sp.N() + 1 - r[J];
            cmp = r[J] < sp.n + 1 ? -1 : r[J] == sp.n + 1 ? 0 : 1;
        }
        hecke_step(out, r, s, cmp, c, geometric);
    }
    return out;
}

TensorElement hecke_word(const TensorSpace& sp, const TensorElement& x, const std::vector<int>& js)
{
    TensorElement y = x;
    for (int j : js)
        y = hecke_act(sp, y, j);
    return y;
}

int tilde_exponent(int n, const Word& r, TildeRule rule)
{
    const int d = static_cast<int>(r.size());
    const int N = 2 * n + 1;
    int e = 0;
    for (int c = 0; c < d; ++c)
        for (int c2 = c + 1; c2 < d; ++c2)
            e += r[static_cast<std::size_t>(c)] < r[static_cast<std::size_t>(c2)] ? 1 : 0;
    if (rule == TildeRule::Printed)
        return e + (d > 0 && r.back() < n + 1 ? 1 : 0);
    for (int c = 0; c < d; ++c)
        for (int c2 = c; c2 < d; ++c2)
            e += r[static_cast<std::size_t>(c)] + r[static_cast<std::size_t>(c2)] < N + 1 ? 1 : 0;
    return e;
}

TensorElement to_flavor(const TensorSpace& sp, const TensorElement& x, Flavor target, TildeRule rule)
{
    const bool from_e = x.flavor == Flavor::E;
    const bool to_e = target == Flavor::E;
    TensorElement out;
    out.flavor = target;
    for (const auto& [w, c] : x.terms) {
        const int phi = tilde_exponent(sp.n, w, rule);
        // sum c_r e_r = sum c_r v^-phi e~_r
        const int shift = from_e == to_e ? 0 : from_e ? -phi : phi;
        out.terms.emplace(w, c.shifted(shift));
    }
    return out;
}

TensorElement omega(const TensorSpace& sp, const TensorElement& x, TildeRule rule)
{
    if (x.flavor != Flavor::V)
        throw std::invalid_argument("omega expects the v-basis");
    return to_flavor(sp, x, Flavor::E, rule);
}

TensorElement omega_inverse(const TensorSpace& sp, const TensorElement& x, TildeRule rule)
{
    if (x.flavor != Flavor::E)
        throw std::invalid_argument("omega_inverse expects the e-basis");
    return to_flavor(sp, x, Flavor::V, rule);
}

// ---- Schur algebra action ---------------------------------------------------

std::string gen_name(Gen g, int i)
{
    switch (g) {
    case Gen::E: return "e_" + std::to_string(i);
    case Gen::F: return "f_" + std::to_string(i);
    case Gen::DPlus: return "d_" + std::to_string(i);
    case Gen::DMinus: return "d_" + std::to_string(i) + "^-1";
    case Gen::T: return "t";
    }
    return "?";
}

namespace {

// t = f_n e_n - [[lambda_n - lambda_{n+1}]] on each weight space
template <class Act>
TensorElement t_from_twins(const TensorSpace& sp, const TensorElement& x, Act act)
{
    TensorElement out = act(Gen::F, sp.n, act(Gen::E, sp.n, x));
    for (const auto& [w, c] : x.terms) {
        const Weight lam = word_weight(sp.n, w);
        const Laurent k = qint(lam[static_cast<std::size_t>(sp.n - 1)] - lam[static_cast<std::size_t>(sp.n)]);
        out.add(w, -(c * k));
    }
    return out;
}

}  // namespace

TensorElement schur_gen_act(const TensorSpace& sp, Gen g, int i, const TensorElement& x)
{
    if (x.flavor != Flavor::E)
        throw std::invalid_argument("the Schur action is given on the e-basis");
    const int n = sp.n, N = sp.N(), d = sp.d, D = 2 * d + 1;
    if (g == Gen::T)
        return t_from_twins(sp, x, [&](Gen h, int k, const TensorElement& y) { return schur_gen_act(sp, h, k, y); });
    if ((g == Gen::E || g == Gen::F) && (i < 1 || i > n))
        throw std::out_of_range("generator index out of range");
    if ((g == Gen::DPlus || g == Gen::DMinus) && (i < 1 || i > n + 1))
        throw std::out_of_range("generator index out of range");
    TensorElement out = empty_like(x);
    for (const auto& [w, c] : x.terms) {
        const Word r = extend_word(n, w);
        auto at = [&](int p) { return r[static_cast<std::size_t>(p - 1)]; };
        switch (g) {
        case Gen::DPlus:
        case Gen::DMinus: {
            const int k = count(r, i);
            out.add(w, c.shifted(g == Gen::DPlus ? -k : k));
            break;
        }
        case Gen::E: {
            const int base = -count(r, i + 1);
            int seen = 0;  // #{j < p : r_j = i+1}
            for (int p = 1; p <= D; ++p) {
                if (at(p) == i) {
                    Word s = r;
                    s[static_cast<std::size_t>(p - 1)] = i + 1;
                    s[static_cast<std::size_t>(D - p)] = N - i;
                    out.add(Word(s.begin(), s.begin() + d), c.shifted(base + 2 * seen));
                }
                seen += at(p) == i + 1 ? 1 : 0;
            }
            break;
        }
        case Gen::F: {
            const int base = -count(r, i);
            int later = count(r, i);  // #{j > p : r_j = i}
            for (int p = 1; p <= D; ++p) {
                later -= at(p) == i ? 1 : 0;
                // the center letter n+1 is fixed by the mirror condition
                if (at(p) == i + 1 && p != d + 1) {
                    Word s = r;
                    s[static_cast<std::size_t>(p - 1)] = i;
                    s[static_cast<std::size_t>(D - p)] = N + 1 - i;
                    out.add(Word(s.begin(), s.begin() + d), c.shifted(base + 2 * later));
                }
            }
            break;
        }
        case Gen::T:
            break;
        }
    }
    return out;
}

namespace {

TensorElement project_weight(int n, const TensorElement& x, const Weight& lam)
{
    TensorElement out = empty_like(x);
    for (const auto& [w, c] : x.terms)
        if (word_weight(n, w) == lam)
            out.terms.emplace(w, c);
    return out;
}

TensorElement factor_act(const TensorSpace& sp, const ThetaMatrix& g, const TensorElement& x)
{
    TensorElement y = project_weight(sp.n, x, g.co());
    const GenShape s = classify(g);
    if (s.kind == GenShape::Diagonal)
        return y;
    if (s.kind == GenShape::Other)
        throw std::logic_error("monomial factor of non-generator shape");
    const Gen gen = s.kind == GenShape::Lower ? Gen::E : Gen::F;
    for (int k = 0; k < s.R; ++k)
        y = schur_gen_act(sp, gen, s.h, y);
    const Laurent fact = qfactorial(s.R);
    TensorElement out = empty_like(y);
    for (const auto& [w, c] : y.terms)
        out.terms.emplace(w, c.divide_exact(fact));
    return out;
}

}  // namespace

TensorElement schur_elem_act(const Algebra& alg, const Element& s, const TensorElement& x)
{
    const Context& ctx = alg.context();
    if (!is_finite_family(ctx.family))
        throw ContextMismatch("the tensor action needs a finite Schur algebra");
    if (s.context() != ctx)
        throw ContextMismatch("element and algebra contexts differ");
    const TensorSpace sp{ctx.n, ctx.d, false};
    TensorElement out = empty_like(x);
    for (const auto& [a, c] : s.terms()) {
        const Element expansion = alg.std_in_monomials(a);
        for (const auto& [b, nb] : expansion.terms()) {
            const auto factors = alg.monomial_factors(b);
            TensorElement y = project_weight(sp.n, x, b.co());
            for (auto it = factors.rbegin(); it != factors.rend() && !y.is_zero(); ++it)
                y = factor_act(sp, *it, y);
            out += y.scaled(c * nb);
        }
    }
    return out;
}

// ---- tensor space of the natural representation --------------------------------

TensorElement gl_act(const TensorSpace& sp, GlGen g, int i, const TensorElement& x)
{
    const int N = sp.N();
    if (g == GlGen::E || g == GlGen::F) {
        if (i < 1 || i >= N)
            throw std::out_of_range("gl generator index out of range");
    } else if (i < 1 || i > N) {
        throw std::out_of_range("gl generator index out of range");
    }
    TensorElement out = empty_like(x);
    for (const auto& [w, c] : x.terms) {
        const int d = static_cast<int>(w.size());
        switch (g) {
        case GlGen::K:
        case GlGen::Kinv: {
            const int k = count(w, i);
            out.add(w, c.shifted(g == GlGen::K ? k : -k));
            break;
        }
        case GlGen::E: {
            // E acting at p, K_i K_{i+1}^{-1} on the later factors
            for (int p = 0; p < d; ++p) {
                if (w[static_cast<std::size_t>(p)] != i + 1)
                    continue;
                int e = 0;
                for (int q = p + 1; q < d; ++q)
                    e += (w[static_cast<std::size_t>(q)] == i) - (w[static_cast<std::size_t>(q)] == i + 1);
                Word s = w;
                s[static_cast<std::size_t>(p)] = i;
                out.add(s, c.shifted(e));
            }
            break;
        }
        case GlGen::F: {
            // F acting at p, K_i^{-1} K_{i+1} on the earlier factors
            for (int p = 0; p < d; ++p) {
                if (w[static_cast<std::size_t>(p)] != i)
                    continue;
                int e = 0;
                for (int q = 0; q < p; ++q)
                    e += (w[static_cast<std::size_t>(q)] == i + 1) - (w[static_cast<std::size_t>(q)] == i);
                Word s = w;
                s[static_cast<std::size_t>(p)] = i + 1;
                out.add(s, c.shifted(e));
            }
            break;
        }
        }
    }
    return out;
}

namespace {

// multiplies each term by v^{f(word)}
template <class F>
TensorElement diagonal(const TensorElement& x, F f)
{
    TensorElement out = empty_like(x);
    for (const auto& [w, c] : x.terms)
        out.terms.emplace(w, c.shifted(f(w)));
    return out;
}

}  // namespace

TensorElement coproduct_act(const TensorSpace& sp, Gen g, int i, const TensorElement& x, int center_shift)
{
    if (x.flavor != Flavor::V)
        throw std::invalid_argument("the coproduct action is given on the v-basis");
    const int n = sp.n, N = sp.N();
    switch (g) {
    case Gen::DPlus:
    case Gen::DMinus: {
        const int sign = g == Gen::DPlus ? 1 : -1;
        if (i < 1 || i > n + 1)
            throw std::out_of_range("generator index out of range");
        if (i == n + 1)
            return diagonal(x, [&](const Word& w) { return sign * (center_shift - 2 * count(w, n + 1)); });
        return diagonal(x, [&](const Word& w) { return -sign * (count(w, i) + count(w, N + 1 - i)); });
    }
    case Gen::E: {
        if (i < 1 || i > n)
            throw std::out_of_range("generator index out of range");
        TensorElement out = gl_act(sp, GlGen::F, i, x);
        out += diagonal(gl_act(sp, GlGen::E, N - i, x),
                        [&](const Word& w) { return count(w, i + 1) - count(w, i); });
        return out;
    }
    case Gen::F: {
        if (i < 1 || i > n)
            throw std::out_of_range("generator index out of range");
        TensorElement out = gl_act(
            sp, GlGen::E, i, diagonal(x, [&](const Word& w) { return count(w, N + 1 - i) - count(w, N - i); }));
        out += gl_act(sp, GlGen::F, N - i, x);
        return out;
    }
    case Gen::T:
        return t_from_twins(sp, x, [&](Gen h, int k, const TensorElement& y) {
            return coproduct_act(sp, h, k, y, center_shift);
        });
    }
    return x;
}

// ---- type C -------------------------------------------------------------------

TensorElement hecke_act_typec(int N, const TensorElement& x, int j)
{
    const bool geometric = x.flavor == Flavor::E;
    TensorElement out = empty_like(x);
    for (const auto& [r, c] : x.terms) {
        const int d = static_cast<int>(r.size());
        if (j < 1 || j > d)
            throw std::out_of_range("Hecke generator index out of range");
        const auto J = static_cast<std::size_t>(j - 1);
        Word s = r;
        int a = r[J], b;
        if (j < d) {
            b = r[J + 1];
            std::swap(s[J], s[J + 1]);
        } else {
            b = N + 1 - r[J];  // r_{d+1}
            s[J] = b;
        }
        hecke_step(out, r, s, a < b ? -1 : a == b ? 0 : 1, c, geometric);
    }
    return out;
}

int tilde_exponent_typec(int N, const Word& r, TildeRule rule)
{
    const int d = static_cast<int>(r.size());
    Word ext = r;
    ext.push_back(N + 1 - r.back());
    const int top = rule == TildeRule::Printed ? d + 1 : d;
    int e = 0;
    for (int c = 0; c < top; ++c)
        for (int c2 = c + 1; c2 < top; ++c2)
            e += ext[static_cast<std::size_t>(c)] < ext[static_cast<std::size_t>(c2)] ? 1 : 0;
    if (rule == TildeRule::Printed)
        return e;
    for (int c = 0; c < d; ++c)
        for (int c2 = c; c2 < d; ++c2)
            e += r[static_cast<std::size_t>(c)] + r[static_cast<std::size_t>(c2)] < N + 1 ? 1 : 0;
    return e;
}

std::vector<Word> words_typec(int N, int d)
{
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(d), 1);
    while (true) {
        out.push_back(w);
        int k = d - 1;
        while (k >= 0 && w[static_cast<std::size_t>(k)] == N)
            w[static_cast<std::size_t>(k--)] = 1;
        if (k < 0)
            break;
        ++w[static_cast<std::size_t>(k)];
    }
    return out;
}

// ---- matrices and duality --------------------------------------------------------

SparseMatrix matrix_of(const TensorSpace& sp, const std::function<TensorElement(const TensorElement&)>& op,
                       const mpq_class& v)
{
    const auto words = sp.words();
    std::map<Word, int> index;
    for (std::size_t k = 0; k < words.size(); ++k)
        index.emplace(words[k], static_cast<int>(k));
    SparseMatrix m;
    m.dim = static_cast<int>(words.size());
    m.col.resize(words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
        const TensorElement y = op(TensorElement::basis(words[k]));
        for (const auto& [w, c] : y.terms) {
            auto it = index.find(w);
            if (it == index.end())
                throw std::logic_error("operator leaves the tensor space");
            const mpq_class val = eval_at(c, v);
            if (val != 0)
                m.col[k][it->second] = val;
        }
    }
    return m;
}

bool DualityReport::passed() const
{
    if (commute_checks == 0 || commute_failures != 0 || points.empty())
        return false;
    long order = 1;  // 2^d d!
    for (int k = 1; k <= space.d; ++k)
        order *= 2 * k;
    for (const auto& p : points) {
        if (p.image_schur != algebra_dimension || p.commutant_hecke != p.image_schur ||
            p.commutant_schur != p.image_hecke)
            return false;
        if (hecke_faithful && p.image_hecke != order)
            return false;
    }
    return true;
}

std::string DualityReport::str() const
{
    std::ostringstream os;
    os << (space.iota ? "i-" : "") << "tensor duality (n=" << space.n << ", d=" << space.d
       << "): " << (passed() ? "pass" : "FAIL") << "\n";
    os << "  commuting checks: " << commute_checks << ", failures: " << commute_failures;
    if (commute_failures)
        os << " (first: " << first_failure << ")";
    os << "\n";
    if (!hecke_faithful)
        os << "  n < d: the Hecke algebra does not act faithfully\n";
    for (const auto& p : points)
        os << "  v = " << p.v.get_str() << ": dim S-image " << p.image_schur << " (labels " << algebra_dimension
           << "), dim End_H " << p.commutant_hecke << ", dim H-image " << p.image_hecke << ", dim End_S "
           << p.commutant_schur << "\n";
    return os.str();
}

DualityReport double_centralizer(const TensorSpace& sp, const std::vector<mpq_class>& points, bool all_standard)
{
    const Algebra alg(Context{sp.iota ? Family::SchurI : Family::SchurJ, sp.n, sp.d});
    DualityReport rep;
    rep.space = sp;
    const auto labels = enumerate(alg.labels());
    rep.algebra_dimension = static_cast<long>(labels.size());

    std::vector<std::pair<Gen, int>> gens;
    const int top = sp.iota ? sp.n - 1 : sp.n;
    for (int i = 1; i <= top; ++i) {
        gens.emplace_back(Gen::E, i);
        gens.emplace_back(Gen::F, i);
    }
    for (int a = 1; a <= (sp.iota ? sp.n : sp.n + 1); ++a)
        gens.emplace_back(Gen::DPlus, a);
    if (sp.iota)
        gens.emplace_back(Gen::T, 0);

    std::vector<std::function<TensorElement(const TensorElement&)>> ops;
    std::vector<std::string> names;
    for (const auto& [g, i] : gens) {
        ops.emplace_back([&sp, g = g, i = i](const TensorElement& x) { return schur_gen_act(sp, g, i, x); });
        names.push_back(gen_name(g, i));
    }
    if (all_standard)
        for (const auto& a : labels) {
            const Element s = alg.std(a);
            ops.emplace_back([&alg, s](const TensorElement& x) { return schur_elem_act(alg, s, x); });
            names.push_back("[" + a.str() + "]");
        }

    const auto words = sp.words();
    for (std::size_t k = 0; k < ops.size(); ++k)
        for (const auto& w : words)
            for (int j = 1; j <= sp.d; ++j) {
                const TensorElement x = TensorElement::basis(w);
                const TensorElement lhs = ops[k](hecke_act(sp, x, j));
                const TensorElement rhs = hecke_act(sp, ops[k](x), j);
                ++rep.commute_checks;
                if (lhs != rhs) {
                    if (rep.commute_failures == 0) {
                        std::ostringstream os;
                        os << names[k] << " vs T_" << j << " on " << x.str();
                        rep.first_failure = os.str();
                    }
                    ++rep.commute_failures;
                }
            }

    rep.hecke_faithful = sp.n >= sp.d;
    for (const auto& v : points) {
        DualityReport::Point pt;
        pt.v = v;
        std::vector<SparseMatrix> hecke, schur_gens, schur_all;
        for (int j = 1; j <= sp.d; ++j)
            hecke.push_back(matrix_of(sp, [&](const TensorElement& x) { return hecke_act(sp, x, j); }, v));
        for (const auto& [g, i] : gens)
            schur_gens.push_back(matrix_of(sp, [&](const TensorElement& x) { return schur_gen_act(sp, g, i, x); }, v));
        for (const auto& a : labels) {
            const Element s = alg.std(a);
            schur_all.push_back(matrix_of(sp, [&](const TensorElement& x) { return schur_elem_act(alg, s, x); }, v));
        }
        pt.image_schur = span_dimension(schur_all);
        pt.commutant_hecke = commutant_dimension(hecke);
        pt.image_hecke = generated_algebra_dimension(hecke);
        pt.commutant_schur = commutant_dimension(schur_gens);
        rep.points.push_back(pt);
    }
    return rep;
}

}  // namespace qschur
