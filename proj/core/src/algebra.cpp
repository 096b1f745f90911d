#include "qschur/algebra.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

namespace qschur {

// ---- families and contexts ------------------------------------------------

std::string family_name(Family f)
{
    switch (f) {
    case Family::SchurJ: return "schur-j";
    case Family::SchurI: return "schur-i";
    case Family::Kj: return "kj";
    case Family::KjGreater: return "kj-greater";
    case Family::Ki: return "ki";
    }
    return "?";
}

Family parse_family(const std::string& s)
{
    for (Family f : {Family::SchurJ, Family::SchurI, Family::Kj, Family::KjGreater, Family::Ki})
        if (family_name(f) == s)
            return f;
    throw std::invalid_argument("unknown family: " + s);
}

bool is_finite_family(Family f)
{
    return f == Family::SchurJ || f == Family::SchurI;
}

SetTag label_tag(const Context& c)
{
    switch (c.family) {
    case Family::SchurJ: return {SetKind::Xi, c.n, c.d};
    case Family::SchurI: return {SetKind::IXi, c.n, c.d};
    case Family::Kj: return {SetKind::TildeXi, c.n, 0};
    case Family::KjGreater: return {SetKind::TildeXiGt, c.n, 0};
    case Family::Ki: return {SetKind::ITildeXi, c.n, 0};
    }
    return {SetKind::Xi, c.n, c.d};
}

SetTag ambient_tag(const Context& c)
{
    switch (c.family) {
    case Family::SchurJ:
    case Family::SchurI: return {SetKind::Xi, c.n, c.d};
    case Family::Kj: return {SetKind::TildeXi, c.n, 0};
    case Family::KjGreater:
    case Family::Ki: return {SetKind::TildeXiGt, c.n, 0};
    }
    return {SetKind::Xi, c.n, c.d};
}

// ---- Element --------------------------------------------------------------

Laurent Element::coeff(const ThetaMatrix& a) const
{
    auto it = terms_.find(a);
    return it == terms_.end() ? Laurent() : it->second;
}

void Element::add(const ThetaMatrix& a, const Laurent& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o)
{
    if (o.ctx_ != ctx_)
        throw ContextMismatch("adding elements of different contexts");
    for (const auto& [a, c] : o.terms_)
        add(a, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    if (o.ctx_ != ctx_)
        throw ContextMismatch("subtracting elements of different contexts");
    for (const auto& [a, c] : o.terms_)
        add(a, -c);
    return *this;
}

Element Element::operator-() const
{
    Element out(ctx_);
    for (const auto& [a, c] : terms_)
        out.terms_.emplace(a, -c);
    return out;
}

Element Element::scaled(const Laurent& c) const
{
    Element out(ctx_);
    if (c.is_zero())
        return out;
    for (const auto& [a, x] : terms_)
        out.add(a, x * c);
    return out;
}

Element Element::coeff_bar() const
{
    Element out(ctx_);
    for (const auto& [a, c] : terms_)
        out.terms_.emplace(a, c.bar());
    return out;
}

std::string Element::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")" << a.str();
    }
    return os.str();
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(const Laurent& c, const Element& x) { return x.scaled(c); }

// ---- generator shapes -----------------------------------------------------

GenShape classify(const ThetaMatrix& g)
{
    const int n = g.n(), N = g.N();
    int count = 0, ri = 0, rj = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (g(i, j) != 0) {
                ++count;
                ri = i;
                rj = j;
            }
    GenShape s;
    if (count == 0) {
        s.kind = GenShape::Diagonal;
        return s;
    }
    if (count != 1 || rj != ri + 1 || g(ri, rj) < 0)
        return s;
    s.R = g(ri, rj);
    if (ri <= n) {
        s.kind = GenShape::Upper;
        s.h = ri;
    } else {
        s.kind = GenShape::Lower;
        s.h = N - ri;
    }
    return s;
}

// ---- memoized coefficients ------------------------------------------------

namespace {

template <class Key>
class Memo {
public:
    template <class F>
    Laurent get(const Key& k, F make)
    {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(k);
            if (it != map_.end())
                return it->second;
        }
        Laurent v = make();
        std::lock_guard<std::mutex> lk(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<Key, Laurent> map_;
};

Laurent binom(int a, int b)
{
    static Memo<std::pair<int, int>> memo;
    return memo.get({a, b}, [&] { return gauss_binom(a, b); });
}

Laurent bar_binom(int a, int b)
{
    static Memo<std::pair<int, int>> memo;
    return memo.get({a, b}, [&] { return gauss_binom(a, b).bar(); });
}

// prod_{i=0}^{t-1} [c+1+2i] / [i+1]
Laurent center_ratio(int c, int t)
{
    static Memo<std::pair<int, int>> memo;
    return memo.get({c, t}, [&] {
        Laurent num(1), den(1);
        for (int i = 0; i < t; ++i) {
            num *= gauss_bracket(c + 1 + 2 * i);
            den *= gauss_bracket(i + 1);
        }
        return num.divide_exact(den);
    });
}

Laurent bar_center_ratio(int c, int t)
{
    static Memo<std::pair<int, int>> memo;
    return memo.get({c, t}, [&] { return center_ratio(c, t).bar(); });
}

// all t in N^N with sum R and t_u <= cap(u, t) checked as u increases
void for_each_composition(int N, int R, const std::function<int(int, const std::vector<int>&)>& cap,
                          const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> t(static_cast<std::size_t>(N + 1), 0);
    std::function<void(int, int)> rec = [&](int u, int rem) {
        if (u == N) {
            if (rem > cap(u, t))
                return;
            t[static_cast<std::size_t>(u)] = rem;
            visit(t);
            t[static_cast<std::size_t>(u)] = 0;
            return;
        }
        const int hi = std::min(rem, cap(u, t));
        for (int x = 0; x <= hi; ++x) {
            t[static_cast<std::size_t>(u)] = x;
            rec(u + 1, rem - x);
        }
        t[static_cast<std::size_t>(u)] = 0;
    };
    rec(1, R);
}

}  // namespace

// ---- Algebra --------------------------------------------------------------

struct Algebra::Caches {
    std::mutex mu;
    std::unordered_map<ThetaMatrix, std::vector<ThetaMatrix>, ThetaMatrixHash> factors;
    std::unordered_map<ThetaMatrix, Element, ThetaMatrixHash> monomial;
    std::unordered_map<ThetaMatrix, Element, ThetaMatrixHash> inversion;
    std::unordered_map<ThetaMatrix, Element, ThetaMatrixHash> bar;
    std::unordered_map<ThetaMatrix, Element, ThetaMatrixHash> canonical;

    template <class Map, class F>
    auto get(Map& m, const ThetaMatrix& a, F make) -> typename Map::mapped_type
    {
        {
            std::lock_guard<std::mutex> lk(mu);
            auto it = m.find(a);
            if (it != m.end())
                return it->second;
        }
        auto v = make();
        std::lock_guard<std::mutex> lk(mu);
        return m.emplace(a, std::move(v)).first->second;
    }
};

Algebra::Algebra(Context ctx)
    : ctx_(ctx), labels_(label_tag(ctx)), ambient_(ambient_tag(ctx)),
      caches_(std::make_shared<Caches>())
{
    if (ctx.n < 1)
        throw std::invalid_argument("rank n must be at least 1");
    if (is_finite_family(ctx.family) && ctx.d < 0)
        throw std::invalid_argument("d must be nonnegative");
    if (!is_finite_family(ctx_.family))
        ctx_.d = 0;
}

void Algebra::clear_caches() const
{
    std::lock_guard<std::mutex> lk(caches_->mu);
    caches_->factors.clear();
    caches_->monomial.clear();
    caches_->inversion.clear();
    caches_->bar.clear();
    caches_->canonical.clear();
}

void Algebra::check_label(const ThetaMatrix& a) const
{
    if (!member(a, labels_))
        throw BadLabel("matrix " + a.str() + " is not a label of " + family_name(ctx_.family));
}

void Algebra::check_context(const Element& x) const
{
    if (x.context() != ctx_)
        throw ContextMismatch("element belongs to a different context");
}

bool Algebra::keep_target(const ThetaMatrix& x) const
{
    return member(x, ambient_);
}

Element Algebra::std(const ThetaMatrix& a) const
{
    check_label(a);
    Element e(ctx_);
    e.add(a, Laurent(1));
    return e;
}

Element Algebra::e_basis(const ThetaMatrix& a) const
{
    if (!is_finite_family(ctx_.family))
        throw std::invalid_argument("e-basis is defined for the finite families only");
    check_label(a);
    Element e(ctx_);
    e.add(a, Laurent::monomial(static_cast<int>(d_lower(a))));
    return e;
}

Element Algebra::to_e_coords(const Element& x) const
{
    Element out(ctx_);
    for (const auto& [a, c] : x.terms())
        out.add(a, c.shifted(-static_cast<int>(d_lower(a))));
    return out;
}

Element Algebra::from_e_coords(const Element& x) const
{
    Element out(ctx_);
    for (const auto& [a, c] : x.terms())
        out.add(a, c.shifted(static_cast<int>(d_lower(a))));
    return out;
}

Element Algebra::mul_gen_impl(const ThetaMatrix& g, const GenShape& s, const ThetaMatrix& a,
                              Route route) const
{
    Element out(ctx_);
    const int n = ctx_.n, N = 2 * n + 1, h = s.h, R = s.R;
    const bool e_route = route == Route::EBasis;
    if (e_route && !is_finite_family(ctx_.family))
        throw std::invalid_argument("e-basis route needs a finite family");

    auto emit = [&](const ThetaMatrix& x, Laurent c) {
        if (!keep_target(x) || c.is_zero())
            return;
        if (e_route)
            c = c.shifted(static_cast<int>(-d_lower(g) - d_lower(a) + d_lower(x)));
        out.add(x, c);
    };

    if (s.kind == GenShape::Upper) {
        auto cap = [&](int u, const std::vector<int>& t) {
            if (h < n) {
                if (u == h + 1)
                    return e_route ? a(h + 1, u) : INT_MAX;
                return a(h + 1, u);
            }
            if (u == n + 1)
                return e_route ? a(n + 1, u) / 2 : INT_MAX;
            if (u < n + 1)
                return a(n + 1, u);
            return a(n + 1, u) - t[static_cast<std::size_t>(N + 1 - u)];
        };
        for_each_composition(N, R, cap, [&](const std::vector<int>& t) {
            ThetaMatrix x = a;
            for (int u = 1; u <= N; ++u)
                if (t[u] != 0) {
                    x.add_theta(h, u, t[u]);
                    x.add_theta(h + 1, u, -t[u]);
                }
            if (!keep_target(x))
                return;
            Laurent c(1);
            long long beta = 0;
            if (e_route) {
                for (int u = 1; u <= N; ++u) {
                    c *= binom(a(h, u) + t[u], t[u]);
                    for (int j = u + 1; j <= N; ++j)
                        beta += 2LL * a(h, j) * t[u];
                }
            } else {
                for (int u = 1; u <= N; ++u)
                    c *= bar_binom(a(h, u) + t[u], t[u]);
                for (int j = 1; j <= N; ++j)
                    for (int l = j; l <= N; ++l) {
                        beta += 1LL * a(h, l) * t[j];
                        if (l > j)
                            beta += -1LL * a(h + 1, l) * t[j] + 1LL * t[j] * t[l];
                    }
                if (h == n) {
                    for (int j = 1; j <= N; ++j)
                        for (int l = j + 1; l <= N; ++l)
                            if (j + l < N + 1)
                                beta += 1LL * t[j] * t[l];
                    for (int j = 1; j < n + 1; ++j)
                        beta += 1LL * t[j] * (t[j] + 1) / 2;
                }
            }
            emit(x, c.shifted(static_cast<int>(beta)));
        });
        return out;
    }

    // lower shape
    auto cap = [&](int u, const std::vector<int>&) {
        if (u == h)
            return e_route ? a(h, u) : INT_MAX;
        return a(h, u);
    };
    for_each_composition(N, R, cap, [&](const std::vector<int>& t) {
        ThetaMatrix x = a;
        for (int u = 1; u <= N; ++u)
            if (t[u] != 0) {
                x.add_theta(h, u, -t[u]);
                x.add_theta(h + 1, u, t[u]);
            }
        if (!keep_target(x))
            return;
        Laurent c(1);
        long long beta = 0;
        if (e_route) {
            for (int u = 1; u <= N; ++u)
                for (int j = 1; j < u; ++j)
                    beta += 2LL * a(h + 1, j) * t[u];
            if (h < n) {
                for (int u = 1; u <= N; ++u)
                    c *= binom(a(h + 1, u) + t[u], t[u]);
            } else {
                for (int j = 1; j <= N; ++j)
                    for (int u = N + 2 - j; u < j; ++u)
                        beta += 2LL * t[u] * t[j];
                for (int u = n + 2; u <= N; ++u)
                    beta += 1LL * t[u] * (t[u] - 1);
                for (int u = 1; u < n + 1; ++u)
                    c *= binom(a(n + 1, u) + t[u], t[u]);
                for (int u = n + 2; u <= N; ++u)
                    c *= binom(a(n + 1, u) + t[u] + t[N + 1 - u], t[u]);
                c *= center_ratio(a(n + 1, n + 1), t[n + 1]);
            }
        } else {
            for (int j = 1; j <= N; ++j)
                for (int l = 1; l <= j; ++l) {
                    beta += 1LL * a(h + 1, l) * t[j];
                    if (j > l)
                        beta += -1LL * a(h, l) * t[j] + 1LL * t[j] * t[l];
                }
            if (h < n) {
                for (int u = 1; u <= N; ++u)
                    c *= bar_binom(a(h + 1, u) + t[u], t[u]);
            } else {
                for (int j = 1; j <= N; ++j)
                    for (int l = j + 1; l <= N; ++l)
                        if (j + l < N + 1)
                            beta -= 1LL * t[j] * t[l];
                for (int j = 1; j < n + 1; ++j)
                    beta -= 1LL * t[j] * (t[j] - 1) / 2;
                beta += 1LL * R * (R - 1) / 2;
                for (int u = 1; u < n + 1; ++u)
                    c *= bar_binom(a(n + 1, u) + t[u] + t[N + 1 - u], t[u]);
                for (int u = n + 2; u <= N; ++u)
                    c *= bar_binom(a(n + 1, u) + t[u], t[u]);
                c *= bar_center_ratio(a(n + 1, n + 1), t[n + 1]);
            }
        }
        emit(x, c.shifted(static_cast<int>(beta)));
    });
    return out;
}

Element Algebra::mul_gen(const ThetaMatrix& g, const Element& x, Route route) const
{
    check_context(x);
    const GenShape s = classify(g);
    if (s.kind == GenShape::Other)
        throw std::invalid_argument("not a generator-shaped matrix: " + g.str());
    if (!member(g, ambient_))
        throw BadLabel("generator " + g.str() + " outside the ambient set");
    const Weight col = g.co();
    Element out(ctx_);
    for (const auto& [a, c] : x.terms()) {
        if (a.ro() != col)
            continue;
        if (s.kind == GenShape::Diagonal || s.R == 0) {
            out.add(a, c);
            continue;
        }
        out += mul_gen_impl(g, s, a, route).scaled(c);
    }
    return out;
}

Element Algebra::mul_gen_strict(const ThetaMatrix& g, const Element& x, Route route) const
{
    const Weight col = g.co();
    for (const auto& [a, c] : x.terms())
        if (a.ro() != col)
            throw WeightMismatch("co(" + g.str() + ") differs from ro(" + a.str() + ")");
    return mul_gen(g, x, route);
}

// ---- monomial basis -------------------------------------------------------

std::vector<ThetaMatrix> Algebra::monomial_factors(const ThetaMatrix& a) const
{
    check_label(a);
    return caches_->get(caches_->factors, a, [&] {
        const int n = ctx_.n, N = 2 * n + 1;
        struct Slot {
            int i, h, j;
        };
        std::vector<Slot> order;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j < i; ++j)
                for (int h = i - 1; h >= j; --h)
                    order.push_back({i, h, j});
        std::vector<ThetaMatrix> rev;
        Weight cur = a.co();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int k = a(it->i, it->j);
            if (k == 0)
                continue;
            ThetaMatrix e = ThetaMatrix::e_theta(n, it->h + 1, it->h);
            Weight w = cur;
            const Weight ce = e.co();
            for (std::size_t p = 0; p < w.size(); ++p)
                w[p] -= k * ce[p];
            ThetaMatrix f = ThetaMatrix::diag(w);
            f.add_theta(it->h + 1, it->h, k);
            if (!member(f, ambient_))
                throw RecursionFailure("monomial factor " + f.str() + " of " + a.str() +
                                       " leaves the ambient set");
            cur = f.ro();
            rev.push_back(std::move(f));
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    });
}

Element Algebra::apply_monomial(const ThetaMatrix& b, const Element& y) const
{
    const auto fs = monomial_factors(b);
    if (fs.empty())
        return mul_gen(b, y);
    Element cur = y;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        cur = mul_gen(*it, cur);
        if (cur.is_zero())
            break;
    }
    return cur;
}

Element Algebra::monomial(const ThetaMatrix& a) const
{
    check_label(a);
    return caches_->get(caches_->monomial, a, [&] {
        Element seed(ctx_);
        seed.add(ThetaMatrix::diag(a.co()), Laurent(1));
        return apply_monomial(a, seed);
    });
}

Element Algebra::std_in_monomials(const ThetaMatrix& a) const
{
    check_label(a);
    return caches_->get(caches_->inversion, a, [&] {
        const Element m = monomial(a);
        if (m.coeff(a) != Laurent(1))
            throw RecursionFailure("monomial of " + a.str() + " has leading coefficient " +
                                   m.coeff(a).str());
        Element out(ctx_);
        out.add(a, Laurent(1));
        for (const auto& [b, g] : m.terms()) {
            if (b == a)
                continue;
            if (!member(b, labels_))
                throw RecursionFailure("monomial of " + a.str() + " leaves the label set at " +
                                       b.str());
            out -= std_in_monomials(b).scaled(g);
        }
        return out;
    });
}

Element Algebra::mul(const Element& x, const Element& y) const
{
    check_context(x);
    check_context(y);
    Element out(ctx_);
    for (const auto& [a, c] : x.terms()) {
        const GenShape s = classify(a);
        if (s.kind != GenShape::Other) {
            out += mul_gen(a, y).scaled(c);
            continue;
        }
        const Element inv = std_in_monomials(a);
        for (const auto& [b, nb] : inv.terms())
            out += apply_monomial(b, y).scaled(c * nb);
    }
    return out;
}

Element Algebra::bar_std(const ThetaMatrix& a) const
{
    check_label(a);
    return caches_->get(caches_->bar, a, [&] {
        Element out(ctx_);
        const Element inv = std_in_monomials(a);
        for (const auto& [b, nb] : inv.terms())
            out += monomial(b).scaled(nb.bar());
        return out;
    });
}

Element Algebra::bar(const Element& x) const
{
    check_context(x);
    Element out(ctx_);
    for (const auto& [a, c] : x.terms())
        out += bar_std(a).scaled(c.bar());
    return out;
}

Element Algebra::canonical(const ThetaMatrix& a) const
{
    check_label(a);
    return caches_->get(caches_->canonical, a, [&] {
        std::vector<ThetaMatrix> below = down_set(a, labels_);
        std::stable_sort(below.begin(), below.end(), [](const ThetaMatrix& x, const ThetaMatrix& y) {
            return order_height(x) > order_height(y);
        });
        std::map<ThetaMatrix, Laurent> pi;
        std::vector<std::pair<ThetaMatrix, Element>> done;  // (B, bar[B]) with pi_B != 0
        for (const auto& c : below) {
            Laurent p;
            if (c == a) {
                p = Laurent(1);
            } else {
                Laurent rhs;
                for (const auto& [b, barb] : done) {
                    const Laurent rho = barb.coeff(c);
                    if (!rho.is_zero())
                        rhs += rho * pi.at(b).bar();
                }
                p = rhs.negative_part();
                if (p - p.bar() != rhs)
                    throw RecursionFailure("canonical recursion for " + a.str() + " at " + c.str() +
                                           ": right side " + rhs.str() + " is not antisymmetric");
            }
            if (p.is_zero())
                continue;
            pi.emplace(c, p);
            done.emplace_back(c, bar_std(c));
        }
        Element out(ctx_);
        for (const auto& [c, p] : pi)
            out.add(c, p);
        return out;
    });
}

Element Algebra::transpose_anti(const Element& x) const
{
    check_context(x);
    Element out(ctx_);
    for (const auto& [a, c] : x.terms())
        out.add(a.transpose(), c);
    return out;
}

// ---- generators -----------------------------------------------------------

Element Algebra::idempotent(const Weight& lambda) const
{
    Element out(ctx_);
    ThetaMatrix dm = ThetaMatrix::diag(lambda);
    if (member(dm, labels_))
        out.add(dm, Laurent(1));
    return out;
}

std::vector<Weight> Algebra::weights() const
{
    if (!is_finite_family(ctx_.family))
        throw std::invalid_argument("weights() enumerates finite families only");
    std::vector<Weight> out;
    for (const auto& m : enumerate(labels_))
        if (m.is_diagonal())
            out.push_back(m.ro());
    return out;
}

Element Algebra::unit() const
{
    Element out(ctx_);
    for (const auto& w : weights())
        out.add(ThetaMatrix::diag(w), Laurent(1));
    return out;
}

namespace {
void check_index(const Context& c, int i, bool ii)
{
    const int hi = (c.family == Family::SchurI || c.family == Family::Ki) ? c.n - 1 : c.n;
    if (i < 1 || i > hi)
        throw std::invalid_argument(std::string(ii ? "generator" : "weight") + " index " +
                                    std::to_string(i) + " out of range");
}
}  // namespace

Element Algebra::e_pow_at(int i, int r, const Weight& lambda) const
{
    check_index(ctx_, i, true);
    Element out(ctx_);
    ThetaMatrix m = ThetaMatrix::diag(lambda);
    if (!member(m, labels_))
        return out;
    m.add_theta(i, i, -r);
    m.add_theta(i + 1, i, r);
    if (member(m, labels_))
        out.add(m, Laurent(1));
    return out;
}

Element Algebra::f_pow_at(int i, int r, const Weight& lambda) const
{
    check_index(ctx_, i, true);
    Element out(ctx_);
    ThetaMatrix m = ThetaMatrix::diag(lambda);
    if (!member(m, labels_))
        return out;
    m.add_theta(i + 1, i + 1, -r);
    m.add_theta(i, i + 1, r);
    if (member(m, labels_))
        out.add(m, Laurent(1));
    return out;
}

Element Algebra::e_at(int i, const Weight& lambda) const { return e_pow_at(i, 1, lambda); }
Element Algebra::f_at(int i, const Weight& lambda) const { return f_pow_at(i, 1, lambda); }

Element Algebra::t_at(const Weight& lambda) const
{
    if (ctx_.family != Family::SchurI && ctx_.family != Family::Ki)
        throw std::invalid_argument("t is defined for the i-families only");
    const int n = ctx_.n;
    Element out(ctx_);
    ThetaMatrix dm = ThetaMatrix::diag(lambda);
    if (!member(dm, labels_))
        return out;
    ThetaMatrix m = dm;
    m.add_theta(n, n, -1);
    m.add_theta(n, n + 2, 1);
    if (member(m, labels_))
        out.add(m, Laurent(1));
    out.add(dm, Laurent::monomial(-lambda[static_cast<std::size_t>(n - 1)]));
    return out;
}

Element Algebra::gen_e(int i) const
{
    Element out(ctx_);
    for (const auto& w : weights())
        out += e_at(i, w);
    return out;
}

Element Algebra::gen_f(int i) const
{
    Element out(ctx_);
    for (const auto& w : weights())
        out += f_at(i, w);
    return out;
}

Element Algebra::gen_d(int a, int sign) const
{
    const int hi = ctx_.family == Family::SchurI ? ctx_.n : ctx_.n + 1;
    if (a < 1 || a > hi)
        throw std::invalid_argument("d index out of range");
    Element out(ctx_);
    for (const auto& w : weights())
        out.add(ThetaMatrix::diag(w), Laurent::monomial(-sign * w[static_cast<std::size_t>(a - 1)]));
    return out;
}

Element Algebra::gen_t() const
{
    Element out(ctx_);
    for (const auto& w : weights())
        out += t_at(w);
    return out;
}

}  // namespace qschur
