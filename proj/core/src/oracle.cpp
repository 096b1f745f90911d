#include "qschur/oracle.hpp"

#include <algorithm>
#include <functional>

namespace qschur::oracle {

namespace {

// Gauss-Jordan over F_q in place; returns the nonzero rows
std::vector<Vec> rref_rows(const Geometry& g, std::vector<Vec> m)
{
    const int D = g.D();
    std::size_t r = 0;
    for (int c = 0; c < D && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const int s = g.inv(m[r][c]);
        for (int k = 0; k < D; ++k)
            m[r][k] = g.mul(m[r][k], s);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const int f = m[i][c];
            for (int k = 0; k < D; ++k)
                m[i][k] = g.add(m[i][k], g.neg(g.mul(f, m[r][k])));
        }
        ++r;
    }
    m.resize(r);
    return m;
}

}  // namespace

Geometry::Geometry(FieldConfig cfg) : cfg_(cfg)
{
    const int q = cfg.q;
    if (q < 3 || q > 251)
        throw std::invalid_argument("oracle: q must be an odd prime below 256");
    for (int p = 2; p * p <= q; ++p)
        if (q % p == 0)
            throw std::invalid_argument("oracle: q must be prime");
    if (cfg.D < 1 || cfg.D > 12)
        throw std::invalid_argument("oracle: dimension out of range");
    if (cfg.form == Form::Skew && cfg.D % 2 != 0)
        throw std::invalid_argument("oracle: skew form needs even dimension");
    inv_.assign(static_cast<std::size_t>(q), 0);
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (a * b % q == 1)
                inv_[a] = b;
    const int D = cfg.D;
    gram_.assign(static_cast<std::size_t>(D), std::vector<int>(static_cast<std::size_t>(D), 0));
    for (int i = 0; i < D; ++i) {
        int v = 1;
        if (cfg.form == Form::Skew && i >= D / 2)
            v = q - 1;
        gram_[i][D - 1 - i] = v;
    }
}

int Geometry::form(const Vec& x, const Vec& y) const
{
    const int D = cfg_.D;
    int s = 0;
    for (int i = 0; i < D; ++i)
        if (x[i])
            s = add(s, mul(mul(x[i], gram_[i][D - 1 - i]), y[D - 1 - i]));
    return s;
}

Subspace Geometry::span(std::vector<Vec> vectors) const
{
    auto r = rref_rows(*this, std::move(vectors));
    Subspace u;
    u.dim = static_cast<int>(r.size());
    for (const auto& row : r)
        u.rows.insert(u.rows.end(), row.begin(), row.end());
    return u;
}

int Geometry::rank(std::vector<Vec> vectors) const
{
    return static_cast<int>(rref_rows(*this, std::move(vectors)).size());
}

std::vector<Vec> Geometry::basis(const Subspace& u) const
{
    std::vector<Vec> b;
    const int D = cfg_.D;
    for (int i = 0; i < u.dim; ++i)
        b.emplace_back(u.rows.begin() + i * D, u.rows.begin() + (i + 1) * D);
    return b;
}

Subspace Geometry::perp(const Subspace& u) const
{
    const int D = cfg_.D;
    // rows m_k with m_k . y = form(u_k, y)
    std::vector<Vec> m;
    for (const auto& b : basis(u)) {
        Vec row(static_cast<std::size_t>(D), 0);
        for (int i = 0; i < D; ++i)
            if (b[i])
                row[D - 1 - i] = add(row[D - 1 - i], mul(b[i], gram_[i][D - 1 - i]));
        m.push_back(row);
    }
    auto r = rref_rows(*this, m);
    std::vector<int> pivot_of_col(static_cast<std::size_t>(D), -1);
    for (std::size_t k = 0; k < r.size(); ++k)
        for (int c = 0; c < D; ++c)
            if (r[k][c] != 0) {
                pivot_of_col[c] = static_cast<int>(k);
                break;
            }
    std::vector<Vec> null;
    for (int f = 0; f < D; ++f) {
        if (pivot_of_col[f] >= 0)
            continue;
        Vec x(static_cast<std::size_t>(D), 0);
        x[f] = 1;
        for (int c = 0; c < D; ++c)
            if (pivot_of_col[c] >= 0)
                x[c] = neg(r[pivot_of_col[c]][f]);
        null.push_back(x);
    }
    return span(null);
}

bool Geometry::is_isotropic(const Subspace& u) const
{
    const auto b = basis(u);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (form(b[i], b[j]) != 0)
                return false;
    return true;
}

std::string Geometry::key(const Subspace& u) const
{
    std::string k;
    k.reserve(u.rows.size() + 1);
    k.push_back(static_cast<char>(u.dim));
    for (int x : u.rows)
        k.push_back(static_cast<char>(x));
    return k;
}

int Geometry::intern(const Subspace& u)
{
    auto k = key(u);
    auto it = ids_.find(k);
    if (it != ids_.end())
        return it->second;
    const int id = static_cast<int>(table_.size());
    table_.push_back(u);
    ids_.emplace(std::move(k), id);
    return id;
}

int Geometry::intersect_dim(int a, int b)
{
    if (a > b)
        std::swap(a, b);
    const std::uint64_t ck = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = meet_cache_.find(ck);
    if (it != meet_cache_.end())
        return it->second;
    const auto& ua = table_[a];
    const auto& ub = table_[b];
    auto rows = basis(ua);
    auto rb = basis(ub);
    rows.insert(rows.end(), rb.begin(), rb.end());
    const int d = ua.dim + ub.dim - rank(rows);
    meet_cache_.emplace(ck, d);
    return d;
}

bool Geometry::contains(int big, int small)
{
    return intersect_dim(big, small) == table_[small].dim;
}

int Geometry::perp_id(int id)
{
    auto it = perp_cache_.find(id);
    if (it != perp_cache_.end())
        return it->second;
    const int p = intern(perp(table_[id]));
    perp_cache_.emplace(id, p);
    perp_cache_.emplace(p, id);
    return p;
}

int Geometry::zero_id()
{
    return intern(Subspace{});
}

int Geometry::whole_id()
{
    std::vector<Vec> e;
    for (int i = 0; i < cfg_.D; ++i) {
        Vec x(static_cast<std::size_t>(cfg_.D), 0);
        x[i] = 1;
        e.push_back(x);
    }
    return intern(span(e));
}

const std::vector<std::vector<int>>& Geometry::isotropic_subspaces()
{
    if (isotropic_ready_)
        return isotropic_;
    const int D = cfg_.D, q = cfg_.q;
    const int top = D / 2;
    isotropic_.assign(static_cast<std::size_t>(top + 1), {});
    isotropic_[0].push_back(zero_id());
    std::size_t budget = 0;
    for (int k = 0; k < top; ++k) {
        std::unordered_map<int, bool> seen;
        for (int uid : isotropic_[k]) {
            const Subspace u = table_[uid];
            const auto ub = basis(u);
            const auto pb = basis(perp(u));
            // complement of U inside U^perp
            std::vector<Vec> comp;
            std::vector<Vec> acc = ub;
            int r = u.dim;
            for (const auto& b : pb) {
                acc.push_back(b);
                int r2 = rank(acc);
                if (r2 > r) {
                    comp.push_back(b);
                    r = r2;
                } else {
                    acc.pop_back();
                }
            }
            const int c = static_cast<int>(comp.size());
            // normalized coefficient vectors: first nonzero entry equal to 1
            std::vector<int> coef(static_cast<std::size_t>(c), 0);
            for (int lead = 0; lead < c; ++lead) {
                std::fill(coef.begin(), coef.end(), 0);
                coef[lead] = 1;
                for (;;) {
                    Vec w(static_cast<std::size_t>(D), 0);
                    for (int i = 0; i < c; ++i)
                        if (coef[i])
                            for (int t = 0; t < D; ++t)
                                w[t] = add(w[t], mul(coef[i], comp[i][t]));
                    if (form(w, w) == 0) {
                        auto rows = ub;
                        rows.push_back(w);
                        const int id = intern(span(rows));
                        if (!seen.count(id)) {
                            seen.emplace(id, true);
                            isotropic_[k + 1].push_back(id);
                            if (++budget > kMaxFlags)
                                throw ScaleGuard("oracle: too many isotropic subspaces");
                        }
                    }
                    int p = c - 1;
                    while (p > lead && ++coef[p] == q)
                        coef[p--] = 0;
                    if (p == lead)
                        break;
                }
            }
        }
        std::sort(isotropic_[k + 1].begin(), isotropic_[k + 1].end());
    }
    isotropic_ready_ = true;
    return isotropic_;
}

// ---- flags ----------------------------------------------------------------

std::vector<Flag> enumerate_flags(Geometry& g, int L, FlagShape shape)
{
    const int D = g.D();
    if (shape == FlagShape::Complete && L != D)
        throw std::invalid_argument("complete flags need L = D");
    const int m = L / 2;
    const auto& iso = g.isotropic_subspaces();
    const int maxdim = static_cast<int>(iso.size()) - 1;
    std::vector<int> all;
    for (const auto& level : iso)
        all.insert(all.end(), level.begin(), level.end());

    auto dim_ok = [&](int pos, int dim) {
        if (shape == FlagShape::Complete)
            return dim == pos;
        if (pos == m) {
            if (L % 2 == 0 && 2 * dim != D)
                return false;
            if (shape == FlagShape::TopMaximal && dim != maxdim)
                return false;
        }
        return true;
    };

    std::vector<Flag> out;
    std::vector<int> chain(static_cast<std::size_t>(m + 1), g.zero_id());
    std::function<void(int)> dfs = [&](int pos) {
        if (pos > m) {
            Flag f;
            f.chain.assign(static_cast<std::size_t>(L + 1), 0);
            for (int i = 0; i <= m; ++i) {
                f.chain[i] = chain[i];
                f.chain[L - i] = g.perp_id(chain[i]);
            }
            out.push_back(std::move(f));
            if (out.size() > kMaxFlags)
                throw ScaleGuard("oracle: flag enumeration exceeds the scale guard");
            return;
        }
        const int prev = chain[pos - 1];
        const int pd = g.subspace(prev).dim;
        for (int id : all) {
            const int dd = g.subspace(id).dim;
            if (dd < pd || !dim_ok(pos, dd))
                continue;
            if (shape == FlagShape::Complete && dd != pd + 1)
                continue;
            if (!g.contains(id, prev))
                continue;
            chain[pos] = id;
            dfs(pos + 1);
        }
    };
    if (m == 0) {
        Flag f;
        f.chain = {g.zero_id(), g.whole_id()};
        if (L == 1)
            out.push_back(f);
        return out;
    }
    dfs(1);
    return out;
}

std::vector<int> flag_weight(Geometry& g, const Flag& f)
{
    std::vector<int> w;
    for (std::size_t i = 1; i < f.chain.size(); ++i)
        w.push_back(g.subspace(f.chain[i]).dim - g.subspace(f.chain[i - 1]).dim);
    return w;
}

RectMatrix relative_position(Geometry& g, const Flag& f, const Flag& h)
{
    const int L1 = static_cast<int>(f.chain.size()) - 1;
    const int L2 = static_cast<int>(h.chain.size()) - 1;
    std::vector<std::vector<int>> I(static_cast<std::size_t>(L1 + 1), std::vector<int>(static_cast<std::size_t>(L2 + 1), 0));
    for (int i = 1; i <= L1; ++i)
        for (int j = 1; j <= L2; ++j)
            I[i][j] = g.intersect_dim(f.chain[i], h.chain[j]);
    RectMatrix a;
    a.rows = L1;
    a.cols = L2;
    a.data.assign(static_cast<std::size_t>(L1 * L2), 0);
    for (int i = 1; i <= L1; ++i)
        for (int j = 1; j <= L2; ++j)
            a.at(i, j) = I[i][j] - I[i - 1][j] - I[i][j - 1] + I[i - 1][j - 1];
    return a;
}

ThetaMatrix as_theta(const RectMatrix& m)
{
    if (m.rows != m.cols || m.rows % 2 == 0)
        throw std::invalid_argument("as_theta: not an odd square matrix");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.rows));
    for (int i = 1; i <= m.rows; ++i)
        for (int j = 1; j <= m.cols; ++j)
            rows[i - 1].push_back(m(i, j));
    return ThetaMatrix::from_rows((m.rows - 1) / 2, rows);
}

bool hecke_related(const Flag& f, const Flag& h, int j)
{
    const int m = (static_cast<int>(f.chain.size()) - 1) / 2;
    for (int i = 1; i <= m; ++i) {
        const bool same = f.chain[i] == h.chain[i];
        if ((i == j) == same)
            return false;
    }
    return true;
}

Word word_of_position(const RectMatrix& m)
{
    const int d = m.cols / 2;
    Word w;
    for (int c = 1; c <= d; ++c) {
        int r = 0;
        for (int i = 1; i <= m.rows; ++i)
            if (m(i, c) == 1)
                r = i;
        w.push_back(r);
    }
    return w;
}

// ---- counting -------------------------------------------------------------

namespace {

using Bucket = std::map<std::vector<int>, std::vector<std::size_t>>;

Bucket by_weight(Geometry& g, const std::vector<Flag>& flags)
{
    Bucket b;
    for (std::size_t i = 0; i < flags.size(); ++i)
        b[flag_weight(g, flags[i])].push_back(i);
    return b;
}

struct Reps {
    std::size_t first = 0, second = 0;
    bool has_second = false;
    long long count = 0;
};

}  // namespace

ConvolutionTable convolution_table(Geometry& g, const std::vector<Flag>& flags)
{
    ConvolutionTable t;
    const auto buckets = by_weight(g, flags);
    // orbit representatives (f1 fixed per weight class)
    std::map<RectMatrix, std::pair<std::size_t, Reps>> reps;
    for (const auto& [mu, fs] : buckets) {
        const std::size_t f1 = fs.front();
        for (const auto& [nu, hs] : buckets)
            for (std::size_t f2 : hs) {
                auto a = relative_position(g, flags[f1], flags[f2]);
                auto& r = reps[a];
                if (r.second.count == 0) {
                    r.first = f1;
                    r.second.first = f2;
                } else if (!r.second.has_second) {
                    r.second.second = f2;
                    r.second.has_second = true;
                }
                ++r.second.count;
            }
        (void)mu;
    }
    for (const auto& [a, rr] : reps) {
        const auto& [f1, r] = rr;
        t.orbit_sizes[a] = r.count * static_cast<long long>(buckets.at(flag_weight(g, flags[f1])).size());
        auto count_with = [&](std::size_t f2) {
            std::map<std::pair<RectMatrix, RectMatrix>, long long> c;
            for (std::size_t f = 0; f < flags.size(); ++f)
                ++c[{relative_position(g, flags[f1], flags[f]), relative_position(g, flags[f], flags[f2])}];
            return c;
        };
        auto c1 = count_with(r.first);
        for (const auto& [k, v] : c1)
            t.counts[{a, k.first, k.second}] = v;
        if (r.has_second && count_with(r.second) != c1)
            t.representative_independent = false;
    }
    return t;
}

ActionTable schur_action_table(Geometry& g, const std::vector<Flag>& xflags,
                               const std::vector<Flag>& yflags, const std::vector<RectMatrix>& only_a)
{
    ActionTable t;
    const auto xb = by_weight(g, xflags);
    std::map<RectMatrix, std::pair<std::size_t, Reps>> reps;
    for (const auto& [mu, fs] : xb) {
        const std::size_t v = fs.front();
        for (std::size_t h = 0; h < yflags.size(); ++h) {
            auto r = relative_position(g, xflags[v], yflags[h]);
            auto& e = reps[r];
            if (e.second.count == 0) {
                e.first = v;
                e.second.first = h;
            } else if (!e.second.has_second) {
                e.second.second = h;
                e.second.has_second = true;
            }
            ++e.second.count;
        }
        (void)mu;
    }
    auto wanted = [&](const RectMatrix& a) {
        return only_a.empty() || std::find(only_a.begin(), only_a.end(), a) != only_a.end();
    };
    for (const auto& [rp, e] : reps) {
        const auto& [v, r] = e;
        auto count_with = [&](std::size_t h) {
            std::map<std::pair<RectMatrix, RectMatrix>, long long> c;
            for (std::size_t w = 0; w < xflags.size(); ++w) {
                auto a = relative_position(g, xflags[v], xflags[w]);
                if (!wanted(a))
                    continue;
                ++c[{a, relative_position(g, xflags[w], yflags[h])}];
            }
            return c;
        };
        auto c1 = count_with(r.first);
        for (const auto& [k, val] : c1)
            t.counts[{rp, k.first, k.second}] = val;
        if (r.has_second && count_with(r.second) != c1)
            t.representative_independent = false;
    }
    return t;
}

HeckeTable hecke_table(Geometry& g, const std::vector<Flag>& xflags, const std::vector<Flag>& yflags)
{
    HeckeTable t;
    const int d = (static_cast<int>(yflags.front().chain.size()) - 1) / 2;
    const auto xb = by_weight(g, xflags);
    std::map<RectMatrix, std::pair<std::size_t, Reps>> reps;
    for (const auto& [mu, fs] : xb) {
        const std::size_t v = fs.front();
        for (std::size_t h = 0; h < yflags.size(); ++h) {
            auto r = relative_position(g, xflags[v], yflags[h]);
            auto& e = reps[r];
            if (e.second.count == 0) {
                e.first = v;
                e.second.first = h;
            } else if (!e.second.has_second) {
                e.second.second = h;
                e.second.has_second = true;
            }
            ++e.second.count;
        }
        (void)mu;
    }
    for (const auto& [rp, e] : reps) {
        const auto& [v, r] = e;
        for (int j = 1; j <= d; ++j) {
            auto count_with = [&](std::size_t h) {
                std::map<RectMatrix, long long> c;
                for (std::size_t h2 = 0; h2 < yflags.size(); ++h2)
                    if (hecke_related(yflags[h2], yflags[h], j))
                        ++c[relative_position(g, xflags[v], yflags[h2])];
                return c;
            };
            auto c1 = count_with(r.first);
            for (const auto& [k, val] : c1)
                t.counts[{rp, k, j}] = val;
            if (r.has_second && count_with(r.second) != c1)
                t.representative_independent = false;
        }
    }
    return t;
}

long long fiber_count(Geometry& g, const std::vector<Flag>& flags, const ThetaMatrix& a)
{
    const auto co = a.co();
    const ThetaMatrix ta = a.transpose();
    const Flag* base = nullptr;
    for (const auto& f : flags)
        if (flag_weight(g, f) == co) {
            base = &f;
            break;
        }
    if (!base)
        throw std::invalid_argument("fiber_count: no flag of weight co(A)");
    long long c = 0;
    for (const auto& f : flags) {
        auto r = relative_position(g, *base, f);
        if (r.rows == ta.N() && as_theta(r) == ta)
            ++c;
    }
    return c;
}

Laurent interpolate_in_v2(const std::vector<std::pair<long, long long>>& samples, int degree)
{
    if (static_cast<int>(samples.size()) < degree + 1)
        throw std::invalid_argument("interpolate: not enough samples");
    // Newton divided differences on the first degree+1 points
    const int k = degree + 1;
    std::vector<mpq_class> xs, dd;
    for (int i = 0; i < k; ++i) {
        xs.emplace_back(samples[i].first);
        dd.emplace_back(mpz_class(std::to_string(samples[i].second)));
    }
    for (int j = 1; j < k; ++j)
        for (int i = k - 1; i >= j; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    // expand to monomial coefficients
    std::vector<mpq_class> poly(1, dd[k - 1]);
    for (int i = k - 2; i >= 0; --i) {
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t + 1] += poly[t];
            next[t] -= poly[t] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    auto eval = [&](long x) {
        mpq_class acc(0);
        for (auto it = poly.rbegin(); it != poly.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    };
    for (const auto& [x, y] : samples)
        if (eval(x) != mpq_class(mpz_class(std::to_string(y))))
            throw InterpolationInconsistent("interpolation disagrees with an extra sample");
    std::vector<Laurent::Term> terms;
    for (std::size_t t = 0; t < poly.size(); ++t) {
        poly[t].canonicalize();
        if (poly[t].get_den() != 1)
            throw InterpolationInconsistent("non-integral interpolated coefficient");
        if (poly[t] != 0)
            terms.emplace_back(static_cast<int>(2 * t), poly[t].get_num().get_si());
    }
    return Laurent::from_terms(std::move(terms));
}

}  // namespace qschur::oracle
