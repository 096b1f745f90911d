#include "qschur/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qschur {

ThetaMatrix::ThetaMatrix(int n) : n_(n), a_(static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)), 0)
{
    if (n < 0)
        throw std::invalid_argument("ThetaMatrix: negative rank");
}

bool is_theta_symmetric(int n, const std::vector<std::vector<int>>& rows)
{
    const int N = 2 * n + 1;
    if (static_cast<int>(rows.size()) != N)
        return false;
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != N)
            return false;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (rows[i][j] != rows[N - 1 - i][N - 1 - j])
                return false;
    return true;
}

ThetaMatrix ThetaMatrix::from_rows(int n, const std::vector<std::vector<int>>& rows)
{
    if (!is_theta_symmetric(n, rows))
        throw std::invalid_argument("matrix is not a theta-symmetric (2n+1)x(2n+1) matrix");
    ThetaMatrix m(n);
    const int N = m.N();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            m.a_[m.idx(i, j)] = rows[i - 1][j - 1];
    return m;
}

ThetaMatrix ThetaMatrix::diag(const Weight& lambda)
{
    const int N = static_cast<int>(lambda.size());
    if (N % 2 == 0)
        throw std::invalid_argument("weight of even length");
    ThetaMatrix m((N - 1) / 2);
    for (int i = 1; i <= N; ++i) {
        if (lambda[i - 1] != lambda[N - i])
            throw std::invalid_argument("weight is not mirror symmetric");
        m.a_[m.idx(i, i)] = lambda[i - 1];
    }
    return m;
}

ThetaMatrix ThetaMatrix::e_theta(int n, int i, int j)
{
    ThetaMatrix m(n);
    m.add_theta(i, j, 1);
    return m;
}

void ThetaMatrix::set(int i, int j, int value)
{
    const int N = this->N();
    if (i < 1 || i > N || j < 1 || j > N)
        throw std::out_of_range("ThetaMatrix index");
    a_[idx(i, j)] = value;
    a_[idx(N + 1 - i, N + 1 - j)] = value;
}

void ThetaMatrix::add_theta(int i, int j, int k)
{
    const int N = this->N();
    if (i < 1 || i > N || j < 1 || j > N)
        throw std::out_of_range("E^theta index");
    a_[idx(i, j)] += k;
    a_[idx(N + 1 - i, N + 1 - j)] += k;  // same slot at the center: adds 2k
}

Weight ThetaMatrix::ro() const
{
    const int N = this->N();
    Weight r(static_cast<std::size_t>(N), 0);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            r[i - 1] += a_[idx(i, j)];
    return r;
}

Weight ThetaMatrix::co() const
{
    const int N = this->N();
    Weight c(static_cast<std::size_t>(N), 0);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            c[j - 1] += a_[idx(i, j)];
    return c;
}

ThetaMatrix ThetaMatrix::transpose() const
{
    ThetaMatrix t(n_);
    const int N = this->N();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            t.a_[t.idx(j, i)] = a_[idx(i, j)];
    return t;
}

bool ThetaMatrix::is_diagonal() const
{
    const int N = this->N();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && a_[idx(i, j)] != 0)
                return false;
    return true;
}

long long ThetaMatrix::total() const
{
    return std::accumulate(a_.begin(), a_.end(), 0LL);
}

std::vector<int> ThetaMatrix::key() const
{
    const int N = this->N();
    std::vector<int> k;
    k.reserve(static_cast<std::size_t>(N * (N - 1) / 2 + n_ + 1));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            k.push_back(a_[idx(i, j)]);
    for (int i = 1; i <= n_ + 1; ++i)
        k.push_back(a_[idx(i, i)]);
    return k;
}

bool operator<(const ThetaMatrix& x, const ThetaMatrix& y)
{
    if (x.n_ != y.n_)
        return x.n_ < y.n_;
    const int N = x.N();
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            int p = x(i, j), q = y(i, j);
            if (p != q)
                return p < q;
        }
    for (int i = 1; i <= x.n_ + 1; ++i) {
        int p = x(i, i), q = y(i, i);
        if (p != q)
            return p < q;
    }
    return false;
}

std::size_t ThetaMatrix::hash() const
{
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
    for (int x : a_)
        h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 0x100000001b3ULL;
    return h;
}

std::string ThetaMatrix::str() const
{
    std::ostringstream os;
    const int N = this->N();
    os << '[';
    for (int i = 1; i <= N; ++i) {
        os << (i > 1 ? ",[" : "[");
        for (int j = 1; j <= N; ++j)
            os << (j > 1 ? "," : "") << a_[idx(i, j)];
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<std::vector<int>> ThetaMatrix::rows() const
{
    const int N = this->N();
    std::vector<std::vector<int>> r(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N)));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            r[i - 1][j - 1] = a_[idx(i, j)];
    return r;
}

// ---- sets -----------------------------------------------------------------

namespace {

bool offdiag_nonneg(const ThetaMatrix& a)
{
    const int N = a.N();
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && a(i, j) < 0)
                return false;
    return true;
}

bool center_row_col_trivial(const ThetaMatrix& a)
{
    const int c = a.center();
    for (int j = 1; j <= a.N(); ++j)
        if (j != c && (a(c, j) != 0 || a(j, c) != 0))
            return false;
    return a(c, c) == 1;
}

}  // namespace

bool member(const ThetaMatrix& a, const SetTag& tag)
{
    if (a.n() != tag.n)
        return false;
    const int c = a.center();
    const bool center_odd = (a(c, c) % 2) != 0;
    switch (tag.kind) {
    case SetKind::Xi:
    case SetKind::IXi: {
        for (int i = 1; i <= a.N(); ++i)
            for (int j = 1; j <= a.N(); ++j)
                if (a(i, j) < 0)
                    return false;
        if (a.total() != 2LL * tag.d + 1)
            return false;
        return tag.kind == SetKind::Xi || center_row_col_trivial(a);
    }
    case SetKind::TildeXi:
        return offdiag_nonneg(a) && center_odd;
    case SetKind::TildeXiGt:
        return offdiag_nonneg(a) && center_odd && a(c, c) > 0;
    case SetKind::TildeXiLt:
        return offdiag_nonneg(a) && center_odd && a(c, c) < 0;
    case SetKind::ITildeXi:
        return offdiag_nonneg(a) && center_row_col_trivial(a);
    case SetKind::Pi:
    case SetKind::IPi:
        return false;  // Pi lives on N x D matrices, see word_of_pi
    }
    return false;
}

bool is_finite(const SetTag& tag)
{
    return tag.kind == SetKind::Xi || tag.kind == SetKind::IXi || tag.kind == SetKind::Pi ||
           tag.kind == SetKind::IPi;
}

long long binomial(long long a, long long b)
{
    if (b < 0 || a < b)
        return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i)
        r = r * (a - b + i) / i;
    return r;
}

namespace {

// free coordinates of Xi_d / iXi_d in key order; each contributes its value
// once to the budget sum_upper + sum_diag(1..n) + (center-1)/2 = d
struct FreeSlot {
    int i, j;
    bool center;
};

void fill_slots(std::vector<FreeSlot>& slots, std::size_t pos, int budget, ThetaMatrix& m,
                std::vector<ThetaMatrix>& out)
{
    if (pos == slots.size()) {
        if (budget == 0)
            out.push_back(m);
        return;
    }
    const auto& s = slots[pos];
    if (s.center) {
        // last slot: it absorbs the remaining budget
        m.set(s.i, s.j, 2 * budget + 1);
        out.push_back(m);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        m.set(s.i, s.j, v);
        fill_slots(slots, pos + 1, budget - v, m, out);
    }
    m.set(s.i, s.j, 0);
}

}  // namespace

std::vector<ThetaMatrix> enumerate(const SetTag& tag)
{
    if (tag.kind != SetKind::Xi && tag.kind != SetKind::IXi)
        throw std::invalid_argument("enumerate: not a finite matrix set");
    if (tag.d < 0)
        throw std::invalid_argument("enumerate: negative d");
    const int n = tag.n, N = 2 * n + 1, c = n + 1;
    const bool iota = tag.kind == SetKind::IXi;
    std::vector<FreeSlot> slots;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            if (iota && (i == c || j == c))
                continue;
            slots.push_back({i, j, false});
        }
    for (int i = 1; i <= n; ++i)
        slots.push_back({i, i, false});
    std::vector<ThetaMatrix> out;
    ThetaMatrix m(n);
    if (iota) {
        m.set(c, c, 1);
        fill_slots(slots, 0, tag.d, m, out);
    } else {
        slots.push_back({c, c, true});
        fill_slots(slots, 0, tag.d, m, out);
    }
    return out;
}

std::vector<Word> enumerate_words(const SetTag& tag)
{
    if (tag.kind != SetKind::Pi && tag.kind != SetKind::IPi)
        throw std::invalid_argument("enumerate_words: not a word set");
    const int N = 2 * tag.n + 1;
    std::vector<int> letters;
    for (int r = 1; r <= N; ++r)
        if (tag.kind == SetKind::Pi || r != tag.n + 1)
            letters.push_back(r);
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(tag.d), 0);
    std::vector<std::size_t> pos(static_cast<std::size_t>(tag.d), 0);
    if (tag.d == 0)
        return {Word{}};
    for (;;) {
        for (int c = 0; c < tag.d; ++c)
            w[c] = letters[pos[c]];
        out.push_back(w);
        int c = tag.d - 1;
        while (c >= 0 && ++pos[c] == letters.size())
            pos[c--] = 0;
        if (c < 0)
            break;
    }
    return out;
}

// ---- words and Pi ---------------------------------------------------------

Word extend_word(int n, const Word& w)
{
    const int d = static_cast<int>(w.size());
    const int N = 2 * n + 1, D = 2 * d + 1;
    Word r(static_cast<std::size_t>(D));
    for (int c = 1; c <= d; ++c) {
        if (w[c - 1] < 1 || w[c - 1] > N)
            throw std::out_of_range("word letter out of range");
        r[c - 1] = w[c - 1];
        r[D - c] = N + 1 - w[c - 1];
    }
    r[d] = n + 1;
    return r;
}

RectMatrix pi_of_word(int n, const Word& w)
{
    const Word r = extend_word(n, w);
    RectMatrix b;
    b.rows = 2 * n + 1;
    b.cols = static_cast<int>(r.size());
    b.data.assign(static_cast<std::size_t>(b.rows * b.cols), 0);
    for (int c = 1; c <= b.cols; ++c)
        b.at(r[c - 1], c) = 1;
    return b;
}

Word word_of_pi(int n, const RectMatrix& b)
{
    const int N = 2 * n + 1;
    if (b.rows != N || b.cols % 2 == 0)
        throw std::invalid_argument("word_of_pi: bad shape");
    const int D = b.cols, d = (D - 1) / 2;
    Word r(static_cast<std::size_t>(D), 0);
    for (int c = 1; c <= D; ++c) {
        int found = 0;
        for (int i = 1; i <= N; ++i) {
            int x = b(i, c);
            if (x != 0 && x != 1)
                throw std::invalid_argument("word_of_pi: entries must be 0/1");
            if (x == 1) {
                if (found)
                    throw std::invalid_argument("word_of_pi: column with two ones");
                found = i;
            }
        }
        if (!found)
            throw std::invalid_argument("word_of_pi: empty column");
        r[c - 1] = found;
    }
    for (int c = 1; c <= D; ++c)
        if (r[c - 1] + r[D - c] != N + 1)
            throw std::invalid_argument("word_of_pi: not theta-symmetric");
    return Word(r.begin(), r.begin() + d);
}

Weight word_weight(int n, const Word& w)
{
    const Word r = extend_word(n, w);
    Weight lam(static_cast<std::size_t>(2 * n + 1), 0);
    for (int x : r)
        ++lam[x - 1];
    return lam;
}

// ---- orbit statistics -----------------------------------------------------

long long dim_orbit(const ThetaMatrix& a)
{
    const int N = a.N(), n = a.n();
    long long s = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const long long aij = a(i, j);
            if (aij == 0)
                continue;
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    const bool lt = i < k || (i >= k && j < l);
                    if (!lt)
                        continue;
                    if (i + k < N + 1 || (i + k == N + 1 && j + l < N + 1))
                        s += aij * a(k, l);
                }
            if (i < n + 1 || j < n + 1)
                s += aij * (aij - 1) / 2;
        }
    return s;
}

long long dim_image(const ThetaMatrix& a)
{
    return dim_orbit(ThetaMatrix::diag(a.ro()));
}

long long d_lower(const ThetaMatrix& a)
{
    return dim_orbit(a) - dim_image(a);
}

long long d_lower_closed(const ThetaMatrix& a)
{
    const int N = a.N(), n = a.n();
    long long s = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const long long aij = a(i, j);
            if (aij == 0)
                continue;
            for (int k = 1; k < i; ++k)
                if (i + k < N + 1)
                    for (int l = j + 1; l <= N; ++l)
                        s += aij * a(k, l);
            for (int l = j + 1; l <= N; ++l)
                if (i < n + 1 || j < N + 1 - l)
                    s += aij * a(i, l);
            if (i >= n + 1 && j < n + 1)
                s += aij * (aij - 1) / 2;
        }
    return s;
}

// ---- orders ---------------------------------------------------------------

namespace {

// S(i,j) = sum_{r<=i, s>=j} a_rs for i<j, stored at [i][j]
std::vector<std::vector<long long>> upper_partial_sums(const ThetaMatrix& a)
{
    const int N = a.N();
    std::vector<std::vector<long long>> S(static_cast<std::size_t>(N + 2),
                                          std::vector<long long>(static_cast<std::size_t>(N + 2), 0));
    for (int i = 1; i <= N; ++i)
        for (int j = N; j >= 1; --j)
            S[i][j] = a(i, j) + S[i - 1][j] + S[i][j + 1] - S[i - 1][j + 1];
    return S;
}

}  // namespace

bool preceq(const ThetaMatrix& a, const ThetaMatrix& b)
{
    if (a.n() != b.n())
        return false;
    const auto Sa = upper_partial_sums(a), Sb = upper_partial_sums(b);
    const int N = a.N();
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (Sa[i][j] > Sb[i][j])
                return false;
    return true;
}

bool sqsubseteq(const ThetaMatrix& a, const ThetaMatrix& b)
{
    return a.n() == b.n() && a.ro() == b.ro() && a.co() == b.co() && preceq(a, b);
}

long long order_height(const ThetaMatrix& a)
{
    const auto S = upper_partial_sums(a);
    const int N = a.N();
    long long h = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            h += S[i][j];
    return h;
}

namespace {

struct DownSetSearch {
    const ThetaMatrix& top;
    const SetTag& tag;
    Weight ro, co;
    std::vector<std::vector<long long>> bound;  // partial sums of top
    std::vector<std::vector<long long>> S;      // partial sums of candidate
    ThetaMatrix cur;
    std::vector<ThetaMatrix> out;
    bool iota, nonneg_diag;
    int N, n, c;

    DownSetSearch(const ThetaMatrix& a, const SetTag& t)
        : top(a), tag(t), ro(a.ro()), co(a.co()), bound(upper_partial_sums(a)), cur(a.n())
    {
        N = a.N();
        n = a.n();
        c = n + 1;
        S.assign(static_cast<std::size_t>(N + 2), std::vector<long long>(static_cast<std::size_t>(N + 2), 0));
        iota = tag.kind == SetKind::IXi || tag.kind == SetKind::ITildeXi;
        nonneg_diag = tag.kind == SetKind::Xi || tag.kind == SetKind::IXi;
    }

    // off-diagonal row sum check for rows whose entries are all known
    bool row_ok(int i) const
    {
        long long off = 0;
        for (int j = 1; j <= N; ++j)
            if (j != i)
                off += cur(i, j);
        const long long diag = ro[i - 1] - off;
        if (nonneg_diag && diag < (i == c ? 1 : 0))
            return false;
        if (tag.kind == SetKind::TildeXiGt && i == c && diag <= 0)
            return false;
        if (tag.kind == SetKind::TildeXiLt && i == c && diag >= 0)
            return false;
        return true;
    }

    void finish()
    {
        ThetaMatrix m = cur;
        for (int i = 1; i <= c; ++i) {
            long long off = 0;
            for (int j = 1; j <= N; ++j)
                if (j != i)
                    off += m(i, j);
            m.set(i, i, static_cast<int>(ro[i - 1] - off));
        }
        if (m.co() != co || m.ro() != ro)
            return;
        if (!member(m, tag))
            return;
        out.push_back(m);
    }

    void go(int i, int j)
    {
        if (j <= i) {
            // row i complete; rows >= c have every off-diagonal entry known
            if (i >= c && !row_ok(i))
                return;
            if (i == c && !row_ok(c))
                return;
            if (i + 1 >= N) {
                for (int r = 1; r < c; ++r)
                    if (!row_ok(r))
                        return;
                finish();
                return;
            }
            go(i + 1, N);
            return;
        }
        const long long known = S[i - 1][j] + (S[i][j + 1] - S[i - 1][j + 1]);
        long long hi = bound[i][j] - known;
        if (iota && (i == c || j == c))
            hi = std::min<long long>(hi, 0);
        for (long long v = 0; v <= hi; ++v) {
            cur.set(i, j, static_cast<int>(v));
            S[i][j] = known + v;
            go(i, j - 1);
        }
        cur.set(i, j, 0);
        S[i][j] = 0;
    }
};

}  // namespace

std::vector<ThetaMatrix> down_set(const ThetaMatrix& a, const SetTag& tag)
{
    if (tag.kind == SetKind::Pi || tag.kind == SetKind::IPi)
        throw std::invalid_argument("down_set: not a matrix set");
    DownSetSearch s(a, tag);
    if (s.N == 1) {
        if (member(a, tag))
            s.out.push_back(a);
        return s.out;
    }
    s.go(1, s.N);
    std::sort(s.out.begin(), s.out.end());
    return s.out;
}

}  // namespace qschur
