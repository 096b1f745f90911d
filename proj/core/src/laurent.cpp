#include "qschur/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qschur {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Laurent coefficient overflow (add)");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Laurent coefficient overflow (mul)");
    return r;
}

mpz_class pow_z(long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

}  // namespace

Laurent::Laurent(std::int64_t c)
{
    if (c != 0)
        terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(int exp, std::int64_t coeff)
{
    Laurent r;
    if (coeff != 0)
        r.terms_.emplace_back(exp, coeff);
    return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Laurent r;
    for (const auto& [e, c] : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == e)
            r.terms_.back().second = checked_add(r.terms_.back().second, c);
        else
            r.terms_.emplace_back(e, c);
        if (r.terms_.back().second == 0)
            r.terms_.pop_back();
    }
    return r;
}

bool Laurent::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int Laurent::min_exp() const
{
    if (terms_.empty())
        throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int Laurent::max_exp() const
{
    if (terms_.empty())
        throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().first;
}

std::int64_t Laurent::coeff(int exp) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exp) ? it->second : 0;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    if (o.terms_.empty())
        return *this;
    if (terms_.empty())
        return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first))
            out.push_back(*a++);
        else if (a == ae || b->first < a->first)
            out.push_back(*b++);
        else {
            std::int64_t c = checked_add(a->second, b->second);
            if (c != 0)
                out.emplace_back(a->first, c);
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    return *this += -o;
}

Laurent& Laurent::operator*=(const Laurent& o)
{
    *this = *this * o;
    return *this;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.second = checked_mul(t.second, -1);
    return r;
}

Laurent Laurent::shifted(int k) const
{
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.first += k;
    return r;
}

Laurent Laurent::scaled(std::int64_t c) const
{
    if (c == 0)
        return {};
    Laurent r = *this;
    for (auto& t : r.terms_)
        t.second = checked_mul(t.second, c);
    return r;
}

Laurent Laurent::bar() const
{
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_back(-it->first, it->second);
    return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const
{
    if (d.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (is_zero())
        return {};
    // dense long division from the top degree down
    const int lo = min_exp(), hi = max_exp();
    const int dlo = d.min_exp(), dhi = d.max_exp();
    std::vector<std::int64_t> rem(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [e, c] : terms_)
        rem[static_cast<size_t>(e - lo)] = c;
    const std::int64_t lead = d.terms_.back().second;
    std::vector<Term> quot;
    for (int top = hi; top - lo >= dhi - dlo; --top) {
        std::int64_t c = rem[static_cast<size_t>(top - lo)];
        if (c == 0)
            continue;
        if (c % lead != 0)
            throw InexactDivision("inexact division: " + str() + " / " + d.str());
        std::int64_t qc = c / lead;
        int qe = top - dhi;
        quot.emplace_back(qe, qc);
        for (const auto& [de, dc] : d.terms_)
            rem[static_cast<size_t>(qe + de - lo)] =
                checked_add(rem[static_cast<size_t>(qe + de - lo)], -checked_mul(qc, dc));
    }
    for (auto c : rem)
        if (c != 0)
            throw InexactDivision("inexact division: " + str() + " / " + d.str());
    return from_terms(std::move(quot));
}

Laurent Laurent::negative_part() const
{
    Laurent r;
    for (const auto& t : terms_)
        if (t.first < 0)
            r.terms_.push_back(t);
    return r;
}

bool Laurent::in_neg_powers() const
{
    return terms_.empty() || terms_.back().first < 0;
}

bool Laurent::in_nonneg_coeffs() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second >= 0; });
}

std::string Laurent::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1)
            os << a << "*";
        os << "v";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

Laurent operator+(Laurent a, const Laurent& b)
{
    a += b;
    return a;
}

Laurent operator-(Laurent a, const Laurent& b)
{
    a -= b;
    return a;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    const int lo = a.min_exp() + b.min_exp();
    const int hi = a.max_exp() + b.max_exp();
    std::vector<std::int64_t> acc(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            auto& slot = acc[static_cast<size_t>(ea + eb - lo)];
            slot = checked_add(slot, checked_mul(ca, cb));
        }
    std::vector<Laurent::Term> out;
    for (size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0)
            out.emplace_back(static_cast<int>(i) + lo, acc[i]);
    return Laurent::from_terms(std::move(out));
}

Laurent qint(int r)
{
    // v^{r-1} + v^{r-3} + ... + v^{1-r}, negated for r < 0
    if (r == 0)
        return {};
    int a = r < 0 ? -r : r;
    std::vector<Laurent::Term> t;
    for (int e = 1 - a; e <= a - 1; e += 2)
        t.emplace_back(e, r < 0 ? -1 : 1);
    return Laurent::from_terms(std::move(t));
}

Laurent qfactorial(int r)
{
    Laurent acc(1);
    for (int i = 1; i <= r; ++i)
        acc *= qint(i);
    return acc;
}

Laurent gauss_bracket(int a)
{
    return gauss_binom(a, 1);
}

Laurent gauss_binom(int a, int b)
{
    if (b < 0)
        throw std::domain_error("gauss_binom: negative lower index");
    Laurent num(1), den(1);
    for (int i = 1; i <= b; ++i) {
        num *= Laurent::monomial(2 * (a - i + 1)) - Laurent(1);
        den *= Laurent::monomial(2 * i) - Laurent(1);
    }
    return num.divide_exact(den);
}

Laurent bar_gauss_binom(int a, int b)
{
    return gauss_binom(a, b).bar();
}

mpq_class eval_q(const Laurent& p, long q)
{
    for (const auto& [e, c] : p.terms())
        if (e % 2 != 0)
            throw OddExponent("odd exponent in strict evaluation: " + p.str());
    return eval_q_sqrt(p, q).first;
}

std::pair<mpq_class, mpq_class> eval_q_sqrt(const Laurent& p, long q)
{
    mpq_class even(0), odd(0);
    for (const auto& [e, c] : p.terms()) {
        // v^e = q^{floor(e/2)} * (sqrt q)^{e mod 2}
        int fl = e >= 0 ? e / 2 : -((-e + 1) / 2);
        bool has_root = (e - 2 * fl) != 0;
        mpq_class term(mpz_class(static_cast<long>(c)));
        mpz_class pw = pow_z(q, static_cast<unsigned long>(fl < 0 ? -fl : fl));
        if (fl >= 0)
            term *= pw;
        else
            term /= pw;
        (has_root ? odd : even) += term;
    }
    even.canonicalize();
    odd.canonicalize();
    return {even, odd};
}

mpq_class eval_at(const Laurent& p, const mpq_class& x)
{
    mpq_class acc(0);
    for (const auto& [e, c] : p.terms()) {
        mpq_class t(mpz_class(static_cast<long>(c)));
        mpq_class base = e >= 0 ? x : mpq_class(1) / x;
        int k = e >= 0 ? e : -e;
        mpq_class pw(1);
        for (int i = 0; i < k; ++i)
            pw *= base;
        acc += t * pw;
    }
    acc.canonicalize();
    return acc;
}

}  // namespace qschur
