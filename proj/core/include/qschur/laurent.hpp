#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qschur {

/*
  Laurent polynomials in one variable v with integer coefficients.

  Terms are kept sorted by exponent with no zero coefficients stored, so
  two equal polynomials always have identical representations.
*/
class Laurent {
public:
    using Term = std::pair<int, std::int64_t>;

    Laurent() = default;
    Laurent(std::int64_t c);  // NOLINT: implicit constant promotion is intended
    static Laurent monomial(int exp, std::int64_t coeff = 1);
    static Laurent from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    int min_exp() const;
    int max_exp() const;
    std::int64_t coeff(int exp) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent operator-() const;

    Laurent shifted(int k) const;  // multiply by v^k
    Laurent scaled(std::int64_t c) const;
    Laurent bar() const;           // v -> v^{-1}

    // exact division; throws InexactDivision if the remainder is nonzero
    Laurent divide_exact(const Laurent& d) const;

    // parts by exponent sign
    Laurent negative_part() const;  // exponents < 0
    bool in_neg_powers() const;     // all exponents < 0
    bool in_nonneg_coeffs() const;  // all coefficients >= 0

    std::string str() const;

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

private:
    std::vector<Term> terms_;
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);

struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OddExponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const Laurent& v_one() { static const Laurent one(1); return one; }

// balanced quantum integer (v^r - v^-r)/(v - v^-1)
Laurent qint(int r);
// balanced factorial [[r]]! = [[r]] ... [[1]]
Laurent qfactorial(int r);
// [a] = (v^{2a}-1)/(v^2-1)
Laurent gauss_bracket(int a);
// [a; b] = prod_{i=1..b} (v^{2(a-i+1)}-1)/(v^{2i}-1), any integer a, b >= 0
Laurent gauss_binom(int a, int b);
Laurent bar_gauss_binom(int a, int b);

// Value at v = sqrt(q). Strict mode requires even exponents.
mpq_class eval_q(const Laurent& p, long q);
// Lenient mode: value x + y*sqrt(q)
std::pair<mpq_class, mpq_class> eval_q_sqrt(const Laurent& p, long q);
// Value at a rational point v = x.
mpq_class eval_at(const Laurent& p, const mpq_class& x);

}  // namespace qschur
