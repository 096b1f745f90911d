#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/matrix.hpp"

namespace qschur {

// Finite Schur algebras (SchurJ on Xi_d, SchurI on iXi_d) and their
// stabilized versions (Kj on tilde Xi, KjGreater on tilde Xi with positive
// center, Ki on the i-labels with center 1).
enum class Family { SchurJ, SchurI, Kj, KjGreater, Ki };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws std::invalid_argument
bool is_finite_family(Family f);

struct Context {
    Family family = Family::SchurJ;
    int n = 1;
    int d = 0;  // meaningful for SchurJ / SchurI only

    friend bool operator==(const Context& a, const Context& b)
    {
        return a.family == b.family && a.n == b.n && (!is_finite_family(a.family) || a.d == b.d);
    }
    friend bool operator!=(const Context& a, const Context& b) { return !(a == b); }
};

SetTag label_tag(const Context& c);
// set in which intermediate products live (generator factors, twin products)
SetTag ambient_tag(const Context& c);

struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadLabel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WeightMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RecursionFailure : std::logic_error {
    using std::logic_error::logic_error;
};

// Finite combination of standard basis symbols [A].
class Element {
public:
    using Map = std::map<ThetaMatrix, Laurent>;

    Element() = default;
    explicit Element(Context ctx) : ctx_(ctx) {}

    const Context& context() const { return ctx_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Laurent coeff(const ThetaMatrix& a) const;

    void add(const ThetaMatrix& a, const Laurent& c);
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;
    Element scaled(const Laurent& c) const;
    Element coeff_bar() const;  // conjugate coefficients only

    // keeps the terms for which keep(A) is true
    template <class Pred>
    Element filtered(Pred keep) const
    {
        Element out(ctx_);
        for (const auto& [a, c] : terms_)
            if (keep(a))
                out.terms_.emplace(a, c);
        return out;
    }

    std::string str() const;

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Context ctx_;
    Map terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Laurent& c, const Element& x);

// Shape of a matrix with respect to the Chevalley-type generators.
struct GenShape {
    enum Kind { Diagonal, Upper, Lower, Other } kind = Other;
    int h = 0;  // index in [1, n]
    int R = 0;  // off-diagonal mass
};
GenShape classify(const ThetaMatrix& g);

// Left multiplication by a generator can be computed two ways in the finite
// families: through the standard-basis formulas or through the e-basis
// formulas followed by renormalization.
enum class Route { Standard, EBasis };

class Algebra {
public:
    explicit Algebra(Context ctx);

    const Context& context() const { return ctx_; }
    SetTag labels() const { return labels_; }
    SetTag ambient() const { return ambient_; }
    bool is_label(const ThetaMatrix& a) const { return member(a, labels_); }

    Element zero() const { return Element(ctx_); }
    Element std(const ThetaMatrix& a) const;
    Element e_basis(const ThetaMatrix& a) const;  // v^{d_A} [A]; finite families only
    // e-basis coordinates of x: coefficient of e_A is v^{-d_A} * coeff of [A]
    Element to_e_coords(const Element& x) const;
    Element from_e_coords(const Element& x) const;

    // [G] * x for G of generator or diagonal shape. Terms of x whose row
    // weight differs from co(G) contribute nothing; mul_gen_strict throws
    // instead.
    Element mul_gen(const ThetaMatrix& g, const Element& x, Route route = Route::Standard) const;
    Element mul_gen_strict(const ThetaMatrix& g, const Element& x,
                           Route route = Route::Standard) const;

    std::vector<ThetaMatrix> monomial_factors(const ThetaMatrix& a) const;
    Element monomial(const ThetaMatrix& a) const;
    // [A] = sum_B N_{B,A} m_B; returned as an element whose keys name m_B
    Element std_in_monomials(const ThetaMatrix& a) const;
    // applies the factors of m_B, right to left, to y
    Element apply_monomial(const ThetaMatrix& b, const Element& y) const;

    Element mul(const Element& x, const Element& y) const;
    Element bar(const Element& x) const;
    Element bar_std(const ThetaMatrix& a) const;
    Element canonical(const ThetaMatrix& a) const;
    Element transpose_anti(const Element& x) const;

    // idempotent [D_lambda]; empty if lambda is not a diagonal label
    Element idempotent(const Weight& lambda) const;

    // ---- generators (finite families) -------------------------------------
    // diagonal labels of the family
    std::vector<Weight> weights() const;
    Element unit() const;
    Element gen_e(int i) const;  // sum of [D - E^th_ii + E^th_{i+1,i}]
    Element gen_f(int i) const;  // sum of [D - E^th_{i+1,i+1} + E^th_{i,i+1}]
    Element gen_d(int a, int sign = +1) const;
    Element gen_t() const;       // SchurI only

    // ---- weight-local generators (all families) --------------------------
    // e_i D_lambda, f_i D_lambda, t D_lambda; zero if the label leaves the set
    Element e_at(int i, const Weight& lambda) const;
    Element f_at(int i, const Weight& lambda) const;
    Element t_at(const Weight& lambda) const;
    // divided powers e_i^{(r)} D_lambda, f_i^{(r)} D_lambda as single symbols
    Element e_pow_at(int i, int r, const Weight& lambda) const;
    Element f_pow_at(int i, int r, const Weight& lambda) const;

    void clear_caches() const;

private:
    Element mul_gen_impl(const ThetaMatrix& g, const GenShape& s, const ThetaMatrix& a,
                         Route route) const;
    void check_label(const ThetaMatrix& a) const;
    void check_context(const Element& x) const;
    bool keep_target(const ThetaMatrix& x) const;

    Context ctx_;
    SetTag labels_;
    SetTag ambient_;

    struct Caches;
    std::shared_ptr<Caches> caches_;
};

}  // namespace qschur
