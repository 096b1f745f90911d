#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qschur/algebra.hpp"

namespace qschur {

// ---- weights --------------------------------------------------------------

// lambda -/+ alpha_i: moves one unit (and its mirror) between positions i and i+1
Weight minus_alpha(const Weight& lambda, int i);
Weight plus_alpha(const Weight& lambda, int i);

// ---- left multiplication by weight-local generators ------------------------

// e_i x, f_i x, t x where the generator is taken at the row weight of each term
Element left_e(const Algebra& alg, int i, const Element& x, int r = 1);
Element left_f(const Algebra& alg, int i, const Element& x, int r = 1);
Element left_t(const Algebra& alg, const Element& x);  // through the general product

// ---- t-calculus (SchurI, Ki) ---------------------------------------------

// closed sum for t [D_{ro A}] * [A]
Element t_mul(const Algebra& alg, const Element& x);
// t [D_{ro A}] * [A] computed as upper * lower * [A] - [[lambda_n - lambda_{n+1}]] [A],
// with both twin factors taken at the row weight of A
Element t_mul_composed(const Algebra& alg, const Element& x);
// t^k [D_lambda] by iterated closed sums
Element t_power(const Algebra& alg, int k, const Weight& lambda);

// ---- maps between the algebras --------------------------------------------

// [A] -> [A] if A is a label of the target, else 0
Element phi(const Algebra& target, const Element& x);
// true iff every term has negative center
bool in_ideal_J(const Element& x);
// Kj -> KjGreater (or Ki when the blocks have center weight 1): drops J
Element quotient_map(const Algebra& target, const Element& x);
// Kj_1 -> Ki: requires ro/co centers 1, drops J_1
Element chi_map(const Algebra& ki, const Element& x);

// ---- stabilization ---------------------------------------------------------

enum class Shift { Full, Breve };  // A + pI  or  A + p(I - E_{n+1,n+1})

ThetaMatrix shifted(const ThetaMatrix& a, Shift s, int p);

struct FitUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One fitted structure constant: the coefficient of [Z] as a Laurent
// polynomial in w whose coefficients lie in Q(v). They are stored over the
// common denominator of the interpolation nodes.
struct FittedConstant {
    ThetaMatrix z;                   // unshifted label
    std::map<int, Laurent> numer;    // power of w -> numerator in v
    Laurent denom = Laurent(1);
    std::vector<Laurent> samples;    // sampled coefficients, one per shift
    // value at w = v^e; exact, throws InexactDivision
    Laurent value(int e) const;
    Laurent at_w1() const { return value(0); }
};

struct StabilizationFit {
    Shift shift = Shift::Full;
    std::vector<int> samples;  // even shifts p, increasing
    int degree_bound = 0;      // powers of w range over [-bound, bound]
    std::vector<FittedConstant> constants;
    // w = 1 evaluation as an element of the stabilized algebra
    Element limit;
};

// exponent e with w = v^e at shift p: -2p for the full shift, -p for the breve one
int shift_exponent(Shift s, int p);

// Computes [A_1 + shift] * ... * [A_f + shift] in the finite Schur algebras
// for 2 * degree_bound + 1 + extra_samples even shifts, interpolates every
// coefficient as a Laurent polynomial in w with exponents in
// [-degree_bound, degree_bound] and requires the extra samples to be
// reproduced (FitUnstable otherwise). A negative degree_bound selects the
// default: twice the total off-diagonal mass.
StabilizationFit stabilization_fit(const std::vector<ThetaMatrix>& factors, Shift shift,
                                   const Algebra& stable_alg, int degree_bound = -1,
                                   int extra_samples = 1);

}  // namespace qschur
