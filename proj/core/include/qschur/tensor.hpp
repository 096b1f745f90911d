#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qschur/algebra.hpp"
#include "qschur/linalg.hpp"

namespace qschur {

// ---- spaces and elements ----------------------------------------------------

enum class Flavor { E, Tilde, V };  // e-basis, tilde e-basis, tensor v-basis

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);

// T_d (words in [1,N]^d) or its i-version (words avoiding n+1)
struct TensorSpace {
    int n = 1;
    int d = 1;
    bool iota = false;

    int N() const { return 2 * n + 1; }
    bool contains(const Word& w) const;
    std::vector<Word> words() const;  // lexicographic
};

struct TensorElement {
    Flavor flavor = Flavor::E;
    std::map<Word, Laurent> terms;

    static TensorElement basis(const Word& w, Flavor f = Flavor::E);
    bool is_zero() const { return terms.empty(); }
    void add(const Word& w, const Laurent& c);
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement scaled(const Laurent& c) const;
    std::string str() const;

    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.flavor == b.flavor && a.terms == b.terms;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }
};

// ---- Hecke action -------------------------------------------------------------

// x T_j for 1 <= j <= d. The e-basis uses the geometric formulas; the tilde
// and v flavors use the renormalized ones (identical in shape).
TensorElement hecke_act(const TensorSpace& sp, const TensorElement& x, int j);
// x T_{j_1} T_{j_2} ... in order
TensorElement hecke_word(const TensorSpace& sp, const TensorElement& x, const std::vector<int>& js);

// Exponent of the tilde normalization e~_r = v^phi(r) e_r.
//   Printed:      inversions #{c < c' <= d : r_c < r_c'} + [r_d < n+1]
//   Intertwining: inversions + #{c <= c' <= d : r_c + r_c' < N+1}
// The two agree for d = 1; only the second turns the e-basis formulas into
// the tilde ones for d >= 2.
enum class TildeRule { Printed, Intertwining };
int tilde_exponent(int n, const Word& r, TildeRule rule = TildeRule::Intertwining);

// flavor conversion between E and Tilde (V is treated as Tilde, i.e. through Omega)
TensorElement to_flavor(const TensorSpace& sp, const TensorElement& x, Flavor target,
                        TildeRule rule = TildeRule::Intertwining);

// Omega: v_r -> e~_r, returned in the e-basis; omega_inverse goes back
TensorElement omega(const TensorSpace& sp, const TensorElement& x, TildeRule rule = TildeRule::Intertwining);
TensorElement omega_inverse(const TensorSpace& sp, const TensorElement& x,
                            TildeRule rule = TildeRule::Intertwining);

// ---- Schur algebra action ---------------------------------------------------

enum class Gen { E, F, DPlus, DMinus, T };

std::string gen_name(Gen g, int i);

// Generator action on the e-basis: e_i, f_i (1 <= i <= n), d_a^{+-}
// (1 <= a <= n+1) by the position-sum formulas; t as f_n e_n minus
// [[lambda_n - lambda_{n+1}]] on each weight space.
TensorElement schur_gen_act(const TensorSpace& sp, Gen g, int i, const TensorElement& x);

// Element of SchurJ(n,d) or SchurI(n,d) acting on the e-basis: each [A] is
// expanded in monomials and the divided-power factors act one at a time.
TensorElement schur_elem_act(const Algebra& alg, const Element& s, const TensorElement& x);

// ---- tensor space of the natural representation --------------------------------

// U(gl_N) Chevalley generators on V^{(x)d} through the coproduct
// E_i -> 1 (x) E_i + E_i (x) K_i K_{i+1}^{-1},  F_i -> F_i (x) 1 + K_i^{-1} K_{i+1} (x) F_i
enum class GlGen { E, F, K, Kinv };
TensorElement gl_act(const TensorSpace& sp, GlGen g, int i, const TensorElement& x);

// The j-generators on V^{(x)d} through the embedding into U(gl_N):
//   d_i -> K_i^{-1} K_{N+1-i}^{-1},  d_{n+1} -> c K_{n+1}^{-2},
//   e_i -> F_i + K_i^{-1} K_{i+1} E_{N-i},  f_i -> E_i K_{N-i}^{-1} K_{N+1-i} + F_{N-i}
// with c = v^center_shift. On the i-space, t acts as f_n e_n - [[lambda_n - lambda_{n+1}]].
TensorElement coproduct_act(const TensorSpace& sp, Gen g, int i, const TensorElement& x,
                            int center_shift = -1);

// ---- type C -------------------------------------------------------------------

// Words r_1..r_d in [1,N] with r_{d+1} = N+1-r_d (N even or odd, D = 2d).
TensorElement hecke_act_typec(int N, const TensorElement& x, int j);
// Printed: #{c < c' <= d+1 : r_c < r_c'}; Intertwining: as in type B with N
int tilde_exponent_typec(int N, const Word& r, TildeRule rule);
std::vector<Word> words_typec(int N, int d);

// ---- matrices and duality --------------------------------------------------------

// column j = image of the j-th word of sp.words(), evaluated at v = x
SparseMatrix matrix_of(const TensorSpace& sp, const std::function<TensorElement(const TensorElement&)>& op,
                       const mpq_class& v);

struct DualityReport {
    TensorSpace space;
    long commute_checks = 0;
    long commute_failures = 0;
    std::string first_failure;
    long algebra_dimension = 0;  // |Xi_d| or |iXi_d|
    struct Point {
        mpq_class v;
        int image_schur = 0;        // dim of the span of the [A]
        int commutant_hecke = 0;    // dim End_H(T)
        int image_hecke = 0;        // dim of the Hecke image
        int commutant_schur = 0;    // dim End_S(T)
    };
    std::vector<Point> points;
    bool hecke_faithful = false;  // n >= d: the Hecke image has dimension 2^d d!
    bool passed() const;
    std::string str() const;
};

// Exact commuting check of generators (and of every [A] when all_standard)
// against every T_j on all basis words, then the image and commutant
// dimensions of both actions at the given rational points.
DualityReport double_centralizer(const TensorSpace& sp, const std::vector<mpq_class>& points,
                                 bool all_standard = false);

}  // namespace qschur
