#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qschur/relations.hpp"
#include "qschur/stable.hpp"
#include "qschur/tensor.hpp"

// Verification suites built on the algebra, tensor and oracle layers. Each
// returns a Report with one Check per identity family.
namespace qschur::checks {

// sizes of Xi_d, iXi_d, Pi, iPi against the closed binomial and power formulas
Report counting(int nmax = 3, int dmax = 4);

// ---- finite-field comparisons ------------------------------------------------

// every structure constant of SchurJ(n,d) (or SchurI(n,d)) against the
// convolution counts at q
Report oracle_structure_constants(Family family, int n, int d, long q);
// SchurI(n,d): products [G] * [A] for G of generator shape, and t * [A]
Report oracle_generator_products_i(int n, int d, long q);
// Schur action and Hecke action on the e-basis of the tensor space,
// plus the agreement of the tilde-basis formulas with the e-basis ones
Report oracle_module_type_b(int n, int d, long q);
// Hecke action on words for the two symplectic flag kinds (N = 2n and
// N = 2n+1, D = 2d) plus the tilde-basis formulas
Report oracle_module_type_c(int n, int d, long q);
// symplectic convolution constants against the orthogonal ones under
// A -> A + E_{n+1,n+1}, with the orbit counts
Report typec_relabel(int n, int d, long q);

// ---- canonical bases -----------------------------------------------------------

// bar invariance and v^{-1}N[v^{-1}] coefficients on all of SchurJ/SchurI(n,d)
Report canonical_finite(Family family, int n, int d);

// labels of Kj / KjGreater / Ki with off-diagonal mass <= mass and diagonal
// entries in [lo, hi] (center odd for Kj, positive odd for KjGreater)
std::vector<ThetaMatrix> stable_window(const Context& ctx, int mass, int lo, int hi);
// bar invariance and v^{-1}Z[v^{-1}] coefficients on a window
Report canonical_stable(const Context& ctx, int mass, int lo, int hi);

// phi_d on canonical bases over every block of Kj (Ki) whose weights are
// weights of SchurJ(n,d) (SchurI(n,d)), up to the given off-diagonal mass
Report compat_phi(Family finite, int n, int d, int mass);
// Ki bases against the two transports from Kj (through KjGreater and
// through the center-one subalgebra)
Report compat_ki_routes(int n, int mass, int lo, int hi);

// ---- inner product ---------------------------------------------------------------

// f_{A,A} interpolated from fiber counts, then the adjunction, the diagonal
// form of ([A],[A']) and almost orthonormality of the canonical basis
Report inner_product(int n, int d);

// ---- stable algebras ------------------------------------------------------------

// every generator-type pair [B]*[A] at n = 1 in a small window, fitted and
// evaluated at w = 1 against Kj (full shift) or KjGreater (breve shift)
Report stabilization(Shift shift, int mass = 2);

// closed t-multiplication against the composed definition on random labels,
// and the leading coefficients of t^2, t^3
Report t_calculus(int samples = 20, std::uint32_t seed = 5);

// the 3x3 product [L] * [R] in Kj with four explicit terms
Report worked_example(const std::vector<std::pair<int, int>>& ab = {{-2, 1}, {0, 2}, {3, 1}});

// ---- duality ------------------------------------------------------------------------

Report duality(const TensorSpace& sp, const std::vector<mpq_class>& points, bool all_standard = true);

}  // namespace qschur::checks
