#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/matrix.hpp"

// Brute-force flag geometry over a prime field F_q.
namespace qschur::oracle {

enum class Form { Symmetric, Skew };

struct FieldConfig {
    int q = 3;
    int D = 3;
    Form form = Form::Symmetric;
};

struct ScaleGuard : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InterpolationInconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxFlags = 10'000'000;

using Vec = std::vector<int>;

// Subspaces are kept in reduced row echelon form and interned by that form.
struct Subspace {
    int dim = 0;
    std::vector<int> rows;  // dim x D, RREF
};

class Geometry {
public:
    explicit Geometry(FieldConfig cfg);

    const FieldConfig& config() const { return cfg_; }
    int q() const { return cfg_.q; }
    int D() const { return cfg_.D; }

    int add(int a, int b) const { return (a + b) % cfg_.q; }
    int mul(int a, int b) const { return (a * b) % cfg_.q; }
    int neg(int a) const { return a == 0 ? 0 : cfg_.q - a; }
    int inv(int a) const { return inv_[a]; }
    int form(const Vec& x, const Vec& y) const;

    Subspace span(std::vector<Vec> vectors) const;
    Subspace perp(const Subspace& u) const;
    int rank(std::vector<Vec> vectors) const;
    bool is_isotropic(const Subspace& u) const;

    // interning
    int intern(const Subspace& u);
    const Subspace& subspace(int id) const { return table_[static_cast<std::size_t>(id)]; }
    int intersect_dim(int a, int b);
    bool contains(int big, int small);
    int perp_id(int id);
    int zero_id();
    int whole_id();
    std::size_t interned() const { return table_.size(); }

    // all isotropic subspaces, as interned ids grouped by dimension
    const std::vector<std::vector<int>>& isotropic_subspaces();

private:
    std::vector<Vec> basis(const Subspace& u) const;
    std::string key(const Subspace& u) const;

    FieldConfig cfg_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> gram_;
    std::vector<Subspace> table_;
    std::unordered_map<std::string, int> ids_;
    std::unordered_map<std::uint64_t, int> meet_cache_;
    std::unordered_map<int, int> perp_cache_;
    std::vector<std::vector<int>> isotropic_;
    bool isotropic_ready_ = false;
};

// A flag V_0 = 0 ⊆ V_1 ⊆ ... ⊆ V_L = F^D with V_{L-i} = V_i^⊥, stored as
// interned subspace ids at positions 0..L.
struct Flag {
    std::vector<int> chain;
};

enum class FlagShape {
    Any,        // isotropic chain; top forced Lagrangian when L is even
    TopMaximal, // V_m of dimension floor(D/2), m = floor(L/2)
    Complete    // L = D, all steps of size one
};

std::vector<Flag> enumerate_flags(Geometry& g, int L, FlagShape shape);
std::vector<int> flag_weight(Geometry& g, const Flag& f);

// a_ij = dim(V_i∩V'_j) - dim(V_{i-1}∩V'_j) - dim(V_i∩V'_{j-1}) + dim(V_{i-1}∩V'_{j-1})
RectMatrix relative_position(Geometry& g, const Flag& f, const Flag& h);
ThetaMatrix as_theta(const RectMatrix& m);

// flags F' with F'_i = F_i for all i != j in [1, floor(L/2)] and F'_j != F_j
bool hecke_related(const Flag& f, const Flag& h, int j);

// g_{A,A',A''} = #{f : (f1,f) in O_A, (f,f2) in O_A'} for fixed (f1,f2) in O_A''
struct ConvolutionTable {
    // keyed by (A'', A, A')
    std::map<std::tuple<RectMatrix, RectMatrix, RectMatrix>, long long> counts;
    std::map<RectMatrix, long long> orbit_sizes;  // |O_A| for A in X x X
    bool representative_independent = true;
};

ConvolutionTable convolution_table(Geometry& g, const std::vector<Flag>& flags);

// left action on functions over X x Y: coefficient of e_{r'} in e_A * e_r
// keyed by (r', A, r) with r, r' as relative-position matrices X x Y
struct ActionTable {
    std::map<std::tuple<RectMatrix, RectMatrix, RectMatrix>, long long> counts;
    bool representative_independent = true;
};
ActionTable schur_action_table(Geometry& g, const std::vector<Flag>& xflags,
                               const std::vector<Flag>& yflags, const std::vector<RectMatrix>& only_a = {});

// right Hecke action: coefficient of e_{r'} in e_r T_j, keyed by (r', r, j)
struct HeckeTable {
    std::map<std::tuple<RectMatrix, RectMatrix, int>, long long> counts;
    bool representative_independent = true;
};
HeckeTable hecke_table(Geometry& g, const std::vector<Flag>& xflags, const std::vector<Flag>& yflags);

// #{L : (L', L) in O_{tA}} for a fixed L' of weight co(A)
long long fiber_count(Geometry& g, const std::vector<Flag>& flags, const ThetaMatrix& a);

// Interpolates a polynomial in q from values at distinct q; throws
// InterpolationInconsistent if the extra sample disagrees.
Laurent interpolate_in_v2(const std::vector<std::pair<long, long long>>& samples, int degree);

// word r_1..r_d read from an X x Y relative position matrix (N x D)
Word word_of_position(const RectMatrix& m);

}  // namespace qschur::oracle
