#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Weight = std::vector<int>;  // length N, lambda_i = lambda_{N+1-i}
using Word = std::vector<int>;    // entries in [1, N]

// N x N integer matrix with a_{ij} = a_{N+1-i, N+1-j}, N = 2n+1.
// Indices are 1-based everywhere.
class ThetaMatrix {
public:
    ThetaMatrix() = default;
    explicit ThetaMatrix(int n);

    static ThetaMatrix from_rows(int n, const std::vector<std::vector<int>>& rows);
    static ThetaMatrix diag(const Weight& lambda);
    // E^theta_{ij} = E_{ij} + E_{N+1-i,N+1-j}
    static ThetaMatrix e_theta(int n, int i, int j);

    int n() const { return n_; }
    int N() const { return 2 * n_ + 1; }
    int center() const { return n_ + 1; }
    int operator()(int i, int j) const { return a_[idx(i, j)]; }

    // sets (i,j) and its mirror to the same value
    void set(int i, int j, int value);
    // adds k * E^theta_{ij}
    void add_theta(int i, int j, int k = 1);

    Weight ro() const;
    Weight co() const;
    ThetaMatrix transpose() const;
    bool is_diagonal() const;
    long long total() const;

    // canonical order key: strict upper triangle row-major, then diagonal 1..n+1
    std::vector<int> key() const;

    std::string str() const;  // [[a,b,c],[...],...]
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const ThetaMatrix& x, const ThetaMatrix& y)
    {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }
    friend bool operator!=(const ThetaMatrix& x, const ThetaMatrix& y) { return !(x == y); }
    // canonical total order
    friend bool operator<(const ThetaMatrix& x, const ThetaMatrix& y);

    std::size_t hash() const;

private:
    std::size_t idx(int i, int j) const
    {
        return static_cast<std::size_t>((i - 1) * N() + (j - 1));
    }
    int n_ = 0;
    std::vector<int> a_;
};

struct ThetaMatrixHash {
    std::size_t operator()(const ThetaMatrix& m) const { return m.hash(); }
};

// ---- sets -----------------------------------------------------------------

enum class SetKind { Xi, IXi, TildeXi, TildeXiGt, TildeXiLt, ITildeXi, Pi, IPi };

struct SetTag {
    SetKind kind;
    int n;
    int d = 0;  // used by Xi, IXi, Pi, IPi
};

bool is_theta_symmetric(int n, const std::vector<std::vector<int>>& rows);
bool member(const ThetaMatrix& a, const SetTag& tag);
bool is_finite(const SetTag& tag);

// Xi_d or iXi_d in canonical order
std::vector<ThetaMatrix> enumerate(const SetTag& tag);
// Pi or iPi as words r_1..r_d, lexicographic
std::vector<Word> enumerate_words(const SetTag& tag);

long long binomial(long long a, long long b);

// ---- words and Pi ---------------------------------------------------------

// plain integer matrix; used for Pi (N x D) and for oracle invariants
struct RectMatrix {
    int rows = 0, cols = 0;
    std::vector<int> data;
    int operator()(int i, int j) const { return data[static_cast<std::size_t>((i - 1) * cols + (j - 1))]; }
    int& at(int i, int j) { return data[static_cast<std::size_t>((i - 1) * cols + (j - 1))]; }

    friend bool operator==(const RectMatrix& x, const RectMatrix& y)
    {
        return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
    }
    friend bool operator<(const RectMatrix& x, const RectMatrix& y)
    {
        if (x.rows != y.rows || x.cols != y.cols)
            return std::pair(x.rows, x.cols) < std::pair(y.rows, y.cols);
        return x.data < y.data;
    }
};

Word extend_word(int n, const Word& w);  // length D, r_{d+1} = n+1, mirrored tail
RectMatrix pi_of_word(int n, const Word& w);
Word word_of_pi(int n, const RectMatrix& b);
Weight word_weight(int n, const Word& w);  // lambda_a = #{c <= D : r_c = a}

// ---- orbit statistics -----------------------------------------------------

long long dim_orbit(const ThetaMatrix& a);   // d(A)
long long dim_image(const ThetaMatrix& a);   // r(A) = d(diag(ro A))
long long d_lower(const ThetaMatrix& a);     // d_A = d(A) - r(A)
long long d_lower_closed(const ThetaMatrix& a);  // the closed d - r expression

// ---- orders ---------------------------------------------------------------

bool preceq(const ThetaMatrix& a, const ThetaMatrix& b);
bool sqsubseteq(const ThetaMatrix& a, const ThetaMatrix& b);
// sum of all upper partial sums; strictly increasing along the strict order
long long order_height(const ThetaMatrix& a);
// every A' in tag with A' sqsubseteq A, in canonical order
std::vector<ThetaMatrix> down_set(const ThetaMatrix& a, const SetTag& tag);

}  // namespace qschur

template <>
struct std::hash<qschur::ThetaMatrix> {
    std::size_t operator()(const qschur::ThetaMatrix& m) const { return m.hash(); }
};
