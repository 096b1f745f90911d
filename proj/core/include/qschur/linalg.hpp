#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

namespace qschur {

using SparseVec = std::map<int, mpq_class>;

// Incremental row echelon form over Q. Rows are kept with a leading entry
// of 1 in their pivot column.
class RowReducer {
public:
    // reduces x against the current rows; true if x was independent (and added)
    bool add(SparseVec x);
    // true if x lies in the span of the current rows
    bool contains(SparseVec x) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(SparseVec& x) const;
    std::map<int, SparseVec> rows_;  // pivot column -> row
};

// Square sparse matrix stored by columns: col[j] = image of basis vector j.
struct SparseMatrix {
    int dim = 0;
    std::vector<SparseVec> col;

    static SparseMatrix identity(int dim);
    SparseMatrix operator*(const SparseMatrix& o) const;  // this after o
    bool operator==(const SparseMatrix& o) const;
    // entries flattened as (row * dim + column)
    SparseVec flatten() const;
};

// dimension of {X : X G = G X for every G in gens}
int commutant_dimension(const std::vector<SparseMatrix>& gens);
// dimension of the span of the given matrices
int span_dimension(const std::vector<SparseMatrix>& ms);
// dimension of the unital algebra generated by gens
int generated_algebra_dimension(const std::vector<SparseMatrix>& gens);

}  // namespace qschur
