#include "qschur/linalg.hpp"

#include <deque>

namespace qschur {

void RowReducer::reduce(SparseVec& x) const
{
    auto it = x.begin();
    while (it != x.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        const mpq_class f = it->second;
        const int key = it->first;
        for (const auto& [c, a] : p->second) {
            mpq_class& slot = x[c];
            slot -= f * a;
            if (slot == 0)
                x.erase(c);
        }
        it = x.upper_bound(key);
    }
}

bool RowReducer::add(SparseVec x)
{
    reduce(x);
    if (x.empty())
        return false;
    const mpq_class lead = x.begin()->second;
    for (auto& [c, a] : x)
        a /= lead;
    const int pivot = x.begin()->first;
    // keep existing rows free of the new pivot column
    for (auto& [pc, row] : rows_) {
        auto hit = row.find(pivot);
        if (hit == row.end())
            continue;
        const mpq_class f = hit->second;
        for (const auto& [c, a] : x) {
            mpq_class& slot = row[c];
            slot -= f * a;
            if (slot == 0)
                row.erase(c);
        }
    }
    rows_.emplace(pivot, std::move(x));
    return true;
}

bool RowReducer::contains(SparseVec x) const
{
    reduce(x);
    return x.empty();
}

SparseMatrix SparseMatrix::identity(int dim)
{
    SparseMatrix m;
    m.dim = dim;
    m.col.resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j)
        m.col[static_cast<std::size_t>(j)][j] = 1;
    return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const
{
    SparseMatrix m;
    m.dim = dim;
    m.col.resize(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        SparseVec& out = m.col[static_cast<std::size_t>(j)];
        for (const auto& [k, b] : o.col[static_cast<std::size_t>(j)])
            for (const auto& [i, a] : col[static_cast<std::size_t>(k)]) {
                mpq_class& slot = out[i];
                slot += a * b;
                if (slot == 0)
                    out.erase(i);
            }
    }
    return m;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const { return dim == o.dim && col == o.col; }

SparseVec SparseMatrix::flatten() const
{
    SparseVec out;
    for (int j = 0; j < dim; ++j)
        for (const auto& [i, a] : col[static_cast<std::size_t>(j)])
            out[i * dim + j] = a;
    return out;
}

int commutant_dimension(const std::vector<SparseMatrix>& gens)
{
    if (gens.empty())
        return 0;
    const int dim = gens.front().dim;
    // row access to each generator
    std::vector<std::vector<SparseVec>> rows;
    for (const auto& g : gens) {
        std::vector<SparseVec> r(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j)
            for (const auto& [i, a] : g.col[static_cast<std::size_t>(j)])
                r[static_cast<std::size_t>(i)][j] = a;
        rows.push_back(std::move(r));
    }
    RowReducer red;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const auto& g = gens[gi];
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                // (X G)_{ij} - (G X)_{ij} = sum_k X_ik G_kj - G_ik X_kj
                SparseVec eq;
                for (const auto& [k, a] : g.col[static_cast<std::size_t>(j)])
                    eq[i * dim + k] += a;
                for (const auto& [k, a] : rows[gi][static_cast<std::size_t>(i)])
                    eq[k * dim + j] -= a;
                for (auto it = eq.begin(); it != eq.end();)
                    it = it->second == 0 ? eq.erase(it) : std::next(it);
                if (!eq.empty())
                    red.add(std::move(eq));
            }
    }
    return dim * dim - red.rank();
}

int span_dimension(const std::vector<SparseMatrix>& ms)
{
    RowReducer red;
    for (const auto& m : ms)
        red.add(m.flatten());
    return red.rank();
}

int generated_algebra_dimension(const std::vector<SparseMatrix>& gens)
{
    if (gens.empty())
        return 1;
    RowReducer red;
    std::deque<SparseMatrix> queue;
    SparseMatrix one = SparseMatrix::identity(gens.front().dim);
    red.add(one.flatten());
    queue.push_back(one);
    while (!queue.empty()) {
        SparseMatrix m = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            SparseMatrix p = g * m;
            if (red.add(p.flatten()))
                queue.push_back(std::move(p));
        }
    }
    return red.rank();
}

}  // namespace qschur
