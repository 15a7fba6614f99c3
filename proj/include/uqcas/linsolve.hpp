#pragma once

#include "uqcas/ratfunc.hpp"

#include <map>
#include <optional>
#include <vector>

namespace uqcas {

// Sparse row over RatFunc: (column, coefficient) pairs, sorted by column,
// coefficients nonzero.
using SparseRow = std::vector<std::pair<int, RatFunc>>;

SparseRow sparse_add(const SparseRow& a, const SparseRow& b);
SparseRow sparse_axpy(const SparseRow& a, const RatFunc& c, const SparseRow& b); // a + c*b
SparseRow sparse_scale(const SparseRow& a, const RatFunc& c);

// Incremental Gauss-Jordan elimination over Q(q).  The basis is kept fully
// reduced at all times: each stored row has coefficient 1 in its pivot column
// and zeros in every other pivot column.  Pivots are chosen as the smallest
// column index of the reduced row, so the caller controls elimination
// priority entirely through its column numbering.
class RowReducer {
public:
    RowReducer() = default;

    // Returns the new pivot column, or nullopt if the row reduced to zero.
    std::optional<int> add_row(SparseRow row);

    // Residual of a row against the current basis (no insertion).
    SparseRow reduce(SparseRow row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseRow>& rows() const { return rows_; }
    // col -> index into rows(); absent if the column is pivot-free.
    const std::map<int, int>& pivots() const { return pivot_row_; }

private:
    std::vector<SparseRow> rows_;
    std::map<int, int> pivot_row_;
    void eliminate(SparseRow& row) const;
};

// RowReducer variant that remembers how each basis row was formed from the
// rows passed to add(), so membership queries can also return coordinates.
// Row indices count every add() call, dependent rows included.
class SpanSolver {
public:
    SpanSolver() = default;

    // Returns true when the row enlarged the span.
    bool add(SparseRow row);

    int added() const { return added_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    bool contains(SparseRow target) const;
    // Coefficients c with target = sum c[i] * row_i over all added rows, or
    // nullopt when target is outside the span.
    std::optional<std::vector<RatFunc>> solve(SparseRow target) const;

private:
    std::vector<SparseRow> rows_;
    std::vector<SparseRow> combos_; // over add indices
    std::map<int, int> pivot_row_;
    int added_ = 0;
    void eliminate(SparseRow& row, SparseRow* combo) const;
};

} // namespace uqcas
