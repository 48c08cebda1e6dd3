#pragma once

#include <optional>
#include <vector>

#include "soergel/poly.hpp"

namespace soergel {

/// One sparse row: (column, coefficient) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<int, Rat>>;

// Incremental exact row reduction over Q.  Rows are fed one at a time and
// reduced against the pivots found so far; consistency of an attached
// right-hand side is tracked per row.  Column order doubles as pivot
// preference, so the particular solution below has zeros in all free slots.
class RowReducer {
public:
    explicit RowReducer(int ncols);

    // Reduce and absorb row * x = rhs.  Returns false if the row reduced to
    // 0 = nonzero (inconsistent system).
    bool add_row(SparseRow row, Rat rhs);

    int rank() const { return (int)pivot_rows_.size(); }
    int ncols() const { return ncols_; }

    // Particular solution with zeros in all free columns, if consistent.
    std::vector<Rat> particular_solution() const;

    // Basis of the homogeneous nullspace (ignores right-hand sides).
    std::vector<std::vector<Rat>> nullspace_basis() const;

    bool consistent() const { return consistent_; }

private:
    void back_substitute() const;

    int ncols_;
    bool consistent_ = true;
    mutable bool fully_reduced_ = false;
    mutable std::vector<SparseRow> pivot_rows_;  // row leading col = pivot, coeff 1
    mutable std::vector<Rat> rhs_;
    std::vector<int> pivot_of_col_;  // -1 if free
};

// Dense-vector view of a sparse row (for tests / small conversions).
std::vector<Rat> densify(const SparseRow& row, int n);

}  // namespace soergel
