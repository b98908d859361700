#pragma once

#include <optional>
#include <vector>

#include "invar/polynomial.hpp"

namespace invar {

// Incremental exact row space in echelon form. Pivot = first nonzero entry in
// canonical column order. Cyclotomic rows are kept fraction-free: denominators
// are cleared on insert and every elimination step is a cross-multiplication
// followed by content removal. GF rows use plain field elimination.
class RowSpace {
public:
    explicit RowSpace(size_t ncols) : ncols_(ncols) {}

    size_t ncols() const { return ncols_; }
    size_t rank() const { return rows_.size(); }

    // Reduce the row against the stored pivots; returns the residual.
    std::vector<Scalar> reduce(std::vector<Scalar> row) const;

    // Insert; returns true when the row enlarged the space.
    bool insert(std::vector<Scalar> row);

    bool contains(const std::vector<Scalar>& row) const;

    // Reduced row echelon form: pivot-sorted rows, pivot coefficient 1,
    // zeros above and below each pivot. Canonical for a given span.
    std::vector<std::vector<Scalar>> rref() const;

    const std::vector<int>& pivot_columns() const { return pivots_; }

private:
    void eliminate(std::vector<Scalar>& row, const std::vector<Scalar>& pivot_row, int col) const;
    static void clear_content(std::vector<Scalar>& row);

    size_t ncols_;
    std::vector<std::vector<Scalar>> rows_; // echelon rows, ascending pivot column
    std::vector<int> pivots_;               // pivot column per row
};

inline bool row_is_zero(const std::vector<Scalar>& row) {
    for (const auto& s : row)
        if (!s.is_zero()) return false;
    return true;
}

} // namespace invar
