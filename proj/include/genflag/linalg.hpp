#pragma once

#include <optional>

#include "genflag/matrix.hpp"

namespace genflag {

/// Unique reduced row-echelon form; the row space is preserved.
DenseMatrix rref(const DenseMatrix& m);

std::size_t rank(const DenseMatrix& m);

/// Exact inverse, or nullopt when m is singular (or not square).
std::optional<DenseMatrix> invert(const DenseMatrix& m);

/// Canonical basis (one vector per row, in reduced echelon form) of
/// { x : m x = 0 }.
DenseMatrix kernel(const DenseMatrix& m);

/// Rows of a stacked on top of rows of b (same column count).
DenseMatrix stack_rows(const DenseMatrix& a, const DenseMatrix& b);

} // namespace genflag
