#pragma once

#include <iosfwd>

#include "impurity/entangle.hpp"

namespace impurity::entangle {

// Sampled-function interchange format: comma-separated columnar text with a
// header row "omega,re_0_0,im_0_0,...", matrix elements in row-major order.
// Floats carry 17 significant digits, lines end with LF.
void write_matrix_fn(std::ostream& os, const MatrixFn& fn);
MatrixFn read_matrix_fn(std::istream& is);

}  // namespace impurity::entangle
