#pragma once

#include "binomeso/field.hpp"

#include <vector>

namespace binomeso {

/// Dense matrix over a Field, row major.
using FieldMatrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& k, FieldMatrix& m, std::size_t cols);

std::size_t field_rank(const Field& k, FieldMatrix m, std::size_t cols);

/// Basis of { v : m v = 0 }.
std::vector<std::vector<Scalar>> field_kernel(const Field& k, FieldMatrix m, std::size_t cols);

} // namespace binomeso
