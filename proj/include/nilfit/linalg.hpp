#pragma once

#include <vector>

#include "nilfit/field.hpp"

namespace nilfit {

using Vec = std::vector<FieldElement>;
using Mat = std::vector<Vec>;

// Row rank by exact Gaussian elimination.
std::size_t rank(Mat m);

// Deterministic basis of the right null space {v : m v = 0}, via reduced
// row echelon form; one basis vector per free column.
std::vector<Vec> kernel_basis(Mat m, const Field& field, std::size_t ncols);

// Scales v so its first nonzero entry is 1. Throws on the zero vector.
Vec normalize_first_nonzero(Vec v);

// Lexicographic comparison using the scalars' total order.
std::strong_ordering compare_vec(const Vec& a, const Vec& b);

}  // namespace nilfit
