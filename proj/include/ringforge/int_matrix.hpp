#pragma once

#include "ringforge/bigint.hpp"

#include <vector>

namespace ringforge {

// Dense integer matrix helpers for the numeric paths (element arithmetic,
// norms, resultants). Row-major.
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix int_identity(std::size_t n);
std::vector<BigInt> int_mat_vec(const IntMatrix& m, const std::vector<BigInt>& v);
IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant; every division is exact.
BigInt int_det(IntMatrix m);

// Resultant of f and g with the stated formal degrees (coefficient vectors
// are highest power first and may carry leading zeros up to the formal
// degree), via the Sylvester determinant.
BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g);

} // namespace ringforge
