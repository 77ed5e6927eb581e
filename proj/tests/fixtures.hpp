#pragma once

// Golden matrices for the verification engine: the product Q B T^{-1} for
// n = 3..6 in the generic coefficients a1..a_{n+1} and p, r, transcribed
// entry for entry, plus the closed-form special matrix for n = 3 and the
// printed inverse of the cubic change of basis.

#include "ringforge/poly_matrix.hpp"

namespace fixtures {

using ringforge::PolyMatrix;
using ringforge::Polynomial;

// Q B T^{-1} for the given degree; supported for n = 3..6.
PolyMatrix qbt_reference(int n);

// The multiplication matrix of a1 p - r phi_1 for n = 3.
PolyMatrix special_matrix_3();

// The printed inverse of the cubic T (valid modulo (ps-qr)^2 = 1).
PolyMatrix cubic_T_inverse();

} // namespace fixtures
