#pragma once

#include "ringforge/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ringforge {

// Dense matrix of polynomials, row-major. Carrier for every symbolic matrix
// in the library. Values are immutable once built by the construction
// routines; all operations are pure.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Polynomial& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& other) const;
    PolyMatrix operator-(const PolyMatrix& other) const;
    PolyMatrix operator*(const PolyMatrix& other) const;
    bool operator==(const PolyMatrix& other) const;
    bool operator!=(const PolyMatrix& other) const { return !(*this == other); }

    PolyMatrix scaled(const Polynomial& factor) const;
    PolyMatrix pow(std::uint32_t exponent) const;

    Polynomial trace() const;

    // Column j as a coordinate vector.
    std::vector<Polynomial> column(std::size_t j) const;

    std::string str() const;

    std::size_t total_terms() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> entries_;
};

// Matrix-vector product.
std::vector<Polynomial> mat_vec(const PolyMatrix& m, const std::vector<Polynomial>& v);

// Exact determinant: Bareiss fraction-free elimination for dimension > 4,
// cofactor expansion below that. Every division in the elimination is exact
// by the Sylvester identity; an inexact division is a logic error.
Polynomial det_fraction_free(const PolyMatrix& m);

// The two routes individually, for cross-checking.
Polynomial det_bareiss(const PolyMatrix& m);
Polynomial det_cofactor(const PolyMatrix& m);

// For upper-triangular A, returns S with A*S = S*A = scale*I, performed with
// checked exact divisions. Throws std::invalid_argument on non-triangular
// input and ExactDivisionError naming the offending entry when some division
// is inexact.
PolyMatrix triangular_scaled_inverse(const PolyMatrix& a, const Polynomial& scale);

// Number of worker threads matrix products may use; reads RINGFORGE_THREADS
// once (hardware concurrency otherwise). Results are bit-identical for any
// thread count.
unsigned matrix_threads();

} // namespace ringforge
