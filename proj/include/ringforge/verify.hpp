#pragma once

#include "ringforge/param.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ringforge {

// N, the multiplication matrix of a1*p - r*phi_1 in the order of the generic
// degree-n form, written directly from its closed form. It must agree entry
// for entry with arithmetic_matrix at coordinates (a1*p, -r, 0, ..., 0).
PolyMatrix special_matrix(int n);

// Outcome of the symbolic verification of
//   a1^(n-1) A^{-1} Q B = N^(n-1) T
// in Z[a1..a_{n+1}, p, q, r, s], the cross-multiplied, inversion-free form of
// the change-of-basis identity. A Failed status carries the first nonzero
// difference entry: that is a counterexample for this n, not a bug, as long
// as small n still verify.
struct Certificate {
    enum class Status { Verified, Failed };
    int n = 0;
    Status status = Status::Failed;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    std::uint64_t millis = 0;
    std::string digest;
    // set when Failed
    std::size_t fail_row = 0, fail_col = 0;
    std::optional<Polynomial> difference;

    bool verified() const { return status == Status::Verified; }
};

Certificate verify_identity(int n);

// The product Q B T^{-1} evaluated without any inversion, as
// (A N^(n-1)) / a1^(n-1) with checked exact entrywise division. Matches the
// classical printed matrices for n = 3..6 once the central identity holds.
PolyMatrix qbt_product(int n);

// Evaluates both sides of the identity at `points` random integer
// assignments (evaluation is a ring homomorphism, so a mismatch here
// falsifies the identity cheaply). Returns true when all points agree.
bool identity_spot_check(int n, int points, std::uint64_t seed = 1);

// Invariants of the binary quartic (a,b,c,d,e) and the ternary forms G, H, F
// appearing in the trace-normalized norm expansion
//   256 det N = t^4 - 2 G t^2 - 8 H t + F
// after eliminating the first coordinate through the trace t. The expansion
// convention is validated internally: the t^3 coefficient must vanish and
// the derived G must equal its classical closed form.
struct QuarticCovariants {
    Polynomial I, J;       // invariants
    Polynomial G, H, F;    // ternary quadratic / cubic / quartic in x, y, z
};
QuarticCovariants quartic_covariants(const std::vector<Polynomial>& coeffs);
QuarticCovariants quartic_covariants(const BinaryForm& form);

// Cremona syzygy g4^3 - 48 g4 I v^2 - 64 J v^3 = 27 g6^2 with
// g4 = G(x^2, x, 1), g6 = H(x^2, x, 1), v the quartic at y = 1.
struct SyzygyResult {
    bool holds = false;
    Polynomial difference; // lhs - rhs, zero iff holds
};
SyzygyResult syzygy_check(const std::vector<Polynomial>& coeffs);
SyzygyResult syzygy_check(const BinaryForm& form);

// Coefficient of var^k in the polynomial, as a polynomial in the remaining
// variables.
Polynomial coefficient_of(const Polynomial& poly, Variable var, std::uint32_t k);

std::string status_string(Certificate::Status s);

} // namespace ringforge
