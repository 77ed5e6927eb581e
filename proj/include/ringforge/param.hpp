#pragma once

#include "ringforge/forms.hpp"
#include "ringforge/order.hpp"
#include "ringforge/poly_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ringforge {

// Symbolic 2x2 matrix entries; concrete integers are constant polynomials.
struct Gl2 {
    Polynomial p, q, r, s;

    Polynomial det() const { return p * s - q * r; }

    static Gl2 symbols() {
        auto m = matrix_symbols();
        return {m.p, m.q, m.r, m.s};
    }
    static Gl2 of(const UnimodularMatrix& m) {
        return {Polynomial(m.p()), Polynomial(m.q()), Polynomial(m.r()), Polynomial(m.s())};
    }
};

// (n-1) x (n-1) block P: entry (i,j) is the coefficient of x^(j-1) in
// (p + q x)^(n-1-i) (r + s x)^(i-1). For n = 3 this is M itself.
PolyMatrix build_P(int n, const Gl2& m);

// n x n matrix Q: entry (i,j) is the coefficient of x^(i-1) in
// (-r x + p)^(n-j) (s x - q)^(j-1).
PolyMatrix build_Q(int n, const Gl2& m);

// Coefficients (b1, ..., b_{n+1}) of the transformed form as coefficients of
// x^(i-1) in B(p + q x, r + s x); agrees with forms::act entry for entry.
std::vector<Polynomial> build_B_coeffs(const std::vector<Polynomial>& form_coeffs, const Gl2& m);

// Upper-triangular coefficient matrices with first row/column (1, 0, ..., 0)
// and Toeplitz band (c1, ..., c_{n-1}) in the lower-right block.
PolyMatrix coefficient_matrix(const std::vector<Polynomial>& coeffs, int n);

// Change-of-basis matrix T = [[1, G], [0, m P]]; the first-row entries t_1j
// come from the generating polynomial
//   sum_j t_1j x^(j-2) = -q B'(p + q x, r + s x) - a_{n+1} s (r + s x)^(n-1)
// where B' is the degree-(n-1) form on coefficients (a1, ..., an) and the
// final coefficient the expansion produces is discarded.
PolyMatrix build_T(const std::vector<Polynomial>& form_coeffs, const Gl2& m);

// All of the matrices for one (form, M) pair.
struct ParamSystem {
    int n = 0;
    std::vector<Polynomial> form_coeffs;      // a1..a_{n+1}
    std::vector<Polynomial> image_coeffs;     // b1..b_{n+1}
    Gl2 m;
    PolyMatrix A, B, Q, P, T;
};
ParamSystem build_param_system(const std::vector<Polynomial>& form_coeffs, const Gl2& m);
// Fully symbolic system in a1..a_{n+1}, p, q, r, s.
ParamSystem build_param_system(int n);
ParamSystem build_param_system(const BinaryForm& form, const UnimodularMatrix& m);

// Carries an element of the order of B o M into the order of B: coordinate
// vector T * coords. Output is integral since T has integer entries.
RingElement transport_element(const BinaryForm& form, const UnimodularMatrix& m,
                              const std::vector<BigInt>& coords_in_image_order);

// Randomized element-level check that transport is a ring homomorphism:
// lambda(alpha+beta) = lambda(alpha)+lambda(beta) and
// lambda(alpha*beta) = lambda(alpha)*lambda(beta), with multiplication on
// each side running through the respective arithmetic matrices.
struct IsoCounterexample {
    std::vector<BigInt> alpha, beta;
    std::string law; // "additive" or "multiplicative"
};
struct IsoReport {
    int trials = 0;
    int passed = 0;
    std::optional<IsoCounterexample> counterexample;
    bool ok() const { return !counterexample.has_value(); }
};
IsoReport isomorphism_check(const BinaryForm& form, const UnimodularMatrix& m, int trials,
                            std::uint64_t seed = 1);

} // namespace ringforge
