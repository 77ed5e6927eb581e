#pragma once

#include "ringforge/forms.hpp"
#include "ringforge/int_matrix.hpp"
#include "ringforge/poly_matrix.hpp"

#include <string>
#include <vector>

namespace ringforge {

// The order attached to a nondegenerate binary form B of degree n, with the
// fixed basis {1, phi_1, ..., phi_{n-1}},
//   phi_j = a1*zeta^j + a2*zeta^(j-1) + ... + aj*zeta,
// where zeta is a root of B(x, 1). zeta only ever appears symbolically; all
// arithmetic happens through the multiplication matrices.
class OrderContext {
public:
    explicit OrderContext(BinaryForm form);

    int rank() const noexcept { return form_.degree(); }
    const BinaryForm& form() const noexcept { return form_; }

    bool operator==(const OrderContext& other) const { return form_ == other.form_; }
    bool operator!=(const OrderContext& other) const { return !(form_ == other.form_); }

private:
    BinaryForm form_;
};

// Element x0 + x1*phi_1 + ... + x_{n-1}*phi_{n-1} of an order.
class RingElement {
public:
    RingElement(OrderContext ctx, std::vector<BigInt> coords);

    static RingElement zero(const OrderContext& ctx);
    static RingElement one(const OrderContext& ctx);
    // phi_j for 1 <= j <= n-1.
    static RingElement generator(const OrderContext& ctx, int j);

    const OrderContext& context() const noexcept { return ctx_; }
    const std::vector<BigInt>& coords() const noexcept { return coords_; }

    bool operator==(const RingElement& other) const {
        return ctx_ == other.ctx_ && coords_ == other.coords_;
    }

private:
    OrderContext ctx_;
    std::vector<BigInt> coords_;
};

// Multiplication matrix of the element with the given coordinates, in the
// basis {1, phi_1, ..., phi_{n-1}}. The generic overload takes polynomial
// form coefficients and coordinates and covers every symbolic use.
PolyMatrix arithmetic_matrix(const std::vector<Polynomial>& form_coeffs,
                             const std::vector<Polynomial>& coords);
PolyMatrix arithmetic_matrix(const OrderContext& ctx, const RingElement& elem);
// Numeric form, symbolic coordinates x0..x_{n-1}.
PolyMatrix arithmetic_matrix_symbolic(const OrderContext& ctx);
IntMatrix arithmetic_matrix_int(const BinaryForm& form, const std::vector<BigInt>& coords);

RingElement element_add(const RingElement& a, const RingElement& b);
RingElement element_mul(const RingElement& a, const RingElement& b);
BigInt trace(const RingElement& a);
BigInt norm(const RingElement& a);

// Exact inverse 1/alpha as an integer coordinate vector over a positive
// denominator, gcd-reduced. The denominator divides norm(alpha).
struct ElementInverse {
    std::vector<BigInt> coords;
    BigInt denom;
};
ElementInverse element_inverse(const RingElement& a);

// Multiplication table of a rank-n basis: for 1 <= i, j <= n-1 the
// coordinate vector of basis_i * basis_j (basis_0 = 1 is implicit).
// Polynomial entries cover both symbolic and integer tables.
class StructureConstants {
public:
    StructureConstants(int rank, std::vector<std::vector<Polynomial>> products);

    int rank() const noexcept { return rank_; }
    const std::vector<Polynomial>& product(int i, int j) const;

    bool symmetric() const;
    // (b_i b_j) b_k == b_i (b_j b_k) for all basis triples, expanded through
    // the table.
    bool associative() const;

    // Bilinear extension of the table to arbitrary coordinate vectors.
    std::vector<Polynomial> multiply(const std::vector<Polynomial>& a,
                                     const std::vector<Polynomial>& b) const;

    bool operator==(const StructureConstants& other) const {
        return rank_ == other.rank_ && products_ == other.products_;
    }

private:
    int rank_;
    std::vector<std::vector<Polynomial>> products_; // (i-1)*(rank-1) + (j-1)
};

StructureConstants multiplication_table(const std::vector<Polynomial>& form_coeffs);
StructureConstants multiplication_table(const OrderContext& ctx);

// Cubic table in the shifted basis {1, phi, psi}, phi = phi_1,
// psi = phi_2 + a3. In this basis phi*psi is the constant -a1*a4.
StructureConstants normalized_cubic_table(const std::vector<Polynomial>& form_coeffs);
StructureConstants normalized_cubic_table(const OrderContext& ctx);

// Reads a binary cubic form off a rank-3 multiplication table. Translates
// the two generators so their product has no generator components, then
// recovers the coefficients and checks the three consistency identities; a
// violation means the table is not the table of a cubic ring in this basis
// family.
struct CubicFormRecovery {
    std::vector<Polynomial> coeffs;   // (a, b, c, d)
    Polynomial shift_omega, shift_theta;
};
CubicFormRecovery cubic_form_from_order(const StructureConstants& table);
// Convenience for integer tables.
BinaryForm cubic_form_from_order_integral(const StructureConstants& table);

} // namespace ringforge
