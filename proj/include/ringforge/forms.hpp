#pragma once

#include "ringforge/bigint.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringforge {

// Integral binary form of degree n,
//   B(x, y) = a1*x^n + a2*x^(n-1)*y + ... + a_{n+1}*y^n,
// stored as the coefficient sequence (a1, ..., a_{n+1}). Forms are plain
// values; the GL2 action never mutates.
class BinaryForm {
public:
    static constexpr int kMaxDegree = 64;

    BinaryForm(int degree, std::vector<BigInt> coeffs);
    static BinaryForm from_coeffs(std::vector<BigInt> coeffs); // degree = size - 1

    int degree() const noexcept { return degree_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    // 1-based accessor matching the a_k naming.
    const BigInt& a(int k) const { return coeffs_.at(k - 1); }

    const BigInt& leading() const { return coeffs_.front(); }
    const BigInt& trailing() const { return coeffs_.back(); }
    // Rings are only attached to forms with a1*a_{n+1} != 0.
    bool nondegenerate() const { return leading() != 0 && trailing() != 0; }

    BigInt eval(const BigInt& x, const BigInt& y) const;

    bool operator==(const BinaryForm& other) const {
        return degree_ == other.degree_ && coeffs_ == other.coeffs_;
    }

    std::string str() const;

private:
    int degree_;
    std::vector<BigInt> coeffs_;
};

// Element of GL2(Z): integer 2x2 matrix with determinant +-1.
class UnimodularMatrix {
public:
    UnimodularMatrix(BigInt p, BigInt q, BigInt r, BigInt s);

    const BigInt& p() const noexcept { return p_; }
    const BigInt& q() const noexcept { return q_; }
    const BigInt& r() const noexcept { return r_; }
    const BigInt& s() const noexcept { return s_; }

    BigInt det() const { return p_ * s_ - q_ * r_; }

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
    UnimodularMatrix inverse() const;
    UnimodularMatrix operator*(const UnimodularMatrix& other) const;

    bool operator==(const UnimodularMatrix& other) const {
        return p_ == other.p_ && q_ == other.q_ && r_ == other.r_ && s_ == other.s_;
    }

private:
    BigInt p_, q_, r_, s_;
};

// Right action B |-> B o M by substituting (x, y) -> (p x + q y, r x + s y).
BinaryForm act(const BinaryForm& form, const UnimodularMatrix& m);

// Discriminant of B(x, 1); requires a1 != 0.
BigInt discriminant(const BinaryForm& form);

// Mod-p witnesses prove irreducibility over Q; a rational root disproves it.
// Anything else within the prime budget is honestly Unknown.
struct IrreducibilityResult {
    enum class Kind { Irreducible, RationalRoot, Unknown };
    Kind kind = Kind::Unknown;
    long long witness_prime = 0;     // set when Irreducible
    BigInt root_num, root_den;       // set when RationalRoot (den > 0, reduced)
};

IrreducibilityResult irreducibility_certificate(const BinaryForm& form, int prime_budget);

} // namespace ringforge
