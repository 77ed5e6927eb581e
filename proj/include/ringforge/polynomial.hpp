#pragma once

#include "ringforge/bigint.hpp"
#include "ringforge/variable.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringforge {

// Sparse product of variable powers, factors sorted by canonical variable
// rank (a1 first). The empty monomial is 1.
class Monomial {
public:
    struct VarPow {
        std::uint32_t var;
        std::uint32_t exp;
        bool operator==(const VarPow&) const = default;
    };

    Monomial() = default;
    explicit Monomial(Variable v, std::uint32_t exp = 1);

    const std::vector<VarPow>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }
    std::uint32_t total_degree() const noexcept;
    std::uint32_t degree_in(Variable v) const noexcept;

    Monomial operator*(const Monomial& other) const;
    // Exact monomial quotient; throws std::domain_error if not divisible.
    Monomial operator/(const Monomial& other) const;
    bool divisible_by(const Monomial& other) const noexcept;

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

    // Graded lex: higher total degree first, ties broken by the exponent of
    // the earliest variable in the canonical order.
    static int compare(const Monomial& a, const Monomial& b);

    std::size_t hash() const noexcept;
    std::string str() const;

private:
    std::vector<VarPow> factors_;
    friend class Polynomial;
};

struct PolyDivMod;

// Multivariate polynomial over the integers in canonical form: no zero
// coefficients, terms strictly descending in the monomial order.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        BigInt coeff;
    };

    Polynomial() = default;
    Polynomial(long long value);           // NOLINT(google-explicit-constructor)
    Polynomial(const BigInt& value);       // NOLINT(google-explicit-constructor)
    Polynomial(Variable v);                // NOLINT(google-explicit-constructor)

    static Polynomial variable(std::string_view name) { return Polynomial(Variable(name)); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // Constant value of a constant polynomial; throws if non-constant.
    BigInt constant_value() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    std::uint32_t total_degree() const noexcept;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);

    bool operator==(const Polynomial& other) const { return equals(other); }
    bool operator!=(const Polynomial& other) const { return !equals(other); }

    Polynomial pow(std::uint32_t exponent) const;

    // Evaluation at an integer point; every variable occurring in the
    // polynomial must be assigned.
    BigInt evaluate(const std::map<std::uint32_t, BigInt>& assignment) const;

    // Simultaneous substitution of polynomials for variables; unassigned
    // variables stay in place.
    Polynomial substitute(const std::map<std::uint32_t, Polynomial>& assignment) const;

    // Multivariate long division by a single divisor under the term order.
    // A term moves to the remainder only when its monomial is not divisible
    // by the divisor's leading monomial or its coefficient is not divisible
    // by the divisor's leading coefficient.
    PolyDivMod divmod(const Polynomial& divisor) const;

    // Exact quotient; throws ExactDivisionError when division leaves a remainder.
    Polynomial divide_exact(const Polynomial& divisor) const;

    // Normal form modulo the principal ideal generated by `modulus`.
    Polynomial reduce(const Polynomial& modulus) const;

    // Canonical text: terms in descending order, "coeff*var^e*..." joined by
    // " + " / " - ".
    std::string str() const;

    std::uint64_t fnv1a64() const;

private:
    bool equals(const Polynomial& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff)
                return false;
        return true;
    }
    void normalize_sorted();
    std::vector<Term> terms_;
};

struct PolyDivMod {
    Polynomial quotient;
    Polynomial remainder;
};

class ExactDivisionError : public std::runtime_error {
public:
    ExactDivisionError(std::string message, Polynomial remainder)
        : std::runtime_error(std::move(message)), remainder_(std::move(remainder)) {}
    const Polynomial& remainder() const noexcept { return remainder_; }

private:
    Polynomial remainder_;
};

Polynomial operator+(long long lhs, const Polynomial& rhs);
Polynomial operator-(long long lhs, const Polynomial& rhs);
Polynomial operator*(long long lhs, const Polynomial& rhs);

inline Polynomial pow(const Polynomial& base, std::uint32_t exponent) { return base.pow(exponent); }

// Convenience symbol sets used throughout the library.
std::vector<Polynomial> symbolic_form_coeffs(int degree, std::string_view stem = "a");
std::vector<Polynomial> symbolic_coords(int n, std::string_view stem = "x");

struct MatrixSymbols {
    Polynomial p, q, r, s;
};
MatrixSymbols matrix_symbols();

} // namespace ringforge
