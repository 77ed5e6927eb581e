#include "ringforge/order.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ringforge {

OrderContext::OrderContext(BinaryForm form) : form_(std::move(form)) {
    if (!form_.nondegenerate())
        throw std::domain_error("order requires a1 * a_{n+1} != 0, got form " + form_.str());
}

RingElement::RingElement(OrderContext ctx, std::vector<BigInt> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
    if (coords_.size() != static_cast<std::size_t>(ctx_.rank()))
        throw std::invalid_argument("element of a rank-" + std::to_string(ctx_.rank()) + " order needs " +
                                    std::to_string(ctx_.rank()) + " coordinates");
}

RingElement RingElement::zero(const OrderContext& ctx) {
    return RingElement(ctx, std::vector<BigInt>(ctx.rank(), BigInt(0)));
}

RingElement RingElement::one(const OrderContext& ctx) {
    std::vector<BigInt> c(ctx.rank(), BigInt(0));
    c[0] = 1;
    return RingElement(ctx, std::move(c));
}

RingElement RingElement::generator(const OrderContext& ctx, int j) {
    if (j < 1 || j >= ctx.rank()) throw std::invalid_argument("generator index out of range");
    std::vector<BigInt> c(ctx.rank(), BigInt(0));
    c[j] = 1;
    return RingElement(ctx, std::move(c));
}

namespace {

// The five entry formulas, with any a-subscript outside 1..n+1 and any
// x-subscript outside 0..n-1 contributing zero.
template <class Ring, class AGet, class XGet, class Put>
void fill_arithmetic_matrix(int n, const AGet& a, const XGet& x, const Put& put) {
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Ring entry{};
            if (j == 1) {
                entry = x(i - 1);
            } else if (i == 1) {
                Ring sum{};
                for (int k = 1; k <= j - 1; ++k) sum += a(k) * x(k + n - j);
                entry = -(a(n + 1) * sum);
            } else if (i > j) {
                Ring sum{};
                for (int k = 1; k <= j - 1; ++k) sum += a(k) * x(k + i - j - 1);
                entry = sum;
            } else {
                const int m = std::min(n - i + j, n + 1);
                Ring sum{};
                for (int k = j; k <= m; ++k) sum += a(k) * x(k + i - j - 1);
                entry = (i == j ? x(0) : Ring{}) - sum;
            }
            put(i, j, std::move(entry));
        }
    }
}

} // namespace

PolyMatrix arithmetic_matrix(const std::vector<Polynomial>& form_coeffs,
                             const std::vector<Polynomial>& coords) {
    const int n = static_cast<int>(coords.size());
    if (form_coeffs.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("arithmetic_matrix: need n+1 form coefficients for n coordinates");
    PolyMatrix out(n, n);
    auto a = [&](int k) -> Polynomial {
        return (k >= 1 && k <= n + 1) ? form_coeffs[k - 1] : Polynomial(0);
    };
    auto x = [&](int j) -> Polynomial {
        return (j >= 0 && j < n) ? coords[j] : Polynomial(0);
    };
    fill_arithmetic_matrix<Polynomial>(n, a, x, [&](int i, int j, Polynomial e) {
        out.at(i - 1, j - 1) = std::move(e);
    });
    return out;
}

PolyMatrix arithmetic_matrix(const OrderContext& ctx, const RingElement& elem) {
    if (elem.context() != ctx) throw std::invalid_argument("arithmetic_matrix: element from another order");
    std::vector<Polynomial> coeffs, coords;
    for (const auto& c : ctx.form().coeffs()) coeffs.emplace_back(c);
    for (const auto& c : elem.coords()) coords.emplace_back(c);
    return arithmetic_matrix(coeffs, coords);
}

PolyMatrix arithmetic_matrix_symbolic(const OrderContext& ctx) {
    std::vector<Polynomial> coeffs;
    for (const auto& c : ctx.form().coeffs()) coeffs.emplace_back(c);
    return arithmetic_matrix(coeffs, symbolic_coords(ctx.rank()));
}

IntMatrix arithmetic_matrix_int(const BinaryForm& form, const std::vector<BigInt>& coords) {
    const int n = form.degree();
    if (coords.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("arithmetic_matrix_int: coordinate count mismatch");
    IntMatrix out(n, std::vector<BigInt>(n, BigInt(0)));
    auto a = [&](int k) -> BigInt { return (k >= 1 && k <= n + 1) ? form.a(k) : BigInt(0); };
    auto x = [&](int j) -> BigInt { return (j >= 0 && j < n) ? coords[j] : BigInt(0); };
    fill_arithmetic_matrix<BigInt>(n, a, x, [&](int i, int j, BigInt e) {
        out[i - 1][j - 1] = std::move(e);
    });
    return out;
}

RingElement element_add(const RingElement& a, const RingElement& b) {
    if (a.context() != b.context()) throw std::invalid_argument("element_add: mixed orders");
    std::vector<BigInt> c(a.coords());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
    return RingElement(a.context(), std::move(c));
}

RingElement element_mul(const RingElement& a, const RingElement& b) {
    if (a.context() != b.context()) throw std::invalid_argument("element_mul: mixed orders");
    // First basis element is 1, so coords(ab) = N(a) * coords(b).
    IntMatrix n = arithmetic_matrix_int(a.context().form(), a.coords());
    return RingElement(a.context(), int_mat_vec(n, b.coords()));
}

BigInt trace(const RingElement& a) {
    IntMatrix n = arithmetic_matrix_int(a.context().form(), a.coords());
    BigInt t(0);
    for (std::size_t i = 0; i < n.size(); ++i) t += n[i][i];
    return t;
}

BigInt norm(const RingElement& a) {
    return int_det(arithmetic_matrix_int(a.context().form(), a.coords()));
}

ElementInverse element_inverse(const RingElement& a) {
    const int n = a.context().rank();
    IntMatrix m = arithmetic_matrix_int(a.context().form(), a.coords());
    BigInt det = int_det(m);
    if (det == 0) throw std::domain_error("element_inverse: element has norm zero");

    // First column of the adjugate: cofactors along the first row.
    std::vector<BigInt> adj(n);
    for (int j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, std::vector<BigInt>(n - 1));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[i - 1][cc++] = m[i][c];
            }
        }
        BigInt cof = int_det(std::move(minor));
        adj[j] = (j % 2 == 0) ? cof : -cof;
    }

    BigInt g = det;
    for (const auto& c : adj) g = big_gcd(g, c);
    if (det < 0) g = -g; // keep the reduced denominator positive
    ElementInverse out;
    out.denom = det / g;
    out.coords.reserve(n);
    for (const auto& c : adj) out.coords.push_back(c / g);
    return out;
}

// ---------------------------------------------------------------------------
// Structure constants

StructureConstants::StructureConstants(int rank, std::vector<std::vector<Polynomial>> products)
    : rank_(rank), products_(std::move(products)) {
    if (rank_ < 2) throw std::invalid_argument("structure constants need rank >= 2");
    const std::size_t m = static_cast<std::size_t>(rank_ - 1);
    if (products_.size() != m * m)
        throw std::invalid_argument("structure constants: wrong table size");
    for (const auto& v : products_)
        if (v.size() != static_cast<std::size_t>(rank_))
            throw std::invalid_argument("structure constants: wrong coordinate length");
}

const std::vector<Polynomial>& StructureConstants::product(int i, int j) const {
    if (i < 1 || j < 1 || i >= rank_ || j >= rank_)
        throw std::invalid_argument("structure constants: index out of range");
    return products_[static_cast<std::size_t>(i - 1) * (rank_ - 1) + (j - 1)];
}

bool StructureConstants::symmetric() const {
    for (int i = 1; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

std::vector<Polynomial> StructureConstants::multiply(const std::vector<Polynomial>& a,
                                                     const std::vector<Polynomial>& b) const {
    const int n = rank_;
    if (a.size() != static_cast<std::size_t>(n) || b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("structure constants multiply: coordinate length mismatch");
    std::vector<Polynomial> out(n);
    // 1 * anything
    for (int k = 0; k < n; ++k) out[k] = a[0] * b[k];
    for (int i = 1; i < n; ++i) {
        if (a[i].is_zero()) continue;
        out[i] += a[i] * b[0];
        for (int j = 1; j < n; ++j) {
            if (b[j].is_zero()) continue;
            const auto& prod = product(i, j);
            const Polynomial scale = a[i] * b[j];
            for (int k = 0; k < n; ++k) out[k] += scale * prod[k];
        }
    }
    return out;
}

bool StructureConstants::associative() const {
    const int n = rank_;
    auto basis = [&](int i) {
        std::vector<Polynomial> v(n);
        v[i] = Polynomial(1);
        return v;
    };
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k < n; ++k) {
                auto lhs = multiply(multiply(basis(i), basis(j)), basis(k));
                auto rhs = multiply(basis(i), multiply(basis(j), basis(k)));
                if (lhs != rhs) return false;
            }
    return true;
}

StructureConstants multiplication_table(const std::vector<Polynomial>& form_coeffs) {
    const int n = static_cast<int>(form_coeffs.size()) - 1;
    if (n < 2) throw std::invalid_argument("multiplication_table: rank must be >= 2");
    std::vector<std::vector<Polynomial>> products(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i) {
        // N(phi_i): column j+1 holds the coordinates of phi_i * phi_j.
        std::vector<Polynomial> coords(n);
        coords[i] = Polynomial(1);
        PolyMatrix m = arithmetic_matrix(form_coeffs, coords);
        for (int j = 1; j < n; ++j)
            products[static_cast<std::size_t>(i - 1) * (n - 1) + (j - 1)] = m.column(j);
    }
    return StructureConstants(n, std::move(products));
}

StructureConstants multiplication_table(const OrderContext& ctx) {
    std::vector<Polynomial> coeffs;
    for (const auto& c : ctx.form().coeffs()) coeffs.emplace_back(c);
    return multiplication_table(coeffs);
}

StructureConstants normalized_cubic_table(const std::vector<Polynomial>& form_coeffs) {
    if (form_coeffs.size() != 4)
        throw std::invalid_argument("normalized_cubic_table: cubic form required");
    const Polynomial& c = form_coeffs[2];
    // phi = phi_1 = (0,1,0); psi = phi_2 + c = (c,0,1).
    const std::vector<Polynomial> phi{Polynomial(0), Polynomial(1), Polynomial(0)};
    const std::vector<Polynomial> psi{c, Polynomial(0), Polynomial(1)};
    auto mul = [&](const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) {
        return mat_vec(arithmetic_matrix(form_coeffs, u), v);
    };
    // Old coordinates (z0, z1, z2) against {1, phi_1, phi_2} become
    // (z0 - c z2, z1, z2) against {1, phi, psi}.
    auto rebase = [&](std::vector<Polynomial> z) {
        z[0] -= c * z[2];
        return z;
    };
    std::vector<std::vector<Polynomial>> products(4);
    products[0] = rebase(mul(phi, phi));
    products[1] = rebase(mul(phi, psi));
    products[2] = rebase(mul(psi, phi));
    products[3] = rebase(mul(psi, psi));
    return StructureConstants(3, std::move(products));
}

StructureConstants normalized_cubic_table(const OrderContext& ctx) {
    if (ctx.rank() != 3) throw std::invalid_argument("normalized_cubic_table: cubic order required");
    std::vector<Polynomial> coeffs;
    for (const auto& coeff : ctx.form().coeffs()) coeffs.emplace_back(coeff);
    return normalized_cubic_table(coeffs);
}

CubicFormRecovery cubic_form_from_order(const StructureConstants& table) {
    if (table.rank() != 3) throw std::invalid_argument("cubic_form_from_order: rank-3 table required");
    if (!table.symmetric()) throw std::domain_error("cubic_form_from_order: table is not symmetric");

    // Translate omega and theta so that omega*theta has no generator
    // components: the required shifts read off the table directly.
    const auto& wt = table.product(1, 2);
    const Polynomial shift_theta = -wt[1]; // added to theta
    const Polynomial shift_omega = -wt[2]; // added to omega
    const Polynomial& t = shift_omega;
    const Polynomial& u = shift_theta;

    const std::vector<Polynomial> omega{t, Polynomial(1), Polynomial(0)};
    const std::vector<Polynomial> theta{u, Polynomial(0), Polynomial(1)};
    auto rebase = [&](std::vector<Polynomial> z) {
        // z0 + z1*(omega') + z2*(theta') with omega' = omega + t, theta' = theta + u
        z[0] -= t * z[1];
        z[0] -= u * z[2];
        return z;
    };
    const auto w1 = rebase(table.multiply(omega, omega)); // omega'^2
    const auto w2 = rebase(table.multiply(omega, theta)); // omega'*theta'
    const auto w3 = rebase(table.multiply(theta, theta)); // theta'^2
    if (!w2[1].is_zero() || !w2[2].is_zero())
        throw std::domain_error("cubic_form_from_order: translation failed to clear omega*theta");

    CubicFormRecovery out;
    out.shift_omega = t;
    out.shift_theta = u;
    const Polynomial a = w1[2];
    const Polynomial b = -w1[1];
    const Polynomial c = w3[2];
    const Polynomial d = -w3[1];
    if (w1[0] != -(a * c) || w2[0] != -(a * d) || w3[0] != -(b * d))
        throw std::domain_error(
            "cubic_form_from_order: consistency identities violated; table is not a cubic ring "
            "in a standard basis");
    if (!table.associative()) throw std::domain_error("cubic_form_from_order: table is not associative");
    out.coeffs = {a, b, c, d};
    return out;
}

BinaryForm cubic_form_from_order_integral(const StructureConstants& table) {
    CubicFormRecovery r = cubic_form_from_order(table);
    std::vector<BigInt> coeffs;
    for (const auto& c : r.coeffs) coeffs.push_back(c.constant_value());
    return BinaryForm(3, std::move(coeffs));
}

} // namespace ringforge
