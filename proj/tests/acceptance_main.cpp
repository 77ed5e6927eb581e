// Acceptance suite: one timed pass/fail line per criterion, nonzero exit if
// any fails. Budgets are enforced as part of each criterion.

#include "ringforge/json_io.hpp"
#include "ringforge/verify.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ringforge;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool matrices_equal_serialized(const PolyMatrix& a, const PolyMatrix& b, std::string& detail) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        detail = "dimension mismatch";
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j).str() != b.at(i, j).str()) {
                detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "): " + a.at(i, j).str() + " vs " + b.at(i, j).str();
                return false;
            }
    return true;
}

// ---------------------------------------------------------------------- 1
bool arithmetic_matrix_fidelity(std::string& detail) {
    const auto a3 = symbolic_form_coeffs(3);
    const auto x3 = symbolic_coords(3);
    PolyMatrix cubic(3, 3);
    cubic.at(0, 0) = x3[0];
    cubic.at(0, 1) = -(a3[0] * a3[3] * x3[2]);
    cubic.at(0, 2) = -(a3[3] * (a3[0] * x3[1] + a3[1] * x3[2]));
    cubic.at(1, 0) = x3[1];
    cubic.at(1, 1) = x3[0] - a3[1] * x3[1] - a3[2] * x3[2];
    cubic.at(1, 2) = -(a3[2] * x3[1]) - a3[3] * x3[2];
    cubic.at(2, 0) = x3[2];
    cubic.at(2, 1) = a3[0] * x3[1];
    cubic.at(2, 2) = x3[0] - a3[2] * x3[2];
    if (!matrices_equal_serialized(arithmetic_matrix(a3, x3), cubic, detail)) return false;

    const auto a4 = symbolic_form_coeffs(4);
    const auto x4 = symbolic_coords(4);
    PolyMatrix quartic(4, 4);
    quartic.at(0, 0) = x4[0];
    quartic.at(0, 1) = -(a4[0] * a4[4] * x4[3]);
    quartic.at(0, 2) = -(a4[4] * (a4[0] * x4[2] + a4[1] * x4[3]));
    quartic.at(0, 3) = -(a4[4] * (a4[0] * x4[1] + a4[1] * x4[2] + a4[2] * x4[3]));
    quartic.at(1, 0) = x4[1];
    quartic.at(1, 1) = x4[0] - a4[1] * x4[1] - a4[2] * x4[2] - a4[3] * x4[3];
    quartic.at(1, 2) = -(a4[2] * x4[1]) - a4[3] * x4[2] - a4[4] * x4[3];
    quartic.at(1, 3) = -(a4[3] * x4[1]) - a4[4] * x4[2];
    quartic.at(2, 0) = x4[2];
    quartic.at(2, 1) = a4[0] * x4[1];
    quartic.at(2, 2) = x4[0] - a4[2] * x4[2] - a4[3] * x4[3];
    quartic.at(2, 3) = -(a4[3] * x4[2]) - a4[4] * x4[3];
    quartic.at(3, 0) = x4[3];
    quartic.at(3, 1) = a4[0] * x4[2];
    quartic.at(3, 2) = a4[0] * x4[1] + a4[1] * x4[2];
    quartic.at(3, 3) = x4[0] - a4[3] * x4[3];
    return matrices_equal_serialized(arithmetic_matrix(a4, x4), quartic, detail);
}

// ---------------------------------------------------------------------- 2
bool multiplication_tables(std::string& detail) {
    const auto a = symbolic_form_coeffs(3);
    const Polynomial &A = a[0], &B = a[1], &C = a[2], &D = a[3];
    const auto cubic = multiplication_table(a);
    using V = std::vector<Polynomial>;
    const Polynomial zero(0);
    if (cubic.product(1, 1) != V{zero, -B, A} || cubic.product(1, 2) != V{-(A * D), -C, zero} ||
        cubic.product(2, 2) != V{-(B * D), -D, -C}) {
        detail = "cubic table mismatch";
        return false;
    }
    const auto shifted = normalized_cubic_table(a);
    if (shifted.product(1, 1) != V{-(A * C), -B, A} ||
        shifted.product(1, 2) != V{-(A * D), zero, zero} ||
        shifted.product(2, 2) != V{-(B * D), -D, C}) {
        detail = "normalized cubic table mismatch";
        return false;
    }
    const auto a4 = symbolic_form_coeffs(4);
    const Polynomial &A4 = a4[0], &B4 = a4[1], &C4 = a4[2], &D4 = a4[3], &E4 = a4[4];
    const auto quartic = multiplication_table(a4);
    if (quartic.product(1, 1) != V{zero, -B4, A4, zero} ||
        quartic.product(1, 2) != V{zero, -C4, zero, A4} ||
        quartic.product(1, 3) != V{-(A4 * E4), -D4, zero, zero} ||
        quartic.product(2, 2) != V{-(A4 * E4), -D4, -C4, B4} ||
        quartic.product(2, 3) != V{-(B4 * E4), -E4, -D4, zero} ||
        quartic.product(3, 3) != V{-(C4 * E4), zero, -E4, -D4}) {
        detail = "quartic table mismatch";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------- 3
bool property_suite(std::string& detail) {
    std::mt19937_64 rng(20260809);
    for (int degree = 3; degree <= 6; ++degree) {
        for (int round = 0; round < 200; ++round) {
            const BinaryForm f = oracles::random_form(degree, rng);
            const OrderContext ctx(f);
            const auto ac = oracles::random_coords(degree, rng);
            const auto bc = oracles::random_coords(degree, rng);
            const RingElement alpha(ctx, ac), beta(ctx, bc);

            // additivity of the matrices
            const IntMatrix na = arithmetic_matrix_int(f, ac);
            const IntMatrix nb = arithmetic_matrix_int(f, bc);
            const IntMatrix nsum = arithmetic_matrix_int(f, element_add(alpha, beta).coords());
            for (int i = 0; i < degree; ++i)
                for (int j = 0; j < degree; ++j)
                    if (na[i][j] + nb[i][j] != nsum[i][j]) {
                        detail = "matrix additivity failed for form " + f.str();
                        return false;
                    }

            // multiplicativity and commutation
            const auto prod_coords = element_mul(alpha, beta).coords();
            const IntMatrix nab = arithmetic_matrix_int(f, prod_coords);
            if (int_mat_mul(na, nb) != nab || int_mat_mul(nb, na) != nab) {
                detail = "matrix multiplicativity failed for form " + f.str();
                return false;
            }
            if (prod_coords != oracles::mul_via_reduction(f, ac, bc)) {
                detail = "product disagrees with the reduction oracle for form " + f.str();
                return false;
            }

            // trace and norm against independent oracles
            if (trace(alpha) != oracles::trace_via_power_sums(f, ac)) {
                detail = "trace oracle mismatch for form " + f.str();
                return false;
            }
            if (norm(alpha) != oracles::norm_via_resultant(f, ac)) {
                detail = "norm oracle mismatch for form " + f.str();
                return false;
            }

            // alpha * alpha^{-1} = 1 after clearing the denominator
            if (norm(alpha) != 0) {
                const auto inv = element_inverse(alpha);
                if (norm(alpha) % inv.denom != 0) {
                    detail = "inverse denominator does not divide the norm";
                    return false;
                }
                std::vector<BigInt> unit(degree, BigInt(0));
                unit[0] = inv.denom;
                if (element_mul(alpha, RingElement(ctx, inv.coords)).coords() != unit) {
                    detail = "alpha * inverse(alpha) != 1 for form " + f.str();
                    return false;
                }
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------- 4
bool change_of_basis_fidelity(std::string& detail) {
    {
        const auto a = symbolic_form_coeffs(3);
        const auto [p, q, r, s] = matrix_symbols();
        const Polynomial m = p * s - q * r;
        PolyMatrix expected(3, 3);
        expected.at(0, 0) = Polynomial(1);
        expected.at(0, 1) = -(a[0] * p * p * q + a[1] * p * q * r + a[2] * q * r * r + a[3] * r * r * s);
        expected.at(0, 2) = -(2 * a[0] * p * q * q + a[1] * p * q * s + a[1] * q * q * r +
                              2 * a[2] * q * r * s + 2 * a[3] * r * s * s);
        expected.at(1, 1) = m * p;
        expected.at(1, 2) = m * q;
        expected.at(2, 1) = m * r;
        expected.at(2, 2) = m * s;
        if (!matrices_equal_serialized(build_T(a, Gl2::symbols()), expected, detail)) return false;
    }
    {
        const auto a = symbolic_form_coeffs(4);
        const auto [p, q, r, s] = matrix_symbols();
        const Polynomial m = p * s - q * r;
        PolyMatrix expected(4, 4);
        expected.at(0, 0) = Polynomial(1);
        expected.at(0, 1) = -(a[0] * p.pow(3) * q + a[1] * p * p * q * r + a[2] * p * q * r * r +
                              a[3] * q * r.pow(3) + a[4] * r.pow(3) * s);
        expected.at(0, 2) = -(3 * a[0] * p * p * q * q + a[1] * p * p * q * s +
                              2 * a[1] * p * q * q * r + 2 * a[2] * p * q * r * s +
                              a[2] * q * q * r * r + 3 * a[4] * r * r * s * s + 3 * a[3] * q * r * r * s);
        expected.at(0, 3) = -(3 * a[0] * p * q.pow(3) + a[1] * q.pow(3) * r + 2 * a[1] * p * q * q * s +
                              2 * a[2] * q * q * r * s + a[2] * p * s * s * q + 3 * a[3] * q * r * s * s +
                              3 * a[4] * r * s.pow(3));
        expected.at(1, 1) = m * p * p;
        expected.at(1, 2) = 2 * m * p * q;
        expected.at(1, 3) = m * q * q;
        expected.at(2, 1) = m * p * r;
        expected.at(2, 2) = m * (p * s + q * r);
        expected.at(2, 3) = m * q * s;
        expected.at(3, 1) = m * r * r;
        expected.at(3, 2) = 2 * m * r * s;
        expected.at(3, 3) = m * s * s;
        if (!matrices_equal_serialized(build_T(a, Gl2::symbols()), expected, detail)) return false;
    }
    {
        const auto a = symbolic_form_coeffs(5);
        const auto [p, q, r, s] = matrix_symbols();
        const Polynomial m = p * s - q * r;
        const Polynomial &A = a[0], &B = a[1], &C = a[2], &D = a[3], &E = a[4], &F = a[5];
        PolyMatrix expected(5, 5);
        expected.at(0, 0) = Polynomial(1);
        expected.at(0, 1) = -(A * q * p.pow(4)) - B * q * r * p.pow(3) - C * q * r * r * p * p -
                            D * q * r.pow(3) * p - E * q * r.pow(4) - F * r.pow(4) * s;
        expected.at(0, 2) = -4 * A * q * q * p.pow(3) - B * q * s * p.pow(3) -
                            3 * B * q * q * r * p * p - 2 * C * q * r * s * p * p -
                            2 * C * q * q * r * r * p - 3 * D * q * r * r * s * p -
                            D * q * q * r.pow(3) - 4 * F * r.pow(3) * s * s - 4 * E * q * r.pow(3) * s;
        expected.at(0, 3) = -6 * A * p * p * q.pow(3) - C * r * r * q.pow(3) -
                            3 * B * p * r * q.pow(3) - 3 * B * p * p * s * q * q -
                            3 * D * r * r * s * q * q - 4 * C * p * r * s * q * q -
                            C * p * p * s * s * q - 6 * E * r * r * s * s * q -
                            3 * D * p * r * s * s * q - 6 * F * r * r * s.pow(3);
        expected.at(0, 4) = -4 * A * p * q.pow(4) - B * r * q.pow(4) - 3 * B * p * s * q.pow(3) -
                            2 * C * r * s * q.pow(3) - 2 * C * p * s * s * q * q -
                            3 * D * r * s * s * q * q - D * p * s.pow(3) * q - 4 * E * r * s.pow(3) * q -
                            4 * F * r * s.pow(4);
        const PolyMatrix block = build_P(5, Gl2::symbols());
        for (int i = 1; i < 5; ++i)
            for (int j = 1; j < 5; ++j) expected.at(i, j) = m * block.at(i - 1, j - 1);
        if (!matrices_equal_serialized(build_T(a, Gl2::symbols()), expected, detail)) return false;
        // the quintic block entries as printed, spot-checked
        const PolyMatrix t = build_T(a, Gl2::symbols());
        if (t.at(2, 2) != p * m * (p * s + 2 * q * r) || t.at(3, 3) != s * m * (p * s + 2 * q * r)) {
            detail = "quintic block pattern mismatch";
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------- 5
bool central_identity_paper_range(std::string& detail) {
    for (int n = 3; n <= 6; ++n) {
        const Certificate cert = verify_identity(n);
        if (!cert.verified()) {
            detail = "identity failed at n = " + std::to_string(n) + " entry (" +
                     std::to_string(cert.fail_row) + "," + std::to_string(cert.fail_col) + ")";
            return false;
        }
        if (!matrices_equal_serialized(qbt_product(n), fixtures::qbt_reference(n), detail)) {
            detail = "printed product mismatch at n = " + std::to_string(n) + ": " + detail;
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------- 6
bool central_identity_beyond(std::string& detail) {
    std::ostringstream os;
    bool all_verified = true;
    for (int n = 7; n <= 10; ++n) {
        const Certificate cert = verify_identity(n);
        os << "n=" << n << ":" << status_string(cert.status) << "(" << cert.millis << "ms) ";
        if (!cert.verified()) {
            all_verified = false;
            os << "difference at (" << cert.fail_row << "," << cert.fail_col
               << "): " << (cert.difference ? cert.difference->str() : "") << " ";
        }
    }
    detail = os.str();
    // completing all four certificates inside the budget is the criterion;
    // a Failed certificate would be a finding, not a test bug, but the
    // conjecture is expected to hold and we assert it.
    return all_verified;
}

// ---------------------------------------------------------------------- 7
bool element_level_transport(std::string& detail) {
    std::mt19937_64 rng(424242);
    const int pairs = 50;
    const int trials_per_pair = 200; // 10,000 trials in total
    int det_minus = 0;
    for (int i = 0; i < pairs; ++i) {
        BinaryForm f = oracles::random_form(3, rng);
        UnimodularMatrix m = oracles::random_unimodular(rng);
        if (i % 2 == 1 && m.det() == 1) m = m * UnimodularMatrix(0, 1, 1, 0);
        if (m.det() == -1) ++det_minus;
        BinaryForm image = act(f, m);
        if (!image.nondegenerate()) {
            --i;
            continue;
        }
        const IsoReport report = isomorphism_check(f, m, trials_per_pair, rng());
        if (!report.ok()) {
            detail = "counterexample at form " + f.str() + ", law " + report.counterexample->law;
            return false;
        }
    }
    if (det_minus == 0) {
        detail = "no det = -1 matrices were exercised";
        return false;
    }

    // symbolic homomorphism law with every coordinate, coefficient and
    // matrix entry symbolic
    for (int n = 3; n <= 4; ++n) {
        const ParamSystem sys = build_param_system(n);
        const auto u = symbolic_coords(n, "u");
        const auto v = symbolic_coords(n, "v");
        const auto lhs = mat_vec(sys.T, mat_vec(arithmetic_matrix(sys.image_coeffs, u), v));
        const auto rhs =
            mat_vec(arithmetic_matrix(sys.form_coeffs, mat_vec(sys.T, u)), mat_vec(sys.T, v));
        if (lhs != rhs) {
            detail = "symbolic homomorphism law failed at n = " + std::to_string(n);
            return false;
        }
    }
    detail = "det=-1 pairs: " + std::to_string(det_minus) + "/" + std::to_string(pairs);
    return true;
}

// ---------------------------------------------------------------------- 8
bool cubic_converse_round_trip(std::string& detail) {
    std::mt19937_64 rng(515151);
    for (int round = 0; round < 100; ++round) {
        const BinaryForm f = oracles::random_form(3, rng);
        std::vector<Polynomial> coeffs;
        for (const auto& c : f.coeffs()) coeffs.emplace_back(c);
        const auto recovered = cubic_form_from_order(multiplication_table(coeffs));
        for (int k = 0; k < 4; ++k)
            if (recovered.coeffs[k] != coeffs[k]) {
                detail = "round trip failed for form " + f.str();
                return false;
            }
    }
    // symbolic consistency identities: recovery of the generic form passes
    // the three checks inside cubic_form_from_order by construction
    const auto a = symbolic_form_coeffs(3);
    const auto recovered = cubic_form_from_order(multiplication_table(a));
    if (recovered.coeffs != a) {
        detail = "symbolic recovery mismatch";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------- 9
bool quartic_covariants_and_syzygy(std::string& detail) {
    const auto a = symbolic_form_coeffs(4);
    try {
        const QuarticCovariants cov = quartic_covariants(a); // asserts the G match internally
        const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y"),
                         z = Polynomial::variable("z");
        const Polynomial printed_G =
            (3 * a[1] * a[1] - 8 * a[0] * a[2]) * x * x + (4 * a[1] * a[2] - 24 * a[0] * a[3]) * x * y +
            (4 * a[2] * a[2] - 8 * a[1] * a[3] - 16 * a[0] * a[4]) * y * y +
            (2 * a[1] * a[3] - 32 * a[0] * a[4]) * x * z + (4 * a[2] * a[3] - 24 * a[1] * a[4]) * y * z +
            (3 * a[3] * a[3] - 8 * a[2] * a[4]) * z * z;
        if (cov.G != printed_G) {
            detail = "derived G differs from the closed form";
            return false;
        }
        const SyzygyResult syz = syzygy_check(a);
        if (!syz.holds) {
            detail = "syzygy difference: " + syz.difference.str();
            return false;
        }
    } catch (const std::exception& e) {
        detail = e.what();
        return false;
    }
    return true;
}

// --------------------------------------------------------------------- 10
bool determinant_laws(std::string& detail) {
    const auto [p, q, r, s] = matrix_symbols();
    const Polynomial m = p * s - q * r;
    for (int n = 3; n <= 8; ++n) {
        const auto a = symbolic_form_coeffs(n);
        // det(P) = m^((n-1)(n-2)/2); det(T) = m^(n(n-1)/2), so T lands in
        // SL_n exactly when the exponent is even or det(M) = +1
        if (det_fraction_free(build_P(n, Gl2::symbols())) != m.pow((n - 1) * (n - 2) / 2)) {
            detail = "det(P) law failed at n = " + std::to_string(n);
            return false;
        }
        if (det_fraction_free(build_T(a, Gl2::symbols())) != m.pow(n * (n - 1) / 2)) {
            detail = "det(T) law failed at n = " + std::to_string(n);
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"arithmetic matrices match the cubic and quartic references", 1.0, arithmetic_matrix_fidelity},
        {"cubic, shifted-cubic and quartic multiplication tables", 1.0, multiplication_tables},
        {"element arithmetic properties on 200 random forms per degree 3..6", 30.0, property_suite},
        {"change-of-basis matrices match the printed T for n = 3, 4, 5", 1.0, change_of_basis_fidelity},
        {"central identity verified for n = 3..6 with printed products", 10.0,
         central_identity_paper_range},
        {"central identity certificates for n = 7..10", 600.0, central_identity_beyond},
        {"transport is a ring homomorphism: 10000 trials and symbolic laws", 60.0,
         element_level_transport},
        {"cubic form recovery round-trips and consistency identities", 5.0, cubic_converse_round_trip},
        {"quartic covariants and the Cremona syzygy, fully symbolic", 30.0,
         quartic_covariants_and_syzygy},
        {"determinant laws for P and T, n = 3..8", 10.0, determinant_laws},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = seconds <= c.budget_seconds;
        if (!in_budget && ok) detail = "over budget";
        const bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s  [%zu] %s (%.2fs, budget %.0fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), seconds, c.budget_seconds, detail.empty() ? "" : " -- ",
                    detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
