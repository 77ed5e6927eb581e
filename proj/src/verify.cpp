#include "ringforge/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ringforge {

PolyMatrix special_matrix(int n) {
    if (n < 3) throw std::invalid_argument("special_matrix: n >= 3 required");
    const auto a = symbolic_form_coeffs(n);
    const auto [p, q, r, s] = matrix_symbols();
    (void)q;
    (void)s;
    PolyMatrix out(n, n);
    out.at(0, 0) = p * a[0];
    out.at(0, n - 1) = r * a[0] * a[n];
    out.at(1, 0) = -r;
    out.at(1, 1) = p * a[0] + r * a[1];
    for (int j = 3; j <= n; ++j) out.at(1, j - 1) = r * a[j - 1];
    for (int k = 2; k <= n - 1; ++k) out.at(k, k - 1) = -(r * a[0]);
    for (int i = 3; i <= n; ++i) out.at(i - 1, i - 1) = p * a[0];
    return out;
}

namespace {

std::uint64_t fnv_update(std::uint64_t h, const std::string& s) {
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::string matrix_digest(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    std::uint64_t h = 1469598103934665603ull;
    h = fnv_update(h, "lhs");
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            h = fnv_update(h, lhs.at(i, j).str());
            h = fnv_update(h, ";");
        }
    h = fnv_update(h, "rhs");
    for (std::size_t i = 0; i < rhs.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            h = fnv_update(h, rhs.at(i, j).str());
            h = fnv_update(h, ";");
        }
    std::ostringstream os;
    os << "fnv64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

struct IdentitySides {
    PolyMatrix lhs, rhs, n_matrix;
};

IdentitySides identity_sides(const ParamSystem& sys) {
    const int n = sys.n;
    PolyMatrix n_direct = special_matrix(n);
    if (sys.form_coeffs == symbolic_form_coeffs(n)) {
        // Dual-construction gate: the closed form must match the generic
        // multiplication-matrix formulas at (a1 p, -r, 0, ..., 0).
        std::vector<Polynomial> coords(n, Polynomial(0));
        coords[0] = sys.m.p * sys.form_coeffs[0];
        coords[1] = -sys.m.r;
        if (!(arithmetic_matrix(sys.form_coeffs, coords) == n_direct))
            throw std::logic_error("special matrix disagrees with the generic construction");
    } else {
        std::vector<Polynomial> coords(n, Polynomial(0));
        coords[0] = sys.m.p * sys.form_coeffs[0];
        coords[1] = -sys.m.r;
        n_direct = arithmetic_matrix(sys.form_coeffs, coords);
    }

    const Polynomial scale = sys.form_coeffs[0].pow(n - 1);
    const PolyMatrix scaled_inv = triangular_scaled_inverse(sys.A, scale);
    IdentitySides sides;
    sides.lhs = (scaled_inv * sys.Q) * sys.B;
    sides.rhs = n_direct.pow(n - 1) * sys.T;
    sides.n_matrix = std::move(n_direct);
    return sides;
}

} // namespace

Certificate verify_identity(int n) {
    if (n < 3) throw std::invalid_argument("verify_identity: n >= 3 required");
    const auto start = std::chrono::steady_clock::now();

    const ParamSystem sys = build_param_system(n);
    IdentitySides sides = identity_sides(sys);

    Certificate cert;
    cert.n = n;
    cert.lhs_terms = sides.lhs.total_terms();
    cert.rhs_terms = sides.rhs.total_terms();
    cert.status = Certificate::Status::Verified;
    for (std::size_t i = 0; i < sides.lhs.rows() && cert.verified(); ++i)
        for (std::size_t j = 0; j < sides.lhs.cols(); ++j) {
            Polynomial diff = sides.lhs.at(i, j) - sides.rhs.at(i, j);
            if (!diff.is_zero()) {
                cert.status = Certificate::Status::Failed;
                cert.fail_row = i + 1;
                cert.fail_col = j + 1;
                cert.difference = std::move(diff);
                break;
            }
        }
    cert.digest = matrix_digest(sides.lhs, sides.rhs);
    cert.millis = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count());
    return cert;
}

PolyMatrix qbt_product(int n) {
    if (n < 3) throw std::invalid_argument("qbt_product: n >= 3 required");
    const auto a = symbolic_form_coeffs(n);
    const PolyMatrix nmat = special_matrix(n);
    const PolyMatrix numerator = coefficient_matrix(a, n) * nmat.pow(n - 1);
    const Polynomial scale = a[0].pow(n - 1);
    PolyMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = numerator.at(i, j).divide_exact(scale);
    return out;
}

bool identity_spot_check(int n, int points, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("identity_spot_check: n >= 3 required");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-50, 50);
    for (int pt = 0; pt < points; ++pt) {
        std::vector<Polynomial> coeffs;
        for (int k = 0; k <= n; ++k) {
            long long v = dist(rng);
            if (k == 0)
                while (v == 0) v = dist(rng); // a1 must stay nonzero for the scaled inverse
            coeffs.emplace_back(v);
        }
        Gl2 m{Polynomial(dist(rng)), Polynomial(dist(rng)), Polynomial(dist(rng)),
              Polynomial(dist(rng))};
        const ParamSystem sys = build_param_system(coeffs, m);
        IdentitySides sides = identity_sides(sys);
        if (!(sides.lhs == sides.rhs)) return false;
    }
    return true;
}

Polynomial coefficient_of(const Polynomial& poly, Variable var, std::uint32_t k) {
    Polynomial out;
    const Monomial vk(var, k);
    for (const auto& term : poly.terms()) {
        if (term.mono.degree_in(var) != k) continue;
        const Monomial reduced = k == 0 ? term.mono : term.mono / vk;
        Polynomial rebuilt(term.coeff);
        for (const auto& f : reduced.factors())
            rebuilt = rebuilt * Polynomial(Variable::from_id(f.var)).pow(f.exp);
        out += rebuilt;
    }
    return out;
}

namespace {

Polynomial classical_G(const std::vector<Polynomial>& c, const Polynomial& x, const Polynomial& y,
                       const Polynomial& z) {
    const Polynomial &a = c[0], &b = c[1], &cc = c[2], &d = c[3], &e = c[4];
    return (3 * b * b - 8 * a * cc) * x * x + (4 * b * cc - 24 * a * d) * x * y +
           (4 * cc * cc - 8 * b * d - 16 * a * e) * y * y + (2 * b * d - 32 * a * e) * x * z +
           (4 * cc * d - 24 * b * e) * y * z + (3 * d * d - 8 * cc * e) * z * z;
}

} // namespace

QuarticCovariants quartic_covariants(const std::vector<Polynomial>& coeffs) {
    if (coeffs.size() != 5) throw std::invalid_argument("quartic_covariants: quartic form required");
    const Polynomial &a = coeffs[0], &b = coeffs[1], &c = coeffs[2], &d = coeffs[3], &e = coeffs[4];
    const Variable tv("t"), xv("x"), yv("y"), zv("z");
    const Polynomial t(tv), x(xv), y(yv), z(zv);

    // Trace elimination. With u = (t + b x + 2 c y + 3 d z)/4 the matrix is
    // (1/4) N(t + b x + 2 c y + 3 d z, 4x, 4y, 4z) since entries are linear
    // in the coordinates, so 256 det N(u, x, y, z) is the determinant below.
    std::vector<Polynomial> coords{t + b * x + 2 * c * y + 3 * d * z, 4 * x, 4 * y, 4 * z};
    const PolyMatrix n = arithmetic_matrix(coeffs, coords);
    const Polynomial expansion = det_fraction_free(n);

    if (coefficient_of(expansion, tv, 4) != Polynomial(1))
        throw std::logic_error("quartic covariants: t^4 coefficient is not 1");
    if (!coefficient_of(expansion, tv, 3).is_zero())
        throw std::logic_error("quartic covariants: trace elimination left a t^3 term");

    QuarticCovariants out;
    out.G = (-coefficient_of(expansion, tv, 2)).divide_exact(Polynomial(2));
    out.H = (-coefficient_of(expansion, tv, 1)).divide_exact(Polynomial(8));
    out.F = coefficient_of(expansion, tv, 0);
    if (out.G != classical_G(coeffs, x, y, z))
        throw std::logic_error("quartic covariants: derived G does not match its closed form");
    out.I = 12 * a * e - 3 * b * d + c * c;
    out.J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * b * b * e - 2 * c * c * c;
    return out;
}

QuarticCovariants quartic_covariants(const BinaryForm& form) {
    if (form.degree() != 4) throw std::invalid_argument("quartic_covariants: degree-4 form required");
    std::vector<Polynomial> coeffs;
    for (const auto& c : form.coeffs()) coeffs.emplace_back(c);
    return quartic_covariants(coeffs);
}

SyzygyResult syzygy_check(const std::vector<Polynomial>& coeffs) {
    const QuarticCovariants cov = quartic_covariants(coeffs);
    const Variable xv("x"), yv("y"), zv("z");
    const Polynomial x(xv);
    std::map<std::uint32_t, Polynomial> sub{{xv.id(), x * x}, {yv.id(), x}, {zv.id(), Polynomial(1)}};
    const Polynomial g4 = cov.G.substitute(sub);
    const Polynomial g6 = cov.H.substitute(sub);
    Polynomial v;
    for (int k = 0; k < 5; ++k) v += coeffs[k] * x.pow(4 - k);

    SyzygyResult out;
    out.difference =
        g4.pow(3) - 48 * g4 * cov.I * v.pow(2) - 64 * cov.J * v.pow(3) - 27 * g6.pow(2);
    out.holds = out.difference.is_zero();
    return out;
}

SyzygyResult syzygy_check(const BinaryForm& form) {
    if (form.degree() != 4) throw std::invalid_argument("syzygy_check: degree-4 form required");
    std::vector<Polynomial> coeffs;
    for (const auto& c : form.coeffs()) coeffs.emplace_back(c);
    return syzygy_check(coeffs);
}

std::string status_string(Certificate::Status s) {
    return s == Certificate::Status::Verified ? "verified" : "failed";
}

} // namespace ringforge
