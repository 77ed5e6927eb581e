#include "ringforge/param.hpp"

#include <random>
#include <stdexcept>

namespace ringforge {

namespace {

// Coefficients of (u + v*x)^k, ascending in x.
std::vector<Polynomial> binomial_power(const Polynomial& u, const Polynomial& v, int k) {
    std::vector<Polynomial> out;
    out.reserve(k + 1);
    out.push_back(Polynomial(1));
    // (u + v x)^k by repeated convolution with (u, v); k is tiny.
    for (int step = 0; step < k; ++step) {
        std::vector<Polynomial> next(out.size() + 1);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i] += out[i] * u;
            next[i + 1] += out[i] * v;
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Polynomial> convolve(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

PolyMatrix build_P(int n, const Gl2& m) {
    if (n < 3) throw std::invalid_argument("build_P: n >= 3 required");
    PolyMatrix out(n - 1, n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        auto coeffs = convolve(binomial_power(m.p, m.q, n - 1 - i), binomial_power(m.r, m.s, i - 1));
        for (int j = 1; j <= n - 1; ++j)
            out.at(i - 1, j - 1) = (static_cast<std::size_t>(j - 1) < coeffs.size()) ? coeffs[j - 1]
                                                                                     : Polynomial(0);
    }
    return out;
}

PolyMatrix build_Q(int n, const Gl2& m) {
    if (n < 3) throw std::invalid_argument("build_Q: n >= 3 required");
    PolyMatrix out(n, n);
    for (int j = 1; j <= n; ++j) {
        auto coeffs = convolve(binomial_power(m.p, -m.r, n - j), binomial_power(-m.q, m.s, j - 1));
        for (int i = 1; i <= n; ++i)
            out.at(i - 1, j - 1) = (static_cast<std::size_t>(i - 1) < coeffs.size()) ? coeffs[i - 1]
                                                                                     : Polynomial(0);
    }
    return out;
}

std::vector<Polynomial> build_B_coeffs(const std::vector<Polynomial>& form_coeffs, const Gl2& m) {
    const int n = static_cast<int>(form_coeffs.size()) - 1;
    if (n < 1) throw std::invalid_argument("build_B_coeffs: form needs degree >= 1");
    std::vector<Polynomial> b(n + 1);
    for (int k = 1; k <= n + 1; ++k) {
        if (form_coeffs[k - 1].is_zero()) continue;
        auto prod = convolve(binomial_power(m.p, m.q, n + 1 - k), binomial_power(m.r, m.s, k - 1));
        for (int i = 0; i <= n; ++i) b[i] += form_coeffs[k - 1] * prod[i];
    }
    return b;
}

PolyMatrix coefficient_matrix(const std::vector<Polynomial>& coeffs, int n) {
    PolyMatrix out(n, n);
    out.at(0, 0) = Polynomial(1);
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) out.at(i - 1, j - 1) = coeffs[j - i];
    return out;
}

PolyMatrix build_T(const std::vector<Polynomial>& form_coeffs, const Gl2& m) {
    const int n = static_cast<int>(form_coeffs.size()) - 1;
    if (n < 3) throw std::invalid_argument("build_T: n >= 3 required");

    // Truncated form on (a1, ..., an), transformed by M.
    std::vector<Polynomial> truncated(form_coeffs.begin(), form_coeffs.end() - 1);
    std::vector<Polynomial> image = build_B_coeffs(truncated, m); // degree n-1, n coefficients
    std::vector<Polynomial> tail = binomial_power(m.r, m.s, n - 1);
    // sum_{j>=2} t_1j x^(j-2); the x^(n-1) coefficient exists but is dropped.
    std::vector<Polynomial> first_row(n, Polynomial(0));
    first_row[0] = Polynomial(1);
    for (int j = 2; j <= n; ++j)
        first_row[j - 1] = -(m.q * image[j - 2] + form_coeffs[n] * m.s * tail[j - 2]);

    const Polynomial det = m.det();
    const PolyMatrix p = build_P(n, m);
    PolyMatrix out(n, n);
    for (int j = 0; j < n; ++j) out.at(0, j) = first_row[j];
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) out.at(i, j) = det * p.at(i - 1, j - 1);
    return out;
}

ParamSystem build_param_system(const std::vector<Polynomial>& form_coeffs, const Gl2& m) {
    ParamSystem sys;
    sys.n = static_cast<int>(form_coeffs.size()) - 1;
    if (sys.n < 3) throw std::invalid_argument("param system: degree >= 3 required");
    sys.form_coeffs = form_coeffs;
    sys.m = m;
    sys.image_coeffs = build_B_coeffs(form_coeffs, m);
    sys.A = coefficient_matrix(form_coeffs, sys.n);
    sys.B = coefficient_matrix(sys.image_coeffs, sys.n);
    sys.Q = build_Q(sys.n, m);
    sys.P = build_P(sys.n, m);
    sys.T = build_T(form_coeffs, m);
    return sys;
}

ParamSystem build_param_system(int n) {
    return build_param_system(symbolic_form_coeffs(n), Gl2::symbols());
}

ParamSystem build_param_system(const BinaryForm& form, const UnimodularMatrix& m) {
    std::vector<Polynomial> coeffs;
    for (const auto& c : form.coeffs()) coeffs.emplace_back(c);
    return build_param_system(coeffs, Gl2::of(m));
}

namespace {

IntMatrix transport_matrix(const BinaryForm& form, const UnimodularMatrix& m) {
    std::vector<Polynomial> coeffs;
    for (const auto& c : form.coeffs()) coeffs.emplace_back(c);
    PolyMatrix t = build_T(coeffs, Gl2::of(m));
    const int n = form.degree();
    IntMatrix out(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = t.at(i, j).constant_value();
    return out;
}

} // namespace

RingElement transport_element(const BinaryForm& form, const UnimodularMatrix& m,
                              const std::vector<BigInt>& coords_in_image_order) {
    if (coords_in_image_order.size() != static_cast<std::size_t>(form.degree()))
        throw std::invalid_argument("transport_element: coordinate count mismatch");
    IntMatrix t = transport_matrix(form, m);
    return RingElement(OrderContext(form), int_mat_vec(t, coords_in_image_order));
}

IsoReport isomorphism_check(const BinaryForm& form, const UnimodularMatrix& m, int trials,
                            std::uint64_t seed) {
    const BigInt det = m.det();
    if (det != 1 && det != -1) throw std::invalid_argument("isomorphism_check: |det M| must be 1");
    if (!form.nondegenerate())
        throw std::domain_error("isomorphism_check: form " + form.str() + " has a1*a_{n+1} = 0");
    const BinaryForm image = act(form, m);
    if (!image.nondegenerate())
        throw std::domain_error("isomorphism_check: transformed form " + image.str() +
                                " is degenerate (leading or trailing coefficient 0); pick another M");

    const int n = form.degree();
    const OrderContext source(image); // ring of B o M, where alpha and beta live
    const OrderContext target(form);
    const IntMatrix t = transport_matrix(form, m);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    auto random_coords = [&] {
        std::vector<BigInt> c(n);
        for (auto& v : c) v = dist(rng);
        return c;
    };
    auto lambda = [&](const std::vector<BigInt>& coords) {
        return RingElement(target, int_mat_vec(t, coords));
    };

    IsoReport report;
    report.trials = trials;
    for (int i = 0; i < trials; ++i) {
        const auto ac = random_coords();
        const auto bc = random_coords();
        const RingElement alpha(source, ac);
        const RingElement beta(source, bc);

        const RingElement lhs_add = lambda(element_add(alpha, beta).coords());
        const RingElement rhs_add = element_add(lambda(ac), lambda(bc));
        if (!(lhs_add == rhs_add)) {
            report.counterexample = IsoCounterexample{ac, bc, "additive"};
            return report;
        }
        const RingElement lhs_mul = lambda(element_mul(alpha, beta).coords());
        const RingElement rhs_mul = element_mul(lambda(ac), lambda(bc));
        if (!(lhs_mul == rhs_mul)) {
            report.counterexample = IsoCounterexample{ac, bc, "multiplicative"};
            return report;
        }
        ++report.passed;
    }
    return report;
}

} // namespace ringforge
