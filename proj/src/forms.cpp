#include "ringforge/forms.hpp"

#include "ringforge/int_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ringforge {

BinaryForm::BinaryForm(int degree, std::vector<BigInt> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ < 2 || degree_ > kMaxDegree)
        throw std::invalid_argument("binary form degree must be in [2, " + std::to_string(kMaxDegree) + "]");
    if (coeffs_.size() != static_cast<std::size_t>(degree_ + 1))
        throw std::invalid_argument("binary form of degree " + std::to_string(degree_) + " needs " +
                                    std::to_string(degree_ + 1) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
}

BinaryForm BinaryForm::from_coeffs(std::vector<BigInt> coeffs) {
    if (coeffs.size() < 3) throw std::invalid_argument("binary form needs at least 3 coefficients");
    int degree = static_cast<int>(coeffs.size()) - 1;
    return BinaryForm(degree, std::move(coeffs));
}

BigInt BinaryForm::eval(const BigInt& x, const BigInt& y) const {
    BigInt acc(0);
    BigInt ypow(1);
    std::vector<BigInt> xp(degree_ + 1);
    xp[0] = 1;
    for (int i = 1; i <= degree_; ++i) xp[i] = xp[i - 1] * x;
    for (int k = 1; k <= degree_ + 1; ++k) {
        acc += coeffs_[k - 1] * xp[degree_ + 1 - k] * ypow;
        ypow *= y;
    }
    return acc;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ')';
    return os.str();
}

UnimodularMatrix::UnimodularMatrix(BigInt p, BigInt q, BigInt r, BigInt s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
    const BigInt d = det();
    if (d != 1 && d != -1)
        throw std::invalid_argument("matrix is not unimodular: det = " + d.str());
}

UnimodularMatrix UnimodularMatrix::inverse() const {
    const BigInt m = det(); // +-1, so the adjugate over m is m * adjugate
    return {m * s_, -m * q_, -m * r_, m * p_};
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& other) const {
    return {p_ * other.p_ + q_ * other.r_, p_ * other.q_ + q_ * other.s_,
            r_ * other.p_ + s_ * other.r_, r_ * other.q_ + s_ * other.s_};
}

namespace {

// Coefficients of (u + v*x)^k, ascending in x.
std::vector<BigInt> binomial_power(const BigInt& u, const BigInt& v, int k) {
    std::vector<BigInt> out(k + 1);
    // binomials via Pascal row
    std::vector<BigInt> binom(k + 1, BigInt(0));
    binom[0] = 1;
    for (int row = 1; row <= k; ++row)
        for (int j = row; j >= 1; --j) binom[j] += binom[j - 1];
    std::vector<BigInt> up(k + 1), vp(k + 1);
    up[0] = vp[0] = 1;
    for (int i = 1; i <= k; ++i) {
        up[i] = up[i - 1] * u;
        vp[i] = vp[i - 1] * v;
    }
    for (int h = 0; h <= k; ++h) out[h] = binom[h] * up[k - h] * vp[h];
    return out;
}

} // namespace

BinaryForm act(const BinaryForm& form, const UnimodularMatrix& m) {
    const int n = form.degree();
    // b_i = coefficient of x^(i-1) in sum_k a_k (p + q x)^(n+1-k) (r + s x)^(k-1),
    // which is the coefficient sequence of B o M.
    std::vector<BigInt> b(n + 1, BigInt(0));
    for (int k = 1; k <= n + 1; ++k) {
        if (form.a(k) == 0) continue;
        const auto left = binomial_power(m.p(), m.q(), n + 1 - k);
        const auto right = binomial_power(m.r(), m.s(), k - 1);
        for (std::size_t i = 0; i < left.size(); ++i)
            for (std::size_t j = 0; j < right.size(); ++j) b[i + j] += form.a(k) * left[i] * right[j];
    }
    return BinaryForm(n, std::move(b));
}

BigInt discriminant(const BinaryForm& form) {
    if (form.leading() == 0) throw std::domain_error("discriminant: leading coefficient is zero");
    const int n = form.degree();
    // f(x) = B(x, 1), highest power first.
    std::vector<BigInt> f(form.coeffs());
    std::vector<BigInt> df(n);
    for (int k = 0; k < n; ++k) df[k] = f[k] * (n - k);
    BigInt res = resultant(f, df);
    BigInt disc = res / form.leading();
    assert(disc * form.leading() == res);
    const int sign_exp = (n * (n - 1) / 2) % 2;
    return sign_exp ? BigInt(-disc) : disc;
}

// ---------------------------------------------------------------------------
// Irreducibility certificate

namespace {

using u64 = std::uint64_t;

u64 mod_pow(u64 base, u64 exp, u64 p) {
    u64 out = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) out = (__uint128_t)out * base % p;
        base = (__uint128_t)base * base % p;
        exp >>= 1;
    }
    return out;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

// Univariate polynomials over F_p, coefficients ascending, no leading zeros.
using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + (__uint128_t)a[i] * b[j]) % p;
    }
    fp_trim(out);
    return out;
}

// Remainder of a modulo monic m.
FpPoly fp_mod(FpPoly a, const FpPoly& m, u64 p) {
    fp_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        u64 c = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (c) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                u64 sub = (__uint128_t)c * m[i] % p;
                u64& slot = a[shift + i];
                slot = (slot + p - sub) % p;
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.size() <= dm) break;
    }
    fp_trim(a);
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, u64 p) {
    return fp_mod(fp_mul(a, b, p), m, p);
}

FpPoly fp_powmod(FpPoly base, const BigInt& exp, const FpPoly& m, u64 p) {
    FpPoly out{1};
    BigInt e = exp;
    base = fp_mod(std::move(base), m, p);
    while (e > 0) {
        if ((e & 1) != 0) out = fp_mulmod(out, base, m, p);
        e >>= 1;
        if (e > 0) base = fp_mulmod(base, base, m, p);
    }
    return out;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // make b monic before reduction
        u64 inv = mod_inv(b.back(), p);
        FpPoly bm(b);
        for (auto& c : bm) c = (__uint128_t)c * inv % p;
        a = fp_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin's irreducibility test for monic f over F_p.
bool fp_irreducible(const FpPoly& f, u64 p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    FpPoly x{0, 1};

    std::vector<std::size_t> prime_divs;
    std::size_t m = n;
    for (std::size_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divs.push_back(m);

    for (std::size_t ell : prime_divs) {
        BigInt e = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n / ell));
        FpPoly h = fp_powmod(x, e, f, p);
        // h - x
        FpPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        FpPoly g = fp_gcd(f, diff, p);
        if (!(g.size() == 1)) return false; // nontrivial gcd
    }
    BigInt e = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(n));
    FpPoly h = fp_powmod(x, e, f, p);
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(diff);
    return diff.empty();
}

std::vector<long long> first_primes(int count) {
    std::vector<long long> out;
    long long candidate = 2;
    while (static_cast<int>(out.size()) < count) {
        bool prime = true;
        for (long long d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(candidate);
        ++candidate;
    }
    return out;
}

// Positive divisors by trial division; gives up (returns partial list marked
// incomplete) past the trial bound, which only weakens rational-root search,
// never the Irreducible answer.
std::pair<std::vector<BigInt>, bool> divisors_of(const BigInt& value) {
    BigInt v = big_abs(value);
    std::vector<std::pair<BigInt, int>> factorization;
    for (BigInt d = 2; d * d <= v && d <= 1000000; ++d) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) {
                v /= d;
                ++e;
            }
            factorization.emplace_back(d, e);
        }
    }
    bool complete = true;
    if (v > 1) {
        // No factor below 1e6: prime if below 1e12, otherwise unresolved.
        if (v <= BigInt("1000000000000"))
            factorization.emplace_back(v, 1);
        else
            complete = false;
    }
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [prime, mult] : factorization) {
        const std::size_t base = divs.size();
        BigInt pw(1);
        for (int e = 1; e <= mult; ++e) {
            pw *= prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
        }
    }
    return {std::move(divs), complete};
}

} // namespace

IrreducibilityResult irreducibility_certificate(const BinaryForm& form, int prime_budget) {
    if (form.leading() == 0)
        throw std::domain_error("irreducibility: leading coefficient is zero");
    IrreducibilityResult out;
    const int n = form.degree();

    if (form.trailing() == 0) {
        out.kind = IrreducibilityResult::Kind::RationalRoot;
        out.root_num = 0;
        out.root_den = 1;
        return out;
    }

    // Rational roots u/v (reduced, v > 0) need u | a_{n+1} and v | a1.
    auto [nums, nums_complete] = divisors_of(form.trailing());
    auto [dens, dens_complete] = divisors_of(form.leading());
    (void)nums_complete;
    (void)dens_complete;
    for (const BigInt& u : nums) {
        for (const BigInt& v : dens) {
            if (big_gcd(u, v) != 1) continue;
            if (form.eval(u, v) == 0) {
                out.kind = IrreducibilityResult::Kind::RationalRoot;
                out.root_num = u;
                out.root_den = v;
                return out;
            }
            if (form.eval(-u, v) == 0) {
                out.kind = IrreducibilityResult::Kind::RationalRoot;
                out.root_num = -u;
                out.root_den = v;
                return out;
            }
        }
    }

    for (long long p : first_primes(prime_budget)) {
        if (form.leading() % p == 0) continue; // degree drops mod p
        FpPoly f(n + 1);
        for (int k = 0; k <= n; ++k) {
            // ascending: coefficient of x^k is a_{n+1-k}
            BigInt c = form.a(n + 1 - k) % p;
            if (c < 0) c += p;
            f[k] = static_cast<u64>(c);
        }
        // monicize
        u64 inv = mod_inv(f.back(), static_cast<u64>(p));
        for (auto& c : f) c = (__uint128_t)c * inv % p;
        if (fp_irreducible(f, static_cast<u64>(p))) {
            out.kind = IrreducibilityResult::Kind::Irreducible;
            out.witness_prime = p;
            return out;
        }
    }
    out.kind = IrreducibilityResult::Kind::Unknown;
    return out;
}

} // namespace ringforge
