#include "ringforge/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace ringforge {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Variable v, std::uint32_t exp) {
    if (exp > 0) factors_.push_back({v.id(), exp});
}

std::uint32_t Monomial::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.exp;
    return d;
}

std::uint32_t Monomial::degree_in(Variable v) const noexcept {
    for (const auto& f : factors_)
        if (f.var == v.id()) return f.exp;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    std::size_t i = 0, j = 0;
    while (i < factors_.size() && j < other.factors_.size()) {
        const auto& a = factors_[i];
        const auto& b = other.factors_[j];
        if (a.var == b.var) {
            out.factors_.push_back({a.var, a.exp + b.exp});
            ++i, ++j;
        } else if (Variable::rank_of(a.var) < Variable::rank_of(b.var)) {
            out.factors_.push_back(a);
            ++i;
        } else {
            out.factors_.push_back(b);
            ++j;
        }
    }
    for (; i < factors_.size(); ++i) out.factors_.push_back(factors_[i]);
    for (; j < other.factors_.size(); ++j) out.factors_.push_back(other.factors_[j]);
    return out;
}

bool Monomial::divisible_by(const Monomial& other) const noexcept {
    std::size_t i = 0;
    for (const auto& b : other.factors_) {
        while (i < factors_.size() && factors_[i].var != b.var) ++i;
        if (i == factors_.size() || factors_[i].exp < b.exp) return false;
    }
    return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out;
    std::size_t j = 0;
    for (const auto& a : factors_) {
        if (j < other.factors_.size() && other.factors_[j].var == a.var) {
            if (other.factors_[j].exp > a.exp) throw std::domain_error("monomial quotient not exact");
            if (a.exp > other.factors_[j].exp) out.factors_.push_back({a.var, a.exp - other.factors_[j].exp});
            ++j;
        } else {
            out.factors_.push_back(a);
        }
    }
    if (j != other.factors_.size()) throw std::domain_error("monomial quotient not exact");
    return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    const std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() && j < b.factors_.size()) {
        const auto& fa = a.factors_[i];
        const auto& fb = b.factors_[j];
        if (fa.var == fb.var) {
            if (fa.exp != fb.exp) return fa.exp < fb.exp ? -1 : 1;
            ++i, ++j;
            continue;
        }
        // The side holding the earlier variable has the larger exponent there.
        return Variable::rank_of(fa.var) < Variable::rank_of(fb.var) ? 1 : -1;
    }
    if (i < a.factors_.size()) return 1;
    if (j < b.factors_.size()) return -1;
    return 0;
}

std::size_t Monomial::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& f : factors_) {
        h = (h ^ f.var) * 1099511628211ull;
        h = (h ^ f.exp) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += '*';
        out += Variable::name_of(f.var);
        if (f.exp > 1) {
            out += '^';
            out += std::to_string(f.exp);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long long value) {
    if (value != 0) terms_.push_back({Monomial{}, BigInt(value)});
}

Polynomial::Polynomial(const BigInt& value) {
    if (value != 0) terms_.push_back({Monomial{}, value});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial(v), BigInt(1)}); }

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

BigInt Polynomial::constant_value() const {
    if (terms_.empty()) return BigInt(0);
    if (terms_.size() == 1 && terms_[0].mono.is_unit()) return terms_[0].coeff;
    throw std::domain_error("polynomial is not constant: " + str());
}

std::uint32_t Polynomial::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        int c = Monomial::compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            BigInt sum = terms_[i].coeff + other.terms_[j].coeff;
            if (sum != 0) out.terms_.push_back({terms_[i].mono, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    *this = *this + other;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    *this = *this - other;
    return *this;
}

namespace {

struct MonoHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

} // namespace

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (terms_.empty() || other.terms_.empty()) return Polynomial();
    const Polynomial& small = terms_.size() <= other.terms_.size() ? *this : other;
    const Polynomial& large = terms_.size() <= other.terms_.size() ? other : *this;

    // Few-term factors: scaled merges keep the result sorted without hashing.
    if (small.terms_.size() <= 4) {
        Polynomial acc;
        for (const auto& s : small.terms_) {
            Polynomial partial;
            partial.terms_.reserve(large.terms_.size());
            for (const auto& t : large.terms_)
                partial.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
            acc = acc + partial;
        }
        return acc;
    }

    std::unordered_map<Monomial, BigInt, MonoHash> acc;
    acc.reserve(small.terms_.size() * 2 + large.terms_.size());
    for (const auto& s : small.terms_) {
        for (const auto& t : large.terms_) {
            Monomial m = s.mono * t.mono;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), s.coeff * t.coeff);
            else
                it->second += s.coeff * t.coeff;
        }
    }
    Polynomial out;
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.terms_.push_back({m, std::move(c)});
    out.normalize_sorted();
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

void Polynomial::normalize_sorted() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return Monomial::compare(a.mono, b.mono) > 0;
    });
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result(1);
    Polynomial base(*this);
    std::uint32_t e = exponent;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

BigInt Polynomial::evaluate(const std::map<std::uint32_t, BigInt>& assignment) const {
    // Power cache per variable avoids re-exponentiating across terms.
    std::map<std::uint32_t, std::vector<BigInt>> powers;
    BigInt total(0);
    for (const auto& t : terms_) {
        BigInt v = t.coeff;
        for (const auto& f : t.mono.factors()) {
            auto it = assignment.find(f.var);
            if (it == assignment.end())
                throw std::invalid_argument("evaluate: no value for variable " + Variable::name_of(f.var));
            auto& cache = powers[f.var];
            if (cache.empty()) cache.push_back(BigInt(1));
            while (cache.size() <= f.exp) cache.push_back(cache.back() * it->second);
            v *= cache[f.exp];
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<std::uint32_t, Polynomial>& assignment) const {
    std::map<std::uint32_t, std::vector<Polynomial>> powers;
    Polynomial total;
    for (const auto& t : terms_) {
        Polynomial v(t.coeff);
        Monomial untouched;
        for (const auto& f : t.mono.factors()) {
            auto it = assignment.find(f.var);
            if (it == assignment.end()) {
                untouched = untouched * Monomial(Variable::from_id(f.var), f.exp);
                continue;
            }
            auto& cache = powers[f.var];
            if (cache.empty()) cache.push_back(Polynomial(1));
            while (cache.size() <= f.exp) cache.push_back(cache.back() * it->second);
            v = v * cache[f.exp];
        }
        if (!untouched.is_unit()) {
            Polynomial m;
            m.terms_.push_back({untouched, BigInt(1)});
            v = v * m;
        }
        total += v;
    }
    return total;
}

PolyDivMod Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    const Monomial& lead_m = divisor.terms_[0].mono;
    const BigInt& lead_c = divisor.terms_[0].coeff;

    Polynomial rem;
    Polynomial quot;
    Polynomial work(*this);
    while (!work.terms_.empty()) {
        const Term& top = work.terms_[0];
        if (top.mono.divisible_by(lead_m) && top.coeff % lead_c == 0) {
            Polynomial t;
            t.terms_.push_back({top.mono / lead_m, top.coeff / lead_c});
            quot += t;
            work = work - t * divisor;
        } else {
            Polynomial t;
            t.terms_.push_back(top);
            rem += t;
            work.terms_.erase(work.terms_.begin());
        }
    }
    return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    PolyDivMod dm = divmod(divisor);
    if (!dm.remainder.is_zero())
        throw ExactDivisionError("inexact polynomial division: (" + str() + ") / (" + divisor.str() +
                                     "), remainder " + dm.remainder.str(),
                                 dm.remainder);
    return std::move(dm.quotient);
}

Polynomial Polynomial::reduce(const Polynomial& modulus) const { return divmod(modulus).remainder; }

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        BigInt mag = negative ? BigInt(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.mono.is_unit()) {
            out += mag.str();
        } else {
            if (mag != 1) {
                out += mag.str();
                out += '*';
            }
            out += t.mono.str();
        }
    }
    return out;
}

std::uint64_t Polynomial::fnv1a64() const {
    std::uint64_t h = 1469598103934665603ull;
    const std::string s = str();
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

Polynomial operator+(long long lhs, const Polynomial& rhs) { return Polynomial(lhs) + rhs; }
Polynomial operator-(long long lhs, const Polynomial& rhs) { return Polynomial(lhs) - rhs; }
Polynomial operator*(long long lhs, const Polynomial& rhs) { return Polynomial(lhs) * rhs; }

std::vector<Polynomial> symbolic_form_coeffs(int degree, std::string_view stem) {
    if (degree < 1) throw std::invalid_argument("form degree must be at least 1");
    std::vector<Polynomial> out;
    out.reserve(degree + 1);
    for (int k = 1; k <= degree + 1; ++k)
        out.push_back(Polynomial::variable(std::string(stem) + std::to_string(k)));
    return out;
}

std::vector<Polynomial> symbolic_coords(int n, std::string_view stem) {
    std::vector<Polynomial> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j)
        out.push_back(Polynomial::variable(std::string(stem) + std::to_string(j)));
    return out;
}

MatrixSymbols matrix_symbols() {
    return {Polynomial::variable("p"), Polynomial::variable("q"), Polynomial::variable("r"),
            Polynomial::variable("s")};
}

} // namespace ringforge
