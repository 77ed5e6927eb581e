#include "ringforge/poly_matrix.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ringforge {

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial(1);
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix addition: dimension mismatch");
    PolyMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    PolyMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

unsigned matrix_threads() {
    static const unsigned n = [] {
        if (const char* env = std::getenv("RINGFORGE_THREADS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<unsigned>(v);
        }
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : hw;
    }();
    return n;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    PolyMatrix out(rows_, other.cols_);
    auto compute_entry = [&](std::size_t i, std::size_t j) {
        Polynomial acc;
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& a = at(i, k);
            const Polynomial& b = other.at(k, j);
            if (a.is_zero() || b.is_zero()) continue;
            acc += a * b;
        }
        out.at(i, j) = std::move(acc);
    };

    const std::size_t total = rows_ * other.cols_;
    const unsigned threads = matrix_threads();
    if (threads <= 1 || total < 8) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < other.cols_; ++j) compute_entry(i, j);
        return out;
    }

    // Entries are independent; strided assignment keeps the result identical
    // to the sequential one for any thread count.
    std::vector<std::thread> pool;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(threads, total));
    pool.reserve(used);
    for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t idx = t; idx < total; idx += used)
                compute_entry(idx / out.cols_, idx % out.cols_);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != other.entries_[k]) return false;
    return true;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& factor) const {
    PolyMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * factor;
    return out;
}

PolyMatrix PolyMatrix::pow(std::uint32_t exponent) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix power: square matrix required");
    PolyMatrix result = identity(rows_);
    PolyMatrix base(*this);
    std::uint32_t e = exponent;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial PolyMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: square matrix required");
    Polynomial t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

std::vector<Polynomial> PolyMatrix::column(std::size_t j) const {
    std::vector<Polynomial> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

std::size_t PolyMatrix::total_terms() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.term_count();
    return n;
}

std::vector<Polynomial> mat_vec(const PolyMatrix& m, const std::vector<Polynomial>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Polynomial> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Polynomial acc;
        for (std::size_t k = 0; k < m.cols(); ++k) acc += m.at(i, k) * v[k];
        out[i] = std::move(acc);
    }
    return out;
}

Polynomial det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(1);
    if (n == 1) return m.at(0, 0);
    Polynomial acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Polynomial term = m.at(0, j) * det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Polynomial det_bareiss(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(1);
    PolyMatrix w(m);
    Polynomial prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && w.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Polynomial(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num.divide_exact(prev);
            }
            w.at(i, k) = Polynomial(0);
        }
        prev = w.at(k, k);
    }
    Polynomial d = w.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Polynomial det_fraction_free(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix triangular_scaled_inverse(const PolyMatrix& a, const Polynomial& scale) {
    if (a.rows() != a.cols()) throw std::invalid_argument("triangular inverse: square matrix required");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!a.at(i, j).is_zero())
                throw std::invalid_argument("triangular inverse: matrix is not upper triangular at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    for (std::size_t i = 0; i < n; ++i)
        if (a.at(i, i).is_zero())
            throw std::invalid_argument("triangular inverse: zero diagonal entry at (" + std::to_string(i + 1) +
                                        "," + std::to_string(i + 1) + ")");

    PolyMatrix s(n, n);
    // Back-substitution on A*S = scale*I, one column at a time.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t ii = 0; ii <= j; ++ii) {
            const std::size_t i = j - ii;
            Polynomial rhs = (i == j) ? scale : Polynomial(0);
            for (std::size_t k = i + 1; k <= j; ++k) rhs -= a.at(i, k) * s.at(k, j);
            try {
                s.at(i, j) = rhs.divide_exact(a.at(i, i));
            } catch (const ExactDivisionError& e) {
                throw ExactDivisionError("triangular inverse: inexact division at entry (" +
                                             std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                                             e.what(),
                                         e.remainder());
            }
        }
    }
    return s;
}

} // namespace ringforge
