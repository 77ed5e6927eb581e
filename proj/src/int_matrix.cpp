#include "ringforge/int_matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ringforge {

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<BigInt> int_mat_vec(const IntMatrix& m, const std::vector<BigInt>& v) {
    std::vector<BigInt> out(m.size(), BigInt(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size()) throw std::invalid_argument("int_mat_vec: dimension mismatch");
        for (std::size_t k = 0; k < v.size(); ++k) out[i] += m[i][k] * v[k];
    }
    return out;
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
    IntMatrix out(n, std::vector<BigInt>(cols, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("int_mat_mul: dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

BigInt int_det(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return BigInt(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("int_det: square matrix required");
    BigInt prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return BigInt(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                assert(num % prev == 0);
                m[i][j] = num / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? BigInt(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

BigInt resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
    if (f.size() < 2 || g.size() < 2)
        throw std::invalid_argument("resultant: both polynomials must have formal degree >= 1");
    const std::size_t df = f.size() - 1, dg = g.size() - 1;
    const std::size_t n = df + dg;
    IntMatrix s(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t row = 0; row < dg; ++row)
        for (std::size_t k = 0; k <= df; ++k) s[row][row + k] = f[k];
    for (std::size_t row = 0; row < df; ++row)
        for (std::size_t k = 0; k <= dg; ++k) s[dg + row][row + k] = g[k];
    return int_det(std::move(s));
}

} // namespace ringforge
