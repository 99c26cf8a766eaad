#include "gmoments/error.hpp"
#include "gmoments/kernels.hpp"

#include <algorithm>
#include <utility>

namespace gmoments::kernels::serial {

namespace {

const Scalar& entry(const std::vector<std::vector<Scalar>>& rows, std::size_t i, std::size_t j) {
    static const Scalar zero;
    if (i >= rows.size() || j >= rows[i].size()) return zero;
    return rows[i][j];
}

}  // namespace

LowerRows multiply(const LowerRows& a, const LowerRows& b) {
    const std::size_t n = a.size();
    LowerRows c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            Scalar acc;
            for (std::size_t k = j; k <= i; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                acc += a[i][k] * b[k][j];
            }
            c[i][j] = std::move(acc);
        }
    }
    return c;
}

LowerRows hadamard(const LowerRows& a, const LowerRows& b) {
    LowerRows c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) c[i][j] = a[i][j] * b[i][j];
    }
    return c;
}

LowerRows invert(const LowerRows& t) {
    const std::size_t n = t.size();
    LowerRows x(n);
    for (std::size_t i = 0; i < n; ++i) x[i].resize(i + 1);
    // Forward substitution, one column at a time.
    for (std::size_t j = 0; j < n; ++j) {
        x[j][j] = exact_div(Scalar(1), t[j][j]);
        for (std::size_t i = j + 1; i < n; ++i) {
            Scalar acc;
            for (std::size_t k = j; k < i; ++k) {
                if (t[i][k].is_zero() || x[k][j].is_zero()) continue;
                acc += t[i][k] * x[k][j];
            }
            x[i][j] = acc.is_zero() ? Scalar() : exact_div(-acc, t[i][i]);
        }
    }
    return x;
}

LowerRows generate(const HessenbergRows& p, std::size_t n) {
    LowerRows t(n);
    if (n == 0) return t;
    t[0] = {Scalar(1)};
    for (std::size_t r = 0; r + 1 < n; ++r) {
        auto& next = t[r + 1];
        next.resize(r + 2);
        for (std::size_t j = 0; j <= r + 1; ++j) {
            Scalar acc;
            for (std::size_t i = (j == 0 ? 0 : j - 1); i <= r; ++i) {
                const Scalar& pij = entry(p, i, j);
                if (pij.is_zero() || t[r][i].is_zero()) continue;
                acc += t[r][i] * pij;
            }
            next[j] = std::move(acc);
        }
    }
    return t;
}

Scalar determinant(DenseRows m) {
    const std::size_t n = m.size();
    if (n == 0) return Scalar(1);
    bool negate = false;
    Scalar prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Scalar(0);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace gmoments::kernels::serial
