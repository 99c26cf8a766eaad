#pragma once

// Test-side reference computations. They use plain GMP integers and
// rationals and share no code with the library.

#include "gmoments/ring.hpp"
#include "gmoments/triangle.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;
using Matrix = std::vector<std::vector<Rat>>;

// numer/denom by schoolbook long division.
inline std::vector<Rat> long_division(std::vector<Rat> numer, const std::vector<Rat>& denom,
                                      std::size_t order) {
    numer.resize(order + denom.size());
    std::vector<Rat> out;
    for (std::size_t k = 0; k < order; ++k) {
        Rat c = numer[k] / denom[0];
        out.push_back(c);
        for (std::size_t j = 0; j < denom.size(); ++j) numer[k + j] -= c * denom[j];
    }
    return out;
}

inline Int catalan(unsigned long n) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
    return b / (n + 1);
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Laplace expansion along the first row.
inline Rat cofactor_det(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rat total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(row);
        }
        const Rat term = m[0][j] * cofactor_det(minor);
        total += (j % 2 == 0) ? term : Rat(-term);
    }
    return total;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Inverse of a lower-triangular matrix by Gauss-Jordan on [A | I].
inline Matrix lower_inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix w = a;
    Matrix inv(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        const Rat p = w[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            w[c][j] /= p;
            inv[c][j] /= p;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rat f = w[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                w[r][j] -= f * w[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

inline Rat to_rat(const gmoments::Scalar& s) { return gmoments::to_rational(s); }

inline Matrix dense(const gmoments::Triangle& t) {
    const std::size_t n = t.size();
    Matrix m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m[i][j] = to_rat(t(i, j));
    return m;
}

inline bool equal(const Matrix& m, const gmoments::Triangle& t) {
    const Matrix d = dense(t);
    return d == m;
}

// Generated matrix from a production matrix given as dense rows (row i has
// entries in columns 0..i+1): row r+1 = row r * P.
inline Matrix generate(const Matrix& p, std::size_t n) {
    Matrix out(n, std::vector<Rat>(n));
    if (n == 0) return out;
    out[0][0] = 1;
    for (std::size_t r = 0; r + 1 < n; ++r)
        for (std::size_t j = 0; j <= r + 1; ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k <= r; ++k)
                if (j <= k + 1) s += out[r][k] * p[k][j];
            out[r + 1][j] = s;
        }
    return out;
}

// Moments of the J-fraction via the Stieltjes table: the generated matrix of
// the tridiagonal production matrix has them in column 0.
inline std::vector<Rat> jfraction_moments(const std::vector<Rat>& b, const std::vector<Rat>& lambda,
                                          std::size_t count) {
    std::vector<Rat> mu;
    std::vector<Rat> row{1};
    for (std::size_t m = 0; m < count; ++m) {
        mu.push_back(row[0]);
        std::vector<Rat> next(row.size() + 1);
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k >= 1) next[k - 1] += row[k] * (k - 1 < lambda.size() ? lambda[k - 1] : Rat(0));
            next[k] += row[k] * (k < b.size() ? b[k] : Rat(0));
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return mu;
}

inline std::vector<gmoments::Scalar> scalars(const std::vector<long>& v) {
    return {v.begin(), v.end()};
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20260417);
    return g;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

}  // namespace oracle
