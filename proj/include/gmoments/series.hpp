#pragma once

#include "gmoments/ring.hpp"
#include "gmoments/triangle.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gmoments {

// Power series known through x^{order-1}. Binary operations on series of
// different orders truncate to the smaller one.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}

    static TruncatedSeries constant(const Scalar& c, std::size_t order);
    static TruncatedSeries x(std::size_t order);

    std::size_t order() const { return c_.size(); }
    const Scalar& operator[](std::size_t k) const { return c_.at(k); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    TruncatedSeries truncated(std::size_t order) const;
    // Multiplication by x^k, keeping the order.
    TruncatedSeries shifted(std::size_t k) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    std::vector<Scalar> c_;
};

// numer/denom expanded to `order` terms. denom[0] must be nonzero.
TruncatedSeries series_from_rational(std::span<const Scalar> numer,
                                     std::span<const Scalar> denom, std::size_t order);
// Same, for a rational function of x written as a Scalar (see parse_scalar
// with var 'x').
TruncatedSeries series_from_function(const Scalar& f, std::size_t order);

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_reciprocal(const TruncatedSeries& a);
// outer(inner(x)); inner must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);
// fbar with f(fbar(x)) = x; f needs f(0) = 0 and f'(0) != 0.
TruncatedSeries series_revert(const TruncatedSeries& f);

// 1, 1, 2, 5, 14, ... from c_{n+1} = sum_k c_k c_{n-k}.
TruncatedSeries catalan_series(std::size_t order);

// The Riordan array (g, f): column k holds g * f^k.
class RiordanPair {
public:
    // Throws MathError unless g(0) != 0, f(0) = 0 and f'(0) != 0.
    RiordanPair(TruncatedSeries g, TruncatedSeries f);

    const TruncatedSeries& g() const { return g_; }
    const TruncatedSeries& f() const { return f_; }
    std::size_t order() const { return std::min(g_.order(), f_.order()); }

private:
    TruncatedSeries g_;
    TruncatedSeries f_;
};

Triangle riordan_matrix(const RiordanPair& p, std::size_t n);
// (g1, f1)(g2, f2) = (g1 * g2(f1), f2(f1)).
RiordanPair riordan_mul(const RiordanPair& p1, const RiordanPair& p2);
// (g, f)^{-1} = (1 / g(fbar), fbar).
RiordanPair riordan_inverse(const RiordanPair& p);

// Left-to-right interleaving of two arrays. Column 2j of the result is
// column j of `a` moved down j rows; column 2j+1 is column j+1 of `b` moved
// down j rows. Entries that would land above the diagonal are dropped. With
// a = (g, f) and b = (1, f) this turns column j of each into x^j g f^j and
// x^j f^{j+1}, which is how the little Schroeder N is assembled.
Triangle interleave_columns(const Triangle& a, const Triangle& b);

// Alternate-row interleaving: row 2m of the result is row m of `a` moved right
// m columns, row 2m+1 is row m+1 of `b` moved right m columns.
Triangle interleave_rows(const Triangle& a, const Triangle& b);

// Series behind the little Schroeder arrays, produced from their quadratic
// functional equations:
//   g = 1 - x g + 2 x g^2      ((1 + x - sqrt(1 - 6x + x^2)) / (4x))
//   f = x (1 + 3 f + 2 f^2)     ((1 - 3x - sqrt(1 - 6x + x^2)) / (4x))
TruncatedSeries schroder_g(std::size_t order);
TruncatedSeries schroder_f(std::size_t order);

// Column k of the little Schroeder N: g (x f)^{k/2} for even k,
// x^k (f/x)^{(k+1)/2} = x^{(k-1)/2} f^{(k+1)/2} for odd k.
std::vector<Scalar> schroder_column(std::size_t k, std::size_t order);

}  // namespace gmoments
