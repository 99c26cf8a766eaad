#pragma once

#include "gmoments/ring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gmoments {

// n x n lower-triangular matrix; row i stores entries 0..i.
class Triangle {
public:
    using Rows = std::vector<std::vector<Scalar>>;

    Triangle() = default;
    explicit Triangle(std::size_t n);
    static Triangle identity(std::size_t n);
    // Accepts rows that are either exactly i+1 long or padded with zeros; a
    // nonzero entry above the diagonal throws std::invalid_argument.
    static Triangle from_rows(const Rows& rows);

    std::size_t size() const { return rows_.size(); }
    // Zero above the diagonal.
    const Scalar& operator()(std::size_t i, std::size_t j) const;
    // j <= i only.
    Scalar& at(std::size_t i, std::size_t j);
    std::span<const Scalar> row(std::size_t i) const { return rows_[i]; }
    const Rows& rows() const { return rows_; }
    std::vector<Scalar> column(std::size_t j) const;

    bool unit_diagonal() const { return unit_diagonal_; }
    // Recomputes the unit-diagonal flag from the entries.
    void refresh_unit_diagonal();

    Triangle leading(std::size_t n) const;

    friend bool operator==(const Triangle& a, const Triangle& b);

private:
    friend Triangle adopt_rows(Rows rows, bool unit_diagonal);
    Rows rows_;
    bool unit_diagonal_ = true;
};

// Almost-lower-Hessenberg matrix with `size` rows; row i has entries in
// columns 0..i+1 and nothing can be stored further right.
class ProductionMatrix {
public:
    using Rows = std::vector<std::vector<Scalar>>;

    ProductionMatrix() = default;
    explicit ProductionMatrix(std::size_t size);
    // Rows may be shorter than i+2 (missing entries are zero) or zero-padded.
    static ProductionMatrix from_rows(const Rows& rows);
    // Tridiagonal form: diagonal b_0.., subdiagonal lambda_1.. (lambda[i-1]
    // sits at (i, i-1)), superdiagonal 1.
    static ProductionMatrix tridiagonal(std::span<const Scalar> diagonal,
                                        std::span<const Scalar> subdiagonal, std::size_t size);

    std::size_t size() const { return rows_.size(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const;
    // Throws std::out_of_range for j > i+1.
    void set(std::size_t i, std::size_t j, Scalar value);
    const Rows& rows() const { return rows_; }

    std::vector<Scalar> diagonal() const;
    std::vector<Scalar> subdiagonal() const;
    std::vector<Scalar> superdiagonal() const;
    bool is_tridiagonal() const;

    ProductionMatrix leading(std::size_t size) const;

    friend bool operator==(const ProductionMatrix& a, const ProductionMatrix& b);

private:
    Rows rows_;
};

// Unit lower bidiagonal matrix with subdiagonal entries sub[0], sub[1], ...
Triangle bidiagonal(std::span<const Scalar> sub, std::size_t n);

// Row 0 is (1, 0, ...), row r+1 = row r * P. Needs P.size() >= n-1. The
// result's unit-diagonal flag is set iff every superdiagonal entry of P that
// was used is 1.
Triangle generate(const ProductionMatrix& p, std::size_t n);

// Drops the first row. Throws std::invalid_argument for size < 2.
ProductionMatrix behead(const Triangle& t);

// Exact inverse; diagonal entries must be units of the scalar ring
// (NotDivisible otherwise).
Triangle invert(const Triangle& t);

Triangle mul(const Triangle& a, const Triangle& b);
Triangle hadamard(const Triangle& a, const Triangle& b);

// The unique P with generate(P, n) == t, computed as the inverse of the
// leading (n-1) block applied to t without its first row. Size n-1.
ProductionMatrix production_of(const Triangle& t);

enum class Rescale { multiply, divide };
// Column k scaled by d[k], or exactly divided by it (NotDivisible when an
// entry is not a multiple).
Triangle rescale_columns(const Triangle& t, std::span<const Scalar> d, Rescale mode);

// Determinant of (mu_{i+j})_{0<=i,j<=n}, fraction-free.
Scalar hankel_det(std::span<const Scalar> mu, std::size_t n);
// h_0 .. h_{count-1}.
std::vector<Scalar> hankel_transform(std::span<const Scalar> mu, std::size_t count);

// Fraction-free (Bareiss) determinant of a square matrix with row pivoting.
Scalar determinant(std::vector<std::vector<Scalar>> m);

}  // namespace gmoments
