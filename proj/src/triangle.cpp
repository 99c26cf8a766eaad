#include "gmoments/triangle.hpp"

#include "gmoments/error.hpp"
#include "gmoments/kernels.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gmoments {

namespace {

const Scalar& zero_scalar() {
    static const Scalar zero;
    return zero;
}

bool diagonal_is_unit(const Triangle::Rows& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i][i].is_one()) return false;
    return true;
}

void require_same_size(const Triangle& a, const Triangle& b, const char* op) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(op) + ": size mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
}

}  // namespace

Triangle adopt_rows(Triangle::Rows rows, bool unit_diagonal) {
    Triangle t;
    t.rows_ = std::move(rows);
    t.unit_diagonal_ = unit_diagonal;
    return t;
}

Triangle::Triangle(std::size_t n) : rows_(n), unit_diagonal_(n == 0) {
    for (std::size_t i = 0; i < n; ++i) rows_[i].resize(i + 1);
}

Triangle Triangle::identity(std::size_t n) {
    Triangle t(n);
    for (std::size_t i = 0; i < n; ++i) t.rows_[i][i] = Scalar(1);
    t.unit_diagonal_ = true;
    return t;
}

Triangle Triangle::from_rows(const Rows& rows) {
    Rows out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out[i].resize(i + 1);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j <= i)
                out[i][j] = r[j];
            else if (!r[j].is_zero())
                throw std::invalid_argument("nonzero entry above the diagonal at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    const bool unit = diagonal_is_unit(out);
    return adopt_rows(std::move(out), unit);
}

const Scalar& Triangle::operator()(std::size_t i, std::size_t j) const {
    if (j > i) return zero_scalar();
    return rows_.at(i)[j];
}

Scalar& Triangle::at(std::size_t i, std::size_t j) {
    if (j > i) throw std::out_of_range("Triangle::at above the diagonal");
    return rows_.at(i)[j];
}

std::vector<Scalar> Triangle::column(std::size_t j) const {
    std::vector<Scalar> c(size());
    for (std::size_t i = j; i < size(); ++i) c[i] = rows_[i][j];
    return c;
}

void Triangle::refresh_unit_diagonal() { unit_diagonal_ = diagonal_is_unit(rows_); }

Triangle Triangle::leading(std::size_t n) const {
    if (n > size()) throw std::invalid_argument("Triangle::leading beyond size");
    Rows r(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(n));
    const bool unit = diagonal_is_unit(r);
    return adopt_rows(std::move(r), unit);
}

bool operator==(const Triangle& a, const Triangle& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (!(a.rows_[i][j] == b.rows_[i][j])) return false;
    return true;
}

ProductionMatrix::ProductionMatrix(std::size_t size) : rows_(size) {
    for (std::size_t i = 0; i < size; ++i) rows_[i].resize(i + 2);
}

ProductionMatrix ProductionMatrix::from_rows(const Rows& rows) {
    ProductionMatrix p(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (j <= i + 1)
                p.rows_[i][j] = rows[i][j];
            else if (!rows[i][j].is_zero())
                throw std::invalid_argument("production matrix entry above the superdiagonal at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return p;
}

ProductionMatrix ProductionMatrix::tridiagonal(std::span<const Scalar> diagonal,
                                               std::span<const Scalar> subdiagonal,
                                               std::size_t size) {
    if (diagonal.size() < size || (size > 1 && subdiagonal.size() < size - 1))
        throw MathError("tridiagonal production matrix of size " + std::to_string(size) +
                        " needs " + std::to_string(size) + " diagonal and " +
                        std::to_string(size > 0 ? size - 1 : 0) + " subdiagonal entries");
    ProductionMatrix p(size);
    for (std::size_t i = 0; i < size; ++i) {
        p.rows_[i][i] = diagonal[i];
        p.rows_[i][i + 1] = Scalar(1);
        if (i > 0) p.rows_[i][i - 1] = subdiagonal[i - 1];
    }
    return p;
}

const Scalar& ProductionMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= rows_[i].size()) return zero_scalar();
    return rows_[i][j];
}

void ProductionMatrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (i >= rows_.size() || j > i + 1)
        throw std::out_of_range("production matrix has no entry (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    rows_[i][j] = std::move(value);
}

std::vector<Scalar> ProductionMatrix::diagonal() const {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < size(); ++i) d.push_back(rows_[i][i]);
    return d;
}

std::vector<Scalar> ProductionMatrix::subdiagonal() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < size(); ++i) d.push_back(rows_[i][i - 1]);
    return d;
}

std::vector<Scalar> ProductionMatrix::superdiagonal() const {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < size(); ++i) d.push_back(rows_[i][i + 1]);
    return d;
}

bool ProductionMatrix::is_tridiagonal() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j + 1 < i; ++j)
            if (!rows_[i][j].is_zero()) return false;
    return true;
}

ProductionMatrix ProductionMatrix::leading(std::size_t size) const {
    if (size > this->size()) throw std::invalid_argument("ProductionMatrix::leading beyond size");
    ProductionMatrix p;
    p.rows_.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(size));
    return p;
}

bool operator==(const ProductionMatrix& a, const ProductionMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j <= i + 1; ++j)
            if (!(a.rows_[i][j] == b.rows_[i][j])) return false;
    return true;
}

Triangle bidiagonal(std::span<const Scalar> sub, std::size_t n) {
    if (n > 1 && sub.size() < n - 1)
        throw MathError("bidiagonal matrix of size " + std::to_string(n) + " needs " +
                        std::to_string(n - 1) + " subdiagonal entries, got " +
                        std::to_string(sub.size()));
    Triangle t = Triangle::identity(n);
    for (std::size_t i = 1; i < n; ++i) t.at(i, i - 1) = sub[i - 1];
    return t;
}

Triangle generate(const ProductionMatrix& p, std::size_t n) {
    if (n > 1 && p.size() < n - 1)
        throw MathError("production matrix of size " + std::to_string(p.size()) +
                        " cannot generate " + std::to_string(n) + " rows");
    bool unit = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!p(i, i + 1).is_one()) unit = false;
    auto rows = kernels::use_parallel(n) ? kernels::parallel::generate(p.rows(), n)
                                         : kernels::serial::generate(p.rows(), n);
    return adopt_rows(std::move(rows), unit);
}

ProductionMatrix behead(const Triangle& t) {
    if (t.size() < 2) throw std::invalid_argument("behead needs at least two rows");
    ProductionMatrix p(t.size() - 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        for (std::size_t j = 0; j <= i + 1; ++j) p.set(i, j, t(i + 1, j));
    return p;
}

Triangle invert(const Triangle& t) {
    auto rows = kernels::use_parallel(t.size()) ? kernels::parallel::invert(t.rows())
                                                : kernels::serial::invert(t.rows());
    const bool unit = t.unit_diagonal() || diagonal_is_unit(rows);
    return adopt_rows(std::move(rows), unit);
}

Triangle mul(const Triangle& a, const Triangle& b) {
    require_same_size(a, b, "mul");
    auto rows = kernels::use_parallel(a.size()) ? kernels::parallel::multiply(a.rows(), b.rows())
                                                : kernels::serial::multiply(a.rows(), b.rows());
    const bool unit = (a.unit_diagonal() && b.unit_diagonal()) || diagonal_is_unit(rows);
    return adopt_rows(std::move(rows), unit);
}

Triangle hadamard(const Triangle& a, const Triangle& b) {
    require_same_size(a, b, "hadamard");
    auto rows = kernels::use_parallel(a.size()) ? kernels::parallel::hadamard(a.rows(), b.rows())
                                                : kernels::serial::hadamard(a.rows(), b.rows());
    const bool unit = diagonal_is_unit(rows);
    return adopt_rows(std::move(rows), unit);
}

ProductionMatrix production_of(const Triangle& t) {
    const std::size_t n = t.size();
    if (n < 2) return ProductionMatrix(0);
    const Triangle head_inverse = invert(t.leading(n - 1));
    ProductionMatrix p(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j <= i + 1; ++j) {
            Scalar acc;
            // (T_head^{-1})_{i,k} * T_{k+1,j}, nonzero only for j <= k+1 <= i+1.
            for (std::size_t k = (j == 0 ? 0 : j - 1); k <= i; ++k) {
                const Scalar& lhs = head_inverse(i, k);
                const Scalar& rhs = t(k + 1, j);
                if (lhs.is_zero() || rhs.is_zero()) continue;
                acc += lhs * rhs;
            }
            p.set(i, j, std::move(acc));
        }
    }
    return p;
}

Triangle rescale_columns(const Triangle& t, std::span<const Scalar> d, Rescale mode) {
    if (d.size() < t.size())
        throw std::invalid_argument("rescale_columns: need one factor per column");
    Triangle::Rows rows = t.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            if (d[j].is_zero()) throw MathError("rescale_columns: zero factor for column " +
                                                std::to_string(j));
            rows[i][j] = mode == Rescale::multiply ? rows[i][j] * d[j] : exact_div(rows[i][j], d[j]);
        }
    return Triangle::from_rows(rows);
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
    for (const auto& r : m)
        if (r.size() != m.size()) throw std::invalid_argument("determinant of a non-square matrix");
    return kernels::use_parallel(m.size()) ? kernels::parallel::determinant(std::move(m))
                                           : kernels::serial::determinant(std::move(m));
}

Scalar hankel_det(std::span<const Scalar> mu, std::size_t n) {
    if (mu.size() < 2 * n + 1)
        throw MathError("Hankel determinant h_" + std::to_string(n) + " needs " +
                        std::to_string(2 * n + 1) + " moments, got " + std::to_string(mu.size()));
    std::vector<std::vector<Scalar>> h(n + 1, std::vector<Scalar>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h[i][j] = mu[i + j];
    return determinant(std::move(h));
}

std::vector<Scalar> hankel_transform(std::span<const Scalar> mu, std::size_t count) {
    std::vector<Scalar> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back(hankel_det(mu, n));
    return out;
}

}  // namespace gmoments
