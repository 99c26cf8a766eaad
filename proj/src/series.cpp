#include "gmoments/series.hpp"

#include "gmoments/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace gmoments {

namespace {

Scalar divide_by(const Scalar& x, const Scalar& d) { return d.is_one() ? x : x / d; }

std::vector<Scalar> coefficients_in_x(const Scalar& s) {
    QPoly p = to_qpoly(s);
    std::vector<Scalar> out;
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    if (out.empty()) out.emplace_back(0);
    return out;
}

}  // namespace

TruncatedSeries TruncatedSeries::constant(const Scalar& c, std::size_t order) {
    std::vector<Scalar> v(order);
    if (order > 0) v[0] = c;
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::x(std::size_t order) {
    std::vector<Scalar> v(order);
    if (order > 1) v[1] = Scalar(1);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    if (order > c_.size()) throw std::invalid_argument("cannot extend a truncated series");
    return TruncatedSeries(std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<long>(order)));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    std::vector<Scalar> v(c_.size());
    for (std::size_t i = k; i < c_.size(); ++i) v[i] = c_[i - k];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::operator-() const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Scalar> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a.c_[i] + b.c_[i];
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Scalar> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return TruncatedSeries(std::move(v));
}

TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a) {
    std::vector<Scalar> v;
    v.reserve(a.order());
    for (const auto& c : a.c_) v.push_back(s * c);
    return TruncatedSeries(std::move(v));
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t i = 0; i < a.order(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

TruncatedSeries series_from_rational(std::span<const Scalar> numer,
                                     std::span<const Scalar> denom, std::size_t order) {
    if (denom.empty() || denom[0].is_zero())
        throw MathError("series_from_rational: denominator has zero constant term");
    std::vector<Scalar> c(order);
    for (std::size_t n = 0; n < order; ++n) {
        Scalar acc = n < numer.size() ? numer[n] : Scalar();
        for (std::size_t k = 1; k <= n && k < denom.size(); ++k) {
            if (denom[k].is_zero()) continue;
            acc -= denom[k] * c[n - k];
        }
        c[n] = divide_by(acc, denom[0]);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_from_function(const Scalar& f, std::size_t order) {
    const QFraction r = to_qfraction(f);
    const auto numer = coefficients_in_x(Scalar(r.num()));
    const auto denom = coefficients_in_x(Scalar(r.den()));
    return series_from_rational(numer, denom, order);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (a.order() == 0) return a;
    const Scalar one(1);
    return series_from_rational(std::span<const Scalar>(&one, 1), a.coeffs(), a.order());
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    const std::size_t n = std::min(outer.order(), inner.order());
    if (n == 0) return TruncatedSeries();
    if (!inner[0].is_zero())
        throw MathError("series_compose: inner series has a nonzero constant term");
    const TruncatedSeries in = inner.truncated(n);
    // Horner: outer_0 + in*(outer_1 + in*(outer_2 + ...)).
    TruncatedSeries acc = TruncatedSeries::constant(outer[n - 1], n);
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = acc * in;
        std::vector<Scalar> v = acc.coeffs();
        v[0] += outer[k];
        acc = TruncatedSeries(std::move(v));
    }
    return acc;
}

TruncatedSeries series_revert(const TruncatedSeries& f) {
    const std::size_t n = f.order();
    if (n < 2) throw MathError("series_revert: need at least the linear term");
    if (!f[0].is_zero()) throw MathError("series_revert: f(0) must be zero");
    if (f[1].is_zero()) throw MathError("series_revert: f'(0) must be nonzero");
    std::vector<Scalar> h(n);
    h[1] = divide_by(Scalar(1), f[1]);
    // Adding d x^k to h moves [x^k] f(h) by f_1 d and leaves lower terms alone.
    for (std::size_t k = 2; k < n; ++k) {
        const TruncatedSeries partial =
            series_compose(f.truncated(k + 1), TruncatedSeries(std::vector<Scalar>(h.begin(), h.begin() + static_cast<long>(k) + 1)));
        if (!partial[k].is_zero()) h[k] = -divide_by(partial[k], f[1]);
    }
    return TruncatedSeries(std::move(h));
}

TruncatedSeries catalan_series(std::size_t order) {
    std::vector<Scalar> c(order);
    if (order == 0) return TruncatedSeries();
    c[0] = Scalar(1);
    for (std::size_t n = 0; n + 1 < order; ++n) {
        Scalar acc;
        for (std::size_t k = 0; k <= n; ++k) acc += c[k] * c[n - k];
        c[n + 1] = std::move(acc);
    }
    return TruncatedSeries(std::move(c));
}

RiordanPair::RiordanPair(TruncatedSeries g, TruncatedSeries f) : g_(std::move(g)), f_(std::move(f)) {
    if (g_.order() == 0 || g_[0].is_zero())
        throw MathError("Riordan pair: g must have an invertible constant term");
    if (f_.order() < 2 || !f_[0].is_zero() || f_[1].is_zero())
        throw MathError("Riordan pair: f must have zero constant and invertible linear term");
}

Triangle riordan_matrix(const RiordanPair& p, std::size_t n) {
    if (p.order() < n)
        throw MathError("riordan_matrix: series order " + std::to_string(p.order()) +
                        " is below the requested size " + std::to_string(n));
    const TruncatedSeries g = p.g().truncated(n);
    const TruncatedSeries f = p.f().truncated(n);
    Triangle::Rows rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i].resize(i + 1);
    TruncatedSeries column = g;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k; i < n; ++i) rows[i][k] = column[i];
        if (k + 1 < n) column = column * f;
    }
    return Triangle::from_rows(rows);
}

RiordanPair riordan_mul(const RiordanPair& p1, const RiordanPair& p2) {
    return RiordanPair(p1.g() * series_compose(p2.g(), p1.f()), series_compose(p2.f(), p1.f()));
}

RiordanPair riordan_inverse(const RiordanPair& p) {
    TruncatedSeries fbar = series_revert(p.f().truncated(p.order()));
    return RiordanPair(series_reciprocal(series_compose(p.g(), fbar)), fbar);
}

Triangle interleave_columns(const Triangle& a, const Triangle& b) {
    if (a.size() != b.size()) throw std::invalid_argument("interleave_columns: size mismatch");
    const std::size_t n = a.size();
    Triangle::Rows rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(i + 1);
        for (std::size_t c = 0; c <= i; ++c) {
            const std::size_t j = c / 2;
            if (i < j) continue;
            rows[i][c] = (c % 2 == 0) ? a(i - j, j) : b(i - j, j + 1);
        }
    }
    return Triangle::from_rows(rows);
}

Triangle interleave_rows(const Triangle& a, const Triangle& b) {
    if (a.size() != b.size()) throw std::invalid_argument("interleave_rows: size mismatch");
    const std::size_t n = a.size();
    Triangle::Rows rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(i + 1);
        const std::size_t m = i / 2;
        const bool even = i % 2 == 0;
        const std::size_t src = even ? m : m + 1;
        for (std::size_t c = m; c <= i; ++c) rows[i][c] = even ? a(src, c - m) : b(src, c - m);
    }
    return Triangle::from_rows(rows);
}

TruncatedSeries schroder_g(std::size_t order) {
    std::vector<Scalar> g(order);
    if (order == 0) return TruncatedSeries();
    g[0] = Scalar(1);
    for (std::size_t n = 1; n < order; ++n) {
        Scalar conv;
        for (std::size_t i = 0; i < n; ++i) conv += g[i] * g[n - 1 - i];
        g[n] = Scalar(2) * conv - g[n - 1];
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries schroder_f(std::size_t order) {
    std::vector<Scalar> f(order);
    for (std::size_t n = 1; n < order; ++n) {
        Scalar conv;
        for (std::size_t i = 0; i < n; ++i) conv += f[i] * f[n - 1 - i];
        f[n] = (n == 1 ? Scalar(1) : Scalar(0)) + Scalar(3) * f[n - 1] + Scalar(2) * conv;
    }
    return TruncatedSeries(std::move(f));
}

std::vector<Scalar> schroder_column(std::size_t k, std::size_t order) {
    const TruncatedSeries f = schroder_f(order);
    const std::size_t m = k / 2;
    TruncatedSeries col = (k % 2 == 0) ? schroder_g(order) : f;
    for (std::size_t i = 0; i < m; ++i) col = col * f;
    return col.shifted(m).coeffs();
}

}  // namespace gmoments
