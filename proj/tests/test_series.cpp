#include "gmoments/error.hpp"
#include "gmoments/pipeline.hpp"
#include "gmoments/series.hpp"
#include "gmoments/triangle.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gmoments;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

TruncatedSeries series(std::initializer_list<long> v) { return TruncatedSeries(ints(v)); }

TruncatedSeries from(const char* text, std::size_t order) {
    return series_from_function(parse_scalar(text, 'x'), order);
}

// Random rational series with the given constant and linear terms.
TruncatedSeries random_series(std::size_t order, long c0, bool unit_linear) {
    std::vector<Scalar> c(order);
    c[0] = Scalar(c0);
    for (std::size_t k = 1; k < order; ++k)
        c[k] = Scalar(Rational(oracle::uniform(-6, 6), oracle::uniform(1, 3)));
    if (order > 1 && unit_linear) c[1] = Scalar(1);
    if (order > 1 && !unit_linear && c[1].is_zero()) c[1] = Scalar(2);
    return TruncatedSeries(c);
}

oracle::Matrix dense_riordan(const TruncatedSeries& g, const TruncatedSeries& f, std::size_t n) {
    // Column k = g f^k by plain convolution.
    oracle::Matrix m(n, std::vector<oracle::Rat>(n));
    std::vector<oracle::Rat> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = oracle::to_rat(g[i]);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m[i][k] = col[i];
        std::vector<oracle::Rat> next(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) next[i] += col[j] * oracle::to_rat(f[i - j]);
        col = next;
    }
    return m;
}

}  // namespace

TEST_CASE("rational functions expand by long division") {
    CHECK(from("1/(1-x)", 5) == series({1, 1, 1, 1, 1}));
    CHECK(from("x/(1+3*x+2*x^2)", 5) == series({0, 1, -3, 7, -15}));
    CHECK(from("1/(1+x)", 4) == series({1, -1, 1, -1}));

    for (int t = 0; t < 50; ++t) {
        std::vector<oracle::Rat> num, den;
        std::vector<Scalar> sn, sd;
        for (int k = 0; k < 3; ++k) {
            num.emplace_back(oracle::uniform(-5, 5));
            sn.emplace_back(Integer(num.back().get_num()));
        }
        for (int k = 0; k < 3; ++k) {
            den.emplace_back(k == 0 ? oracle::uniform(1, 4) : oracle::uniform(-5, 5));
            sd.emplace_back(Integer(den.back().get_num()));
        }
        const auto expected = oracle::long_division(num, den, 10);
        const TruncatedSeries s = series_from_rational(sn, sd, 10);
        for (std::size_t k = 0; k < 10; ++k) CHECK(oracle::to_rat(s[k]) == expected[k]);
    }
}

TEST_CASE("reversion and reciprocal") {
    CHECK(series_revert(series({0, 1, -1, 0, 0})) == series({0, 1, 1, 2, 5}));
    CHECK(series_reciprocal(series({1, -1, 0, 0, 0, 0})) == series({1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(series_revert(series({1, 1, 0})), MathError);
    CHECK_THROWS_AS(series_revert(series({0, 0, 1})), MathError);
    CHECK_THROWS_AS(series_reciprocal(series({0, 1})), MathError);

    const std::size_t order = 9;
    const TruncatedSeries x = TruncatedSeries::x(order);
    for (int t = 0; t < 60; ++t) {
        const TruncatedSeries f = random_series(order, 0, t % 2 == 0);
        const TruncatedSeries fbar = series_revert(f);
        CHECK(series_compose(f, fbar) == x);
        CHECK(series_compose(fbar, f) == x);
    }
}

TEST_CASE("Catalan series") {
    CHECK(catalan_series(5) == series({1, 1, 2, 5, 14}));
    CHECK(catalan_series(1) == series({1}));
    CHECK(catalan_series(7)[6] == Scalar(132));
    const std::size_t order = 20;
    const TruncatedSeries c = catalan_series(order);
    for (std::size_t k = 0; k < order; ++k) CHECK(c[k] == Scalar(oracle::catalan(k)));
    const TruncatedSeries rhs = TruncatedSeries::constant(1, order) + (c * c).shifted(1);
    CHECK(c == rhs);
}

TEST_CASE("Riordan arrays") {
    const Triangle binom = riordan_matrix(RiordanPair(from("1", 7), from("x/(1-x)", 7)), 6);
    CHECK(binom == Triangle::from_rows({{1}, {0, 1}, {0, 1, 1}, {0, 1, 2, 1}, {0, 1, 3, 3, 1},
                                        {0, 1, 4, 6, 4, 1}}));
    const Triangle s =
        riordan_matrix(RiordanPair(from("1/(1+x)", 5), from("x/(1+3*x+2*x^2)", 5)), 4);
    CHECK(s == Triangle::from_rows({{1}, {-1, 1}, {1, -4, 1}, {-1, 11, -7, 1}}));
    CHECK(riordan_matrix(RiordanPair(from("1", 9), from("x", 9)), 8) == Triangle::identity(8));
    CHECK_THROWS_AS(RiordanPair(from("x", 4), from("x", 4)), MathError);
    CHECK_THROWS_AS(RiordanPair(from("1", 4), from("1+x", 4)), MathError);

    const std::size_t order = 9;
    const TruncatedSeries c = catalan_series(order);
    const RiordanPair n_pair(c, c.shifted(1));
    const RiordanPair m_pair(c, (c * c).shifted(1));
    const RiordanPair prod = riordan_mul(riordan_inverse(n_pair), m_pair);
    CHECK(riordan_matrix(prod, 8) == riordan_matrix(RiordanPair(from("1", order), from("x/(1-x)", order)), 8));
}

TEST_CASE("Riordan group law against the matrix product") {
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = static_cast<std::size_t>(oracle::uniform(1, 10));
        const RiordanPair p(random_series(n + 1, oracle::uniform(1, 3), false),
                            random_series(n + 1, 0, false));
        const RiordanPair r(random_series(n + 1, oracle::uniform(1, 3), false),
                            random_series(n + 1, 0, false));
        const oracle::Matrix a = dense_riordan(p.g(), p.f(), n);
        const oracle::Matrix b = dense_riordan(r.g(), r.f(), n);
        CHECK(oracle::equal(oracle::multiply(a, b), riordan_matrix(riordan_mul(p, r), n)));
        CHECK(oracle::equal(oracle::lower_inverse(a), riordan_matrix(riordan_inverse(p), n)));
    }
}

TEST_CASE("interleaving") {
    const Triangle id = Triangle::identity(4);
    // Column 2j: column j moved down j rows; column 2j+1: column j+1 moved down j rows.
    CHECK(interleave_columns(id, id) ==
          Triangle::from_rows({{1}, {0, 1}, {0, 0, 1}, {0, 0, 0, 1}}));

    const std::size_t n = 6;
    const TruncatedSeries g = schroder_g(n + 1), f = schroder_f(n + 1);
    const Triangle a = riordan_matrix(RiordanPair(g, f), n);
    const Triangle b = riordan_matrix(RiordanPair(TruncatedSeries::constant(1, n + 1), f), n);
    const Triangle expected = Triangle::from_rows({{1}, {1, 1}, {3, 3, 1}, {11, 11, 4, 1},
                                                   {45, 45, 17, 6, 1}, {197, 197, 76, 31, 7, 1}});
    CHECK(interleave_columns(a, b) == expected);
    CHECK(build_N_via_behead(schroder_coefficients(2 * n), n) == expected);

    // Row factors (1/(1+3x+2x^2), x/(1+3x+2x^2)) and (1/(1+x), x/(1+3x+2x^2)).
    const TruncatedSeries h = from("x/(1+3*x+2*x^2)", n);
    const Triangle ninv =
        interleave_rows(riordan_matrix(RiordanPair(from("1/(1+3*x+2*x^2)", n), h), n),
                        riordan_matrix(RiordanPair(from("1/(1+x)", n), h), n));
    CHECK(ninv.leading(4) == Triangle::from_rows({{1}, {-1, 1}, {0, -3, 1}, {0, 1, -4, 1}}));
    CHECK(ninv == invert(expected));
}

TEST_CASE("Schroeder columns") {
    CHECK(schroder_column(0, 6) == ints({1, 1, 3, 11, 45, 197}));
    CHECK(schroder_column(2, 6) == ints({0, 0, 1, 4, 17, 76}));
    CHECK(schroder_column(3, 6) == ints({0, 0, 0, 1, 6, 31}));
    CHECK(schroder_g(8).coeffs() == ints({1, 1, 3, 11, 45, 197, 903, 4279}));

    for (std::size_t n = 1; n <= 10; ++n) {
        const Triangle N = build_N_via_behead(schroder_coefficients(2 * n), n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::vector<Scalar> col = schroder_column(k, n);
            CHECK(col == N.column(k));
        }
    }
}

TEST_CASE("series arithmetic truncates to the shorter order") {
    const TruncatedSeries a = series({1, 2, 3}), b = series({1, 1});
    CHECK((a * b) == series({1, 3}));
    CHECK((a + b).order() == 2);
    CHECK(a.shifted(2) == series({0, 0, 1}));
}
