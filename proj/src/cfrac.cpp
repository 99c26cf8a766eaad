#include "gmoments/cfrac.hpp"

#include "gmoments/error.hpp"
#include "gmoments/series.hpp"

#include <string>
#include <utility>

namespace gmoments {

JFractionCoeffs s_to_j(const SFractionCoeffs& s) {
    const std::size_t len = s.size();
    if (len == 0) throw MathError("s_to_j: empty S-fraction");
    JFractionCoeffs j;
    j.b.push_back(s(1));
    for (std::size_t n = 1; 2 * n + 1 <= len; ++n) j.b.push_back(s(2 * n) + s(2 * n + 1));
    for (std::size_t n = 1; 2 * n <= len && n < j.b.size(); ++n)
        j.lambda.push_back(s(2 * n - 1) * s(2 * n));
    return j;
}

std::vector<Scalar> moments_from_sfraction(const SFractionCoeffs& s, std::size_t count) {
    if (count == 0) return {};
    if (s.size() + 1 < count)
        throw MathError(std::to_string(count) + " moments need " + std::to_string(count - 1) +
                        " S-fraction coefficients, got " + std::to_string(s.size()));
    // S_k = 1 / (1 - a_k x S_{k+1}), with S_count = 1.
    TruncatedSeries level = TruncatedSeries::constant(Scalar(1), count);
    const TruncatedSeries one = level;
    for (std::size_t k = count - 1; k >= 1; --k)
        level = series_reciprocal(one - (s(k) * level).shifted(1));
    return level.coeffs();
}

std::vector<Scalar> moments_from_jfraction(const JFractionCoeffs& j, std::size_t count) {
    if (count == 0) return {};
    const std::size_t longest = count - 1;
    const std::size_t height = longest / 2;
    // b_k is reachable for 2k+1 <= longest, lambda_k for 2k <= longest.
    const std::size_t need_b = longest == 0 ? 0 : (longest - 1) / 2 + 1;
    const std::size_t need_lambda = longest / 2;
    if (j.b.size() < need_b || j.lambda.size() < need_lambda)
        throw MathError(std::to_string(count) + " moments need " + std::to_string(need_b) +
                        " b and " + std::to_string(need_lambda) + " lambda coefficients");
    const TruncatedSeries one = TruncatedSeries::constant(Scalar(1), count);
    TruncatedSeries level = one;
    for (std::size_t k = height + 1; k-- > 0;) {
        const Scalar b = k < need_b ? j.b[k] : Scalar();
        const Scalar lambda = k < need_lambda ? j.lambda[k] : Scalar();
        level = series_reciprocal(one - (b * one).shifted(1) - (lambda * level).shifted(2));
    }
    return level.coeffs();
}

namespace {

// The quotient-difference rhombus rules. A zero cell anywhere in the table
// stops it, even when the continued fraction exists.
SFractionCoeffs qd_table(std::span<const Scalar> mu) {
    SFractionCoeffs out;
    const std::size_t m = mu.size();
    std::vector<Scalar> q;  // q_j^{(k)}, k = 0 ..
    std::vector<Scalar> e(m, Scalar());  // e_{j-1}^{(k)}; e_0 = 0
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (mu[k].is_zero())
            throw NotCatalanLike(k, "qd: moment mu_" + std::to_string(k) + " vanishes");
        q.push_back(mu[k + 1] / mu[k]);
    }

    std::size_t depth = 1;  // index of the next a to emit
    while (!q.empty()) {
        out.a.push_back(q[0]);  // a_{2j-1}
        if (++depth >= m) break;

        std::vector<Scalar> next_e;
        for (std::size_t k = 0; k + 1 < q.size(); ++k)
            next_e.push_back(q[k + 1] - q[k] + e[k + 1]);
        if (next_e.empty()) break;
        out.a.push_back(next_e[0]);  // a_{2j}
        if (++depth >= m) break;

        std::vector<Scalar> next_q;
        for (std::size_t k = 0; k + 1 < next_e.size(); ++k) {
            if (next_e[k].is_zero())
                throw NotCatalanLike(depth - 1, "qd: cell e(" + std::to_string(k) +
                                                    ") vanished while computing a_" +
                                                    std::to_string(depth));
            next_q.push_back(q[k + 1] * next_e[k + 1] / next_e[k]);
        }
        q = std::move(next_q);
        e = std::move(next_e);
    }
    return out;
}

// Peels one level at a time: F = 1/(1 - a x F'), so F' = (1 - 1/F)/(a x).
// Fails only when some a_k with k < m-1 is zero, i.e. when the expansion
// does not exist.
SFractionCoeffs peel(std::span<const Scalar> mu) {
    SFractionCoeffs out;
    TruncatedSeries f(std::vector<Scalar>(mu.begin(), mu.end()));
    const std::size_t m = mu.size();
    for (std::size_t k = 1; k < m; ++k) {
        const Scalar a = f[1];
        out.a.push_back(a);
        if (k + 1 == m) break;
        if (a.is_zero())
            throw NotCatalanLike(k, "qd: a_" + std::to_string(k) +
                                        " vanishes, so a_" + std::to_string(k + 1) +
                                        " does not exist");
        const TruncatedSeries g = TruncatedSeries::constant(Scalar(1), f.order()) -
                                  series_reciprocal(f);
        std::vector<Scalar> next;
        for (std::size_t i = 1; i < g.order(); ++i) next.push_back(g[i] / a);
        f = TruncatedSeries(std::move(next));
    }
    return out;
}

}  // namespace

SFractionCoeffs qd_sfraction_from_moments(std::span<const Scalar> mu) {
    if (mu.empty()) return {};
    if (!mu[0].is_one()) throw MathError("qd: mu_0 must be 1, got " + to_string(mu[0]));
    try {
        return qd_table(mu);
    } catch (const NotCatalanLike&) {
        return peel(mu);
    }
}

std::vector<Scalar> hankel_from_sfraction(const SFractionCoeffs& s, std::size_t count) {
    std::vector<Scalar> h;
    if (count == 0) return h;
    const std::size_t need = 2 * (count - 1);
    if (s.size() < need)
        throw MathError(std::to_string(count) + " Hankel values need " + std::to_string(need) +
                        " S-fraction coefficients, got " + std::to_string(s.size()));
    // h_n = h_{n-1} * lambda_1 lambda_2 ... lambda_n.
    Scalar running(1);
    Scalar prefix(1);
    h.push_back(running);
    for (std::size_t n = 1; n < count; ++n) {
        prefix *= s(2 * n - 1) * s(2 * n);
        running *= prefix;
        h.push_back(running);
    }
    return h;
}

Integer example2_b(std::size_t n) {
    Integer value;
    mpz_ui_pow_ui(value.get_mpz_t(), 2, n + 2);
    if (n % 2 == 1) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), 2, (n + 1) / 2);
        value -= 2 * t;
    }
    return value;
}

}  // namespace gmoments
