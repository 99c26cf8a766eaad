#pragma once

#include "gmoments/ring.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gmoments {

// Coefficients a_1, a_2, ... of 1/(1 - a_1 x/(1 - a_2 x/(1 - ...))).
struct SFractionCoeffs {
    std::vector<Scalar> a;  // a[0] holds a_1

    std::size_t size() const { return a.size(); }
    // 1-indexed access.
    const Scalar& operator()(std::size_t k) const { return a.at(k - 1); }
};

// Coefficients of 1/(1 - b_0 x - lambda_1 x^2/(1 - b_1 x - lambda_2 x^2/...)).
struct JFractionCoeffs {
    std::vector<Scalar> b;       // b_0, b_1, ...
    std::vector<Scalar> lambda;  // lambda[0] holds lambda_1
};

// Equivalence transform: b_0 = a_1, b_n = a_{2n} + a_{2n+1},
// lambda_n = a_{2n-1} a_{2n}. Produces as many terms as `s` determines while
// keeping |b| = |lambda| + 1.
JFractionCoeffs s_to_j(const SFractionCoeffs& s);

// mu_0 .. mu_{count-1}. Needs a_1 .. a_{count-1}.
std::vector<Scalar> moments_from_sfraction(const SFractionCoeffs& s, std::size_t count);

// mu_0 .. mu_{count-1}. Needs b_k for 2k+1 <= count-1 and lambda_k for
// 2k <= count-1; deeper coefficients cannot reach these moments.
std::vector<Scalar> moments_from_jfraction(const JFractionCoeffs& j, std::size_t count);

// Quotient-difference extraction of a_1 .. a_{m-1} from mu_0 .. mu_{m-1}
// (mu_0 = 1). Runs in the fraction field. A table with a vanishing cell is
// redone by expanding the series level by level, so NotCatalanLike (naming
// the depth) is thrown only when some a_k, k < m-1, is zero and the
// expansion stops there.
SFractionCoeffs qd_sfraction_from_moments(std::span<const Scalar> mu);

// h_0 .. h_{count-1} from h_n = prod_{k=1}^{n} (a_{2k-1} a_{2k})^{n+1-k},
// which is prod_{k=0}^{n-1} (c(2k) c(2k+1))^{n-k} for the 0-based sequence
// c(i) = a_{i+1}. Needs a_1 .. a_{2(count-1)}.
std::vector<Scalar> hankel_from_sfraction(const SFractionCoeffs& s, std::size_t count);

// b(n) = 2^{n+2} - 2^{(n+1)/2} (1 - (-1)^n): the S-fraction coefficients
// (0-based) of the sequence 2^{n(n+3)/2}.
Integer example2_b(std::size_t n);

}  // namespace gmoments
