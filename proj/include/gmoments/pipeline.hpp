#pragma once

#include "gmoments/cfrac.hpp"
#include "gmoments/ring.hpp"
#include "gmoments/triangle.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gmoments {

enum class CheckStatus { pass, fail, documented_discrepancy };

std::string to_string(CheckStatus s);

struct CheckOutcome {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string expected;
    std::string actual;
    std::string note;
};

struct ComparisonResult {
    SFractionCoeffs a;
    std::vector<Scalar> mu;
    Triangle N;
    Triangle M;
    Triangle C;  // N^{-1} M
    ProductionMatrix prodN;
    ProductionMatrix prodM;
    ProductionMatrix prodC;
    ProductionMatrix prodCinv;
    std::vector<CheckOutcome> diagnostics;

    bool all_passed() const;
};

// N from the production matrix obtained by inverting the unit bidiagonal
// matrix with subdiagonal -a_1, -a_2, ... and removing its first row.
Triangle build_N_via_behead(const SFractionCoeffs& a, std::size_t n);

// The matrix generated by the production matrix whose row i is a_{i+1}
// repeated in columns 0..i+1; it equals N with column k multiplied by
// a_1 a_2 ... a_k.
Triangle build_N_scaled(const SFractionCoeffs& a, std::size_t n);

// build_N_scaled with the column factors divided back out. Every a_k used
// must be nonzero.
Triangle build_N_via_rescale(const SFractionCoeffs& a, std::size_t n);

// Row r holds the coefficients of P_r(x) (ascending powers), where P_0 = 1,
// P_1 = x - b_0 and P_r = (x - b_{r-1}) P_{r-1} - lambda_{r-1} P_{r-2}.
Triangle op_coeff_triangle(const JFractionCoeffs& j, std::size_t n);

// M, computed as the inverse of op_coeff_triangle(s_to_j(a), n) and as the
// matrix generated by the tridiagonal production matrix; a disagreement
// between the two throws std::logic_error.
Triangle build_M(const SFractionCoeffs& a, std::size_t n);

// Full comparison. Requires a_1 = 1 and nonzero Hankel determinants
// h_0..h_{n-1} (NotCatalanLike otherwise).
ComparisonResult compare(const SFractionCoeffs& a, std::size_t n);

// Gaussian binomial [m, k]_q; zero outside 0 <= k <= m.
Scalar q_binomial(long m, long k);

// Factors of the q-case N^{-1} M. Entry (i, k) of the first is
// [i-1, i-k]_q, of the second q^{(k-1)(i-k)} (k >= 1); both have a 1 at
// (0, 0) and zeros elsewhere in column 0.
Triangle qbinomial_factor(std::size_t n);
Triangle qpower_factor(std::size_t n);

// Entry (i, k) of N^{-1} M divided by q^{binom(i-k+2, 2) - 1}.
Triangle qcase_divided(const Triangle& c);

// Checks qcase_divided(c) == qbinomial_factor(n) o qpower_factor(n) entry by
// entry, reporting the first failing entry.
CheckOutcome qcase_factorization_check(const Triangle& c, std::size_t n);

// Structure of the little Schroeder comparison (a = 1, 2, 1, 2, ...):
// row recurrences of N^{-1} M, the bidiagonal production matrix of its
// inverse, and the two Riordan interleavings of N and N^{-1}.
std::vector<CheckOutcome> schroder_structure_checks(const ComparisonResult& r);

// a_n = q^{n-1}, or v^{n-1} when a value is substituted.
SFractionCoeffs qpow_coefficients(std::size_t count);
SFractionCoeffs qpow_coefficients(std::size_t count, const Integer& v);
// 1, r, 1, r, ... (r = 2 gives the little Schroeder numbers)
SFractionCoeffs schroder_coefficients(std::size_t count, const Scalar& r = Scalar(2));
SFractionCoeffs constant_coefficients(std::size_t count, const Scalar& c = Scalar(1));

}  // namespace gmoments
