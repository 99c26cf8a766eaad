#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gmoments {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense polynomial in one indeterminate with integer coefficients, lowest
// degree first. The coefficient list never ends in a zero; the zero
// polynomial is the empty list.
class QPoly {
public:
    QPoly() = default;
    QPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
    QPoly(long c) : QPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
    explicit QPoly(std::vector<Integer> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    static QPoly monomial(const Integer& c, std::size_t k);
    static QPoly q() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
    const Integer& lead() const { return c_.back(); }

    Integer eval(const Integer& v) const;
    Rational eval(const Rational& v) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Integer& c);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Quotient when `d` divides *this in Z[q], nullopt otherwise.
    std::optional<QPoly> divide_exact(const QPoly& d) const;

    Integer content() const;
    QPoly primitive_part() const;

private:
    void trim();
    std::vector<Integer> c_;
};

QPoly gcd(const QPoly& a, const QPoly& b);

// Element of Q(q) in lowest terms: gcd(num, den) = 1 in Z[q] and the leading
// coefficient of den is positive.
class QFraction {
public:
    QFraction() : num_(), den_(1) {}
    QFraction(const QPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    QFraction(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QFraction operator-() const { return QFraction(-num_, den_, canonical_tag{}); }
    friend QFraction operator+(const QFraction& a, const QFraction& b);
    friend QFraction operator-(const QFraction& a, const QFraction& b) { return a + (-b); }
    friend QFraction operator*(const QFraction& a, const QFraction& b);
    friend QFraction operator/(const QFraction& a, const QFraction& b);

    bool operator==(const QFraction& o) const = default;

private:
    struct canonical_tag {};
    QFraction(QPoly num, QPoly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}
    QPoly num_;
    QPoly den_;
};

enum class RingKind { integer = 0, rational = 1, qpoly = 2, qfraction = 3 };

// Exact ring element. Arithmetic between different kinds promotes along
// integer -> rational -> Q(q) and integer -> Z[q] -> Q(q); results keep the
// promoted kind (use demote() to recover the smallest one). Equality is by
// value across kinds.
class Scalar {
public:
    using Storage = std::variant<Integer, Rational, QPoly, QFraction>;

    Scalar() : v_(Integer(0)) {}
    Scalar(long v) : v_(Integer(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : v_(Integer(v)) {}   // NOLINT(google-explicit-constructor)
    Scalar(Integer v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational v);                       // NOLINT(google-explicit-constructor)
    Scalar(QPoly v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)
    Scalar(QFraction v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    static Scalar q() { return Scalar(QPoly::q()); }
    static Scalar q_power(std::size_t k) { return Scalar(QPoly::monomial(1, k)); }

    RingKind kind() const { return static_cast<RingKind>(v_.index()); }
    const Storage& storage() const { return v_; }

    bool is_zero() const;
    bool is_one() const;
    // True when the value involves q (after demotion).
    bool involves_q() const;
    // True when the value is an integer (after demotion).
    bool is_integral() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    // Division in the fraction field; throws MathError on a zero divisor.
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    Storage v_;
};

// z with z*y == x inside the common ring of x and y. Throws NotDivisible when
// y does not divide x there (no silent move to the fraction field) and
// MathError when y is zero.
Scalar exact_div(const Scalar& x, const Scalar& y);

// Substitutes q = v. Integer and rational inputs are returned unchanged.
Scalar eval_q(const Scalar& p, const Integer& v);

// Smallest kind that represents the same value.
Scalar demote(const Scalar& s);

// Promotion helpers; they never lose information.
QFraction to_qfraction(const Scalar& s);
Rational to_rational(const Scalar& s);  // throws MathError when q appears
QPoly to_qpoly(const Scalar& s);        // throws MathError when not a polynomial

Scalar pow(const Scalar& base, unsigned long exponent);

// Canonical text form: base-10 integers, "p/r" rationals, polynomials as
// ascending terms "1 + 2*q - q^3" (unit coefficients dropped), fractions as
// "(num)/(den)". `var` names the indeterminate.
std::string to_string(const Scalar& s, char var = 'q');
std::string to_string(const QPoly& p, char var = 'q');

// Parses the canonical form and, more generally, any expression over
// integers and `var` built from + - * / ^ (non-negative integer exponent) and
// parentheses. Throws ParseError with the byte offset of the problem.
Scalar parse_scalar(std::string_view text, char var = 'q');

}  // namespace gmoments
