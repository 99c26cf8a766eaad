#include "gmoments/error.hpp"
#include "gmoments/ring.hpp"

#include <algorithm>
#include <utility>

namespace gmoments {

QPoly::QPoly(const Integer& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

QPoly QPoly::monomial(const Integer& c, std::size_t k) {
    if (c == 0) return {};
    std::vector<Integer> v(k + 1);
    v[k] = c;
    QPoly p;
    p.c_ = std::move(v);
    return p;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer QPoly::eval(const Integer& v) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Rational QPoly::eval(const Rational& v) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + Rational(*it);
    acc.canonicalize();
    return acc;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Integer& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    if (is_zero()) return QPoly{};
    if (degree() < d.degree()) return std::nullopt;

    std::vector<Integer> rem = c_;
    const std::size_t dn = d.c_.size();
    std::vector<Integer> quot(c_.size() - dn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + dn - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.lead().get_mpz_t())) return std::nullopt;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= f * d.c_[j];
        quot[k] = std::move(f);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return QPoly(std::move(quot));
}

Integer QPoly::content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (lead() < 0) g = -g;
    QPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

namespace {

// lc(b)^e * a mod b, enough for a primitive remainder sequence.
QPoly pseudo_remainder(QPoly a, const QPoly& b) {
    const Integer& lb = b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        QPoly t = QPoly::monomial(a.lead(), shift) * b;
        a *= lb;
        a -= t;
    }
    return a;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.primitive_part() * QPoly(b.is_zero() ? Integer(0) : b.content());
    if (b.is_zero()) return a.primitive_part() * QPoly(a.content());

    Integer c;
    Integer ca = a.content();
    Integer cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    QPoly x = a.primitive_part();
    QPoly y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        QPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    x *= c;
    return x;
}

QFraction::QFraction(QPoly num, QPoly den) {
    if (den.is_zero()) throw MathError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = QPoly{};
        den_ = QPoly(1);
        return;
    }
    QPoly g = gcd(num, den);
    if (!(g == QPoly(1))) {
        num = *num.divide_exact(g);
        den = *den.divide_exact(g);
    }
    if (den.lead() < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

QFraction operator+(const QFraction& a, const QFraction& b) {
    if (a.den_ == b.den_) return QFraction(a.num_ + b.num_, a.den_);
    return QFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QFraction operator*(const QFraction& a, const QFraction& b) {
    return QFraction(a.num_ * b.num_, a.den_ * b.den_);
}

QFraction operator/(const QFraction& a, const QFraction& b) {
    if (b.is_zero()) throw MathError("division by zero");
    return QFraction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace gmoments
