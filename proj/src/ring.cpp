#include "gmoments/error.hpp"
#include "gmoments/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace gmoments {

namespace {

Rational canonical(Rational r) {
    r.canonicalize();
    return r;
}

RingKind common_kind(RingKind a, RingKind b) {
    if ((a == RingKind::rational && b == RingKind::qpoly) ||
        (a == RingKind::qpoly && b == RingKind::rational))
        return RingKind::qfraction;
    return std::max(a, b);
}

RingKind field_of(RingKind k) {
    return (k == RingKind::integer || k == RingKind::rational) ? RingKind::rational
                                                               : RingKind::qfraction;
}

Integer as_integer(const Scalar& s) { return std::get<Integer>(s.storage()); }

Scalar promote(const Scalar& s, RingKind to) {
    if (s.kind() == to) return s;
    switch (to) {
        case RingKind::integer: break;
        case RingKind::rational:
            if (s.kind() == RingKind::integer) return Scalar(Rational(as_integer(s)));
            break;
        case RingKind::qpoly:
            if (s.kind() == RingKind::integer) return Scalar(QPoly(as_integer(s)));
            break;
        case RingKind::qfraction: return Scalar(to_qfraction(s));
    }
    throw MathError("cannot promote scalar to a smaller ring");
}

template <class Fn>
Scalar binary(const Scalar& a, const Scalar& b, RingKind k, Fn&& fn) {
    Scalar x = promote(a, k);
    Scalar y = promote(b, k);
    return std::visit(
        [&](const auto& u) -> Scalar {
            using T = std::decay_t<decltype(u)>;
            return fn(u, std::get<T>(y.storage()));
        },
        x.storage());
}

}  // namespace

Scalar::Scalar(Rational v) : v_(canonical(std::move(v))) {}

bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& u) -> bool {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
                return u == 0;
            else
                return u.is_zero();
        },
        v_);
}

bool Scalar::is_one() const { return *this == Scalar(1); }

bool Scalar::involves_q() const {
    const RingKind k = demote(*this).kind();
    return k == RingKind::qpoly || k == RingKind::qfraction;
}

bool Scalar::is_integral() const { return demote(*this).kind() == RingKind::integer; }

Scalar Scalar::operator-() const {
    return std::visit(
        [](const auto& u) -> Scalar {
            using T = std::decay_t<decltype(u)>;
            return Scalar(T(-u));
        },
        v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binary(a, b, common_kind(a.kind(), b.kind()),
                  [](const auto& x, const auto& y) -> Scalar {
                      using T = std::decay_t<decltype(x)>;
                      if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
                          return Scalar(T(x + y));
                      else
                          return Scalar(x + y);
                  });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binary(a, b, common_kind(a.kind(), b.kind()),
                  [](const auto& x, const auto& y) -> Scalar {
                      using T = std::decay_t<decltype(x)>;
                      if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
                          return Scalar(T(x - y));
                      else
                          return Scalar(x - y);
                  });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binary(a, b, common_kind(a.kind(), b.kind()),
                  [](const auto& x, const auto& y) -> Scalar {
                      using T = std::decay_t<decltype(x)>;
                      if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>)
                          return Scalar(T(x * y));
                      else
                          return Scalar(x * y);
                  });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw MathError("division by zero");
    const RingKind k = field_of(common_kind(a.kind(), b.kind()));
    return binary(a, b, k, [](const auto& x, const auto& y) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>)
            return Scalar(Rational(x / y));
        else if constexpr (std::is_same_v<T, QFraction>)
            return Scalar(x / y);
        else
            return Scalar();  // unreachable: k is a field
    });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() == b.kind()) return a.storage() == b.storage();
    const RingKind k = common_kind(a.kind(), b.kind());
    return promote(a, k).storage() == promote(b, k).storage();
}

Scalar exact_div(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw MathError("division by zero");
    return binary(x, y, common_kind(x.kind(), y.kind()),
                  [&](const auto& u, const auto& v) -> Scalar {
                      using T = std::decay_t<decltype(u)>;
                      if constexpr (std::is_same_v<T, Integer>) {
                          if (!mpz_divisible_p(u.get_mpz_t(), v.get_mpz_t()))
                              throw NotDivisible(u.get_str() + " is not divisible by " +
                                                 v.get_str());
                          Integer r;
                          mpz_divexact(r.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
                          return Scalar(std::move(r));
                      } else if constexpr (std::is_same_v<T, QPoly>) {
                          auto r = u.divide_exact(v);
                          if (!r)
                              throw NotDivisible(to_string(u) + " is not divisible by " +
                                                 to_string(v));
                          return Scalar(std::move(*r));
                      } else if constexpr (std::is_same_v<T, Rational>) {
                          return Scalar(Rational(u / v));
                      } else {
                          return Scalar(u / v);
                      }
                  });
}

Scalar eval_q(const Scalar& p, const Integer& v) {
    return std::visit(
        [&](const auto& u) -> Scalar {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, QPoly>) {
                return Scalar(u.eval(v));
            } else if constexpr (std::is_same_v<T, QFraction>) {
                Integer d = u.den().eval(v);
                if (d == 0)
                    throw MathError("denominator vanishes at q = " + v.get_str());
                return Scalar(Rational(u.num().eval(v), d));
            } else {
                return Scalar(u);
            }
        },
        p.storage());
}

Scalar demote(const Scalar& s) {
    switch (s.kind()) {
        case RingKind::integer: return s;
        case RingKind::rational: {
            const auto& r = std::get<Rational>(s.storage());
            if (r.get_den() == 1) return Scalar(Integer(r.get_num()));
            return s;
        }
        case RingKind::qpoly: {
            const auto& p = std::get<QPoly>(s.storage());
            if (p.is_constant()) return Scalar(p.coeff(0));
            return s;
        }
        case RingKind::qfraction: {
            const auto& f = std::get<QFraction>(s.storage());
            if (f.den() == QPoly(1)) return demote(Scalar(f.num()));
            if (f.num().is_constant() && f.den().is_constant())
                return demote(Scalar(Rational(f.num().coeff(0), f.den().coeff(0))));
            return s;
        }
    }
    return s;
}

QFraction to_qfraction(const Scalar& s) {
    return std::visit(
        [](const auto& u) -> QFraction {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, Integer>)
                return QFraction(QPoly(u));
            else if constexpr (std::is_same_v<T, Rational>)
                return QFraction(QPoly(Integer(u.get_num())), QPoly(Integer(u.get_den())));
            else if constexpr (std::is_same_v<T, QPoly>)
                return QFraction(u);
            else
                return u;
        },
        s.storage());
}

Rational to_rational(const Scalar& s) {
    Scalar d = demote(s);
    if (d.kind() == RingKind::integer) return Rational(std::get<Integer>(d.storage()));
    if (d.kind() == RingKind::rational) return std::get<Rational>(d.storage());
    throw MathError("value depends on q: " + to_string(s));
}

QPoly to_qpoly(const Scalar& s) {
    Scalar d = demote(s);
    if (d.kind() == RingKind::integer) return QPoly(std::get<Integer>(d.storage()));
    if (d.kind() == RingKind::qpoly) return std::get<QPoly>(d.storage());
    throw MathError("not a polynomial: " + to_string(s));
}

Scalar pow(const Scalar& base, unsigned long exponent) {
    Scalar result(1);
    Scalar b = base;
    while (exponent > 0) {
        if (exponent & 1UL) result *= b;
        exponent >>= 1;
        if (exponent > 0) b *= b;
    }
    return result;
}

std::string to_string(const QPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    const auto& cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const Integer& c = cs[k];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string to_string(const Scalar& s, char var) {
    return std::visit(
        [var](const auto& u) -> std::string {
            using T = std::decay_t<decltype(u)>;
            if constexpr (std::is_same_v<T, Integer>) {
                return u.get_str();
            } else if constexpr (std::is_same_v<T, Rational>) {
                if (u.get_den() == 1) return u.get_num().get_str();
                return u.get_num().get_str() + "/" + u.get_den().get_str();
            } else if constexpr (std::is_same_v<T, QPoly>) {
                return to_string(u, var);
            } else {
                if (u.den() == QPoly(1)) return to_string(u.num(), var);
                return "(" + to_string(u.num(), var) + ")/(" + to_string(u.den(), var) + ")";
            }
        },
        s.storage());
}

}  // namespace gmoments
