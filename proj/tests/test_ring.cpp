#include "gmoments/error.hpp"
#include "gmoments/ring.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gmoments;

namespace {

Scalar q_poly(std::initializer_list<long> c) { return Scalar(QPoly(c)); }

Scalar random_poly(int max_degree = 4) {
    std::vector<Integer> c;
    const long d = oracle::uniform(0, max_degree);
    for (long k = 0; k <= d; ++k) c.emplace_back(oracle::uniform(-9, 9));
    return Scalar(QPoly(c));
}

Scalar random_scalar() {
    switch (oracle::uniform(0, 3)) {
        case 0: return Scalar(Integer(oracle::uniform(-50, 50)));
        case 1: {
            long den = oracle::uniform(1, 9);
            return Scalar(Rational(oracle::uniform(-30, 30), den));
        }
        case 2: return random_poly();
        default: {
            Scalar d = random_poly(2);
            while (d.is_zero()) d = random_poly(2);
            return random_poly(3) / d;
        }
    }
}

}  // namespace

TEST_CASE("polynomial products") {
    CHECK(Scalar::q() * Scalar::q_power(2) == Scalar::q_power(3));
    CHECK(q_poly({1, 1}) * q_poly({1, 1}) == q_poly({1, 2, 1}));
    CHECK(eval_q(q_poly({0, 1, 1}), 2) == Scalar(6));
}

TEST_CASE("exact division") {
    CHECK(exact_div(Scalar::q_power(3), Scalar::q()) == Scalar::q_power(2));
    CHECK(exact_div(Scalar(6), Scalar(3)) == Scalar(2));
    CHECK_THROWS_AS(exact_div(q_poly({1, 1}), Scalar::q()), NotDivisible);
    CHECK_THROWS_AS(exact_div(Scalar(7), Scalar(2)), NotDivisible);
    CHECK_THROWS_AS(exact_div(Scalar(7), Scalar(0)), MathError);
    CHECK(exact_div(Scalar(Rational(7)), Scalar(2)) == Scalar(Rational(7, 2)));
}

TEST_CASE("evaluation at an integer") {
    CHECK(eval_q(q_poly({1, 2, 1, 1}), 2) == Scalar(17));
    CHECK(eval_q(Scalar::q_power(5), 2) == Scalar(32));
    CHECK(eval_q(Scalar(0), 7) == Scalar(0));
    CHECK(eval_q(Scalar(Rational(1, 3)), 5) == Scalar(Rational(1, 3)));
    CHECK(eval_q(q_poly({1, 1}) / q_poly({0, 1}), 2) == Scalar(Rational(3, 2)));
    CHECK_THROWS_AS(eval_q(Scalar(1) / q_poly({-2, 1}), 2), MathError);
}

TEST_CASE("equality across kinds and demotion") {
    CHECK(Scalar(Rational(4, 2)) == Scalar(2));
    CHECK(Scalar(QPoly(3)) == Scalar(3));
    CHECK(demote(Scalar(QFraction(QPoly{0, 2}, QPoly{0, 1}))).kind() == RingKind::integer);
    CHECK(demote(q_poly({1, 1}) / Scalar(1)).kind() == RingKind::qpoly);
    CHECK(demote(Scalar(Rational(1, 2))).kind() == RingKind::rational);
    CHECK(Scalar(Rational(1, 2)) != Scalar(0));
    CHECK(q_poly({0, 1}).involves_q());
    CHECK_FALSE(Scalar(QPoly(5)).involves_q());
    CHECK(Scalar(QPoly(5)).is_integral());
}

TEST_CASE("fractions are kept in lowest terms") {
    const Scalar f = q_poly({-1, 0, 1}) / q_poly({-1, 1});
    CHECK(f == q_poly({1, 1}));
    CHECK(demote(f).kind() == RingKind::qpoly);
    const QFraction g = to_qfraction(Scalar(2) / q_poly({0, -4}));
    CHECK(g.den().lead() > 0);
    CHECK(Scalar(g) * q_poly({0, 2}) == Scalar(-1));
}

TEST_CASE("ring axioms on random operands") {
    for (int t = 0; t < 300; ++t) {
        const Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + (-x)).is_zero());
        CHECK(x - y == x + (-y));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("exact_div undoes multiplication") {
    for (int t = 0; t < 300; ++t) {
        const bool poly = t % 2 == 0;
        const Scalar x = poly ? random_poly() : Scalar(Integer(oracle::uniform(-1000, 1000)));
        Scalar y = poly ? random_poly(3) : Scalar(Integer(oracle::uniform(-40, 40)));
        if (y.is_zero()) y = Scalar(3);
        CHECK(exact_div(x * y, y) == x);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    for (int t = 0; t < 300; ++t) {
        const Scalar p = random_poly(), r = random_poly();
        const Integer v = oracle::uniform(-5, 5);
        CHECK(eval_q(p * r, v) == eval_q(p, v) * eval_q(r, v));
        CHECK(eval_q(p + r, v) == eval_q(p, v) + eval_q(r, v));
        // Horner evaluation from the coefficient list as an oracle.
        Integer h = 0;
        const QPoly poly = to_qpoly(p);
        const auto& c = poly.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) h = h * v + *it;
        CHECK(eval_q(p, v) == Scalar(h));
    }
}

TEST_CASE("rendering") {
    CHECK(to_string(Scalar(-12)) == "-12");
    CHECK(to_string(Scalar(Rational(6, -4))) == "-3/2");
    CHECK(to_string(q_poly({1, 2, 1, 1})) == "1 + 2*q + q^2 + q^3");
    CHECK(to_string(q_poly({0, -1, 0, 3})) == "-q + 3*q^3");
    CHECK(to_string(Scalar(0)) == "0");
    CHECK(to_string(q_poly({1, 1}), 'x') == "1 + x");
}

TEST_CASE("parsing") {
    CHECK(parse_scalar("1 + 2*q + q^2 + q^3") == q_poly({1, 2, 1, 1}));
    CHECK(parse_scalar("(1+q)^3") == q_poly({1, 3, 3, 1}));
    CHECK(parse_scalar("-3/2") == Scalar(Rational(-3, 2)));
    CHECK(parse_scalar("x/(1+x)", 'x') == q_poly({0, 1}) / q_poly({1, 1}));
    CHECK(parse_scalar("2*q") == q_poly({0, 2}));
    CHECK_THROWS_AS(parse_scalar("2q"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    try {
        parse_scalar("1 + $");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("render and parse round-trip") {
    for (int t = 0; t < 300; ++t) {
        const Scalar x = random_scalar();
        CHECK(parse_scalar(to_string(x)) == x);
    }
}

TEST_CASE("powers") {
    CHECK(pow(q_poly({1, 1}), 0) == Scalar(1));
    CHECK(pow(q_poly({1, 1}), 4) == q_poly({1, 4, 6, 4, 1}));
    CHECK(pow(Scalar(Rational(2, 3)), 3) == Scalar(Rational(8, 27)));
}
