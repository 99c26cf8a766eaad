#include "gmoments/error.hpp"
#include "gmoments/ring.hpp"

#include <cctype>
#include <string>

namespace gmoments {

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, char var) : text_(text), var_(var) {}

    Scalar parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        Scalar value = expression();
        skip_space();
        if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expression() {
        Scalar acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Scalar d = unary();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 6) throw ParseError(start, "exponent too large");
        return pow(base, std::stoul(digits));
    }

    Scalar primary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == var_) {
            ++pos_;
            return Scalar(QPoly::q());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return Scalar(Integer(std::string(text_.substr(start, pos_ - start))));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, char var) { return ExpressionParser(text, var).parse(); }

}  // namespace gmoments
