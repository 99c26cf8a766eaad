#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmoments {

// A mathematical precondition does not hold: division by zero, a
// non-divisible exact division, a vanishing Hankel determinant, too few
// coefficients for the requested depth.
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotDivisible : public MathError {
public:
    using MathError::MathError;
};

// A quotient-difference cell or Hankel determinant vanished at `order`.
class NotCatalanLike : public MathError {
public:
    NotCatalanLike(std::size_t order, const std::string& what)
        : MathError(what), order_(order) {}
    std::size_t order() const noexcept { return order_; }

private:
    std::size_t order_;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace gmoments
