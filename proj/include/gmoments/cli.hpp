#pragma once

#include "gmoments/cfrac.hpp"
#include "gmoments/ring.hpp"

#include <cstddef>
#include <exception>
#include <iosfwd>
#include <stdexcept>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmoments::cli {

// A coefficient sequence a_1, a_2, ... given on the command line:
//   lit:v1,v2,...            exactly these terms
//   const:v                  v, v, v, ...
//   cycle:p1,...             p1, ..., pk repeating
//   prefix:v1,..|cycle:p1,.. the prefix, then the cycle repeating
//   qpow                     1, q, q^2, ...
class SequenceSpec {
public:
    enum class Kind { lit, constant, cycle, qpow };

    Kind kind() const { return kind_; }
    // Number of terms, or nothing for the unbounded kinds.
    std::optional<std::size_t> length() const;
    // a_n, 1-indexed. Throws MathError past the end of a lit spec.
    Scalar operator()(std::size_t n) const;
    // a_1 .. a_count, or all of a shorter lit spec. When v is given every
    // term is evaluated at q = v.
    SFractionCoeffs coefficients(std::size_t count,
                                 const std::optional<Integer>& v = std::nullopt) const;

    friend SequenceSpec parse_spec(std::string_view text);

private:
    Kind kind_ = Kind::lit;
    std::vector<Scalar> head_;   // lit terms, or the prefix before a cycle
    std::vector<Scalar> cycle_;  // also holds the single const value
};

// Throws ParseError (with the byte offset into `text`) on malformed input,
// including an empty cycle.
SequenceSpec parse_spec(std::string_view text);

// A verification that ran but did not pass.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes "error: <kind>: <message>" for the exception to `err` and returns
// its exit status: check 1; parse and usage 2; math 3; anything else is
// reported as internal with status 3.
int report_error(std::exception_ptr e, std::ostream& err);

// Runs the command line `args` (without the program name). Results go to
// `out` (or the --out file), diagnostics to `err` as one line. Returns
// 0 on success, 1 when a verification check fails, 2 for usage or parse
// errors and 3 when a mathematical precondition fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmoments::cli
