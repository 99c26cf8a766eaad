#include "gmoments/cli.hpp"

#include "gmoments/error.hpp"

#include <string>

namespace gmoments::cli {

namespace {

// Comma-separated scalars starting at byte `base` of the full spec text.
std::vector<Scalar> parse_list(std::string_view text, std::size_t base, const char* what) {
    std::vector<Scalar> out;
    if (text.empty()) throw ParseError(base, std::string("empty ") + what);
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        if (item.empty()) throw ParseError(base + start, std::string("empty term in ") + what);
        try {
            out.push_back(parse_scalar(item));
        } catch (const ParseError& e) {
            throw ParseError(base + start + e.offset(),
                             "invalid term '" + std::string(item) + "' in " + what);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

SequenceSpec parse_spec(std::string_view text) {
    SequenceSpec s;
    if (text == "qpow") {
        s.kind_ = SequenceSpec::Kind::qpow;
        return s;
    }
    if (starts_with(text, "lit:")) {
        s.kind_ = SequenceSpec::Kind::lit;
        s.head_ = parse_list(text.substr(4), 4, "literal list");
        return s;
    }
    if (starts_with(text, "const:")) {
        s.kind_ = SequenceSpec::Kind::constant;
        s.cycle_ = parse_list(text.substr(6), 6, "constant");
        if (s.cycle_.size() != 1) throw ParseError(6, "const takes a single value");
        return s;
    }
    if (starts_with(text, "cycle:")) {
        s.kind_ = SequenceSpec::Kind::cycle;
        s.cycle_ = parse_list(text.substr(6), 6, "cycle");
        return s;
    }
    if (starts_with(text, "prefix:")) {
        const std::size_t bar = text.find('|');
        if (bar == std::string_view::npos)
            throw ParseError(text.size(), "prefix must be followed by '|cycle:'");
        s.kind_ = SequenceSpec::Kind::cycle;
        s.head_ = parse_list(text.substr(7, bar - 7), 7, "prefix");
        const std::string_view rest = text.substr(bar + 1);
        if (!starts_with(rest, "cycle:")) throw ParseError(bar + 1, "expected 'cycle:' after '|'");
        s.cycle_ = parse_list(rest.substr(6), bar + 7, "cycle");
        return s;
    }
    throw ParseError(0, "unknown sequence kind (expected lit:, const:, cycle:, prefix:...|cycle: "
                        "or qpow)");
}

std::optional<std::size_t> SequenceSpec::length() const {
    if (kind_ == Kind::lit) return head_.size();
    return std::nullopt;
}

Scalar SequenceSpec::operator()(std::size_t n) const {
    if (n == 0) throw std::out_of_range("sequence terms are 1-indexed");
    switch (kind_) {
        case Kind::qpow: return Scalar::q_power(n - 1);
        case Kind::constant: return cycle_.front();
        case Kind::lit:
            if (n > head_.size())
                throw MathError("literal sequence has " + std::to_string(head_.size()) +
                                " terms, a_" + std::to_string(n) + " requested");
            return head_[n - 1];
        case Kind::cycle:
            if (n <= head_.size()) return head_[n - 1];
            return cycle_[(n - 1 - head_.size()) % cycle_.size()];
    }
    return Scalar();
}

SFractionCoeffs SequenceSpec::coefficients(std::size_t count,
                                           const std::optional<Integer>& v) const {
    if (const auto len = length()) count = std::min(count, *len);
    SFractionCoeffs s;
    for (std::size_t k = 1; k <= count; ++k) {
        Scalar t = (*this)(k);
        s.a.push_back(v ? demote(eval_q(t, *v)) : t);
    }
    return s;
}

}  // namespace gmoments::cli
