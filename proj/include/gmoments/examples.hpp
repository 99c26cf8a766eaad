#pragma once

#include "gmoments/pipeline.hpp"
#include "gmoments/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gmoments {

struct VerifyReport {
    std::string example;
    std::size_t size = 0;
    std::optional<Integer> q;  // empty: q kept symbolic (qcase only)
    std::vector<CheckOutcome> checks;

    bool passed() const;
    std::size_t count(CheckStatus s) const;
};

// "catalan", "qcase", "schroder".
const std::vector<std::string>& example_names();

// Names of the checks run for an example, in report order. The qcase list
// differs between the symbolic run and a run at an integer q.
std::vector<std::string> registry(const std::string& example, bool numeric_q);

// Runs every registered check at size n. Mismatches against known misprints
// are reported as documented discrepancies, with both values rendered.
// Throws std::invalid_argument for an unknown name, and when q is given for
// an example other than qcase.
VerifyReport verify_example(const std::string& example, std::size_t n,
                            const std::optional<Integer>& q = std::nullopt);

}  // namespace gmoments
