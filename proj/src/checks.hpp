#pragma once

// Helpers for building CheckOutcome records from matrix and list comparisons.

#include "gmoments/pipeline.hpp"
#include "gmoments/triangle.hpp"

#include <span>
#include <string>
#include <vector>

namespace gmoments::detail {

std::string render_list(std::span<const Scalar> values);

CheckOutcome compare_lists(std::string name, std::span<const Scalar> expected,
                           std::span<const Scalar> actual, std::string note = {});

CheckOutcome compare_triangles(std::string name, const Triangle& expected, const Triangle& actual,
                               std::string note = {});

CheckOutcome compare_productions(std::string name, const ProductionMatrix& expected,
                                 const ProductionMatrix& actual, std::string note = {});

CheckOutcome passed(std::string name, std::string note = {});
CheckOutcome failed(std::string name, std::string expected, std::string actual,
                    std::string note = {});

}  // namespace gmoments::detail
