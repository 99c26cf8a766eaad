#pragma once

// Rendering of command results in the three output formats.

#include "gmoments/examples.hpp"
#include "gmoments/ring.hpp"
#include "gmoments/triangle.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace gmoments::cli {

enum class Format { pretty, json, csv };

// "int", "rat" or "q": the smallest ring holding every value.
std::string ring_name(const std::vector<Scalar>& values);

struct MatrixBlock {
    std::string name;
    std::size_t size = 0;
    std::vector<std::vector<Scalar>> rows;
};

MatrixBlock block_of(std::string name, const Triangle& t);
MatrixBlock block_of(std::string name, const ProductionMatrix& p);

// Named columns of equal length, indexed from `first_index`.
struct ListBlock {
    std::size_t first_index = 0;
    std::string index_name;
    std::vector<std::string> names;
    std::vector<std::vector<Scalar>> columns;
};

// A single matrix prints bare; several print as named sections (a JSON
// object keyed by name).
void write_matrices(std::ostream& out, Format f, const std::vector<MatrixBlock>& blocks);
void write_lists(std::ostream& out, Format f, const ListBlock& block);
void write_report(std::ostream& out, Format f, const VerifyReport& report);

}  // namespace gmoments::cli
