#pragma once

// Inner loops of the triangle operations. Each kernel has a serial reference
// implementation and an OpenMP one with identical results; the parallel
// versions split independent rows or columns across threads. Without OpenMP
// the parallel namespace forwards to the serial code.

#include "gmoments/ring.hpp"

#include <cstddef>
#include <vector>

namespace gmoments::kernels {

// Lower-triangular storage: rows[i] has i+1 entries.
using LowerRows = std::vector<std::vector<Scalar>>;
// Almost-Hessenberg storage: rows[i] has at most i+2 entries.
using HessenbergRows = std::vector<std::vector<Scalar>>;
using DenseRows = std::vector<std::vector<Scalar>>;

namespace serial {
LowerRows multiply(const LowerRows& a, const LowerRows& b);
LowerRows hadamard(const LowerRows& a, const LowerRows& b);
LowerRows invert(const LowerRows& t);
LowerRows generate(const HessenbergRows& p, std::size_t n);
Scalar determinant(DenseRows m);
}  // namespace serial

namespace parallel {
LowerRows multiply(const LowerRows& a, const LowerRows& b);
LowerRows hadamard(const LowerRows& a, const LowerRows& b);
LowerRows invert(const LowerRows& t);
LowerRows generate(const HessenbergRows& p, std::size_t n);
Scalar determinant(DenseRows m);
}  // namespace parallel

enum class Backend { automatic, serial, parallel };

// Process-wide backend used by the Triangle operations. `automatic` picks the
// parallel kernels from `parallel_threshold()` rows upward.
void set_backend(Backend b);
Backend backend();
std::size_t parallel_threshold();
bool use_parallel(std::size_t n);

int max_threads();

}  // namespace gmoments::kernels
