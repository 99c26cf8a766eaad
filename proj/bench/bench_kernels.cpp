// Serial reference kernels against their OpenMP counterparts. Inputs are the
// q-case matrices (polynomial entries) and the Catalan matrices (integers).

#include "gmoments/kernels.hpp"
#include "gmoments/pipeline.hpp"
#include "gmoments/triangle.hpp"

#include <benchmark/benchmark.h>

#include <map>

using namespace gmoments;
namespace k = gmoments::kernels;

namespace {

enum Input { integers = 0, polynomials = 1 };

SFractionCoeffs coefficients(int input, std::size_t n) {
    return input == polynomials ? qpow_coefficients(2 * n) : constant_coefficients(2 * n);
}

const Triangle& n_matrix(int input, std::size_t n) {
    static std::map<std::pair<int, std::size_t>, Triangle> cache;
    auto [it, fresh] = cache.try_emplace({input, n});
    if (fresh) it->second = build_N_via_behead(coefficients(input, n), n);
    return it->second;
}

const Triangle& m_matrix(int input, std::size_t n) {
    static std::map<std::pair<int, std::size_t>, Triangle> cache;
    auto [it, fresh] = cache.try_emplace({input, n});
    if (fresh) it->second = build_M(coefficients(input, n), n);
    return it->second;
}

k::HessenbergRows production_rows(int input, std::size_t n) {
    const JFractionCoeffs j = s_to_j(coefficients(input, n));
    return ProductionMatrix::tridiagonal(j.b, j.lambda, n - 1).rows();
}

template <auto Kernel>
void multiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto& a = n_matrix(static_cast<int>(state.range(1)), n).rows();
    const auto& b = m_matrix(static_cast<int>(state.range(1)), n).rows();
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

template <auto Kernel>
void invert(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto& a = n_matrix(static_cast<int>(state.range(1)), n).rows();
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(a));
}

template <auto Kernel>
void generate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = production_rows(static_cast<int>(state.range(1)), n);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(p, n));
}

template <auto Kernel>
void hankel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto mu = moments_from_sfraction(coefficients(static_cast<int>(state.range(1)), n), 2 * n - 1);
    k::DenseRows h(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = mu[i + j];
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(h));
}

void sizes(benchmark::internal::Benchmark* b) {
    b->ArgNames({"n", "poly"});
    for (int n : {16, 48, 96}) b->Args({n, integers});
    for (int n : {8, 16, 24}) b->Args({n, polynomials});
    b->Unit(benchmark::kMillisecond);
}

void small_sizes(benchmark::internal::Benchmark* b) {
    b->ArgNames({"n", "poly"});
    for (int n : {8, 16, 24}) b->Args({n, integers});
    for (int n : {6, 10}) b->Args({n, polynomials});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(multiply<k::serial::multiply>)->Name("multiply/serial")->Apply(sizes);
BENCHMARK(multiply<k::parallel::multiply>)->Name("multiply/parallel")->Apply(sizes);
BENCHMARK(invert<k::serial::invert>)->Name("invert/serial")->Apply(sizes);
BENCHMARK(invert<k::parallel::invert>)->Name("invert/parallel")->Apply(sizes);
BENCHMARK(generate<k::serial::generate>)->Name("generate/serial")->Apply(sizes);
BENCHMARK(generate<k::parallel::generate>)->Name("generate/parallel")->Apply(sizes);
BENCHMARK(hankel<k::serial::determinant>)->Name("determinant/serial")->Apply(small_sizes);
BENCHMARK(hankel<k::parallel::determinant>)->Name("determinant/parallel")->Apply(small_sizes);

BENCHMARK_MAIN();
