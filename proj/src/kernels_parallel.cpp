#include "gmoments/error.hpp"
#include "gmoments/kernels.hpp"

#include <atomic>
#include <exception>
#include <utility>

#ifdef GMOMENTS_HAVE_OPENMP
#include <omp.h>
#endif

namespace gmoments::kernels {

namespace {

std::atomic<Backend> g_backend{Backend::automatic};

// Runs body(i) for i in [0, n). The first exception thrown by any iteration
// is rethrown on the calling thread once the loop has finished.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
#ifdef GMOMENTS_HAVE_OPENMP
    std::exception_ptr failure;
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(gmoments_parallel_for_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

const Scalar& entry(const std::vector<std::vector<Scalar>>& rows, std::size_t i, std::size_t j) {
    static const Scalar zero;
    if (i >= rows.size() || j >= rows[i].size()) return zero;
    return rows[i][j];
}

}  // namespace

void set_backend(Backend b) { g_backend.store(b); }
Backend backend() { return g_backend.load(); }
std::size_t parallel_threshold() { return 48; }

bool use_parallel(std::size_t n) {
    switch (backend()) {
        case Backend::serial: return false;
        case Backend::parallel: return true;
        case Backend::automatic: return n >= parallel_threshold() && max_threads() > 1;
    }
    return false;
}

int max_threads() {
#ifdef GMOMENTS_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

LowerRows multiply(const LowerRows& a, const LowerRows& b) {
    const std::size_t n = a.size();
    LowerRows c(n);
    parallel_for(n, [&](std::size_t i) {
        c[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            Scalar acc;
            for (std::size_t k = j; k <= i; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                acc += a[i][k] * b[k][j];
            }
            c[i][j] = std::move(acc);
        }
    });
    return c;
}

LowerRows hadamard(const LowerRows& a, const LowerRows& b) {
    LowerRows c(a.size());
    parallel_for(a.size(), [&](std::size_t i) {
        c[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) c[i][j] = a[i][j] * b[i][j];
    });
    return c;
}

LowerRows invert(const LowerRows& t) {
    const std::size_t n = t.size();
    LowerRows x(n);
    for (std::size_t i = 0; i < n; ++i) x[i].resize(i + 1);
    // Columns of the inverse are independent forward substitutions.
    parallel_for(n, [&](std::size_t j) {
        x[j][j] = exact_div(Scalar(1), t[j][j]);
        for (std::size_t i = j + 1; i < n; ++i) {
            Scalar acc;
            for (std::size_t k = j; k < i; ++k) {
                if (t[i][k].is_zero() || x[k][j].is_zero()) continue;
                acc += t[i][k] * x[k][j];
            }
            x[i][j] = acc.is_zero() ? Scalar() : exact_div(-acc, t[i][i]);
        }
    });
    return x;
}

LowerRows generate(const HessenbergRows& p, std::size_t n) {
    LowerRows t(n);
    if (n == 0) return t;
    t[0] = {Scalar(1)};
    // Rows depend on their predecessor; entries within a row do not.
    for (std::size_t r = 0; r + 1 < n; ++r) {
        auto& next = t[r + 1];
        next.resize(r + 2);
        const auto& prev = t[r];
        parallel_for(r + 2, [&](std::size_t j) {
            Scalar acc;
            for (std::size_t i = (j == 0 ? 0 : j - 1); i <= r; ++i) {
                const Scalar& pij = entry(p, i, j);
                if (pij.is_zero() || prev[i].is_zero()) continue;
                acc += prev[i] * pij;
            }
            next[j] = std::move(acc);
        });
    }
    return t;
}

Scalar determinant(DenseRows m) {
    const std::size_t n = m.size();
    if (n == 0) return Scalar(1);
    bool negate = false;
    Scalar prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Scalar(0);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        const std::size_t rest = n - k - 1;
        parallel_for(rest, [&](std::size_t off) {
            const std::size_t i = k + 1 + off;
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        });
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace parallel

}  // namespace gmoments::kernels
