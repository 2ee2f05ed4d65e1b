#include "avckit/parallel.hpp"

#include <atomic>

namespace avckit {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool enabled) { g_parallel.store(enabled); }
bool parallel_enabled() { return g_parallel.load(); }

namespace detail {

void par_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t)) {
    if (g_parallel.load() && n > 1) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(ctx, static_cast<std::size_t>(i));
    } else {
        // Serial reference path, kept for testing and benchmarking.
        for (std::size_t i = 0; i < n; ++i) body(ctx, i);
    }
}

}  // namespace detail
}  // namespace avckit
