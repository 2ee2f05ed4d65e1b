#ifndef AVCKIT_PARALLEL_HPP
#define AVCKIT_PARALLEL_HPP

#include <cstddef>

namespace avckit {

// All hot loops in the library are expressed as independent per-index maps
// followed by a serial reduction, so the parallel path produces bit-identical
// results to the serial reference.  The switch below selects the path; tests
// compare both, and tools/bench times them against each other.

void set_parallel(bool enabled);
bool parallel_enabled();

namespace detail {
void par_for_impl(std::size_t n, void* ctx, void (*body)(void*, std::size_t));
}

template <class F>
void par_for(std::size_t n, F&& body) {
    detail::par_for_impl(n, const_cast<void*>(static_cast<const void*>(&body)),
                         [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); });
}

}  // namespace avckit

#endif
