#pragma once

#include <cstdint>

namespace ablation {

// Runtime switch between the OpenMP kernels and the serial reference path.
// Every parallel loop in the library is per-element work with no floating
// point reductions, so both paths produce bit-identical results; the tests
// assert this.

/// Cap worker threads. 0 = auto (OpenMP default). 1 = serial reference path.
void set_threads(int n);

/// Currently configured cap (0 = auto).
int thread_cap();

/// True when the OpenMP path is compiled in and more than one thread may run.
bool parallel_enabled();

/// Reads ABLATION_HEAT_THREADS and applies it (0 or unset = auto).
void init_threads_from_env();

namespace detail {
void parallel_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t));
}

/// Invokes fn(i) for i in [0, n), possibly concurrently. fn must be safe to
/// run for distinct i in any order and must not reduce into shared state.
template <class F>
void parallel_for(std::int64_t n, F&& fn) {
    detail::parallel_for_impl(n, &fn, [](void* ctx, std::int64_t i) {
        (*static_cast<F*>(ctx))(i);
    });
}

} // namespace ablation
