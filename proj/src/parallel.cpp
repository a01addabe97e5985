#include "ablation/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ablation {

namespace {
std::atomic<int> g_thread_cap{0};
}

void set_threads(int n) { g_thread_cap.store(n < 0 ? 0 : n); }

int thread_cap() { return g_thread_cap.load(); }

bool parallel_enabled() {
#ifdef _OPENMP
    const int cap = g_thread_cap.load();
    if (cap == 1) return false;
    return omp_get_max_threads() > 1 || cap > 1;
#else
    return false;
#endif
}

void init_threads_from_env() {
    const char* env = std::getenv("ABLATION_HEAT_THREADS");
    if (!env) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) set_threads(static_cast<int>(v));
}

namespace detail {

void parallel_for_impl(std::int64_t n, void* ctx, void (*body)(void*, std::int64_t)) {
    if (n <= 0) return;
#ifdef _OPENMP
    const int cap = g_thread_cap.load();
    if (cap != 1 && n > 1) {
        if (cap > 1) {
#pragma omp parallel for schedule(static) num_threads(cap)
            for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
        } else {
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
        }
        return;
    }
#endif
    for (std::int64_t i = 0; i < n; ++i) body(ctx, i);
}

} // namespace detail
} // namespace ablation
