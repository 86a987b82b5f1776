#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace divlat {

/// How a data-parallel kernel runs. threads == 1 selects the serial reference
/// path; 0 means "whatever OpenMP picks".
struct Execution {
    int threads = 1;

    static Execution serial() { return {1}; }
    static Execution parallel(int threads = 0) { return {threads}; }

    bool is_serial() const {
#ifdef _OPENMP
        return threads == 1;
#else
        return true;
#endif
    }
};

/// Runs fn(i) for i in [0, count). Exceptions thrown inside workers are
/// captured and the first one is rethrown on the calling thread.
template <class Fn>
void parallel_for(std::size_t count, Execution exec, Fn&& fn) {
    if (exec.is_serial()) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
#endif
}

}  // namespace divlat
