#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#include <omp.h>

namespace ilab {

/// Thread cap: INCIDENCE_LAB_THREADS when set to a positive integer, otherwise
/// the OpenMP default. Read on every call so tests can change it.
int thread_limit();

/// Runs body(i) for i in [0, n) on an OpenMP team. Bodies write only to their
/// own slot. If any iteration throws, the exception of the lowest index is
/// rethrown after the loop, so failures are deterministic.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_limit())
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace ilab
