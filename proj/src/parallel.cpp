#include "ilab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ilab {

int thread_limit() {
    if (const char* env = std::getenv("INCIDENCE_LAB_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
            // fall through to the OpenMP default
        }
    }
    return omp_get_max_threads();
}

}  // namespace ilab
