#include "segrc/threading.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace segrc {

int thread_count() {
    static const int n = [] {
#ifdef _OPENMP
        int limit = omp_get_max_threads();
        if (const char* env = std::getenv("SEGRC_THREADS")) {
            try {
                const int requested = std::stoi(env);
                if (requested >= 1) limit = requested;
            } catch (...) {
                // unparsable value: keep the OpenMP default
            }
        }
        return limit < 1 ? 1 : limit;
#else
        return 1;
#endif
    }();
    return n;
}

}  // namespace segrc
