#include "tkkforge/kernels.hpp"

#include <atomic>

#ifdef TKKFORGE_OPENMP
#include <omp.h>
#endif

namespace tkkforge::kernels {

Mode& default_mode() {
    static Mode mode = openmp_available() ? Mode::openmp : Mode::serial;
    return mode;
}

bool openmp_available() {
#ifdef TKKFORGE_OPENMP
    return true;
#else
    return false;
#endif
}

int thread_count() {
#ifdef TKKFORGE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_thread_count(int n) {
#ifdef TKKFORGE_OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

std::optional<Index> first_failure(Index n, const std::function<bool(Index)>& ok, Mode mode) {
#ifdef TKKFORGE_OPENMP
    if (mode == Mode::openmp) {
        std::atomic<Index> best{n};
        #pragma omp parallel for schedule(dynamic, 16)
        for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
            Index i = static_cast<Index>(ii);
            if (i >= best.load(std::memory_order_relaxed)) continue;
            if (!ok(i)) {
                Index cur = best.load(std::memory_order_relaxed);
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
        Index b = best.load();
        if (b < n) return b;
        return std::nullopt;
    }
#else
    (void)mode;
#endif
    for (Index i = 0; i < n; ++i)
        if (!ok(i)) return i;
    return std::nullopt;
}

Matrix assemble_rows(Index nrows, Index ncols, const Field& f,
                     const std::function<Vec(Index)>& row, Mode mode) {
    Matrix m(f, nrows, ncols);
#ifdef TKKFORGE_OPENMP
    if (mode == Mode::openmp) {
        #pragma omp parallel for schedule(dynamic, 8)
        for (long long ii = 0; ii < static_cast<long long>(nrows); ++ii)
            m.set_row(static_cast<Index>(ii), row(static_cast<Index>(ii)));
        return m;
    }
#else
    (void)mode;
#endif
    for (Index i = 0; i < nrows; ++i) m.set_row(i, row(i));
    return m;
}

}  // namespace tkkforge::kernels
