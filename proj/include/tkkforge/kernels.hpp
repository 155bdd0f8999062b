#pragma once

#include <functional>
#include <optional>

#include "tkkforge/linalg.hpp"

namespace tkkforge::kernels {

// Execution mode for the data-parallel scan/assembly kernels. Both modes
// produce identical results (the parallel scan reduces to the minimum
// failing index); the serial path is kept as the reference implementation
// and for the comparison benchmark.
enum class Mode { serial, openmp };

Mode& default_mode();
bool openmp_available();
int thread_count();
void set_thread_count(int n);  // 0 = library default

// Smallest i in [0, n) with !ok(i), or nullopt if all pass.
std::optional<Index> first_failure(Index n, const std::function<bool(Index)>& ok,
                                   Mode mode = default_mode());

// Matrix whose i-th row is row(i); rows are filled independently.
Matrix assemble_rows(Index nrows, Index ncols, const Field& f,
                     const std::function<Vec(Index)>& row, Mode mode = default_mode());

}  // namespace tkkforge::kernels
