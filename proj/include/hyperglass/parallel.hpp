#pragma once

#include <cstddef>
#include <functional>

namespace hyperglass {

/// Worker cap for data-parallel loops. Resolution order: explicit
/// set_thread_count, then the HYPERGLASS_THREADS environment variable, then
/// the hardware concurrency.
void set_thread_count(std::size_t n);
std::size_t thread_count();

/// Runs fn(j) for j in [0, n). Rows are distributed over workers; each row
/// writes to disjoint storage, so results are bitwise independent of the
/// degree of parallelism.
void parallel_rows(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hyperglass
