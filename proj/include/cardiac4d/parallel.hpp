#pragma once

#include <cstddef>
#include <functional>

namespace cardiac4d {

// Worker-pool size used by parallel_chunks / parallel_for. The CLI sets this
// from --threads. Results never depend on it: chunk boundaries are a function
// of the problem size only, and callers reduce per-chunk results in chunk
// order.
int global_thread_count();
void set_global_thread_count(int n);
int hardware_thread_count();

std::size_t chunk_count_for(std::size_t n, std::size_t chunk_size);

// Calls fn(begin, end, chunk_index) for every chunk [begin, end) of size
// chunk_size (last chunk may be short). Chunks are distributed dynamically
// over workers; exceptions propagate to the caller.
void parallel_chunks(std::size_t n, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

// One task per index, for coarse per-frame / per-structure work.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cardiac4d
