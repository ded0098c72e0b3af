#pragma once

#include <cstddef>
#include <functional>

namespace crouzeix {

// Worker count: hardware concurrency, capped by CROUZEIX_LAB_THREADS when set.
unsigned thread_count();

// Calls body(i) for i in [0, count) across thread_count() workers. Worker w
// handles i = w, w + T, w + 2T, ...; results must not depend on the split.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace crouzeix
