#pragma once

#include <cstddef>
#include <functional>

namespace szego {

/// Global worker cap used by parallel_for; 0 means hardware concurrency.
void set_max_workers(int n);
int max_workers();

/// Runs body(i) for i in [begin, end). Each index writes only its own
/// output slot, so results are bitwise independent of the worker count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace szego
