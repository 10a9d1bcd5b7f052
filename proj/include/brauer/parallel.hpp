#ifndef BRAUER_PARALLEL_HPP
#define BRAUER_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace brauer {

/// Worker count: hardware concurrency, capped by BRAUER_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n), spread over worker_count() threads.  The
/// body must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace brauer

#endif  // BRAUER_PARALLEL_HPP
