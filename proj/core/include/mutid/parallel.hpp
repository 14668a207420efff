#ifndef MUTID_PARALLEL_HPP
#define MUTID_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace mutid
{

// Worker count: MUTID_THREADS if set to a positive integer, otherwise the
// number of hardware threads (at least 1).
int worker_count();

// Calls body(i) for every i in [0, n), splitting the range into contiguous
// blocks over worker_count() threads.  Bodies must write only to disjoint
// outputs indexed by i; the first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace mutid

#endif
