#pragma once

#include <cstddef>
#include <functional>

namespace vko {

/// Worker count: VKO_THREADS if set and positive, else the hardware count.
std::size_t threadCount();

/// Calls body(i) for every i in [0, n), spread over threadCount() threads.
/// The first exception thrown by any call is rethrown after all workers stop.
/// Callers write results to per-index slots so the outcome does not depend
/// on scheduling.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace vko
