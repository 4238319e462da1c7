#include "vko/parallel.hpp"
#include "vko/random.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace vko {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0)
        return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do
        x = next();
    while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::uniformRational(std::int64_t lo, std::int64_t hi, std::int64_t denominator)
{
    Rational q(Integer(static_cast<long>(uniform(lo, hi))), Integer(static_cast<long>(denominator)));
    q.canonicalize();
    return q;
}

std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::size_t threadCount()
{
    if (const char* env = std::getenv("VKO_THREADS")) {
        try {
            long n = std::stol(env);
            if (n > 0)
                return static_cast<std::size_t>(n);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::min(threadCount(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex errorMutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed)
                    return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(errorMutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace vko
