#include "pinch/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace pinch {

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("PINCH_SE_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) n = cap;
        } catch (const std::exception&) {
            // Malformed override: keep the hardware default.
        }
    }
    return n;
}

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    if (n == 0) return;
    const size_t workers = std::min(static_cast<size_t>(worker_count()), n);
    if (workers == 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto run = [&] {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (size_t t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace pinch
