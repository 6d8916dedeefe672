#include "arw/config.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>

namespace arw {

namespace {
std::atomic<int> g_degree_cap{12};
std::atomic<long long> g_branch_cap{100000};
std::mutex g_cache_dir_mutex;
std::optional<std::filesystem::path> g_cache_dir;
}  // namespace

int degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(int n) {
    // caps past kMaxDegreeCap still allow partition enumeration; the ring
    // modules clamp to kMaxDegreeCap on their own
    if (n < 0 || n > kMaxEnumerationDegree)
        throw std::invalid_argument("degree cap must be between 0 and " +
                                    std::to_string(kMaxEnumerationDegree));
    g_degree_cap.store(n, std::memory_order_relaxed);
}

std::optional<std::filesystem::path> cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    return g_cache_dir;
}

void set_cache_dir(std::optional<std::filesystem::path> dir) {
    std::lock_guard<std::mutex> lock(g_cache_dir_mutex);
    g_cache_dir = std::move(dir);
}

long long default_branch_cap() { return g_branch_cap.load(std::memory_order_relaxed); }

void set_default_branch_cap(long long cap) {
    if (cap < 1) throw std::invalid_argument("branch cap must be positive");
    g_branch_cap.store(cap, std::memory_order_relaxed);
}

}  // namespace arw
