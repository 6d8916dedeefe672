#pragma once

#include <atomic>
#include <cstdint>

namespace arw {

/// Instrumentation counters for the --stats flag. Monotone per process.
struct Stats {
    std::atomic<std::uint64_t> char_tables_built{0};
    std::atomic<std::uint64_t> char_tables_loaded{0};
    std::atomic<std::uint64_t> char_cells_computed{0};
    std::atomic<std::uint64_t> pleth_tables_built{0};
    std::atomic<std::uint64_t> pleth_tables_loaded{0};
};

Stats& stats();

}  // namespace arw
