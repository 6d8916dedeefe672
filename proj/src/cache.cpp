#include "arw/cache.hpp"

#include <fstream>

#include "arw/characters.hpp"
#include "arw/coalgebra.hpp"
#include "arw/config.hpp"
#include "arw/errors.hpp"

namespace arw {

Stats& stats() {
    static Stats instance;
    return instance;
}

void cache_build(const std::filesystem::path& dir, int degree) {
    if (degree < 0 || degree > std::min(degree_cap(), kMaxDegreeCap))
        throw DomainError("cache_build: degree outside the configured cap");
    std::filesystem::create_directories(dir);
    for (int n = 0; n <= degree; ++n) {
        {
            std::ofstream out(dir / ("chartable-" + std::to_string(n) + ".txt"),
                              std::ios::trunc);
            if (!out) throw std::runtime_error("cache_build: cannot open character file");
            write_character_table(character_table(n), out);
            if (!out) throw std::runtime_error("cache_build: character file write failed");
        }
        {
            std::ofstream out(dir / ("plethco-" + std::to_string(n) + ".txt"), std::ios::trunc);
            if (!out) throw std::runtime_error("cache_build: cannot open plethysm file");
            write_plethysm_table(plethysm_table(n), out);
            if (!out) throw std::runtime_error("cache_build: plethysm file write failed");
        }
    }
}

}  // namespace arw
