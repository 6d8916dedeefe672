#pragma once

#include <filesystem>

#include "arw/stats.hpp"

namespace arw {

/// Precomputes character tables and plethysm-coproduct coefficient tables for
/// every degree 0..degree and writes them into dir (created if needed).
/// Deterministic: rebuilding produces byte-identical files.
void cache_build(const std::filesystem::path& dir, int degree);

}  // namespace arw
