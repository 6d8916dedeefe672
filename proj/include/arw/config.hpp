#pragma once

#include <filesystem>
#include <optional>

namespace arw {

/// Process-wide truncation degree for the ring; every module inherits it
/// unless a value carries its own cap. Default 12.
int degree_cap();
void set_degree_cap(int n);

/// Hard ceiling on any degree cap (centralizer orders must stay in 64 bits).
inline constexpr int kMaxDegreeCap = 20;

/// Hard ceiling on partition enumeration.
inline constexpr int kMaxEnumerationDegree = 64;

/// Directory consulted for on-disk coefficient caches; unset means in-process only.
std::optional<std::filesystem::path> cache_dir();
void set_cache_dir(std::optional<std::filesystem::path> dir);

/// Default abort threshold for mixture branch growth.
long long default_branch_cap();
void set_default_branch_cap(long long cap);

}  // namespace arw
