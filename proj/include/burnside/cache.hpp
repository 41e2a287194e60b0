#pragma once

#include <string>

#include "burnside/lattice.hpp"

namespace burnside {

// Directory used for classification caching: the BURNSIDE_CACHE_DIR
// environment variable when set, otherwise the flag value. Empty disables
// caching entirely.
std::string resolve_cache_dir(const std::string& flag_value);

// Cache file path for a group spec inside the directory.
std::string cache_file_path(const std::string& dir, const std::string& spec);

// Classification for a group spec string, consulting the cache when dir is
// nonempty.
// Any unreadable, stale or malformed entry is recomputed silently and the
// file rewritten best-effort; correctness never depends on the cache.
ClassificationPtr load_or_compute_classification(const std::string& spec, int order_bound,
                                                 const std::string& dir);

}  // namespace burnside
