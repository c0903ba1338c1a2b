#pragma once

#include "tiltlab/catalog.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace tiltlab::app {

// TILTLAB_CACHE_DIR, else $XDG_CACHE_HOME/tiltlab, else ~/.cache/tiltlab.
std::optional<std::filesystem::path> cache_directory();

// Hex SHA-256 of the quiver file bytes and the cap.
std::string cache_key(const std::string& quiver_bytes, std::optional<std::int64_t> cap);

enum class CacheOutcome { hit, rebuilt, disabled };

struct CachedCatalog {
    ExceptionalCatalog catalog;
    CacheOutcome outcome = CacheOutcome::disabled;
};

// Loads the catalog for (file, cap) from the cache, rebuilding it silently
// when missing, unreadable or stale. Cache write failures are ignored.
CachedCatalog load_or_build_catalog(const Quiver& q, const std::string& quiver_bytes,
                                    std::optional<std::int64_t> cap, bool use_cache = true);

}  // namespace tiltlab::app
