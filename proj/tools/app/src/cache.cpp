#include "tiltlab/app/cache.hpp"

#include "tiltlab/app/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <system_error>

namespace tiltlab::app {

namespace fs = std::filesystem;

std::optional<fs::path> cache_directory() {
    if (const char* dir = std::getenv("TILTLAB_CACHE_DIR"); dir && *dir) return fs::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "tiltlab";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "tiltlab";
    return std::nullopt;
}

std::string cache_key(const std::string& quiver_bytes, std::optional<std::int64_t> cap) {
    const std::string material = quiver_bytes + "\ncap=" + (cap ? std::to_string(*cap) : "none") +
                                 "\nversion=" + std::to_string(format_version);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_Digest(material.data(), material.size(), digest.data(), &len, EVP_sha256(), nullptr);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

CachedCatalog load_or_build_catalog(const Quiver& q, const std::string& quiver_bytes,
                                    std::optional<std::int64_t> cap, bool use_cache) {
    const auto dir = use_cache ? cache_directory() : std::nullopt;
    if (!dir) return {build_catalog(q, cap), CacheOutcome::disabled};
    const fs::path file = *dir / (cache_key(quiver_bytes, cap) + ".json");

    std::error_code ec;
    if (fs::exists(file, ec)) {
        try {
            return {catalog_from_json(q, parse_json(read_text(file), file.string())), CacheOutcome::hit};
        } catch (const std::exception&) {
            // stale or corrupt: fall through and rebuild
        }
    }
    CachedCatalog out{build_catalog(q, cap), CacheOutcome::rebuilt};
    try {
        fs::create_directories(*dir, ec);
        const fs::path tmp = file.string() + ".tmp";
        write_text(tmp, catalog_to_json(out.catalog).dump(1) + "\n");
        fs::rename(tmp, file, ec);
    } catch (const std::exception&) {
    }
    return out;
}

}  // namespace tiltlab::app
