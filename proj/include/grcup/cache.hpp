#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "grcup/groebner.hpp"

namespace grcup {

/// Raised when a cache file exists but cannot be read, or cannot be written.
class CacheIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CacheStatus { hit, absent, stale, corrupt };

struct CacheLoad {
    CacheStatus status = CacheStatus::absent;
    std::optional<GroebnerBasis> basis;  // set only on hit
};

/// Reduced bases keyed by n, one JSON file gb_<n>.json per parameter. Every
/// entry carries the engine version and a checksum over the canonical
/// payload; entries that fail either check are reported stale/corrupt and
/// never used silently.
class BasisCache {
public:
    explicit BasisCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path entry_path(std::int64_t n) const;

    CacheLoad load(std::int64_t n) const;
    void store(const GroebnerBasis& reduced) const;

private:
    std::filesystem::path dir_;
};

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace grcup
