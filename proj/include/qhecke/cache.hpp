#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qhecke/jsonio.hpp"

namespace qhecke {

// One JSON document per file under a root directory. Writes go through a
// temporary file followed by a rename, so concurrent readers never see a
// torn file.
class DiskCache {
public:
    explicit DiskCache(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }

    std::optional<Json> load(const std::string& relpath) const;
    void store(const std::string& relpath, const Json& doc) const;

private:
    std::filesystem::path root_;
};

// Cache directory resolution: explicit flag beats QHECKE_CACHE beats none.
std::optional<DiskCache> resolve_cache(const std::string& flag_value);

}  // namespace qhecke
