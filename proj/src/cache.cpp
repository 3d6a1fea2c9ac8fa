#include "qhecke/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "qhecke/errors.hpp"

namespace qhecke {

std::optional<Json> DiskCache::load(const std::string& relpath) const {
    std::filesystem::path p = root_ / relpath;
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        return Json::parse(in);
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are treated as misses
    }
}

void DiskCache::store(const std::string& relpath, const Json& doc) const {
    std::filesystem::path p = root_ / relpath;
    std::filesystem::create_directories(p.parent_path());
    std::random_device rd;
    std::filesystem::path tmp = p;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp);
        if (!out) throw Error("ParseError", "cannot write cache file " + tmp.string());
        out << doc.dump(1);
    }
    std::filesystem::rename(tmp, p);
}

std::optional<DiskCache> resolve_cache(const std::string& flag_value) {
    if (!flag_value.empty()) return DiskCache(flag_value);
    if (const char* env = std::getenv("QHECKE_CACHE"); env && *env) return DiskCache(env);
    return std::nullopt;
}

}  // namespace qhecke
