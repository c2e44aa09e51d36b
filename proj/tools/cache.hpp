#pragma once

#include <optional>
#include <string>
#include <vector>

namespace chartab::tool {

// On-disk copy of a serialized table: labels plus decimal entry strings.
// Files live under the directory named by CHARTAB_CACHE_DIR; with the
// variable unset the cache is disabled and every call recomputes.
struct CachedTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::string>> values;
};

// key of the form "<kind>-n<n>-r<r>-v<version>"; the file name appends a
// hash of the key, the payload ends with a checksum line checked on load
std::string cache_key(const std::string& kind, int n, int r);

std::optional<CachedTable> cache_load(const std::string& key);
bool cache_store(const std::string& key, const CachedTable& table);

}  // namespace chartab::tool
