#include "cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace chartab::tool {

namespace {

constexpr int kCacheVersion = 1;

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::optional<std::filesystem::path> cache_dir() {
    const char* dir = std::getenv("CHARTAB_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

std::filesystem::path file_for(const std::filesystem::path& dir,
                               const std::string& key) {
    return dir / (key + "-" + hex64(fnv1a(key)) + ".tbl");
}

std::string render(const std::string& key, const CachedTable& t) {
    std::ostringstream out;
    out << "chartab-table " << kCacheVersion << ' ' << key << '\n';
    out << "rows " << t.row_labels.size() << '\n';
    for (const auto& label : t.row_labels) out << label << '\n';
    out << "cols " << t.col_labels.size() << '\n';
    for (const auto& label : t.col_labels) out << label << '\n';
    out << "values\n";
    for (const auto& row : t.values) {
        for (size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string cache_key(const std::string& kind, int n, int r) {
    return kind + "-n" + std::to_string(n) + "-r" + std::to_string(r) + "-v" +
           std::to_string(kCacheVersion);
}

std::optional<CachedTable> cache_load(const std::string& key) {
    const auto dir = cache_dir();
    if (!dir) return std::nullopt;
    std::ifstream in(file_for(*dir, key));
    if (!in) return std::nullopt;

    std::string payload, line;
    CachedTable t;
    // gather everything before the checksum line, then re-verify
    std::string expected_sum;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (line.rfind("checksum ", 0) == 0) {
            expected_sum = line.substr(9);
            break;
        }
        lines.push_back(line);
        payload += line;
        payload += '\n';
    }
    if (expected_sum.empty() || hex64(fnv1a(payload)) != expected_sum)
        return std::nullopt;

    size_t at = 0;
    auto next = [&]() -> const std::string& { return lines.at(at++); };
    try {
        std::istringstream head(next());
        std::string magic, got_key;
        int version = 0;
        head >> magic >> version >> got_key;
        if (magic != "chartab-table" || version != kCacheVersion ||
            got_key != key)
            return std::nullopt;

        std::istringstream rows_head(next());
        std::string word;
        size_t count = 0;
        rows_head >> word >> count;
        if (word != "rows") return std::nullopt;
        for (size_t i = 0; i < count; ++i) t.row_labels.push_back(next());

        std::istringstream cols_head(next());
        cols_head >> word >> count;
        if (word != "cols") return std::nullopt;
        for (size_t i = 0; i < count; ++i) t.col_labels.push_back(next());

        if (next() != "values") return std::nullopt;
        for (size_t i = 0; i < t.row_labels.size(); ++i) {
            std::istringstream row(next());
            std::vector<std::string> cells;
            std::string cell;
            while (row >> cell) cells.push_back(cell);
            if (cells.size() != t.col_labels.size()) return std::nullopt;
            t.values.push_back(std::move(cells));
        }
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
    return t;
}

bool cache_store(const std::string& key, const CachedTable& table) {
    const auto dir = cache_dir();
    if (!dir) return false;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) return false;
    const std::string payload = render(key, table);
    std::ofstream out(file_for(*dir, key), std::ios::trunc);
    if (!out) return false;
    out << payload << "checksum " << hex64(fnv1a(payload)) << '\n';
    return static_cast<bool>(out);
}

}  // namespace chartab::tool
