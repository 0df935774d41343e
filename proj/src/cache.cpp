#include "modscl/cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace modscl {

ResultCache::ResultCache(std::string path, std::string version)
    : path_(std::move(path)), version_(std::move(version)) {
    load();
}

void ResultCache::load() {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string word, ver, sclv, rotv, ext;
        if (!std::getline(ss, word, '|') || !std::getline(ss, ver, '|') ||
            !std::getline(ss, sclv, '|') || !std::getline(ss, rotv, '|') ||
            !std::getline(ss, ext, '|'))
            continue;  // corrupt line: skip
        if (ver != version_) continue;  // old versions ignored, not deleted
        try {
            CacheRecord rec{word, ver, parse_rational(sclv), parse_rational(rotv), ext == "1"};
            records_[word] = rec;
        } catch (const std::exception&) {
            continue;
        }
    }
}

std::optional<CacheRecord> ResultCache::get(const std::string& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = records_.find(w);
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::put(const CacheRecord& rec0) {
    CacheRecord rec = rec0;
    rec.version = version_;
    std::lock_guard<std::mutex> lock(mu_);
    records_[rec.word] = rec;
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    out << rec.word << "|" << rec.version << "|" << to_string(rec.scl_value) << "|"
        << to_string(rec.rot_value) << "|" << (rec.extremal ? 1 : 0) << "|\n";
}

long ResultCache::compact() {
    std::lock_guard<std::mutex> lock(mu_);
    if (path_.empty()) return 0;
    long before = 0;
    {
        std::ifstream in(path_);
        std::string line;
        while (std::getline(in, line)) ++before;
    }
    std::ofstream out(path_, std::ios::trunc);
    for (const auto& [w, rec] : records_)
        out << rec.word << "|" << rec.version << "|" << to_string(rec.scl_value) << "|"
            << to_string(rec.rot_value) << "|" << (rec.extremal ? 1 : 0) << "|\n";
    return before - static_cast<long>(records_.size());
}

}  // namespace modscl
