#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "modscl/rational.hpp"

namespace modscl {

struct CacheRecord {
    std::string word;  ///< canonical form
    std::string version;
    Rational scl_value;
    Rational rot_value;
    bool extremal = false;
};

/// Append-only line cache keyed by canonical word + solver version. Corrupt
/// lines are skipped, never fatal. Concurrent readers share the in-memory
/// map; writes are serialized through one mutex and flushed per record.
class ResultCache {
public:
    /// Empty path = in-memory only.
    explicit ResultCache(std::string path, std::string version);

    std::optional<CacheRecord> get(const std::string& canonical_word) const;
    void put(const CacheRecord& rec);

    /// Rewrites the file keeping only the newest record per word at the
    /// current version. Returns the number of lines dropped.
    long compact();

    const std::string& version() const { return version_; }
    std::size_t size() const { return records_.size(); }

private:
    void load();

    std::string path_;
    std::string version_;
    mutable std::mutex mu_;
    std::map<std::string, CacheRecord> records_;
};

}  // namespace modscl
