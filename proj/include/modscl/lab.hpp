#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modscl/cache.hpp"
#include "modscl/scl.hpp"
#include "modscl/word.hpp"

namespace modscl {

struct ExperimentConfig {
    long bound = 10;       ///< n(X) scan bound B; buckets mirror the >=10 overflow
    int workers = 1;
    bool scan_most_negative_first = true;  ///< documented resolution of the n(X) ambiguity
    SclOptions scl_opts;
    ResultCache* cache = nullptr;  ///< optional
};

/// The stabilization s(n, X): L^{-n} X for n < 0, R^n X for n >= 0.
CyclicWord stabilization(const CyclicWord& x, long n);

/// Extremality of a stabilization, cached when a cache is attached. Words
/// that are not hyperbolic never count as extremal.
bool stab_extremal(const CyclicWord& x, long n, const ExperimentConfig& cfg);

/// First n in [-B, B] (scan order per config) whose stabilization is
/// hyperbolic with rot extremal; absent when none qualifies.
std::optional<long> n_of_x(const CyclicWord& x, const ExperimentConfig& cfg);

struct HistogramRow {
    std::string word;           ///< the literal letter string, not its class
    std::optional<long> n;      ///< absent = overflow bucket
};

struct Histogram {
    long length = 0;
    long bound = 10;
    std::vector<HistogramRow> rows;    ///< one per letter string, enumeration order
    std::vector<long> bucket_counts;   ///< [-B .. B-1] and one >=B overflow bucket
};

/// n(X) over all 2^k letter strings of length k (exponents 1), in binary
/// enumeration order (R=0, L=1). Deterministic; parallel over words.
Histogram histogram(long length, const ExperimentConfig& cfg);

std::string histogram_csv(const Histogram& h);
std::string histogram_svg(const Histogram& h);

struct StutterPoint {
    long n;
    bool extremal;
};
struct StutterReport {
    std::vector<StutterPoint> profile;  ///< n = 0 .. n_max
    long first_true = -1;               ///< -1 when never extremal in range
    std::vector<std::pair<long, long>> stutters;  ///< maximal false runs after first_true: (start, length)
};

/// Extremality profile of R^n X and its stuttering intervals.
StutterReport stutter_scan(const CyclicWord& x, long n_max, const ExperimentConfig& cfg);

}  // namespace modscl
