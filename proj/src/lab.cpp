#include "modscl/lab.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "modscl/gluer.hpp"

namespace modscl {

CyclicWord stabilization(const CyclicWord& x, long n) {
    return n < 0 ? stabilize_left(x, -n) : stabilize(x, n);
}

bool stab_extremal(const CyclicWord& x, long n, const ExperimentConfig& cfg) {
    CyclicWord w = stabilization(x, n);
    Canonical c = canonicalize(w);
    if (c.cls != ElementClass::Hyperbolic) return false;
    // scl >= 0, so rot < 0 rules extremality out with no LP
    if (rot(c.word) < 0) return false;
    std::string key = c.word.str();
    if (cfg.cache) {
        if (auto rec = cfg.cache->get(key)) return rec->extremal;
    }
    // a verified gluing certificate already proves scl = rot/2
    if (rot(c.word) > 0) {
        try {
            GluingCertificate cert = glue(c.word);
            if (verify(cert).pass) {
                if (cfg.cache)
                    cfg.cache->put(CacheRecord{key, cfg.cache->version(), rot(c.word) / 2,
                                               rot(c.word), true});
                return true;
            }
        } catch (const std::exception&) {
        }
    }
    Extremality e = is_rot_extremal(c.word, cfg.scl_opts);
    if (cfg.cache)
        cfg.cache->put(CacheRecord{key, cfg.cache->version(), e.scl_value, e.rot_value,
                                   e.extremal});
    return e.extremal;
}

std::optional<long> n_of_x(const CyclicWord& x, const ExperimentConfig& cfg) {
    const long B = cfg.bound;
    if (cfg.scan_most_negative_first) {
        for (long n = -B; n <= B; ++n)
            if (stab_extremal(x, n, cfg)) return n;
    } else {
        // closest-to-zero order: 0, -1, 1, -2, 2, ... (negative first on ties)
        for (long k = 0; k <= B; ++k) {
            if (k > 0 && stab_extremal(x, -k, cfg)) return -k;
            if (stab_extremal(x, k, cfg)) return k;
        }
    }
    return std::nullopt;
}

namespace {

CyclicWord word_from_bits(long length, unsigned long bits) {
    std::vector<Block> blocks;
    for (long i = 0; i < length; ++i)
        blocks.push_back({(bits >> (length - 1 - i)) & 1 ? Letter::L : Letter::R, 1});
    return CyclicWord(std::move(blocks));
}

std::string letters_str(long length, unsigned long bits) {
    std::string s;
    for (long i = 0; i < length; ++i)
        s += ((bits >> (length - 1 - i)) & 1) ? 'L' : 'R';
    return s;
}

}  // namespace

Histogram histogram(long length, const ExperimentConfig& cfg) {
    if (length < 1 || length > 12)
        throw SclError(SclErrorCode::Capacity,
                       "histogram length must be between 1 and 12");
    Histogram h;
    h.length = length;
    h.bound = cfg.bound;
    const unsigned long total = 1UL << length;
    h.rows.resize(total);

    std::atomic<unsigned long> next{0};
    int workers = std::max(1, cfg.workers);
    auto worker = [&] {
        for (;;) {
            unsigned long i = next.fetch_add(1);
            if (i >= total) return;
            CyclicWord w = word_from_bits(length, i);
            h.rows[i] = HistogramRow{letters_str(length, i), n_of_x(w, cfg)};
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    h.bucket_counts.assign(static_cast<std::size_t>(2 * cfg.bound + 1), 0);
    for (const auto& row : h.rows) {
        long idx;
        if (!row.n || *row.n >= cfg.bound) idx = 2 * cfg.bound;  // >= B overflow bucket
        else idx = *row.n + cfg.bound;
        ++h.bucket_counts[static_cast<std::size_t>(idx)];
    }
    return h;
}

std::string histogram_csv(const Histogram& h) {
    std::ostringstream out;
    out << "word,n_of_X\n";
    for (const auto& row : h.rows) {
        out << row.word << ",";
        if (row.n) out << *row.n;
        else out << ">=" << h.bound;
        out << "\n";
    }
    return out.str();
}

std::string histogram_svg(const Histogram& h) {
    const long B = h.bound;
    const std::size_t nb = h.bucket_counts.size();
    long max_count = 1;
    for (long c : h.bucket_counts) max_count = std::max(max_count, c);
    const double width = 800, height = 400, margin = 40;
    const double bar_w = (width - 2 * margin) / static_cast<double>(nb);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < nb; ++i) {
        double bh = (height - 2 * margin) * static_cast<double>(h.bucket_counts[i]) /
                    static_cast<double>(max_count);
        double x = margin + bar_w * static_cast<double>(i);
        double y = height - margin - bh;
        out << "<rect x=\"" << x + 1 << "\" y=\"" << y << "\" width=\"" << bar_w - 2
            << "\" height=\"" << bh << "\" fill=\"#4472a8\"/>\n";
    }
    // axis labels, mirroring the -B .. >=B bucket layout
    for (long v : {-B, -B / 2, 0L, B / 2}) {
        double x = margin + bar_w * (static_cast<double>(v + B) + 0.5);
        out << "<text x=\"" << x << "\" y=\"" << height - margin + 16
            << "\" font-size=\"12\" text-anchor=\"middle\">" << v << "</text>\n";
    }
    out << "<text x=\"" << margin + bar_w * (static_cast<double>(2 * B) + 0.5) << "\" y=\""
        << height - margin + 16 << "\" font-size=\"12\" text-anchor=\"middle\">&#8805;" << B
        << "</text>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "</svg>\n";
    return out.str();
}

StutterReport stutter_scan(const CyclicWord& x, long n_max, const ExperimentConfig& cfg) {
    if (n_max > 60) throw SclError(SclErrorCode::Capacity, "stutter scan capped at n_max = 60");
    StutterReport rep;
    for (long n = 0; n <= n_max; ++n)
        rep.profile.push_back({n, stab_extremal(x, n, cfg)});
    for (const auto& pt : rep.profile)
        if (pt.extremal) {
            rep.first_true = pt.n;
            break;
        }
    if (rep.first_true >= 0) {
        long run_start = -1;
        for (const auto& pt : rep.profile) {
            if (pt.n <= rep.first_true) continue;
            if (!pt.extremal) {
                if (run_start < 0) run_start = pt.n;
            } else if (run_start >= 0) {
                rep.stutters.push_back({run_start, pt.n - run_start});
                run_start = -1;
            }
        }
        // an unterminated trailing false-run is not a stutter: the profile
        // may simply end before the next true
    }
    return rep;
}

}  // namespace modscl
