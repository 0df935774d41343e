#include "modscl/circle_search.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modscl {

std::string to_string(NoReason r) {
    switch (r) {
        case NoReason::Count: return "count";
        case NoReason::RunLength: return "run-length";
        case NoReason::Exhausted: return "exhausted";
    }
    return "?";
}

namespace {

// Maximal cyclic runs of the given label over all circles of the state.
std::vector<int> runs_of(const CircleState& s, int label) {
    std::vector<int> out;
    for (const Circle& c : s.circles) {
        const std::size_t n = c.size();
        bool all = true;
        for (std::size_t i = 0; i < n; ++i)
            if (c.label(i) != label) all = false;
        if (all) {
            out.push_back(static_cast<int>(n));
            continue;
        }
        std::size_t start = 0;
        while (c.label(start) == label) ++start;  // start off-run
        int run = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (c.label(start + k) == label) {
                ++run;
            } else if (run > 0) {
                out.push_back(run);
                run = 0;
            }
        }
        if (run > 0) out.push_back(run);
    }
    return out;
}

// Pack every 2-run into some 1-run; a 1-run of length m can host runs
// totaling at most m. Backtracking over runs sorted decreasing.
bool packable(std::vector<int> twos, std::vector<int> ones, std::size_t idx) {
    if (idx == twos.size()) return true;
    int need = twos[idx];
    for (std::size_t j = 0; j < ones.size(); ++j) {
        if (ones[j] < need) continue;
        if (j > 0 && ones[j] == ones[j - 1]) continue;  // symmetric choice
        ones[j] -= need;
        std::vector<int> next = ones;
        std::sort(next.rbegin(), next.rend());
        if (packable(twos, next, idx + 1)) return true;
        ones[j] += need;
    }
    return false;
}

std::string state_key(const CircleState& s) { return s.str(); }

struct SearchCtx {
    long budget;
    bool exhausted = false;
    long nodes = 0;
    std::map<std::string, bool> memo;  // definite results only
};

// Canonical endgame scripts keep the acceptance cone multisets fixed.
std::optional<Move> endgame_move(const CircleState& s) {
    if (s.circles.size() != 1) return std::nullopt;
    const Circle c = s.circles[0].canonical();
    if (s.p == 3) {
        if (c.labels() == std::vector<int>{1, 2}) return Move{MoveKind::ZipSeg, 0, 0};
        if (c.labels() == std::vector<int>{1, 1, 2}) return Move{MoveKind::ZipSeg, 0, 1};
        if (c.labels() == std::vector<int>{1, 1, 1, 2}) return Move{MoveKind::ZipVertex, 0, 2};
    } else {
        // 1^{p-1-k}... final rung 1(p-1) folds up completely
        if (c.size() == 2 && c.label(0) + c.label(1) == s.p) return Move{MoveKind::ZipSeg, 0, 0};
    }
    return std::nullopt;
}

bool dfs(const CircleState& s, SearchCtx& ctx, std::vector<Move>& log) {
    if (s.done()) return true;
    if (ctx.exhausted) return false;
    if (++ctx.nodes > ctx.budget) {
        ctx.exhausted = true;
        return false;
    }
    const std::string key = state_key(s);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end() && !it->second) return false;

    if (s.p == 3 && necessary_filters(s)) {
        ctx.memo[key] = false;
        return false;
    }

    std::vector<Move> moves;
    if (auto eg = endgame_move(s)) moves.push_back(*eg);
    {
        std::vector<Move> rest = legal_moves(s);
        auto rank = [](const Move& m) {
            switch (m.kind) {
                case MoveKind::ZipSeg: return 0;
                case MoveKind::ZipVertex: return 1;
                case MoveKind::EdgeFold: return 2;
                case MoveKind::OneHandle: return 3;
            }
            return 4;
        };
        std::stable_sort(rest.begin(), rest.end(),
                         [&](const Move& a, const Move& b) { return rank(a) < rank(b); });
        for (Move& m : rest) moves.push_back(std::move(m));
    }

    for (const Move& m : moves) {
        CircleState next = s;
        MoveEffect e = apply_move(next, m);
        if (!e.ok) continue;
        log.push_back(m);
        if (dfs(next, ctx, log)) return true;
        log.pop_back();
        if (ctx.exhausted) return false;
    }
    if (ctx.exhausted) return false;  // children truncated; NO is not definite
    ctx.memo[key] = false;
    return false;
}

}  // namespace

std::optional<NoReason> necessary_filters(const CircleState& s) {
    if (s.p != 3) return std::nullopt;  // only proven for p = 3
    long ones = 0, twos = 0;
    for (const Circle& c : s.circles) {
        ones += c.count_label(1);
        twos += c.count_label(2);
    }
    if (twos > ones) return NoReason::Count;
    if (twos == 0) return std::nullopt;
    std::vector<int> tw = runs_of(s, 2), on = runs_of(s, 1);
    std::sort(tw.rbegin(), tw.rend());
    std::sort(on.rbegin(), on.rend());
    if (!packable(tw, on, 0)) return NoReason::RunLength;
    return std::nullopt;
}

GlueDecision can_glue(const CircleState& s0, long node_budget) {
    CircleState s = s0;
    s.normalize();
    GlueDecision d;
    if (auto f = necessary_filters(s)) {
        d.yes = false;
        d.reason = *f;
        d.definite = true;
        return d;
    }
    SearchCtx ctx{node_budget};
    std::vector<Move> log;
    if (dfs(s, ctx, log)) {
        d.yes = true;
        d.certificate = log;
        ReplayResult r = replay(s, log);
        d.cones = r.cones;
        std::sort(d.cones.begin(), d.cones.end());
        d.nodes = ctx.nodes;
        return d;
    }
    d.yes = false;
    d.nodes = ctx.nodes;
    if (ctx.exhausted) {
        d.reason = NoReason::Exhausted;
        d.definite = false;
    } else {
        d.reason = NoReason::Exhausted;  // full search space covered
        d.definite = true;
    }
    return d;
}

std::optional<std::vector<Move>> sufficient_family(const CircleState& s0) {
    if (s0.p != 3 || s0.circles.size() != 1) return std::nullopt;
    const Circle c = s0.circles[0].canonical();
    // pattern 2 1^{c_1} 2 1^{c_2} ..., every run >= 7, or strictly alternating
    const std::size_t n = c.size();
    bool alternating = n >= 2 && n % 2 == 0;
    for (std::size_t i = 0; alternating && i < n; ++i)
        if (c.label(i) == c.label(i + 1)) alternating = false;
    if (!alternating) {
        std::size_t start = n;
        for (std::size_t i = 0; i < n; ++i)
            if (c.label(i) == 2) { start = i; break; }
        if (start == n) return std::nullopt;  // no 2 at all
        std::vector<int> runs;
        int run = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            int v = c.label(start + k);
            if (v == 2) {
                runs.push_back(run);
                run = 0;
            } else if (v == 1) {
                ++run;
            } else {
                return std::nullopt;
            }
        }
        for (int r : runs)
            if (r < 7) return std::nullopt;
    }

    // The replacement of each run by 121...21 and the final alternating
    // glue-up are all ordinary moves, so a certificate search with a generous
    // budget reconstructs the family script; family circles reduce fast.
    GlueDecision d = can_glue(s0, 8'000'000);
    if (!d.yes) return std::nullopt;
    return d.certificate;
}

bool oracle_can_glue(const CircleState& s0) {
    CircleState s = s0;
    s.normalize();
    if (s.done()) return true;
    for (const Move& m : legal_moves(s)) {
        CircleState next = s;
        if (!apply_move(next, m).ok) continue;
        if (oracle_can_glue(next)) return true;
    }
    return false;
}

namespace {

bool assign_b(const std::vector<long>& b, std::vector<long>& slack, std::size_t idx,
              std::vector<std::vector<long>>& parts) {
    if (idx == b.size()) return true;
    long item = b[idx];
    for (std::size_t i = 0; i < slack.size(); ++i) {
        if (slack[i] < item + 10) continue;
        if (i > 0 && slack[i] == slack[i - 1]) continue;  // symmetric bins
        slack[i] -= item + 10;
        parts[i].push_back(item);
        if (assign_b(b, slack, idx + 1, parts)) return true;
        parts[i].pop_back();
        slack[i] += item + 10;
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::vector<long>>> partition_extremality(
    const std::vector<long>& a, const std::vector<long>& b) {
    if (!b.empty() && a.empty()) return std::nullopt;
    std::vector<long> slack;
    for (long ai : a) slack.push_back(ai - 10);  // a_i >= 10 + sum (b+10); empty bins always fine
    std::vector<long> items = b;
    std::sort(items.rbegin(), items.rend());  // first-fit-decreasing order
    std::vector<std::vector<long>> parts(a.size());
    if (assign_b(items, slack, 0, parts)) return parts;
    return std::nullopt;
}

}  // namespace modscl
