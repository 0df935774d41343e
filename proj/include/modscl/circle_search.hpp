#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modscl/circle.hpp"
#include "modscl/moves.hpp"

namespace modscl {

enum class NoReason { Count, RunLength, Exhausted };

std::string to_string(NoReason r);

struct GlueDecision {
    bool yes = false;
    NoReason reason = NoReason::Exhausted;
    bool definite = true;            ///< false only for budget-capped NO
    std::vector<Move> certificate;   ///< YES: replayable move log
    std::vector<int> cones;          ///< cone orders of the certificate replay
    long nodes = 0;
};

/// Decides whether the state can be glued up completely. Memoized DFS with
/// the necessary filters as pruning; a budget-capped run reports an
/// inconclusive NO(Exhausted) with definite = false, never a definite NO.
GlueDecision can_glue(const CircleState& s, long node_budget = 4'000'000);

/// Provable NO without search, p = 3 only: 2-count exceeds 1-count, or the
/// 2-runs cannot be packed into the 1-runs (each maximal run of k 2s needs k
/// consecutive 1s, disjointly). Sound: never fires on a gluable state
/// (validated exhaustively against the oracle at small sizes).
std::optional<NoReason> necessary_filters(const CircleState& s);

/// Constructive certificate for the 2 1^{c_1} 2 1^{c_2} ... family with all
/// c_i >= 7 (p = 3), and for alternating circles. Absent on pattern mismatch.
std::optional<std::vector<Move>> sufficient_family(const CircleState& s);

/// Independent unpruned depth-first oracle: no memo, no filters, every legal
/// move tried. Exponential; for small states only.
bool oracle_can_glue(const CircleState& s);

/// Partition the b_j into sets B_i (possibly empty) with
/// a_i >= 10 + sum_{b in B_i} (b + 10), by first-fit-decreasing then
/// backtracking. Returns the partition aligned with a, or absent if none.
std::optional<std::vector<std::vector<long>>> partition_extremality(
    const std::vector<long>& a, const std::vector<long>& b);

}  // namespace modscl
