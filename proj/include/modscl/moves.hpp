#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modscl/circle.hpp"
#include "modscl/rational.hpp"

namespace modscl {

/// The move calculus reduces to three primitive semantics; the familiar named
/// moves (11 -> 2, 111 -> 2, 1121 -> 2, ab -> a+b, 1ab1 -> 2, the endgames
/// and the 1^{p-k}k ladder) are instances and carry their names as aliases in
/// логs and certificates.
enum class MoveKind {
    OneHandle,  ///< identify 11-segments on two distinct circles, amalgamating them
    EdgeFold,   ///< fold one segment onto itself: ab -> (a+b) with a+b < p, cone 2
    ZipSeg,     ///< fold a segment with endpoint sum p, then zip outward
    ZipVertex,  ///< close a vertex of label dividing p, then zip outward
};

struct Move {
    MoveKind kind;
    std::size_t circle_a = 0, pos_a = 0;
    std::size_t circle_b = 0, pos_b = 0;  // OneHandle only
    std::string alias;                    // cosmetic spec name; semantics live in kind

    std::string str() const;
};

struct MoveEffect {
    bool ok = false;
    std::string error;
    std::vector<int> cones;  ///< orbifold point orders produced by the move
    long delta_chi = 0;      ///< underlying-complex Euler characteristic change
};

/// Applies m to a normalized state. On success the state is mutated and
/// re-normalized; on failure the state is untouched and error says why.
MoveEffect apply_move(CircleState& s, const Move& m);

/// All applicable moves at all positions (validated through their full
/// cascade). Not deduplicated under circle symmetry.
std::vector<Move> legal_moves(const CircleState& s);

/// Replays a move log from an initial state. Returns the final state and the
/// index of the first failing move (or nullopt).
struct ReplayResult {
    CircleState final_state;
    std::vector<int> cones;
    long delta_chi = 0;
    std::optional<std::size_t> failed_at;
    std::string error;
};
ReplayResult replay(const CircleState& initial, const std::vector<Move>& log);

Move parse_move(const std::string& line);

}  // namespace modscl
