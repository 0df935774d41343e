#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modscl/circle.hpp"
#include "modscl/rational.hpp"
#include "modscl/word.hpp"

namespace modscl {

struct InsufficientRoom : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An arc endpoint on the boundary of the horoball region: either interior
/// to a segment (partial segment at that end) or degenerate at a vertex.
struct ArcEndpoint {
    long seg = 0;       ///< segment index, or vertex index when degenerate
    bool at_vertex = false;

    std::string str() const {
        return (at_vertex ? "V" : "I") + std::to_string(seg);
    }
    bool operator==(const ArcEndpoint&) const = default;
};

/// One lift: the interval of boundary segments an alpha (R-block) or beta
/// (L-block) arc spans.
struct Arc {
    Letter letter;
    long exponent = 0;
    std::size_t block_index = 0;  ///< index into the canonical word's blocks
    ArcEndpoint left, right;
};

struct EndpointRef {
    std::size_t arc = 0;
    bool left = false;
    bool operator==(const EndpointRef&) const = default;
};

enum class PairingKind {
    Edge,   ///< two interior partial segments glued
    Degen,  ///< two degenerate vertex endpoints identified
    Fold,   ///< adjacent partials of the same stretch folded (order-3 cone)
};

struct Pairing {
    EndpointRef a, b;
    PairingKind kind = PairingKind::Edge;
};

/// Combinatorial lift placement: arcs on an integer-indexed segment line plus
/// the junction gluings dictated by the word. Layout modes, in order of
/// preference: roomy (all blocks get arcs, big 1-run of entire segments),
/// fold finale (last beta ends adjacent to the big arc's right end), and the
/// same two after dropping exponent-1 L-blocks other than the first.
struct LiftPlacement {
    CyclicWord word;  ///< canonical hyperbolic form, largest R-block first
    int p = 3;
    long gap = 5;
    std::vector<Arc> arcs;         ///< arcs[0] is the big arc alpha_1
    std::vector<Pairing> pairings;
    std::vector<std::size_t> dropped_blocks;  ///< L-blocks with no arc
    long big_run = 0;              ///< entire segments in the long 1-run stretch
    bool fold_finale = false;
};

LiftPlacement place_lifts(const CyclicWord& w, int p = 3, long gap = 5);

/// 3N' + 11n + 3 where N' is the exponent mass outside the leading R-block
/// and n the block-pair count. Errors on non-hyperbolic words.
long stability_bound(const CyclicWord& w);

/// Everything boundary extraction learns: the circles, the cone points made
/// during gluing of partial segments, and the Euler characteristic of the
/// assembled (pre-move) complex.
struct PlacementAnalysis {
    std::vector<Circle> circles;
    std::vector<int> placement_cones;
    long chi_assembled = 0;  ///< V - E + F of the glued piece complex
    long pieces = 0;
    long partial_pairings = 0;
};

PlacementAnalysis boundary_circles(const LiftPlacement& pl);

}  // namespace modscl
