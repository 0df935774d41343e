#include "modscl/placement.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace modscl {

long stability_bound(const CyclicWord& w) {
    Canonical c = canonicalize(w);
    if (c.cls != ElementClass::Hyperbolic)
        throw std::invalid_argument("stability_bound wants a hyperbolic word");
    long a1 = c.word.blocks().front().exponent;
    long nprime = c.word.total_exponent() - a1;
    long n = static_cast<long>(c.word.pair_count());
    return 3 * nprime + 11 * n + 3;
}

namespace {

struct LayoutPlan {
    bool drop_ones = false;   ///< drop exponent-1 L-blocks other than the first
    bool fold_finale = false; ///< last beta ends adjacent to alpha_1's right end
};

// Attempts one layout mode; returns placement on success.
std::optional<LiftPlacement> try_layout(const CyclicWord& w, int p, long gap, LayoutPlan plan) {
    const auto& blocks = w.blocks();
    const std::size_t nblocks = blocks.size();
    const long a1 = blocks[0].exponent;
    const long anchor_entires = gap - 1;
    const long between_entires = gap - 2;

    LiftPlacement pl;
    pl.word = w;
    pl.p = p;
    pl.gap = gap;
    pl.fold_finale = plan.fold_finale;

    // Which L-blocks keep an arc. Block 1 is the first L-block and is
    // always kept.
    std::vector<bool> dropped(nblocks, false);
    if (plan.drop_ones) {
        for (std::size_t i = 3; i < nblocks; i += 2)
            if (blocks[i].exponent == 1) {
                dropped[i] = true;
                pl.dropped_blocks.push_back(i);
            }
    }

    // Arc table indexed by block; dropped blocks get no arc.
    std::vector<int> arc_of(nblocks, -1);
    auto add_arc = [&](std::size_t blk) {
        arc_of[blk] = static_cast<int>(pl.arcs.size());
        pl.arcs.push_back(Arc{blocks[blk].letter, blocks[blk].exponent, blk, {}, {}});
    };
    add_arc(0);  // alpha_1
    for (std::size_t i = 1; i < nblocks; ++i)
        if (!dropped[i]) add_arc(i);

    // Degeneracy is forced at dropped junctions: the L-block between
    // R-blocks i and i+1 vanishes, so the facing alpha endpoints sit at
    // vertices and are identified directly.
    auto lblock_after = [&](std::size_t rblk) { return rblk + 1; };               // L-block following R-block
    auto lblock_before = [&](std::size_t rblk) { return (rblk + nblocks - 1) % nblocks; };

    const bool a1_left_degen = dropped[lblock_before(0)];

    // ---- beta chain under alpha_1 ----
    // Layout order: B_2, B_3, ..., B_n, then B_1 nearest alpha_1's right end.
    std::vector<std::size_t> beta_layout;
    for (std::size_t i = 3; i < nblocks; i += 2)
        if (!dropped[i]) beta_layout.push_back(i);
    beta_layout.push_back(1);

    long cursor;  // next free segment under alpha_1
    if (a1_left_degen) {
        pl.arcs[0].left = {0, true};  // vertex 0
        cursor = anchor_entires;      // entires occupy segs 0..anchor-1
    } else {
        pl.arcs[0].left = {0, false};
        cursor = 1 + anchor_entires;  // partial in seg 0, then the entires
    }

    long b1_right_seg = -1;
    for (std::size_t k = 0; k < beta_layout.size(); ++k) {
        std::size_t blk = beta_layout[k];
        Arc& arc = pl.arcs[arc_of[blk]];
        arc.left = {cursor, false};
        long right = cursor + blocks[blk].exponent;
        arc.right = {right, false};
        if (k + 1 == beta_layout.size()) b1_right_seg = right;
        cursor = right + 1 + between_entires;
    }

    // ---- alpha_1 right end ----
    long a1_right = -1;
    if (plan.fold_finale) {
        // need B1.right and A1.right in adjacent segments, with at most one
        // escape each past the path end
        for (long esc_b : {0L, 1L}) {
            long bseg = b1_right_seg + esc_b;
            for (long r : {a1, a1 + 1}) {
                if (bseg + 1 == r) {
                    pl.arcs[arc_of[1] == 0 ? 0 : 0].left = pl.arcs[0].left;  // no-op, clarity
                    a1_right = r;
                    // commit the escape on B1
                    Arc& b1 = pl.arcs[arc_of[1]];
                    b1.right = {bseg, false};
                    break;
                }
            }
            if (a1_right >= 0) break;
        }
        if (a1_right < 0) return std::nullopt;
        pl.big_run = 0;
    } else {
        long run = a1 - 1 - b1_right_seg;  // entires strictly between B1.right and seg a1
        if (run < 1) return std::nullopt;
        a1_right = a1;
        pl.big_run = run;
    }
    pl.arcs[0].right = {a1_right, false};

    // ---- other alpha arcs, un-nested to the right ----
    // A lens with both endpoints interior in adjacent segments (exponent 1)
    // would merge the junction classes of its two sides into one three-wedge
    // vertex; the paper's +-1 endpoint freedom lets such arcs span one
    // segment more, so every lens keeps an entire segment inside.
    long base = a1_right + 2;
    for (std::size_t i = 2; i < nblocks; i += 2) {
        Arc& arc = pl.arcs[arc_of[i]];
        bool left_degen = dropped[lblock_before(i)];
        bool right_degen = dropped[lblock_after(i) % nblocks];
        long t = base;
        long span = blocks[i].exponent;
        if (!left_degen && !right_degen && span == 1) span = 2;
        arc.left = {t, left_degen};
        arc.right = right_degen ? ArcEndpoint{t + span + 1, true} : ArcEndpoint{t + span, false};
        base = arc.right.seg + 3;
    }

    // ---- junction pairings from the word ----
    auto rarc = [&](std::size_t rblk) { return static_cast<std::size_t>(arc_of[rblk]); };
    const std::size_t npairs = nblocks / 2;
    for (std::size_t i = 0; i < npairs; ++i) {
        std::size_t rblk = 2 * i, lblk = 2 * i + 1;
        std::size_t next_r = (2 * i + 2) % nblocks;
        if (!dropped[lblk]) {
            // (A_i.right <-> B_i.right) and (B_i.left <-> A_{i+1}.left)
            PairingKind k1 = PairingKind::Edge;
            if (plan.fold_finale && lblk == 1) k1 = PairingKind::Fold;
            pl.pairings.push_back({{rarc(rblk), false}, {rarc(lblk), false}, k1});
            pl.pairings.push_back({{rarc(lblk), true}, {rarc(next_r), true}, PairingKind::Edge});
        } else {
            pl.pairings.push_back({{rarc(rblk), false}, {rarc(next_r), true}, PairingKind::Degen});
        }
    }

    // Degenerate endpoints for dropped junctions.
    for (const Pairing& pr : pl.pairings) {
        if (pr.kind != PairingKind::Degen) continue;
        Arc& A = pl.arcs[pr.a.arc];
        Arc& B = pl.arcs[pr.b.arc];
        ArcEndpoint& ea = pr.a.left ? A.left : A.right;
        ArcEndpoint& eb = pr.b.left ? B.left : B.right;
        if (!ea.at_vertex) ea = {ea.seg + (pr.a.left ? 0 : 1), true};
        if (!eb.at_vertex) eb = {eb.seg + (pr.b.left ? 0 : 1), true};
    }

    return pl;
}

}  // namespace

LiftPlacement place_lifts(const CyclicWord& w0, int p, long gap) {
    Canonical c = canonicalize(w0);
    if (c.cls != ElementClass::Hyperbolic)
        throw std::invalid_argument("place_lifts wants a hyperbolic word (got " +
                                    to_string(c.cls) + ")");
    if (gap < 3) throw std::invalid_argument("lifting gap must be >= 3");
    const CyclicWord& w = c.word;
    for (LayoutPlan plan : {LayoutPlan{false, false}, LayoutPlan{false, true},
                            LayoutPlan{true, false}, LayoutPlan{true, true}}) {
        if (auto pl = try_layout(w, p, gap, plan)) return *pl;
    }
    throw InsufficientRoom("no lift placement fits: leading exponent " +
                           std::to_string(w.blocks()[0].exponent) + " is too small for " +
                           w.str());
}

namespace {

struct Item {
    enum Kind { EntireSeg, Partial, Degen } kind;
    long seg = 0;            // entires only (debug)
    EndpointRef ref;         // partial/degen
};

struct Stretch {
    std::vector<Item> items;
};

struct DSU {
    std::vector<int> up;
    explicit DSU(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        up[a] = b;
        return true;
    }
};

}  // namespace

PlacementAnalysis boundary_circles(const LiftPlacement& pl) {
    const auto& arcs = pl.arcs;
    // Build the material stretch lists for each piece: T (under alpha_1,
    // above the betas) and S_i (under each other alpha).
    std::vector<Stretch> stretches;

    // material of an arc endpoint as seen from the piece between the arc's
    // chord and the boundary of the horoball region
    auto endpoint_item = [&](std::size_t arc_idx, bool left) -> Item {
        const Arc& a = arcs[arc_idx];
        const ArcEndpoint& e = left ? a.left : a.right;
        if (e.at_vertex) return Item{Item::Degen, e.seg, {arc_idx, left}};
        return Item{Item::Partial, e.seg, {arc_idx, left}};
    };

    // beta arcs in layout order (sorted by left segment)
    std::vector<std::size_t> betas;
    for (std::size_t i = 1; i < arcs.size(); ++i)
        if (arcs[i].letter == Letter::L) betas.push_back(i);
    std::sort(betas.begin(), betas.end(),
              [&](std::size_t x, std::size_t y) { return arcs[x].left.seg < arcs[y].left.seg; });

    auto entires_between = [&](long from_seg, long to_seg, Stretch& st) {
        for (long s = from_seg; s <= to_seg; ++s) st.items.push_back(Item{Item::EntireSeg, s, {}});
    };

    // T's stretches
    {
        // anchor: alpha_1 left end -> first beta's left end
        Stretch st;
        st.items.push_back(endpoint_item(0, true));
        long first_entire = arcs[0].left.at_vertex ? arcs[0].left.seg : arcs[0].left.seg + 1;
        long last_entire = arcs[betas.front()].left.seg - 1;
        entires_between(first_entire, last_entire, st);
        st.items.push_back(endpoint_item(betas.front(), true));
        stretches.push_back(std::move(st));
    }
    for (std::size_t k = 0; k + 1 < betas.size(); ++k) {
        Stretch st;
        st.items.push_back(endpoint_item(betas[k], false));
        entires_between(arcs[betas[k]].right.seg + 1, arcs[betas[k + 1]].left.seg - 1, st);
        st.items.push_back(endpoint_item(betas[k + 1], true));
        stretches.push_back(std::move(st));
    }
    {
        // final stretch: last beta's right end -> alpha_1's right end
        Stretch st;
        st.items.push_back(endpoint_item(betas.back(), false));
        entires_between(arcs[betas.back()].right.seg + 1, arcs[0].right.seg - 1, st);
        st.items.push_back(endpoint_item(0, false));
        stretches.push_back(std::move(st));
    }
    // S_i stretches
    for (std::size_t i = 1; i < arcs.size(); ++i) {
        if (arcs[i].letter != Letter::R) continue;
        Stretch st;
        st.items.push_back(endpoint_item(i, true));
        long from = arcs[i].left.at_vertex ? arcs[i].left.seg : arcs[i].left.seg + 1;
        long to = arcs[i].right.at_vertex ? arcs[i].right.seg - 1 : arcs[i].right.seg - 1;
        entires_between(from, to, st);
        st.items.push_back(endpoint_item(i, false));
        stretches.push_back(std::move(st));
    }

    // Junctions between consecutive items; map endpoint -> inner junction.
    struct PortRef { int junction; bool is_entire; std::size_t stretch, item; };
    long njunction = 0;
    std::map<std::pair<std::size_t, bool>, int> inner_junction;  // (arc,left) -> junction id
    std::vector<std::vector<int>> stretch_junctions(stretches.size());
    for (std::size_t s = 0; s < stretches.size(); ++s) {
        const auto& items = stretches[s].items;
        for (std::size_t k = 0; k + 1 < items.size(); ++k) {
            int j = static_cast<int>(njunction++);
            stretch_junctions[s].push_back(j);
            for (std::size_t t : {k, k + 1}) {
                const Item& it = items[t];
                if (it.kind != Item::EntireSeg) {
                    bool is_end = (t == 0) || (t + 1 == items.size());
                    if (is_end) {
                        auto key = std::make_pair(it.ref.arc, it.ref.left);
                        // end items have one inner junction; interior partials
                        // cannot occur by construction
                        inner_junction[key] = j;
                    }
                }
            }
        }
    }

    DSU dsu(static_cast<std::size_t>(njunction));
    long edge_pairings = 0, fold_pairings = 0;
    for (const Pairing& pr : pl.pairings) {
        auto ka = std::make_pair(pr.a.arc, pr.a.left);
        auto kb = std::make_pair(pr.b.arc, pr.b.left);
        auto ia = inner_junction.find(ka), ib = inner_junction.find(kb);
        if (ia == inner_junction.end() || ib == inner_junction.end())
            throw std::logic_error("pairing references an endpoint with no junction");
        dsu.unite(ia->second, ib->second);
        if (pr.kind == PairingKind::Edge) ++edge_pairings;
        if (pr.kind == PairingKind::Fold) ++fold_pairings;
    }

    // Component wedge counts and entire-segment ports.
    std::map<int, int> wedges;
    std::map<int, std::vector<std::pair<std::size_t, std::size_t>>> ports;  // comp -> (stretch, entire item idx)
    for (int j = 0; j < njunction; ++j) ++wedges[dsu.find(j)];
    // port = (entire item, side): register via flanking junctions
    struct EntireRec { std::size_t stretch, idx; int left_comp, right_comp; };
    std::vector<EntireRec> entires;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> entire_id;
    for (std::size_t s = 0; s < stretches.size(); ++s) {
        const auto& items = stretches[s].items;
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (items[k].kind != Item::EntireSeg) continue;
            int jl = stretch_junctions[s][k - 1];
            int jr = stretch_junctions[s][k];
            EntireRec rec{s, k, dsu.find(jl), dsu.find(jr)};
            entire_id[{s, k}] = entires.size();
            entires.push_back(rec);
            ports[rec.left_comp].push_back({s, k});
            ports[rec.right_comp].push_back({s, k});
        }
    }

    PlacementAnalysis out;
    // interior components: cones
    for (const auto& [comp, w] : wedges) {
        if (ports.count(comp)) continue;
        if (w == pl.p) continue;  // closes up smooth
        if (pl.p % w != 0)
            throw std::logic_error("interior vertex class closes with invalid angle");
        out.placement_cones.push_back(pl.p / w);
    }
    for (const auto& [comp, plist] : ports) {
        if (plist.size() != 2)
            throw std::logic_error("boundary vertex class with port count != 2");
    }

    // walk circles
    std::vector<bool> seen(entires.size(), false);
    for (std::size_t start = 0; start < entires.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> labels;
        std::size_t cur = start;
        int came_from_comp = entires[start].left_comp;
        for (;;) {
            seen[cur] = true;
            const EntireRec& rec = entires[cur];
            int next_comp = (rec.left_comp == came_from_comp) ? rec.right_comp : rec.left_comp;
            labels.push_back(wedges[next_comp]);
            const auto& plist = ports[next_comp];
            std::pair<std::size_t, std::size_t> self{rec.stretch, rec.idx};
            std::pair<std::size_t, std::size_t> other =
                (plist[0] == self) ? plist[1] : plist[0];
            // a component may connect an entire to itself (both flanks)
            if (plist[0] == plist[1]) other = self;
            std::size_t nxt = entire_id[other];
            came_from_comp = next_comp;
            cur = nxt;
            if (cur == start) break;
        }
        out.circles.push_back(Circle(std::move(labels)).canonical());
    }
    std::sort(out.circles.begin(), out.circles.end());

    // Euler characteristic of the assembled complex.
    long F = 0;
    for (const Arc& a : arcs)
        if (a.letter == Letter::R) ++F;  // T plus one piece per extra alpha
    long comp_count = static_cast<long>(wedges.size());
    long V = comp_count + edge_pairings + fold_pairings;
    long E = static_cast<long>(arcs.size()) + static_cast<long>(entires.size()) + edge_pairings +
             fold_pairings;
    out.chi_assembled = V - E + F;
    out.pieces = F;
    out.partial_pairings = edge_pairings + fold_pairings;
    return out;
}

}  // namespace modscl
