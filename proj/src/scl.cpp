#include "modscl/scl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "modscl/gluer.hpp"
#include "modscl/simplex.hpp"
#include "modscl/xyform.hpp"

namespace modscl {

namespace {

// Positions of the chain's xy-form. Word i contributes L_i x-positions and
// L_i y-positions; x_{i,j} immediately precedes y_{i,j} in the cyclic word.
struct Positions {
    struct WordRec {
        Rational coeff;
        std::vector<int> yexp;  // exponent of y_{i,j}, in {1,2}
        long base = 0;          // global index of position (i,0)
    };
    std::vector<WordRec> words;
    long m = 0;  // total positions per side
    std::vector<long> word_of, off_of;

    long id(std::size_t w, long j) const {
        long L = static_cast<long>(words[w].yexp.size());
        return words[w].base + ((j % L) + L) % L;
    }
    // x_{w,j}'s predecessor y is y_{w,j-1}; successor y is y_{w,j}
    long x_pred_y(long xp) const { return id(word_of[xp], off_of[xp] - 1); }
    long x_succ_y(long xp) const { return xp; }
    // y_{w,j}'s "same x" is x_{w,j}; "next x" is x_{w,j+1}
    long y_same_x(long yp) const { return yp; }
    long y_next_x(long yp) const { return id(word_of[yp], off_of[yp] + 1); }
    int yexp_of(long yp) const { return words[word_of[yp]].yexp[off_of[yp]]; }
};

Positions build_positions(const std::vector<std::pair<XYWord, Rational>>& terms) {
    Positions P;
    for (const auto& [xy, coeff] : terms) {
        Positions::WordRec rec;
        rec.coeff = coeff;
        rec.yexp = xy.y_exps;
        rec.base = P.m;
        P.m += static_cast<long>(rec.yexp.size());
        P.words.push_back(std::move(rec));
    }
    P.word_of.resize(P.m);
    P.off_of.resize(P.m);
    for (std::size_t w = 0; w < P.words.size(); ++w)
        for (long j = 0; j < static_cast<long>(P.words[w].yexp.size()); ++j) {
            P.word_of[P.words[w].base + j] = static_cast<long>(w);
            P.off_of[P.words[w].base + j] = j;
        }
    return P;
}

// A surface piece: a cyclic sequence of same-side positions. Canonical
// rotation starts at the smallest (position, successor...) so duplicates of
// the same cyclic sequence collapse.
struct Piece {
    bool x_side;
    std::vector<long> seq;
    Rational weight;

    std::string key() const {
        std::ostringstream out;
        out << (x_side ? "x[" : "y[");
        for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
        out << "]";
        return out.str();
    }
};

std::vector<long> canonical_rotation(std::vector<long> seq) {
    if (seq.size() <= 1) return seq;
    std::size_t n = seq.size(), best = 0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long a = seq[(i + k) % n], b = seq[(best + k) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    std::vector<long> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = seq[(best + k) % n];
    return out;
}

Rational x_weight(std::size_t len) { return len % 2 == 0 ? Rational(1) : Rational(1, 2); }

Rational y_weight(const Positions& P, const std::vector<long>& seq) {
    int res = 0;
    for (long q : seq) res = (res + P.yexp_of(q)) % 3;
    return res == 0 ? Rational(1) : Rational(1, 3);
}

Piece make_piece(const Positions& P, bool x_side, std::vector<long> seq) {
    Piece pc;
    pc.x_side = x_side;
    pc.seq = canonical_rotation(std::move(seq));
    pc.weight = x_side ? x_weight(pc.seq.size()) : y_weight(P, pc.seq);
    return pc;
}

using EdgeKey = std::pair<long, long>;

// Matching key of an x-transition (P -> P'); y-transitions are mapped to the
// same key space through the junction correspondence.
EdgeKey x_edge_key(long P, long Pp) { return {P, Pp}; }
EdgeKey y_edge_key(const Positions& P, long Qp, long Q) {
    return {P.y_same_x(Q), P.y_next_x(Qp)};
}

struct Master {
    const Positions& P;
    RevisedSimplex lp;
    std::map<EdgeKey, std::size_t> keyrow;
    std::vector<Piece> pieces;
    std::set<std::string> piece_keys;

    explicit Master(const Positions& pos) : P(pos) {
        for (long p = 0; p < P.m; ++p) lp.add_row(P.words[P.word_of[p]].coeff);  // x coverage
        for (long p = 0; p < P.m; ++p) lp.add_row(P.words[P.word_of[p]].coeff);  // y coverage
    }

    std::size_t row_of(const EdgeKey& k) {
        auto it = keyrow.find(k);
        if (it != keyrow.end()) return it->second;
        std::size_t r = lp.add_row(Rational(0));
        keyrow.emplace(k, r);
        return r;
    }

    bool add(Piece pc) {
        std::string kstr = pc.key();
        if (piece_keys.count(kstr)) return false;
        piece_keys.insert(kstr);
        std::map<std::size_t, Rational> entries;
        const auto& s = pc.seq;
        for (std::size_t i = 0; i < s.size(); ++i) {
            long a = s[i], b = s[(i + 1) % s.size()];
            entries[static_cast<std::size_t>((pc.x_side ? 0 : P.m) + a)] += 1;
            EdgeKey k = pc.x_side ? x_edge_key(a, b) : y_edge_key(P, a, b);
            entries[row_of(k)] += pc.x_side ? Rational(1) : Rational(-1);
        }
        std::vector<std::pair<std::size_t, Rational>> sparse;
        for (auto& [row, v] : entries)
            if (v != 0) sparse.push_back({row, v});
        lp.add_column(sparse, pc.weight);
        pieces.push_back(std::move(pc));
        return true;
    }

    void solve() {
        if (!lp.reoptimize())
            throw SclError(SclErrorCode::Internal, "scl master LP infeasible");
    }
};

// Shortest-cycle pricing with parity (x side) or residue (y side) layers.
// Finds pieces of positive reduced cost; walks with repeats are split into
// simple cycles, which never lowers the total reduced cost.
struct Pricer {
    const Positions& P;
    const std::vector<Rational>& pi_x;  // coverage duals, x rows
    const std::vector<Rational>& pi_y;
    const std::map<EdgeKey, Rational>& mu;

    Rational mu_of(const EdgeKey& k) const {
        auto it = mu.find(k);
        return it == mu.end() ? Rational(0) : it->second;
    }

    // reduced cost of a complete piece
    Rational reduced_cost(bool x_side, const std::vector<long>& seq) const {
        Rational rc = x_side ? x_weight(seq.size()) : y_weight(P, seq);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            long a = seq[i], b = seq[(i + 1) % seq.size()];
            rc -= x_side ? pi_x[a] : pi_y[a];
            EdgeKey k = x_side ? x_edge_key(a, b) : y_edge_key(P, a, b);
            rc -= x_side ? mu_of(k) : -mu_of(k);
        }
        return rc;
    }

    // Best improving cycles: DP over walk length with a min-node restriction.
    // Parity (x side) rides on the length; residue (y side) is a state layer,
    // since the piece weight depends on it. Pieces may revisit a position
    // with a different layer, so the length cap is 2(m-s) or 3(m-s): cycles
    // simple in the layered graph suffice for optimality (splitting a walk at
    // a repeated layered node splits off a weight-1 piece, which never lowers
    // the total).
    std::vector<std::vector<long>> price(bool x_side, long len_cap) const {
        std::vector<std::vector<long>> found;
        const long m = P.m;
        const int R = x_side ? 1 : 3;
        const long layers = x_side ? 2 : 3;
        auto visit_cost = [&](long node) { return x_side ? pi_x[node] : pi_y[node]; };
        auto edge_cost = [&](long a, long b) {
            EdgeKey k = x_side ? x_edge_key(a, b) : y_edge_key(P, a, b);
            return x_side ? mu_of(k) : -mu_of(k);
        };
        for (long s = 0; s < m; ++s) {
            long cap = std::min(len_cap, layers * (m - s));
            if (cap < 1) continue;
            auto idx = [&](long node, int r) { return node * R + r; };
            std::vector<std::vector<Rational>> dist(cap + 1,
                                                    std::vector<Rational>(m * R, Rational(0)));
            std::vector<std::vector<bool>> reach(cap + 1, std::vector<bool>(m * R, false));
            std::vector<std::vector<long>> par(cap + 1, std::vector<long>(m * R, -1));
            int r0 = x_side ? 0 : P.yexp_of(s) % 3;
            dist[1][idx(s, r0)] = -visit_cost(s);
            reach[1][idx(s, r0)] = true;
            Rational best_rc(0);
            long best_len = -1, best_state = -1;
            for (long len = 1; len <= cap; ++len) {
                for (long v = s; v < m; ++v) {
                    for (int r = 0; r < R; ++r) {
                        long st = idx(v, r);
                        if (!reach[len][st]) continue;
                        Rational w = x_side ? x_weight(static_cast<std::size_t>(len))
                                            : (r == 0 ? Rational(1) : Rational(1, 3));
                        Rational rc = dist[len][st] - edge_cost(v, s) + w;
                        if (rc > best_rc) {
                            best_rc = rc;
                            best_len = len;
                            best_state = st;
                        }
                        if (len == cap) continue;
                        for (long nxt = s; nxt < m; ++nxt) {
                            int nr = x_side ? 0 : (r + P.yexp_of(nxt)) % 3;
                            Rational cand = dist[len][st] - edge_cost(v, nxt) - visit_cost(nxt);
                            long nst = idx(nxt, nr);
                            if (!reach[len + 1][nst] || cand > dist[len + 1][nst]) {
                                reach[len + 1][nst] = true;
                                dist[len + 1][nst] = cand;
                                par[len + 1][nst] = st;
                            }
                        }
                    }
                }
            }
            if (best_len < 0) continue;
            std::vector<long> walk(best_len);
            long st = best_state;
            for (long len = best_len; len >= 1; --len) {
                walk[len - 1] = st / R;
                st = par[len][st];
            }
            // Split at repeated LAYERED nodes (same position, same entry
            // phase/residue): the extracted loop is a weight-1 piece, so the
            // total reduced cost never drops and an improving walk always
            // yields an improving layered-simple cycle.
            std::vector<long> stack;
            std::map<std::pair<long, int>, int> pos_in;  // (node, entry phase) -> stack idx
            std::vector<int> phase_at;                   // entry phase per stack entry
            auto flush = [&](std::vector<long> cyc) {
                if (!cyc.empty() && reduced_cost(x_side, cyc) > 0) found.push_back(std::move(cyc));
            };
            int phase = 0;
            for (long v : walk) {
                auto key = std::make_pair(v, phase);
                auto it = pos_in.find(key);
                if (it != pos_in.end()) {
                    int cut = it->second;
                    std::vector<long> cyc(stack.begin() + cut, stack.end());
                    for (int k = cut; k < static_cast<int>(stack.size()); ++k)
                        pos_in.erase({stack[static_cast<std::size_t>(k)], phase_at[static_cast<std::size_t>(k)]});
                    stack.resize(static_cast<std::size_t>(cut));
                    phase_at.resize(static_cast<std::size_t>(cut));
                    flush(std::move(cyc));
                }
                pos_in[key] = static_cast<int>(stack.size());
                phase_at.push_back(phase);
                stack.push_back(v);
                phase = x_side ? (phase + 1) % 2 : (phase + P.yexp_of(v)) % 3;
            }
            flush(std::move(stack));
        }
        return found;
    }
};

struct BuiltProblem {
    Positions P;
    Rational lambda;  // sum of coeff * L over words
};

BuiltProblem build_problem(const std::vector<std::pair<XYWord, Rational>>& terms) {
    BuiltProblem bp{build_positions(terms), Rational(0)};
    for (const auto& [xy, coeff] : terms)
        bp.lambda += coeff * Rational(static_cast<long>(xy.y_exps.size()));
    bp.lambda.canonicalize();
    return bp;
}

SclResult solve_by_lp(const BuiltProblem& bp, const SclOptions& opt) {
    const Positions& P = bp.P;
    Master master(P);
    // seeds: x singletons plus one full y cycle per word (always feasible)
    for (long p = 0; p < P.m; ++p) master.add(make_piece(P, true, {p}));
    for (const auto& w : P.words) {
        std::vector<long> cyc;
        for (long j = 0; j < static_cast<long>(w.yexp.size()); ++j) cyc.push_back(w.base + j);
        master.add(make_piece(P, false, std::move(cyc)));
    }

    const bool trace = std::getenv("MODSCL_TRACE") != nullptr;
    bool fast_phase = true;
    std::vector<Rational> duals;
    for (long round = 0;; ++round) {
        if (round > opt.max_rounds)
            throw SclError(SclErrorCode::Internal, "column generation did not converge");
        auto t0 = std::chrono::steady_clock::now();
        master.solve();
        auto t1 = std::chrono::steady_clock::now();
        duals = master.lp.duals();
        std::vector<Rational> pi_x(P.m), pi_y(P.m);
        for (long p = 0; p < P.m; ++p) {
            pi_x[p] = duals[p];
            pi_y[p] = duals[P.m + p];
        }
        std::map<EdgeKey, Rational> mu;
        for (const auto& [k, row] : master.keyrow) mu[k] = duals[row];
        Pricer pricer{P, pi_x, pi_y, mu};
        long cap = fast_phase ? std::min(opt.fast_pricing_len, P.m) : 3 * P.m;
        auto cand_x = pricer.price(true, cap);
        auto cand_y = pricer.price(false, cap);
        auto t2 = std::chrono::steady_clock::now();
        long added = 0;
        for (auto& c : cand_x)
            if (master.add(make_piece(P, true, std::move(c)))) ++added;
        for (auto& c : cand_y)
            if (master.add(make_piece(P, false, std::move(c)))) ++added;
        if (trace)
            std::cerr << "round " << round << ": cols=" << master.pieces.size()
                      << " rows=" << master.lp.rows()
                      << " obj=" << to_string(master.lp.objective_value()) << " added=" << added
                      << " solve=" << std::chrono::duration<double>(t1 - t0).count()
                      << "s price=" << std::chrono::duration<double>(t2 - t1).count() << "s\n";
        if (added == 0) {
            if (fast_phase && cap < 3 * P.m) {
                fast_phase = false;  // one full pass certifies optimality
                continue;
            }
            break;
        }
    }

    SclResult out;
    out.value = (bp.lambda - master.lp.objective_value()) / 2;
    out.value.canonicalize();
    std::vector<Rational> sol = master.lp.solution();
    for (std::size_t c = 0; c < master.pieces.size(); ++c)
        if (sol[c] != 0) out.optimal_vector[master.pieces[c].key()] = sol[c];
    out.dual_certificate.assign(duals.begin(), duals.begin() + 2 * P.m);
    return out;
}

std::vector<std::pair<XYWord, Rational>> chain_to_xy(const Chain& c, const SclOptions& opt,
                                                     bool check_admissible) {
    if (check_admissible) {
        HomologyClass h = homology_class(c);
        if (!h.integral || h.residue != 0)
            throw SclError(SclErrorCode::Homology,
                           "chain is not null-homologous in Z/6 (residue " +
                               std::to_string(h.residue) + ")",
                           h.residue);
    }
    std::vector<std::pair<XYWord, Rational>> terms;
    long xy_len = 0;
    for (const auto& [key, tv] : c.terms()) {
        Canonical cc = canonicalize(tv.first);
        if (cc.cls != ElementClass::Hyperbolic)
            throw SclError(SclErrorCode::NonHyperbolic,
                           "chain summand " + key + " is " + to_string(cc.cls) +
                               "; only hyperbolic words are supported");
        XYWord xy = to_xy(cc.word);
        Rational coeff = tv.second;
        if (coeff < 0) {
            xy = xy_inverse(xy);
            coeff = -coeff;
        }
        xy_len += 2 * static_cast<long>(xy.y_exps.size());
        terms.push_back({std::move(xy), coeff});
    }
    if (xy_len > opt.xy_cap)
        throw SclError(SclErrorCode::Capacity,
                       "xy-length " + std::to_string(xy_len) + " exceeds the cap of " +
                           std::to_string(opt.xy_cap));
    return terms;
}

}  // namespace

SclResult scl(const Chain& c, const SclOptions& opt) {
    if (c.empty()) return SclResult{Rational(0), {}, {}, false};
    auto terms = chain_to_xy(c, opt, true);
    return solve_by_lp(build_problem(terms), opt);
}

SclResult scl_word(const CyclicWord& w0, const SclOptions& opt) {
    Canonical c = canonicalize(w0);
    if (c.cls != ElementClass::Hyperbolic)
        throw SclError(SclErrorCode::NonHyperbolic,
                       "scl_word wants a hyperbolic word, got " + to_string(c.cls));
    long xy_len = 2 * c.word.total_exponent();
    if (xy_len > opt.xy_cap)
        throw SclError(SclErrorCode::Capacity,
                       "xy-length " + std::to_string(xy_len) + " exceeds the cap of " +
                           std::to_string(opt.xy_cap));
    if (opt.allow_certificate && xy_len > opt.lp_cap) {
        // Large instances: a verified gluing certificate pins scl = rot/2
        // (certificate surface gives <=, the Bavard bound gives >=).
        try {
            GluingCertificate cert = glue(c.word, 3);
            if (verify(cert).pass) {
                SclResult out;
                out.value = rot(c.word) / 2;
                out.value.canonicalize();
                out.via_certificate = true;
                return out;
            }
        } catch (const std::exception&) {
            // fall through to the LP
        }
    }
    Chain ch;
    ch.add(c.word, Rational(1));
    auto terms = chain_to_xy(ch, opt, false);
    return solve_by_lp(build_problem(terms), opt);
}

Extremality is_rot_extremal(const CyclicWord& w, const SclOptions& opt) {
    Canonical c = canonicalize(w);
    if (c.cls != ElementClass::Hyperbolic)
        throw SclError(SclErrorCode::NonHyperbolic, "is_rot_extremal wants a hyperbolic word");
    Extremality out;
    out.rot_value = rot(c.word);
    SclResult s = scl_word(c.word, opt);
    out.scl_value = s.value;
    out.gap = s.value - out.rot_value / 2;
    out.gap.canonicalize();
    if (out.gap < 0)
        throw SclError(SclErrorCode::Internal,
                       "Bavard bound violated: scl " + to_string(s.value) + " < rot/2 for " +
                           c.word.str());
    out.extremal = out.gap == 0;
    return out;
}

bool scl_of_power_consistency(const CyclicWord& w, int n, const SclOptions& opt) {
    SclResult base = scl_word(w, opt);
    SclResult pow = scl_word(word_power(w, n), opt);
    if (pow.value != Rational(n) * base.value) return false;
    Chain ch;
    ch.add(w, Rational(n));
    HomologyClass h = homology_class(ch);
    if (!h.integral || h.residue != 0) return true;  // chain form needs admissibility
    SclResult chain_scaled = scl(ch, opt);
    return chain_scaled.value == Rational(n) * base.value;
}

}  // namespace modscl
