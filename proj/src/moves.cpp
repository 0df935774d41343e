#include "modscl/moves.hpp"

#include <sstream>
#include <stdexcept>

namespace modscl {

std::string Move::str() const {
    std::ostringstream out;
    switch (kind) {
        case MoveKind::OneHandle:
            out << "one_handle c" << circle_a << "@" << pos_a << " c" << circle_b << "@" << pos_b;
            break;
        case MoveKind::EdgeFold: out << "edge_fold c" << circle_a << "@" << pos_a; break;
        case MoveKind::ZipSeg: out << "zip_seg c" << circle_a << "@" << pos_a; break;
        case MoveKind::ZipVertex: out << "zip_vertex c" << circle_a << "@" << pos_a; break;
    }
    if (!alias.empty()) out << " [" << alias << "]";
    return out.str();
}

namespace {

// Zip cascade over the residual path after the initial fold/closure.
// path holds the surviving labels in order; both ends zip together.
MoveEffect run_cascade(std::vector<int> path, int p, MoveEffect eff,
                       std::vector<int>* out_circle) {
    out_circle->clear();
    for (;;) {
        if (path.empty()) {
            // lone segment between the two fronts folds onto itself
            eff.cones.push_back(2);
            eff.delta_chi += 1;
            eff.ok = true;
            return eff;
        }
        if (path.size() == 1) {
            int l = path[0];
            if (l != p && p % l != 0) {
                eff.error = "zip closes a vertex of label " + std::to_string(l) +
                            " which does not divide p";
                return eff;
            }
            if (l != p) eff.cones.push_back(p / l);
            eff.delta_chi += 1;
            eff.ok = true;
            return eff;
        }
        int s = path.front() + path.back();
        if (s > p) {
            eff.error = "zip front merge exceeds p";
            return eff;
        }
        if (s < p) {
            // zip stops; merged vertex stays on the boundary
            out_circle->push_back(s);
            out_circle->insert(out_circle->end(), path.begin() + 1, path.end() - 1);
            eff.ok = true;
            return eff;
        }
        // s == p: merged vertex is interior; keep zipping
        path.erase(path.begin());
        path.pop_back();
    }
}

}  // namespace

MoveEffect apply_move(CircleState& s, const Move& m) {
    MoveEffect eff;
    if (m.circle_a >= s.circles.size()) {
        eff.error = "circle index out of range";
        return eff;
    }
    const int p = s.p;

    if (m.kind == MoveKind::OneHandle) {
        if (m.circle_b >= s.circles.size() || m.circle_a == m.circle_b) {
            eff.error = "one_handle needs two distinct circles";
            return eff;
        }
        const Circle& A = s.circles[m.circle_a];
        const Circle& B = s.circles[m.circle_b];
        if (A.size() < 2 || B.size() < 2 || A.label(m.pos_a) != 1 || A.label(m.pos_a + 1) != 1 ||
            B.label(m.pos_b) != 1 || B.label(m.pos_b + 1) != 1) {
            eff.error = "one_handle needs 11 sites on both circles";
            return eff;
        }
        std::vector<int> merged;
        merged.push_back(2);
        for (std::size_t k = 2; k < A.size(); ++k) merged.push_back(A.label(m.pos_a + k));
        merged.push_back(2);
        for (std::size_t k = 2; k < B.size(); ++k) merged.push_back(B.label(m.pos_b + k));
        std::vector<Circle> next;
        for (std::size_t i = 0; i < s.circles.size(); ++i)
            if (i != m.circle_a && i != m.circle_b) next.push_back(s.circles[i]);
        next.push_back(Circle(std::move(merged)));
        s.circles = std::move(next);
        s.normalize();
        eff.ok = true;
        eff.delta_chi = -1;
        return eff;
    }

    const Circle& C = s.circles[m.circle_a];
    const std::size_t n = C.size();
    if (m.pos_a >= n) {
        eff.error = "position out of range";
        return eff;
    }

    std::vector<int> out_circle;
    if (m.kind == MoveKind::EdgeFold) {
        if (n < 2) {
            eff.error = "edge_fold needs two distinct vertices";
            return eff;
        }
        int a = C.label(m.pos_a), b = C.label(m.pos_a + 1);
        if (a + b >= p) {
            eff.error = "edge_fold needs label sum < p";
            return eff;
        }
        eff.cones.push_back(2);
        eff.delta_chi = 0;
        out_circle.push_back(a + b);
        for (std::size_t k = 2; k < n; ++k) out_circle.push_back(C.label(m.pos_a + k));
        eff.ok = true;
    } else if (m.kind == MoveKind::ZipSeg) {
        if (n < 2) {
            eff.error = "zip_seg needs two distinct vertices";
            return eff;
        }
        int a = C.label(m.pos_a), b = C.label(m.pos_a + 1);
        if (a + b != p) {
            eff.error = "zip_seg needs label sum exactly p";
            return eff;
        }
        eff.cones.push_back(2);  // fold midpoint
        std::vector<int> path;
        for (std::size_t k = 2; k < n; ++k) path.push_back(C.label(m.pos_a + k));
        eff = run_cascade(std::move(path), p, std::move(eff), &out_circle);
        if (!eff.ok) return eff;
    } else {  // ZipVertex
        int l = C.label(m.pos_a);
        if (l != p && p % l != 0) {
            eff.error = "zip_vertex needs a label dividing p";
            return eff;
        }
        if (l != p) eff.cones.push_back(p / l);
        if (n == 1) {
            // closing the only vertex folds its self-loop segment too
            eff.cones.push_back(2);
            eff.delta_chi += 1;
            eff.ok = true;
        } else {
            std::vector<int> path;
            for (std::size_t k = 1; k < n; ++k) path.push_back(C.label(m.pos_a + k));
            eff = run_cascade(std::move(path), p, std::move(eff), &out_circle);
            if (!eff.ok) return eff;
        }
    }

    std::vector<Circle> next;
    for (std::size_t i = 0; i < s.circles.size(); ++i)
        if (i != m.circle_a) next.push_back(s.circles[i]);
    if (!out_circle.empty()) next.push_back(Circle(std::move(out_circle)));
    s.circles = std::move(next);
    for (int c : eff.cones) s.cone_orders.push_back(c);
    s.normalize();
    return eff;
}

std::vector<Move> legal_moves(const CircleState& s) {
    std::vector<Move> out;
    for (std::size_t i = 0; i < s.circles.size(); ++i) {
        const Circle& C = s.circles[i];
        for (std::size_t pos = 0; pos < C.size(); ++pos) {
            for (MoveKind k : {MoveKind::EdgeFold, MoveKind::ZipSeg, MoveKind::ZipVertex}) {
                Move m{k, i, pos};
                CircleState copy = s;
                if (apply_move(copy, m).ok) out.push_back(m);
            }
        }
        for (std::size_t j = i + 1; j < s.circles.size(); ++j) {
            const Circle& B = s.circles[j];
            for (std::size_t pa = 0; pa < C.size(); ++pa) {
                if (!(C.label(pa) == 1 && C.label(pa + 1) == 1)) continue;
                for (std::size_t pb = 0; pb < B.size(); ++pb) {
                    if (!(B.label(pb) == 1 && B.label(pb + 1) == 1)) continue;
                    out.push_back(Move{MoveKind::OneHandle, i, pa, j, pb});
                }
            }
        }
    }
    return out;
}

ReplayResult replay(const CircleState& initial, const std::vector<Move>& log) {
    ReplayResult r;
    r.final_state = initial;
    r.final_state.normalize();
    for (std::size_t i = 0; i < log.size(); ++i) {
        MoveEffect e = apply_move(r.final_state, log[i]);
        if (!e.ok) {
            r.failed_at = i;
            r.error = "move " + std::to_string(i) + " (" + log[i].str() + "): " + e.error;
            return r;
        }
        for (int c : e.cones) r.cones.push_back(c);
        r.delta_chi += e.delta_chi;
    }
    return r;
}

Move parse_move(const std::string& line) {
    std::istringstream in(line);
    std::string head;
    in >> head;
    Move m{};
    auto read_at = [&](std::size_t& c, std::size_t& pos) {
        std::string tok;
        in >> tok;
        auto at = tok.find('@');
        if (tok.empty() || tok[0] != 'c' || at == std::string::npos)
            throw std::invalid_argument("bad move position token: " + tok);
        c = std::stoul(tok.substr(1, at - 1));
        pos = std::stoul(tok.substr(at + 1));
    };
    if (head == "one_handle") {
        m.kind = MoveKind::OneHandle;
        read_at(m.circle_a, m.pos_a);
        read_at(m.circle_b, m.pos_b);
    } else if (head == "edge_fold") {
        m.kind = MoveKind::EdgeFold;
        read_at(m.circle_a, m.pos_a);
    } else if (head == "zip_seg") {
        m.kind = MoveKind::ZipSeg;
        read_at(m.circle_a, m.pos_a);
    } else if (head == "zip_vertex") {
        m.kind = MoveKind::ZipVertex;
        read_at(m.circle_a, m.pos_a);
    } else {
        throw std::invalid_argument("unknown move: " + head);
    }
    std::string alias;
    if (in >> alias && alias.size() > 2 && alias.front() == '[' && alias.back() == ']')
        m.alias = alias.substr(1, alias.size() - 2);
    return m;
}

}  // namespace modscl
