#include "modscl/xyform.hpp"

#include <sstream>
#include <stdexcept>

namespace modscl {

std::string XYWord::str() const {
    std::ostringstream out;
    for (int e : y_exps) {
        out << "x";
        out << (e == 1 ? "y" : "y2");
    }
    return out.str();
}

XYWord to_xy(const CyclicWord& w) {
    XYWord out;
    for (const Block& b : w.blocks()) {
        int e = b.letter == Letter::R ? 1 : 2;
        for (long i = 0; i < b.exponent; ++i) out.y_exps.push_back(e);
    }
    return out;
}

XYWord xy_inverse(const XYWord& w) {
    XYWord out;
    out.y_exps.reserve(w.y_exps.size());
    for (auto it = w.y_exps.rbegin(); it != w.y_exps.rend(); ++it) out.y_exps.push_back(3 - *it);
    return out;
}

CyclicWord xy_to_word(const XYWord& w) {
    if (w.y_exps.empty()) return CyclicWord{};
    std::vector<Block> blocks;
    for (int e : w.y_exps) blocks.push_back({e == 1 ? Letter::R : Letter::L, 1});
    return canonicalize(CyclicWord(std::move(blocks))).word;
}

ProjectiveMatrix xy_matrix(const XYWord& w) {
    ProjectiveMatrix m;
    ProjectiveMatrix x = gen_x(), y = gen_y();
    ProjectiveMatrix y2 = y * y;
    for (int e : w.y_exps) {
        m = m * x;
        m = m * (e == 1 ? y : y2);
    }
    return m;
}

}  // namespace modscl
