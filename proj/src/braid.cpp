#include "modscl/braid.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace modscl {

BraidWord parse_braid(const std::string& text) {
    BraidWord out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != 's' && text[i] != 'S')
            throw std::invalid_argument("braid syntax error at position " + std::to_string(i));
        ++i;
        if (i >= text.size() || (text[i] != '1' && text[i] != '2'))
            throw std::invalid_argument("braid generator must be s1 or s2 (position " +
                                        std::to_string(i) + ")");
        int gen = text[i] - '0';
        ++i;
        int sign = 1;
        if (i < text.size() && text[i] == '-') { sign = -1; ++i; }
        out.letters.push_back({gen, sign});
    }
    if (out.letters.empty()) throw std::invalid_argument("empty braid word");
    return out;
}

std::string SignedWord::str() const {
    if (blocks.empty()) return "1";
    std::ostringstream out;
    for (const Block& b : blocks) {
        out << letter_char(b.letter);
        if (b.exponent != 1) out << b.exponent;
    }
    return out.str();
}

namespace {

std::vector<Block> cyclic_cancel(std::vector<Block> v) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Block> out;
        for (const Block& b : v) {
            if (!out.empty() && out.back().letter == b.letter) {
                out.back().exponent += b.exponent;
                if (out.back().exponent == 0) out.pop_back();
                changed = true;
            } else {
                out.push_back(b);
            }
        }
        while (out.size() > 1 && out.front().letter == out.back().letter) {
            out.front().exponent += out.back().exponent;
            out.pop_back();
            if (out.front().exponent == 0) out.erase(out.begin());
            changed = true;
        }
        v = std::move(out);
    }
    return v;
}

}  // namespace

BraidProjection braid_project(const BraidWord& b) {
    std::vector<Block> blocks;
    for (auto [gen, sign] : b.letters) {
        // sigma_1 -> R^{-1}, sigma_2 -> L
        if (gen == 1) blocks.push_back({Letter::R, -sign});
        else blocks.push_back({Letter::L, sign});
    }
    blocks = cyclic_cancel(std::move(blocks));

    BraidProjection out;
    out.signed_form.blocks = blocks;
    bool pos = !blocks.empty();
    for (const Block& blk : blocks)
        if (blk.exponent < 0) pos = false;
    out.positive = pos;
    if (pos) out.word = canonicalize(CyclicWord(blocks)).word;
    return out;
}

}  // namespace modscl
