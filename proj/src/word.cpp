#include "modscl/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace modscl {

std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::Identity: return "identity";
        case ElementClass::Elliptic2: return "elliptic(2)";
        case ElementClass::Elliptic3: return "elliptic(3)";
        case ElementClass::Parabolic: return "parabolic";
        case ElementClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

long CyclicWord::total_exponent() const {
    long s = 0;
    for (const Block& b : blocks_) s += b.exponent;
    return s;
}

long CyclicWord::exponent_sum(Letter l) const {
    long s = 0;
    for (const Block& b : blocks_)
        if (b.letter == l) s += b.exponent;
    return s;
}

std::string CyclicWord::str() const {
    if (blocks_.empty()) return "1";
    std::ostringstream out;
    for (const Block& b : blocks_) {
        out << letter_char(b.letter);
        if (b.exponent != 1) out << b.exponent;
    }
    return out.str();
}

CyclicWord parse_word(const std::string& text) {
    std::vector<Block> blocks;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        char c = text[i];
        Letter l;
        if (c == 'R' || c == 'r') l = Letter::R;
        else if (c == 'L' || c == 'l') l = Letter::L;
        else throw std::invalid_argument("word syntax error at position " + std::to_string(i) +
                                         ": expected R or L, got '" + std::string(1, c) + "'");
        ++i;
        skip_ws();
        if (i < text.size() && text[i] == '^') { ++i; skip_ws(); }
        long exp = 1;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '-')) {
            std::size_t start = i;
            if (text[i] == '-') ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            exp = std::stol(text.substr(start, i - start));
            if (exp <= 0)
                throw std::invalid_argument("word syntax error at position " + std::to_string(start) +
                                            ": exponent must be a positive integer");
        }
        blocks.push_back({l, exp});
        skip_ws();
    }
    if (blocks.empty()) throw std::invalid_argument("empty word");
    return CyclicWord(std::move(blocks));
}

namespace {

// Cyclically merge adjacent blocks with the same letter.
std::vector<Block> merge_blocks(std::vector<Block> in) {
    bool changed = true;
    while (changed && in.size() > 1) {
        changed = false;
        std::vector<Block> out;
        for (const Block& b : in) {
            if (!out.empty() && out.back().letter == b.letter) {
                out.back().exponent += b.exponent;
                changed = true;
            } else {
                out.push_back(b);
            }
        }
        if (out.size() > 1 && out.front().letter == out.back().letter) {
            out.front().exponent += out.back().exponent;
            out.pop_back();
            changed = true;
        }
        in = std::move(out);
    }
    return in;
}

// Block order: R before L, then larger exponent first. This makes the
// canonical rotation of a hyperbolic word start with its largest R block.
bool block_less(const Block& a, const Block& b) {
    if (a.letter != b.letter) return a.letter == Letter::R;
    return a.exponent > b.exponent;
}

bool rotation_less(const std::vector<Block>& v, std::size_t i, std::size_t j) {
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Block& a = v[(i + k) % n];
        const Block& b = v[(j + k) % n];
        if (!(a == b)) return block_less(a, b);
    }
    return false;
}

}  // namespace

Canonical canonicalize(const CyclicWord& w) {
    std::vector<Block> m = merge_blocks(w.blocks());
    if (m.empty()) return {CyclicWord{}, ElementClass::Identity};
    if (m.size() == 1) {
        return {CyclicWord(std::move(m)), ElementClass::Parabolic};
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < m.size(); ++i)
        if (rotation_less(m, i, best)) best = i;
    std::vector<Block> rot;
    rot.reserve(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) rot.push_back(m[(best + k) % m.size()]);
    return {CyclicWord(std::move(rot)), ElementClass::Hyperbolic};
}

ElementClass classify(const CyclicWord& w) { return canonicalize(w).cls; }

bool is_hyperbolic(const CyclicWord& w) { return classify(w) == ElementClass::Hyperbolic; }

Rational rot(const CyclicWord& w) {
    Canonical c = canonicalize(w);
    switch (c.cls) {
        case ElementClass::Identity:
        case ElementClass::Elliptic2:
        case ElementClass::Elliptic3:
            return Rational(0);
        default: break;
    }
    long psi = c.word.exponent_sum(Letter::R) - c.word.exponent_sum(Letter::L);
    Rational q(psi, 6);
    q.canonicalize();
    return q;
}

long rademacher_psi(const CyclicWord& w) {
    Canonical c = canonicalize(w);
    return c.word.exponent_sum(Letter::R) - c.word.exponent_sum(Letter::L);
}

CyclicWord word_power(const CyclicWord& w, int n) {
    if (n <= 0) throw std::invalid_argument("word_power wants n >= 1");
    std::vector<Block> out;
    out.reserve(w.blocks().size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const Block& b : w.blocks()) out.push_back(b);
    return canonicalize(CyclicWord(std::move(out))).word;
}

std::vector<CyclicWord> rotations(const CyclicWord& w) {
    std::vector<CyclicWord> out;
    const auto& v = w.blocks();
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<Block> r;
        for (std::size_t k = 0; k < v.size(); ++k) r.push_back(v[(i + k) % v.size()]);
        out.emplace_back(std::move(r));
    }
    return out;
}

CyclicWord concat(const CyclicWord& u, const CyclicWord& v) {
    std::vector<Block> out = u.blocks();
    out.insert(out.end(), v.blocks().begin(), v.blocks().end());
    return CyclicWord(std::move(out));
}

CyclicWord stabilize(const CyclicWord& w, long n) {
    if (n == 0) return canonicalize(w).word;
    std::vector<Block> out;
    out.push_back({Letter::R, n});
    for (const Block& b : w.blocks()) out.push_back(b);
    return canonicalize(CyclicWord(std::move(out))).word;
}

CyclicWord stabilize_left(const CyclicWord& w, long n) {
    if (n == 0) return canonicalize(w).word;
    std::vector<Block> out;
    out.push_back({Letter::L, n});
    for (const Block& b : w.blocks()) out.push_back(b);
    return canonicalize(CyclicWord(std::move(out))).word;
}

}  // namespace modscl
