#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modscl/rational.hpp"

namespace modscl {

enum class Letter : std::uint8_t { R, L };

inline char letter_char(Letter l) { return l == Letter::R ? 'R' : 'L'; }

/// One maximal run of a single generator, e.g. (R,7) in R^7 L^2 R L.
struct Block {
    Letter letter;
    long exponent;

    friend bool operator==(const Block&, const Block&) = default;
};

enum class ElementClass { Identity, Elliptic2, Elliptic3, Parabolic, Hyperbolic };

std::string to_string(ElementClass c);

/// A conjugacy class in PSL(2,Z) stored as cyclic blocks. Not automatically
/// canonical: parse_word returns blocks exactly as written; canonicalize()
/// merges runs and rotates to the canonical representative.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        for (const Block& b : blocks_)
            if (b.exponent <= 0) throw std::invalid_argument("block exponent must be positive");
    }

    const std::vector<Block>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }
    std::size_t block_count() const { return blocks_.size(); }

    /// Sum of all exponents (word length in letters).
    long total_exponent() const;
    long exponent_sum(Letter l) const;

    /// Block-pair count n for a canonical hyperbolic word (blocks/2).
    std::size_t pair_count() const { return blocks_.size() / 2; }

    bool operator==(const CyclicWord& o) const { return blocks_ == o.blocks_; }

    std::string str() const;

private:
    std::vector<Block> blocks_;
};

/// Grammar: word := block+ ; block := ('R'|'L') count? ; count := nonzero
/// decimal; optional whitespace; caret form "R^7" accepted.
CyclicWord parse_word(const std::string& text);

struct Canonical {
    CyclicWord word;
    ElementClass cls;
};

/// Merges cyclically adjacent same-letter blocks and classifies. Hyperbolic
/// words are rotated to the canonical representative: blockwise
/// lexicographically least with R < L and larger exponents first, so the
/// leading block is the largest R power.
Canonical canonicalize(const CyclicWord& w);

ElementClass classify(const CyclicWord& w);

bool is_hyperbolic(const CyclicWord& w);

/// rot(g) = (sum a_i - sum b_i)/6 on canonical hyperbolic words, extended by
/// homogenization: R^a -> a/6, L^b -> -b/6, torsion and identity -> 0.
Rational rot(const CyclicWord& w);

/// Psi = 6 rot, an integer on hyperbolic and parabolic classes.
long rademacher_psi(const CyclicWord& w);

/// w^n as a cyclic word (blocks repeated n times, then canonicalized).
CyclicWord word_power(const CyclicWord& w, int n);

/// All block rotations of a word (for conjugacy-invariance tests).
std::vector<CyclicWord> rotations(const CyclicWord& w);

/// Concatenation in linear (non-cyclic) order: u then v.
CyclicWord concat(const CyclicWord& u, const CyclicWord& v);

/// R^n w as a cyclic word (the stabilization), canonicalized.
CyclicWord stabilize(const CyclicWord& w, long n);

/// L^n w, canonicalized (used by the negative arm of the n(X) scan).
CyclicWord stabilize_left(const CyclicWord& w, long n);

}  // namespace modscl
