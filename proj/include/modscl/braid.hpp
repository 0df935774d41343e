#pragma once

#include <string>
#include <vector>

#include "modscl/word.hpp"

namespace modscl {

/// A word in the 3-strand braid generators; negative exponent = inverse.
struct BraidWord {
    std::vector<std::pair<int, int>> letters;  ///< (generator 1 or 2, +1 / -1)
};

/// "s1", "s2" with optional '-' suffix for the inverse, whitespace separated
/// or juxtaposed: "s2 s1- s2".
BraidWord parse_braid(const std::string& text);

/// R/L word with signed exponents (braid projection output before it is
/// known to be positive).
struct SignedWord {
    std::vector<Block> blocks;  ///< exponent may be negative, never zero
    std::string str() const;
};

struct BraidProjection {
    bool positive = false;    ///< true when cyclic cancellation yields a positive word
    CyclicWord word;          ///< canonical form, valid when positive
    SignedWord signed_form;   ///< always populated
};

/// sigma_1 -> R^{-1}, sigma_2 -> L, then cyclic cancellation of adjacent
/// inverse powers of the same letter. No use of the group relations beyond
/// letterwise cancellation.
BraidProjection braid_project(const BraidWord& b);

}  // namespace modscl
