#pragma once

#include <string>
#include <vector>

#include "modscl/matrix.hpp"
#include "modscl/word.hpp"

namespace modscl {

/// A cyclic alternating word over Z/2 * Z/3: x y^{e_1} x y^{e_2} ... x y^{e_k}
/// with e_i in {1,2}. Every cyclically reduced word of the free product that
/// meets both factors has this shape, since x is the only nontrivial element
/// of the Z/2 factor. R = xy, L = xy^2 projectively.
struct XYWord {
    std::vector<int> y_exps;

    std::size_t syllables() const { return 2 * y_exps.size(); }
    bool operator==(const XYWord&) const = default;

    std::string str() const;
};

/// Letterwise translation of a canonical positive word; k = total exponent.
XYWord to_xy(const CyclicWord& w);

/// Inverse as a cyclic xy-word: reverse the exponent sequence and flip
/// e -> 3 - e (x is an involution, y^{-1} = y^2).
XYWord xy_inverse(const XYWord& w);

/// Back to R/L: e=1 -> R, e=2 -> L, then canonicalize.
CyclicWord xy_to_word(const XYWord& w);

/// Multiplies out the xy-word's generator matrices (test oracle for the
/// dictionary R = xy, L = xy^2).
ProjectiveMatrix xy_matrix(const XYWord& w);

}  // namespace modscl
