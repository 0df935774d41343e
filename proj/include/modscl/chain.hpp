#pragma once

#include <map>
#include <string>
#include <vector>

#include "modscl/rational.hpp"
#include "modscl/word.hpp"

namespace modscl {

/// Finite formal sum of cyclic words with rational coefficients. Words are
/// keyed by canonical form; zero coefficients are dropped.
class Chain {
public:
    Chain() = default;

    /// Adds coeff * w (w canonicalized first).
    void add(const CyclicWord& w, const Rational& coeff);

    const std::map<std::string, std::pair<CyclicWord, Rational>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Chain operator+(const Chain& o) const;
    Chain scaled(const Rational& s) const;

    std::string str() const;

private:
    std::map<std::string, std::pair<CyclicWord, Rational>> terms_;
};

/// chain := term ('+' term)* ; term := coeff '*' word | word ;
/// coeff := integer | integer '/' positive-integer.
Chain parse_chain(const std::string& text);

struct HomologyClass {
    bool integral = true;  ///< false when coefficients do not clear to Z
    int residue = 0;       ///< class in Z/6 when integral
};

/// Image in H1 = Z/6: each R letter contributes +1, each L letter -1,
/// weighted by coefficients. Chains are scl-admissible iff residue 0.
HomologyClass homology_class(const Chain& c);

/// Class of a single word in Z/6.
int homology_residue(const CyclicWord& w);

}  // namespace modscl
