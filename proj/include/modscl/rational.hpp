#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace modscl {

/// Exact rational scalar. All scl / rot / Euler characteristic values flow
/// through this type; nothing in the library ever rounds.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Renders "num/den", or just "num" for integers ("0", "5", "-2/3").
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parses "a" or "a/b" with b > 0 after canonicalization.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

}  // namespace modscl
