#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modscl/chain.hpp"
#include "modscl/rational.hpp"
#include "modscl/word.hpp"

namespace modscl {

enum class SclErrorCode { Homology, NonHyperbolic, Capacity, Internal };

struct SclError : std::runtime_error {
    SclErrorCode code;
    int residue = 0;  ///< Z/6 class for Homology errors
    SclError(SclErrorCode c, const std::string& what, int res = 0)
        : std::runtime_error(what), code(c), residue(res) {}
};

struct SclOptions {
    long xy_cap = 160;         ///< refuse larger problems outright
    long lp_cap = 60;          ///< above this, prove scl = rot/2 by certificate instead of LP
    bool allow_certificate = true;
    long max_rounds = 2000;    ///< column generation safety limit
    long fast_pricing_len = 14;
};

struct SclResult {
    Rational value;
    std::map<std::string, Rational> optimal_vector;  ///< piece -> weight (LP route)
    std::vector<Rational> dual_certificate;          ///< coverage duals (LP route)
    bool via_certificate = false;  ///< value pinned by gluing certificate + duality bound
};

/// Exact stable commutator length of an admissible chain, by rational linear
/// programming over surface pieces for Z/2 * Z/3. Errors: Homology for
/// chains with nonzero Z/6 class, NonHyperbolic for parabolic or torsion
/// summands, Capacity beyond the size guardrail.
SclResult scl(const Chain& c, const SclOptions& opt = {});

/// scl of a single hyperbolic word. Words with nonzero Z/6 class are fine
/// here: the LP computes the torsion extension scl(w^k)/k directly.
SclResult scl_word(const CyclicWord& w, const SclOptions& opt = {});

struct Extremality {
    bool extremal = false;
    Rational gap;        ///< scl - rot/2, always >= 0
    Rational scl_value;
    Rational rot_value;
};

/// Tests scl(w) = rot(w)/2 exactly.
Extremality is_rot_extremal(const CyclicWord& w, const SclOptions& opt = {});

/// Checks scl(w^n) = n scl(w) and scl({w : n}) = n scl(w) exactly.
bool scl_of_power_consistency(const CyclicWord& w, int n, const SclOptions& opt = {});

/// Independent enumerative oracle: exhaustively searches integral surface
/// assemblies at cover degree 1 (and greedily above), maximizing the
/// orbifold Euler characteristic. Returns an upper bound for scl that equals
/// it whenever the extremal assembly exists at that degree.
Rational scl_bruteforce(const CyclicWord& w, int max_cover_degree = 1);

}  // namespace modscl
