#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modscl/circle.hpp"
#include "modscl/moves.hpp"
#include "modscl/placement.hpp"
#include "modscl/rational.hpp"
#include "modscl/word.hpp"

namespace modscl {

/// Witness that a geodesic virtually bounds an immersed surface: the lift
/// placement, the boundary circles it produces, and a replayable move log
/// consuming them, together with the orbifold bookkeeping.
struct GluingCertificate {
    CyclicWord word;
    int p = 3;
    long gap = 5;
    int wrap = 1;
    LiftPlacement placement;
    std::vector<Circle> initial_circles;
    std::vector<int> placement_cones;
    long chi_assembled = 0;
    long pieces = 0;
    long partial_pairings = 0;
    std::vector<Move> moves;
    std::vector<int> orbifold_points;  ///< all cone orders, sorted
    Rational chi_orb;                  ///< orbifold Euler characteristic of the glued surface
};

struct ConstructionFailed : std::runtime_error {
    CircleState stuck;
    ConstructionFailed(const std::string& what, CircleState s)
        : std::runtime_error(what), stuck(std::move(s)) {}
};

/// Rotation number of the (2,p,infty) realization: (sum a - sum b)(p-2)/(2p);
/// at p = 3 this is the modular-group rot.
Rational rot_p(const CyclicWord& w, int p);

/// Runs the full construction: place lifts, extract circles, reduce them with
/// the move calculus (1-handles, complement phase, 1121-folds, endgame; the
/// p > 3 ladder variant), and assemble the certificate. Throws
/// InsufficientRoom or ConstructionFailed.
GluingCertificate glue(const CyclicWord& w, int p = 3, long gap = 5);

struct VerificationReport {
    bool pass = false;
    std::string detail;       ///< first failing check when !pass
    Rational chi_orb;         ///< recomputed
    std::vector<int> points;  ///< recomputed cone orders
};

/// Replays the certificate from its own data: recomputes the boundary
/// circles from the placement, replays every move checking applicability,
/// rebuilds chi from the cell complex, and checks -chi_orb = wrap * rot.
VerificationReport verify(const GluingCertificate& cert);

/// Least n <= n_max such that glue(R^n X, p) verifies.
std::optional<long> minimal_stabilization(const CyclicWord& x, long n_max, int p = 3);

std::string serialize_certificate(const GluingCertificate& cert);
GluingCertificate parse_certificate(const std::string& text);

}  // namespace modscl
