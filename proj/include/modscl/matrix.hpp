#pragma once

#include <array>
#include <string>

#include "modscl/rational.hpp"
#include "modscl/word.hpp"

namespace modscl {

/// 2x2 integer matrix with det = 1, identified with its negation.
/// Entries are arbitrary-precision: products over long words overflow
/// machine words quickly.
class ProjectiveMatrix {
public:
    ProjectiveMatrix() : e_{1, 0, 0, 1} {}
    ProjectiveMatrix(Integer a, Integer b, Integer c, Integer d);

    const Integer& a() const { return e_[0]; }
    const Integer& b() const { return e_[1]; }
    const Integer& c() const { return e_[2]; }
    const Integer& d() const { return e_[3]; }

    Integer trace() const { return e_[0] + e_[3]; }
    Integer det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

    ProjectiveMatrix operator*(const ProjectiveMatrix& o) const;

    /// Equality up to global sign.
    bool operator==(const ProjectiveMatrix& o) const;

    std::string str() const;

private:
    std::array<Integer, 4> e_;
};

ProjectiveMatrix gen_R();
ProjectiveMatrix gen_L();
/// Order-2 and order-3 torsion generators: x = (0 -1 / 1 0), y = (0 -1 / 1 1).
ProjectiveMatrix gen_x();
ProjectiveMatrix gen_y();

/// Product of generator matrices in word order (left to right). Trace and
/// element class are invariant under cyclic rotation; the matrix itself is a
/// representative of the chosen rotation.
ProjectiveMatrix to_matrix(const CyclicWord& w);

/// Class from the trace criterion: |tr| < 2 elliptic, = 2 parabolic
/// (or identity), > 2 hyperbolic.
ElementClass classify_matrix(const ProjectiveMatrix& m);

}  // namespace modscl
