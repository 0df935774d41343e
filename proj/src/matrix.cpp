#include "modscl/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace modscl {

ProjectiveMatrix::ProjectiveMatrix(Integer a, Integer b, Integer c, Integer d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (det() != 1) throw std::invalid_argument("ProjectiveMatrix requires det = 1");
}

ProjectiveMatrix ProjectiveMatrix::operator*(const ProjectiveMatrix& o) const {
    return ProjectiveMatrix(e_[0] * o.e_[0] + e_[1] * o.e_[2], e_[0] * o.e_[1] + e_[1] * o.e_[3],
                            e_[2] * o.e_[0] + e_[3] * o.e_[2], e_[2] * o.e_[1] + e_[3] * o.e_[3]);
}

bool ProjectiveMatrix::operator==(const ProjectiveMatrix& o) const {
    bool plus = true, minus = true;
    for (int i = 0; i < 4; ++i) {
        if (e_[i] != o.e_[i]) plus = false;
        if (e_[i] != -o.e_[i]) minus = false;
    }
    return plus || minus;
}

std::string ProjectiveMatrix::str() const {
    std::ostringstream out;
    out << "(" << e_[0].get_str() << " " << e_[1].get_str() << " / " << e_[2].get_str() << " "
        << e_[3].get_str() << ")";
    return out.str();
}

ProjectiveMatrix gen_R() { return ProjectiveMatrix(1, 1, 0, 1); }
ProjectiveMatrix gen_L() { return ProjectiveMatrix(1, 0, 1, 1); }
ProjectiveMatrix gen_x() { return ProjectiveMatrix(0, -1, 1, 0); }
ProjectiveMatrix gen_y() { return ProjectiveMatrix(0, -1, 1, 1); }

ProjectiveMatrix to_matrix(const CyclicWord& w) {
    ProjectiveMatrix m;
    for (const Block& blk : w.blocks()) {
        // R^k = (1 k / 0 1), L^k = (1 0 / k 1); avoids k single multiplies.
        ProjectiveMatrix p = blk.letter == Letter::R ? ProjectiveMatrix(1, blk.exponent, 0, 1)
                                                     : ProjectiveMatrix(1, 0, blk.exponent, 1);
        m = m * p;
    }
    return m;
}

ElementClass classify_matrix(const ProjectiveMatrix& m) {
    Integer t = m.trace();
    Integer at = abs(t);
    if (at > 2) return ElementClass::Hyperbolic;
    if (at == 2) {
        ProjectiveMatrix id;
        return m == id ? ElementClass::Identity : ElementClass::Parabolic;
    }
    // |tr| < 2: elliptic; tr = 0 gives order 2, tr = +-1 order 3.
    if (t == 0) return ElementClass::Elliptic2;
    return ElementClass::Elliptic3;
}

}  // namespace modscl
