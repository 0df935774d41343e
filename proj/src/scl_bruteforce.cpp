#include <algorithm>
#include <vector>

#include "modscl/scl.hpp"
#include "modscl/xyform.hpp"

namespace modscl {

namespace {

// Degree-1 exhaustive assembly search. An assembly is a permutation phi of
// the x-positions: x-pieces are phi's cycles, and phi forces a permutation of
// the y-positions whose cycles are the y-pieces. We maximize the total
// orbifold Euler characteristic sum(chi of pieces), counted in sixths so the
// inner loop stays in machine integers.
struct Search {
    long m;
    std::vector<int> yexp;
    std::vector<long> phi;
    std::vector<bool> used;
    long best6 = -1;
    std::vector<char> seen_;
    std::vector<long> inv_;

    long score6() {
        long total = 0;  // chi in sixths: disk 6, order-2 cone 3, order-3 cone 2
        std::fill(seen_.begin(), seen_.end(), 0);
        for (long i = 0; i < m; ++i) {
            if (seen_[i]) continue;
            long len = 0, v = i;
            while (!seen_[v]) {
                seen_[v] = 1;
                v = phi[v];
                ++len;
            }
            total += (len % 2 == 0) ? 6 : 3;
        }
        for (long i = 0; i < m; ++i) inv_[phi[i]] = i;
        std::fill(seen_.begin(), seen_.end(), 0);
        for (long q = 0; q < m; ++q) {
            if (seen_[q]) continue;
            int res = 0;
            long v = q;
            while (!seen_[v]) {
                seen_[v] = 1;
                res = (res + yexp[v]) % 3;
                v = inv_[(v + 1) % m];  // induced y-permutation
            }
            total += (res == 0) ? 6 : 2;
        }
        return total;
    }

    void dfs(long i) {
        if (i == m) {
            long t = score6();
            if (t > best6) best6 = t;
            return;
        }
        for (long tgt = 0; tgt < m; ++tgt) {
            if (used[tgt]) continue;
            used[tgt] = true;
            phi[i] = tgt;
            dfs(i + 1);
            used[tgt] = false;
        }
    }
};

}  // namespace

Rational scl_bruteforce(const CyclicWord& w0, int max_cover_degree) {
    Canonical c = canonicalize(w0);
    if (c.cls != ElementClass::Hyperbolic)
        throw SclError(SclErrorCode::NonHyperbolic, "scl_bruteforce wants a hyperbolic word");
    long m = c.word.total_exponent();
    if (m > 11)
        throw SclError(SclErrorCode::Capacity,
                       "scl_bruteforce size cap exceeded (total exponent " + std::to_string(m) +
                           " > 11)");
    if (max_cover_degree < 1)
        throw SclError(SclErrorCode::Capacity, "cover degree must be >= 1");

    XYWord xy = to_xy(c.word);
    Search s;
    s.m = m;
    s.yexp = xy.y_exps;
    s.phi.assign(m, 0);
    s.used.assign(m, false);
    s.seen_.assign(m, 0);
    s.inv_.assign(m, 0);
    s.dfs(0);
    // value = (Lambda * d - sum chi) / (2 d) at degree d = 1; degrees above 1
    // are covered by disjoint copies, so this stays a valid upper bound.
    Rational ub = Rational(6 * m - s.best6, 12);
    ub.canonicalize();
    return ub;
}

}  // namespace modscl
