#include "modscl/simplex.hpp"

#include <cassert>
#include <cstdlib>
#include <iostream>
#include <algorithm>
#include <stdexcept>

namespace modscl {

namespace {

// Full-tableau simplex state for min-form problems. Columns are laid out as
// [structural | artificial]; the artificial block doubles as B^{-1} for dual
// extraction.
class Tableau {
public:
    Tableau(const LinearProgram& lp)
        : m_(lp.num_rows()), n_(lp.num_cols()), width_(n_ + m_ + 1) {
        a_.assign(m_, std::vector<Rational>(width_, Rational(0)));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            bool flip = lp.rhs[i] < 0;
            for (std::size_t j = 0; j < n_; ++j)
                a_[i][j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
            a_[i][n_ + i] = 1;
            a_[i][width_ - 1] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
            basis_[i] = n_ + i;
        }
    }

    // cost vector for the current phase, indexed over all columns
    void run_phase(const std::vector<Rational>& cost, bool allow_artificial) {
        // reduced-cost row: z_j = cost_j - cost_B . column_j
        red_.assign(width_, Rational(0));
        for (std::size_t j = 0; j < width_ - 1; ++j) red_[j] = cost[j];
        Rational obj(0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (cost[basis_[i]] == 0) continue;
            const Rational& cb = cost[basis_[i]];
            for (std::size_t j = 0; j < width_ - 1; ++j)
                if (a_[i][j] != 0) red_[j] -= cb * a_[i][j];
            obj -= cb * a_[i][width_ - 1];
        }
        long stall = 0;
        bool bland = false;
        const std::size_t limit = allow_artificial ? width_ - 1 : n_;
        for (;;) {
            std::size_t enter = width_;
            if (!bland) {
                Rational best(0);
                for (std::size_t j = 0; j < limit; ++j) {
                    if (is_basic(j)) continue;
                    if (red_[j] > best) { best = red_[j]; enter = j; }
                }
            } else {
                for (std::size_t j = 0; j < limit; ++j) {
                    if (is_basic(j)) continue;
                    if (red_[j] > 0) { enter = j; break; }
                }
            }
            if (enter == width_) return;  // optimal for this phase

            std::size_t leave = m_;
            Rational ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][enter] <= 0) continue;
                Rational r = a_[i][width_ - 1] / a_[i][enter];
                if (leave == m_ || r < ratio ||
                    (r == ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    ratio = r;
                }
            }
            if (leave == m_) {
                unbounded_ = true;
                return;
            }
            if (ratio == 0) {
                if (++stall > 64) bland = true;
            } else {
                stall = 0;
            }
            pivot(leave, enter);
        }
    }

    bool is_basic(std::size_t j) const {
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == j) return true;
        return false;
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / a_[r][c];
        if (inv != 1)
            for (std::size_t j = 0; j < width_; ++j)
                if (a_[r][j] != 0) a_[r][j] *= inv;
        a_[r][c] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rational f = a_[i][c];
            for (std::size_t j = 0; j < width_; ++j)
                if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
            a_[i][c] = 0;
        }
        if (red_[c] != 0) {
            Rational f = red_[c];
            for (std::size_t j = 0; j < width_ - 1; ++j)
                if (a_[r][j] != 0) red_[j] -= f * a_[r][j];
            red_[c] = 0;
        }
        basis_[r] = c;
    }

    // After phase 1: force artificial variables out of the basis where
    // possible; a row with no structural pivot entry is redundant.
    void expel_artificials(std::vector<bool>& dead_row) {
        dead_row.assign(m_, false);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            std::size_t piv = width_;
            for (std::size_t j = 0; j < n_; ++j)
                if (a_[i][j] != 0) { piv = j; break; }
            if (piv == width_) {
                dead_row[i] = true;  // 0 = 0 row
            } else {
                red_.assign(width_, Rational(0));
                pivot(i, piv);
            }
        }
    }

    Rational primal_value(std::size_t i) const { return a_[i][width_ - 1]; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return a_[i][j]; }
    bool unbounded() const { return unbounded_; }
    std::size_t rows() const { return m_; }
    std::size_t structural() const { return n_; }

private:
    std::size_t m_, n_, width_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> red_;
    std::vector<std::size_t> basis_;
    bool unbounded_ = false;
};

}  // namespace

LPResult solve_lp_max(const LinearProgram& lp) {
    if (lp.rows.size() != lp.rhs.size())
        throw std::invalid_argument("LP row/rhs mismatch");
    for (const auto& r : lp.rows)
        if (r.size() != lp.objective.size())
            throw std::invalid_argument("LP row width mismatch");

    const std::size_t m = lp.num_rows(), n = lp.num_cols();
    Tableau t(lp);

    // Phase 1: minimize the artificial sum, i.e. maximize its negation.
    std::vector<Rational> cost1(n + m, Rational(0));
    for (std::size_t j = n; j < n + m; ++j) cost1[j] = -1;
    t.run_phase(cost1, true);
    Rational art_sum(0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] >= n) art_sum += t.primal_value(i);
    LPResult res;
    if (art_sum != 0) {
        res.status = LPStatus::Infeasible;
        return res;
    }
    std::vector<bool> dead;
    t.expel_artificials(dead);

    // Phase 2: the real objective (maximize).
    std::vector<Rational> cost2(n + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) cost2[j] = lp.objective[j];
    t.run_phase(cost2, false);
    if (t.unbounded()) {
        res.status = LPStatus::Unbounded;
        return res;
    }

    res.status = LPStatus::Optimal;
    res.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] < n) res.solution[t.basis()[i]] = t.primal_value(i);
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (res.solution[j] != 0) res.value += lp.objective[j] * res.solution[j];

    // Duals: y = c_B B^{-1}; the artificial block of the tableau is B^{-1}
    // (up to the sign flips applied to negative-rhs rows, which we undo).
    res.duals.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bi = t.basis()[i];
        if (bi >= n || lp.objective[bi] == 0) continue;
        for (std::size_t k = 0; k < m; ++k) {
            const Rational& binv = t.entry(i, n + k);
            if (binv != 0) res.duals[k] += lp.objective[bi] * binv;
        }
    }
    for (std::size_t k = 0; k < m; ++k)
        if (lp.rhs[k] < 0) res.duals[k] = -res.duals[k];
    return res;
}

}  // namespace modscl

namespace modscl {

std::size_t RevisedSimplex::add_row(Rational rhs) {
    if (rhs < 0) throw std::invalid_argument("RevisedSimplex rows need rhs >= 0");
    std::size_t r = m_++;
    for (auto& row : binv_) row.push_back(Rational(0));
    binv_.push_back(std::vector<Rational>(m_, Rational(0)));
    binv_[r][r] = 1;
    basis_.push_back(-(static_cast<long>(r) + 1));
    rhs_.push_back(rhs);
    xb_.push_back(std::move(rhs));
    return r;
}

std::size_t RevisedSimplex::add_column(
    const std::vector<std::pair<std::size_t, Rational>>& entries, Rational objective) {
    cols_.push_back(Col{entries, std::move(objective)});
    return cols_.size() - 1;
}

void RevisedSimplex::pivot(std::size_t lv, std::size_t enter_col,
                           const std::vector<Rational>& d) {
    // binv row lv /= d[lv]; other rows -= d[i] * new row lv; same for xb
    Rational inv = 1 / d[lv];
    if (inv != 1) {
        for (std::size_t j = 0; j < m_; ++j)
            if (binv_[lv][j] != 0) binv_[lv][j] *= inv;
        xb_[lv] *= inv;
    }
    for (std::size_t i = 0; i < m_; ++i) {
        if (i == lv || d[i] == 0) continue;
        const Rational& f = d[i];
        for (std::size_t j = 0; j < m_; ++j)
            if (binv_[lv][j] != 0) binv_[i][j] -= f * binv_[lv][j];
        if (xb_[lv] != 0) xb_[i] -= f * xb_[lv];
    }
    basis_[lv] = static_cast<long>(enter_col);
}

std::vector<Rational> RevisedSimplex::direction(std::size_t col) const {
    std::vector<Rational> d(m_, Rational(0));
    for (const auto& [row, a] : cols_[col].entries)
        for (std::size_t i = 0; i < m_; ++i)
            if (binv_[i][row] != 0) d[i] += binv_[i][row] * a;
    return d;
}

void RevisedSimplex::drive_out_artificials() {
    std::vector<bool> basic(cols_.size(), false);
    for (long b : basis_)
        if (b >= 0) basic[static_cast<std::size_t>(b)] = true;
    for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= 0 || xb_[i] != 0) continue;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (basic[j]) continue;
            Rational t(0);
            for (const auto& [row, a] : cols_[j].entries)
                if (binv_[i][row] != 0) t += binv_[i][row] * a;
            if (t == 0) continue;
            pivot(i, j, direction(j));  // zero-level pivot keeps feasibility
            basic[j] = true;
            break;
        }
    }
}

bool RevisedSimplex::reoptimize() {
    long pivots = 0;
    const bool trace = std::getenv("MODSCL_PIVOT_TRACE") != nullptr;
    drive_out_artificials();

    // Reduced costs of every column against the current basis, maintained
    // incrementally across pivots (much cheaper than refreshing duals).
    std::vector<Rational> r0(cols_.size(), Rational(0)), r1(cols_.size(), Rational(0));
    {
        std::vector<Rational> y0(m_, Rational(0)), y1(m_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 0) {
                for (std::size_t j = 0; j < m_; ++j)
                    if (binv_[i][j] != 0) y0[j] += binv_[i][j];
            } else {
                const Rational& c1 = cols_[static_cast<std::size_t>(basis_[i])].obj;
                if (c1 != 0)
                    for (std::size_t j = 0; j < m_; ++j)
                        if (binv_[i][j] != 0) y1[j] -= c1 * binv_[i][j];
            }
        }
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            r1[j] = -cols_[j].obj;
            for (const auto& [row, a] : cols_[j].entries) {
                if (y0[row] != 0) r0[j] -= y0[row] * a;
                if (y1[row] != 0) r1[j] -= y1[row] * a;
            }
        }
    }

    for (;;) {
        if (trace && pivots % 500 == 0 && pivots > 0)
            std::cerr << "  pivots=" << pivots << "\n";
        if (++pivots > 2'000'000)
            throw std::logic_error("RevisedSimplex: pivot limit hit");
        // entering column: lexicographically most negative reduced cost
        std::size_t enter = cols_.size();
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            bool neg = r0[j] < 0 || (r0[j] == 0 && r1[j] < 0);
            if (!neg) continue;
            if (enter == cols_.size() || r0[j] < r0[enter] ||
                (r0[j] == r0[enter] && r1[j] < r1[enter]))
                enter = j;
        }
        if (enter == cols_.size()) {
            // optimal for the lex objective; feasible iff artificials are zero
            for (std::size_t i = 0; i < m_; ++i)
                if (basis_[i] < 0 && xb_[i] != 0) return false;
            return true;
        }
        std::vector<Rational> d = direction(enter);
        // lexicographic ratio test: minimize (xb_i, binv row i) / d_i, which
        // rules out cycling without Bland's crawl
        std::size_t lv = m_;
        Rational ratio;
        for (std::size_t i = 0; i < m_; ++i) {
            if (d[i] <= 0) continue;
            Rational r = xb_[i] / d[i];
            bool better;
            if (lv == m_) {
                better = true;
            } else if (r != ratio) {
                better = r < ratio;
            } else {
                better = false;
                for (std::size_t j = 0; j < m_; ++j) {
                    if (binv_[i][j] == 0 && binv_[lv][j] == 0) continue;
                    Rational a = binv_[i][j] / d[i], b = binv_[lv][j] / d[lv];
                    if (a != b) {
                        better = a < b;
                        break;
                    }
                }
            }
            if (better) {
                lv = i;
                ratio = r;
            }
        }
        if (lv == m_) throw std::logic_error("RevisedSimplex: unbounded lex objective");

        // update reduced costs along the pivot row before the basis changes:
        // alpha_j = (B^{-1} A_j)_{lv}, r_j -= (alpha_j / d_lv) * r_enter
        {
            const std::vector<Rational>& brow = binv_[lv];
            Rational e0 = r0[enter] / d[lv], e1 = r1[enter] / d[lv];
            for (std::size_t j = 0; j < cols_.size(); ++j) {
                if (j == enter) continue;
                Rational alpha(0);
                for (const auto& [row, a] : cols_[j].entries)
                    if (brow[row] != 0) alpha += brow[row] * a;
                if (alpha == 0) continue;
                if (e0 != 0) r0[j] -= alpha * e0;
                if (e1 != 0) r1[j] -= alpha * e1;
            }
            // the variable leaving into nonbasic status
            if (basis_[lv] >= 0) {
                std::size_t out = static_cast<std::size_t>(basis_[lv]);
                r0[out] = -e0;
                r1[out] = -e1;
            }
            r0[enter] = 0;
            r1[enter] = 0;
        }
        pivot(lv, enter, d);
    }
}

Rational RevisedSimplex::objective_value() const {
    Rational v(0);
    for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= 0) {
            const Rational& c = cols_[static_cast<std::size_t>(basis_[i])].obj;
            if (c != 0 && xb_[i] != 0) v += c * xb_[i];
        }
    return v;
}

std::vector<Rational> RevisedSimplex::solution() const {
    std::vector<Rational> x(cols_.size(), Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] >= 0) x[static_cast<std::size_t>(basis_[i])] = xb_[i];
    return x;
}

std::vector<Rational> RevisedSimplex::duals() const {
    // max-form duals: y = c_B B^{-1} with the original (maximized) objective
    std::vector<Rational> y(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] < 0) continue;
        const Rational& c = cols_[static_cast<std::size_t>(basis_[i])].obj;
        if (c == 0) continue;
        for (std::size_t j = 0; j < m_; ++j)
            if (binv_[i][j] != 0) y[j] += c * binv_[i][j];
    }
    return y;
}

}  // namespace modscl
