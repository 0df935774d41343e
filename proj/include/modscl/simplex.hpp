#pragma once

#include <vector>

#include "modscl/rational.hpp"

namespace modscl {

/// Equality-form linear program over exact rationals:
///   maximize objective . x   subject to   rows . x = rhs,  x >= 0.
/// Every coefficient is an exact rational; the solver never rounds.
struct LinearProgram {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return objective.size(); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;                  ///< objective at the optimum
    std::vector<Rational> solution;  ///< primal vector
    std::vector<Rational> duals;     ///< one multiplier per constraint row
};

/// Dense two-phase tableau simplex. Dantzig entering rule with an automatic
/// switch to Bland's rule after a degeneracy streak, which keeps the
/// termination guarantee without Bland's usual crawl.
LPResult solve_lp_max(const LinearProgram& lp);

/// Incremental exact simplex for column generation: rows and sparse columns
/// are added on the fly and the basis survives across re-optimizations.
/// Internally minimizes (sum of artificials, -objective) lexicographically,
/// so feasibility restoration and optimization share one pivot loop.
/// Precondition used by this code base: a freshly added row has zero
/// coefficients on every existing column, so its artificial enters the basis
/// at the (nonnegative) right-hand side and B^{-1} extends trivially.
class RevisedSimplex {
public:
    /// rhs must be >= 0.
    std::size_t add_row(Rational rhs);

    /// entries: (row, coefficient), rows must already exist.
    std::size_t add_column(const std::vector<std::pair<std::size_t, Rational>>& entries,
                           Rational objective);

    /// Re-optimizes; returns false only if the program is infeasible
    /// (artificial sum cannot reach zero).
    bool reoptimize();

    Rational objective_value() const;
    std::vector<Rational> solution() const;          ///< per structural column
    std::vector<Rational> duals() const;             ///< per row, max-form multipliers
    std::size_t rows() const { return m_; }
    std::size_t cols() const { return cols_.size(); }

private:
    struct Col {
        std::vector<std::pair<std::size_t, Rational>> entries;
        Rational obj;
    };

    void pivot(std::size_t leave_pos, std::size_t enter_col,
               const std::vector<Rational>& direction);
    std::vector<Rational> direction(std::size_t col) const;  ///< B^{-1} A_col
    /// Degenerate artificials block entering columns under the lex rule;
    /// pivot them out at zero level whenever any column covers their row.
    void drive_out_artificials();

    std::size_t m_ = 0;
    std::vector<std::vector<Rational>> binv_;  // m x m
    std::vector<long> basis_;                  // >= 0: column id, -(i+1): artificial of row i
    std::vector<Rational> rhs_;
    std::vector<Rational> xb_;
    std::vector<Col> cols_;
};

}  // namespace modscl
