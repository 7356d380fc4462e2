#pragma once

#include "exch/rational.hpp"

#include <vector>

namespace exch {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;      // meaningful when Optimal
    std::vector<Rational> x; // meaningful when Optimal
};

/// min c.x  subject to  A x = b, x >= 0, over exact rationals.
/// Two-phase tableau simplex with Bland's rule, so it terminates on
/// every input. Rows with b_i < 0 are sign-flipped internally.
LpResult solve_lp(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational> c);

/// Phase 1 only: is {A x = b, x >= 0} non-empty? Fills *witness with a
/// basic feasible point when given.
bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                 std::vector<Rational>* witness = nullptr);

} // namespace exch
