#pragma once

// Exact-rational linear programming, two-phase primal simplex. Entering
// columns are chosen by most negative reduced cost with a switch to Bland's
// rule after long stalls, so the method terminates on every input.
// Variables are free; constraints are A x <= b and C x = d.

#include "popdec/matrix.hpp"

namespace popdec {

enum class LPStatus { Infeasible, Optimal, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;  // objective at optimum, meaningful for Optimal
  QVector x;       // a witness point, meaningful for Optimal
};

bool lp_feasible(const QMatrix& A, const QVector& b, const QMatrix& C, const QVector& d);

LPResult lp_optimize(const QVector& obj, const QMatrix& A, const QVector& b,
                     const QMatrix& C, const QVector& d, bool maximize);

}  // namespace popdec
