#include "popdec/lp.hpp"

#include <stdexcept>
#include <vector>

namespace popdec {

namespace {

// Dense tableau simplex on: minimize cost.z, M z = rhs, z >= 0, rhs >= 0
// maintained. basis[i] = variable of row i. The reduced-cost row is kept
// current through pivots, entering columns are picked by most negative
// reduced cost, and after a long stall the rule switches to Bland's so
// cycling cannot occur.
struct Tableau {
  QMatrix m;  // rows x vars
  QVector rhs;
  QVector red;   // reduced costs per variable
  Rational obj;  // current objective value
  std::vector<int> basis;

  void pivot(int row, int col) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<int> nz;
    nz.reserve(cols);
    for (int j = 0; j < cols; ++j)
      if (!m(row, j).is_zero()) nz.push_back(j);
    Rational inv = Rational(1) / m(row, col);
    if (inv != Rational(1)) {
      for (int j : nz) m(row, j) *= inv;
      rhs(row) *= inv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (int j : nz) m(i, j) -= f * m(row, j);
      rhs(i) -= f * rhs(row);
    }
    Rational f = red(col);
    if (!f.is_zero()) {
      for (int j : nz) red(j) -= f * m(row, j);
      obj += f * rhs(row);
    }
    basis[row] = col;
  }

  // Returns false when unbounded in the given cost. With stop_at_zero the
  // loop quits as soon as the objective reaches zero; phase 1 only needs a
  // feasible point, not a certificate of optimality.
  bool minimize(const QVector& cost, bool stop_at_zero = false) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    red = cost;
    obj = Rational(0);
    for (int i = 0; i < rows; ++i) {
      const Rational& cb = cost(basis[i]);
      if (cb.is_zero()) continue;
      for (int j = 0; j < cols; ++j)
        if (!m(i, j).is_zero()) red(j) -= cb * m(i, j);
      obj += cb * rhs(i);
    }
    long iter = 0;
    const long bland_after = 4L * (rows + cols) + 32;
    while (true) {
      if (stop_at_zero && obj.is_zero()) return true;
      int enter = -1;
      if (++iter > bland_after) {
        for (int j = 0; j < cols; ++j)
          if (red(j) < Rational(0)) {
            enter = j;
            break;
          }
      } else {
        for (int j = 0; j < cols; ++j)
          if (red(j) < Rational(0) && (enter < 0 || red(j) < red(enter))) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows; ++i) {
        if (m(i, enter) <= Rational(0)) continue;
        Rational ratio = rhs(i) / m(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult lp_optimize(const QVector& obj, const QMatrix& A, const QVector& b,
                     const QMatrix& C, const QVector& d, bool maximize) {
  const int n = static_cast<int>(obj.size());
  const int ma = static_cast<int>(A.rows());
  const int mc = static_cast<int>(C.rows());
  const int rows = ma + mc;
  // Variables: x+ (n), x- (n), slacks (ma), artificials (rows).
  const int nv = 2 * n + ma;
  Tableau t;
  t.m = QMatrix::Constant(rows, nv + rows, Rational(0));
  t.rhs = QVector::Constant(rows, Rational(0));
  t.basis.resize(rows);
  for (int i = 0; i < ma; ++i) {
    for (int j = 0; j < n; ++j) { t.m(i, j) = A(i, j); t.m(i, n + j) = -A(i, j); }
    t.m(i, 2 * n + i) = Rational(1);
    t.rhs(i) = b(i);
  }
  for (int i = 0; i < mc; ++i) {
    for (int j = 0; j < n; ++j) { t.m(ma + i, j) = C(i, j); t.m(ma + i, n + j) = -C(i, j); }
    t.rhs(ma + i) = d(i);
  }
  for (int i = 0; i < rows; ++i) {
    if (t.rhs(i) < Rational(0)) { t.m.row(i) = -t.m.row(i); t.rhs(i) = -t.rhs(i); }
    t.m(i, nv + i) = Rational(1);
    t.basis[i] = nv + i;
  }

  // Phase 1.
  QVector phase1 = QVector::Constant(nv + rows, Rational(0));
  for (int i = 0; i < rows; ++i) phase1(nv + i) = Rational(1);
  if (!t.minimize(phase1, true)) throw std::logic_error("lp: phase 1 unbounded");
  Rational p1 = Rational(0);
  for (int i = 0; i < rows; ++i)
    if (t.basis[i] >= nv) p1 += t.rhs(i);
  if (!p1.is_zero()) return {LPStatus::Infeasible, Rational(0), QVector()};

  // Pure feasibility query: the phase 1 point is already an optimum.
  bool zero_obj = true;
  for (int j = 0; j < n && zero_obj; ++j) zero_obj = obj(j).is_zero();
  if (zero_obj) {
    QVector z = QVector::Constant(nv, Rational(0));
    for (int i = 0; i < rows; ++i)
      if (t.basis[i] < nv) z(t.basis[i]) = t.rhs(i);
    QVector x(n);
    for (int j = 0; j < n; ++j) x(j) = z(j) - z(n + j);
    return {LPStatus::Optimal, Rational(0), x};
  }

  // Drive leftover zero-value artificials out of the basis.
  for (int i = 0; i < rows; ++i) {
    if (t.basis[i] < nv) continue;
    int col = -1;
    for (int j = 0; j < nv; ++j)
      if (!t.m(i, j).is_zero()) { col = j; break; }
    if (col >= 0) t.pivot(i, col);
    // Fully zero row: redundant constraint, harmless to leave in place.
  }

  // Phase 2: forbid artificials by an exact "never enter" trick: strip them.
  Tableau t2;
  t2.m = t.m.leftCols(nv);
  t2.rhs = t.rhs;
  t2.basis = t.basis;
  bool still_artificial = false;
  for (int i = 0; i < rows; ++i)
    if (t2.basis[i] >= nv) still_artificial = true;
  if (still_artificial) {
    // Redundant zero rows keep an artificial basic at value zero; remove rows.
    std::vector<int> keep;
    for (int i = 0; i < rows; ++i)
      if (t2.basis[i] < nv) keep.push_back(i);
    QMatrix mk(keep.size(), nv);
    QVector rk(keep.size());
    std::vector<int> bk;
    for (size_t i = 0; i < keep.size(); ++i) {
      mk.row(i) = t2.m.row(keep[i]);
      rk(i) = t2.rhs(keep[i]);
      bk.push_back(t2.basis[keep[i]]);
    }
    t2.m = mk; t2.rhs = rk; t2.basis = bk;
  }

  QVector cost = QVector::Constant(nv, Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational cj = maximize ? -obj(j) : obj(j);
    cost(j) = cj;
    cost(n + j) = -cj;
  }
  if (!t2.minimize(cost)) return {LPStatus::Unbounded, Rational(0), QVector()};

  QVector z = QVector::Constant(nv, Rational(0));
  for (size_t i = 0; i < t2.basis.size(); ++i) z(t2.basis[i]) = t2.rhs(i);
  QVector x(n);
  for (int j = 0; j < n; ++j) x(j) = z(j) - z(n + j);
  Rational val = Rational(0);
  for (int j = 0; j < n; ++j) val += obj(j) * x(j);
  return {LPStatus::Optimal, val, x};
}

bool lp_feasible(const QMatrix& A, const QVector& b, const QMatrix& C, const QVector& d) {
  const int n = static_cast<int>(std::max(A.cols(), C.cols()));
  QVector zero = QVector::Constant(n, Rational(0));
  LPResult r = lp_optimize(zero, A, b, C, d, false);
  return r.status != LPStatus::Infeasible;
}

}  // namespace popdec
