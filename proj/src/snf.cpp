#include "popdec/snf.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace popdec {

namespace {

// Shared elimination core. Transforms are maintained only when requested.
void smith_eliminate(ZMatrix& a, ZMatrix* u, ZMatrix* v) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero absolute value in the trailing block, scan order deterministic.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (!a(i, j).is_zero() && (pi < 0 || a(i, j).abs() < a(pi, pj).abs())) { pi = i; pj = j; }
      if (pi < 0) return;  // trailing block identically zero
      if (pi != t) { a.row(pi).swap(a.row(t)); if (u) u->row(pi).swap(u->row(t)); }
      if (pj != t) { a.col(pj).swap(a.col(t)); if (v) v->col(pj).swap(v->col(t)); }
      if (a(t, t).sign() < 0) { a.row(t) = -a.row(t); if (u) u->row(t) = -u->row(t); }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        Integer q = fdiv(a(i, t), a(t, t));
        if (!q.is_zero()) { a.row(i) -= a.row(t) * q; if (u) u->row(i) -= u->row(t) * q; }
        if (!a(i, t).is_zero()) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        Integer q = fdiv(a(t, j), a(t, t));
        if (!q.is_zero()) { a.col(j) -= a.col(t) * q; if (v) v->col(j) -= v->col(t) * q; }
        if (!a(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // Enforce that the pivot divides every remaining entry.
      bool divides_all = true;
      for (Eigen::Index i = t + 1; i < rows && divides_all; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (!a(t, t).divides(a(i, j))) {
            a.row(t) += a.row(i);
            if (u) u->row(t) += u->row(i);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& m) {
  SmithForm f;
  f.diag = m;
  f.left = ZMatrix::Zero(m.rows(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) f.left(i, i) = Integer(1);
  f.right = ZMatrix::Zero(m.cols(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) f.right(j, j) = Integer(1);
  smith_eliminate(f.diag, &f.left, &f.right);
  return f;
}

std::vector<Integer> invariant_factors(const ZMatrix& m) {
  ZMatrix a = m;
  smith_eliminate(a, nullptr, nullptr);
  std::vector<Integer> d;
  const Eigen::Index steps = std::min(a.rows(), a.cols());
  for (Eigen::Index t = 0; t < steps; ++t)
    if (!a(t, t).is_zero()) d.push_back(a(t, t));
  return d;
}

ZMatrix integer_kernel_basis(const QMatrix& m) {
  QMatrix k = kernel_basis(m);
  if (k.rows() == 0) return ZMatrix(0, m.cols());
  ZMatrix zk(k.rows(), k.cols());
  for (Eigen::Index i = 0; i < k.rows(); ++i)
    zk.row(i) = primitive(QVector(k.row(i).transpose())).transpose();
  return saturate_rows(zk);
}

ZMatrix saturate_rows(const ZMatrix& m) {
  if (m.rows() == 0) return m;
  SmithForm f = smith_normal_form(m);
  int k = 0;
  const Eigen::Index steps = std::min(f.diag.rows(), f.diag.cols());
  for (Eigen::Index t = 0; t < steps; ++t)
    if (!f.diag(t, t).is_zero()) ++k;
  // m = left^-1 * diag * right^-1, so the row span over Q is spanned by the
  // first k rows of right^-1, which are part of a unimodular basis of Z^n and
  // therefore span a saturated sublattice.
  QMatrix winv = inverse(to_rational(f.right));
  ZMatrix w = to_integer(winv);
  ZMatrix out(k, m.cols());
  for (int i = 0; i < k; ++i) out.row(i) = w.row(i);
  return row_hnf(out);
}

}  // namespace popdec
