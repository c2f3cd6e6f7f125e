#include "popdec/matrix.hpp"

#include <stdexcept>

namespace popdec {

QMatrix to_rational(const ZMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

QVector to_rational(const ZVector& v) {
  QVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

ZMatrix to_integer(const QMatrix& m) {
  ZMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) throw std::invalid_argument("to_integer: non-integral entry");
      r(i, j) = m(i, j).num();
    }
  return r;
}

ZVector to_integer(const QVector& v) {
  ZVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_integer()) throw std::invalid_argument("to_integer: non-integral entry");
    r(i) = v(i).num();
  }
  return r;
}

ZMatrix to_bigint(const IMatrix& m) {
  ZMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Integer(m(i, j));
  return r;
}

ZVector to_bigint(const IVector& v) {
  ZVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Integer(v(i));
  return r;
}

IMatrix to_int(const ZMatrix& m) {
  IMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).fits_int64()) throw std::overflow_error("to_int: entry too large");
      r(i, j) = static_cast<int>(m(i, j).to_int64());
    }
  return r;
}

IVector to_int(const ZVector& v) {
  IVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).fits_int64()) throw std::overflow_error("to_int: entry too large");
    r(i) = static_cast<int>(v(i).to_int64());
  }
  return r;
}

std::vector<int> rref_in_place(QMatrix& m) {
  std::vector<int> pivots;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (!m(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index j = col; j < cols; ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int rank(const QMatrix& m) {
  QMatrix c = m;
  return static_cast<int>(rref_in_place(c).size());
}

int rank(const ZMatrix& m) { return rank(to_rational(m)); }

QMatrix kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMatrix basis(cols - static_cast<Eigen::Index>(pivots.size()), cols);
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    for (Eigen::Index j = 0; j < cols; ++j) basis(out, j) = Rational(0);
    basis(out, free) = Rational(1);
    for (size_t k = 0; k < pivots.size(); ++k) basis(out, pivots[k]) = -r(static_cast<Eigen::Index>(k), free);
    ++out;
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& rhs) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  QMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = rhs;
  std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  QVector x = QVector::Constant(cols, Rational(0));
  for (size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = aug(static_cast<Eigen::Index>(k), cols);
  return x;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  const Eigen::Index n = m.rows();
  Rational det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (!m(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) { m.row(piv).swap(m.row(col)); det = -det; }
    det *= m(col, col);
    Rational inv = Rational(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Rational f = m(i, col) * inv;
      for (Eigen::Index j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  const Eigen::Index n = m.rows();
  QMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) aug(i, n + j) = Rational(i == j ? 1 : 0);
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n) throw std::invalid_argument("inverse: singular matrix");
  return aug.rightCols(n);
}

ZVector primitive(const QVector& v) {
  const Eigen::Index n = v.size();
  Integer l(1);
  for (Eigen::Index i = 0; i < n; ++i) l = lcm(l, v(i).den());
  ZVector w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = (v(i) * Rational(l)).num();
  Integer g(0);
  for (Eigen::Index i = 0; i < n; ++i) g = gcd(g, w(i));
  if (g.is_zero()) return w;
  for (Eigen::Index i = 0; i < n; ++i) w(i) = divexact(w(i), g);
  return w;
}

ZMatrix row_hnf(const ZMatrix& m) {
  ZMatrix h = m;
  const Eigen::Index rows = h.rows(), cols = h.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    // Euclid sweep: make all entries below `row` in this column zero.
    while (true) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = row; i < rows; ++i)
        if (!h(i, col).is_zero()) {
          if (piv < 0 || h(i, col).abs() < h(piv, col).abs()) piv = i;
        }
      if (piv < 0) break;
      if (piv != row) h.row(piv).swap(h.row(row));
      bool clean = true;
      for (Eigen::Index i = row + 1; i < rows; ++i) {
        if (h(i, col).is_zero()) continue;
        Integer q = fdiv(h(i, col), h(row, col));
        if (!q.is_zero())
          for (Eigen::Index j = 0; j < cols; ++j) h(i, j) -= q * h(row, j);
        if (!h(i, col).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (row < rows && !h(row, col).is_zero()) {
      if (h(row, col).sign() < 0)
        for (Eigen::Index j = 0; j < cols; ++j) h(row, j) = -h(row, j);
      for (Eigen::Index i = 0; i < row; ++i) {
        Integer q = fdiv(h(i, col), h(row, col));
        if (!q.is_zero())
          for (Eigen::Index j = 0; j < cols; ++j) h(i, j) -= q * h(row, j);
      }
      ++row;
    }
  }
  ZMatrix out(row, cols);
  for (Eigen::Index i = 0; i < row; ++i) out.row(i) = h.row(i);
  return out;
}

bool in_row_lattice(const ZMatrix& hnf, const ZVector& v) {
  ZVector w = v;
  const Eigen::Index cols = hnf.cols();
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols; ++col) {
    Eigen::Index piv = -1;
    if (r < hnf.rows()) {
      for (Eigen::Index j = 0; j < cols; ++j)
        if (!hnf(r, j).is_zero()) { piv = j; break; }
    }
    if (piv == col) {
      if (!w(col).is_zero()) {
        if (!hnf(r, col).divides(w(col))) return false;
        Integer q = divexact(w(col), hnf(r, col));
        for (Eigen::Index j = 0; j < cols; ++j) w(j) -= q * hnf(r, j);
      }
      ++r;
    } else if (!w(col).is_zero()) {
      return false;
    }
  }
  return true;
}

// integer_kernel_basis lives in snf.cpp (it uses the Smith transforms).

int lex_compare(const QVector& a, const QVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return -1;
    if (b(i) < a(i)) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

int lex_compare(const IVector& a, const IVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) < b(i)) return -1;
    if (a(i) > b(i)) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

bool lex_less(const QVector& a, const QVector& b) { return lex_compare(a, b) < 0; }
bool lex_less(const IVector& a, const IVector& b) { return lex_compare(a, b) < 0; }

}  // namespace popdec
