#pragma once

// Dense exact matrices. Everything is Eigen with the GMP-backed scalars; the
// elimination routines pivot in input order (first nonzero), which keeps every
// result bit-for-bit reproducible across runs and platforms.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "popdec/rational.hpp"

namespace popdec {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using ZMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using ZVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IVector = Eigen::VectorXi;
using IMatrix = Eigen::MatrixXi;

QMatrix to_rational(const ZMatrix& m);
QVector to_rational(const ZVector& v);
ZMatrix to_integer(const QMatrix& m);  // requires integral entries
ZVector to_integer(const QVector& v);
ZMatrix to_bigint(const IMatrix& m);
ZVector to_bigint(const IVector& v);
IMatrix to_int(const ZMatrix& m);  // requires entries to fit in int
IVector to_int(const ZVector& v);

// Reduced row echelon form in place; returns pivot columns. Row order of the
// non-pivot part is untouched; pivots chosen left to right, top to bottom.
std::vector<int> rref_in_place(QMatrix& m);

int rank(const QMatrix& m);
int rank(const ZMatrix& m);

// Rows form a basis of the right kernel {x : m x = 0}; row count equals
// cols - rank. One basis vector per RREF free column, in column order.
QMatrix kernel_basis(const QMatrix& m);

// Solve m x = rhs exactly; empty optional when inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& rhs);

Rational determinant(QMatrix m);
QMatrix inverse(const QMatrix& m);  // requires square nonsingular

// Scale a rational vector to the primitive integer vector with the same
// direction (gcd 1, sign preserved). Zero vector maps to zero.
ZVector primitive(const QVector& v);

// Saturated integer lattice basis of {x in Z^n : m x = 0}: rows generate the
// kernel lattice and the quotient is torsion free. Uses the rational kernel
// followed by a Hermite column reduction.
ZMatrix integer_kernel_basis(const QMatrix& m);

// Hermite normal form of the row lattice: returns H (rows = basis, echelon,
// pivots positive, entries above pivots reduced to [0, pivot)) with
// H = U * m for unimodular U. Zero rows trimmed.
ZMatrix row_hnf(const ZMatrix& m);

// Does v lie in the row lattice of hnf (output of row_hnf)?
bool in_row_lattice(const ZMatrix& hnf, const ZVector& v);

// Lexicographic comparison helpers used for canonical orderings.
int lex_compare(const QVector& a, const QVector& b);
int lex_compare(const IVector& a, const IVector& b);
bool lex_less(const QVector& a, const QVector& b);
bool lex_less(const IVector& a, const IVector& b);

}  // namespace popdec
