#pragma once

// Dual intersection diagrams of smooth tropical hypersurfaces: per-vertex
// lattice charts built from the exponent differences of the dual simplices,
// phase offsets of the lowered leading coefficients, transitions between
// adjacent charts, and the angle-space type of every cell.

#include <map>
#include <vector>

#include "popdec/tropical.hpp"

namespace popdec {

// What the initial form at a cell cuts out of the torus, up to a monomial
// change of coordinates: a full subtorus coset (binomial initial) or the
// complement of an essential arrangement of s hyperplanes in P^{s-2}, times
// a torus factor.
struct CellAngleKind {
  bool full_torus = false;
  int complement_dim = 0;  // projective dimension of the arrangement piece
  int torus_factor = 0;
};

struct VertexChart {
  int cell = -1;  // cell id in sigma
  QVector vertex;
  ZVector base;                // base monomial of the dual simplex
  std::vector<ZVector> basis;  // exponent differences m - base, lex-descending
  QVector phase_offset;        // half-turn units, one entry per basis element
};

// Chart-to-chart change of lattice coordinates across a shared cell:
// y_to = matrix * y_from + translation, phases in half-turn units mod 2.
struct ChartTransition {
  int from = -1, to = -1;  // indices into charts
  int cell = -1;           // the shared cell of sigma
  ZMatrix matrix;
  QVector translation;
};

struct DualComplexDiagram {
  TropicalComplex sigma;
  std::vector<VertexChart> charts;  // sorted by vertex, lex-ascending
  std::vector<ChartTransition> transitions;
  std::map<int, CellAngleKind> cell_angle_kind;  // every cell of sigma
};

// Requires a tropically smooth input. Charts sit at the cells of sigma dual
// to the maximal simplices of the subdivision; the transition matrix from
// chart i to chart j is rows(basis_j) * rows(basis_i)^{-1}, and the phase
// translation is theta_j - matrix * theta_i.
DualComplexDiagram dual_intersection_complex(const TropicalPolynomial& f);

}  // namespace popdec
