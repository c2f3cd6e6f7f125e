#pragma once

// Polyhedral complexes and regular subdivisions of lattice point sets.

#include <optional>
#include <utility>
#include <vector>

#include "popdec/polyhedron.hpp"

namespace popdec {

struct PolyCell {
  int id = -1;
  int dim = 0;
  std::vector<QVector> vertices;
  std::vector<QVector> rays;
  // For subdivisions: indices into the defining point list of every point
  // lying on this cell (vertices and interior lattice points alike).
  std::vector<int> points;
};

struct PolyComplex {
  int ambient_dim = 0;
  std::vector<PolyCell> cells;
  // Cover pairs (cell, facet): facet is a codimension-1 face of cell.
  std::vector<std::pair<int, int>> face_relation;

  Polyhedron cell_polyhedron(int id) const;
  std::vector<int> facets_of(int id) const;
  std::vector<int> cells_of_dim(int d) const;
  int max_dim() const;
};

// Projections of the lower faces of conv{(p_i, h_i)}, together with all their
// faces. Flat (affine) heights give the trivial subdivision. Point sets that
// span only a subspace are subdivided inside their affine hull.
PolyComplex regular_subdivision(const std::vector<ZVector>& points, const QVector& heights);

// Normalized lattice volume of a simplex with integer vertices: the product
// of the invariant factors of its edge matrix (= |det| in full dimension).
// Value 1 means unimodular. Throws on non-simplex input.
Integer normalized_volume(const std::vector<ZVector>& simplex_vertices);
Integer normalized_volume(const Polyhedron& simplex);

}  // namespace popdec
