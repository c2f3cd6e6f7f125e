#pragma once

// Exact polyhedra: H-representations, double-description conversion to
// generators, point hulls, bounded face lattices. Insertion order during the
// incremental construction is the input constraint order, which makes every
// intermediate generator list reproducible.

#include <vector>

#include "popdec/matrix.hpp"

namespace popdec {

// Generators of the cone {x : ineq_i . x <= 0, eq_j . x = 0}.
struct ConeGens {
  std::vector<QVector> rays;       // extreme rays modulo lineality, primitive
  std::vector<QVector> lineality;  // basis of the lineality space
};

ConeGens cone_generators(const QMatrix& ineqs, const QMatrix& eqs);

class Polyhedron {
public:
  explicit Polyhedron(QMatrix ineq_normals, QVector ineq_offsets, QMatrix eq_normals,
                      QVector eq_offsets);
  static Polyhedron from_inequalities(const QMatrix& a, const QVector& b);

  int ambient_dim() const { return static_cast<int>(ineq_normals_.cols()); }
  const QMatrix& ineq_normals() const { return ineq_normals_; }
  const QVector& ineq_offsets() const { return ineq_offsets_; }
  const QMatrix& eq_normals() const { return eq_normals_; }
  const QVector& eq_offsets() const { return eq_offsets_; }

  // V-representation, computed lazily and cached. Lineality directions are
  // reported as opposite ray pairs so conv(vertices)+cone(rays) is the set.
  const std::vector<QVector>& vertices() const;
  const std::vector<QVector>& rays() const;

  bool is_empty() const;
  bool is_bounded() const;
  bool contains(const QVector& x) const;
  int dim() const;  // affine dimension, -1 when empty

private:
  void ensure_vrep() const;

  QMatrix ineq_normals_;
  QVector ineq_offsets_;
  QMatrix eq_normals_;
  QVector eq_offsets_;

  mutable bool vrep_done_ = false;
  mutable std::vector<QVector> vertices_;
  mutable std::vector<QVector> rays_;
};

struct FaceLattice {
  std::vector<QVector> vertices;  // lex sorted
  QMatrix facet_normals;          // irredundant facets
  QVector facet_offsets;
  struct Face {
    int dim;
    std::vector<int> verts;   // indices into vertices, sorted
    std::vector<int> facets;  // indices of facets containing this face, sorted
  };
  std::vector<Face> faces;  // sorted by (dim, verts); includes the full polytope
  std::vector<int> f_vector() const;
};

// Bounded polytopes only; throws on unbounded/empty input.
FaceLattice face_lattice(const Polyhedron& p);

// Exact coordinates of a point configuration inside its affine hull: a greedy
// independent-direction basis anchored at the first point, with the linear map
// taking ambient points to chart coordinates.
struct AffineChart {
  QVector base;      // first point
  QMatrix basis;     // rows span the direction space, dim x ambient
  QMatrix to_chart;  // chart coords of x are to_chart * (x - base)
  int dim = 0;
  std::vector<QVector> coords;  // chart coordinates of the input points
};
AffineChart affine_chart(const std::vector<QVector>& pts);

// Convex hull of a point set: H-representation in the ambient space
// (inequalities plus affine-hull equalities).
Polyhedron hull_of_points(const std::vector<QVector>& pts);

// H-representation of conv(vertices) + cone(rays), via the dual cone of the
// homogenized generator cone.
Polyhedron polyhedron_from_generators(const std::vector<QVector>& vertices,
                                      const std::vector<QVector>& rays);

}  // namespace popdec
