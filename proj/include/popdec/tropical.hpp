#pragma once

// Tropical hypersurfaces as weighted polyhedral complexes dual to regular
// subdivisions, balancing verification, smoothness certificates, and stable
// transverse intersections.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "popdec/subdivision.hpp"
#include "popdec/tropical_poly.hpp"

namespace popdec {

struct TropicalComplex {
  int ambient_dim = 0;
  int dim = -1;  // dimension of the maximal cells, -1 when empty
  PolyComplex cells;
  std::map<int, Integer> weights;             // maximal cell id -> multiplicity
  std::map<int, ResiduePolynomial> initial;   // cell id -> initial form
  // For hypersurfaces: the subdivision cell each tropical cell is dual to.
  std::map<int, int> dual_cell;
};

// Cells are dual to the positive-dimensional cells of the regular subdivision
// of the exponent vectors lifted by the valuations: the cell dual to C is the
// closure of the weights w whose minimizing terms are exactly the points on
// C. Facet weights are the lattice lengths of the dual edges. A polynomial
// with fewer than two terms gives the empty complex.
TropicalComplex tropical_hypersurface(const TropicalPolynomial& f);

struct BalanceEntry {
  int tau = -1;      // codimension-1 cell id
  std::string sum;   // e.g. "1*(-1,-1)+1*(0,-1)+1*(1,0)+2*(0,1)=0"
  bool ok = false;
};

struct BalanceReport {
  bool balanced = true;
  std::vector<BalanceEntry> entries;  // one per codimension-1 cell
};

// At every codimension-1 cell tau, the weighted primitive directions of the
// incident maximal cells must cancel in the quotient of the ambient lattice
// by tau's direction lattice. Each entry records the weighted sum, with the
// direction classes written out in quotient coordinates (for a curve at a
// vertex these are the primitive edge directions themselves).
BalanceReport check_balanced(const TropicalComplex& t);

struct VertexWitness {
  QVector vertex;               // point of the tropical complex (dual vertex)
  std::vector<ZVector> basis;   // lex-descending exponent differences
  std::string initial;          // printed initial form at the vertex
};

struct SmoothnessReport {
  bool smooth = false;
  // One witness per vertex when smooth: the exponent differences m - m0 from
  // the base monomial of the dual simplex form a basis of the lattice they
  // saturate; the initial form is affine linear in that basis.
  std::vector<VertexWitness> witnesses;
  // When not smooth: the vertex with lex-smallest coordinates whose dual cell
  // is not a unimodular simplex, with its (non-linear) initial form.
  std::optional<VertexWitness> counterexample;
};

// A tropical hypersurface is smooth exactly when the dual regular
// subdivision is a unimodular triangulation.
SmoothnessReport is_tropically_smooth(const TropicalPolynomial& f);

// Base monomial of a set of exponent vectors: minimal total degree, with
// ties resolved to the lex-largest. The associated chart basis is the
// lex-descending list of differences m - base.
ZVector base_monomial(const std::vector<ZVector>& pts);
std::vector<ZVector> exponent_basis(const std::vector<ZVector>& pts);

// Pairwise intersections of cells, with the weight of a maximal intersection
// sigma1 cap sigma2 equal to m1 * m2 * [N : N_1 + N_2], the lattice index of
// the sum of the direction lattices. Throws if two maximal cells intersect
// without their spans adding up to the ambient space; the output carries
// weights but no initial forms.
TropicalComplex stable_intersection_transverse(const TropicalComplex& a,
                                               const TropicalComplex& b);

}  // namespace popdec
