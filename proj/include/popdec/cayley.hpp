#pragma once

// Cayley polytopes of dilated standard simplices and the unimodular
// triangulation certificate for tropical complete intersections.

#include <string>
#include <vector>

#include "popdec/subdivision.hpp"
#include "popdec/tropical_poly.hpp"

namespace popdec {

// conv of the union of the d_i-dilated standard n-simplices, the i-th copy
// placed at marker height e_{n+i} in R^{n+r}.
Polyhedron cayley_polytope(int n, const std::vector<int>& degrees);

struct CayleyCertificate {
  bool certified = false;
  // "smooth" on success; otherwise "non-stable configuration" when the
  // failing cell mixes two or more points of two or more factors, else
  // "not a unimodular triangulation".
  std::string status;
  std::vector<std::string> claims;  // statements backed by the certificate
  int failing_cell = -1;            // Cayley subdivision cell id on failure
};

// Lifts every term (m, e_i) of the system by its valuation and subdivides
// the Cayley polytope. A unimodular triangulation certifies that each
// hypersurface is smooth, that the hypersurfaces intersect transversely, and
// that every local intersection multiplicity is 1. Each f_i must have full
// support on d_i * Delta_n; degenerate support is rejected.
CayleyCertificate certify_ci_smooth(const std::vector<TropicalPolynomial>& system);

}  // namespace popdec
