#pragma once

// Nerve of the closed sign-cone cover of the torus, restricted to the zero set
// of an affine-linear ideal. Each coordinate plane of C^n is covered by four
// closed cones: at level 2 the four quadrants, at level 1 the two half-planes
// together with the two signed real axes. A cover element is a product of one
// cone per coordinate intersected with the zero set; a collection of cover
// elements spans a simplex when their common region meets the torus, which is
// decided by exact rational LP on the realified linear system.

#include <string>
#include <vector>

#include "popdec/chain.hpp"
#include "popdec/linear_ideal.hpp"

namespace popdec {

struct SignNerve {
  int n = 0;
  int level = 2;
  // One entry per nerve vertex: the cone index chosen in each coordinate.
  // Level 2 order: ++, +-, -+, -- (real sign then imaginary sign); level 1
  // order: upper half-plane, lower half-plane, positive axis, negative axis.
  std::vector<std::vector<int>> vertex_cones;
  SimplicialComplex complex;
  int max_dim = -1;  // simplex dimension cap applied during construction
};

// Generators must be affine-linear in the torus coordinates (every exponent
// zero or a standard basis vector) and the ideal essential. With max_dim >= 0
// the complex is truncated to simplices of at most that dimension, which keeps
// homology valid through degree max_dim - 1.
SignNerve sign_nerve(const LinearIdeal& ideal, int level = 2, int max_dim = -1);

// Betti numbers of the nerve, computed on the order complex of the poset of
// distinct cover-element intersections instead of the nerve itself. The two
// complexes are homotopy equivalent, but the poset stays small even where the
// nerve has simplices on every subset of a large clique of cover elements, so
// this route scales to ideals whose nerve skeleton is too big to enumerate.
// With max_degree >= 0 the result has exactly max_degree + 1 entries;
// otherwise trailing zeros are trimmed.
std::vector<int> nerve_betti(const LinearIdeal& ideal, int level = 2, int max_degree = -1);

std::string cone_label(int level, int cone);

}  // namespace popdec
