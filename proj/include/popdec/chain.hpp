#pragma once

// Integer chain complexes: Betti numbers and torsion via Smith normal form,
// plus abstract simplicial complexes with their boundary matrices.

#include <map>
#include <vector>

#include "popdec/matrix.hpp"

namespace popdec {

struct Homology {
  std::vector<int> betti;                        // free ranks by degree
  std::vector<std::vector<Integer>> torsion;     // invariant factors > 1, by degree
};

// boundaries[k] maps degree-k chains to degree-(k-1) chains (so boundaries[0]
// is the 0 x (number of vertices) matrix). Verifies boundary . boundary = 0.
Homology chain_homology(const std::vector<ZMatrix>& boundaries);

// One integer matrix as sparse rows of (column, value) entries.
using SparseRows = std::vector<std::map<int, Integer>>;

// As above, but for complexes whose boundary matrices are too large to hold
// densely. cells[k] is the number of degree-k chains (the column count of
// boundaries[k]).
Homology chain_homology(const std::vector<SparseRows>& boundaries, const std::vector<int>& cells);

struct SimplicialComplex {
  // simplices[k] = sorted list of sorted (k+1)-element vertex index sets
  std::vector<std::vector<std::vector<int>>> simplices;

  static SimplicialComplex from_maximal(const std::vector<std::vector<int>>& maximal);
  std::vector<ZMatrix> boundaries() const;
  std::vector<SparseRows> sparse_boundaries() const;
  std::vector<int> cell_counts() const;
  int euler_characteristic() const;
};

Homology simplicial_homology(const SimplicialComplex& sc);

}  // namespace popdec
