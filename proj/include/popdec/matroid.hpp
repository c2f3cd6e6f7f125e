#pragma once

// Realized matroids (column matroids of exact matrices), flat lattices with
// Moebius numbers, characteristic polynomials, and Bergman fans.

#include <vector>

#include "popdec/linear_ideal.hpp"
#include "popdec/matrix.hpp"

namespace popdec {

struct Flat {
  std::vector<int> elements;  // sorted
  int rank = 0;
  Integer mobius;  // mu(bottom, F)
};

class Matroid {
public:
  // Ground set = column indices of the realization.
  static Matroid from_columns(const GQMatrix& realization);

  int ground_size() const { return ground_; }
  int rank() const { return rank_; }
  int rank_of(const std::vector<int>& subset) const;
  std::vector<int> closure(const std::vector<int>& subset) const;
  bool has_loops() const;

  // All flats with Moebius numbers, sorted by (rank, elements).
  const std::vector<Flat>& flats() const;

private:
  int ground_ = 0;
  int rank_ = 0;
  GQMatrix cols_;  // realization, one inner vector per column
  mutable std::vector<Flat> flats_;
  mutable bool flats_done_ = false;
};

// chi(t) = sum_F mu(bottom,F) t^{rank - rank(F)}, loopless only.
// Returned as coefficients indexed by power of t.
std::vector<Integer> characteristic_polynomial(const Matroid& m);

// Betti numbers of the projective arrangement complement: b_k is the unsigned
// coefficient of t^(rank-1-k) in chi(t)/(t-1).
std::vector<Integer> projective_betti(const Matroid& m);

struct BergmanFan {
  int ambient = 0;  // coordinates: ground elements 0..m-1; element m maps to -sum
  struct Cone {
    std::vector<ZVector> generators;         // primitive, one per flag entry
    std::vector<std::vector<int>> flag;      // ascending chain of proper flats
  };
  std::vector<Cone> cones;  // includes the empty flag (origin)
};

// One cone per flag of proper flats, spanned by indicator vectors of the
// flats in the convention e_0..e_{m-1} = standard basis, e_m = -sum.
BergmanFan bergman_fan(const Matroid& m);

}  // namespace popdec
