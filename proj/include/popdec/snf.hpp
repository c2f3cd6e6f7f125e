#pragma once

// Smith normal form over the integers with full transform bookkeeping.

#include "popdec/matrix.hpp"

namespace popdec {

struct SmithForm {
  ZMatrix left;   // unimodular, rows x rows
  ZMatrix diag;   // same shape as input, diagonal d_1 | d_2 | ..., d_i >= 0
  ZMatrix right;  // unimodular, cols x cols
};

// left * m * right == diag; successive diagonal entries divide each other.
SmithForm smith_normal_form(const ZMatrix& m);

// Nonzero diagonal entries of the Smith form, in order.
std::vector<Integer> invariant_factors(const ZMatrix& m);

// Basis (rows) of the saturation of the row span: span_Q(rows) cap Z^n.
ZMatrix saturate_rows(const ZMatrix& m);

}  // namespace popdec
