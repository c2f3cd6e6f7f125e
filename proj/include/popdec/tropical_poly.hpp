#pragma once

// Polynomials over the field of Puiseux-style series in t with Gaussian
// rational leading coefficients, given by their tropical data: per term an
// exponent vector, the valuation (lowest t-power), the phase of the leading
// coefficient, and optionally the coefficient itself. A term may instead be
// marked generic, standing for an unspecified coefficient of valuation zero.

#include <optional>
#include <string>
#include <vector>

#include "popdec/linear_ideal.hpp"
#include "popdec/matrix.hpp"

namespace popdec {

struct TropicalTerm {
  ZVector exponent;
  Rational valuation;
  // Argument of the leading coefficient in half-turn units, normalized to
  // [0, 2). Generic terms carry phase 0.
  Rational phase;
  bool generic = false;
  std::optional<GaussianRational> lead_coeff;
};

struct TropicalPolynomial {
  int n = 0;
  std::vector<TropicalTerm> terms;
};

// Phase of a nonzero Gaussian rational in half-turn units, in [0, 2). Only
// arguments at multiples of a quarter turn are rational in these units
// (Niven: rational tangents at rational angles are 0 and +-1), so anything
// off the axes and diagonals returns nothing.
std::optional<Rational> half_turn_phase(const GaussianRational& c);

// Grammar: terms separated by '+'/'-'; a term is a '*'-separated product of
// rational literals, 'i', 'G' (marks the term generic), powers of t
// ('t', 't^-2', 't^(3/2)'), and variable powers ('x^2', 'y^-1'). Variables
// are x, y, z or x1..xn, not mixed; n is inferred unless given. Exponents of
// variables are integers; exponents of t are rational. Duplicate exponent
// vectors and coefficients without a rational half-turn phase are rejected.
TropicalPolynomial parse_tropical(const std::string& text, int n = -1);

// A polynomial over the residue field, as produced by initial forms and
// chart computations. Terms are kept in lex-descending exponent order.
struct ResidueTerm {
  ZVector exponent;
  GaussianRational coeff;
  bool generic = false;
};

struct ResiduePolynomial {
  int n = 0;
  std::vector<ResidueTerm> terms;

  // Rendered with the given variable names, terms joined by " + " / " - ",
  // e.g. "x^3 + x^2*y + x*y + x". Defaults to variable_names(n).
  std::string str() const;
  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const ResiduePolynomial& a, const ResiduePolynomial& b);
};

// x, y, z when they suffice, otherwise x1..xn; chart_names gives u, v, w or
// u1..uk for chart generators.
std::vector<std::string> variable_names(int n);
std::vector<std::string> chart_names(int k);

// Residue of a single term: its leading coefficient, or 1 for generic terms,
// or the unit of the term's phase when only the phase is known.
ResidueTerm residue_of_term(const TropicalTerm& t);

// "x^2*y", "x", "1" and so on; exponents may be negative.
std::string monomial_str(const ZVector& e, const std::vector<std::string>& names);

// Sum of the residues of the terms minimizing valuation + <exponent, w>.
// Generic terms contribute residue 1 and keep their generic flag.
ResiduePolynomial initial_form(const TropicalPolynomial& f, const QVector& w);

}  // namespace popdec
