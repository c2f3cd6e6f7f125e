#pragma once

// Ideals generated by affine-linear forms in Laurent variables, with Gaussian
// rational coefficients, and their homogeneous hyperplane arrangements.

#include <string>
#include <vector>

#include "popdec/matrix.hpp"

namespace popdec {

struct GaussianRational {
  Rational re, im;
  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == Rational(0) && im == Rational(0); }
  GaussianRational conj() const { return {re, -im}; }
  std::string str() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using GQMatrix = std::vector<std::vector<GaussianRational>>;

int rank(const GQMatrix& m);
// Rows spanning {x : m x = 0}, echelonized deterministically in column order.
GQMatrix kernel_rows(const GQMatrix& m);

struct IdealTerm {
  ZVector exponent;
  GaussianRational coeff;
};

struct LinearIdeal {
  int n = 0;  // torus dimension
  std::vector<std::vector<IdealTerm>> generators;

  // Monomials in order of first appearance across all generators, and the
  // coefficient matrix with one row per generator, one column per monomial.
  std::vector<ZVector> monomial_list() const;
  GQMatrix coefficient_matrix(const std::vector<ZVector>& monomials) const;
};

// Grammar: generators separated by ';', each a signed sum of terms; a term is
// a '*'-separated product of rational literals 'p' or 'p/q', the imaginary
// unit 'i', and variable powers 'x3^-2' (exponent defaults to 1). Variables
// are x1..xn; n is inferred from the largest index unless given.
LinearIdeal parse_linear_ideal(const std::string& text, int n = -1);

struct Arrangement {
  int proj_dim = 0;           // d, the arrangement lives in P^d
  GQMatrix hyperplanes;       // one row per hyperplane: linear form in d+1 vars
  GQMatrix embedding;         // B, rows span ker A; hyperplane j is column j of B
  std::vector<ZVector> monomials;
  bool essential = true;
};

// Homogeneous hyperplane arrangement of the ideal: kernel basis B of the
// coefficient matrix A, normalized so the first independent monomial columns
// of B form an identity block.
Arrangement arrangement_from_ideal(const LinearIdeal& ideal);

// True iff the arrangement construction applies: independent generators, each
// affine-linear in some lattice basis (its exponent differences span a
// saturated sublattice). The kernel matrix of such an ideal has full row
// rank, which makes the associated arrangement essential.
bool is_essential(const LinearIdeal& ideal);

// Ideal generated by the initial forms of all circuit forms of the ideal at
// weight w. Coefficients must have valuation zero (they do; no valuations are
// carried here), so a term's weight is <exponent, w>.
LinearIdeal initial_linear_ideal(const LinearIdeal& ideal, const QVector& w);

// Minimal-support nonzero vectors of the row space of the coefficient matrix,
// one representative per support, sorted by support.
std::vector<std::vector<GaussianRational>> circuit_forms(const GQMatrix& a);

// Do two ideals have the same degree-1 part? Compares row spaces of the
// coefficient matrices over a shared monomial list.
bool same_linear_span(const LinearIdeal& a, const LinearIdeal& b);

}  // namespace popdec
