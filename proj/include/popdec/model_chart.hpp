#pragma once

// Affine charts of the polyhedral model over a cell of the tropical
// structure. For a unimodular lattice simplex sigma the chart ring is a
// polynomial ring in one monomial generator per vertex, subject to the single
// relation that the generators multiply to t; the hypersurface equation
// rewrites in the generators with a monomial content split off.

#include <string>
#include <utility>
#include <vector>

#include "popdec/polyhedron.hpp"
#include "popdec/tropical_poly.hpp"

namespace popdec {

struct ModelChart {
  std::vector<std::string> names;  // generator names: u, v, w or u1..uk
  std::vector<ZVector> exponents;  // alpha_i with generator u_i = t^{beta_i} x^{alpha_i}
  std::vector<Integer> tpowers;    // beta_i
  std::string relation;            // "u*v*w = t"
  ZVector content;                 // monomial content of f in the generators
  std::string content_str;         // "u*v*w^2"
  ResiduePolynomial g;             // content-free chart polynomial, lex-descending
  std::string g_str;
  // One entry per generator: the equation of the boundary stratum where that
  // generator vanishes, i.e. g with the terms divisible by it removed.
  std::vector<std::pair<std::string, std::string>> components;
};

// sigma must be a full-dimensional lattice simplex whose homogenized vertex
// matrix is unimodular (the cone over {1} x sigma is smooth); anything else
// is rejected. The generator attached to vertex v_i is the monomial whose
// exponent row is the i-th barycentric form of sigma, with vertices taken in
// lex-ascending order; a term c * t^a * x^m of f then picks up generator
// exponents a + <m, v_i>.
ModelChart model_chart(const TropicalPolynomial& f, const Polyhedron& sigma);

}  // namespace popdec
