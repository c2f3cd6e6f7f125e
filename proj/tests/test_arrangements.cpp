#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "popdec/chain.hpp"
#include "popdec/linear_ideal.hpp"
#include "popdec/matroid.hpp"
#include "popdec/sign_nerve.hpp"

using namespace popdec;

namespace {

GaussianRational gq(long re, long im = 0) { return {Rational(re), Rational(im)}; }

ZVector zvec(std::initializer_list<long> v) {
  ZVector z(static_cast<int>(v.size()));
  int i = 0;
  for (long x : v) z[i++] = Integer(x);
  return z;
}

std::vector<long> betti_of(const SimplicialComplex& sc) {
  Homology h = chain_homology(sc.sparse_boundaries(), sc.cell_counts());
  std::vector<long> b;
  for (int x : h.betti) b.push_back(x);
  while (!b.empty() && b.back() == 0) b.pop_back();
  for (const auto& level : h.torsion) CHECK(level.empty());
  return b;
}

std::vector<long> betti_of(const Matroid& m) {
  std::vector<long> b;
  for (const Integer& x : projective_betti(m)) b.push_back(x.to_int64());
  return b;
}

// Betti numbers in degrees 0..k-1 of a complex truncated at dimension k, the
// range where the truncation is faithful.
std::vector<long> betti_prefix(const SimplicialComplex& sc, size_t k) {
  Homology h = chain_homology(sc.sparse_boundaries(), sc.cell_counts());
  std::vector<long> b;
  for (size_t i = 0; i < k; ++i) {
    b.push_back(i < h.betti.size() ? h.betti[i] : 0);
    if (i < h.torsion.size()) CHECK(h.torsion[i].empty());
  }
  return b;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational a = gq(1, 2), b = gq(3, -1);
  CHECK((a * b) == gq(5, 5));
  CHECK((a + b) == gq(4, 1));
  CHECK((a * b.conj()).str() == "1+7*i");
  GaussianRational q = a / b;
  CHECK(q * b == a);
  CHECK(gq(0, -1).str() == "-i");
  CHECK(gq(-2).str() == "-2");
}

TEST_CASE("gaussian matrix rank and kernel") {
  GQMatrix m = {{gq(1), gq(1), gq(1)}};
  CHECK(rank(m) == 1);
  GQMatrix k = kernel_rows(m);
  REQUIRE(k.size() == 2);
  for (const auto& row : k) {
    GaussianRational acc;
    for (const auto& c : row) acc = acc + c;
    CHECK(acc.is_zero());
  }

  GQMatrix mi = {{gq(1), gq(0, 1)}, {gq(0, 1), gq(-1)}};  // second row = i * first
  CHECK(rank(mi) == 1);
  CHECK(kernel_rows(mi).size() == 1);
}

TEST_CASE("linear ideal parsing") {
  LinearIdeal ideal = parse_linear_ideal("1+x1+x2");
  CHECK(ideal.n == 2);
  REQUIRE(ideal.generators.size() == 1);
  REQUIRE(ideal.generators[0].size() == 3);
  auto mons = ideal.monomial_list();
  REQUIRE(mons.size() == 3);
  CHECK(mons[0] == zvec({0, 0}));
  CHECK(mons[1] == zvec({1, 0}));
  CHECK(mons[2] == zvec({0, 1}));

  LinearIdeal fancy = parse_linear_ideal("1/2*i*x1 - (1+2*i)*x2^-1 + 3");
  REQUIRE(fancy.generators.size() == 1);
  REQUIRE(fancy.generators[0].size() == 3);
  CHECK(fancy.generators[0][0].coeff == GaussianRational(Rational(0), Rational(1, 2)));
  CHECK(fancy.generators[0][1].coeff == gq(-1, -2));
  CHECK(fancy.generators[0][1].exponent == zvec({0, -1}));
  CHECK(fancy.generators[0][2].coeff == gq(3));

  LinearIdeal two = parse_linear_ideal("1+x1; 1+x2^2", 3);
  CHECK(two.n == 3);
  CHECK(two.generators.size() == 2);

  // duplicate monomials inside a generator merge, cancelling terms vanish
  LinearIdeal merged = parse_linear_ideal("x1 + x1 + 1");
  REQUIRE(merged.generators[0].size() == 2);
  CHECK(merged.generators[0][0].coeff == gq(2));
  CHECK_THROWS(parse_linear_ideal("x1 - x1"));
  CHECK_THROWS(parse_linear_ideal("1+x1;"));
  CHECK_THROWS(parse_linear_ideal("1+"));
  CHECK_THROWS(parse_linear_ideal("y1"));
  CHECK_THROWS(parse_linear_ideal("1+x3", 2));
}

TEST_CASE("arrangement of the three point line complement") {
  Arrangement arr = arrangement_from_ideal(parse_linear_ideal("1+x1+x2"));
  CHECK(arr.proj_dim == 1);
  REQUIRE(arr.hyperplanes.size() == 3);
  CHECK(arr.hyperplanes[0] == std::vector<GaussianRational>{gq(1), gq(0)});
  CHECK(arr.hyperplanes[1] == std::vector<GaussianRational>{gq(0), gq(1)});
  CHECK(arr.hyperplanes[2] == std::vector<GaussianRational>{gq(-1), gq(-1)});
  CHECK(arr.essential);
}

TEST_CASE("arrangement of the plane example and the smallest case") {
  Arrangement arr = arrangement_from_ideal(parse_linear_ideal("1+x1+x2+x3"));
  CHECK(arr.proj_dim == 2);
  REQUIRE(arr.hyperplanes.size() == 4);
  CHECK(arr.hyperplanes[0] == std::vector<GaussianRational>{gq(1), gq(0), gq(0)});
  CHECK(arr.hyperplanes[1] == std::vector<GaussianRational>{gq(0), gq(1), gq(0)});
  CHECK(arr.hyperplanes[2] == std::vector<GaussianRational>{gq(0), gq(0), gq(1)});
  CHECK(arr.hyperplanes[3] == std::vector<GaussianRational>{gq(-1), gq(-1), gq(-1)});

  Arrangement tiny = arrangement_from_ideal(parse_linear_ideal("1+x1"));
  CHECK(tiny.proj_dim == 0);
  REQUIRE(tiny.hyperplanes.size() == 2);
  CHECK(tiny.hyperplanes[0] == std::vector<GaussianRational>{gq(1)});
  CHECK(tiny.hyperplanes[1] == std::vector<GaussianRational>{gq(-1)});

  CHECK_THROWS(arrangement_from_ideal(parse_linear_ideal("1+x1; 2+2*x1")));
}

TEST_CASE("arrangement re-embedding satisfies the generators") {
  for (const char* text : {"1+x1+x2", "1+x1+x2+x3", "1+2*x1-x2; 1+x1-x3"}) {
    LinearIdeal ideal = parse_linear_ideal(text);
    Arrangement arr = arrangement_from_ideal(ideal);
    GQMatrix a = ideal.coefficient_matrix(arr.monomials);
    int d1 = arr.proj_dim + 1;
    // evaluate the hyperplane forms at sample points of P^d and check that the
    // resulting homogeneous coordinates satisfy every generator
    for (int sample = 1; sample <= 5; ++sample) {
      std::vector<GaussianRational> p(d1);
      for (int i = 0; i < d1; ++i) p[i] = gq(sample + 3 * i + 1, i == 0 ? sample : 0);
      std::vector<GaussianRational> z(arr.hyperplanes.size());
      for (size_t j = 0; j < z.size(); ++j)
        for (int i = 0; i < d1; ++i) z[j] = z[j] + arr.hyperplanes[j][i] * p[i];
      for (const auto& row : a) {
        GaussianRational acc;
        for (size_t j = 0; j < z.size(); ++j) acc = acc + row[j] * z[j];
        CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("essential ideals") {
  CHECK(is_essential(parse_linear_ideal("1+x1+x2")));
  CHECK(is_essential(parse_linear_ideal("1+x1; 1+x2")));
  // homogeneous-linear ideal whose projective closure is not snc; still fine
  CHECK(is_essential(parse_linear_ideal("x4-x1+x2; x5-x1+x3; x6-x2+x3")));
  // exponent differences span an index-2 sublattice
  CHECK_FALSE(is_essential(parse_linear_ideal("1+x1^2")));
  CHECK_FALSE(is_essential(parse_linear_ideal("1+x1*x2; x1*x2-x1^3*x2^3", 2)));
  // dependent generators
  CHECK_FALSE(is_essential(parse_linear_ideal("1+x1; 2+2*x1")));
}

TEST_CASE("uniform matroid characteristic polynomials") {
  GQMatrix u23 = {{gq(1), gq(0), gq(1)}, {gq(0), gq(1), gq(1)}};
  Matroid m23 = Matroid::from_columns(u23);
  CHECK(m23.rank() == 2);
  CHECK(m23.ground_size() == 3);
  auto chi = characteristic_polynomial(m23);  // (t-1)(t-2) = t^2 - 3t + 2
  REQUIRE(chi.size() == 3);
  CHECK(chi[0] == Integer(2));
  CHECK(chi[1] == Integer(-3));
  CHECK(chi[2] == Integer(1));
  CHECK(betti_of(m23) == std::vector<long>{1, 2});

  GQMatrix u34 = {{gq(1), gq(0), gq(0), gq(1)},
                  {gq(0), gq(1), gq(0), gq(1)},
                  {gq(0), gq(0), gq(1), gq(1)}};
  Matroid m34 = Matroid::from_columns(u34);
  auto chi34 = characteristic_polynomial(m34);  // (t-1)(t^2-3t+3)
  REQUIRE(chi34.size() == 4);
  CHECK(chi34[0] == Integer(-3));
  CHECK(chi34[1] == Integer(6));
  CHECK(chi34[2] == Integer(-4));
  CHECK(chi34[3] == Integer(1));
  CHECK(betti_of(m34) == std::vector<long>{1, 3, 3});

  Matroid point = Matroid::from_columns({{gq(1)}});
  auto chi1 = characteristic_polynomial(point);  // t - 1
  REQUIRE(chi1.size() == 2);
  CHECK(chi1[0] == Integer(-1));
  CHECK(chi1[1] == Integer(1));
  CHECK(betti_of(point) == std::vector<long>{1});

  Matroid loopy = Matroid::from_columns({{gq(1), gq(0)}, {gq(0), gq(0)}});
  CHECK(loopy.has_loops());
  CHECK_THROWS(characteristic_polynomial(loopy));
}

TEST_CASE("characteristic polynomial vanishes at one") {
  std::vector<GQMatrix> realizations = {
      {{gq(1), gq(0), gq(1)}, {gq(0), gq(1), gq(1)}},
      {{gq(1), gq(0), gq(0), gq(1)}, {gq(0), gq(1), gq(0), gq(1)}, {gq(0), gq(0), gq(1), gq(1)}},
      {{gq(1), gq(2), gq(3), gq(5)}, {gq(0), gq(1), gq(1), gq(2)}},
      {{gq(1)}},
  };
  for (const auto& r : realizations) {
    Matroid m = Matroid::from_columns(r);
    Integer at_one(0);
    auto chi = characteristic_polynomial(m);
    for (const auto& c : chi) at_one = at_one + c;
    CHECK(at_one == Integer(0));
  }
}

TEST_CASE("rank function is monotone and submodular") {
  GQMatrix u34 = {{gq(1), gq(0), gq(0), gq(1)},
                  {gq(0), gq(1), gq(0), gq(1)},
                  {gq(0), gq(0), gq(1), gq(1)}};
  Matroid m = Matroid::from_columns(u34);
  int g = m.ground_size();
  auto subset_of = [&](unsigned mask) {
    std::vector<int> s;
    for (int i = 0; i < g; ++i)
      if (mask & (1u << i)) s.push_back(i);
    return s;
  };
  for (unsigned a = 0; a < (1u << g); ++a) {
    for (unsigned b = 0; b < (1u << g); ++b) {
      int ra = m.rank_of(subset_of(a));
      int rb = m.rank_of(subset_of(b));
      if ((a & b) == a) CHECK(ra <= rb);
      int ru = m.rank_of(subset_of(a | b));
      int ri = m.rank_of(subset_of(a & b));
      CHECK(ru + ri <= ra + rb);
    }
  }
}

TEST_CASE("flats form an intersection closed lattice") {
  GQMatrix u34 = {{gq(1), gq(0), gq(0), gq(1)},
                  {gq(0), gq(1), gq(0), gq(1)},
                  {gq(0), gq(0), gq(1), gq(1)}};
  Matroid m = Matroid::from_columns(u34);
  const auto& flats = m.flats();
  // U_{3,4}: bottom, four singletons, six pairs, top
  CHECK(flats.size() == 12);
  std::set<std::vector<int>> all;
  for (const auto& f : flats) all.insert(f.elements);
  for (const auto& f : flats) {
    for (const auto& h : flats) {
      std::vector<int> meet;
      std::set_intersection(f.elements.begin(), f.elements.end(), h.elements.begin(),
                            h.elements.end(), std::back_inserter(meet));
      CHECK(all.count(m.closure(meet)) == 1);
      CHECK(m.closure(meet) == meet);
    }
  }
}

TEST_CASE("bergman fan of the three point line") {
  GQMatrix u23 = {{gq(1), gq(0), gq(1)}, {gq(0), gq(1), gq(1)}};
  BergmanFan fan = bergman_fan(Matroid::from_columns(u23));
  CHECK(fan.ambient == 2);
  REQUIRE(fan.cones.size() == 4);  // origin plus three rays
  CHECK(fan.cones[0].flag.empty());
  CHECK(fan.cones[0].generators.empty());
  std::set<std::vector<long>> rays;
  for (size_t i = 1; i < fan.cones.size(); ++i) {
    REQUIRE(fan.cones[i].generators.size() == 1);
    const ZVector& r = fan.cones[i].generators[0];
    rays.insert({r[0].to_int64(), r[1].to_int64()});
  }
  std::set<std::vector<long>> expected_rays{{1, 0}, {0, 1}, {-1, -1}};
  CHECK(rays == expected_rays);
}

TEST_CASE("bergman fan of the uniform rank three matroid") {
  GQMatrix u34 = {{gq(1), gq(0), gq(0), gq(1)},
                  {gq(0), gq(1), gq(0), gq(1)},
                  {gq(0), gq(0), gq(1), gq(1)}};
  BergmanFan fan = bergman_fan(Matroid::from_columns(u34));
  CHECK(fan.ambient == 3);
  // flags: empty, 4 singleton flats, 6 pair flats, 12 singleton-in-pair chains
  CHECK(fan.cones.size() == 23);
  int by_len[3] = {0, 0, 0};
  for (const auto& c : fan.cones) {
    REQUIRE(c.flag.size() <= 2);
    by_len[c.flag.size()]++;
    CHECK(c.generators.size() == c.flag.size());
  }
  CHECK(by_len[0] == 1);
  CHECK(by_len[1] == 10);
  CHECK(by_len[2] == 12);
  // spot check the flat vectors: flat {3} maps to -(e0+e1+e2), flat {0,3} to e0 plus that
  for (const auto& c : fan.cones) {
    if (c.flag.size() == 1 && c.flag[0] == std::vector<int>{3})
      CHECK(c.generators[0] == zvec({-1, -1, -1}));
    if (c.flag.size() == 1 && c.flag[0] == std::vector<int>{0, 3})
      CHECK(c.generators[0] == zvec({0, -1, -1}));
  }

  BergmanFan single = bergman_fan(Matroid::from_columns({{gq(1)}}));
  CHECK(single.cones.size() == 1);
  CHECK(single.cones[0].generators.empty());

  CHECK_THROWS(bergman_fan(Matroid::from_columns({{gq(0), gq(1)}})));
}

TEST_CASE("sign nerve of a point complement") {
  SignNerve nerve = sign_nerve(parse_linear_ideal("1+x1"));
  // x = -1 lies in the closed left quadrants only
  REQUIRE(nerve.vertex_cones.size() == 2);
  CHECK(nerve.vertex_cones[0] == std::vector<int>{2});
  CHECK(nerve.vertex_cones[1] == std::vector<int>{3});
  REQUIRE(nerve.complex.simplices.size() == 2);
  CHECK(nerve.complex.simplices[1].size() == 1);
  CHECK(betti_of(nerve.complex) == std::vector<long>{1});
}

TEST_CASE("sign nerve of the three point line complement") {
  SignNerve nerve = sign_nerve(parse_linear_ideal("1+x1+x2"));
  // no solution has both real parts nonnegative, so those four products are
  // not cover elements; the other twelve are
  CHECK(nerve.vertex_cones.size() == 12);
  for (const auto& v : nerve.vertex_cones) CHECK_FALSE((v[0] <= 1 && v[1] <= 1));
  CHECK(betti_of(nerve.complex) == std::vector<long>{1, 2});
}

TEST_CASE("sign nerve at level one uses half planes and signed axes") {
  SignNerve nerve = sign_nerve(parse_linear_ideal("1+x1+x2"), 1);
  std::set<std::vector<int>> verts(nerve.vertex_cones.begin(), nerve.vertex_cones.end());
  // both positive real axes cannot happen on 1+x+y = 0
  CHECK(verts.count({2, 2}) == 0);
  // closed upper half-planes meet the real solutions
  CHECK(verts.count({0, 0}) == 1);
  CHECK(verts.size() == 15);
}

TEST_CASE("sign nerve input validation") {
  CHECK_THROWS(sign_nerve(parse_linear_ideal("1+x1+x2"), 3));
  CHECK_THROWS(sign_nerve(parse_linear_ideal("1+x1^2")));
  // essential but not affine-linear in the torus coordinates
  CHECK_THROWS(sign_nerve(parse_linear_ideal("1+x1^-1")));
}

TEST_CASE("sign nerve homology matches the matroid oracle") {
  struct Case {
    const char* ideal;
    GQMatrix realization;
  };
  std::vector<Case> cases = {
      {"1+x1+x2", {{gq(1), gq(0), gq(1)}, {gq(0), gq(1), gq(1)}}},
      {"1+x1+x2+x3",
       {{gq(1), gq(0), gq(0), gq(1)}, {gq(0), gq(1), gq(0), gq(1)}, {gq(0), gq(0), gq(1), gq(1)}}},
      // four points on a line: hyperplane forms 1, x, x+1, 2x+1 pulled back
      {"1+x1-x2; 1+2*x1-x3", {{gq(1), gq(0), gq(1), gq(1)}, {gq(0), gq(1), gq(1), gq(2)}}},
  };
  for (const auto& c : cases) {
    std::vector<long> oracle = betti_of(Matroid::from_columns(c.realization));
    // a cap one above the top compared degree keeps those degrees faithful
    SignNerve nerve = sign_nerve(parse_linear_ideal(c.ideal), 2,
                                 static_cast<int>(oracle.size()));
    CHECK(betti_prefix(nerve.complex, oracle.size()) == oracle);
  }
}

TEST_CASE("truncated sign nerve agrees below the cap") {
  LinearIdeal ideal = parse_linear_ideal("1+x1+x2+x3");
  SignNerve wide = sign_nerve(ideal, 2, 3);
  SignNerve cut = sign_nerve(ideal, 2, 2);
  CHECK(cut.vertex_cones == wide.vertex_cones);
  REQUIRE(cut.complex.simplices.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(cut.complex.simplices[k] == wide.complex.simplices[k]);
  // a cap at dimension 2 certifies homology through degree 1
  CHECK(betti_prefix(cut.complex, 2) == betti_prefix(wide.complex, 2));
}

TEST_CASE("nerve homology via the intersection poset matches the direct route") {
  for (int level : {1, 2}) {
    for (const char* text : {"1+x1", "1+x1+x2", "1+x1-x2; 1+2*x1-x3"}) {
      LinearIdeal ideal = parse_linear_ideal(text);
      SignNerve nerve = sign_nerve(ideal, level, 3);
      std::vector<int> poset = nerve_betti(ideal, level, 2);
      std::vector<long> poset_long(poset.begin(), poset.end());
      CHECK(poset_long == betti_prefix(nerve.complex, 3));
    }
  }
  // untruncated runs build all chains and trim trailing zeros
  std::vector<int> full = nerve_betti(parse_linear_ideal("1+x1+x2"), 2);
  std::vector<int> expected{1, 2};
  CHECK(full == expected);
}

TEST_CASE("intersection poset homology matches the matroid oracle in rank four") {
  // the nerve itself is far too large to enumerate here: real points with a
  // zero coordinate lie in dozens of cover elements at once
  std::vector<int> betti = nerve_betti(parse_linear_ideal("1+x1+x2+x3+x4"), 2, 3);
  std::vector<int> expected{1, 4, 6, 4};
  CHECK(betti == expected);
}

TEST_CASE("circuit forms of a rank two ideal") {
  LinearIdeal ideal = parse_linear_ideal("1+x1-x2; 1+2*x1-x3");
  auto mons = ideal.monomial_list();  // 1, x1, x2, x3
  GQMatrix a = ideal.coefficient_matrix(mons);
  auto circuits = circuit_forms(a);
  REQUIRE(circuits.size() == 4);
  std::set<std::vector<int>> supports;
  for (const auto& c : circuits) {
    std::vector<int> s;
    for (size_t j = 0; j < c.size(); ++j)
      if (!c[j].is_zero()) s.push_back(static_cast<int>(j));
    supports.insert(s);
  }
  CHECK(supports ==
        std::set<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

TEST_CASE("initial linear ideals") {
  LinearIdeal line = parse_linear_ideal("1+2*x1+3*x2");
  QVector w(2);
  w << Rational(-1), Rational(-1);
  LinearIdeal in1 = initial_linear_ideal(line, w);
  CHECK(same_linear_span(in1, parse_linear_ideal("2*x1+3*x2")));
  CHECK_FALSE(same_linear_span(in1, line));

  LinearIdeal plane = parse_linear_ideal("1+x1+x2+x3");
  QVector w2(3);
  w2 << Rational(1), Rational(0), Rational(0);
  CHECK(same_linear_span(initial_linear_ideal(plane, w2), parse_linear_ideal("1+x2+x3", 3)));

  QVector zero = QVector::Zero(3);
  CHECK(same_linear_span(initial_linear_ideal(plane, zero), plane));

  // with two generators the circuits contribute: weight x1 heaviest
  LinearIdeal two = parse_linear_ideal("1+x1-x2; 1+2*x1-x3");
  QVector w3(3);
  w3 << Rational(-1), Rational(0), Rational(0);
  CHECK(same_linear_span(initial_linear_ideal(two, w3), parse_linear_ideal("x1; 1-2*x2+x3")));
}
