#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "popdec/lp.hpp"
#include "popdec/matrix.hpp"
#include "popdec/polyhedron.hpp"
#include "popdec/snf.hpp"
#include "popdec/subdivision.hpp"

using namespace popdec;

namespace {

QVector qvec(std::initializer_list<long> xs) {
  QVector v(static_cast<int>(xs.size()));
  int i = 0;
  for (long x : xs) v[i++] = Rational(x);
  return v;
}

ZVector zvec(std::initializer_list<long> xs) {
  ZVector v(static_cast<int>(xs.size()));
  int i = 0;
  for (long x : xs) v[i++] = Integer(x);
  return v;
}

QMatrix qmat(int rows, int cols, std::initializer_list<long> xs) {
  QMatrix m(rows, cols);
  int i = 0;
  for (long x : xs) {
    m(i / cols, i % cols) = Rational(x);
    ++i;
  }
  return m;
}

ZMatrix zmat(int rows, int cols, std::initializer_list<long> xs) {
  ZMatrix m(rows, cols);
  int i = 0;
  for (long x : xs) {
    m(i / cols, i % cols) = Integer(x);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic canonicalizes") {
  Rational a(2, 4);
  CHECK(a.num() == Integer(1));
  CHECK(a.den() == Integer(2));
  Rational b("-3/9");
  CHECK(b == Rational(-1, 3));
  CHECK(a + b == Rational(1, 6));
  CHECK(a * b == Rational(-1, 6));
  CHECK((a / b) == Rational(-3, 2));
  CHECK(Rational(7, -2).str() == "-7/2");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-7, 2).floor() == Integer(-4));
  CHECK(Rational(-7, 2).ceil() == Integer(-3));
  CHECK(Rational(6, 3).is_integer());
}

TEST_CASE("integer gcd and division") {
  CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(fdiv(Integer(-7), Integer(2)) == Integer(-4));
  CHECK(divexact(Integer(12), Integer(4)) == Integer(3));
  CHECK(Integer("123456789123456789") * Integer(0) == Integer(0));
  Integer big("123456789123456789123456789");
  CHECK_FALSE(big.fits_int64());
  CHECK(Integer(42).fits_int64());
  CHECK(Integer(42).to_int64() == 42);
}

TEST_CASE("rref, rank, kernel") {
  QMatrix m = qmat(2, 3, {1, 1, 1, 2, 2, 2});
  CHECK(rank(m) == 1);
  QMatrix k = kernel_basis(qmat(1, 3, {1, 1, 1}));
  REQUIRE(k.rows() == 2);
  for (int i = 0; i < k.rows(); ++i) {
    Rational s(0);
    for (int j = 0; j < 3; ++j) s += k(i, j);
    CHECK(s == Rational(0));
  }
  CHECK(rank(k) == 2);

  QMatrix a = qmat(2, 2, {1, 2, 3, 4});
  CHECK(determinant(a) == Rational(-2));
  QMatrix ai = inverse(a);
  QMatrix prod = a * ai;
  CHECK(prod(0, 0) == Rational(1));
  CHECK(prod(0, 1) == Rational(0));
  CHECK(prod(1, 1) == Rational(1));
}

TEST_CASE("solve linear systems") {
  QMatrix a = qmat(2, 2, {2, 1, 1, 3});
  auto x = solve(a, qvec({5, 10}));
  REQUIRE(x.has_value());
  CHECK(a * *x == qvec({5, 10}));
  auto none = solve(qmat(2, 1, {1, 1}), qvec({1, 2}));
  CHECK_FALSE(none.has_value());
}

TEST_CASE("primitive vectors") {
  QVector v(3);
  v[0] = Rational(4, 6);
  v[1] = Rational(-2, 3);
  v[2] = Rational(2);
  ZVector p = primitive(v);
  CHECK(p == zvec({1, -1, 3}));
}

TEST_CASE("hermite form membership") {
  ZMatrix m = zmat(2, 3, {2, 0, 0, 0, 3, 0});
  ZMatrix h = row_hnf(m);
  CHECK(in_row_lattice(h, zvec({2, 3, 0})));
  CHECK(in_row_lattice(h, zvec({-4, 9, 0})));
  CHECK_FALSE(in_row_lattice(h, zvec({1, 0, 0})));
  CHECK_FALSE(in_row_lattice(h, zvec({0, 0, 1})));
}

TEST_CASE("smith normal form basics") {
  ZMatrix m = zmat(2, 2, {2, 4, 6, 8});
  SmithForm s = smith_normal_form(m);
  ZMatrix lhs = s.left * m * s.right;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(lhs(i, j) == s.diag(i, j));
  CHECK(s.diag(0, 0) == Integer(2));
  CHECK(s.diag(1, 1) == Integer(4));
  auto inv = invariant_factors(m);
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == Integer(2));
  CHECK(inv[1] == Integer(4));
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    int r = dim(rng), c = dim(rng);
    ZMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Integer(entry(rng));
    SmithForm s = smith_normal_form(m);
    ZMatrix lhs = s.left * m * s.right;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) CHECK(lhs(i, j) == s.diag(i, j));
    // unimodular transforms
    CHECK(abs(determinant(to_rational(s.left))) == Rational(1));
    CHECK(abs(determinant(to_rational(s.right))) == Rational(1));
    // divisibility chain
    int k = std::min(r, c);
    for (int i = 0; i + 1 < k; ++i) {
      if (!s.diag(i, i).is_zero()) {
        CHECK(s.diag(i, i).divides(s.diag(i + 1, i + 1)));
      } else {
        CHECK(s.diag(i + 1, i + 1).is_zero());
      }
    }
    auto inv = invariant_factors(m);
    for (int i = 0; i < k; ++i) CHECK(inv[i] == s.diag(i, i));
  }
}

TEST_CASE("integer kernel is saturated") {
  // kernel of (1 1 1): index-1 sublattice containing (1,-1,0),(0,1,-1)
  ZMatrix k = integer_kernel_basis(qmat(1, 3, {1, 1, 1}));
  REQUIRE(k.rows() == 2);
  ZMatrix h = row_hnf(k);
  CHECK(in_row_lattice(h, zvec({1, -1, 0})));
  CHECK(in_row_lattice(h, zvec({0, 1, -1})));
  // kernel of (2 2): contains the primitive (1,-1)
  ZMatrix k2 = integer_kernel_basis(qmat(1, 2, {2, 2}));
  REQUIRE(k2.rows() == 1);
  CHECK(abs(k2(0, 0)) == Integer(1));
}

TEST_CASE("lp feasibility") {
  // {x <= 1, -x <= -2} empty
  CHECK_FALSE(lp_feasible(qmat(2, 1, {1, -1}), qvec({1, -2}), QMatrix(0, 1), QVector(0)));
  // {x <= 1, -x <= 0} feasible
  CHECK(lp_feasible(qmat(2, 1, {1, -1}), qvec({1, 0}), QMatrix(0, 1), QVector(0)));
  // equality x + y = 1, x,y >= 0
  CHECK(lp_feasible(qmat(2, 2, {-1, 0, 0, -1}), qvec({0, 0}), qmat(1, 2, {1, 1}), qvec({1})));
  CHECK_FALSE(
      lp_feasible(qmat(2, 2, {-1, 0, 0, -1}), qvec({0, 0}), qmat(1, 2, {1, 1}), qvec({-1})));

  // realified 1 + x + y = 0 in coordinates (rx, ix, ry, iy): no solution has
  // both x and y in the closed first quadrant, but the closed left quadrants
  // contain x = y = -1/2
  QMatrix quad = qmat(4, 4, {-1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1});
  QMatrix line = qmat(2, 4, {1, 0, 1, 0, 0, 1, 0, 1});
  QVector rhs = qvec({-1, 0});
  CHECK_FALSE(lp_feasible(quad, qvec({0, 0, 0, 0}), line, rhs));
  QMatrix flipped = quad;
  flipped(0, 0) = Rational(1);
  flipped(2, 2) = Rational(1);
  CHECK(lp_feasible(flipped, qvec({0, 0, 0, 0}), line, rhs));
}

TEST_CASE("lp optimization") {
  // max x + y st x <= 2, y <= 3, x,y >= 0
  QMatrix a = qmat(4, 2, {1, 0, 0, 1, -1, 0, 0, -1});
  QVector b = qvec({2, 3, 0, 0});
  LPResult r = lp_optimize(qvec({1, 1}), a, b, QMatrix(0, 2), QVector(0), true);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == Rational(5));
  // unbounded
  LPResult u = lp_optimize(qvec({1, 0}), qmat(1, 2, {-1, 0}), qvec({0}), QMatrix(0, 2), QVector(0),
                           true);
  CHECK(u.status == LPStatus::Unbounded);
  // infeasible
  LPResult inf = lp_optimize(qvec({1}), qmat(2, 1, {1, -1}), qvec({0, -1}), QMatrix(0, 1),
                             QVector(0), true);
  CHECK(inf.status == LPStatus::Infeasible);
  // rational optimum: max x st 3x <= 2
  LPResult q = lp_optimize(qvec({1}), qmat(2, 1, {3, -1}), qvec({2, 0}), QMatrix(0, 1), QVector(0),
                           true);
  REQUIRE(q.status == LPStatus::Optimal);
  CHECK(q.value == Rational(2, 3));
}

TEST_CASE("cone generators: quadrant and halfplane") {
  // {x <= 0, y <= 0}: rays -e1, -e2
  ConeGens g = cone_generators(qmat(2, 2, {1, 0, 0, 1}), QMatrix(0, 2));
  CHECK(g.lineality.empty());
  REQUIRE(g.rays.size() == 2);
  CHECK(g.rays[0] == qvec({-1, 0}));
  CHECK(g.rays[1] == qvec({0, -1}));
  // {x + y <= 0}: one ray modulo lineality
  ConeGens h = cone_generators(qmat(1, 2, {1, 1}), QMatrix(0, 2));
  CHECK(h.lineality.size() == 1);
  CHECK(h.rays.size() == 1);
}

TEST_CASE("polyhedron vertex enumeration") {
  // unit square [0,1]^2
  QMatrix a = qmat(4, 2, {1, 0, 0, 1, -1, 0, 0, -1});
  Polyhedron p = Polyhedron::from_inequalities(a, qvec({1, 1, 0, 0}));
  REQUIRE(p.vertices().size() == 4);
  CHECK(p.rays().empty());
  CHECK(p.is_bounded());
  CHECK(p.dim() == 2);
  CHECK(p.vertices()[0] == qvec({0, 0}));
  CHECK(p.vertices()[3] == qvec({1, 1}));
  // positive quadrant translated: vertex + 2 rays
  Polyhedron q = Polyhedron::from_inequalities(qmat(2, 2, {-1, 0, 0, -1}), qvec({-1, -2}));
  CHECK(q.vertices().size() == 1);
  CHECK(q.vertices()[0] == qvec({1, 2}));
  CHECK(q.rays().size() == 2);
  // empty
  Polyhedron e = Polyhedron::from_inequalities(qmat(2, 1, {1, -1}), qvec({1, -2}));
  CHECK(e.is_empty());
}

TEST_CASE("lp agrees with vertex enumeration on random h-polyhedra") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dim(1, 4), rows(1, 8), entry(-3, 3);
  for (int trial = 0; trial < 120; ++trial) {
    int n = dim(rng), m = rows(rng);
    QMatrix a(m, n);
    QVector b(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
      b[i] = Rational(entry(rng));
    }
    Polyhedron p(a, b, QMatrix(0, n), QVector(0));
    bool lp = lp_feasible(a, b, QMatrix(0, n), QVector(0));
    CHECK(lp == !p.is_empty());
  }
}

TEST_CASE("face lattice of segment, cube, simplex") {
  Polyhedron seg = hull_of_points({qvec({0}), qvec({1})});
  auto fs = face_lattice(seg).f_vector();
  CHECK(fs == std::vector<int>({2, 1}));

  QMatrix a(6, 3);
  QVector b(6);
  a.setConstant(Rational(0));
  for (int i = 0; i < 3; ++i) {
    a(2 * i, i) = Rational(1);
    a(2 * i + 1, i) = Rational(-1);
    b[2 * i] = Rational(1);
    b[2 * i + 1] = Rational(1);
  }
  Polyhedron cube(a, b, QMatrix(0, 3), QVector(0));
  CHECK(face_lattice(cube).f_vector() == std::vector<int>({8, 12, 6, 1}));

  Polyhedron simplex =
      hull_of_points({qvec({0, 0, 0}), qvec({1, 0, 0}), qvec({0, 1, 0}), qvec({0, 0, 1})});
  CHECK(face_lattice(simplex).f_vector() == std::vector<int>({4, 6, 4, 1}));
}

TEST_CASE("euler relation on random hulls") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 3), npts(2, 8), entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = dim(rng);
    int k = npts(rng);
    std::vector<QVector> pts;
    for (int i = 0; i < k; ++i) {
      QVector v(n);
      for (int j = 0; j < n; ++j) v[j] = Rational(entry(rng));
      pts.push_back(v);
    }
    Polyhedron p = hull_of_points(pts);
    if (p.dim() < 1) continue;
    auto fv = face_lattice(p).f_vector();
    int alt = 0, sign = 1;
    for (int c : fv) {
      alt += sign * c;
      sign = -sign;
    }
    // with the top cell included the alternating sum is 1 for every polytope
    CHECK(alt == 1);
  }
}

TEST_CASE("hull round trip: vertices of the hull match extreme points") {
  std::vector<QVector> pts = {qvec({0, 0}), qvec({2, 0}), qvec({0, 2}),
                              qvec({2, 2}), qvec({1, 1})};
  Polyhedron p = hull_of_points(pts);
  CHECK(p.vertices().size() == 4);
  CHECK(p.contains(qvec({1, 1})));
  CHECK_FALSE(p.contains(qvec({3, 0})));
}

TEST_CASE("generators round trip with rays") {
  Polyhedron p = polyhedron_from_generators({qvec({0, 0}), qvec({1, 0})}, {qvec({0, 1})});
  CHECK(p.contains(qvec({0, 5})));
  CHECK(p.contains(qvec({1, 5})));
  CHECK_FALSE(p.contains(qvec({2, 0})));
  CHECK_FALSE(p.contains(qvec({0, -1})));
  CHECK(p.vertices().size() == 2);
  CHECK(p.rays().size() == 1);
  CHECK(p.rays()[0] == qvec({0, 1}));
}

TEST_CASE("regular subdivision: flat heights give trivial cell") {
  auto pc = regular_subdivision({zvec({0}), zvec({1})}, qvec({0, 0}));
  REQUIRE(pc.max_dim() == 1);
  auto top = pc.cells_of_dim(1);
  REQUIRE(top.size() == 1);
  CHECK(pc.cells[top[0]].points == std::vector<int>({0, 1}));
  CHECK(pc.cells_of_dim(0).size() == 2);
}

TEST_CASE("regular subdivision: breakpoint") {
  auto pc = regular_subdivision({zvec({0}), zvec({1}), zvec({2})}, qvec({0, 0, 1}));
  auto top = pc.cells_of_dim(1);
  REQUIRE(top.size() == 2);
  CHECK(pc.cells[top[0]].points == std::vector<int>({0, 1}));
  CHECK(pc.cells[top[1]].points == std::vector<int>({1, 2}));
  CHECK(pc.cells_of_dim(0).size() == 3);
  // cover relation: each segment covers two endpoints
  CHECK(pc.facets_of(top[0]).size() == 2);
  CHECK(pc.facets_of(top[1]).size() == 2);
}

TEST_CASE("regular subdivision: two tetrahedra") {
  // supports of 1 + x + y + z + t*x^2 with heights (0,0,0,0,1)
  std::vector<ZVector> pts = {zvec({0, 0, 0}), zvec({1, 0, 0}), zvec({0, 1, 0}), zvec({0, 0, 1}),
                              zvec({2, 0, 0})};
  auto pc = regular_subdivision(pts, qvec({0, 0, 0, 0, 1}));
  auto top = pc.cells_of_dim(3);
  REQUIRE(top.size() == 2);
  CHECK(pc.cells[top[0]].points == std::vector<int>({0, 1, 2, 3}));
  CHECK(pc.cells[top[1]].points == std::vector<int>({1, 2, 3, 4}));
  for (int id : top) {
    std::vector<ZVector> vs;
    for (const auto& v : pc.cells[id].vertices) vs.push_back(to_integer(v));
    CHECK(normalized_volume(vs) == Integer(1));
  }
}

TEST_CASE("regular subdivision cells intersect in common faces") {
  // interior point with a pulling height triangulates the square
  std::vector<ZVector> pts = {zvec({0, 0}), zvec({2, 0}), zvec({0, 2}), zvec({2, 2}),
                              zvec({1, 1})};
  auto pc = regular_subdivision(pts, qvec({0, 0, 0, 0, -1}));
  CHECK(pc.cells_of_dim(2).size() == 4);
  // pairwise intersections of maximal cells are cells of the complex
  for (int a : pc.cells_of_dim(2)) {
    for (int b : pc.cells_of_dim(2)) {
      if (a >= b) continue;
      std::vector<int> common;
      std::set_intersection(pc.cells[a].points.begin(), pc.cells[a].points.end(),
                            pc.cells[b].points.begin(), pc.cells[b].points.end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      bool found = false;
      for (const auto& c : pc.cells) found = found || c.points == common;
      CHECK(found);
    }
  }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(std::vector<ZVector>{zvec({0, 0, 0}), zvec({1, 0, 0}), zvec({0, 1, 0}), zvec({0, 0, 1})}) ==
        Integer(1));
  CHECK(normalized_volume(std::vector<ZVector>{zvec({0, 0}), zvec({2, 0}), zvec({0, 1})}) == Integer(2));
  CHECK(normalized_volume(std::vector<ZVector>{zvec({1, 0, 0}), zvec({0, 1, 0}), zvec({0, 0, 1}), zvec({2, 0, 0})}) ==
        Integer(1));
  // lower-dimensional simplex in a bigger ambient: lattice length
  CHECK(normalized_volume(std::vector<ZVector>{zvec({0, 0, 0}), zvec({2, 2, 0})}) == Integer(2));
  CHECK_THROWS(normalized_volume(std::vector<ZVector>{zvec({0, 0}), zvec({1, 0}), zvec({2, 0})}));
}
