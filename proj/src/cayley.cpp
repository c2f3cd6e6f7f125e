#include "popdec/cayley.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace popdec {

Polyhedron cayley_polytope(int n, const std::vector<int>& degrees) {
  if (n < 0) throw std::invalid_argument("cayley_polytope: negative dimension");
  int r = static_cast<int>(degrees.size());
  if (r < 1) throw std::invalid_argument("cayley_polytope: empty degree list");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("cayley_polytope: degrees must be positive");
  std::vector<QVector> pts;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j <= n; ++j) {  // j = 0 is the origin vertex of d*Delta_n
      QVector p = QVector::Zero(n + r);
      if (j > 0) p[j - 1] = Rational(degrees[static_cast<size_t>(i)]);
      p[n + i] = Rational(1);
      pts.push_back(std::move(p));
    }
  }
  return hull_of_points(pts);
}

namespace {

// all m >= 0 with |m| <= d, in lex order
std::vector<ZVector> simplex_lattice_points(int n, int d) {
  std::vector<ZVector> out;
  ZVector cur = ZVector::Zero(n);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = Integer(v);
      rec(pos + 1, left - v);
    }
    cur[pos] = Integer(0);
  };
  rec(0, d);
  return out;
}

}  // namespace

CayleyCertificate certify_ci_smooth(const std::vector<TropicalPolynomial>& system) {
  int r = static_cast<int>(system.size());
  if (r < 1) throw std::invalid_argument("certify_ci_smooth: empty system");
  int n = system[0].n;
  for (const auto& f : system)
    if (f.n != n) throw std::invalid_argument("certify_ci_smooth: mixed ambient dimensions");

  // With several factors the transversality and multiplicity claims rest on
  // each factor having the full support of a dilated standard simplex; a
  // single factor may have any support, since the certificate then only
  // asserts smoothness of its own hypersurface.
  std::vector<int> degrees;
  for (const auto& f : r >= 2 ? system : std::vector<TropicalPolynomial>{}) {
    Integer deg(0);
    for (const auto& t : f.terms) {
      Integer s(0);
      for (int i = 0; i < n; ++i) {
        if (t.exponent[i] < Integer(0))
          throw std::invalid_argument(
              "certify_ci_smooth: restricted support; Kummer-smooth case out of scope");
        s = s + t.exponent[i];
      }
      if (deg < s) deg = s;
    }
    if (!(Integer(0) < deg))
      throw std::invalid_argument("certify_ci_smooth: each polynomial must have positive degree");
    int d = static_cast<int>(deg.to_int64());
    std::set<std::vector<std::string>> have;
    for (const auto& t : f.terms) {
      std::vector<std::string> key;
      for (int i = 0; i < n; ++i) key.push_back(t.exponent[i].str());
      have.insert(std::move(key));
    }
    for (const ZVector& m : simplex_lattice_points(n, d)) {
      std::vector<std::string> key;
      for (int i = 0; i < n; ++i) key.push_back(m[i].str());
      if (!have.count(key))
        throw std::invalid_argument(
            "certify_ci_smooth: restricted support; Kummer-smooth case out of scope");
    }
    degrees.push_back(d);
  }

  // Cayley lift: term m of factor i becomes (m, e_i), raised by its valuation.
  std::vector<ZVector> pts;
  std::vector<int> factor_of;
  std::vector<Rational> hts;
  for (int i = 0; i < r; ++i) {
    for (const auto& t : system[static_cast<size_t>(i)].terms) {
      ZVector p = ZVector::Zero(n + r);
      p.head(n) = t.exponent;
      p[n + i] = Integer(1);
      pts.push_back(std::move(p));
      factor_of.push_back(i);
      hts.push_back(t.valuation);
    }
  }
  QVector heights(static_cast<int>(hts.size()));
  for (size_t i = 0; i < hts.size(); ++i) heights[static_cast<int>(i)] = hts[i];

  PolyComplex sub = regular_subdivision(pts, heights);
  int top = sub.max_dim();
  CayleyCertificate cert;
  for (const PolyCell& c : sub.cells) {
    if (c.dim != top) continue;
    std::vector<ZVector> cellpts;
    for (int i : c.points) cellpts.push_back(pts[static_cast<size_t>(i)]);
    bool good = static_cast<int>(cellpts.size()) == c.dim + 1;
    if (good) good = normalized_volume(cellpts) == Integer(1);
    if (good) continue;

    cert.certified = false;
    cert.failing_cell = c.id;
    std::vector<int> count(static_cast<size_t>(r), 0);
    for (int i : c.points) ++count[static_cast<size_t>(factor_of[static_cast<size_t>(i)])];
    int crowded = 0;
    for (int i = 0; i < r; ++i) crowded += count[static_cast<size_t>(i)] >= 2;
    cert.status = crowded >= 2 ? "non-stable configuration" : "not a unimodular triangulation";
    return cert;
  }

  cert.certified = true;
  cert.status = "smooth";
  cert.claims.push_back("every tropical hypersurface in the system is smooth");
  if (r >= 2) {
    cert.claims.push_back("the tropical hypersurfaces intersect transversely");
    cert.claims.push_back("every intersection multiplicity is 1");
  }
  return cert;
}

}  // namespace popdec
