#include "popdec/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "popdec/snf.hpp"

namespace popdec {

Polyhedron PolyComplex::cell_polyhedron(int id) const {
  const PolyCell& c = cells.at(id);
  return polyhedron_from_generators(c.vertices, c.rays);
}

std::vector<int> PolyComplex::facets_of(int id) const {
  std::vector<int> out;
  for (const auto& [c, f] : face_relation)
    if (c == id) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PolyComplex::cells_of_dim(int d) const {
  std::vector<int> out;
  for (const auto& c : cells)
    if (c.dim == d) out.push_back(c.id);
  return out;
}

int PolyComplex::max_dim() const {
  int m = -1;
  for (const auto& c : cells) m = std::max(m, c.dim);
  return m;
}

PolyComplex regular_subdivision(const std::vector<ZVector>& points, const QVector& heights) {
  if (points.empty()) throw std::invalid_argument("regular_subdivision: no points");
  if (static_cast<int>(points.size()) != heights.size())
    throw std::invalid_argument("regular_subdivision: points/heights size mismatch");
  int n = static_cast<int>(points[0].size());
  int k = static_cast<int>(points.size());
  {
    std::set<std::vector<std::string>> seen;
    for (const auto& p : points) {
      std::vector<std::string> key;
      for (int i = 0; i < p.size(); ++i) key.push_back(p[i].str());
      if (!seen.insert(key).second)
        throw std::invalid_argument("regular_subdivision: duplicate points");
    }
  }

  std::vector<QVector> qpts;
  for (const auto& p : points) qpts.push_back(to_rational(p));

  // Affine rank of the configuration.
  int r = 0;
  if (k > 1) {
    QMatrix d(k - 1, n);
    for (int i = 1; i < k; ++i) d.row(i - 1) = (qpts[i] - qpts[0]).transpose();
    r = rank(d);
  }

  PolyComplex out;
  out.ambient_dim = n;
  if (r == 0) {
    PolyCell c;
    c.id = 0;
    c.dim = 0;
    c.vertices = {qpts[0]};
    c.points = {0};
    out.cells.push_back(c);
    return out;
  }

  // Maximal cells: either everything (affine heights) or the tight sets of
  // the lower facets of the lifted hull. Work in chart coordinates of the
  // configuration so the lifted hull is full-dimensional and the sign of the
  // height coordinate in a facet normal is meaningful.
  AffineChart ch = affine_chart(qpts);
  std::vector<QVector> lifted;
  for (int i = 0; i < k; ++i) {
    QVector l(r + 1);
    l.head(r) = ch.coords[i];
    l[r] = heights[i];
    lifted.push_back(l);
  }
  std::vector<std::vector<int>> maximal;
  Polyhedron lifted_hull = hull_of_points(lifted);
  bool height_affine = lifted_hull.eq_normals().rows() > 0;
  if (height_affine) {
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    maximal.push_back(all);
  } else {
    for (int i = 0; i < lifted_hull.ineq_normals().rows(); ++i) {
      if (!(lifted_hull.ineq_normals()(i, r) < Rational(0))) continue;  // lower facets only
      std::vector<int> tight;
      for (int j = 0; j < k; ++j)
        if (lifted_hull.ineq_normals().row(i).transpose().dot(lifted[j]) ==
            lifted_hull.ineq_offsets()[i])
          tight.push_back(j);
      maximal.push_back(std::move(tight));
    }
    std::sort(maximal.begin(), maximal.end());
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  }

  // Collect every face of every maximal cell as a point index set.
  std::map<std::vector<int>, int> face_dims;
  for (const auto& cell_pts : maximal) {
    std::vector<QVector> cps;
    for (int i : cell_pts) cps.push_back(qpts[i]);
    Polyhedron cp = hull_of_points(cps);
    FaceLattice lat = face_lattice(cp);
    for (const auto& face : lat.faces) {
      // A configuration point lies on the face iff it is tight on all facets
      // that cut the face out of the cell.
      std::vector<int> on_face;
      for (int i : cell_pts) {
        bool on = true;
        for (int fi : face.facets)
          on = on && lat.facet_normals.row(fi).transpose().dot(qpts[i]) == lat.facet_offsets[fi];
        if (on) on_face.push_back(i);
      }
      face_dims.emplace(std::move(on_face), face.dim);
    }
  }

  int next_id = 0;
  std::vector<std::pair<int, std::vector<int>>> ordered;
  for (const auto& [pts, dim] : face_dims) ordered.push_back({dim, pts});
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [dim, pts] : ordered) {
    PolyCell c;
    c.id = next_id;
    c.dim = dim;
    c.points = pts;
    std::vector<QVector> cps;
    for (int i : pts) cps.push_back(qpts[i]);
    Polyhedron cp = hull_of_points(cps);
    c.vertices = cp.vertices();
    out.cells.push_back(std::move(c));
    ++next_id;
  }
  for (const auto& a : out.cells) {
    for (const auto& b : out.cells) {
      if (b.dim != a.dim - 1) continue;
      if (std::includes(a.points.begin(), a.points.end(), b.points.begin(), b.points.end()))
        out.face_relation.push_back({a.id, b.id});
    }
  }
  return out;
}

Integer normalized_volume(const std::vector<ZVector>& simplex_vertices) {
  int k = static_cast<int>(simplex_vertices.size());
  if (k < 1) throw std::invalid_argument("normalized_volume: empty vertex list");
  if (k == 1) return Integer(1);
  ZMatrix edges(k - 1, simplex_vertices[0].size());
  for (int i = 1; i < k; ++i)
    edges.row(i - 1) = (simplex_vertices[i] - simplex_vertices[0]).transpose();
  if (rank(edges) != k - 1)
    throw std::invalid_argument("normalized_volume: vertices not affinely independent");
  std::vector<Integer> inv = invariant_factors(edges);
  Integer vol(1);
  for (const auto& d : inv)
    if (!d.is_zero()) vol = vol * d;
  return vol;
}

Integer normalized_volume(const Polyhedron& simplex) {
  const auto& vs = simplex.vertices();
  if (!simplex.rays().empty()) throw std::invalid_argument("normalized_volume: unbounded input");
  std::vector<ZVector> zv;
  for (const auto& v : vs) {
    ZVector z(v.size());
    for (int i = 0; i < v.size(); ++i) {
      if (!v[i].is_integer()) throw std::invalid_argument("normalized_volume: non-integer vertex");
      z[i] = v[i].num();
    }
    zv.push_back(z);
  }
  if (static_cast<int>(zv.size()) != simplex.dim() + 1)
    throw std::invalid_argument("normalized_volume: not a simplex");
  return normalized_volume(zv);
}

}  // namespace popdec
