#include "popdec/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace popdec {
namespace {

// One double-description step: intersect span(lin)+cone(rays) with a.x <= 0.
// zero_sets[i] tracks which processed constraints are tight on rays[i]; used
// for the combinatorial adjacency test when forming new rays.
void dd_cut(const QVector& a, int cut_index, std::vector<QVector>& lin, std::vector<QVector>& rays,
            std::vector<std::set<int>>& zero_sets) {
  // If the lineality space leaves the hyperplane, split off one direction.
  int hit = -1;
  for (int i = 0; i < static_cast<int>(lin.size()); ++i) {
    if (!(a.dot(lin[i]) == Rational(0))) {
      hit = i;
      break;
    }
  }
  if (hit >= 0) {
    QVector pivot = lin[hit] / a.dot(lin[hit]);  // a.pivot == 1
    std::vector<QVector> new_lin;
    for (int i = 0; i < static_cast<int>(lin.size()); ++i) {
      if (i == hit) continue;
      new_lin.push_back(lin[i] - pivot * a.dot(lin[i]));
    }
    lin = std::move(new_lin);
    for (auto& r : rays) r -= pivot * a.dot(r);
    // Every surviving ray is now tight on a; -pivot generates the cut side.
    // All earlier constraints vanish on the lineality space, so the new ray
    // is tight on each of them.
    for (auto& z : zero_sets) z.insert(cut_index);
    rays.push_back(-pivot);
    std::set<int> z;
    for (int i = 0; i < cut_index; ++i) z.insert(i);
    zero_sets.push_back(std::move(z));
    return;
  }

  std::vector<int> neg, zero, pos;
  std::vector<Rational> val(rays.size());
  for (int i = 0; i < static_cast<int>(rays.size()); ++i) {
    val[i] = a.dot(rays[i]);
    int s = val[i].num().sign();
    if (s < 0)
      neg.push_back(i);
    else if (s > 0)
      pos.push_back(i);
    else
      zero.push_back(i);
  }
  if (pos.empty()) {
    for (int i : zero) zero_sets[i].insert(cut_index);
    return;
  }

  std::vector<QVector> new_rays;
  std::vector<std::set<int>> new_zero;
  for (int i : neg) {
    new_rays.push_back(rays[i]);
    new_zero.push_back(zero_sets[i]);
  }
  for (int i : zero) {
    new_rays.push_back(rays[i]);
    auto z = zero_sets[i];
    z.insert(cut_index);
    new_zero.push_back(std::move(z));
  }
  // Adjacent (pos, neg) pairs combine into rays on the hyperplane.
  for (int p : pos) {
    for (int n : neg) {
      std::set<int> common;
      std::set_intersection(zero_sets[p].begin(), zero_sets[p].end(), zero_sets[n].begin(),
                            zero_sets[n].end(), std::inserter(common, common.begin()));
      bool adjacent = true;
      for (int k = 0; k < static_cast<int>(rays.size()) && adjacent; ++k) {
        if (k == p || k == n) continue;
        adjacent = !std::includes(zero_sets[k].begin(), zero_sets[k].end(), common.begin(),
                                  common.end());
      }
      if (!adjacent) continue;
      QVector combo = rays[n] * val[p] - rays[p] * val[n];
      common.insert(cut_index);
      new_rays.push_back(std::move(combo));
      new_zero.push_back(std::move(common));
    }
  }
  rays = std::move(new_rays);
  zero_sets = std::move(new_zero);
}

QVector normalize_ray(const QVector& r) {
  ZVector p = primitive(r);
  QVector out(r.size());
  for (int i = 0; i < r.size(); ++i) out[i] = Rational(p[i]);
  return out;
}

}  // namespace

ConeGens cone_generators(const QMatrix& ineqs, const QMatrix& eqs) {
  int n = static_cast<int>(ineqs.cols() > 0 ? ineqs.cols() : eqs.cols());
  std::vector<QVector> lin;
  for (int i = 0; i < n; ++i) {
    QVector e = QVector::Zero(n);
    e[i] = Rational(1);
    lin.push_back(e);
  }
  std::vector<QVector> rays;
  std::vector<std::set<int>> zero_sets;
  int idx = 0;
  for (int i = 0; i < eqs.rows(); ++i) {
    QVector a = eqs.row(i).transpose();
    dd_cut(a, idx++, lin, rays, zero_sets);
    dd_cut(-a, idx++, lin, rays, zero_sets);
  }
  for (int i = 0; i < ineqs.rows(); ++i) {
    QVector a = ineqs.row(i).transpose();
    dd_cut(a, idx++, lin, rays, zero_sets);
  }

  // Reduce ray representatives modulo the lineality span, deterministically:
  // row-reduce the lineality basis and clear the pivot coordinates of each ray.
  if (!lin.empty() && !rays.empty()) {
    QMatrix lm(static_cast<int>(lin.size()), n);
    for (int i = 0; i < static_cast<int>(lin.size()); ++i) lm.row(i) = lin[i].transpose();
    std::vector<int> pivots = rref_in_place(lm);
    for (auto& r : rays) {
      for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
        r -= lm.row(i).transpose() * r[pivots[i]];
      }
    }
  }
  ConeGens out;
  for (auto& l : lin) out.lineality.push_back(normalize_ray(l));
  std::set<std::vector<std::string>> seen;
  std::vector<QVector> norm;
  for (auto& r : rays) {
    QVector nr = normalize_ray(r);
    std::vector<std::string> key;
    for (int i = 0; i < nr.size(); ++i) key.push_back(nr[i].str());
    if (seen.insert(key).second) norm.push_back(nr);
  }
  std::sort(norm.begin(), norm.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
  out.rays = std::move(norm);
  return out;
}

Polyhedron::Polyhedron(QMatrix ineq_normals, QVector ineq_offsets, QMatrix eq_normals,
                       QVector eq_offsets)
    : ineq_normals_(std::move(ineq_normals)),
      ineq_offsets_(std::move(ineq_offsets)),
      eq_normals_(std::move(eq_normals)),
      eq_offsets_(std::move(eq_offsets)) {
  if (ineq_normals_.rows() != ineq_offsets_.size() || eq_normals_.rows() != eq_offsets_.size())
    throw std::invalid_argument("polyhedron: constraint matrix/offset size mismatch");
  if (ineq_normals_.rows() > 0 && eq_normals_.rows() > 0 &&
      ineq_normals_.cols() != eq_normals_.cols())
    throw std::invalid_argument("polyhedron: ambient dimension mismatch");
}

Polyhedron Polyhedron::from_inequalities(const QMatrix& a, const QVector& b) {
  return Polyhedron(a, b, QMatrix(0, a.cols()), QVector(0));
}

void Polyhedron::ensure_vrep() const {
  if (vrep_done_) return;
  vrep_done_ = true;
  int n = ambient_dim();
  // Homogenize: C = {(x, t) : Ax - tb <= 0, Cx - td = 0, -t <= 0}.
  QMatrix hi(ineq_normals_.rows() + 1, n + 1);
  hi.setConstant(Rational(0));
  for (int i = 0; i < ineq_normals_.rows(); ++i) {
    hi.block(i, 0, 1, n) = ineq_normals_.row(i);
    hi(i, n) = -ineq_offsets_[i];
  }
  hi(ineq_normals_.rows(), n) = Rational(-1);
  QMatrix he(eq_normals_.rows(), n + 1);
  he.setConstant(Rational(0));
  for (int i = 0; i < eq_normals_.rows(); ++i) {
    he.block(i, 0, 1, n) = eq_normals_.row(i);
    he(i, n) = -eq_offsets_[i];
  }
  ConeGens g = cone_generators(hi, he);

  std::vector<QVector> verts, rays;
  auto push_ray = [&](const QVector& r) {
    QVector v = r.head(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) zero = zero && v[i] == Rational(0);
    if (!zero) rays.push_back(normalize_ray(v));
  };
  for (const auto& r : g.rays) {
    if (r[n] > Rational(0)) {
      verts.push_back((r / r[n]).head(n).eval());
    } else {
      push_ray(r);
    }
  }
  for (const auto& l : g.lineality) {
    push_ray(l);
    push_ray(-l);
  }
  std::sort(verts.begin(), verts.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
  std::sort(rays.begin(), rays.end(), [](const QVector& a, const QVector& b) { return lex_less(a, b); });
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const QVector& a, const QVector& b) { return lex_compare(a, b) == 0; }),
             rays.end());
  vertices_ = std::move(verts);
  rays_ = std::move(rays);
}

const std::vector<QVector>& Polyhedron::vertices() const {
  ensure_vrep();
  return vertices_;
}

const std::vector<QVector>& Polyhedron::rays() const {
  ensure_vrep();
  return rays_;
}

bool Polyhedron::is_empty() const {
  ensure_vrep();
  return vertices_.empty();
}

bool Polyhedron::is_bounded() const {
  ensure_vrep();
  return rays_.empty();
}

bool Polyhedron::contains(const QVector& x) const {
  for (int i = 0; i < ineq_normals_.rows(); ++i)
    if (ineq_normals_.row(i).transpose().dot(x) > ineq_offsets_[i]) return false;
  for (int i = 0; i < eq_normals_.rows(); ++i)
    if (!(eq_normals_.row(i).transpose().dot(x) == eq_offsets_[i])) return false;
  return true;
}

int Polyhedron::dim() const {
  ensure_vrep();
  if (vertices_.empty()) return -1;
  std::vector<QVector> dirs;
  for (size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(vertices_[i] - vertices_[0]);
  for (const auto& r : rays_) dirs.push_back(r);
  if (dirs.empty()) return 0;
  QMatrix m(static_cast<int>(dirs.size()), ambient_dim());
  for (int i = 0; i < m.rows(); ++i) m.row(i) = dirs[i].transpose();
  return rank(m);
}

std::vector<int> FaceLattice::f_vector() const {
  int top = 0;
  for (const auto& f : faces) top = std::max(top, f.dim);
  std::vector<int> fv(top + 1, 0);
  for (const auto& f : faces) fv[f.dim]++;
  return fv;
}

FaceLattice face_lattice(const Polyhedron& p) {
  if (p.is_empty()) throw std::invalid_argument("face_lattice: empty polyhedron");
  if (!p.is_bounded()) throw std::invalid_argument("face_lattice: unbounded polyhedron");
  FaceLattice fl;
  fl.vertices = p.vertices();
  int nv = static_cast<int>(fl.vertices.size());
  int d = p.dim();

  auto face_dim = [&](const std::vector<int>& vs) {
    if (vs.empty()) return -1;
    if (vs.size() == 1) return 0;
    QMatrix m(static_cast<int>(vs.size()) - 1, p.ambient_dim());
    for (size_t i = 1; i < vs.size(); ++i)
      m.row(static_cast<int>(i - 1)) = (fl.vertices[vs[i]] - fl.vertices[vs[0]]).transpose();
    return rank(m);
  };

  // Irredundant facets: tight sets of affine dimension d-1, deduped.
  std::vector<QVector> fn;
  std::vector<Rational> fo;
  std::vector<std::vector<int>> facet_verts;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < p.ineq_normals().rows(); ++i) {
    std::vector<int> tight;
    for (int v = 0; v < nv; ++v)
      if (p.ineq_normals().row(i).transpose().dot(fl.vertices[v]) == p.ineq_offsets()[i])
        tight.push_back(v);
    if (face_dim(tight) != d - 1) continue;
    if (!seen.insert(tight).second) continue;
    fn.push_back(p.ineq_normals().row(i).transpose());
    fo.push_back(p.ineq_offsets()[i]);
    facet_verts.push_back(std::move(tight));
  }
  fl.facet_normals = QMatrix(static_cast<int>(fn.size()), p.ambient_dim());
  fl.facet_offsets = QVector(static_cast<int>(fn.size()));
  for (size_t i = 0; i < fn.size(); ++i) {
    fl.facet_normals.row(static_cast<int>(i)) = fn[i].transpose();
    fl.facet_offsets[static_cast<int>(i)] = fo[i];
  }

  // Faces are intersections of facets; close the facet vertex sets under
  // pairwise intersection.
  std::set<std::vector<int>> face_set;
  std::vector<int> all(nv);
  for (int i = 0; i < nv; ++i) all[i] = i;
  face_set.insert(all);
  std::vector<std::vector<int>> frontier;
  for (const auto& fv : facet_verts) {
    if (face_set.insert(fv).second) frontier.push_back(fv);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      for (const auto& fv : facet_verts) {
        std::vector<int> inter;
        std::set_intersection(f.begin(), f.end(), fv.begin(), fv.end(),
                              std::back_inserter(inter));
        if (inter.empty()) continue;
        if (face_set.insert(inter).second) next.push_back(inter);
      }
    }
    frontier = std::move(next);
  }

  for (const auto& vs : face_set) {
    FaceLattice::Face f;
    f.dim = face_dim(vs);
    f.verts = vs;
    for (size_t i = 0; i < facet_verts.size(); ++i) {
      if (std::includes(facet_verts[i].begin(), facet_verts[i].end(), vs.begin(), vs.end()))
        f.facets.push_back(static_cast<int>(i));
    }
    fl.faces.push_back(std::move(f));
  }
  std::sort(fl.faces.begin(), fl.faces.end(), [](const FaceLattice::Face& a, const FaceLattice::Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  return fl;
}

AffineChart affine_chart(const std::vector<QVector>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_chart: no points");
  int n = static_cast<int>(pts[0].size());
  AffineChart ch;
  ch.base = pts[0];

  std::vector<QVector> basis;
  for (const auto& p : pts) {
    QVector d = p - ch.base;
    QMatrix bm(static_cast<int>(basis.size()) + 1, n);
    for (size_t i = 0; i < basis.size(); ++i) bm.row(static_cast<int>(i)) = basis[i].transpose();
    bm.row(static_cast<int>(basis.size())) = d.transpose();
    if (rank(bm) > static_cast<int>(basis.size())) basis.push_back(d);
  }
  ch.dim = static_cast<int>(basis.size());
  ch.basis = QMatrix(ch.dim, n);
  for (int i = 0; i < ch.dim; ++i) ch.basis.row(i) = basis[i].transpose();
  if (ch.dim > 0) {
    ch.to_chart = inverse(ch.basis * ch.basis.transpose()) * ch.basis;
  } else {
    ch.to_chart = QMatrix(0, n);
  }
  for (const auto& p : pts) ch.coords.push_back(ch.to_chart * (p - ch.base));
  return ch;
}

Polyhedron hull_of_points(const std::vector<QVector>& pts) {
  if (pts.empty()) throw std::invalid_argument("hull_of_points: no points");
  int n = static_cast<int>(pts[0].size());
  const QVector& p0 = pts[0];

  AffineChart ch = affine_chart(pts);
  int r = ch.dim;
  QMatrix dmat(std::max(r, 1), n);
  dmat.setConstant(Rational(0));
  for (int i = 0; i < r; ++i) dmat.row(i) = ch.basis.row(i);
  QMatrix normals = kernel_basis(dmat);  // rows n with dmat . n == 0
  QMatrix eqn(normals.rows(), n);
  QVector eqo(normals.rows());
  for (int i = 0; i < normals.rows(); ++i) {
    eqn.row(i) = normals.row(i);
    eqo[i] = normals.row(i).transpose().dot(p0);
  }

  if (r == 0) {
    return Polyhedron(QMatrix(0, n), QVector(0), eqn, eqo);
  }

  const QMatrix& m = ch.to_chart;
  const std::vector<QVector>& q = ch.coords;

  // Center at the centroid (interior of the hull in the chart) and polarize:
  // facets of conv(q) are vertices of {y : (q_i - c) . y <= 1}.
  QVector c = QVector::Zero(r);
  for (const auto& qi : q) c += qi;
  c /= Rational(static_cast<long>(q.size()));
  QMatrix polar_a(static_cast<int>(q.size()), r);
  QVector polar_b(static_cast<int>(q.size()));
  for (size_t i = 0; i < q.size(); ++i) {
    polar_a.row(static_cast<int>(i)) = (q[i] - c).transpose();
    polar_b[static_cast<int>(i)] = Rational(1);
  }
  Polyhedron polar = Polyhedron::from_inequalities(polar_a, polar_b);
  const auto& fverts = polar.vertices();
  if (!polar.rays().empty()) throw std::logic_error("hull_of_points: polar not bounded");

  // Chart facet y.(q - c) <= 1 pulls back through q = M (x - p0) to
  // (M^T y).x <= 1 + y.c + (M^T y).p0.
  QMatrix in(static_cast<int>(fverts.size()), n);
  QVector io(static_cast<int>(fverts.size()));
  for (size_t i = 0; i < fverts.size(); ++i) {
    QVector normal = m.transpose() * fverts[i];
    Rational off = Rational(1) + fverts[i].dot(c) + normal.dot(p0);
    in.row(static_cast<int>(i)) = normal.transpose();
    io[static_cast<int>(i)] = off;
  }
  return Polyhedron(in, io, eqn, eqo);
}

Polyhedron polyhedron_from_generators(const std::vector<QVector>& vertices,
                                      const std::vector<QVector>& rays) {
  if (vertices.empty()) throw std::invalid_argument("polyhedron_from_generators: no vertices");
  int n = static_cast<int>(vertices[0].size());
  if (rays.empty()) return hull_of_points(vertices);

  // Homogenize generators, compute the dual cone by double description, and
  // read its generators back as the inequalities/equalities of the primal.
  QMatrix g(static_cast<int>(vertices.size() + rays.size()), n + 1);
  int row = 0;
  for (const auto& v : vertices) {
    g.block(row, 0, 1, n) = v.transpose();
    g(row, n) = Rational(1);
    ++row;
  }
  for (const auto& r : rays) {
    g.block(row, 0, 1, n) = r.transpose();
    g(row, n) = Rational(0);
    ++row;
  }
  ConeGens dual = cone_generators(g, QMatrix(0, n + 1));

  std::vector<QVector> in_rows;
  std::vector<Rational> in_offs;
  std::vector<QVector> eq_rows;
  std::vector<Rational> eq_offs;
  auto dehom = [&](const QVector& d, bool equality) {
    QVector a = d.head(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) zero = zero && a[i] == Rational(0);
    if (zero) return;  // 0.x <= c with c >= 0, vacuous at t = 1
    if (equality) {
      eq_rows.push_back(a);
      eq_offs.push_back(-d[n]);
    } else {
      in_rows.push_back(a);
      in_offs.push_back(-d[n]);
    }
  };
  for (const auto& d : dual.rays) dehom(d, false);
  for (const auto& l : dual.lineality) dehom(l, true);

  QMatrix in(static_cast<int>(in_rows.size()), n);
  QVector io(static_cast<int>(in_rows.size()));
  for (size_t i = 0; i < in_rows.size(); ++i) {
    in.row(static_cast<int>(i)) = in_rows[i].transpose();
    io[static_cast<int>(i)] = in_offs[i];
  }
  QMatrix en(static_cast<int>(eq_rows.size()), n);
  QVector eo(static_cast<int>(eq_rows.size()));
  for (size_t i = 0; i < eq_rows.size(); ++i) {
    en.row(static_cast<int>(i)) = eq_rows[i].transpose();
    eo[static_cast<int>(i)] = eq_offs[i];
  }
  return Polyhedron(in, io, en, eo);
}

}  // namespace popdec
