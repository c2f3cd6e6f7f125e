#include "popdec/tropical.hpp"

#include <algorithm>
#include <stdexcept>

#include "popdec/snf.hpp"

namespace popdec {

namespace {

int lex_compare_z(const ZVector& a, const ZVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

// Rows span the direction space of the cell: vertex differences and rays.
QMatrix cell_directions(const PolyCell& c, int n) {
  int rows = std::max(0, static_cast<int>(c.vertices.size()) - 1) + static_cast<int>(c.rays.size());
  QMatrix d(rows, n);
  int r = 0;
  for (size_t i = 1; i < c.vertices.size(); ++i)
    d.row(r++) = (c.vertices[i] - c.vertices[0]).transpose();
  for (const auto& ray : c.rays) d.row(r++) = ray.transpose();
  return d;
}

// Saturated lattice orthogonal to the cell's directions (q x n, q = codim).
ZMatrix normal_lattice(const PolyCell& c, int n) {
  return integer_kernel_basis(cell_directions(c, n));
}

// Saturated lattice of the cell's direction space (dim x n).
ZMatrix direction_lattice(const PolyCell& c, int n) {
  return integer_kernel_basis(to_rational(normal_lattice(c, n)));
}

ResiduePolynomial residue_from_points(const TropicalPolynomial& f, const std::vector<int>& idx) {
  ResiduePolynomial out;
  out.n = f.n;
  for (int i : idx) out.terms.push_back(residue_of_term(f.terms[static_cast<size_t>(i)]));
  std::sort(out.terms.begin(), out.terms.end(), [](const ResidueTerm& a, const ResidueTerm& b) {
    return lex_compare_z(a.exponent, b.exponent) > 0;
  });
  return out;
}

void sort_generators(std::vector<QVector>& gens) {
  std::sort(gens.begin(), gens.end(), [](const QVector& a, const QVector& b) {
    return lex_less(a, b);
  });
}

}  // namespace

TropicalComplex tropical_hypersurface(const TropicalPolynomial& f) {
  TropicalComplex out;
  out.ambient_dim = f.n;
  out.cells.ambient_dim = f.n;
  if (f.terms.size() < 2) return out;
  int n = f.n;
  int k = static_cast<int>(f.terms.size());

  std::vector<ZVector> pts;
  QVector hts(k);
  for (int i = 0; i < k; ++i) {
    pts.push_back(f.terms[static_cast<size_t>(i)].exponent);
    hts[i] = f.terms[static_cast<size_t>(i)].valuation;
  }
  PolyComplex sub = regular_subdivision(pts, hts);

  // One tropical cell per positive-dimensional subdivision cell: the set of
  // weights whose minimum is attained on all of the cell's points.
  std::vector<int> dual_id(sub.cells.size(), -1);
  for (const PolyCell& c : sub.cells) {
    if (c.dim < 1) continue;
    std::vector<char> on(static_cast<size_t>(k), 0);
    for (int i : c.points) on[static_cast<size_t>(i)] = 1;
    int anchor = c.points[0];

    QMatrix eq(static_cast<int>(c.points.size()) - 1, n);
    QVector eqb(eq.rows());
    for (size_t i = 1; i < c.points.size(); ++i) {
      eq.row(static_cast<int>(i) - 1) =
          to_rational(ZVector(pts[static_cast<size_t>(c.points[i])] -
                              pts[static_cast<size_t>(anchor)]))
              .transpose();
      eqb[static_cast<int>(i) - 1] = hts[anchor] - hts[c.points[i]];
    }
    int off = k - static_cast<int>(c.points.size());
    QMatrix ineq(off, n);
    QVector inb(off);
    int r = 0;
    for (int j = 0; j < k; ++j) {
      if (on[static_cast<size_t>(j)]) continue;
      ineq.row(r) =
          to_rational(ZVector(pts[static_cast<size_t>(anchor)] - pts[static_cast<size_t>(j)]))
              .transpose();
      inb[r] = hts[j] - hts[anchor];
      ++r;
    }
    Polyhedron p(ineq, inb, eq, eqb);

    PolyCell cell;
    cell.id = static_cast<int>(out.cells.cells.size());
    cell.dim = p.dim();
    cell.vertices = p.vertices();
    for (const auto& ray : p.rays()) cell.rays.push_back(to_rational(primitive(ray)));
    sort_generators(cell.vertices);
    sort_generators(cell.rays);
    cell.points = c.points;
    dual_id[static_cast<size_t>(c.id)] = cell.id;
    out.dual_cell[cell.id] = c.id;
    out.initial[cell.id] = residue_from_points(f, c.points);

    if (c.dim == 1) {
      // facet of the hypersurface; its multiplicity is the lattice length of
      // the dual edge
      QVector diff = c.vertices[1] - c.vertices[0];
      ZVector prim = primitive(diff);
      int j = 0;
      while (prim[j].is_zero()) ++j;
      out.weights[cell.id] = Rational(to_integer(diff)[j], prim[j]).num();
    }
    out.cells.cells.push_back(std::move(cell));
  }

  // Dual cells reverse inclusion: if e is a facet of c in the subdivision,
  // the cell dual to c is a facet of the cell dual to e.
  for (const auto& [c, e] : sub.face_relation) {
    if (sub.cells[static_cast<size_t>(c)].dim < 1 || sub.cells[static_cast<size_t>(e)].dim < 1)
      continue;
    out.cells.face_relation.push_back(
        {dual_id[static_cast<size_t>(e)], dual_id[static_cast<size_t>(c)]});
  }
  std::sort(out.cells.face_relation.begin(), out.cells.face_relation.end());
  out.dim = n - 1;
  return out;
}

BalanceReport check_balanced(const TropicalComplex& t) {
  BalanceReport rep;
  if (t.dim <= 0) return rep;
  int n = t.ambient_dim;
  for (int tau : t.cells.cells_of_dim(t.dim - 1)) {
    const PolyCell& tc = t.cells.cells[static_cast<size_t>(tau)];
    ZMatrix proj = normal_lattice(tc, n);  // quotient coordinates: v -> proj * v
    int q = static_cast<int>(proj.rows());

    std::vector<std::pair<Integer, ZVector>> parts;
    ZVector sum = ZVector::Zero(q);
    for (const auto& [sid, fid] : t.cells.face_relation) {
      if (fid != tau) continue;
      const PolyCell& sc = t.cells.cells[static_cast<size_t>(sid)];
      if (sc.dim != t.dim) continue;
      auto wit = t.weights.find(sid);
      if (wit == t.weights.end())
        throw std::invalid_argument("check_balanced: maximal cell without a weight");

      // primitive generator of sigma's direction lattice modulo tau's
      ZMatrix ls = direction_lattice(sc, n);
      ZMatrix img(ls.rows(), q);
      for (int i = 0; i < ls.rows(); ++i)
        img.row(i) = (proj * ZVector(ls.row(i).transpose())).transpose();
      ZMatrix h = row_hnf(img);
      if (h.rows() != 1)
        throw std::invalid_argument("check_balanced: face relation is not a facet pair");
      ZVector gen = h.row(0).transpose();

      // orient it to point from tau into sigma
      QVector cls = QVector::Zero(q);
      bool found = false;
      QMatrix projq = to_rational(proj);
      for (const auto& v : sc.vertices) {
        cls = projq * (v - tc.vertices[0]);
        for (int i = 0; i < q && !found; ++i) found = !(cls[i] == Rational(0));
        if (found) break;
      }
      for (size_t ri = 0; ri < sc.rays.size() && !found; ++ri) {
        cls = projq * sc.rays[ri];
        for (int i = 0; i < q && !found; ++i) found = !(cls[i] == Rational(0));
      }
      if (!found) throw std::invalid_argument("check_balanced: degenerate incident cell");
      int j = 0;
      while (gen[j].is_zero()) ++j;
      if ((cls[j] > Rational(0)) != (gen[j] > Integer(0))) gen = -gen;

      sum += wit->second * gen;
      parts.emplace_back(wit->second, std::move(gen));
    }

    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      if (a.first < b.first) return true;
      if (b.first < a.first) return false;
      return lex_compare_z(a.second, b.second) < 0;
    });
    BalanceEntry entry;
    entry.tau = tau;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) entry.sum += "+";
      entry.sum += parts[i].first.str() + "*(";
      for (int j = 0; j < parts[i].second.size(); ++j) {
        if (j) entry.sum += ",";
        entry.sum += parts[i].second[j].str();
      }
      entry.sum += ")";
    }
    entry.sum += "=0";
    entry.ok = true;
    for (int i = 0; i < q; ++i) entry.ok = entry.ok && sum[i].is_zero();
    rep.balanced = rep.balanced && entry.ok;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

ZVector base_monomial(const std::vector<ZVector>& pts) {
  auto degree = [](const ZVector& m) {
    Integer s(0);
    for (int i = 0; i < m.size(); ++i) s = s + m[i];
    return s;
  };
  size_t base = 0;
  Integer dbase = degree(pts[0]);
  for (size_t i = 1; i < pts.size(); ++i) {
    Integer d = degree(pts[i]);
    if (d < dbase || (d == dbase && lex_compare_z(pts[i], pts[base]) > 0)) {
      base = i;
      dbase = d;
    }
  }
  return pts[base];
}

std::vector<ZVector> exponent_basis(const std::vector<ZVector>& pts) {
  ZVector base = base_monomial(pts);
  std::vector<ZVector> basis;
  for (const auto& m : pts)
    if (!(m == base)) basis.push_back(m - base);
  std::sort(basis.begin(), basis.end(),
            [](const ZVector& a, const ZVector& b) { return lex_compare_z(a, b) > 0; });
  return basis;
}

SmoothnessReport is_tropically_smooth(const TropicalPolynomial& f) {
  if (f.terms.size() < 2)
    throw std::invalid_argument("is_tropically_smooth: a hypersurface needs at least two terms");
  std::vector<ZVector> pts;
  QVector hts(static_cast<int>(f.terms.size()));
  for (size_t i = 0; i < f.terms.size(); ++i) {
    pts.push_back(f.terms[i].exponent);
    hts[static_cast<int>(i)] = f.terms[i].valuation;
  }
  PolyComplex sub = regular_subdivision(pts, hts);
  TropicalComplex trop = tropical_hypersurface(f);
  std::vector<int> trop_of(sub.cells.size(), -1);
  for (const auto& [tc, sc] : trop.dual_cell) trop_of[static_cast<size_t>(sc)] = tc;

  int d = sub.max_dim();
  SmoothnessReport rep;
  std::vector<VertexWitness> fails;
  for (const PolyCell& c : sub.cells) {
    if (c.dim != d) continue;
    const PolyCell& dual = trop.cells.cells[static_cast<size_t>(trop_of[static_cast<size_t>(c.id)])];
    VertexWitness wit;
    wit.vertex = dual.vertices.front();
    wit.initial = residue_from_points(f, c.points).str();

    std::vector<ZVector> cellpts;
    for (int i : c.points) cellpts.push_back(pts[static_cast<size_t>(i)]);
    bool good = static_cast<int>(cellpts.size()) == c.dim + 1;
    if (good) good = normalized_volume(cellpts) == Integer(1);
    if (good) {
      wit.basis = exponent_basis(cellpts);
      rep.witnesses.push_back(std::move(wit));
    } else {
      fails.push_back(std::move(wit));
    }
  }
  auto by_vertex = [](const VertexWitness& a, const VertexWitness& b) {
    return lex_less(a.vertex, b.vertex);
  };
  if (fails.empty()) {
    rep.smooth = true;
    std::sort(rep.witnesses.begin(), rep.witnesses.end(), by_vertex);
  } else {
    rep.smooth = false;
    rep.witnesses.clear();
    rep.counterexample = *std::min_element(fails.begin(), fails.end(), by_vertex);
  }
  return rep;
}

namespace {

bool ray_in_recession(const Polyhedron& p, const QVector& r) {
  QVector a = p.ineq_normals() * r;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > Rational(0)) return false;
  QVector b = p.eq_normals() * r;
  for (int i = 0; i < b.size(); ++i)
    if (!(b[i] == Rational(0))) return false;
  return true;
}

std::string generator_key(const std::vector<QVector>& verts, const std::vector<QVector>& rays) {
  std::string key;
  for (const auto& v : verts) {
    key += "(";
    for (int i = 0; i < v.size(); ++i) key += v[i].str() + ",";
    key += ")";
  }
  key += "|";
  for (const auto& r : rays) {
    key += "(";
    for (int i = 0; i < r.size(); ++i) key += r[i].str() + ",";
    key += ")";
  }
  return key;
}

}  // namespace

TropicalComplex stable_intersection_transverse(const TropicalComplex& a,
                                               const TropicalComplex& b) {
  if (a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("stable_intersection_transverse: ambient dimensions differ");
  int n = a.ambient_dim;

  struct Piece {
    int dim = 0;
    std::vector<QVector> verts, rays;
    Integer weight;
    bool weighted = false;
  };
  std::map<std::string, Piece> pieces;

  std::vector<Polyhedron> bpoly;
  for (const PolyCell& cb : b.cells.cells) bpoly.push_back(b.cells.cell_polyhedron(cb.id));

  for (const PolyCell& ca : a.cells.cells) {
    Polyhedron pa = a.cells.cell_polyhedron(ca.id);
    bool amax = a.weights.count(ca.id) > 0;
    for (const PolyCell& cb : b.cells.cells) {
      const Polyhedron& pb = bpoly[static_cast<size_t>(cb.id)];

      int ri = static_cast<int>(pa.ineq_normals().rows() + pb.ineq_normals().rows());
      int re = static_cast<int>(pa.eq_normals().rows() + pb.eq_normals().rows());
      QMatrix ineq(ri, n), eq(re, n);
      QVector inb(ri), eqb(re);
      ineq.topRows(pa.ineq_normals().rows()) = pa.ineq_normals();
      ineq.bottomRows(pb.ineq_normals().rows()) = pb.ineq_normals();
      inb.head(pa.ineq_offsets().size()) = pa.ineq_offsets();
      inb.tail(pb.ineq_offsets().size()) = pb.ineq_offsets();
      eq.topRows(pa.eq_normals().rows()) = pa.eq_normals();
      eq.bottomRows(pb.eq_normals().rows()) = pb.eq_normals();
      eqb.head(pa.eq_offsets().size()) = pa.eq_offsets();
      eqb.tail(pb.eq_offsets().size()) = pb.eq_offsets();
      Polyhedron pi(ineq, inb, eq, eqb);
      if (pi.is_empty()) continue;

      bool bmax = b.weights.count(cb.id) > 0;
      if (amax && bmax) {
        QMatrix da = cell_directions(ca, n), db = cell_directions(cb, n);
        QMatrix stacked(da.rows() + db.rows(), n);
        stacked.topRows(da.rows()) = da;
        stacked.bottomRows(db.rows()) = db;
        if (rank(stacked) != n)
          throw std::invalid_argument("stable_intersection_transverse: cells " +
                                      std::to_string(ca.id) + " and " + std::to_string(cb.id) +
                                      " intersect non-transversely");
      }

      std::vector<QVector> verts = pi.vertices();
      std::vector<QVector> rays;
      for (const auto& r : pi.rays()) rays.push_back(to_rational(primitive(r)));
      sort_generators(verts);
      sort_generators(rays);
      std::string key = generator_key(verts, rays);
      auto it = pieces.find(key);
      if (it == pieces.end()) {
        Piece p;
        p.dim = pi.dim();
        p.verts = std::move(verts);
        p.rays = std::move(rays);
        it = pieces.emplace(std::move(key), std::move(p)).first;
      }
      if (amax && bmax) {
        ZMatrix la = direction_lattice(ca, n), lb = direction_lattice(cb, n);
        ZMatrix stacked(la.rows() + lb.rows(), n);
        stacked.topRows(la.rows()) = la;
        stacked.bottomRows(lb.rows()) = lb;
        Integer index(1);
        for (const Integer& d : invariant_factors(stacked)) index = index * d;
        it->second.weight =
            it->second.weight + a.weights.at(ca.id) * b.weights.at(cb.id) * index;
        it->second.weighted = true;
      }
    }
  }

  std::vector<std::pair<std::string, Piece>> ordered;
  for (auto& [key, p] : pieces) ordered.emplace_back(key, std::move(p));
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.second.dim != y.second.dim) return x.second.dim < y.second.dim;
    return x.first < y.first;
  });

  TropicalComplex out;
  out.ambient_dim = n;
  out.cells.ambient_dim = n;
  for (auto& [key, p] : ordered) {
    PolyCell cell;
    cell.id = static_cast<int>(out.cells.cells.size());
    cell.dim = p.dim;
    cell.vertices = p.verts;
    cell.rays = p.rays;
    out.cells.cells.push_back(std::move(cell));
    out.dim = std::max(out.dim, p.dim);
    if (p.weighted) out.weights[static_cast<int>(out.cells.cells.size()) - 1] = p.weight;
  }
  for (const PolyCell& big : out.cells.cells) {
    Polyhedron pb = out.cells.cell_polyhedron(big.id);
    for (const PolyCell& small : out.cells.cells) {
      if (small.dim != big.dim - 1) continue;
      bool inside = true;
      for (const auto& v : small.vertices) inside = inside && pb.contains(v);
      for (const auto& r : small.rays) inside = inside && ray_in_recession(pb, r);
      if (inside) out.cells.face_relation.push_back({big.id, small.id});
    }
  }
  return out;
}

}  // namespace popdec
