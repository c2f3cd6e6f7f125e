#include "popdec/dual_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace popdec {

namespace {

Rational mod_two(const Rational& r) {
  Rational two(2);
  Rational m = r - two * Rational((r / two).floor());
  if (m < Rational(0)) m = m + two;
  return m;
}

const TropicalTerm& term_with_exponent(const TropicalPolynomial& f, const ZVector& m) {
  for (const auto& t : f.terms)
    if (t.exponent == m) return t;
  throw std::logic_error("dual_intersection_complex: missing term for a subdivision point");
}

}  // namespace

DualComplexDiagram dual_intersection_complex(const TropicalPolynomial& f) {
  SmoothnessReport smooth = is_tropically_smooth(f);
  if (!smooth.smooth)
    throw std::invalid_argument("dual_intersection_complex: the hypersurface is not smooth");

  DualComplexDiagram out;
  out.sigma = tropical_hypersurface(f);
  const TropicalComplex& sigma = out.sigma;
  int n = sigma.ambient_dim;

  int mindim = sigma.dim;
  for (const auto& c : sigma.cells.cells) mindim = std::min(mindim, c.dim);

  for (const auto& c : sigma.cells.cells) {
    // the initial form at the cell is a linear section of a torus, after a
    // monomial change of coordinates; record which kind
    int s = static_cast<int>(c.points.size());
    CellAngleKind kind;
    if (s == 2) {
      kind.full_torus = true;
      kind.torus_factor = n - 1;
    } else {
      kind.complement_dim = s - 2;
      kind.torus_factor = n - s + 1;
    }
    out.cell_angle_kind[c.id] = kind;

    if (c.dim != mindim) continue;
    VertexChart chart;
    chart.cell = c.id;
    chart.vertex = c.vertices.front();
    std::vector<ZVector> pts;
    for (int i : c.points) pts.push_back(f.terms[static_cast<size_t>(i)].exponent);
    chart.base = base_monomial(pts);
    chart.basis = exponent_basis(pts);
    chart.phase_offset = QVector(static_cast<int>(chart.basis.size()));
    const TropicalTerm& base_term = term_with_exponent(f, chart.base);
    for (size_t i = 0; i < chart.basis.size(); ++i) {
      const TropicalTerm& t = term_with_exponent(f, ZVector(chart.base + chart.basis[i]));
      chart.phase_offset[static_cast<int>(i)] = mod_two(t.phase - base_term.phase);
    }
    out.charts.push_back(std::move(chart));
  }
  std::sort(out.charts.begin(), out.charts.end(),
            [](const VertexChart& a, const VertexChart& b) { return lex_less(a.vertex, b.vertex); });

  // adjacency: two charts share a cell when that cell covers both of them
  std::map<int, int> chart_of;  // sigma cell id -> chart index
  for (size_t i = 0; i < out.charts.size(); ++i) chart_of[out.charts[i].cell] = static_cast<int>(i);
  std::map<int, std::vector<int>> under;  // shared cell -> chart indices
  for (const auto& [cell, face] : sigma.cells.face_relation) {
    auto it = chart_of.find(face);
    if (it == chart_of.end()) continue;
    if (sigma.cells.cells[static_cast<size_t>(cell)].dim != mindim + 1) continue;
    under[cell].push_back(it->second);
  }
  for (auto& [cell, chs] : under) {
    std::sort(chs.begin(), chs.end());
    for (int i : chs) {
      for (int j : chs) {
        if (i == j) continue;
        const VertexChart& a = out.charts[static_cast<size_t>(i)];
        const VertexChart& b = out.charts[static_cast<size_t>(j)];
        if (static_cast<int>(a.basis.size()) != n || static_cast<int>(b.basis.size()) != n)
          continue;  // charts of a degenerate configuration carry no transition
        QMatrix ba(n, n), bb(n, n);
        for (int rr = 0; rr < n; ++rr) {
          ba.row(rr) = to_rational(a.basis[static_cast<size_t>(rr)]).transpose();
          bb.row(rr) = to_rational(b.basis[static_cast<size_t>(rr)]).transpose();
        }
        ChartTransition tr;
        tr.from = i;
        tr.to = j;
        tr.cell = cell;
        tr.matrix = to_integer(QMatrix(bb * inverse(ba)));
        QVector shifted = to_rational(tr.matrix) * a.phase_offset;
        tr.translation = QVector(n);
        for (int rr = 0; rr < n; ++rr)
          tr.translation[rr] = mod_two(b.phase_offset[rr] - shifted[rr]);
        out.transitions.push_back(std::move(tr));
      }
    }
  }
  std::sort(out.transitions.begin(), out.transitions.end(),
            [](const ChartTransition& a, const ChartTransition& b) {
              if (a.cell != b.cell) return a.cell < b.cell;
              if (a.from != b.from) return a.from < b.from;
              return a.to < b.to;
            });
  return out;
}

}  // namespace popdec
