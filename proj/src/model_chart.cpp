#include "popdec/model_chart.hpp"

#include <algorithm>
#include <stdexcept>

namespace popdec {

namespace {

int lex_compare_z(const ZVector& a, const ZVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

}  // namespace

ModelChart model_chart(const TropicalPolynomial& f, const Polyhedron& sigma) {
  int n = f.n;
  if (sigma.ambient_dim() != n)
    throw std::invalid_argument("model_chart: cell dimension does not match the polynomial");
  if (!sigma.rays().empty() || sigma.is_empty())
    throw std::invalid_argument("model_chart: the cell must be a bounded simplex");
  std::vector<QVector> verts = sigma.vertices();
  if (static_cast<int>(verts.size()) != n + 1)
    throw std::invalid_argument("model_chart: the cell must be a full-dimensional simplex");
  std::sort(verts.begin(), verts.end(),
            [](const QVector& a, const QVector& b) { return lex_less(a, b); });

  int k = n + 1;
  QMatrix hom(k, k);  // rows (v_i, 1)
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!verts[static_cast<size_t>(i)][j].is_integer())
        throw std::invalid_argument("model_chart: the cell must have lattice vertices");
      hom(i, j) = verts[static_cast<size_t>(i)][j];
    }
    hom(i, n) = Rational(1);
  }
  Rational det = determinant(hom);
  if (!(det == Rational(1) || det == Rational(-1)))
    throw std::invalid_argument("model_chart: the cone over the cell is not smooth");

  // Barycentric forms: row i of (hom^{-1})^T is 1 at v_i, 0 at the others;
  // its first n entries are the x-exponent of the generator, the last the
  // t-power.
  ZMatrix forms = to_integer(QMatrix(inverse(hom).transpose()));

  ModelChart chart;
  chart.names = chart_names(k);
  for (int i = 0; i < k; ++i) {
    chart.exponents.push_back(forms.row(i).head(n).transpose());
    chart.tpowers.push_back(forms(i, n));
  }
  for (int i = 0; i < k; ++i) {
    if (i) chart.relation += "*";
    chart.relation += chart.names[static_cast<size_t>(i)];
  }
  chart.relation += " = t";

  // generator exponents of each term: value of val + <m, .> at the vertices
  std::vector<ZVector> gamma;
  for (const auto& t : f.terms) {
    ZVector e(k);
    for (int i = 0; i < k; ++i) {
      Rational v = t.valuation + to_rational(t.exponent).dot(verts[static_cast<size_t>(i)]);
      if (!v.is_integer())
        throw std::invalid_argument("model_chart: term is not monomial in the chart generators");
      e[i] = v.num();
    }
    gamma.push_back(std::move(e));
  }
  chart.content = gamma[0];
  for (const auto& e : gamma)
    for (int i = 0; i < k; ++i)
      if (e[i] < chart.content[i]) chart.content[i] = e[i];
  chart.content_str = monomial_str(chart.content, chart.names);

  chart.g.n = k;
  for (size_t t = 0; t < f.terms.size(); ++t) {
    ResidueTerm rt = residue_of_term(f.terms[t]);
    rt.exponent = gamma[t] - chart.content;
    chart.g.terms.push_back(std::move(rt));
  }
  std::sort(chart.g.terms.begin(), chart.g.terms.end(),
            [](const ResidueTerm& a, const ResidueTerm& b) {
              return lex_compare_z(a.exponent, b.exponent) > 0;
            });
  chart.g_str = chart.g.str(chart.names);

  for (int i = 0; i < k; ++i) {
    ResiduePolynomial comp;
    comp.n = k;
    for (const auto& t : chart.g.terms)
      if (t.exponent[i].is_zero()) comp.terms.push_back(t);
    chart.components.emplace_back(chart.names[static_cast<size_t>(i)], comp.str(chart.names));
  }
  return chart;
}

}  // namespace popdec
