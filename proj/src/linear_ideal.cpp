#include "popdec/linear_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

#include "popdec/snf.hpp"

namespace popdec {

std::string GaussianRational::str() const {
  if (im == Rational(0)) return re.str();
  std::string s;
  if (!(re == Rational(0))) s = re.str() + (im > Rational(0) ? "+" : "");
  if (im == Rational(1))
    s += "i";
  else if (im == Rational(-1))
    s += "-i";
  else
    s += im.str() + "*i";
  return s;
}

int rank(const GQMatrix& m) {
  GQMatrix a = m;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussianRational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return r;
}

GQMatrix kernel_rows(const GQMatrix& m) {
  GQMatrix a = m;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    GaussianRational lead = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] = a[r][j] / lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      GaussianRational f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  GQMatrix k;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<GaussianRational> v(cols);
    v[c] = GaussianRational(Rational(1));
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -a[i][c];
    k.push_back(std::move(v));
  }
  return k;
}

std::vector<ZVector> LinearIdeal::monomial_list() const {
  std::vector<ZVector> out;
  auto seen = [&](const ZVector& e) {
    for (const auto& m : out)
      if (m == e) return true;
    return false;
  };
  for (const auto& g : generators)
    for (const auto& t : g)
      if (!seen(t.exponent)) out.push_back(t.exponent);
  return out;
}

GQMatrix LinearIdeal::coefficient_matrix(const std::vector<ZVector>& monomials) const {
  GQMatrix a(generators.size(), std::vector<GaussianRational>(monomials.size()));
  for (size_t i = 0; i < generators.size(); ++i) {
    for (const auto& t : generators[i]) {
      for (size_t j = 0; j < monomials.size(); ++j) {
        if (monomials[j] == t.exponent) {
          a[i][j] = a[i][j] + t.coeff;
          break;
        }
      }
    }
  }
  return a;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int max_var = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  Integer parse_integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw std::invalid_argument("parse: expected integer at position " + std::to_string(start));
    return Integer(s.substr(start, pos - start));
  }

  Rational parse_rational() {
    Integer num = parse_integer();
    if (eat('/')) {
      Integer den = parse_integer();
      return Rational(num, den);
    }
    return Rational(num);
  }

  // factor := rational | 'i' | variable power | '(' signed sum of coefficient
  // factors ')'
  struct Factor {
    GaussianRational coeff = GaussianRational(Rational(1));
    int var = -1;  // 0-based variable index, or -1
    Integer exp = Integer(1);
  };

  GaussianRational parse_coeff_sum() {  // inside parentheses, no variables
    GaussianRational total;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      first = false;
      GaussianRational term(Rational(1));
      bool any = false;
      while (true) {
        skip_ws();
        if (pos < s.size() && s[pos] == 'i') {
          ++pos;
          term = term * GaussianRational(Rational(0), Rational(1));
          any = true;
        } else if (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])))) {
          term = term * GaussianRational(parse_rational());
          any = true;
        } else {
          break;
        }
        if (!eat('*')) break;
      }
      if (!any) throw std::invalid_argument("parse: empty term in coefficient sum");
      if (sign < 0) term = -term;
      total = total + term;
    }
    return total;
  }

  Factor parse_factor() {
    skip_ws();
    Factor f;
    if (pos >= s.size()) throw std::invalid_argument("parse: unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      f.coeff = parse_coeff_sum();
      if (!eat(')')) throw std::invalid_argument("parse: expected ')'");
      return f;
    }
    if (c == 'i') {
      ++pos;
      f.coeff = GaussianRational(Rational(0), Rational(1));
      return f;
    }
    if (c == 'x') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("parse: variable needs an index, e.g. x1");
      int idx = std::stoi(s.substr(start, pos - start));
      if (idx < 1) throw std::invalid_argument("parse: variable indices start at 1");
      max_var = std::max(max_var, idx);
      f.var = idx - 1;
      if (eat('^')) f.exp = parse_integer();
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      f.coeff = GaussianRational(parse_rational());
      return f;
    }
    throw std::invalid_argument(std::string("parse: unexpected character '") + c + "'");
  }

  // term := factor ('*' factor)* ; returns coefficient and exponent map
  void parse_term(GaussianRational& coeff, std::map<int, Integer>& exps) {
    coeff = GaussianRational(Rational(1));
    exps.clear();
    while (true) {
      Factor f = parse_factor();
      coeff = coeff * f.coeff;
      if (f.var >= 0) {
        auto [it, fresh] = exps.try_emplace(f.var, Integer(0));
        it->second = it->second + f.exp;
      }
      if (!eat('*')) break;
    }
  }

  std::vector<std::pair<GaussianRational, std::map<int, Integer>>> parse_generator() {
    std::vector<std::pair<GaussianRational, std::map<int, Integer>>> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size() || s[pos] == ';') break;
      int sign = 1;
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        throw std::invalid_argument("parse: expected '+' or '-' between terms");
      }
      first = false;
      GaussianRational coeff;
      std::map<int, Integer> exps;
      parse_term(coeff, exps);
      if (sign < 0) coeff = -coeff;
      terms.push_back({coeff, std::move(exps)});
    }
    if (terms.empty()) throw std::invalid_argument("parse: empty generator");
    return terms;
  }
};

}  // namespace

LinearIdeal parse_linear_ideal(const std::string& text, int n) {
  Parser p(text);
  std::vector<std::vector<std::pair<GaussianRational, std::map<int, Integer>>>> raw;
  while (true) {
    raw.push_back(p.parse_generator());
    if (!p.eat(';')) break;
  }
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("parse: trailing input");
  if (n < 0) n = p.max_var;

  LinearIdeal ideal;
  ideal.n = n;
  for (auto& gen : raw) {
    std::vector<IdealTerm> terms;
    for (auto& [coeff, exps] : gen) {
      ZVector e = ZVector::Zero(n);
      for (auto& [var, ex] : exps) {
        if (var >= n) throw std::invalid_argument("parse: variable index exceeds dimension");
        e[var] = ex;
      }
      // merge duplicate monomials within a generator
      bool merged = false;
      for (auto& t : terms) {
        if (t.exponent == e) {
          t.coeff = t.coeff + coeff;
          merged = true;
          break;
        }
      }
      if (!merged) terms.push_back({std::move(e), coeff});
    }
    std::erase_if(terms, [](const IdealTerm& t) { return t.coeff.is_zero(); });
    if (terms.empty()) throw std::invalid_argument("parse: generator is identically zero");
    ideal.generators.push_back(std::move(terms));
  }
  return ideal;
}

Arrangement arrangement_from_ideal(const LinearIdeal& ideal) {
  Arrangement arr;
  arr.monomials = ideal.monomial_list();
  GQMatrix a = ideal.coefficient_matrix(arr.monomials);
  int cols = static_cast<int>(arr.monomials.size());
  if (rank(a) != static_cast<int>(a.size()))
    throw std::invalid_argument("arrangement_from_ideal: dependent generator set");
  GQMatrix k = kernel_rows(a);
  int d1 = static_cast<int>(k.size());  // d+1
  if (d1 == 0) throw std::invalid_argument("arrangement_from_ideal: ideal has no solutions");

  // Normalize so that the first independent columns of B carry an identity
  // block: B = S^{-1} K for the leading invertible column submatrix S.
  std::vector<int> lead;
  for (int c = 0; c < cols && static_cast<int>(lead.size()) < d1; ++c) {
    std::vector<int> cand = lead;
    cand.push_back(c);
    GQMatrix sub(d1, std::vector<GaussianRational>(cand.size()));
    for (int i = 0; i < d1; ++i)
      for (size_t j = 0; j < cand.size(); ++j) sub[i][j] = k[i][cand[j]];
    if (rank(sub) == static_cast<int>(cand.size())) lead = cand;
  }
  // Solve S^T X^T ... do the normalization by row reduction of the selected
  // columns: augment K with the selected square block and eliminate.
  GQMatrix work = k;
  for (int j = 0; j < d1; ++j) {
    int c = lead[j];
    int piv = -1;
    for (int i = j; i < d1; ++i)
      if (!work[i][c].is_zero()) {
        piv = i;
        break;
      }
    std::swap(work[j], work[piv]);
    GaussianRational l = work[j][c];
    for (int t = 0; t < cols; ++t) work[j][t] = work[j][t] / l;
    for (int i = 0; i < d1; ++i) {
      if (i == j || work[i][c].is_zero()) continue;
      GaussianRational f = work[i][c];
      for (int t = 0; t < cols; ++t) work[i][t] = work[i][t] - f * work[j][t];
    }
  }
  arr.embedding = std::move(work);
  arr.proj_dim = d1 - 1;
  arr.hyperplanes = GQMatrix(cols, std::vector<GaussianRational>(d1));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < d1; ++i) arr.hyperplanes[j][i] = arr.embedding[i][j];
  arr.essential = is_essential(ideal);
  return arr;
}

bool is_essential(const LinearIdeal& ideal) {
  std::vector<ZVector> mons = ideal.monomial_list();
  if (mons.empty()) return false;
  GQMatrix a = ideal.coefficient_matrix(mons);
  if (rank(a) != static_cast<int>(ideal.generators.size())) return false;
  // Each generator must be affine-linear in some lattice basis, i.e. its
  // exponent differences must span a saturated sublattice. The arrangement's
  // kernel matrix then has full row rank by construction.
  for (const auto& gen : ideal.generators) {
    if (gen.size() <= 1 || ideal.n == 0) continue;
    ZMatrix diffs(static_cast<int>(gen.size()) - 1, ideal.n);
    for (size_t i = 1; i < gen.size(); ++i)
      diffs.row(static_cast<int>(i - 1)) = (gen[i].exponent - gen[0].exponent).transpose();
    for (const Integer& f : invariant_factors(diffs))
      if (!(f == Integer(1))) return false;
  }
  return true;
}

std::vector<std::vector<GaussianRational>> circuit_forms(const GQMatrix& a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  // Vector in rowspan(a) with support inside S: kernel of the complement
  // column restriction of the kernel of a ... done directly: rowspan vectors
  // are y^T a; support condition is linear in y.
  std::vector<std::vector<int>> supports;
  std::vector<std::vector<GaussianRational>> out;
  std::vector<std::vector<int>> subsets;
  std::vector<int> idx(cols);
  for (int i = 0; i < cols; ++i) idx[i] = i;
  // enumerate subsets in size order
  for (int size = 1; size <= cols; ++size) {
    std::vector<int> pick(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == size) {
        for (const auto& s : supports) {
          if (std::includes(pick.begin(), pick.end(), s.begin(), s.end())) return;
        }
        // y^T a supported in pick: y in kernel of a restricted to other cols
        std::vector<int> other;
        for (int c = 0; c < cols; ++c)
          if (!std::binary_search(pick.begin(), pick.end(), c)) other.push_back(c);
        GQMatrix ys;
        if (other.empty()) {
          // no columns to avoid, so any combination of the rows qualifies
          ys.assign(rows, std::vector<GaussianRational>(rows));
          for (int j = 0; j < rows; ++j) ys[j][j] = GaussianRational(Rational(1));
        } else {
          GQMatrix restr(other.size(), std::vector<GaussianRational>(rows));
          for (size_t i = 0; i < other.size(); ++i)
            for (int j = 0; j < rows; ++j) restr[i][j] = a[j][other[i]];
          ys = kernel_rows(restr);
        }
        for (const auto& y : ys) {
          std::vector<GaussianRational> v(cols);
          for (int c = 0; c < cols; ++c) {
            GaussianRational acc;
            for (int j = 0; j < rows; ++j) acc = acc + GaussianRational(y[j]) * a[j][c];
            v[c] = acc;
          }
          std::vector<int> supp;
          for (int c = 0; c < cols; ++c)
            if (!v[c].is_zero()) supp.push_back(c);
          if (supp.empty() || supp != pick) continue;  // exact support match
          supports.push_back(pick);
          out.push_back(std::move(v));
          break;
        }
        return;
      }
      for (int c = start; c < cols; ++c) {
        pick[depth] = c;
        rec(c + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

LinearIdeal initial_linear_ideal(const LinearIdeal& ideal, const QVector& w) {
  std::vector<ZVector> mons = ideal.monomial_list();
  GQMatrix a = ideal.coefficient_matrix(mons);
  auto circuits = circuit_forms(a);
  LinearIdeal out;
  out.n = ideal.n;
  for (const auto& c : circuits) {
    Rational best;
    bool first = true;
    std::vector<Rational> vals(c.size());
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      vals[j] = to_rational(mons[j]).dot(w);
      if (first || vals[j] < best) {
        best = vals[j];
        first = false;
      }
    }
    std::vector<IdealTerm> terms;
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j].is_zero()) continue;
      if (vals[j] == best) terms.push_back({mons[j], c[j]});
    }
    out.generators.push_back(std::move(terms));
  }
  return out;
}

bool same_linear_span(const LinearIdeal& a, const LinearIdeal& b) {
  if (a.n != b.n) return false;
  LinearIdeal merged;
  merged.n = a.n;
  merged.generators = a.generators;
  for (const auto& g : b.generators) merged.generators.push_back(g);
  std::vector<ZVector> mons = merged.monomial_list();
  GQMatrix ma = a.coefficient_matrix(mons);
  GQMatrix mb = b.coefficient_matrix(mons);
  GQMatrix mm = merged.coefficient_matrix(mons);
  return rank(ma) == rank(mm) && rank(mb) == rank(mm);
}

}  // namespace popdec
