#include "popdec/tropical_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace popdec {

std::optional<Rational> half_turn_phase(const GaussianRational& c) {
  Rational zero(0);
  if (c.im == zero) {
    if (c.re == zero) return std::nullopt;
    return c.re > zero ? Rational(0) : Rational(1);
  }
  if (c.re == zero) return c.im > zero ? Rational(1, 2) : Rational(3, 2);
  if (c.re == c.im) return c.re > zero ? Rational(1, 4) : Rational(5, 4);
  if (c.re == -c.im) return c.re > zero ? Rational(7, 4) : Rational(3, 4);
  return std::nullopt;
}

namespace {

int lex_compare_z(const ZVector& a, const ZVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

struct TropParser {
  const std::string& s;
  size_t pos = 0;
  bool saw_named = false;    // x / y / z
  bool saw_indexed = false;  // x1, x2, ...
  int max_var = 0;

  explicit TropParser(const std::string& text) : s(text) {}

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
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
      throw std::invalid_argument("parse: expected integer at position " + std::to_string(start));
    return Integer(s.substr(start, pos - start));
  }

  Rational parse_rational() {
    Integer num = parse_integer();
    if (eat('/')) return Rational(num, parse_integer());
    return Rational(num);
  }

  // exponent after '^': either an integer or a parenthesized rational
  Rational parse_exponent() {
    if (eat('(')) {
      Rational e = parse_rational();
      if (!eat(')')) throw std::invalid_argument("parse: expected ')' after exponent");
      return e;
    }
    return Rational(parse_integer());
  }

  GaussianRational parse_coeff_sum() {  // inside parentheses, numbers and i only
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
        } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
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

  int variable_index() {  // consumes the variable name, returns 0-based index
    char c = s[pos];
    ++pos;
    if (c == 'x' && pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      int idx = std::stoi(s.substr(start, pos - start));
      if (idx < 1) throw std::invalid_argument("parse: variable indices start at 1");
      saw_indexed = true;
      max_var = std::max(max_var, idx);
      return idx - 1;
    }
    saw_named = true;
    int idx = c - 'x' + 1;  // x -> 1, y -> 2, z -> 3
    max_var = std::max(max_var, idx);
    return idx - 1;
  }

  struct RawTerm {
    GaussianRational coeff = GaussianRational(Rational(1));
    Rational tpow = Rational(0);
    std::map<int, Integer> exps;
    bool generic = false;
  };

  RawTerm parse_term() {
    RawTerm t;
    while (true) {
      skip_ws();
      if (pos >= s.size()) throw std::invalid_argument("parse: unexpected end of input");
      char c = s[pos];
      if (c == '(') {
        ++pos;
        t.coeff = t.coeff * parse_coeff_sum();
        if (!eat(')')) throw std::invalid_argument("parse: expected ')'");
      } else if (c == 'G') {
        ++pos;
        t.generic = true;
      } else if (c == 'i') {
        ++pos;
        t.coeff = t.coeff * GaussianRational(Rational(0), Rational(1));
      } else if (c == 't') {
        ++pos;
        Rational e(1);
        if (eat('^')) e = parse_exponent();
        t.tpow = t.tpow + e;
      } else if (c == 'x' || c == 'y' || c == 'z') {
        int var = variable_index();
        Integer e(1);
        if (eat('^')) {
          Rational r = parse_exponent();
          if (!(r.den() == Integer(1)))
            throw std::invalid_argument("parse: variable exponents must be integers");
          e = r.num();
        }
        auto [it, fresh] = t.exps.try_emplace(var, Integer(0));
        it->second = it->second + e;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = t.coeff * GaussianRational(parse_rational());
      } else {
        throw std::invalid_argument(std::string("parse: unexpected character '") + c + "'");
      }
      if (!eat('*')) break;
    }
    return t;
  }
};

}  // namespace

TropicalPolynomial parse_tropical(const std::string& text, int n) {
  TropParser p(text);
  std::vector<TropParser::RawTerm> raw;
  bool first = true;
  while (true) {
    p.skip_ws();
    if (p.pos >= text.size()) break;
    int sign = 1;
    if (p.eat('+')) {
      sign = 1;
    } else if (p.eat('-')) {
      sign = -1;
    } else if (!first) {
      throw std::invalid_argument("parse: expected '+' or '-' between terms");
    }
    first = false;
    TropParser::RawTerm t = p.parse_term();
    if (sign < 0) t.coeff = -t.coeff;
    raw.push_back(std::move(t));
  }
  if (raw.empty()) throw std::invalid_argument("parse: empty polynomial");
  if (p.saw_named && p.saw_indexed)
    throw std::invalid_argument("parse: do not mix x,y,z with indexed variables");
  if (n < 0) n = p.max_var;

  TropicalPolynomial f;
  f.n = n;
  for (auto& t : raw) {
    TropicalTerm term;
    term.exponent = ZVector::Zero(n);
    for (auto& [var, e] : t.exps) {
      if (var >= n) throw std::invalid_argument("parse: variable index exceeds dimension");
      term.exponent[var] = e;
    }
    term.valuation = t.tpow;
    if (t.generic) {
      term.generic = true;
      term.phase = Rational(0);
    } else {
      if (t.coeff.is_zero()) throw std::invalid_argument("parse: term has zero coefficient");
      auto ph = half_turn_phase(t.coeff);
      if (!ph)
        throw std::invalid_argument("parse: coefficient " + t.coeff.str() +
                                    " has no rational half-turn phase");
      term.phase = *ph;
      term.lead_coeff = t.coeff;
    }
    for (const auto& prev : f.terms)
      if (prev.exponent == term.exponent)
        throw std::invalid_argument("parse: duplicate exponent vector in polynomial");
    f.terms.push_back(std::move(term));
  }
  return f;
}

std::vector<std::string> variable_names(int n) {
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (int i = 0; i < n; ++i) names.push_back(xyz[i]);
  } else {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

std::vector<std::string> chart_names(int k) {
  std::vector<std::string> names;
  if (k <= 3) {
    const char* uvw[] = {"u", "v", "w"};
    for (int i = 0; i < k; ++i) names.push_back(uvw[i]);
  } else {
    for (int i = 1; i <= k; ++i) names.push_back("u" + std::to_string(i));
  }
  return names;
}

namespace {

// "" for the constant monomial; callers decide how to render that case
std::string monomial_raw(const ZVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] == Integer(0)) continue;
    if (!out.empty()) out += "*";
    out += names[static_cast<size_t>(i)];
    if (!(e[i] == Integer(1))) out += "^" + e[i].str();
  }
  return out;
}

}  // namespace

std::string monomial_str(const ZVector& e, const std::vector<std::string>& names) {
  std::string out = monomial_raw(e, names);
  return out.empty() ? "1" : out;
}

namespace {

// Splits a coefficient into a sign for the joining operator and the printed
// magnitude; empty magnitude means "just the monomial".
void coeff_pieces(const ResidueTerm& t, bool has_monomial, bool& negative, std::string& body) {
  negative = false;
  if (t.generic) {
    body = "G";
    return;
  }
  const Rational zero(0);
  const GaussianRational& c = t.coeff;
  if (c.im == zero) {
    negative = c.re < zero;
    Rational mag = negative ? -c.re : c.re;
    body = (mag == Rational(1) && has_monomial) ? "" : mag.str();
  } else if (c.re == zero) {
    negative = c.im < zero;
    Rational mag = negative ? -c.im : c.im;
    body = (mag == Rational(1)) ? "i" : mag.str() + "*i";
  } else {
    body = "(" + c.str() + ")";
  }
}

}  // namespace

std::string ResiduePolynomial::str() const { return str(variable_names(n)); }

std::string ResiduePolynomial::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms.size(); ++k) {
    std::string mon = monomial_raw(terms[k].exponent, names);
    bool negative;
    std::string body;
    coeff_pieces(terms[k], !mon.empty(), negative, body);
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (body.empty())
      out += mon.empty() ? "1" : mon;
    else
      out += mon.empty() ? body : body + "*" + mon;
  }
  return out;
}

bool operator==(const ResiduePolynomial& a, const ResiduePolynomial& b) {
  if (a.n != b.n || a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].exponent == b.terms[i].exponent)) return false;
    if (a.terms[i].generic != b.terms[i].generic) return false;
    if (!a.terms[i].generic && !(a.terms[i].coeff == b.terms[i].coeff)) return false;
  }
  return true;
}

ResidueTerm residue_of_term(const TropicalTerm& t) {
  ResidueTerm r;
  r.exponent = t.exponent;
  r.generic = t.generic;
  if (t.generic) {
    r.coeff = GaussianRational(Rational(1));
  } else if (t.lead_coeff) {
    r.coeff = *t.lead_coeff;
  } else {
    // phase-only data: reconstruct the unit coefficient on the axes
    if (t.phase == Rational(0))
      r.coeff = GaussianRational(Rational(1));
    else if (t.phase == Rational(1))
      r.coeff = GaussianRational(Rational(-1));
    else if (t.phase == Rational(1, 2))
      r.coeff = GaussianRational(Rational(0), Rational(1));
    else if (t.phase == Rational(3, 2))
      r.coeff = GaussianRational(Rational(0), Rational(-1));
    else
      throw std::invalid_argument("residue_of_term: an explicit leading coefficient is required");
  }
  return r;
}

ResiduePolynomial initial_form(const TropicalPolynomial& f, const QVector& w) {
  if (w.size() != f.n) throw std::invalid_argument("initial_form: weight dimension mismatch");
  std::vector<Rational> value(f.terms.size());
  Rational best;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    value[i] = f.terms[i].valuation + to_rational(f.terms[i].exponent).dot(w);
    if (i == 0 || value[i] < best) best = value[i];
  }
  ResiduePolynomial out;
  out.n = f.n;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    if (!(value[i] == best)) continue;
    out.terms.push_back(residue_of_term(f.terms[i]));
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const ResidueTerm& a, const ResidueTerm& b) {
    return lex_compare_z(a.exponent, b.exponent) > 0;
  });
  return out;
}

}  // namespace popdec
