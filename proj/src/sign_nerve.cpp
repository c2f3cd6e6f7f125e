#include "popdec/sign_nerve.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "popdec/lp.hpp"
#include "popdec/polyhedron.hpp"

namespace popdec {

namespace {

// One cone in a coordinate plane, rows (u, v) meaning u*re + v*im.
struct PlaneCone {
  std::vector<std::array<int, 2>> ineqs;  // >= 0
  std::vector<std::array<int, 2>> eqs;    // = 0
};

std::vector<PlaneCone> cover_cones(int level) {
  if (level == 2) {
    return {
        {{{1, 0}, {0, 1}}, {}},
        {{{1, 0}, {0, -1}}, {}},
        {{{-1, 0}, {0, 1}}, {}},
        {{{-1, 0}, {0, -1}}, {}},
    };
  }
  return {
      {{{0, 1}}, {}},
      {{{0, -1}}, {}},
      {{{1, 0}}, {{0, 1}}},
      {{{-1, 0}}, {{0, 1}}},
  };
}

// Per subset of the four cones: whether the intersection is more than the
// origin, and which signs each part (re, im) can take inside it. The sign
// table prunes LP work later: a region inside the intersection can only
// realize signs the intersection itself realizes.
struct MaskTraits {
  std::array<bool, 16> adm{};
  // possible[mask][part][dir]: can the part (0 = re, 1 = im) be positive
  // (dir 0) or negative (dir 1) somewhere in the cone intersection?
  std::array<std::array<std::array<bool, 2>, 2>, 16> possible{};
};

MaskTraits mask_traits(const std::vector<PlaneCone>& cones) {
  MaskTraits t;
  t.possible[0] = {{{true, true}, {true, true}}};
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<QVector> ineqs, eqs;
    for (int c = 0; c < 4; ++c) {
      if (!(mask & (1u << c))) continue;
      for (const auto& r : cones[c].ineqs) {
        QVector row(2);
        row << Rational(-r[0]), Rational(-r[1]);
        ineqs.push_back(row);
      }
      for (const auto& r : cones[c].eqs) {
        QVector row(2);
        row << Rational(r[0]), Rational(r[1]);
        eqs.push_back(row);
      }
    }
    QMatrix A(static_cast<int>(ineqs.size()), 2), E(static_cast<int>(eqs.size()), 2);
    for (int i = 0; i < A.rows(); ++i) A.row(i) = ineqs[i].transpose();
    for (int i = 0; i < E.rows(); ++i) E.row(i) = eqs[i].transpose();
    ConeGens g = cone_generators(A, E);
    t.adm[mask] = !g.rays.empty() || !g.lineality.empty();
    for (int part = 0; part < 2; ++part) {
      bool pos = false, neg = false;
      for (const auto& r : g.rays) {
        pos = pos || r(part) > Rational(0);
        neg = neg || r(part) < Rational(0);
      }
      for (const auto& l : g.lineality)
        if (!l(part).is_zero()) pos = neg = true;
      t.possible[mask][part] = {pos, neg};
    }
  }
  return t;
}

// Everything known about one box (a choice of cone subset per coordinate):
// whether the linear system meets it, whether it does so off the coordinate
// hyperplanes, and the largest box cutting out the same region.
struct BoxInfo {
  bool feasible = false;
  bool in_nerve = false;
  std::vector<uint8_t> canonical;
};

// Exact-LP engine shared by the nerve constructions. The defining equations
// are eliminated up front, so every box query is a small inequality-only LP
// in the free parameters of the solution subspace.
struct CoverLP {
  int n = 0;
  std::vector<PlaneCone> cones;
  MaskTraits traits;
  bool empty_variety = false;
  int params = 0;
  QMatrix coord_rows;  // 2n x params, realified coordinates in the parameters
  QVector coord_offs;  // value of each realified coordinate at parameter zero
  std::map<std::vector<uint8_t>, BoxInfo> memo;

  void init(const LinearIdeal& ideal, int level) {
    n = ideal.n;
    cones = cover_cones(level);
    traits = mask_traits(cones);

    // Realify each generator sum(c_i x_i) + c_0 = 0 into real and imaginary
    // equations over interleaved coordinates (re_i, im_i).
    int g = static_cast<int>(ideal.generators.size());
    QMatrix E = QMatrix::Zero(2 * g, 2 * n);
    QVector d = QVector::Zero(2 * g);
    for (int k = 0; k < g; ++k) {
      for (const auto& term : ideal.generators[k]) {
        int var = -1;
        for (int i = 0; i < n; ++i) {
          if (term.exponent[i] == Integer(0)) continue;
          if (term.exponent[i] == Integer(1) && var == -1) {
            var = i;
          } else {
            throw std::invalid_argument(
                "sign_nerve: generators must be affine-linear in the torus coordinates");
          }
        }
        const GaussianRational& c = term.coeff;
        if (var == -1) {
          d[2 * k] -= c.re;
          d[2 * k + 1] -= c.im;
        } else {
          E(2 * k, 2 * var) += c.re;
          E(2 * k, 2 * var + 1) -= c.im;
          E(2 * k + 1, 2 * var) += c.im;
          E(2 * k + 1, 2 * var + 1) += c.re;
        }
      }
    }

    std::optional<QVector> x0 = solve(E, d);
    if (!x0) {
      empty_variety = true;
      return;
    }
    QMatrix basis = kernel_basis(E);
    params = static_cast<int>(basis.rows());
    coord_rows = basis.transpose();
    coord_offs = *x0;
  }

  const BoxInfo& query(const std::vector<uint8_t>& box) {
    auto it = memo.find(box);
    if (it != memo.end()) return it->second;

    BoxInfo info;
    if (!empty_variety) compute(box, info);
    // The canonical box cuts the same region, so share the answer with it.
    if (info.in_nerve && info.canonical != box) memo.emplace(info.canonical, info);
    return memo.emplace(box, std::move(info)).first->second;
  }

 private:
  // Value of realified coordinate c (2i = re_i, 2i+1 = im_i) at parameter p.
  Rational coord_at(int c, const QVector& p) const {
    Rational v = coord_offs[c];
    for (int j = 0; j < params; ++j) v += coord_rows(c, j) * p[j];
    return v;
  }

  void compute(const std::vector<uint8_t>& box, BoxInfo& info) {
    std::vector<QVector> irows, erows;
    std::vector<Rational> ioffs, eoffs;
    auto add_row = [&](int i, const std::array<int, 2>& r, bool eq) {
      // u*re_i + v*im_i as an affine function of the parameters
      QVector row = QVector::Zero(params);
      Rational off;
      for (int part = 0; part < 2; ++part) {
        if (r[part] == 0) continue;
        Rational f(r[part]);
        for (int j = 0; j < params; ++j) row[j] += f * coord_rows(2 * i + part, j);
        off += f * coord_offs[2 * i + part];
      }
      if (eq) {
        erows.push_back(row);
        eoffs.push_back(-off);
      } else {
        // u*re + v*im >= 0 becomes -(row.p) <= off
        irows.push_back(-row);
        ioffs.push_back(off);
      }
    };
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < 4; ++c) {
        if (!(box[i] & (1u << c))) continue;
        for (const auto& r : cones[c].ineqs) add_row(i, r, false);
        for (const auto& r : cones[c].eqs) add_row(i, r, true);
      }
    }
    QMatrix A(static_cast<int>(irows.size()), params);
    QVector b(static_cast<int>(irows.size()));
    for (int i = 0; i < A.rows(); ++i) {
      A.row(i) = irows[i].transpose();
      b[i] = ioffs[i];
    }
    QMatrix C(static_cast<int>(erows.size()), params);
    QVector d(static_cast<int>(erows.size()));
    for (int i = 0; i < C.rows(); ++i) {
      C.row(i) = erows[i].transpose();
      d[i] = eoffs[i];
    }

    LPResult feas = lp_optimize(QVector::Zero(params), A, b, C, d, false);
    info.feasible = feas.status == LPStatus::Optimal;
    if (!info.feasible) return;

    // Sign possibilities per realified coordinate: can it be positive, can it
    // be negative over the region? -1 unknown, 0 no, 1 yes. Signs the box's
    // cone intersection cannot realize are settled immediately, and any
    // witness point settles questions in the yes direction across all
    // coordinates at once, so most boxes need no extra LP beyond the
    // feasibility solve.
    std::vector<std::array<int, 2>> sign(2 * n, {-1, -1});
    for (int i = 0; i < n; ++i)
      for (int part = 0; part < 2; ++part)
        for (int dir = 0; dir < 2; ++dir)
          if (!traits.possible[box[i]][part][dir]) sign[2 * i + part][dir] = 0;
    auto absorb = [&](const QVector& p) {
      for (int c = 0; c < 2 * n; ++c) {
        Rational v = coord_at(c, p);
        if (v.sign() > 0) sign[c][0] = 1;
        if (v.sign() < 0) sign[c][1] = 1;
      }
    };
    absorb(feas.x);
    auto resolve = [&](int c, int dir) {
      if (sign[c][dir] != -1) return;
      QVector obj = QVector::Zero(params);
      Rational s(dir == 0 ? 1 : -1);
      for (int j = 0; j < params; ++j) obj[j] = s * coord_rows(c, j);
      LPResult r = lp_optimize(obj, A, b, C, d, true);
      if (r.status == LPStatus::Unbounded) {
        sign[c][dir] = 1;
        return;
      }
      Rational best = r.value + s * coord_offs[c];
      sign[c][dir] = best.sign() > 0 ? 1 : 0;
      if (best.sign() < 0) sign[c][1 - dir] = 1;  // the whole region is on one side
      absorb(r.x);
    };

    // The region counts only if it is not contained in a coordinate
    // hyperplane; being convex, it meets the torus exactly when no single
    // coordinate is forced to vanish on it.
    info.in_nerve = true;
    for (int i = 0; i < n && info.in_nerve; ++i) {
      bool off_zero = false;
      for (int c = 2 * i; c <= 2 * i + 1 && !off_zero; ++c)
        for (int dir = 0; dir < 2 && !off_zero; ++dir) {
          resolve(c, dir);
          off_zero = sign[c][dir] == 1;
        }
      info.in_nerve = off_zero;
    }
    if (!info.in_nerve) return;

    // Canonical box: per coordinate, every cone whose constraints hold over
    // the whole region. Two boxes cut the same region exactly when their
    // canonical boxes agree.
    info.canonical.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < 4; ++c) {
        bool contains = true;
        auto row_holds = [&](const std::array<int, 2>& r, bool eq) {
          int part = r[0] != 0 ? 0 : 1;
          int coeff = r[part];
          int coord = 2 * i + part;
          // u*x >= 0 over the region means x cannot take the opposite sign
          int forbidden = coeff > 0 ? 1 : 0;
          resolve(coord, forbidden);
          if (sign[coord][forbidden] != 0) return false;
          if (eq) {
            resolve(coord, 1 - forbidden);
            if (sign[coord][1 - forbidden] != 0) return false;
          }
          return true;
        };
        for (const auto& r : cones[c].ineqs)
          if (!(contains = row_holds(r, false))) break;
        if (contains)
          for (const auto& r : cones[c].eqs)
            if (!(contains = row_holds(r, true))) break;
        if (contains) info.canonical[i] |= static_cast<uint8_t>(1u << c);
      }
    }
  }
};

}  // namespace

std::string cone_label(int level, int cone) {
  static const char* level2[] = {"++", "+-", "-+", "--"};
  static const char* level1[] = {"upper", "lower", "axis+", "axis-"};
  return level == 2 ? level2[cone] : level1[cone];
}

static void check_nerve_args(const LinearIdeal& ideal, int level) {
  if (level != 1 && level != 2) throw std::invalid_argument("sign_nerve: level must be 1 or 2");
  if (!is_essential(ideal)) throw std::invalid_argument("sign_nerve: ideal is not essential");
}

SignNerve sign_nerve(const LinearIdeal& ideal, int level, int max_dim) {
  check_nerve_args(ideal, level);

  const int n = ideal.n;
  CoverLP lp;
  lp.init(ideal, level);

  SignNerve result;
  result.n = n;
  result.level = level;
  result.max_dim = max_dim;

  // Cover elements: all products of one cone per coordinate that meet the
  // zero set inside the torus.
  std::vector<int> choice(n, 0);
  while (true) {
    std::vector<uint8_t> box(n);
    for (int i = 0; i < n; ++i) box[i] = static_cast<uint8_t>(1u << choice[i]);
    if (lp.query(box).in_nerve) result.vertex_cones.push_back(choice);
    int i = n - 1;
    while (i >= 0 && choice[i] == 3) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }

  const int v = static_cast<int>(result.vertex_cones.size());
  std::vector<std::vector<uint8_t>> vbox(v, std::vector<uint8_t>(n));
  for (int j = 0; j < v; ++j)
    for (int i = 0; i < n; ++i)
      vbox[j][i] = static_cast<uint8_t>(1u << result.vertex_cones[j][i]);

  const int cap = max_dim < 0 ? v : max_dim + 1;
  auto& levels = result.complex.simplices;
  std::vector<int> simplex;
  std::vector<uint8_t> box;

  std::function<void(int)> extend = [&](int start) {
    if (!simplex.empty()) {
      size_t dim = simplex.size() - 1;
      if (levels.size() <= dim) levels.resize(dim + 1);
      levels[dim].push_back(simplex);
    }
    if (static_cast<int>(simplex.size()) >= cap) return;
    for (int u = start; u < v; ++u) {
      std::vector<uint8_t> merged = simplex.empty() ? vbox[u] : box;
      bool ok = true;
      if (!simplex.empty()) {
        for (int i = 0; i < n; ++i) {
          merged[i] |= vbox[u][i];
          if (!lp.traits.adm[merged[i]]) {
            ok = false;
            break;
          }
        }
      }
      if (!ok || !lp.query(merged).in_nerve) continue;
      simplex.push_back(u);
      std::swap(box, merged);
      extend(u + 1);
      std::swap(box, merged);
      simplex.pop_back();
    }
  };
  extend(0);
  return result;
}

std::vector<int> nerve_betti(const LinearIdeal& ideal, int level, int max_degree) {
  check_nerve_args(ideal, level);

  const int n = ideal.n;
  CoverLP lp;
  lp.init(ideal, level);

  // Cover elements, as in sign_nerve, but keep only their canonical boxes.
  std::vector<std::vector<uint8_t>> vertices;
  std::vector<int> choice(n, 0);
  while (true) {
    std::vector<uint8_t> box(n);
    for (int i = 0; i < n; ++i) box[i] = static_cast<uint8_t>(1u << choice[i]);
    const BoxInfo& info = lp.query(box);
    if (info.in_nerve) vertices.push_back(info.canonical);
    int i = n - 1;
    while (i >= 0 && choice[i] == 3) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }

  // Close the set of cover elements under pairwise intersection (union of
  // boxes); the poset of distinct nonempty intersections carries the same
  // homotopy type as the nerve, with one order-complex vertex per region
  // instead of one nerve vertex per box. This stays small where the nerve
  // itself has enormous cliques of boxes sharing a region boundary.
  std::map<std::vector<uint8_t>, int> index_of;
  std::vector<std::vector<uint8_t>> elems;
  std::vector<std::vector<uint8_t>> work;
  auto insert = [&](const std::vector<uint8_t>& canon) {
    if (index_of.emplace(canon, static_cast<int>(elems.size())).second) {
      elems.push_back(canon);
      work.push_back(canon);
    }
  };
  for (const auto& vb : vertices) insert(vb);
  while (!work.empty()) {
    std::vector<uint8_t> cur = std::move(work.back());
    work.pop_back();
    for (const auto& vb : vertices) {
      std::vector<uint8_t> merged(n);
      bool ok = true, grew = false;
      for (int i = 0; i < n; ++i) {
        merged[i] = cur[i] | vb[i];
        grew = grew || merged[i] != cur[i];
        if (!lp.traits.adm[merged[i]]) {
          ok = false;
          break;
        }
      }
      if (!ok || !grew) continue;
      const BoxInfo& info = lp.query(merged);
      if (info.in_nerve) insert(info.canonical);
    }
  }

  // Larger canonical boxes cut smaller regions, so ordering by total box size
  // makes every containment chain an increasing index sequence.
  std::vector<int> order(elems.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto weight = [&](int e) {
    int w = 0;
    for (uint8_t m : elems[e]) w += __builtin_popcount(m);
    return w;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int wa = weight(a), wb = weight(b);
    return wa != wb ? wa < wb : elems[a] < elems[b];
  });
  auto contains = [&](int big, int small) {
    // region(small) inside region(big): every cone of big also bounds small
    for (int i = 0; i < n; ++i)
      if (elems[big][i] & ~elems[small][i]) return false;
    return true;
  };

  const int count = static_cast<int>(elems.size());
  const int cap = max_degree < 0 ? count : max_degree + 2;
  SimplicialComplex oc;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int start) {
    if (!chain.empty()) {
      size_t dim = chain.size() - 1;
      if (oc.simplices.size() <= dim) oc.simplices.resize(dim + 1);
      oc.simplices[dim].push_back(chain);
    }
    if (static_cast<int>(chain.size()) >= cap) return;
    for (int u = start; u < count; ++u) {
      if (!chain.empty() && !contains(order[chain.back()], order[u])) continue;
      chain.push_back(u);
      extend(u + 1);
      chain.pop_back();
    }
  };
  extend(0);

  Homology h = chain_homology(oc.sparse_boundaries(), oc.cell_counts());
  std::vector<int> betti = h.betti;
  if (max_degree >= 0) {
    betti.resize(max_degree + 1, 0);
  } else {
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
  }
  return betti;
}

}  // namespace popdec
