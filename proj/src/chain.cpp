#include "popdec/chain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "popdec/snf.hpp"

namespace popdec {
namespace {

// Nonzero invariant factors of a sparse integer matrix. Unit entries are
// eliminated first (Markowitz-style pivoting with row operations only; after
// the pivot column is cleared, dropping the pivot row and column is a
// unimodular reduction), the remainder is handled densely. A column-to-rows
// index and a by-size row index keep each pivot step local.
std::vector<Integer> sparse_nonzero_invariant_factors(SparseRows rows, int ncols) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<std::set<int>> col_rows(ncols);
  std::set<std::pair<int, int>> by_size;  // (row length, row index), live rows only
  for (int i = 0; i < nrows; ++i) {
    for (const auto& [c, v] : rows[i]) col_rows[c].insert(i);
    if (!rows[i].empty()) by_size.insert({static_cast<int>(rows[i].size()), i});
  }

  int units = 0;
  while (true) {
    // near-Markowitz pivot: best unit entry among the shortest rows
    long best_cost = -1;
    int pr = -1, pc = -1;
    int scanned = 0;
    for (auto it = by_size.begin(); it != by_size.end() && scanned < 32; ++it, ++scanned) {
      int i = it->second;
      for (const auto& [c, v] : rows[i]) {
        if (!(abs(v) == Integer(1))) continue;
        long cost = static_cast<long>(rows[i].size() - 1) *
                    (static_cast<long>(col_rows[c].size()) - 1);
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          pr = i;
          pc = c;
        }
        if (best_cost == 0) break;
      }
      if (best_cost == 0) break;
    }
    if (pr < 0) {
      // the scanned prefix had no unit entry; fall back to a full sweep
      for (const auto& [len, i] : by_size) {
        for (const auto& [c, v] : rows[i])
          if (abs(v) == Integer(1)) {
            pr = i;
            pc = c;
            break;
          }
        if (pr >= 0) break;
      }
      if (pr < 0) break;
    }

    Integer pivot = rows[pr][pc];
    std::vector<int> touched(col_rows[pc].begin(), col_rows[pc].end());
    for (int i : touched) {
      if (i == pr) continue;
      Integer factor = divexact(rows[i].at(pc), pivot);
      by_size.erase({static_cast<int>(rows[i].size()), i});
      for (const auto& [c, v] : rows[pr]) {
        auto [jt, fresh] = rows[i].try_emplace(c, Integer(0));
        if (fresh) col_rows[c].insert(i);
        jt->second = jt->second - factor * v;
        if (jt->second.is_zero()) {
          rows[i].erase(jt);
          col_rows[c].erase(i);
        }
      }
      if (!rows[i].empty()) by_size.insert({static_cast<int>(rows[i].size()), i});
    }
    by_size.erase({static_cast<int>(rows[pr].size()), pr});
    for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
    rows[pr].clear();
    ++units;
  }

  // densify the residual
  std::set<int> live_cols;
  std::vector<int> live_rows;
  for (int i = 0; i < nrows; ++i) {
    if (rows[i].empty()) continue;
    live_rows.push_back(i);
    for (const auto& [c, v] : rows[i]) live_cols.insert(c);
  }
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty()) {
    std::map<int, int> colmap;
    int j = 0;
    for (int c : live_cols) colmap[c] = j++;
    ZMatrix dense(static_cast<int>(live_rows.size()), j);
    dense.setConstant(Integer(0));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) dense(static_cast<int>(i), colmap[c]) = v;
    for (const auto& f : invariant_factors(dense))
      if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

SparseRows to_sparse(const ZMatrix& m) {
  SparseRows rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace

Homology chain_homology(const std::vector<SparseRows>& boundaries,
                        const std::vector<int>& cells) {
  int top = static_cast<int>(boundaries.size()) - 1;
  if (static_cast<int>(cells.size()) != top + 1)
    throw std::invalid_argument("chain_homology: cells/boundaries length mismatch");
  for (int k = 0; k + 1 <= top; ++k) {
    // verify boundary . boundary = 0 one sparse column at a time
    std::vector<std::vector<std::pair<int, Integer>>> acols(cells[k]), bcols(cells[k + 1]);
    for (size_t i = 0; i < boundaries[k].size(); ++i)
      for (const auto& [c, v] : boundaries[k][i]) acols[c].emplace_back(static_cast<int>(i), v);
    for (size_t i = 0; i < boundaries[k + 1].size(); ++i)
      for (const auto& [c, v] : boundaries[k + 1][i]) bcols[c].emplace_back(static_cast<int>(i), v);
    for (int j = 0; j < cells[k + 1]; ++j) {
      std::map<int, Integer> acc;
      for (const auto& [i, bv] : bcols[j]) {
        for (const auto& [r, av] : acols[i]) {
          auto [it, fresh] = acc.try_emplace(r, Integer(0));
          it->second = it->second + bv * av;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
      if (!acc.empty())
        throw std::invalid_argument("chain_homology: boundary of boundary is nonzero");
    }
  }

  std::vector<std::vector<Integer>> factors(top + 2);
  std::vector<int> ranks(top + 2, 0);
  for (int k = 0; k <= top; ++k) {
    factors[k] = sparse_nonzero_invariant_factors(boundaries[k], cells[k]);
    ranks[k] = static_cast<int>(factors[k].size());
  }

  Homology h;
  h.betti.resize(top + 1);
  h.torsion.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    int rank_out = ranks[k];
    int rank_in = k + 1 <= top ? ranks[k + 1] : 0;
    h.betti[k] = cells[k] - rank_out - rank_in;
    if (k + 1 <= top)
      for (const auto& f : factors[k + 1])
        if (!(f == Integer(1))) h.torsion[k].push_back(f);
  }
  return h;
}

Homology chain_homology(const std::vector<ZMatrix>& boundaries) {
  int top = static_cast<int>(boundaries.size()) - 1;
  for (int k = 0; k + 1 <= top; ++k)
    if (boundaries[k].cols() != boundaries[k + 1].rows())
      throw std::invalid_argument("chain_homology: boundary shape mismatch");
  std::vector<SparseRows> sparse;
  std::vector<int> cells;
  for (int k = 0; k <= top; ++k) {
    sparse.push_back(to_sparse(boundaries[k]));
    cells.push_back(static_cast<int>(boundaries[k].cols()));
  }
  return chain_homology(sparse, cells);
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<int>>& maximal) {
  std::set<std::vector<int>> all;
  for (auto s : maximal) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    // all nonempty subsets
    int k = static_cast<int>(s.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) sub.push_back(s[i]);
      all.insert(std::move(sub));
    }
  }
  SimplicialComplex sc;
  for (const auto& s : all) {
    int d = static_cast<int>(s.size()) - 1;
    if (d >= static_cast<int>(sc.simplices.size())) sc.simplices.resize(d + 1);
    sc.simplices[d].push_back(s);
  }
  for (auto& level : sc.simplices) std::sort(level.begin(), level.end());
  return sc;
}

std::vector<ZMatrix> SimplicialComplex::boundaries() const {
  std::vector<ZMatrix> out;
  int top = static_cast<int>(simplices.size()) - 1;
  if (top < 0) return out;
  std::vector<SparseRows> sparse = sparse_boundaries();
  out.push_back(ZMatrix(0, static_cast<int>(simplices[0].size())));
  out[0].setConstant(Integer(0));
  for (int k = 1; k <= top; ++k) {
    ZMatrix b(static_cast<int>(simplices[k - 1].size()), static_cast<int>(simplices[k].size()));
    b.setConstant(Integer(0));
    for (size_t i = 0; i < sparse[k].size(); ++i)
      for (const auto& [c, v] : sparse[k][i]) b(static_cast<int>(i), c) = v;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<SparseRows> SimplicialComplex::sparse_boundaries() const {
  std::vector<SparseRows> out;
  int top = static_cast<int>(simplices.size()) - 1;
  if (top < 0) return out;
  out.emplace_back();  // no (-1)-cells
  for (int k = 1; k <= top; ++k) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < simplices[k - 1].size(); ++i)
      index[simplices[k - 1][i]] = static_cast<int>(i);
    SparseRows rows(simplices[k - 1].size());
    for (size_t j = 0; j < simplices[k].size(); ++j) {
      const auto& s = simplices[k][j];
      int sign = 1;
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        rows[index.at(face)][static_cast<int>(j)] = Integer(sign);
        sign = -sign;
      }
    }
    out.push_back(std::move(rows));
  }
  return out;
}

std::vector<int> SimplicialComplex::cell_counts() const {
  std::vector<int> out;
  for (const auto& level : simplices) out.push_back(static_cast<int>(level.size()));
  return out;
}

int SimplicialComplex::euler_characteristic() const {
  int chi = 0, sign = 1;
  for (const auto& level : simplices) {
    chi += sign * static_cast<int>(level.size());
    sign = -sign;
  }
  return chi;
}

Homology simplicial_homology(const SimplicialComplex& sc) {
  return chain_homology(sc.sparse_boundaries(), sc.cell_counts());
}

}  // namespace popdec
