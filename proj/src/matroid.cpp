#include "popdec/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace popdec {

Matroid Matroid::from_columns(const GQMatrix& realization) {
  Matroid m;
  int rows = static_cast<int>(realization.size());
  m.ground_ = rows ? static_cast<int>(realization[0].size()) : 0;
  m.cols_.resize(m.ground_);
  for (int c = 0; c < m.ground_; ++c) {
    m.cols_[c].resize(rows);
    for (int r = 0; r < rows; ++r) m.cols_[c][r] = realization[r][c];
  }
  std::vector<int> all(m.ground_);
  for (int i = 0; i < m.ground_; ++i) all[i] = i;
  m.rank_ = m.rank_of(all);
  return m;
}

int Matroid::rank_of(const std::vector<int>& subset) const {
  if (subset.empty()) return 0;
  GQMatrix sub(cols_[0].size(), std::vector<GaussianRational>(subset.size()));
  for (size_t j = 0; j < subset.size(); ++j)
    for (size_t r = 0; r < cols_[0].size(); ++r) sub[r][j] = cols_[subset[j]][r];
  return popdec::rank(sub);
}

std::vector<int> Matroid::closure(const std::vector<int>& subset) const {
  int r = rank_of(subset);
  std::vector<int> cl;
  for (int e = 0; e < ground_; ++e) {
    if (std::binary_search(subset.begin(), subset.end(), e)) {
      cl.push_back(e);
      continue;
    }
    std::vector<int> with = subset;
    with.insert(std::lower_bound(with.begin(), with.end(), e), e);
    if (rank_of(with) == r) cl.push_back(e);
  }
  return cl;
}

bool Matroid::has_loops() const {
  for (int e = 0; e < ground_; ++e)
    if (rank_of({e}) == 0) return true;
  return false;
}

const std::vector<Flat>& Matroid::flats() const {
  if (flats_done_) return flats_;
  flats_done_ = true;

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier = {closure({})};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      for (int e = 0; e < ground_; ++e) {
        if (std::binary_search(f.begin(), f.end(), e)) continue;
        std::vector<int> with = f;
        with.insert(std::lower_bound(with.begin(), with.end(), e), e);
        auto cl = closure(with);
        if (seen.insert(cl).second) next.push_back(cl);
      }
    }
    frontier = std::move(next);
  }

  for (const auto& f : seen) {
    Flat fl;
    fl.elements = f;
    fl.rank = rank_of(f);
    flats_.push_back(std::move(fl));
  }
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  });

  // Moebius numbers from the bottom, by rank order.
  for (size_t i = 0; i < flats_.size(); ++i) {
    if (i == 0) {
      flats_[i].mobius = Integer(1);
      continue;
    }
    Integer acc(0);
    for (size_t j = 0; j < i; ++j) {
      if (std::includes(flats_[i].elements.begin(), flats_[i].elements.end(),
                        flats_[j].elements.begin(), flats_[j].elements.end()))
        acc = acc + flats_[j].mobius;
    }
    flats_[i].mobius = -acc;
  }
  return flats_;
}

std::vector<Integer> characteristic_polynomial(const Matroid& m) {
  if (m.has_loops()) throw std::invalid_argument("characteristic_polynomial: matroid has loops");
  std::vector<Integer> coeff(m.rank() + 1, Integer(0));
  for (const auto& f : m.flats()) {
    int pow = m.rank() - f.rank;
    coeff[pow] = coeff[pow] + f.mobius;
  }
  return coeff;
}

std::vector<Integer> projective_betti(const Matroid& m) {
  std::vector<Integer> chi = characteristic_polynomial(m);
  // synthetic division by (t - 1), lowest degree first
  int deg = static_cast<int>(chi.size()) - 1;
  std::vector<Integer> q(deg, Integer(0));
  Integer carry(0);
  for (int p = deg; p >= 1; --p) {
    carry = carry + chi[p];
    q[p - 1] = carry;
  }
  if (!(carry + chi[0]).is_zero())
    throw std::logic_error("projective_betti: chi(1) != 0");
  // b_k is the unsigned coefficient of t^(rank-1-k), so highest degree first.
  std::vector<Integer> betti;
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) betti.push_back(abs(q[k]));
  return betti;
}

BergmanFan bergman_fan(const Matroid& m) {
  if (m.has_loops()) throw std::invalid_argument("bergman_fan: matroid has loops");
  int g = m.ground_size();
  BergmanFan fan;
  fan.ambient = g - 1;

  auto flat_vector = [&](const std::vector<int>& flat) {
    ZVector v = ZVector::Zero(g - 1);
    for (int e : flat) {
      if (e < g - 1) {
        v[e] = v[e] + Integer(1);
      } else {
        for (int i = 0; i < g - 1; ++i) v[i] = v[i] - Integer(1);
      }
    }
    return v;
  };

  std::vector<const Flat*> proper;
  for (const auto& f : m.flats())
    if (f.rank > 0 && f.rank < m.rank()) proper.push_back(&f);

  // Enumerate ascending chains of proper flats.
  std::vector<std::vector<int>> chains = {{}};
  for (size_t start = 0; start < chains.size(); ++start) {
    std::vector<int> chain = chains[start];
    int last = chain.empty() ? -1 : chain.back();
    for (size_t j = last + 1; j < proper.size(); ++j) {
      bool ok = chain.empty() ||
                (proper[chain.back()]->rank < proper[j]->rank &&
                 std::includes(proper[j]->elements.begin(), proper[j]->elements.end(),
                               proper[chain.back()]->elements.begin(),
                               proper[chain.back()]->elements.end()));
      if (!ok) continue;
      std::vector<int> ext = chain;
      ext.push_back(static_cast<int>(j));
      chains.push_back(ext);
    }
  }

  for (const auto& chain : chains) {
    BergmanFan::Cone cone;
    for (int idx : chain) {
      cone.flag.push_back(proper[idx]->elements);
      cone.generators.push_back(flat_vector(proper[idx]->elements));
    }
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace popdec
