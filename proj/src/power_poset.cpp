// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flagstrat/power_poset.hpp"

#include <algorithm>

namespace flagstrat {

Permutation coxeter_project(const Permutation& sigma, const std::vector<int>& gens) {
  const int n = sigma.n();
  std::vector<bool> joined(n, false);  // joined[i]: positions i, i+1 in a block
  for (int g : gens) {
    if (g < 0 || g >= n - 1) throw DomainError("generator index out of range");
    joined[g] = true;
  }
  std::vector<int> img = sigma.one_line();
  int start = 0;
  for (int i = 0; i < n; ++i) {
    if (i + 1 == n || !joined[i]) {
      std::sort(img.begin() + start, img.begin() + i + 1);
      start = i + 1;
    }
  }
  return Permutation(std::move(img));
}

uint32_t coxeter_project_k(const Permutation& sigma, int k) {
  if (k < 1 || k >= sigma.n() + 1) throw DomainError("projection index out of range");
  uint32_t mask = 0;
  for (int i = 0; i < k; ++i) mask |= uint32_t{1} << sigma(i);
  return mask;
}

bool bruhat_leq_sn(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw SizeMismatchError("Bruhat comparison across sizes");
  for (int k = 1; k < u.n(); ++k)
    if (!componentwise_leq(coxeter_project_k(u, k), coxeter_project_k(v, k)))
      return false;
  return true;
}

uint32_t sigma_image(const Permutation& sigma, uint32_t mask) {
  uint32_t out = 0;
  while (mask) {
    int b = __builtin_ctz(mask);
    mask &= mask - 1;
    out |= uint32_t{1} << sigma(b);
  }
  return out;
}

bool componentwise_leq(uint32_t a, uint32_t b) {
  // Sorted tuples of equal size: a_t <= b_t for all t. Equivalent bit test:
  // every prefix {0..m} holds at least as many elements of a as of b.
  if (__builtin_popcount(a) != __builtin_popcount(b)) throw SizeMismatchError("comparing subsets of different sizes");
  std::vector<int> ta = mask_to_tuple(a), tb = mask_to_tuple(b);
  for (size_t t = 0; t < ta.size(); ++t)
    if (ta[t] > tb[t]) return false;
  return true;
}

bool gale_leq(const Permutation& sigma, uint32_t a, uint32_t b) {
  return componentwise_leq(sigma_image(sigma, a), sigma_image(sigma, b));
}

namespace {

// Bipartite matching: every element of `need` must be matched to a distinct
// element of `give` lying strictly below it in Q.
bool has_full_matching(const Poset& q, const std::vector<int>& give,
                       const std::vector<int>& need) {
  std::vector<int> match_give(give.size(), -1);
  std::vector<bool> used;
  std::function<bool(int)> augment = [&](int ni) -> bool {
    for (size_t g = 0; g < give.size(); ++g) {
      if (used[g] || !q.less(give[g], need[ni])) continue;
      used[g] = true;
      if (match_give[g] < 0 || augment(match_give[g])) {
        match_give[g] = ni;
        return true;
      }
    }
    return false;
  };
  for (size_t ni = 0; ni < need.size(); ++ni) {
    used.assign(give.size(), false);
    if (!augment(static_cast<int>(ni))) return false;
  }
  return true;
}

}  // namespace

bool preceq(const Poset& q, uint32_t a, uint32_t b) {
  if (__builtin_popcount(a) != __builtin_popcount(b)) throw SizeMismatchError("comparing subsets of different sizes");
  const uint32_t diff_a = a & ~b, diff_b = b & ~a;
  if (diff_a == 0) return true;
  return has_full_matching(q, mask_to_tuple(diff_a), mask_to_tuple(diff_b));
}

bool preceq_oracle(const Poset& q, uint32_t a, uint32_t b) {
  std::vector<int> ta = mask_to_tuple(a), tb = mask_to_tuple(b);
  if (ta.size() != tb.size()) throw SizeMismatchError("comparing subsets of different sizes");
  std::sort(ta.begin(), ta.end());
  do {
    bool ok = true;
    for (size_t t = 0; t < ta.size(); ++t)
      if (!q.leq(ta[t], tb[t])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(ta.begin(), ta.end()));
  return false;
}

PowerPoset::PowerPoset(const Poset& q, int k) : base_(q), k_(k) {
  if (k < 1 || k > q.n()) throw DomainError("power poset requires 1 <= k <= n");
  elements_ = all_ksubset_masks(q.n(), k);
  for (size_t i = 0; i < elements_.size(); ++i)
    index_[elements_[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elements_.size());
  std::vector<DynBitset> below(m, DynBitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && preceq(q, elements_[i], elements_[j])) below[j].set(i);
  // The lift is reflexive and transitive by construction of the matching
  // criterion; antisymmetry and compatibility with lex rank are checked here
  // so a defect would surface at build time.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      if (below[i].test(j) && below[j].test(i))
        throw DomainError("power poset relation is not antisymmetric");
  for (int j = 0; j < m; ++j)
    for (int k2 : below[j].elements())
      for (int i : below[k2].elements())
        if (!below[j].test(i))
          throw DomainError("power poset relation is not transitive");
  for (int j = 0; j < m; ++j)
    for (int i : below[j].elements())
      if (i > j) throw DomainError("lex rank is not a linear extension");
  relation_ = Poset(m, std::move(below));
}

int PowerPoset::index_of(uint32_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) throw DomainError("subset is not an element of this power poset");
  return it->second;
}

bool power_poset_dual_check(const Poset& q, int k) {
  const int n = q.n();
  PowerPoset pk(q, k), pnk(q, n - k);
  const uint32_t full = (uint32_t{1} << n) - 1;
  for (uint32_t a : pk.elements())
    for (uint32_t b : pk.elements()) {
      const bool lhs = pk.leq(a, b);
      const bool rhs = pnk.leq(full & ~b, full & ~a);
      if (lhs != rhs) return false;
    }
  return true;
}

TuplePoset::TuplePoset(const Poset& q, const Poset& p) : q_(q), p_(p) {
  if (q.n() != p.n()) throw SizeMismatchError("tuple poset requires posets on the same ground set");
  const int n = p.n();
  ks_.resize(n);
  factor_of_coord_.resize(n);
  std::vector<int> k_of_factor;
  for (int i = 0; i < n; ++i) {
    ks_[i] = principal_ideal(p, i).count();
    int f = -1;
    for (size_t t = 0; t < k_of_factor.size(); ++t)
      if (k_of_factor[t] == ks_[i]) f = static_cast<int>(t);
    if (f < 0) {
      k_of_factor.push_back(ks_[i]);
      factors_.emplace_back(q, ks_[i]);
      f = static_cast<int>(factors_.size()) - 1;
    }
    factor_of_coord_[i] = f;
  }
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= factors_[factor_of_coord_[i]].size();
    if (total > 4096) throw BudgetExceededError("tuple poset too large to materialize");
  }
  const int m = static_cast<int>(total);
  elements_.reserve(m);
  std::vector<int> odo(n, 0);
  for (int r = 0; r < m; ++r) {
    std::vector<uint32_t> tup(n);
    for (int i = 0; i < n; ++i) tup[i] = factor(i).elements()[odo[i]];
    elements_.push_back(std::move(tup));
    for (int i = n - 1; i >= 0; --i) {
      if (++odo[i] < factor(i).size()) break;
      odo[i] = 0;
    }
  }
  std::vector<DynBitset> below(m, DynBitset(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      bool leq = true;
      for (int i = 0; i < n && leq; ++i)
        leq = factor(i).leq(elements_[a][i], elements_[b][i]);
      if (leq) below[b].set(a);
    }
  relation_ = Poset(m, std::move(below));
}

int TuplePoset::index_of(const std::vector<uint32_t>& tuple) const {
  if (static_cast<int>(tuple.size()) != p_.n()) throw SizeMismatchError("tuple has wrong arity");
  int r = 0;
  for (int i = 0; i < p_.n(); ++i) {
    r = r * factor(i).size() + factor(i).index_of(tuple[i]);
  }
  return r;
}

std::vector<uint32_t> sn_action_on_tuples(const Permutation& sigma,
                                          const std::vector<uint32_t>& tuple) {
  std::vector<uint32_t> out(tuple.size());
  for (size_t i = 0; i < tuple.size(); ++i) out[i] = sigma_image(sigma, tuple[i]);
  return out;
}

bool gale_leq_tuples(const Permutation& sigma, const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) throw SizeMismatchError("tuples of different arity");
  for (size_t i = 0; i < a.size(); ++i)
    if (!gale_leq(sigma, a[i], b[i])) return false;
  return true;
}

}  // namespace flagstrat
