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

#include "flagstrat/strata.hpp"

#include <algorithm>
#include <set>

namespace flagstrat {

int BruhatPoset::index_of_label(const DynBitset& ideal) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].ideal == ideal) return static_cast<int>(i);
  return -1;
}

BruhatPoset build_bruhat_poset(const Poset& ambient,
                               const std::map<DynBitset, long long>& counts) {
  BruhatPoset b;
  for (const auto& [ideal, count] : counts) {
    StratumInfo s;
    s.ideal = ideal;
    s.generators = maximal_elements(ambient, ideal);
    s.count = count;
    b.labels.push_back(std::move(s));
  }
  std::sort(b.labels.begin(), b.labels.end(),
            [](const StratumInfo& x, const StratumInfo& y) {
              if (x.ideal.count() != y.ideal.count())
                return x.ideal.count() < y.ideal.count();
              return x.ideal.elements() < y.ideal.elements();
            });
  const int m = static_cast<int>(b.labels.size());
  std::vector<DynBitset> below(m, DynBitset(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && b.labels[i].ideal.is_subset_of(b.labels[j].ideal))
        below[j].set(i);
  b.order = Poset(m, std::move(below));
  return b;
}

DynBitset classify_projective_point(const Poset& q, const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != q.n()) throw ShapeError("vector has wrong length");
  DynBitset support(q.n());
  for (int i = 0; i < q.n(); ++i)
    if (v[i] != 0) support.set(i);
  if (support.none()) throw ZeroVectorError("projective point must be nonzero");
  return generated_ideal(q, support);
}

long long projective_cell_count(const Poset& q, const DynBitset& ideal, long long p) {
  if (!is_order_ideal(q, ideal) || ideal.none())
    throw NotAnIdealError("cell label must be a nonempty order ideal");
  const DynBitset maxima = maximal_elements(q, ideal);
  const std::vector<int> max_elems = maxima.elements();
  long long total = 0;
  // Subsets of max(ideal) removed from the ideal produce exactly the h with
  // ideal \ h inside max(ideal).
  for (uint32_t mask = 0; mask < (uint32_t{1} << max_elems.size()); ++mask) {
    DynBitset h = ideal;
    int removed = 0;
    for (size_t t = 0; t < max_elems.size(); ++t)
      if ((mask >> t) & 1) {
        h.reset(max_elems[t]);
        ++removed;
      }
    const long long term = q_int(h.count(), p);
    total += (removed % 2 == 0) ? term : -term;
  }
  return total;
}

std::map<DynBitset, long long> classify_all_projective(const Poset& q, int p) {
  require_prime(p);
  const int n = q.n();
  std::map<DynBitset, long long> counts;
  // Canonical projective representatives: first nonzero coordinate equals 1.
  std::vector<int> v(n, 0);
  while (true) {
    int i = 0;
    while (i < n && v[i] == p - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    int first = -1;
    for (int t = 0; t < n; ++t)
      if (v[t] != 0) {
        first = t;
        break;
      }
    if (first < 0 || v[first] != 1) continue;
    ++counts[classify_projective_point(q, v)];
  }
  return counts;
}

BruhatPoset projective_cells(const Poset& q, int p) {
  return build_bruhat_poset(q, classify_all_projective(q, p));
}

namespace {

DynBitset support_label(const Poset& ambient_relation, const std::vector<int>& support_indices) {
  DynBitset s(ambient_relation.n());
  for (int i : support_indices) s.set(i);
  return generated_ideal(ambient_relation, s);
}

}  // namespace

GrassmannCells grassmann_q_cells(const Poset& q, int k, int n, int p,
                                 const Budget& budget) {
  if (q.n() != n) throw SizeMismatchError("poset must live on the ambient ground set");
  PowerPoset ambient(q, k);
  std::map<DynBitset, long long> counts;
  for (const auto& w : enumerate_subspaces(k, n, p, budget)) {
    std::vector<int> idx;
    for (uint32_t m : plucker(w).support) idx.push_back(ambient.index_of(m));
    ++counts[support_label(ambient.relation(), idx)];
  }
  BruhatPoset bp = build_bruhat_poset(ambient.relation(), counts);
  return GrassmannCells{std::move(ambient), std::move(bp)};
}

bool cell_nonempty_by_matroid(const Poset& q, const PowerPoset& ambient,
                              const DynBitset& ideal, int p,
                              const Budget& budget) {
  if (!is_order_ideal(ambient.relation(), ideal) || ideal.none())
    throw NotAnIdealError("label must be a nonempty ideal of the power poset");
  const DynBitset maxima = maximal_elements(ambient.relation(), ideal);
  for (const auto& m : representable_matroids(ambient.k(), q.n(), p, budget)) {
    DynBitset bits(ambient.size());
    for (uint32_t b : m.bases) bits.set(ambient.index_of(b));
    if (maxima.is_subset_of(bits) && bits.is_subset_of(ideal)) return true;
  }
  return false;
}

DynBitset classify_flag(const TuplePoset& ambient, const PFlag& f) {
  const int n = f.p.n();
  std::vector<std::vector<uint32_t>> supports(n);
  for (int i = 0; i < n; ++i) supports[i] = plucker(f.spaces[i]).support;
  // Product support: every combination of per-coordinate support subsets.
  std::vector<int> idx;
  std::vector<size_t> odo(n, 0);
  std::vector<uint32_t> tuple(n);
  while (true) {
    for (int i = 0; i < n; ++i) tuple[i] = supports[i][odo[i]];
    idx.push_back(ambient.index_of(tuple));
    int i = n - 1;
    while (i >= 0 && ++odo[i] == supports[i].size()) odo[i--] = 0;
    if (i < 0) break;
  }
  return support_label(ambient.relation(), idx);
}

PFlagCells pflag_q_cells(const Poset& q, const Poset& p, int prime,
                         const Budget& budget) {
  TuplePoset ambient(q, p);
  std::map<DynBitset, long long> counts;
  for (const auto& f : enumerate_pflags(p, prime, budget))
    ++counts[classify_flag(ambient, f)];
  BruhatPoset bp = build_bruhat_poset(ambient.relation(), counts);
  return PFlagCells{std::move(ambient), std::move(bp)};
}

bool cell_nonempty_by_pflag_matroid(const Poset& q, const Poset& p,
                                    const TuplePoset& ambient,
                                    const DynBitset& ideal, int prime,
                                    const Budget& budget) {
  if (ambient.base_q() != q || ambient.base_p() != p)
    throw SizeMismatchError("ambient tuple poset does not match (Q, P)");
  if (!is_order_ideal(ambient.relation(), ideal) || ideal.none())
    throw NotAnIdealError("label must be a nonempty ideal of the tuple poset");
  const DynBitset maxima = maximal_elements(ambient.relation(), ideal);
  std::set<std::vector<std::vector<uint32_t>>> seen;
  for (const auto& f : enumerate_pflags(p, prime, budget)) {
    PFlagMatroid m = pflag_matroid_of_flag(f);
    if (!seen.insert(m.members).second) continue;
    DynBitset bits(ambient.size());
    for (const auto& member : m.members) bits.set(ambient.index_of(member));
    if (maxima.is_subset_of(bits) && bits.is_subset_of(ideal)) return true;
  }
  return false;
}

bool is_parking_function(const std::vector<int>& a, int n) {
  if (static_cast<int>(a.size()) != n) throw SizeMismatchError("word length must be n");
  std::vector<int> s = a;
  for (int v : s)
    if (v < 1 || v > n) throw OutOfRangeError("parking word values must lie in [1, n]");
  std::sort(s.begin(), s.end());
  for (size_t t = 0; t < s.size(); ++t)
    if (s[t] > static_cast<int>(t) + 1) return false;
  return true;
}

bool is_dual_parking_function(const std::vector<int>& a, int n) {
  if (static_cast<int>(a.size()) != n) throw SizeMismatchError("word length must be n");
  std::vector<int> s = a;
  for (int v : s)
    if (v < 1 || v > n) throw OutOfRangeError("parking word values must lie in [1, n]");
  std::sort(s.begin(), s.end());
  for (size_t t = 0; t < s.size(); ++t)
    if (s[t] < static_cast<int>(t) + 1) return false;
  return true;
}

namespace {

bool exists_dominating_permutation(const std::vector<int>& a, int n, bool below) {
  if (static_cast<int>(a.size()) != n) throw SizeMismatchError("word length must be n");
  for (int v : a)
    if (v < 1 || v > n) throw OutOfRangeError("parking word values must lie in [1, n]");
  for (const auto& sigma : all_permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const int sv = sigma(i) + 1;
      if (below ? a[i] > sv : a[i] < sv) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_parking_function_oracle(const std::vector<int>& a, int n) {
  return exists_dominating_permutation(a, n, /*below=*/true);
}

bool is_dual_parking_function_oracle(const std::vector<int>& a, int n) {
  return exists_dominating_permutation(a, n, /*below=*/false);
}

ParkingReport parking_stratification(int n, int prime, const Budget& budget) {
  ParkingReport rep;
  rep.n = n;
  rep.prime = prime;
  rep.cells = pflag_q_cells(chain_poset(n), trivial_poset(n), prime, budget);
  rep.expected_cells = 1;
  for (int i = 0; i < n - 1; ++i) rep.expected_cells *= (n + 1);
  rep.count_matches =
      static_cast<long long>(rep.cells.poset.labels.size()) == rep.expected_cells;

  const TuplePoset& ambient = rep.cells.ambient;
  rep.all_labels_principal = true;
  rep.generators_are_dual_parking = true;
  rep.rank_is_rho = true;
  std::set<std::vector<int>> realized;
  std::vector<int> heights = element_heights(rep.cells.poset.order);
  for (size_t li = 0; li < rep.cells.poset.labels.size(); ++li) {
    const auto& label = rep.cells.poset.labels[li];
    if (label.generators.count() != 1) {
      rep.all_labels_principal = false;
      continue;
    }
    const int g = label.generators.elements()[0];
    if (!(label.ideal == principal_ideal(ambient.relation(), g)))
      rep.all_labels_principal = false;
    // Tuple of singletons -> one-based word.
    std::vector<int> word;
    int rho = 0;
    const auto& tuple = ambient.elements()[g];
    for (size_t i = 0; i < tuple.size(); ++i) {
      const int v = mask_to_tuple(tuple[i])[0] + 1;
      word.push_back(v);
      rho += v - static_cast<int>(i) - 1;
    }
    if (!is_dual_parking_function(word, n)) rep.generators_are_dual_parking = false;
    if (heights[li] != rho) rep.rank_is_rho = false;
    realized.insert(word);
  }

  // Converse: every dual parking word appears as a generator.
  rep.every_dual_parking_word_realized = true;
  std::vector<int> w(n, 1);
  while (true) {
    if (is_dual_parking_function(w, n) && !realized.count(w))
      rep.every_dual_parking_word_realized = false;
    int i = 0;
    while (i < n && w[i] == n) w[i++] = 1;
    if (i == n) break;
    ++w[i];
  }

  rep.graded = is_graded(rep.cells.poset.order, &rep.height);
  return rep;
}

GradedScanReport graded_scan(const BruhatPoset& b) {
  GradedScanReport rep;
  rep.label_count = static_cast<int>(b.labels.size());
  rep.graded = is_graded(b.order, &rep.height);
  // Connected components under comparability.
  const int m = b.order.n();
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m; ++y)
        if (comp[y] < 0 && (b.order.less(x, y) || b.order.less(y, x))) {
          comp[y] = nc;
          stack.push_back(y);
        }
    }
    ++nc;
  }
  rep.components = nc;
  rep.components_graded = true;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (comp[i] == c) members.push_back(i);
    std::vector<DynBitset> below(members.size(), DynBitset(static_cast<int>(members.size())));
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j)
        if (i != j && b.order.less(members[i], members[j])) below[j].set(static_cast<int>(i));
    Poset sub(static_cast<int>(members.size()), std::move(below));
    if (!is_graded(sub)) rep.components_graded = false;
  }
  return rep;
}

}  // namespace flagstrat
