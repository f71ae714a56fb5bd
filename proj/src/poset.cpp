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

#include "flagstrat/poset.hpp"

#include <algorithm>
#include <string>

namespace flagstrat {

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < n_; ++j) {
    for (int i : below_[j].elements()) {
      // i covered by j iff no k with i <_P k <_P j.
      bool covered = true;
      for (int k : below_[j].elements()) {
        if (less(i, k)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations) {
  if (n < 0) throw DomainError("poset size must be nonnegative");
  std::vector<DynBitset> below(n, DynBitset(n));
  for (auto [i, j] : relations) {
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw DomainError("relation endpoint out of range");
    if (i == j) throw CycleError("relation " + std::to_string(i + 1) + " < " +
                                 std::to_string(i + 1) + " is a cycle");
    below[j].set(i);
  }
  // Transitive closure: process targets in increasing order so that any
  // chain through intermediate k < j is already closed at k. A generated
  // relation that violates i < j is caught afterwards; a cycle would force
  // such a violation or a self-loop.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      DynBitset acc = below[j];
      for (int k : below[j].elements()) acc |= below[k];
      if (acc != below[j]) {
        below[j] = acc;
        changed = true;
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    if (below[j].test(j)) throw CycleError("closure contains a cycle through " +
                                           std::to_string(j + 1));
    for (int i : below[j].elements()) {
      if (i > j) {
        if (below[i].test(j))
          throw CycleError("closure contains a cycle through " +
                           std::to_string(j + 1));
        throw NotLinearlyExtendedError(
            "relation " + std::to_string(i + 1) + " < " +
            std::to_string(j + 1) +
            " violates the natural-labeling requirement");
      }
    }
  }
  return Poset(n, std::move(below));
}

Poset trivial_poset(int n) { return build_poset(n, {}); }

Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return build_poset(n, rel);
}

Poset diamond_poset() {
  return build_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Poset dual_poset(const Poset& p) {
  const int n = p.n();
  std::vector<std::pair<int, int>> rel;
  for (int j = 0; j < n; ++j)
    for (int i : p.strictly_below(j).elements())
      rel.emplace_back(n - 1 - j, n - 1 - i);
  return build_poset(n, rel);
}

Poset join_poset(const Poset& a, const Poset& b) {
  if (a.n() != b.n()) throw SizeMismatchError("join of posets on different sets");
  auto rel = a.relations();
  auto rb = b.relations();
  rel.insert(rel.end(), rb.begin(), rb.end());
  return build_poset(a.n(), rel);
}

Poset meet_poset(const Poset& a, const Poset& b) {
  if (a.n() != b.n()) throw SizeMismatchError("meet of posets on different sets");
  const int n = a.n();
  std::vector<DynBitset> below(n, DynBitset(n));
  for (int j = 0; j < n; ++j)
    below[j] = a.strictly_below(j) & b.strictly_below(j);
  // Intersection of transitive relations is transitive; no re-closure needed.
  return Poset(n, std::move(below));
}

Poset cartesian_product(const Poset& a, const Poset& b) {
  const int n = a.n() * b.n();
  std::vector<DynBitset> below(n, DynBitset(n));
  for (int i = 0; i < a.n(); ++i)
    for (int j = 0; j < b.n(); ++j) {
      const int idx = i * b.n() + j;
      for (int i2 = 0; i2 <= i; ++i2)
        for (int j2 = 0; j2 <= j; ++j2) {
          if (i2 == i && j2 == j) continue;
          if (a.leq(i2, i) && b.leq(j2, j)) below[idx].set(i2 * b.n() + j2);
        }
    }
  return Poset(n, std::move(below));
}

bool is_order_ideal(const Poset& p, const DynBitset& s) {
  if (s.size() != p.n()) throw SizeMismatchError("ideal over wrong ground set");
  for (int j : s.elements())
    if (!p.strictly_below(j).is_subset_of(s)) return false;
  return true;
}

namespace {

// Backtracking over elements in increasing label order. Identity being a
// linear extension means all of strictly_below(j) has labels < j, so by the
// time j is decided its down-set is already decided.
void ideals_rec(const Poset& p, int j, DynBitset& cur,
                std::vector<DynBitset>& out, long long cap) {
  if (static_cast<long long>(out.size()) > cap)
    throw BudgetExceededError("order ideal enumeration exceeds cap " +
                              std::to_string(cap));
  if (j == p.n()) {
    out.push_back(cur);
    return;
  }
  ideals_rec(p, j + 1, cur, out, cap);
  if (p.strictly_below(j).is_subset_of(cur)) {
    cur.set(j);
    ideals_rec(p, j + 1, cur, out, cap);
    cur.reset(j);
  }
}

}  // namespace

std::vector<DynBitset> order_ideals(const Poset& p, long long cap) {
  std::vector<DynBitset> out;
  DynBitset cur(p.n());
  ideals_rec(p, 0, cur, out, cap);
  std::sort(out.begin(), out.end(), [](const DynBitset& a, const DynBitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.elements() < b.elements();
  });
  return out;
}

long long count_order_ideals(const Poset& p) {
  return static_cast<long long>(order_ideals(p).size());
}

DynBitset principal_ideal(const Poset& p, int j) {
  if (j < 0 || j >= p.n()) throw DomainError("element out of range");
  DynBitset s = p.strictly_below(j);
  s.set(j);
  return s;
}

DynBitset generated_ideal(const Poset& p, const DynBitset& s) {
  DynBitset out(p.n());
  for (int j : s.elements()) out |= principal_ideal(p, j);
  return out;
}

DynBitset maximal_elements(const Poset& p, const DynBitset& s) {
  DynBitset out(p.n());
  for (int i : s.elements()) {
    bool maximal = true;
    for (int j : s.elements())
      if (p.less(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) out.set(i);
  }
  return out;
}

DynBitset minimal_elements(const Poset& p, const DynBitset& s) {
  DynBitset out(p.n());
  for (int i : s.elements()) {
    bool minimal = true;
    for (int j : s.elements())
      if (p.less(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) out.set(i);
  }
  return out;
}

DynBitset fon_der_flaass(const Poset& p, const DynBitset& ideal) {
  if (!is_order_ideal(p, ideal)) throw NotAnIdealError("input is not an ideal");
  DynBitset comp = DynBitset::full(p.n()) - ideal;
  return generated_ideal(p, minimal_elements(p, comp));
}

int mobius_ideals(const Poset& p, const DynBitset& h, const DynBitset& i) {
  if (!is_order_ideal(p, h) || !is_order_ideal(p, i))
    throw NotAnIdealError("mobius arguments must be order ideals");
  if (!h.is_subset_of(i)) throw NotComparableError("mobius requires h <= i");
  DynBitset diff = i - h;
  if (!diff.is_subset_of(maximal_elements(p, i))) return 0;
  return diff.count() % 2 == 0 ? 1 : -1;
}

std::optional<Poset> complement_poset(const Poset& p, const Poset& q) {
  if (p.n() != q.n()) throw SizeMismatchError("complement of posets on different sets");
  if (!p.refines(q)) throw NotSubposetError("complement requires P refined by Q");
  const int n = p.n();
  std::vector<DynBitset> below(n, DynBitset(n));
  for (int j = 0; j < n; ++j) below[j] = q.strictly_below(j) - p.strictly_below(j);
  // Transitively closed iff i < k < j within the difference never escapes it.
  for (int j = 0; j < n; ++j)
    for (int k : below[j].elements())
      for (int i : below[k].elements())
        if (!below[j].test(i)) return std::nullopt;
  return Poset(n, std::move(below));
}

std::vector<int> element_heights(const Poset& p) {
  std::vector<int> h(p.n(), 0);
  for (int j = 0; j < p.n(); ++j)
    for (int i : p.strictly_below(j).elements())
      h[j] = std::max(h[j], h[i] + 1);
  return h;
}

bool is_graded(const Poset& p, int* height) {
  if (p.n() == 0) {
    if (height) *height = 0;
    return true;
  }
  std::vector<int> h = element_heights(p);
  int top = *std::max_element(h.begin(), h.end());
  if (height) *height = top;
  // Every cover must raise height by exactly one, and all maximal elements
  // must sit at the same height; then every maximal chain has length `top`.
  for (auto [i, j] : p.covers())
    if (h[j] != h[i] + 1) return false;
  for (int j = 0; j < p.n(); ++j) {
    bool maximal = true;
    for (int k = 0; k < p.n(); ++k)
      if (p.less(j, k)) {
        maximal = false;
        break;
      }
    if (maximal && h[j] != top) return false;
  }
  return true;
}

bool is_strict_sperner(const Poset& p) {
  int height = 0;
  if (!is_graded(p, &height)) return false;
  std::vector<int> h = element_heights(p);
  std::vector<DynBitset> levels(height + 1, DynBitset(p.n()));
  for (int i = 0; i < p.n(); ++i) levels[h[i]].set(i);
  // Brute force over subsets: fine at the n <= 7 scale this is used for.
  if (p.n() > 20) throw DomainError("strict Sperner check limited to n <= 20");
  int best = 0;
  std::vector<DynBitset> maximum_antichains;
  for (uint32_t mask = 1; mask < (uint32_t{1} << p.n()); ++mask) {
    DynBitset s(p.n());
    for (int i = 0; i < p.n(); ++i)
      if ((mask >> i) & 1) s.set(i);
    bool antichain = true;
    auto elems = s.elements();
    for (size_t a = 0; a < elems.size() && antichain; ++a)
      for (size_t b = a + 1; b < elems.size(); ++b)
        if (p.less(elems[a], elems[b]) || p.less(elems[b], elems[a])) {
          antichain = false;
          break;
        }
    if (!antichain) continue;
    if (s.count() > best) {
      best = s.count();
      maximum_antichains.clear();
    }
    if (s.count() == best) maximum_antichains.push_back(s);
  }
  for (const auto& a : maximum_antichains) {
    bool is_level = false;
    for (const auto& lvl : levels)
      if (a == lvl) {
        is_level = true;
        break;
      }
    if (!is_level) return false;
  }
  return true;
}

std::vector<Poset> enumerate_pos(int n) {
  if (n < 0 || n > 5) throw DomainError("enumerate_pos supports 0 <= n <= 5");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << pairs.size()); ++mask) {
    std::vector<DynBitset> below(n, DynBitset(n));
    for (size_t t = 0; t < pairs.size(); ++t)
      if ((mask >> t) & 1) below[pairs[t].second].set(pairs[t].first);
    // Keep only transitively closed relation sets; each closed set is a poset
    // (antisymmetry is automatic since all relations go upward in labels).
    bool closed = true;
    for (int j = 0; j < n && closed; ++j)
      for (int k : below[j].elements()) {
        if (!below[k].is_subset_of(below[j])) {
          closed = false;
          break;
        }
      }
    if (closed) out.emplace_back(n, std::move(below));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flagstrat
