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

#include "flagstrat/flags.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace flagstrat {

namespace {

void validate_flag_shape(const Poset& p, const std::vector<Subspace>& spaces) {
  if (static_cast<int>(spaces.size()) != p.n())
    throw DimensionMismatchError("flag must have one subspace per poset element");
  for (const auto& s : spaces) {
    if (s.n() != p.n()) throw DimensionMismatchError("subspace has wrong ambient dimension");
    if (s.p() != spaces[0].p()) throw DimensionMismatchError("subspaces over different moduli");
  }
}

}  // namespace

PFlag standard_flag(const Poset& p, int prime) {
  return sigma_flag(p, Permutation::identity(p.n()), prime);
}

PFlag sigma_flag(const Poset& p, const Permutation& sigma, int prime) {
  if (sigma.n() != p.n()) throw SizeMismatchError("permutation size does not match poset");
  PFlag f;
  f.p = p;
  for (int i = 0; i < p.n(); ++i) {
    std::vector<int> coords;
    for (int j : principal_ideal(p, i).elements()) coords.push_back(sigma(j));
    f.spaces.push_back(Subspace::coordinate_subspace(p.n(), prime, coords));
  }
  return f;
}

bool is_pflag_subset_dims(const Poset& p, const std::vector<Subspace>& spaces) {
  validate_flag_shape(p, spaces);
  const int n = p.n();
  if (n > 16) throw DomainError("subset-dimension test limited to n <= 16");
  for (int i = 0; i < n; ++i)
    if (spaces[i].k() != principal_ideal(p, i).count()) return false;
  const int prime = spaces[0].p();
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    DynBitset union_down(n);
    int total_cols = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        union_down |= principal_ideal(p, i);
        total_cols += spaces[i].k();
      }
    FqMatrix cat(n, total_cols, prime);
    int c0 = 0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < spaces[i].k(); ++c) cat.at(r, c0 + c) = spaces[i].basis().at(r, c);
        c0 += spaces[i].k();
      }
    FqMatrix rows = cat.transposed();
    if (rref(rows) != union_down.count()) return false;
  }
  return true;
}

namespace {

// Processing order for the constructive test: stages of the rowmotion
// filtration (union of iterates of the empty ideal), then any stragglers in
// label order. Every prefix is downward closed, which is all the greedy
// extraction needs.
std::vector<int> filtration_order(const Poset& p) {
  const int n = p.n();
  DynBitset covered(n);
  std::vector<int> order;
  DynBitset ideal(n);
  for (int step = 0; step <= 2 * n && covered.count() < n; ++step) {
    DynBitset fresh = ideal - covered;
    for (int i : fresh.elements()) order.push_back(i);
    covered |= ideal;
    ideal = fon_der_flaass(p, ideal);
  }
  for (int i = 0; i < n; ++i)
    if (!covered.test(i)) order.push_back(i);
  return order;
}

}  // namespace

bool is_pflag_constructive(const Poset& p, const std::vector<Subspace>& spaces) {
  validate_flag_shape(p, spaces);
  const int n = p.n();
  const int prime = spaces[0].p();
  for (int i = 0; i < n; ++i)
    if (spaces[i].k() != principal_ideal(p, i).count()) return false;
  // Greedy common-basis extraction: walk a linear extension, at element i
  // pick v_i in V_i outside the sum of the predecessors' spaces. Success of
  // the final span verification is choice-independent.
  FqMatrix common(n, n, prime);
  for (int i : filtration_order(p)) {
    const DynBitset pred = p.strictly_below(i);
    std::vector<int> chosen;
    if (pred.none()) {
      for (int r = 0; r < n; ++r) common.at(r, i) = spaces[i].basis().at(r, 0);
      continue;
    }
    FqMatrix cat(n, 0, prime);
    {
      int total = 0;
      for (int q : pred.elements()) total += spaces[q].k();
      cat = FqMatrix(n, total, prime);
      int c0 = 0;
      for (int q : pred.elements()) {
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < spaces[q].k(); ++c) cat.at(r, c0 + c) = spaces[q].basis().at(r, c);
        c0 += spaces[q].k();
      }
    }
    Subspace pred_sum;
    try {
      pred_sum = Subspace::from_columns(cat);
    } catch (const ZeroVectorError&) {
      return false;  // degenerate predecessor spaces
    }
    int found = -1;
    for (int c = 0; c < spaces[i].k(); ++c) {
      std::vector<int> v(n);
      for (int r = 0; r < n; ++r) v[r] = spaces[i].basis().at(r, c);
      if (!pred_sum.contains(v)) {
        found = c;
        break;
      }
    }
    if (found < 0) return false;  // V_i inside the predecessor sum
    for (int r = 0; r < n; ++r) common.at(r, i) = spaces[i].basis().at(r, found);
  }
  if (!is_invertible(common)) return false;
  for (int i = 0; i < n; ++i) {
    std::vector<int> cols = principal_ideal(p, i).elements();
    Subspace span = Subspace::from_columns(common.select_columns(cols));
    if (!(span == spaces[i])) return false;
  }
  return true;
}

bool is_pflag(const Poset& p, const std::vector<Subspace>& spaces) {
  return is_pflag_subset_dims(p, spaces) && is_pflag_constructive(p, spaces);
}

PFlag act_on_flag(const FqMatrix& a, const PFlag& f) {
  if (!is_invertible(a)) throw SingularError("flag action requires an invertible matrix");
  PFlag out;
  out.p = f.p;
  for (const auto& s : f.spaces) out.spaces.push_back(act_on_subspace(a, s));
  return out;
}

long long count_pflags(const Poset& p, long long prime) {
  const int n = p.n();
  long long v = q_factorial(n, prime);
  const int exponent = n * (n - 1) / 2 - p.relation_count();
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

namespace {

std::string flag_key(const PFlag& f) {
  std::string key;
  for (const auto& s : f.spaces)
    for (int v : s.basis().data()) key.push_back(static_cast<char>(v));
  return key;
}

}  // namespace

std::vector<PFlag> enumerate_pflags(const Poset& p, int prime,
                                    const Budget& budget, int jobs) {
  require_prime(prime);
  const int n = p.n();
  long long candidates = 1;
  for (int i = 0; i < n * n; ++i) candidates *= prime;
  check_budget(candidates * n * n * 2, budget, "enumerate_pflags");
  if (jobs < 1) jobs = 1;
  const PFlag base = standard_flag(p, prime);

  std::vector<std::vector<PFlag>> found(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      std::unordered_set<std::string> local_seen;
      const long long lo = candidates * w / jobs;
      const long long hi = candidates * (w + 1) / jobs;
      std::vector<int> entries(n * n);
      for (long long t = lo; t < hi; ++t) {
        long long x = t;
        for (int i = 0; i < n * n; ++i) {
          entries[i] = static_cast<int>(x % prime);
          x /= prime;
        }
        FqMatrix m(n, n, prime, entries);
        if (!is_invertible(m)) continue;
        PFlag f = act_on_flag(m, base);
        if (local_seen.insert(flag_key(f)).second) found[w].push_back(std::move(f));
      }
    });
  }
  for (auto& t : workers) t.join();

  std::vector<PFlag> out;
  std::unordered_set<std::string> seen;
  for (auto& part : found)
    for (auto& f : part)
      if (seen.insert(flag_key(f)).second) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  return out;
}

long long count_pflags_enumerated(const Poset& p, int prime,
                                  const Budget& budget, int jobs) {
  return static_cast<long long>(enumerate_pflags(p, prime, budget, jobs).size());
}

QPCellDescriptor qp_poset(const Poset& q, const Poset& p, const Permutation& sigma) {
  if (q.n() != p.n() || sigma.n() != p.n())
    throw SizeMismatchError("cell descriptor requires matching sizes");
  const int n = q.n();
  const Permutation inv = sigma.inverse();
  std::vector<DynBitset> below(n, DynBitset(n));
  for (int j = 0; j < n; ++j)
    for (int i : q.strictly_below(j).elements())
      if (p.less(inv(i), inv(j))) below[j].set(i);
  QPCellDescriptor d{q, p, sigma, Poset(n, std::move(below)), 0};
  d.inv = q.relation_count() - d.qp.relation_count();
  return d;
}

std::vector<PFlag> qp_cell_orbit(const Poset& q, const Poset& p,
                                 const Permutation& sigma, int prime,
                                 const Budget& budget) {
  const PFlag base = sigma_flag(p, sigma, prime);
  std::vector<PFlag> out;
  std::unordered_set<std::string> seen;
  for_each_incidence_group(q, prime, budget, [&](const FqMatrix& a) {
    PFlag f = act_on_flag(a, base);
    if (seen.insert(flag_key(f)).second) out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

SpernerCellReport strict_sperner_unipotent_check(const Poset& q, const Poset& p,
                                                 const Permutation& sigma,
                                                 int prime,
                                                 const Budget& budget) {
  if (!is_strict_sperner(p))
    throw NotStrictSpernerError("the flag poset is not strict Sperner");
  const QPCellDescriptor d = qp_poset(q, p, sigma);
  SpernerCellReport rep;
  auto comp = complement_poset(d.qp, q);
  rep.complement_exists = comp.has_value();
  if (comp) {
    rep.complement_relations = comp->relation_count();
    rep.unipotent_order = unipotent_order(*comp, prime);
  }
  rep.orbit_size = static_cast<long long>(qp_cell_orbit(q, p, sigma, prime, budget).size());
  return rep;
}

PFlagMatroid pflag_matroid_of_flag(const PFlag& f) {
  if (!is_pflag(f.p, f.spaces)) throw InvalidFlagError("input tuple is not a flag");
  const int n = f.p.n();
  PFlagMatroid out;
  out.p = f.p;
  std::vector<std::vector<uint32_t>> supports(n);
  for (int i = 0; i < n; ++i) supports[i] = plucker(f.spaces[i]).support;
  std::vector<uint32_t> tuple(n);
  std::vector<size_t> odo(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) tuple[i] = supports[i][odo[i]];
    out.members.push_back(tuple);
    int i = n - 1;
    while (i >= 0 && ++odo[i] == supports[i].size()) odo[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace flagstrat
