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

#include "flagstrat/incidence.hpp"

#include <unordered_map>

namespace flagstrat {

bool is_incidence_member(const Poset& p, const FqMatrix& a) {
  if (a.rows() != p.n() || a.cols() != p.n()) throw ShapeError("matrix size does not match poset");
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (i != j && a.at(i, j) != 0 && !p.less(i, j)) return false;
  return true;
}

bool is_incidence_group_member(const Poset& p, const FqMatrix& a) {
  if (!is_incidence_member(p, a)) return false;
  for (int i = 0; i < p.n(); ++i)
    if (a.at(i, i) == 0) return false;
  return true;
}

bool is_unipotent_member(const Poset& p, const FqMatrix& a) {
  if (!is_incidence_member(p, a)) return false;
  for (int i = 0; i < p.n(); ++i)
    if (a.at(i, i) != 1) return false;
  return true;
}

long long incidence_group_order(const Poset& p, long long q) {
  long long v = 1;
  for (int i = 0; i < p.n(); ++i) v *= (q - 1);
  for (int i = 0; i < p.relation_count(); ++i) v *= q;
  return v;
}

long long unipotent_order(const Poset& p, long long q) {
  long long v = 1;
  for (int i = 0; i < p.relation_count(); ++i) v *= q;
  return v;
}

namespace {

// Odometer over the free entries: diagonal cells range over 1..p-1 when
// `unit_diagonal` is false, strict-relation cells over 0..p-1.
void for_each_conforming(const Poset& poset, int p, bool unit_diagonal,
                         const Budget& budget,
                         const std::function<void(const FqMatrix&)>& fn) {
  require_prime(p);
  const int n = poset.n();
  const long long count = unit_diagonal ? unipotent_order(poset, p)
                                        : incidence_group_order(poset, p);
  check_budget(count * n * n, budget, "incidence group enumeration");
  std::vector<std::pair<int, int>> cells;  // strict-relation positions
  for (auto [i, j] : poset.relations()) cells.emplace_back(i, j);
  std::vector<int> diag(n, 1), off(cells.size(), 0);
  while (true) {
    FqMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = diag[i];
    for (size_t t = 0; t < cells.size(); ++t) m.at(cells[t].first, cells[t].second) = off[t];
    fn(m);
    size_t t = 0;
    while (t < off.size() && off[t] == p - 1) off[t++] = 0;
    if (t < off.size()) {
      ++off[t];
      continue;
    }
    if (unit_diagonal) break;
    int i = 0;
    while (i < n && diag[i] == p - 1) diag[i++] = 1;
    if (i == n) break;
    ++diag[i];
  }
}

}  // namespace

void for_each_incidence_group(const Poset& poset, int p, const Budget& budget,
                              const std::function<void(const FqMatrix&)>& fn) {
  for_each_conforming(poset, p, /*unit_diagonal=*/false, budget, fn);
}

std::vector<FqMatrix> enumerate_incidence_group(const Poset& poset, int p,
                                                const Budget& budget) {
  std::vector<FqMatrix> out;
  for_each_conforming(poset, p, false, budget,
                      [&](const FqMatrix& m) { out.push_back(m); });
  return out;
}

std::vector<FqMatrix> enumerate_unipotent(const Poset& poset, int p,
                                          const Budget& budget) {
  std::vector<FqMatrix> out;
  for_each_conforming(poset, p, true, budget,
                      [&](const FqMatrix& m) { out.push_back(m); });
  return out;
}

FqMatrix dual_conjugation(const Poset& poset, const FqMatrix& a) {
  if (!is_incidence_group_member(poset, a))
    throw MembershipError("matrix is not in the incidence group of the poset");
  const int n = poset.n();
  FqMatrix b(n, n, a.p());
  // W A^T W with W the reversal matrix: b[i][j] = a[n-1-j][n-1-i].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.at(i, j) = a.at(n - 1 - j, n - 1 - i);
  return b;
}

FqMatrix coset_canonical_form(const Poset& p, const Poset& q, const FqMatrix& a) {
  auto comp = complement_poset(p, q);
  if (!comp) throw NotComplementedError("P has no complement in Q");
  if (!is_incidence_group_member(q, a))
    throw MembershipError("matrix is not in the incidence group of Q");
  const int n = p.n();
  const int prime = a.p();
  // Find X in I*(P) with A X unipotent off T_P: per column j, the unknowns
  // X_{kj} (k <=_P j) satisfy (AX)_{jj} = 1 and (AX)_{ij} = 0 for i <_P j.
  // The system matrix A[S,S], S = down-set of j in P, is upper triangular
  // with nonzero diagonal, hence uniquely solvable.
  FqMatrix x(n, n, prime);
  for (int j = 0; j < n; ++j) {
    std::vector<int> s = principal_ideal(p, j).elements();  // sorted ascending
    const int m = static_cast<int>(s.size());
    FqMatrix aug(m, m + 1, prime);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) aug.at(r, c) = a.at(s[r], s[c]);
      aug.at(r, m) = (s[r] == j) ? 1 : 0;
    }
    if (rref(aug) != m) throw SingularError("coset system unexpectedly singular");
    for (int c = 0; c < m; ++c) x.at(s[c], j) = aug.at(c, m);
  }
  return a * x;
}

QuotientCheckReport complemented_quotient_check(const Poset& p, const Poset& q,
                                                int prime,
                                                const Budget& budget) {
  auto comp = complement_poset(p, q);
  if (!comp) throw NotComplementedError("P has no complement in Q");
  QuotientCheckReport rep;
  rep.group_order_q = incidence_group_order(q, prime);
  rep.group_order_p = incidence_group_order(p, prime);
  rep.quotient_size = rep.group_order_q / rep.group_order_p;
  rep.unipotent_order = unipotent_order(*comp, prime);
  rep.counts_match = rep.group_order_q % rep.group_order_p == 0 &&
                     rep.quotient_size == rep.unipotent_order;

  // Explicit classification: canonical forms must all lie in U(P^c(Q)), hit
  // every unipotent exactly once, and have fibers of size |I*(P)|.
  std::unordered_map<FqMatrix, long long, FqMatrixHash> fibers;
  bool all_in_unipotent = true;
  for_each_incidence_group(q, prime, budget, [&](const FqMatrix& m) {
    FqMatrix c = coset_canonical_form(p, q, m);
    if (!is_unipotent_member(*comp, c)) all_in_unipotent = false;
    ++fibers[c];
  });
  bool fibers_even = true;
  for (const auto& [c, count] : fibers)
    if (count != rep.group_order_p) fibers_even = false;
  bool fixed_points = true;
  for (const auto& u : enumerate_unipotent(*comp, prime, budget))
    if (!(coset_canonical_form(p, q, u) == u)) fixed_points = false;
  rep.bijection_verified =
      all_in_unipotent && fibers_even && fixed_points &&
      static_cast<long long>(fibers.size()) == rep.unipotent_order;
  return rep;
}

}  // namespace flagstrat
