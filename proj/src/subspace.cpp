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

#include "flagstrat/subspace.hpp"

#include <algorithm>

namespace flagstrat {

Subspace Subspace::from_columns(const FqMatrix& columns) {
  FqMatrix rows = columns.transposed();
  std::vector<int> pivots;
  const int r = rref(rows, &pivots);
  if (r == 0) throw ZeroVectorError("subspace must have dimension at least 1");
  FqMatrix basis(columns.rows(), r, columns.p());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < columns.rows(); ++j) basis.at(j, i) = rows.at(i, j);
  Subspace s;
  s.basis_ = basis;
  s.pivot_rows_ = pivots;
  return s;
}

Subspace Subspace::coordinate_subspace(int n, int p, const std::vector<int>& coords) {
  FqMatrix m(n, static_cast<int>(coords.size()), p);
  for (size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] < 0 || coords[j] >= n) throw DomainError("coordinate out of range");
    m.at(coords[j], static_cast<int>(j)) = 1;
  }
  return from_columns(m);
}

bool Subspace::contains(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != n()) throw ShapeError("vector has wrong ambient dimension");
  // Reduce v by the echelon basis; contained iff the residue is zero.
  const int p = basis_.p();
  std::vector<int> r = v;
  for (int c = 0; c < k(); ++c) {
    const int piv = pivot_rows_[c];
    const int f = r[piv];
    if (f == 0) continue;
    for (int i = 0; i < n(); ++i)
      r[i] = static_cast<int>(((r[i] - static_cast<long long>(f) * basis_.at(i, c)) % p + p) % p);
  }
  for (int x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int c = 0; c < other.k(); ++c) {
    std::vector<int> v(other.n());
    for (int i = 0; i < other.n(); ++i) v[i] = other.basis().at(i, c);
    if (!contains(v)) return false;
  }
  return true;
}

Subspace act_on_subspace(const FqMatrix& a, const Subspace& w) {
  if (a.cols() != w.n() || a.p() != w.p()) throw ShapeError("matrix does not act on this ambient space");
  return Subspace::from_columns(a * w.basis());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.n() != b.n() || a.p() != b.p()) throw ShapeError("sum of subspaces of different ambients");
  FqMatrix m(a.n(), a.k() + b.k(), a.p());
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.k(); ++j) m.at(i, j) = a.basis().at(i, j);
    for (int j = 0; j < b.k(); ++j) m.at(i, a.k() + j) = b.basis().at(i, j);
  }
  return Subspace::from_columns(m);
}

std::vector<Subspace> enumerate_subspaces(int k, int n, int p, const Budget& budget) {
  require_prime(p);
  if (k <= 0 || k > n) throw DomainError("enumerate_subspaces requires 0 < k <= n");
  const long long count = gaussian_binomial(n, k, p);
  check_budget(count * n * k, budget, "enumerate_subspaces");
  std::vector<Subspace> out;
  out.reserve(count);
  // Echelon row matrices k x n: choose pivot columns, then fill free entries.
  // Free entries of row i sit to the right of pivot i, off later pivots.
  std::vector<uint32_t> pivot_sets = all_ksubset_masks(n, k);
  for (uint32_t pm : pivot_sets) {
    std::vector<int> piv = mask_to_tuple(pm);
    std::vector<std::pair<int, int>> free_cells;
    for (int i = 0; i < k; ++i)
      for (int c = piv[i] + 1; c < n; ++c)
        if (!((pm >> c) & 1)) free_cells.emplace_back(i, c);
    std::vector<int> vals(free_cells.size(), 0);
    while (true) {
      FqMatrix rows(k, n, p);
      for (int i = 0; i < k; ++i) rows.at(i, piv[i]) = 1;
      for (size_t t = 0; t < free_cells.size(); ++t)
        rows.at(free_cells[t].first, free_cells[t].second) = vals[t];
      out.push_back(Subspace::from_columns(rows.transposed()));
      size_t i = 0;
      while (i < vals.size() && vals[i] == p - 1) vals[i++] = 0;
      if (i == vals.size()) break;
      ++vals[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint32_t> all_ksubset_masks(int n, int k) {
  std::vector<uint32_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(tuple_to_mask(t));
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::vector<int> mask_to_tuple(uint32_t mask) {
  std::vector<int> t;
  while (mask) {
    t.push_back(__builtin_ctz(mask));
    mask &= mask - 1;
  }
  return t;
}

uint32_t tuple_to_mask(const std::vector<int>& tuple) {
  uint32_t m = 0;
  for (int x : tuple) m |= uint32_t{1} << x;
  return m;
}

PluckerVector plucker(const Subspace& w) {
  PluckerVector v;
  v.n = w.n();
  v.k = w.k();
  v.p = w.p();
  const auto masks = all_ksubset_masks(v.n, v.k);
  v.coords.resize(masks.size(), 0);
  std::vector<int> cols(v.k);
  for (int c = 0; c < v.k; ++c) cols[c] = c;
  int first_nonzero = -1;
  for (size_t t = 0; t < masks.size(); ++t) {
    v.coords[t] = determinant(w.basis().submatrix(mask_to_tuple(masks[t]), cols));
    if (first_nonzero < 0 && v.coords[t] != 0) first_nonzero = static_cast<int>(t);
  }
  if (first_nonzero < 0) throw ZeroVectorError("zero wedge: basis is dependent");
  const int scale = fq_inv(v.coords[first_nonzero], v.p);
  for (size_t t = 0; t < masks.size(); ++t) {
    v.coords[t] = static_cast<int>(static_cast<long long>(v.coords[t]) * scale % v.p);
    if (v.coords[t] != 0) v.support.push_back(masks[t]);
  }
  return v;
}

FqMatrix exterior_power_matrix(const FqMatrix& a, int k) {
  if (a.rows() != a.cols()) throw ShapeError("compound matrix of non-square input");
  const auto masks = all_ksubset_masks(a.rows(), k);
  FqMatrix c(static_cast<int>(masks.size()), static_cast<int>(masks.size()), a.p());
  for (size_t r = 0; r < masks.size(); ++r)
    for (size_t s = 0; s < masks.size(); ++s)
      c.at(static_cast<int>(r), static_cast<int>(s)) =
          determinant(a.submatrix(mask_to_tuple(masks[r]), mask_to_tuple(masks[s])));
  return c;
}

}  // namespace flagstrat
