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

#include "flagstrat/matroid.hpp"

#include <algorithm>
#include <set>

namespace flagstrat {

Matroid matroid_from_masks(int n, std::vector<uint32_t> masks) {
  if (masks.empty()) throw EmptyInputError("matroid must have at least one basis");
  Matroid m;
  m.n = n;
  m.k = __builtin_popcount(masks[0]);
  for (uint32_t b : masks) {
    if (__builtin_popcount(b) != m.k)
      throw SizeMismatchError("bases must all have the same size");
    if (b >= (uint32_t{1} << n)) throw DomainError("basis outside the ground set");
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  m.bases = std::move(masks);
  return m;
}

namespace {

// Coordinatewise max (or min) of the sorted sigma-images; the Maximality
// Property holds for sigma iff the preimage of that extremum is a member.
bool has_gale_extremum(const Matroid& m, const Permutation& sigma, bool want_max) {
  std::vector<int> ext;
  for (uint32_t b : m.bases) {
    std::vector<int> img = mask_to_tuple(sigma_image(sigma, b));
    if (ext.empty()) {
      ext = img;
      continue;
    }
    for (size_t t = 0; t < img.size(); ++t)
      ext[t] = want_max ? std::max(ext[t], img[t]) : std::min(ext[t], img[t]);
  }
  const uint32_t candidate = sigma_image(sigma.inverse(), tuple_to_mask(ext));
  return std::binary_search(m.bases.begin(), m.bases.end(), candidate);
}

}  // namespace

bool is_matroid(const Matroid& m) {
  if (m.bases.empty()) throw EmptyInputError("matroid must have at least one basis");
  if (m.n > 7) throw DomainError("Maximality scan limited to n <= 7");
  for (const auto& sigma : all_permutations(m.n))
    if (!has_gale_extremum(m, sigma, /*want_max=*/true)) return false;
  return true;
}

bool is_matroid_min_form(const Matroid& m) {
  if (m.bases.empty()) throw EmptyInputError("matroid must have at least one basis");
  if (m.n > 7) throw DomainError("Maximality scan limited to n <= 7");
  for (const auto& sigma : all_permutations(m.n))
    if (!has_gale_extremum(m, sigma, /*want_max=*/false)) return false;
  return true;
}

bool is_matroid_oracle(const Matroid& m) {
  if (m.bases.empty()) throw EmptyInputError("matroid must have at least one basis");
  for (uint32_t b1 : m.bases)
    for (uint32_t b2 : m.bases) {
      uint32_t only1 = b1 & ~b2;
      while (only1) {
        const uint32_t x = only1 & -only1;
        only1 &= only1 - 1;
        bool exchanged = false;
        uint32_t only2 = b2 & ~b1;
        while (only2) {
          const uint32_t y = only2 & -only2;
          only2 &= only2 - 1;
          if (std::binary_search(m.bases.begin(), m.bases.end(), (b1 & ~x) | y)) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return false;
      }
    }
  return true;
}

Matroid matroid_of_subspace(const Subspace& w) {
  PluckerVector v = plucker(w);
  Matroid m;
  m.n = v.n;
  m.k = v.k;
  m.bases = v.support;
  std::sort(m.bases.begin(), m.bases.end());
  return m;
}

std::vector<Matroid> representable_matroids(int k, int n, int p, const Budget& budget) {
  std::set<std::vector<uint32_t>> seen;
  for (const auto& w : enumerate_subspaces(k, n, p, budget))
    seen.insert(matroid_of_subspace(w).bases);
  std::vector<Matroid> out;
  for (const auto& bases : seen) {
    Matroid m;
    m.n = n;
    m.k = k;
    m.bases = bases;
    out.push_back(std::move(m));
  }
  return out;
}

bool is_flag_matroid(const std::vector<Permutation>& f) {
  if (f.empty()) throw EmptyInputError("flag matroid must be nonempty");
  const int n = f[0].n();
  if (n > 5) throw DomainError("flag matroid scan limited to n <= 5");
  for (const auto& sigma : all_permutations(n)) {
    bool has_max = false;
    for (const auto& m : f) {
      bool m_is_max = true;
      for (const auto& g : f)
        if (!bruhat_leq_sn(sigma * g, sigma * m)) {
          m_is_max = false;
          break;
        }
      if (m_is_max) {
        has_max = true;
        break;
      }
    }
    if (!has_max) return false;
  }
  return true;
}

Matroid flag_matroid_projection(const std::vector<Permutation>& f, int k) {
  if (!is_flag_matroid(f))
    throw NotFlagMatroidError("projection requires a flag matroid");
  std::vector<uint32_t> masks;
  for (const auto& perm : f) masks.push_back(coxeter_project_k(perm, k));
  return matroid_from_masks(f[0].n(), std::move(masks));
}

namespace {

std::optional<std::vector<uint32_t>> gale_extremum_tuple(
    const PFlagMatroid& f, const Permutation& sigma) {
  const int n = f.p.n();
  std::vector<std::vector<int>> ext(n);
  for (const auto& member : f.members)
    for (int i = 0; i < n; ++i) {
      std::vector<int> img = mask_to_tuple(sigma_image(sigma, member[i]));
      if (ext[i].empty()) {
        ext[i] = img;
        continue;
      }
      for (size_t t = 0; t < img.size(); ++t) ext[i][t] = std::max(ext[i][t], img[t]);
    }
  std::vector<uint32_t> candidate(n);
  const Permutation inv = sigma.inverse();
  for (int i = 0; i < n; ++i) candidate[i] = sigma_image(inv, tuple_to_mask(ext[i]));
  if (std::find(f.members.begin(), f.members.end(), candidate) == f.members.end())
    return std::nullopt;
  return candidate;
}

}  // namespace

bool is_pflag_matroid(const PFlagMatroid& f) {
  if (f.members.empty()) throw EmptyInputError("P-flag matroid must be nonempty");
  if (f.p.n() > 7) throw DomainError("Maximality scan limited to n <= 7");
  for (const auto& sigma : all_permutations(f.p.n()))
    if (!gale_extremum_tuple(f, sigma)) return false;
  return true;
}

std::vector<uint32_t> pflag_matroid_max(const PFlagMatroid& f,
                                        const Permutation& sigma) {
  auto c = gale_extremum_tuple(f, sigma);
  if (!c) throw DomainError("no maximum under this twist");
  return *c;
}

}  // namespace flagstrat
