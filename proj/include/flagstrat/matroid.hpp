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

#ifndef FLAGSTRAT_MATROID_HPP_
#define FLAGSTRAT_MATROID_HPP_

#include <cstdint>
#include <vector>

#include "flagstrat/permutation.hpp"
#include "flagstrat/poset.hpp"
#include "flagstrat/power_poset.hpp"
#include "flagstrat/subspace.hpp"

namespace flagstrat {

// Candidate basis system: k-subsets of {0..n-1} as bitmasks, sorted by mask.
struct Matroid {
  int n = 0;
  int k = 0;
  std::vector<uint32_t> bases;

  bool operator==(const Matroid& o) const {
    return n == o.n && k == o.k && bases == o.bases;
  }
  bool operator<(const Matroid& o) const {
    if (n != o.n) return n < o.n;
    if (k != o.k) return k < o.k;
    return bases < o.bases;
  }
};

Matroid matroid_from_masks(int n, std::vector<uint32_t> masks);

// Maximality Property: a maximum exists in every one of the n! Gale orders.
// The maximum candidate is the coordinatewise max of the sorted sigma-images,
// which must itself be the image of a member. Guard: n <= 7.
bool is_matroid(const Matroid& m);
// Dual form: minimum in every Gale order.
bool is_matroid_min_form(const Matroid& m);
// Independent basis-exchange oracle: for all B1, B2 and x in B1\B2 there is
// y in B2\B1 with B1 - x + y a basis.
bool is_matroid_oracle(const Matroid& m);

Matroid matroid_of_subspace(const Subspace& w);
// Deduplicated image of matroid_of_subspace over all of Gr(k,n,F_p).
std::vector<Matroid> representable_matroids(int k, int n, int p,
                                            const Budget& budget = {});

// Flag matroids: subsets of S_n with a Bruhat maximum in every twist.
bool is_flag_matroid(const std::vector<Permutation>& f);
// The k-th projection {sorted first k values of f}; input must pass
// is_flag_matroid (NotFlagMatroidError otherwise).
Matroid flag_matroid_projection(const std::vector<Permutation>& f, int k);

// P-flag matroid members are [n]^P tuples: one |down(i)|-subset per
// coordinate. Recognition: a maximum exists under the twisted product Gale
// order for every sigma in S_n.
struct PFlagMatroid {
  Poset p;
  std::vector<std::vector<uint32_t>> members;  // sorted for determinism
};

bool is_pflag_matroid(const PFlagMatroid& f);
// The maximum member under the sigma-twisted order; requires it to exist.
std::vector<uint32_t> pflag_matroid_max(const PFlagMatroid& f,
                                        const Permutation& sigma);

}  // namespace flagstrat

#endif  // FLAGSTRAT_MATROID_HPP_
