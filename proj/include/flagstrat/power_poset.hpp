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

#ifndef FLAGSTRAT_POWER_POSET_HPP_
#define FLAGSTRAT_POWER_POSET_HPP_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flagstrat/permutation.hpp"
#include "flagstrat/poset.hpp"
#include "flagstrat/subspace.hpp"

namespace flagstrat {

// Parabolic projection by block sorting: J is a set of adjacent-transposition
// generators (s_i swaps positions i, i+1, zero-based i in [0, n-2]); the
// one-line values are sorted within each maximal run of positions joined by J.
Permutation coxeter_project(const Permutation& sigma, const std::vector<int>& gens);
// Projection to the k-th Grassmannian factor: sorted first k values, as mask.
uint32_t coxeter_project_k(const Permutation& sigma, int k);

// Bruhat order on S_n via componentwise comparison of all k-projections.
bool bruhat_leq_sn(const Permutation& u, const Permutation& v);

// Sorted sigma-image of a subset mask.
uint32_t sigma_image(const Permutation& sigma, uint32_t mask);
// Componentwise order of sorted tuples.
bool componentwise_leq(uint32_t a, uint32_t b);
// Gale order twisted by sigma: sorted images compare componentwise.
bool gale_leq(const Permutation& sigma, uint32_t a, uint32_t b);

// Order lift of Q to k-subsets: a is below b iff some reindexing of a is
// componentwise below b in Q. Decided on the symmetric difference by
// bipartite matching; the definitional scan over S_k is `preceq_oracle`.
bool preceq(const Poset& q, uint32_t a, uint32_t b);
bool preceq_oracle(const Poset& q, uint32_t a, uint32_t b);

// The poset Q^k_< on all k-subsets of the ground set of Q, elements in lex
// order of increasing tuples (so lex rank is a linear extension).
class PowerPoset {
 public:
  PowerPoset() : k_(0) {}
  PowerPoset(const Poset& q, int k);

  const Poset& base() const { return base_; }
  int k() const { return k_; }
  int size() const { return relation_.n(); }
  const std::vector<uint32_t>& elements() const { return elements_; }
  const Poset& relation() const { return relation_; }
  int index_of(uint32_t mask) const;
  bool leq(uint32_t a, uint32_t b) const {
    return relation_.leq(index_of(a), index_of(b));
  }

 private:
  Poset base_;
  int k_;
  std::vector<uint32_t> elements_;
  std::unordered_map<uint32_t, int> index_;
  Poset relation_;
};

// Verifies Q^k_< iso to the dual of Q^{n-k}_< via set complementation.
bool power_poset_dual_check(const Poset& q, int k);

// The product poset Q^P on [n]^P = prod_i [n]^{|down(i)|}_<. Elements are
// n-tuples of masks, one k_i-subset per coordinate, ordered componentwise by
// the respective Q^{k_i}_<; global index is the row-major rank.
class TuplePoset {
 public:
  TuplePoset() = default;
  TuplePoset(const Poset& q, const Poset& p);

  const Poset& base_q() const { return q_; }
  const Poset& base_p() const { return p_; }
  int size() const { return relation_.n(); }
  const std::vector<int>& coordinate_dims() const { return ks_; }
  const PowerPoset& factor(int i) const { return factors_[factor_of_coord_[i]]; }
  const std::vector<std::vector<uint32_t>>& elements() const { return elements_; }
  int index_of(const std::vector<uint32_t>& tuple) const;
  const Poset& relation() const { return relation_; }
  bool leq_tuples(const std::vector<uint32_t>& a,
                  const std::vector<uint32_t>& b) const {
    return relation_.leq(index_of(a), index_of(b));
  }

 private:
  Poset q_, p_;
  std::vector<int> ks_;
  std::vector<PowerPoset> factors_;   // one per distinct k value
  std::vector<int> factor_of_coord_;  // coordinate -> factor index
  std::vector<std::vector<uint32_t>> elements_;
  Poset relation_;
};

// Coordinatewise relabeling action of S_n on [n]^P tuples.
std::vector<uint32_t> sn_action_on_tuples(const Permutation& sigma,
                                          const std::vector<uint32_t>& tuple);

// Twisted product Gale order on [n]^P tuples.
bool gale_leq_tuples(const Permutation& sigma, const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);

}  // namespace flagstrat

#endif  // FLAGSTRAT_POWER_POSET_HPP_
