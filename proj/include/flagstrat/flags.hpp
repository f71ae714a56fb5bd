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

#ifndef FLAGSTRAT_FLAGS_HPP_
#define FLAGSTRAT_FLAGS_HPP_

#include <vector>

#include "flagstrat/incidence.hpp"
#include "flagstrat/matroid.hpp"
#include "flagstrat/permutation.hpp"
#include "flagstrat/poset.hpp"
#include "flagstrat/subspace.hpp"

namespace flagstrat {

// Tuple of subspaces of F_p^n whose inclusion and dimension pattern mirrors
// the principal ideals of P: dim V_i = |down(i)|, V_i <= V_j iff i <=_P j,
// and the dimension of any sum matches the union of down-sets.
struct PFlag {
  Poset p;
  std::vector<Subspace> spaces;

  bool operator==(const PFlag& o) const { return p == o.p && spaces == o.spaces; }
  bool operator<(const PFlag& o) const {
    if (!(p == o.p)) return p < o.p;
    return spaces < o.spaces;
  }
  size_t hash() const {
    size_t h = p.hash();
    for (const auto& s : spaces) h = h * 1000003 + s.hash();
    return h;
  }
};

struct PFlagHash {
  size_t operator()(const PFlag& f) const { return f.hash(); }
};

PFlag standard_flag(const Poset& p, int prime);
// Permuted coordinate flag: V_i = span{e_{sigma(j)} : j in down(i)}.
PFlag sigma_flag(const Poset& p, const Permutation& sigma, int prime);

// Validity. Test (a): dim(sum_{i in I} V_i) = |union of down(i)| over all
// 2^n subsets I. Test (b): constructive extraction of a common basis along
// the rowmotion filtration; exact by the orbit characterization. is_pflag
// requires both; the test suite checks the two always agree.
bool is_pflag_subset_dims(const Poset& p, const std::vector<Subspace>& spaces);
bool is_pflag_constructive(const Poset& p, const std::vector<Subspace>& spaces);
bool is_pflag(const Poset& p, const std::vector<Subspace>& spaces);

PFlag act_on_flag(const FqMatrix& a, const PFlag& f);

long long count_pflags(const Poset& p, long long prime);
// Full GL-orbit of the standard flag, deduplicated; jobs > 1 splits the
// GL scan across threads.
std::vector<PFlag> enumerate_pflags(const Poset& p, int prime,
                                    const Budget& budget = {}, int jobs = 1);
long long count_pflags_enumerated(const Poset& p, int prime,
                                  const Budget& budget = {}, int jobs = 1);

// The cell datum of a pair (Q, P) and a twist sigma: the intersection order
// i <= j iff i <=_Q j and sigma^{-1}(i) <=_P sigma^{-1}(j), plus the number
// of Q-relations it forgets.
struct QPCellDescriptor {
  Poset q, p;
  Permutation sigma;
  Poset qp;
  int inv = 0;
};

QPCellDescriptor qp_poset(const Poset& q, const Poset& p, const Permutation& sigma);

// Orbit of the sigma-flag under the incidence group of Q; size p^inv.
std::vector<PFlag> qp_cell_orbit(const Poset& q, const Poset& p,
                                 const Permutation& sigma, int prime,
                                 const Budget& budget = {});

// When P is strict Sperner the cell is a unipotent group: the complement of
// [QP]_sigma in Q exists and the orbit has its order.
struct SpernerCellReport {
  bool complement_exists = false;
  int complement_relations = 0;
  long long orbit_size = 0;
  long long unipotent_order = 0;
  bool ok() const { return complement_exists && orbit_size == unipotent_order; }
};

SpernerCellReport strict_sperner_unipotent_check(const Poset& q, const Poset& p,
                                                 const Permutation& sigma,
                                                 int prime,
                                                 const Budget& budget = {});

// Cartesian product of the per-coordinate Pluecker supports; throws
// InvalidFlagError if the input is not a flag.
PFlagMatroid pflag_matroid_of_flag(const PFlag& f);

}  // namespace flagstrat

#endif  // FLAGSTRAT_FLAGS_HPP_
