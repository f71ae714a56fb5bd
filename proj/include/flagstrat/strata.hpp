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

#ifndef FLAGSTRAT_STRATA_HPP_
#define FLAGSTRAT_STRATA_HPP_

#include <map>
#include <vector>

#include "flagstrat/flags.hpp"
#include "flagstrat/matroid.hpp"
#include "flagstrat/power_poset.hpp"

namespace flagstrat {

// A nonempty stratum: its label (an order ideal of the ambient poset, as a
// bitset over ambient elements), the ideal's maxima, and how many points,
// subspaces or flags landed in it.
struct StratumInfo {
  DynBitset ideal;
  DynBitset generators;
  long long count = 0;
};

// The inclusion order on the nonempty labels.
struct BruhatPoset {
  std::vector<StratumInfo> labels;  // sorted by (size, lex)
  Poset order;

  int index_of_label(const DynBitset& ideal) const;
};

BruhatPoset build_bruhat_poset(const Poset& ambient,
                               const std::map<DynBitset, long long>& counts);

// Label of a projective point: the ideal generated by the support of v.
DynBitset classify_projective_point(const Poset& q, const std::vector<int>& v);

// Moebius-formula cell count: sum over ideals h with i \ h inside max(i) of
// (-1)^{|i\h|} [|h|]_p.
long long projective_cell_count(const Poset& q, const DynBitset& ideal, long long p);

// Brute-force classification of all points of P(F_p^n).
std::map<DynBitset, long long> classify_all_projective(const Poset& q, int p);
BruhatPoset projective_cells(const Poset& q, int p);

struct GrassmannCells {
  PowerPoset ambient;
  BruhatPoset poset;
};
GrassmannCells grassmann_q_cells(const Poset& q, int k, int n, int p,
                                 const Budget& budget = {});

// Nonemptiness by the matroid sandwich criterion: some representable matroid
// M with max(I) inside M inside I.
bool cell_nonempty_by_matroid(const Poset& q, const PowerPoset& ambient,
                              const DynBitset& ideal, int p,
                              const Budget& budget = {});

struct PFlagCells {
  TuplePoset ambient;
  BruhatPoset poset;
};
PFlagCells pflag_q_cells(const Poset& q, const Poset& p, int prime,
                         const Budget& budget = {});

// Label of one flag inside a given ambient tuple poset.
DynBitset classify_flag(const TuplePoset& ambient, const PFlag& f);

bool cell_nonempty_by_pflag_matroid(const Poset& q, const Poset& p,
                                    const TuplePoset& ambient,
                                    const DynBitset& ideal, int prime,
                                    const Budget& budget = {});

// Parking words use one-based values a_i in [1, n].
bool is_parking_function(const std::vector<int>& a, int n);
bool is_dual_parking_function(const std::vector<int>& a, int n);
// Definitional oracles: existence of a dominating/dominated permutation.
bool is_parking_function_oracle(const std::vector<int>& a, int n);
bool is_dual_parking_function_oracle(const std::vector<int>& a, int n);

struct ParkingReport {
  int n = 0;
  int prime = 2;
  PFlagCells cells;  // pflag_q_cells(c_n, t_n, prime)
  bool all_labels_principal = false;
  bool generators_are_dual_parking = false;
  bool every_dual_parking_word_realized = false;
  long long expected_cells = 0;
  bool count_matches = false;
  bool graded = false;
  int height = 0;
  bool rank_is_rho = false;
  bool ok() const {
    return all_labels_principal && generators_are_dual_parking &&
           every_dual_parking_word_realized && count_matches && graded &&
           rank_is_rho;
  }
};

ParkingReport parking_stratification(int n, int prime, const Budget& budget = {});

struct GradedScanReport {
  bool graded = false;
  int height = 0;
  int components = 0;
  bool components_graded = false;  // every component separately graded
  int label_count = 0;
};

GradedScanReport graded_scan(const BruhatPoset& b);

}  // namespace flagstrat

#endif  // FLAGSTRAT_STRATA_HPP_
