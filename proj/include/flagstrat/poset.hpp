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

#ifndef FLAGSTRAT_POSET_HPP_
#define FLAGSTRAT_POSET_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "flagstrat/bitset.hpp"
#include "flagstrat/errors.hpp"

namespace flagstrat {

// Partial order on {0, ..., n-1} whose identity labeling is a linear
// extension: i <_P j implies i < j as integers. Stored as the strict
// relation, one bitset of strict predecessors per element.
class Poset {
 public:
  Poset() : n_(0) {}
  // `below[j]` must be the full strict down-set of j (transitively closed).
  Poset(int n, std::vector<DynBitset> below)
      : n_(n), below_(std::move(below)) {}

  int n() const { return n_; }
  bool less(int i, int j) const { return i != j && below_[j].test(i); }
  bool leq(int i, int j) const { return i == j || below_[j].test(i); }
  // Strict down-set of j as a bitset (j excluded).
  const DynBitset& strictly_below(int j) const { return below_[j]; }

  // Number of strict relations |T_P|.
  int relation_count() const {
    int c = 0;
    for (const auto& b : below_) c += b.count();
    return c;
  }

  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < n_; ++j)
      for (int i : below_[j].elements()) out.emplace_back(i, j);
    return out;
  }

  // Hasse covers (i, j): i <_P j with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && below_ == o.below_;
  }
  bool operator!=(const Poset& o) const { return !(*this == o); }
  bool operator<(const Poset& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return below_ < o.below_;
  }

  // Refinement order: every relation of *this is a relation of o.
  bool refines(const Poset& o) const {
    if (n_ != o.n_) return false;
    for (int j = 0; j < n_; ++j)
      if (!below_[j].is_subset_of(o.below_[j])) return false;
    return true;
  }

  size_t hash() const {
    size_t h = static_cast<size_t>(n_);
    for (const auto& b : below_) h = h * 1000003 + b.hash();
    return h;
  }

 private:
  int n_;
  std::vector<DynBitset> below_;
};

struct PosetHash {
  size_t operator()(const Poset& p) const { return p.hash(); }
};

// Builds the poset generated by `relations` (pairs (i, j) meaning i <_P j,
// zero-based). Throws CycleError if the closure has a cycle and
// NotLinearlyExtendedError if some generated relation has i > j.
Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations);

Poset trivial_poset(int n);
Poset chain_poset(int n);
// 1 < 2, 1 < 3, 2 < 4, 3 < 4 on four elements (zero-based internally).
Poset diamond_poset();

// i <_{P*} j iff (n-1-j) <_P (n-1-i).
Poset dual_poset(const Poset& p);

// Lattice operations on Pos(n): join = closure of the union of relations,
// meet = intersection of relations.
Poset join_poset(const Poset& a, const Poset& b);
Poset meet_poset(const Poset& a, const Poset& b);

// Product poset on pairs, used via the index map (i, j) -> i * b.n() + j.
Poset cartesian_product(const Poset& a, const Poset& b);

bool is_order_ideal(const Poset& p, const DynBitset& s);
// All order ideals, sorted by (size, lexicographic) for determinism.
std::vector<DynBitset> order_ideals(const Poset& p, long long cap = 1 << 22);
long long count_order_ideals(const Poset& p);

DynBitset principal_ideal(const Poset& p, int j);
// Ideal generated by a subset: union of down-sets of its elements.
DynBitset generated_ideal(const Poset& p, const DynBitset& s);
// Maximal (resp. minimal) elements of an arbitrary subset.
DynBitset maximal_elements(const Poset& p, const DynBitset& s);
DynBitset minimal_elements(const Poset& p, const DynBitset& s);

// One step of the Fon-Der-Flaass map on ideals: the ideal generated by the
// minimal elements of the complement. Throws NotAnIdealError.
DynBitset fon_der_flaass(const Poset& p, const DynBitset& ideal);

// Moebius function of the ideal lattice J(P) between ideals h <= i:
// (-1)^{|i \ h|} if i \ h consists of maximal elements of i, else 0.
// Throws NotAnIdealError / DomainError if inputs are not nested ideals.
int mobius_ideals(const Poset& p, const DynBitset& h, const DynBitset& i);

// Complement of P inside Q (requires P refines Q): the poset with relations
// T_Q \ T_P if that set is transitively closed, otherwise nullopt.
std::optional<Poset> complement_poset(const Poset& p, const Poset& q);

// Height (longest-chain rank) of every element.
std::vector<int> element_heights(const Poset& p);
// All maximal chains have equal length. Also exposes that common length.
bool is_graded(const Poset& p, int* height = nullptr);
// Graded and every maximum-size antichain is a full rank level.
bool is_strict_sperner(const Poset& p);

// All posets on {0..n-1} with identity a linear extension; n <= 5 enforced
// (sizes 1, 1, 2, 7, 40, 357).
std::vector<Poset> enumerate_pos(int n);

}  // namespace flagstrat

#endif  // FLAGSTRAT_POSET_HPP_
