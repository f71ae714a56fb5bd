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

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "doctest.h"
#include "flagstrat/flags.hpp"

using namespace flagstrat;

namespace {

Poset v_poset() { return build_poset(3, {{0, 2}, {1, 2}}); }

Poset six_element_poset() {
  return build_poset(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
}

Subspace coord(int n, const std::vector<int>& coords) {
  return Subspace::coordinate_subspace(n, 2, coords);
}

// Random subspace of dimension k in F_p^n, rejection-sampled.
Subspace random_subspace(std::mt19937_64& rng, int n, int k, int p) {
  while (true) {
    FqMatrix m(n, k, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j)
        m.at(i, j) = static_cast<int>(rng() % p);
    if (rank(m) == k) return Subspace::from_columns(m);
  }
}

}  // namespace

TEST_CASE("coordinate flags") {
  PFlag f = standard_flag(chain_poset(3), 2);
  CHECK(is_pflag(f.p, f.spaces));
  CHECK(f.spaces[0] == coord(3, {0}));
  CHECK(f.spaces[2] == coord(3, {0, 1, 2}));

  PFlag g = sigma_flag(chain_poset(2), Permutation::from_one_based({2, 1}), 2);
  CHECK(g.spaces[0] == coord(2, {1}));
  CHECK(g.spaces[1] == coord(2, {0, 1}));
  CHECK(is_pflag(g.p, g.spaces));

  PFlag h = sigma_flag(v_poset(), Permutation::from_one_based({3, 1, 2}), 2);
  CHECK(h.spaces[0] == coord(3, {2}));
  CHECK(h.spaces[1] == coord(3, {0}));
  CHECK(h.spaces[2] == coord(3, {0, 1, 2}));
}

TEST_CASE("six-space worked example accepts and rejects the right tuples") {
  Poset p = six_element_poset();
  Subspace w1 = coord(6, {0});
  Subspace w2 = coord(6, {1});
  Subspace w3 = coord(6, {0, 1, 2});
  Subspace w4 = coord(6, {0, 1, 2, 3});
  Subspace w5 = coord(6, {0, 1, 2, 4});
  Subspace w6 = coord(6, {0, 1, 2, 4, 5});

  CHECK(is_pflag(p, {w1, w2, w3, w4, w5, w6}));
  CHECK(is_pflag(p, {w2, w1, w3, w4, w5, w6}));
  // Swapping the slot-4 and slot-5 spaces breaks the dimension-sum condition:
  // slot 5 lies below slot 6, so its space must stay inside w6, and w4 does
  // not (e_4 is missing from w6). Likewise {5,6} sums to dimension 6, not 5.
  CHECK_FALSE(is_pflag(p, {w1, w2, w3, w5, w4, w6}));
  CHECK_FALSE(is_pflag(p, {w2, w1, w3, w5, w4, w6}));
  CHECK_FALSE(is_pflag(p, {w1, w2, w3, w4, w6, w5}));
  CHECK_FALSE(is_pflag(p, {w1, w2, w3, w6, w4, w5}));
}

TEST_CASE("malformed tuples are errors, wrong shapes are just invalid") {
  Poset p = chain_poset(3);
  PFlag f = standard_flag(p, 2);
  CHECK_THROWS_AS(is_pflag(p, {f.spaces[0], f.spaces[1]}),
                  DimensionMismatchError);
  CHECK_THROWS_AS(is_pflag(p, {coord(4, {0}), coord(4, {0, 1}), coord(4, {0, 1, 2})}),
                  DimensionMismatchError);
  // dimension pattern violations are ordinary rejections
  CHECK_FALSE(is_pflag(p, {f.spaces[1], f.spaces[1], f.spaces[2]}));
}

TEST_CASE("the two validity tests agree everywhere") {
  std::mt19937_64 rng(12345);
  for (const Poset& p : enumerate_pos(3)) {
    std::vector<int> dims;
    for (int i = 0; i < 3; ++i)
      dims.push_back(principal_ideal(p, i).count());
    for (int t = 0; t < 200; ++t) {
      std::vector<Subspace> spaces;
      for (int i = 0; i < 3; ++i)
        spaces.push_back(random_subspace(rng, 3, dims[i], 2));
      CHECK(is_pflag_subset_dims(p, spaces) == is_pflag_constructive(p, spaces));
    }
  }
}

TEST_CASE("orbit counting formula") {
  CHECK(count_pflags(chain_poset(3), 2) == 21);
  CHECK(count_pflags(v_poset(), 2) == 42);
  CHECK(count_pflags(trivial_poset(2), 2) == 6);
  CHECK(count_pflags(trivial_poset(3), 2) == 168);
  CHECK(count_pflags(trivial_poset(4), 2) == 20160);
  // Complete flags over F_3: [3]_3! = 1 * 4 * 13.
  CHECK(count_pflags(chain_poset(3), 3) == 52);
  CHECK(count_pflags_enumerated(chain_poset(3), 3) == 52);
}

TEST_CASE("enumeration matches the closed form on all three-element shapes") {
  for (const Poset& p : enumerate_pos(3))
    CHECK(count_pflags_enumerated(p, 2) == count_pflags(p, 2));
  // threaded scan agrees with the single-threaded one
  CHECK(count_pflags_enumerated(trivial_poset(3), 2, Budget{}, 2) == 168);
}

TEST_CASE("enumerated flags are valid and distinct") {
  std::vector<PFlag> flags = enumerate_pflags(trivial_poset(2), 2);
  CHECK(flags.size() == 6);
  std::set<PFlag> dedup(flags.begin(), flags.end());
  CHECK(dedup.size() == 6);
  for (const auto& f : flags) CHECK(is_pflag(f.p, f.spaces));
}

TEST_CASE("group action on flags") {
  PFlag f = standard_flag(chain_poset(3), 2);
  FqMatrix g(3, 3, 2, {1, 1, 0, 0, 1, 1, 0, 0, 1});
  PFlag moved = act_on_flag(g, f);
  CHECK(is_pflag(moved.p, moved.spaces));
  FqMatrix singular(3, 3, 2, {1, 1, 0, 1, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(act_on_flag(singular, f), SingularError);
}

TEST_CASE("intersection order of a pair under a twist") {
  for (const Poset& q : enumerate_pos(3)) {
    CHECK(qp_poset(q, chain_poset(3), Permutation::identity(3)).qp == q);
    for (const auto& sigma : all_permutations(3))
      CHECK(qp_poset(q, trivial_poset(3), sigma).qp == trivial_poset(3));
  }
  CHECK(qp_poset(chain_poset(3), chain_poset(3), Permutation::longest(3)).qp ==
        trivial_poset(3));
  for (const auto& sigma : all_permutations(3))
    CHECK(qp_poset(chain_poset(3), chain_poset(3), sigma).inv ==
          sigma.inversions());
}

TEST_CASE("orbit sizes are powers of the field size") {
  CHECK(qp_cell_orbit(chain_poset(2), trivial_poset(2),
                      Permutation::identity(2), 2)
            .size() == 2);
  CHECK(qp_cell_orbit(chain_poset(3), chain_poset(3), Permutation::longest(3), 2)
            .size() == 8);
  for (const auto& f : qp_cell_orbit(chain_poset(3), chain_poset(3),
                                     Permutation::longest(3), 2))
    CHECK(is_pflag(f.p, f.spaces));
}

TEST_CASE("orbits through different twists are disjoint or equal") {
  Poset q = v_poset();
  Poset p = chain_poset(3);
  std::vector<std::set<PFlag>> orbits;
  for (const auto& sigma : all_permutations(3)) {
    auto o = qp_cell_orbit(q, p, sigma, 2);
    orbits.emplace_back(o.begin(), o.end());
  }
  for (size_t i = 0; i < orbits.size(); ++i)
    for (size_t j = i + 1; j < orbits.size(); ++j) {
      std::set<PFlag> inter;
      std::set_intersection(orbits[i].begin(), orbits[i].end(),
                            orbits[j].begin(), orbits[j].end(),
                            std::inserter(inter, inter.begin()));
      CHECK((inter.empty() || orbits[i] == orbits[j]));
    }
}

TEST_CASE("sperner shapes make cells unipotent orbits") {
  for (const auto& sigma : all_permutations(3)) {
    SpernerCellReport rep = strict_sperner_unipotent_check(
        chain_poset(3), chain_poset(3), sigma, 2);
    CHECK(rep.ok());
  }
  CHECK_THROWS_AS(strict_sperner_unipotent_check(
                      chain_poset(3), build_poset(3, {{0, 1}}),
                      Permutation::identity(3), 2),
                  NotStrictSpernerError);
}

TEST_CASE("tuple system of a flag multiplies coordinate supports") {
  PFlag f = standard_flag(trivial_poset(2), 2);
  PFlagMatroid m = pflag_matroid_of_flag(f);
  CHECK(m.members ==
        std::vector<std::vector<uint32_t>>{{0b01, 0b10}});
  CHECK(is_pflag_matroid(m));

  // a line off the axes crossed with the full plane inside F_2^3
  PFlag g;
  g.p = chain_poset(3);
  g.spaces = {Subspace::from_columns(FqMatrix(3, 1, 2, {1, 1, 0})),
              Subspace::coordinate_subspace(3, 2, {0, 1}),
              Subspace::coordinate_subspace(3, 2, {0, 1, 2})};
  REQUIRE(is_pflag(g.p, g.spaces));
  PFlagMatroid gm = pflag_matroid_of_flag(g);
  CHECK(gm.members ==
        std::vector<std::vector<uint32_t>>{{0b001, 0b011, 0b111},
                                           {0b010, 0b011, 0b111}});
  CHECK(is_pflag_matroid(gm));

  PFlag bad;
  bad.p = trivial_poset(2);
  bad.spaces = {Subspace::coordinate_subspace(2, 2, {0}),
                Subspace::coordinate_subspace(2, 2, {0})};
  CHECK_THROWS_AS(pflag_matroid_of_flag(bad), InvalidFlagError);
}

TEST_CASE("every enumerated flag induces a recognized tuple system") {
  for (const Poset& p : enumerate_pos(3)) {
    for (const auto& f : enumerate_pflags(p, 2))
      CHECK(is_pflag_matroid(pflag_matroid_of_flag(f)));
  }
}
