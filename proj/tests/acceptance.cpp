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

// End-to-end verification suite. Each numbered check prints one PASS/FAIL
// line; the exit code is the number of failures.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagstrat/incidence.hpp"
#include "flagstrat/serialize.hpp"
#include "flagstrat/subspace.hpp"

using namespace flagstrat;

namespace {

int failures = 0;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw CheckFailure(msg);
}

void criterion(const char* id, const char* desc,
               const std::function<void()>& body) {
  try {
    body();
    std::cout << id << " PASS " << desc << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << id << " FAIL " << desc << " (" << e.what() << ")\n";
  }
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long long flag_count_formula(const Poset& p, long long prime) {
  const int n = p.n();
  return ipow(prime, n * (n - 1) / 2 - p.relation_count()) *
         q_factorial(n, prime);
}

std::string show(long long v) { return std::to_string(v); }

Poset v_poset() { return build_poset(3, {{0, 2}, {1, 2}}); }

std::vector<std::pair<int, int>> sorted_covers(const Poset& p) {
  auto c = p.covers();
  std::sort(c.begin(), c.end());
  return c;
}

const std::vector<DynBitset>& diamond_grassmann_labels() {
  static const std::vector<DynBitset> labels = {
      DynBitset::of(6, {0}),          DynBitset::of(6, {1}),
      DynBitset::of(6, {0, 1}),       DynBitset::of(6, {0, 1, 2}),
      DynBitset::of(6, {0, 1, 3}),    DynBitset::of(6, {0, 1, 2, 3, 4}),
      DynBitset::of(6, {0, 1, 2, 3, 5}), DynBitset::full(6)};
  return labels;
}

const std::vector<std::pair<int, int>>& diamond_grassmann_covers() {
  static const std::vector<std::pair<int, int>> covers = {
      {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 5},
      {3, 6}, {4, 5}, {4, 6}, {5, 7}, {6, 7}};
  return covers;
}

bool matches_census_figure(const PFlagCells& cells) {
  const std::vector<DynBitset> labels = {
      DynBitset::of(4, {1}),    DynBitset::of(4, {2}),
      DynBitset::of(4, {0, 1}), DynBitset::of(4, {0, 2}),
      DynBitset::of(4, {1, 3}), DynBitset::of(4, {2, 3}),
      DynBitset::full(4)};
  const std::vector<std::pair<int, int>> covers = {
      {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 6}};
  if (cells.poset.labels.size() != labels.size()) return false;
  for (size_t i = 0; i < labels.size(); ++i)
    if (!(cells.poset.labels[i].ideal == labels[i])) return false;
  return sorted_covers(cells.poset.order) == covers;
}

}  // namespace

int main() {
  std::unordered_map<Poset, long long, PosetHash> pos4_counts;

  criterion("C01", "flag counts match the closed form", [&] {
    for (const Poset& p : enumerate_pos(3))
      for (int prime : {2, 3}) {
        const long long expect = flag_count_formula(p, prime);
        const long long got = count_pflags_enumerated(p, prime);
        require(got == expect, "n=3 p=" + show(prime) + " got " + show(got) +
                                   " expected " + show(expect));
        require(count_pflags(p, prime) == expect, "closed form disagrees");
      }
    for (const Poset& p : enumerate_pos(4)) {
      const long long expect = flag_count_formula(p, 2);
      const long long got = count_pflags_enumerated(p, 2);
      require(got == expect,
              "n=4 got " + show(got) + " expected " + show(expect));
      pos4_counts.emplace(p, got);
    }
  });

  criterion("C02", "dual shapes carry equally many flags", [&] {
    require(pos4_counts.size() == 40, "needs the C01 counts");
    for (const auto& [p, count] : pos4_counts) {
      Poset d = dual_poset(p);
      require(dual_poset(d) == p, "dual is not an involution");
      auto it = pos4_counts.find(d);
      require(it != pos4_counts.end(), "dual left the catalog");
      require(it->second == count, "flag count changed under duality");
    }
  });

  criterion("C03", "twisted cells have size p^inv", [&] {
    for (const Poset& q : enumerate_pos(3))
      for (const Poset& p : enumerate_pos(3))
        for (const auto& sigma : all_permutations(3)) {
          const QPCellDescriptor d = qp_poset(q, p, sigma);
          const auto orbit = qp_cell_orbit(q, p, sigma, 2);
          require(static_cast<long long>(orbit.size()) == (1LL << d.inv),
                  "orbit size " + show(orbit.size()) + " vs 2^" + show(d.inv));
        }
    for (const auto& sigma : all_permutations(3))
      require(qp_poset(chain_poset(3), chain_poset(3), sigma).inv ==
                  sigma.inversions(),
              "chain twist count is not the inversion number");
  });

  criterion("C04", "complemented quotients factor exactly", [] {
    int pairs = 0;
    for (const Poset& q : enumerate_pos(3))
      for (const Poset& p : enumerate_pos(3)) {
        if (!p.refines(q) || !complement_poset(p, q)) continue;
        ++pairs;
        for (int prime : {2, 3}) {
          QuotientCheckReport rep = complemented_quotient_check(p, q, prime);
          require(rep.ok(), "quotient check failed at p=" + show(prime));
        }
      }
    require(pairs > 0, "no complemented pairs found");
  });

  criterion("C05", "subset posets: diamond diagram, duality, lex", [] {
    PowerPoset dd(diamond_poset(), 2);
    require(dd.size() == 6, "diamond subset poset must have 6 elements");
    const std::vector<std::pair<int, int>> expect = {
        {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    require(sorted_covers(dd.relation()) == expect,
            "diamond subset poset covers are off");
    for (const Poset& q : enumerate_pos(4))
      for (int k = 1; k <= 3; ++k) {
        require(power_poset_dual_check(q, k), "complementation duality failed");
        for (auto [i, j] : PowerPoset(q, k).relation().relations())
          require(i < j, "lex order is not a linear extension");
      }
  });

  criterion("C06", "matroid tests agree with the exchange oracle", [] {
    const auto masks4 = all_ksubset_masks(4, 2);
    for (uint32_t sub = 1; sub < 64; ++sub) {
      std::vector<uint32_t> bases;
      for (size_t i = 0; i < masks4.size(); ++i)
        if ((sub >> i) & 1) bases.push_back(masks4[i]);
      Matroid m = matroid_from_masks(4, bases);
      const bool oracle = is_matroid_oracle(m);
      require(is_matroid(m) == oracle, "max-form disagrees with oracle");
      require(is_matroid_min_form(m) == oracle, "min-form disagrees with oracle");
    }
    const auto masks5 = all_ksubset_masks(5, 2);
    std::mt19937_64 rng(20260815);
    for (int trial = 0; trial < 500; ++trial) {
      uint32_t sub = 0;
      while (sub == 0) sub = static_cast<uint32_t>(rng() & 1023);
      std::vector<uint32_t> bases;
      for (size_t i = 0; i < masks5.size(); ++i)
        if ((sub >> i) & 1) bases.push_back(masks5[i]);
      Matroid m = matroid_from_masks(5, bases);
      const bool oracle = is_matroid_oracle(m);
      require(is_matroid(m) == oracle, "max-form disagrees on a random subset");
      require(is_matroid_min_form(m) == oracle,
              "min-form disagrees on a random subset");
    }
  });

  criterion("C07", "two-antichain tuple-system census: 12 in, 3 out", [] {
    auto member = [](int a, int b) {
      return std::vector<uint32_t>{uint32_t{1} << (a - 1), uint32_t{1} << (b - 1)};
    };
    const std::vector<std::vector<uint32_t>> all = {
        member(1, 1), member(1, 2), member(2, 1), member(2, 2)};
    std::set<std::set<int>> rejected;
    int accepted = 0;
    for (int sub = 1; sub < 16; ++sub) {
      PFlagMatroid f;
      f.p = trivial_poset(2);
      std::set<int> picked;
      for (int i = 0; i < 4; ++i)
        if ((sub >> i) & 1) {
          f.members.push_back(all[i]);
          picked.insert(i);
        }
      if (is_pflag_matroid(f))
        ++accepted;
      else
        rejected.insert(picked);
    }
    require(accepted == 12, "expected 12 accepted, got " + show(accepted));
    const std::set<std::set<int>> expect = {{1, 2}, {0, 1, 2}, {1, 2, 3}};
    require(rejected == expect, "rejected sets are not the expected three");
  });

  criterion("C08", "projective cells partition the point set", [] {
    for (const Poset& q : enumerate_pos(3))
      for (int p : {2, 3}) {
        long long sum = 0;
        for (const auto& [ideal, count] : classify_all_projective(q, p)) {
          require(is_order_ideal(q, ideal), "label is not an ideal");
          require(projective_cell_count(q, ideal, p) == count,
                  "alternating-sum count disagrees with brute force");
          sum += count;
        }
        require(sum == q_int(3, p), "cells do not cover the projective space");
      }
  });

  criterion("C09", "wedge-square action stays in the subset-poset group", [] {
    int total = 0;
    for (const Poset& q :
         {chain_poset(4), diamond_poset(), trivial_poset(4)}) {
      const Poset ambient = PowerPoset(q, 2).relation();
      for (const auto& a : enumerate_incidence_group(q, 2)) {
        ++total;
        require(is_incidence_group_member(ambient, exterior_power_matrix(a, 2)),
                "wedge square left the group");
      }
    }
    require(total == 97, "expected 97 group elements, got " + show(total));
  });

  criterion("C10", "chain stratifications recover the classical orders", [] {
    GrassmannCells g = grassmann_q_cells(chain_poset(4), 2, 4, 2);
    require(g.poset.labels.size() == 6, "expected 6 subspace cells");
    const Poset& amb = g.ambient.relation();
    std::set<DynBitset> labels;
    for (const auto& s : g.poset.labels) labels.insert(s.ideal);
    for (int i = 0; i < g.ambient.size(); ++i)
      require(labels.count(principal_ideal(amb, i)) == 1,
              "labels are not the principal ideals");
    const auto& elems = g.ambient.elements();
    for (int i = 0; i < g.ambient.size(); ++i)
      for (int j = 0; j < g.ambient.size(); ++j) {
        const bool classic = componentwise_leq(elems[i], elems[j]);
        require(amb.leq(i, j) == classic, "ambient order differs");
        require(principal_ideal(amb, i).is_subset_of(principal_ideal(amb, j)) ==
                    classic,
                "label inclusion differs from the subset order");
      }

    PFlagCells cells = pflag_q_cells(chain_poset(3), chain_poset(3), 2);
    require(cells.poset.labels.size() == 6, "expected 6 flag cells");
    const auto sigmas = all_permutations(3);
    std::vector<DynBitset> sigma_labels;
    std::set<DynBitset> distinct;
    for (const auto& sigma : sigmas) {
      DynBitset l = classify_flag(cells.ambient, sigma_flag(chain_poset(3), sigma, 2));
      require(cells.poset.index_of_label(l) >= 0, "twist label missing");
      sigma_labels.push_back(l);
      distinct.insert(l);
    }
    require(distinct.size() == 6, "twist labels are not distinct");
    for (size_t u = 0; u < sigmas.size(); ++u)
      for (size_t v = 0; v < sigmas.size(); ++v)
        require(bruhat_leq_sn(sigmas[u], sigmas[v]) ==
                    sigma_labels[u].is_subset_of(sigma_labels[v]),
                "label inclusion differs from the permutation order");
  });

  criterion("C11", "diamond subspace cells match the eight-label diagram", [] {
    for (int p : {2, 3}) {
      GrassmannCells g = grassmann_q_cells(diamond_poset(), 2, 4, p);
      require(g.poset.labels.size() == diamond_grassmann_labels().size(),
              "label count at p=" + show(p));
      for (size_t i = 0; i < diamond_grassmann_labels().size(); ++i)
        require(g.poset.labels[i].ideal == diamond_grassmann_labels()[i],
                "label set changed at p=" + show(p));
      require(sorted_covers(g.poset.order) == diamond_grassmann_covers(),
              "cover relations changed at p=" + show(p));
    }
  });

  criterion("C12", "matroid criterion equals nonemptiness by enumeration", [] {
    for (const Poset& q : enumerate_pos(4)) {
      PowerPoset ambient(q, 2);
      if (count_order_ideals(ambient.relation()) > 1'000'000) {
        std::cout << "  note: skipped one shape, ideal lattice too large\n";
        continue;
      }
      GrassmannCells g = grassmann_q_cells(q, 2, 4, 2);
      for (const auto& ideal : order_ideals(ambient.relation())) {
        if (ideal.none()) continue;
        const bool by_matroid = cell_nonempty_by_matroid(q, ambient, ideal, 2);
        const bool by_points = g.poset.index_of_label(ideal) >= 0;
        require(by_matroid == by_points, "criterion disagrees with enumeration");
      }
    }
  });

  criterion("C13", "parking stratification and the two-antichain figure", [] {
    ParkingReport r2 = parking_stratification(2, 2);
    require(r2.cells.poset.labels.size() == 3, "n=2 expected 3 cells");
    require(r2.ok(), "n=2 report checks failed");
    ParkingReport r3 = parking_stratification(3, 2);
    require(r3.cells.poset.labels.size() == 16, "n=3 expected 16 cells");
    require(r3.ok(), "n=3 report checks failed");

    const bool p3_matches =
        matches_census_figure(pflag_q_cells(trivial_poset(2), trivial_poset(2), 3));
    PFlagCells p2 = pflag_q_cells(trivial_poset(2), trivial_poset(2), 2);
    require(matches_census_figure(p2),
            "p=2 yields " + show(p2.poset.labels.size()) +
                " labels, not the 7-element figure; the top cell needs two "
                "distinct full-support lines, which exist only for p >= 3" +
                (p3_matches ? "; p=3 reproduces the figure exactly"
                            : "; p=3 also fails"));
  });

  criterion("C14", "parking predicates match the existence oracle", [] {
    require(is_parking_function({4, 1, 1, 1, 2, 6, 4}, 7), "word 1 misclassified");
    require(!is_parking_function({6, 6, 6, 1, 2, 3, 4}, 7), "word 2 misclassified");
    require(is_dual_parking_function({6, 3, 5, 1, 2, 7, 7}, 7),
            "word 3 misclassified");
    require(!is_dual_parking_function({1, 2, 2, 2, 2, 4, 3}, 7),
            "word 4 misclassified");
    std::vector<int> a(4, 1);
    while (true) {
      require(is_parking_function(a, 4) == is_parking_function_oracle(a, 4),
              "parking predicate disagrees with the oracle");
      require(is_dual_parking_function(a, 4) ==
                  is_dual_parking_function_oracle(a, 4),
              "dual predicate disagrees with the oracle");
      int i = 0;
      while (i < 4 && a[i] == 4) a[i++] = 1;
      if (i == 4) break;
      ++a[i];
    }
  });

  criterion("C15", "gradedness scans complete and reports validate", [] {
    for (const Poset& q : enumerate_pos(4)) {
      GrassmannCells g = grassmann_q_cells(q, 2, 4, 2);
      GradedScanReport scan = graded_scan(g.poset);
      require(validate_graded_scan_report(graded_scan_json(scan)),
              "scan report schema failed");
      require(validate_strata_report(grassmann_report_json(q, 2, g)),
              "subspace report schema failed");
    }
    for (const Poset& q : enumerate_pos(3))
      for (const Poset& p : enumerate_pos(3)) {
        PFlagCells cells = pflag_q_cells(q, p, 2);
        GradedScanReport scan = graded_scan(cells.poset);
        require(validate_graded_scan_report(graded_scan_json(scan)),
                "scan report schema failed");
        require(validate_strata_report(pflag_report_json(q, p, 2, cells)),
                "flag report schema failed");
      }
  });

  if (failures)
    std::cout << failures << " criterion(s) failed\n";
  else
    std::cout << "all criteria passed\n";
  return failures;
}
