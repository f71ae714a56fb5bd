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

#include <string>

#include "doctest.h"
#include "flagstrat/serialize.hpp"

using namespace flagstrat;

namespace {

Poset v_poset() { return build_poset(3, {{0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("poset JSON round trip") {
  Poset p = build_poset(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  json j = poset_to_json(p);
  CHECK(j.at("n") == 6);
  CHECK(poset_from_json(j) == p);

  json chain = poset_to_json(chain_poset(2));
  CHECK(chain.at("covers") == json::array({json::array({1, 2})}));

  CHECK_THROWS_AS(poset_from_json(json{{"n", 3}}), ShapeError);
  CHECK_THROWS_AS(poset_from_json(json{{"n", 3}, {"covers", json::array({json::array({1})})}}),
                  ShapeError);
}

TEST_CASE("poset DOT output") {
  std::string dot = poset_to_dot(chain_poset(2));
  CHECK(dot.find("v0 -> v1") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("[label=\"1\"]") != std::string::npos);

  std::string named = poset_to_dot(chain_poset(2), {"lo", "hi"});
  CHECK(named.find("[label=\"lo\"]") != std::string::npos);
  CHECK_THROWS_AS(poset_to_dot(chain_poset(2), {"only one"}), SizeMismatchError);
}

TEST_CASE("matrix JSON round trip") {
  FqMatrix a(2, 3, 5, {1, 2, 3, 4, 0, 2});
  json j = matrix_to_json(a);
  CHECK(j.at("p") == 5);
  CHECK(matrix_from_json(j) == a);
  // construction reduces entries mod p
  json big = j;
  big["entries"][0][0] = 6;
  CHECK(matrix_from_json(big).at(0, 0) == 1);

  CHECK_THROWS_AS(matrix_from_json(json{{"p", 2}}), ShapeError);
  json bad = j;
  bad["entries"][0] = json::array({1, 2});
  CHECK_THROWS_AS(matrix_from_json(bad), ShapeError);
}

TEST_CASE("matroid JSON uses one-based tuples") {
  Matroid m = matroid_from_masks(3, {0b110, 0b011});
  json j = matroid_to_json(m);
  CHECK(j.at("n") == 3);
  CHECK(j.at("k") == 2);
  CHECK(j.at("bases") ==
        json::array({json::array({1, 2}), json::array({2, 3})}));
}

TEST_CASE("flag JSON round trip") {
  PFlag f = sigma_flag(v_poset(), Permutation::from_one_based({2, 1, 3}), 2);
  json j = flag_to_json(f);
  CHECK(j.at("p") == 2);
  PFlag back = flag_from_json(j);
  CHECK(back == f);
  CHECK_THROWS_AS(flag_from_json(json{{"p", 2}}), ShapeError);
}

TEST_CASE("element labels") {
  CHECK(mask_label(0b101) == "{1,3}");
  CHECK(mask_label(0b1) == "{1}");
  CHECK(tuple_label({0b01, 0b11}) == "({1},{1,2})");
}

TEST_CASE("power and tuple poset serialization") {
  PowerPoset pp(chain_poset(3), 2);
  json j = power_poset_to_json(pp);
  CHECK(j.at("k") == 2);
  CHECK(j.at("elements") ==
        json::array({json::array({1, 2}), json::array({1, 3}),
                     json::array({2, 3})}));
  CHECK(j.at("covers") ==
        json::array({json::array({1, 2}), json::array({2, 3})}));
  CHECK(power_poset_to_dot(pp).find("{1,2}") != std::string::npos);

  TuplePoset tp(chain_poset(2), trivial_poset(2));
  json tj = tuple_poset_to_json(tp);
  CHECK(tj.at("elements").size() == 4);
  CHECK(tuple_poset_to_dot(tp).find("({1},{2})") != std::string::npos);
}

TEST_CASE("stratification reports validate and stay byte-stable") {
  BruhatPoset b = projective_cells(v_poset(), 2);
  json pj = projective_report_json(v_poset(), 2, b);
  CHECK(validate_strata_report(pj));
  CHECK(pj.at("ambient").at("kind") == "projective");
  CHECK(pj.at("labels").size() == 4);
  CHECK(pj.at("graded") == true);
  CHECK(pj.at("height") == 2);
  json again = projective_report_json(v_poset(), 2, projective_cells(v_poset(), 2));
  CHECK(pj.dump() == again.dump());

  GrassmannCells g = grassmann_q_cells(chain_poset(4), 2, 4, 2);
  json gj = grassmann_report_json(chain_poset(4), 2, g);
  CHECK(validate_strata_report(gj));
  CHECK(gj.at("ambient").at("k") == 2);
  CHECK(gj.at("labels").size() == 6);

  PFlagCells cells = pflag_q_cells(chain_poset(3), chain_poset(3), 2);
  json fj = pflag_report_json(chain_poset(3), chain_poset(3), 2, cells);
  CHECK(validate_strata_report(fj));
  CHECK(fj.at("ambient").at("kind") == "pflag");
  CHECK(fj.at("ambient").contains("flag_poset"));

  ParkingReport rep = parking_stratification(2, 2);
  json rj = parking_report_json(rep);
  CHECK(validate_strata_report(rj));
  CHECK(rj.at("ambient").at("kind") == "parking");
  CHECK(rj.at("parking").at("count_matches") == true);
  CHECK(rj.at("parking").at("expected_cells") == 3);

  CHECK(validate_graded_scan_report(graded_scan_json(graded_scan(b))));
  CHECK_FALSE(validate_strata_report(json::array()));
  CHECK_FALSE(validate_graded_scan_report(json{{"graded", true}}));
}

TEST_CASE("stratum DOT output") {
  BruhatPoset b = projective_cells(v_poset(), 2);
  std::vector<std::string> names;
  for (const auto& s : b.labels) {
    std::string name;
    for (int e : s.ideal.elements()) name += std::to_string(e + 1);
    names.push_back(name);
  }
  std::string dot = bruhat_to_dot(b, names);
  CHECK(dot.find("v2 -> v3") != std::string::npos);
  CHECK(dot.find("[label=\"123\"]") != std::string::npos);
  CHECK_THROWS_AS(bruhat_to_dot(b, {"x"}), SizeMismatchError);
}
