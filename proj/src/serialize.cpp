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

#include "flagstrat/serialize.hpp"

#include <sstream>

namespace flagstrat {

json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (auto [i, j] : p.covers()) covers.push_back(json::array({i + 1, j + 1}));
  return json{{"n", p.n()}, {"covers", covers}};
}

Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("covers"))
    throw ShapeError("poset JSON needs \"n\" and \"covers\"");
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      throw ShapeError("each cover must be a pair");
    pairs.emplace_back(c[0].get<int>() - 1, c[1].get<int>() - 1);
  }
  return build_poset(n, pairs);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string hasse_dot(int n, const std::vector<std::pair<int, int>>& covers,
                      const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (int i = 0; i < n; ++i)
    os << "  v" << i << " [label=" << quoted(labels[i]) << "];\n";
  for (auto [i, j] : covers) os << "  v" << i << " -> v" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string poset_to_dot(const Poset& p, const std::vector<std::string>& labels) {
  std::vector<std::string> names = labels;
  if (names.empty())
    for (int i = 0; i < p.n(); ++i) names.push_back(std::to_string(i + 1));
  if (static_cast<int>(names.size()) != p.n())
    throw SizeMismatchError("one label per element expected");
  return hasse_dot(p.n(), p.covers(), names);
}

json matrix_to_json(const FqMatrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(a.at(r, c));
    rows.push_back(std::move(row));
  }
  return json{{"p", a.p()}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

FqMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("rows") ||
      !j.contains("cols") || !j.contains("entries"))
    throw ShapeError("matrix JSON needs \"p\", \"rows\", \"cols\", \"entries\"");
  const int p = j.at("p").get<int>();
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw ShapeError("entry rows do not match \"rows\"");
  std::vector<int> flat;
  for (const auto& row : entries) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ShapeError("entry row length does not match \"cols\"");
    for (const auto& e : row) flat.push_back(e.get<int>());
  }
  return FqMatrix(rows, cols, p, std::move(flat));
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (uint32_t b : m.bases) {
    json tuple = json::array();
    for (int e : mask_to_tuple(b)) tuple.push_back(e + 1);
    bases.push_back(std::move(tuple));
  }
  return json{{"n", m.n}, {"k", m.k}, {"bases", bases}};
}

json flag_to_json(const PFlag& f) {
  json spaces = json::array();
  for (const auto& w : f.spaces) spaces.push_back(matrix_to_json(w.basis()));
  return json{{"poset", poset_to_json(f.p)},
              {"p", f.spaces.empty() ? 2 : f.spaces[0].p()},
              {"spaces", spaces}};
}

PFlag flag_from_json(const json& j) {
  if (!j.is_object() || !j.contains("poset") || !j.contains("spaces"))
    throw ShapeError("flag JSON needs \"poset\" and \"spaces\"");
  PFlag f;
  f.p = poset_from_json(j.at("poset"));
  for (const auto& s : j.at("spaces"))
    f.spaces.push_back(Subspace::from_columns(matrix_from_json(s)));
  return f;
}

std::string mask_label(uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_to_tuple(mask)) {
    if (!first) s.push_back(',');
    s += std::to_string(e + 1);
    first = false;
  }
  s.push_back('}');
  return s;
}

std::string tuple_label(const std::vector<uint32_t>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s.push_back(',');
    s += mask_label(tuple[i]);
  }
  s.push_back(')');
  return s;
}

std::string power_poset_to_dot(const PowerPoset& pp) {
  std::vector<std::string> names;
  for (uint32_t m : pp.elements()) names.push_back(mask_label(m));
  return hasse_dot(pp.size(), pp.relation().covers(), names);
}

std::string tuple_poset_to_dot(const TuplePoset& tp) {
  std::vector<std::string> names;
  for (const auto& t : tp.elements()) names.push_back(tuple_label(t));
  return hasse_dot(tp.size(), tp.relation().covers(), names);
}

namespace {

json mask_to_json(uint32_t mask) {
  json t = json::array();
  for (int e : mask_to_tuple(mask)) t.push_back(e + 1);
  return t;
}

json covers_json(const Poset& relation) {
  json covers = json::array();
  for (auto [i, j] : relation.covers())
    covers.push_back(json::array({i + 1, j + 1}));
  return covers;
}

}  // namespace

json power_poset_to_json(const PowerPoset& pp) {
  json elems = json::array();
  for (uint32_t m : pp.elements()) elems.push_back(mask_to_json(m));
  return json{{"k", pp.k()},
              {"elements", elems},
              {"covers", covers_json(pp.relation())}};
}

json tuple_poset_to_json(const TuplePoset& tp) {
  json elems = json::array();
  for (const auto& t : tp.elements()) {
    json tuple = json::array();
    for (uint32_t m : t) tuple.push_back(mask_to_json(m));
    elems.push_back(std::move(tuple));
  }
  return json{{"elements", elems}, {"covers", covers_json(tp.relation())}};
}

namespace {

json labels_json(const BruhatPoset& b,
                 const std::vector<json>& element_encoding) {
  json labels = json::array();
  for (const auto& s : b.labels) {
    json ideal = json::array();
    for (int e : s.ideal.elements()) ideal.push_back(element_encoding[e]);
    json gen = json::array();
    for (int e : s.generators.elements()) gen.push_back(element_encoding[e]);
    labels.push_back(json{{"ideal", std::move(ideal)},
                          {"generator", std::move(gen)},
                          {"count", s.count}});
  }
  return labels;
}

json assemble_report(json ambient, const BruhatPoset& b,
                     const std::vector<json>& element_encoding) {
  int height = 0;
  const bool graded = is_graded(b.order, &height);
  return json{{"ambient", std::move(ambient)},
              {"labels", labels_json(b, element_encoding)},
              {"graded", graded},
              {"height", height}};
}

}  // namespace

json projective_report_json(const Poset& q, int p, const BruhatPoset& b) {
  std::vector<json> enc;
  for (int i = 0; i < q.n(); ++i) enc.push_back(json(i + 1));
  json elems = json::array();
  for (const auto& e : enc) elems.push_back(e);
  json ambient{{"kind", "projective"},
               {"p", p},
               {"poset", poset_to_json(q)},
               {"elements", elems},
               {"covers", covers_json(q)}};
  return assemble_report(std::move(ambient), b, enc);
}

json grassmann_report_json(const Poset& q, int p, const GrassmannCells& g) {
  std::vector<json> enc;
  for (uint32_t m : g.ambient.elements()) enc.push_back(mask_to_json(m));
  json elems = json::array();
  for (const auto& e : enc) elems.push_back(e);
  json ambient{{"kind", "grassmann"},
               {"p", p},
               {"k", g.ambient.k()},
               {"poset", poset_to_json(q)},
               {"elements", elems},
               {"covers", covers_json(g.ambient.relation())}};
  return assemble_report(std::move(ambient), g.poset, enc);
}

json pflag_report_json(const Poset& q, const Poset& p, int prime,
                       const PFlagCells& cells, const char* kind) {
  std::vector<json> enc;
  for (const auto& t : cells.ambient.elements()) {
    json tuple = json::array();
    for (uint32_t m : t) tuple.push_back(mask_to_json(m));
    enc.push_back(std::move(tuple));
  }
  json elems = json::array();
  for (const auto& e : enc) elems.push_back(e);
  json ambient{{"kind", kind},
               {"p", prime},
               {"poset", poset_to_json(q)},
               {"flag_poset", poset_to_json(p)},
               {"elements", elems},
               {"covers", covers_json(cells.ambient.relation())}};
  return assemble_report(std::move(ambient), cells.poset, enc);
}

json parking_report_json(const ParkingReport& rep) {
  json j = pflag_report_json(chain_poset(rep.n), trivial_poset(rep.n),
                             rep.prime, rep.cells, "parking");
  j["parking"] = json{{"all_labels_principal", rep.all_labels_principal},
                      {"generators_are_dual_parking", rep.generators_are_dual_parking},
                      {"every_dual_parking_word_realized",
                       rep.every_dual_parking_word_realized},
                      {"expected_cells", rep.expected_cells},
                      {"count_matches", rep.count_matches},
                      {"rank_is_rho", rep.rank_is_rho}};
  return j;
}

json graded_scan_json(const GradedScanReport& rep) {
  return json{{"graded", rep.graded},
              {"height", rep.height},
              {"components", rep.components},
              {"components_graded", rep.components_graded},
              {"label_count", rep.label_count}};
}

bool validate_strata_report(const json& j) {
  if (!j.is_object()) return false;
  if (!j.contains("ambient") || !j.at("ambient").is_object()) return false;
  const auto& amb = j.at("ambient");
  if (!amb.contains("elements") || !amb.at("elements").is_array()) return false;
  if (!amb.contains("covers") || !amb.at("covers").is_array()) return false;
  if (!j.contains("labels") || !j.at("labels").is_array()) return false;
  for (const auto& l : j.at("labels")) {
    if (!l.is_object()) return false;
    if (!l.contains("ideal") || !l.at("ideal").is_array()) return false;
    if (!l.contains("generator") || !l.at("generator").is_array()) return false;
    if (!l.contains("count") || !l.at("count").is_number_integer()) return false;
    if (l.at("count").get<long long>() <= 0) return false;
  }
  if (!j.contains("graded") || !j.at("graded").is_boolean()) return false;
  if (!j.contains("height") || !j.at("height").is_number_integer()) return false;
  return true;
}

bool validate_graded_scan_report(const json& j) {
  return j.is_object() && j.contains("graded") && j.at("graded").is_boolean() &&
         j.contains("height") && j.at("height").is_number_integer() &&
         j.contains("components") && j.at("components").is_number_integer() &&
         j.contains("components_graded") &&
         j.at("components_graded").is_boolean() && j.contains("label_count") &&
         j.at("label_count").is_number_integer();
}

std::string bruhat_to_dot(const BruhatPoset& b,
                          const std::vector<std::string>& node_labels) {
  if (node_labels.size() != b.labels.size())
    throw SizeMismatchError("one label per stratum expected");
  return hasse_dot(b.order.n(), b.order.covers(), node_labels);
}

}  // namespace flagstrat
