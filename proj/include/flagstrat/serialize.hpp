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

#ifndef FLAGSTRAT_SERIALIZE_HPP_
#define FLAGSTRAT_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "flagstrat/strata.hpp"

namespace flagstrat {

// Ordered JSON keeps key order stable, so outputs are byte-identical runs.
using json = nlohmann::ordered_json;

// Posets: {"n": int, "covers": [[i, j], ...]}, elements one-based.
json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);
std::string poset_to_dot(const Poset& p,
                         const std::vector<std::string>& labels = {});

// Matrices over F_p: {"p", "rows", "cols", "entries": [[row], ...]}.
json matrix_to_json(const FqMatrix& a);
FqMatrix matrix_from_json(const json& j);

// Matroids: sorted list of sorted one-based tuples.
json matroid_to_json(const Matroid& m);

// Flags: {"poset": ..., "p": int, "spaces": [matrix, ...]}.
json flag_to_json(const PFlag& f);
PFlag flag_from_json(const json& j);

// Human-readable element labels for power and tuple posets.
std::string mask_label(uint32_t mask);
std::string tuple_label(const std::vector<uint32_t>& tuple);

std::string power_poset_to_dot(const PowerPoset& pp);
std::string tuple_poset_to_dot(const TuplePoset& tp);
json power_poset_to_json(const PowerPoset& pp);
json tuple_poset_to_json(const TuplePoset& tp);

// Stratification reports:
// {"ambient": {"kind", ..., "elements": [...], "covers": [[i, j], ...]},
//  "labels": [{"ideal": [...], "generator": [...], "count": int}, ...],
//  "graded": bool, "height": int}
// Elements are one-based ints (projective), sorted one-based tuples
// (grassmann), or tuples of tuples (pflag, parking). Cover indices are
// one-based positions into "elements".
json projective_report_json(const Poset& q, int p, const BruhatPoset& b);
json grassmann_report_json(const Poset& q, int p, const GrassmannCells& g);
json pflag_report_json(const Poset& q, const Poset& p, int prime,
                       const PFlagCells& cells, const char* kind = "pflag");
json parking_report_json(const ParkingReport& rep);
json graded_scan_json(const GradedScanReport& rep);

// Schema checks used by the verification suites; they validate shape only.
bool validate_strata_report(const json& j);
bool validate_graded_scan_report(const json& j);

std::string bruhat_to_dot(const BruhatPoset& b,
                          const std::vector<std::string>& node_labels);

}  // namespace flagstrat

#endif  // FLAGSTRAT_SERIALIZE_HPP_
