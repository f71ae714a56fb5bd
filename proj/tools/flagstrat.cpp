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
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagstrat/serialize.hpp"

using namespace flagstrat;

namespace {

struct RunConfig {
  int p = 2;
  long long budget = 100'000'000;
  std::string format = "table";
  unsigned long long seed = 0;
  int jobs = 1;
  std::string out;

  Budget make_budget() const { return Budget{budget}; }
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw DomainError("cannot open output file: " + cfg.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const RunConfig& cfg, const json& j) { emit(cfg, j.dump(2)); }

// Covers micro-grammar: comma-separated one-based "i-j" pairs; empty means
// no relations. The ground-set size comes from n or from the largest label.
Poset poset_from_covers(const std::string& covers, int n) {
  std::vector<std::pair<int, int>> pairs;
  int seen = 0;
  std::stringstream ss(covers);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw DomainError("cover must look like i-j: " + tok);
    const int i = std::stoi(tok.substr(0, dash));
    const int j = std::stoi(tok.substr(dash + 1));
    if (i < 1 || j < 1) throw DomainError("cover labels are one-based");
    seen = std::max(seen, std::max(i, j));
    pairs.emplace_back(i - 1, j - 1);
  }
  if (n <= 0) n = seen;
  if (n <= 0) throw DomainError("poset size missing; pass --n");
  return build_poset(n, pairs);
}

// Named shortcuts: diamond, chainN / cN, tN / trivialN; bare names use --n.
Poset named_poset(const std::string& name, int n) {
  size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  if (i < name.size()) n = std::stoi(name.substr(i));
  const std::string base = name.substr(0, i);
  if (base == "diamond") return diamond_poset();
  if (n <= 0)
    throw DomainError("poset size missing; pass --n or a sized name like chain4");
  if (base == "chain" || base == "c") return chain_poset(n);
  if (base == "trivial" || base == "t") return trivial_poset(n);
  throw DomainError("unknown poset name: " + name);
}

// A spec is a shortcut name, a covers list, inline JSON, "-" for JSON on
// stdin, or empty (trivial poset on n).
Poset resolve_poset(const std::string& spec, int n) {
  if (spec.empty()) {
    if (n <= 0) throw DomainError("poset size missing; pass --n");
    return trivial_poset(n);
  }
  if (spec == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return poset_from_json(json::parse(buf.str()));
  }
  if (spec[0] == '{') return poset_from_json(json::parse(spec));
  if (std::isalpha(static_cast<unsigned char>(spec[0])))
    return named_poset(spec, n);
  return poset_from_covers(spec, n);
}

std::string covers_grammar(const Poset& p) {
  std::string s;
  for (auto [i, j] : p.covers()) {
    if (!s.empty()) s.push_back(',');
    s += std::to_string(i + 1) + "-" + std::to_string(j + 1);
  }
  return s.empty() ? "(none)" : s;
}

std::string ideal_label(const DynBitset& b) {
  std::string s = "{";
  bool first = true;
  for (int e : b.elements()) {
    if (!first) s.push_back(',');
    s += std::to_string(e + 1);
    first = false;
  }
  s.push_back('}');
  return s;
}

json ideal_json(const DynBitset& b) {
  json a = json::array();
  for (int e : b.elements()) a.push_back(e + 1);
  return a;
}

void print_poset(const RunConfig& cfg, const Poset& p) {
  if (cfg.format == "json") {
    emit_json(cfg, poset_to_json(p));
  } else if (cfg.format == "dot") {
    emit(cfg, poset_to_dot(p));
  } else {
    std::ostringstream os;
    os << "n: " << p.n() << "\ncovers: " << covers_grammar(p) << "\n";
    emit(cfg, os.str());
  }
}

std::string one_line(const Permutation& sigma) {
  std::string s;
  for (int v : sigma.one_line()) s += std::to_string(v + 1);
  return s;
}

int run_ideals(const RunConfig& cfg, const Poset& p) {
  auto ideals = order_ideals(p);
  const bool match = count_order_ideals(p) ==
                     static_cast<long long>(ideals.size());
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& i : ideals) list.push_back(ideal_json(i));
    emit_json(cfg, json{{"count", ideals.size()}, {"ideals", list}});
  } else {
    std::ostringstream os;
    os << "ideals: " << ideals.size() << "\n";
    for (const auto& i : ideals) os << "  " << ideal_label(i) << "\n";
    emit(cfg, os.str());
  }
  return match ? 0 : 1;
}

int run_flags_count(const RunConfig& cfg, const Poset& p) {
  const long long closed = count_pflags(p, cfg.p);
  const long long enumerated =
      count_pflags_enumerated(p, cfg.p, cfg.make_budget(), cfg.jobs);
  const bool match = closed == enumerated;
  if (cfg.format == "json") {
    emit_json(cfg, json{{"closed_form", closed},
                        {"enumerated", enumerated},
                        {"match", match}});
  } else {
    std::ostringstream os;
    os << "closed_form: " << closed << "\nenumerated: " << enumerated
       << "\nverdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    emit(cfg, os.str());
  }
  return match ? 0 : 1;
}

int run_flags_enumerate(const RunConfig& cfg, const Poset& p) {
  auto flags = enumerate_pflags(p, cfg.p, cfg.make_budget(), cfg.jobs);
  const long long closed = count_pflags(p, cfg.p);
  const bool match = closed == static_cast<long long>(flags.size());
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& f : flags) list.push_back(flag_to_json(f));
    emit_json(cfg, json{{"count", flags.size()},
                        {"closed_form", closed},
                        {"match", match},
                        {"flags", list}});
  } else {
    std::ostringstream os;
    os << "count: " << flags.size() << "\nclosed_form: " << closed
       << "\nverdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    emit(cfg, os.str());
  }
  return match ? 0 : 1;
}

int run_flags_verify(const RunConfig& cfg, const std::string& in_path) {
  std::string text;
  if (in_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(in_path);
    if (!f) throw DomainError("cannot open input file: " + in_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  PFlag f = flag_from_json(json::parse(text));
  const bool dims = is_pflag_subset_dims(f.p, f.spaces);
  const bool constructive = is_pflag_constructive(f.p, f.spaces);
  if (cfg.format == "json") {
    emit_json(cfg, json{{"pflag", dims && constructive},
                        {"tests_agree", dims == constructive}});
  } else {
    emit(cfg, std::string("pflag: ") +
                  ((dims && constructive) ? "true" : "false"));
  }
  return dims == constructive ? 0 : 1;
}

int run_flags_cells(const RunConfig& cfg, const Poset& q, const Poset& p) {
  bool all_match = true;
  json rows = json::array();
  std::ostringstream os;
  os << "sigma  inv  orbit  predicted  verdict\n";
  for (const auto& sigma : all_permutations(q.n())) {
    const QPCellDescriptor d = qp_poset(q, p, sigma);
    const auto orbit = qp_cell_orbit(q, p, sigma, cfg.p, cfg.make_budget());
    long long predicted = 1;
    for (int i = 0; i < d.inv; ++i) predicted *= cfg.p;
    const bool match = predicted == static_cast<long long>(orbit.size());
    all_match = all_match && match;
    rows.push_back(json{{"sigma", one_line(sigma)},
                        {"inv", d.inv},
                        {"orbit", orbit.size()},
                        {"predicted", predicted},
                        {"match", match}});
    os << one_line(sigma) << "  " << d.inv << "  " << orbit.size() << "  "
       << predicted << "  " << (match ? "MATCH" : "MISMATCH") << "\n";
  }
  if (cfg.format == "json")
    emit_json(cfg, json{{"cells", rows}, {"match", all_match}});
  else
    emit(cfg, os.str());
  return all_match ? 0 : 1;
}

std::vector<std::string> stratum_names(const BruhatPoset& b) {
  std::vector<std::string> names;
  for (const auto& s : b.labels) names.push_back(ideal_label(s.ideal));
  return names;
}

int emit_strata(const RunConfig& cfg, const json& report, const BruhatPoset& b,
                bool checks_pass) {
  if (cfg.format == "json") {
    emit_json(cfg, report);
  } else if (cfg.format == "dot") {
    emit(cfg, bruhat_to_dot(b, stratum_names(b)));
  } else {
    std::ostringstream os;
    os << "labels: " << b.labels.size() << "\n"
       << "graded: " << (report.at("graded").get<bool>() ? "true" : "false")
       << "\nheight: " << report.at("height").get<int>() << "\nchecks: "
       << (checks_pass ? "PASS" : "FAIL") << "\n";
    emit(cfg, os.str());
  }
  return (checks_pass && validate_strata_report(report)) ? 0 : 1;
}

int run_projective(const RunConfig& cfg, const Poset& q) {
  BruhatPoset b = projective_cells(q, cfg.p);
  long long sum = 0;
  bool mobius_ok = true;
  for (const auto& s : b.labels) {
    sum += s.count;
    if (projective_cell_count(q, s.ideal, cfg.p) != s.count) mobius_ok = false;
  }
  const bool pass = mobius_ok && sum == q_int(q.n(), cfg.p);
  return emit_strata(cfg, projective_report_json(q, cfg.p, b), b, pass);
}

int run_grassmann(const RunConfig& cfg, const Poset& q, int k) {
  GrassmannCells g = grassmann_q_cells(q, k, q.n(), cfg.p, cfg.make_budget());
  long long sum = 0;
  for (const auto& s : g.poset.labels) sum += s.count;
  const bool pass = sum == gaussian_binomial(q.n(), k, cfg.p);
  return emit_strata(cfg, grassmann_report_json(q, cfg.p, g), g.poset, pass);
}

int run_pflag_cells(const RunConfig& cfg, const Poset& q, const Poset& p) {
  PFlagCells cells = pflag_q_cells(q, p, cfg.p, cfg.make_budget());
  long long sum = 0;
  for (const auto& s : cells.poset.labels) sum += s.count;
  const bool pass = sum == count_pflags(p, cfg.p);
  return emit_strata(cfg, pflag_report_json(q, p, cfg.p, cells), cells.poset,
                     pass);
}

int run_parking(const RunConfig& cfg, int n) {
  ParkingReport rep = parking_stratification(n, cfg.p, cfg.make_budget());
  return emit_strata(cfg, parking_report_json(rep), rep.cells.poset, rep.ok());
}

int run_graded_scan(const RunConfig& cfg, const std::string& kind,
                    const Poset& q, const Poset& p, int k, int n) {
  BruhatPoset b;
  if (kind == "projective") {
    b = projective_cells(q, cfg.p);
  } else if (kind == "grassmann") {
    b = grassmann_q_cells(q, k, q.n(), cfg.p, cfg.make_budget()).poset;
  } else if (kind == "pflag") {
    b = pflag_q_cells(q, p, cfg.p, cfg.make_budget()).poset;
  } else {
    b = parking_stratification(n, cfg.p, cfg.make_budget()).cells.poset;
  }
  json j = graded_scan_json(graded_scan(b));
  if (cfg.format == "table") {
    std::ostringstream os;
    os << "labels: " << j.at("label_count").get<int>() << "\ngraded: "
       << (j.at("graded").get<bool>() ? "true" : "false") << "\nheight: "
       << j.at("height").get<int>() << "\ncomponents: "
       << j.at("components").get<int>() << "\n";
    emit(cfg, os.str());
  } else {
    emit_json(cfg, j);
  }
  return validate_graded_scan_report(j) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poset-shaped flag spaces over prime fields: construction, "
               "enumeration and incidence stratifications"};
  RunConfig cfg;
  app.add_option("--p", cfg.p, "prime field size");
  app.add_option("--budget", cfg.budget, "scalar-operation budget");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--seed", cfg.seed, "seed recorded in the run config");
  app.add_option("--jobs", cfg.jobs, "worker threads for enumeration");
  app.add_option("--out", cfg.out, "write output to a file instead of stdout");
  app.require_subcommand(1);

  std::string q_spec, p_spec, a_spec, b_spec, covers, in_path;
  std::string scan_kind = "projective";
  int n = 0, k = 1, chain_n = 0, trivial_n = 0;
  bool want_dot = false;

  auto add_poset_opts = [&](CLI::App* c, bool with_covers) {
    c->add_option("--Q", q_spec, "poset shortcut name or covers list");
    if (with_covers) c->add_option("--covers", covers, "covers i-j,k-l");
    c->add_option("--chain", chain_n, "size of a chain shape");
    c->add_option("--trivial", trivial_n, "size of an antichain shape");
    c->add_option("--n", n, "ground-set size");
    c->fallthrough();
  };

  CLI::App* poset = app.add_subcommand("poset", "poset construction and maps");
  poset->fallthrough();
  poset->require_subcommand(1);
  CLI::App* p_ideals = poset->add_subcommand("ideals", "list order ideals");
  add_poset_opts(p_ideals, true);
  CLI::App* p_dual = poset->add_subcommand("dual", "dual poset");
  add_poset_opts(p_dual, true);
  p_dual->add_flag("--dot", want_dot, "emit DOT");
  CLI::App* p_join = poset->add_subcommand("join", "union of relations");
  p_join->add_option("--A", a_spec, "first poset")->required();
  p_join->add_option("--B", b_spec, "second poset")->required();
  p_join->add_option("--n", n, "ground-set size");
  p_join->fallthrough();
  CLI::App* p_meet = poset->add_subcommand("meet", "intersection of relations");
  p_meet->add_option("--A", a_spec, "first poset")->required();
  p_meet->add_option("--B", b_spec, "second poset")->required();
  p_meet->add_option("--n", n, "ground-set size");
  p_meet->fallthrough();
  CLI::App* p_power = poset->add_subcommand("power", "k-subset poset");
  add_poset_opts(p_power, true);
  p_power->add_option("--k", k, "subset size")->required();
  p_power->add_flag("--dot", want_dot, "emit DOT");
  CLI::App* p_tuple = poset->add_subcommand("tuple", "tuple poset of (Q, P)");
  p_tuple->add_option("--Q", q_spec, "ambient poset")->required();
  p_tuple->add_option("--P", p_spec, "shape poset")->required();
  p_tuple->add_option("--n", n, "ground-set size");
  p_tuple->add_flag("--dot", want_dot, "emit DOT");
  p_tuple->fallthrough();
  CLI::App* p_dot = poset->add_subcommand("dot", "Hasse diagram DOT");
  add_poset_opts(p_dot, true);

  CLI::App* flags = app.add_subcommand("flags", "flag spaces");
  flags->fallthrough();
  flags->require_subcommand(1);
  auto add_flag_poset_opts = [&](CLI::App* c) {
    c->add_option("--P", p_spec, "shape poset name or covers list");
    c->add_option("--covers", covers, "covers i-j,k-l");
    c->add_option("--chain", chain_n, "size of a chain shape");
    c->add_option("--trivial", trivial_n, "size of an antichain shape");
    c->add_option("--n", n, "ground-set size");
    c->fallthrough();
  };
  CLI::App* f_count = flags->add_subcommand("count", "closed form vs scan");
  add_flag_poset_opts(f_count);
  CLI::App* f_enum = flags->add_subcommand("enumerate", "list all flags");
  add_flag_poset_opts(f_enum);
  CLI::App* f_verify = flags->add_subcommand("verify", "validate a flag JSON");
  f_verify->add_option("--in", in_path, "flag JSON file (default stdin)");
  f_verify->fallthrough();
  CLI::App* f_cells = flags->add_subcommand("cells", "per-twist orbit sizes");
  f_cells->add_option("--Q", q_spec, "acting poset")->required();
  f_cells->add_option("--P", p_spec, "shape poset")->required();
  f_cells->add_option("--n", n, "ground-set size");
  f_cells->fallthrough();

  CLI::App* strata = app.add_subcommand("strata", "incidence stratifications");
  strata->fallthrough();
  strata->require_subcommand(1);
  CLI::App* s_proj = strata->add_subcommand("projective", "projective cells");
  add_poset_opts(s_proj, true);
  s_proj->add_flag("--dot", want_dot, "emit DOT");
  CLI::App* s_grass = strata->add_subcommand("grassmann", "subspace cells");
  add_poset_opts(s_grass, true);
  s_grass->add_option("--k", k, "subspace dimension")->required();
  s_grass->add_flag("--dot", want_dot, "emit DOT");
  CLI::App* s_pflag = strata->add_subcommand("pflag", "flag cells");
  s_pflag->add_option("--Q", q_spec, "acting poset")->required();
  s_pflag->add_option("--P", p_spec, "shape poset")->required();
  s_pflag->add_option("--n", n, "ground-set size");
  s_pflag->add_flag("--dot", want_dot, "emit DOT");
  s_pflag->fallthrough();
  CLI::App* s_park = strata->add_subcommand("parking", "parking stratification");
  s_park->add_option("--n", n, "word length")->required();
  s_park->fallthrough();
  CLI::App* s_scan = strata->add_subcommand("graded-scan", "gradedness report");
  s_scan->add_option("--kind", scan_kind, "projective|grassmann|pflag|parking")
      ->check(CLI::IsMember({"projective", "grassmann", "pflag", "parking"}));
  s_scan->add_option("--Q", q_spec, "acting poset");
  s_scan->add_option("--P", p_spec, "shape poset");
  s_scan->add_option("--k", k, "subspace dimension");
  s_scan->add_option("--n", n, "ground-set size or word length");
  s_scan->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; genuine usage errors join the error exit code.
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    require_prime(cfg.p);
    if (want_dot) cfg.format = "dot";

    auto single_poset = [&]() {
      if (chain_n > 0) return chain_poset(chain_n);
      if (trivial_n > 0) return trivial_poset(trivial_n);
      if (!q_spec.empty()) return resolve_poset(q_spec, n);
      if (!covers.empty() || n > 0) return poset_from_covers(covers, n);
      throw DomainError("describe the poset with --Q, --covers, --chain or --n");
    };
    auto shape_poset = [&]() {
      if (chain_n > 0) return chain_poset(chain_n);
      if (trivial_n > 0) return trivial_poset(trivial_n);
      if (!p_spec.empty()) return resolve_poset(p_spec, n);
      if (!covers.empty() || n > 0) return poset_from_covers(covers, n);
      throw DomainError("describe the shape with --P, --covers, --chain or --n");
    };

    if (p_ideals->parsed()) return run_ideals(cfg, single_poset());
    if (p_dual->parsed()) {
      print_poset(cfg, dual_poset(single_poset()));
      return 0;
    }
    if (p_join->parsed() || p_meet->parsed()) {
      Poset a = resolve_poset(a_spec, n);
      Poset b = resolve_poset(b_spec, n);
      Poset out = p_join->parsed() ? join_poset(a, b) : meet_poset(a, b);
      const bool pass = p_join->parsed()
                            ? (a.refines(out) && b.refines(out))
                            : (out.refines(a) && out.refines(b));
      print_poset(cfg, out);
      return pass ? 0 : 1;
    }
    if (p_power->parsed()) {
      PowerPoset pp(single_poset(), k);
      if (cfg.format == "dot")
        emit(cfg, power_poset_to_dot(pp));
      else
        emit_json(cfg, power_poset_to_json(pp));
      return 0;
    }
    if (p_tuple->parsed()) {
      TuplePoset tp(resolve_poset(q_spec, n), resolve_poset(p_spec, n));
      if (cfg.format == "dot")
        emit(cfg, tuple_poset_to_dot(tp));
      else
        emit_json(cfg, tuple_poset_to_json(tp));
      return 0;
    }
    if (p_dot->parsed()) {
      emit(cfg, poset_to_dot(single_poset()));
      return 0;
    }

    if (f_count->parsed()) return run_flags_count(cfg, shape_poset());
    if (f_enum->parsed()) return run_flags_enumerate(cfg, shape_poset());
    if (f_verify->parsed()) return run_flags_verify(cfg, in_path);
    if (f_cells->parsed())
      return run_flags_cells(cfg, resolve_poset(q_spec, n),
                             resolve_poset(p_spec, n));

    if (s_proj->parsed()) return run_projective(cfg, single_poset());
    if (s_grass->parsed()) return run_grassmann(cfg, single_poset(), k);
    if (s_pflag->parsed())
      return run_pflag_cells(cfg, resolve_poset(q_spec, n),
                             resolve_poset(p_spec, n));
    if (s_park->parsed()) return run_parking(cfg, n);
    if (s_scan->parsed()) {
      if (scan_kind == "parking") {
        if (n <= 0) throw DomainError("parking scan needs --n");
        return run_graded_scan(cfg, scan_kind, trivial_poset(1),
                               trivial_poset(1), k, n);
      }
      Poset q = resolve_poset(q_spec, n);
      Poset p = p_spec.empty() ? q : resolve_poset(p_spec, n);
      return run_graded_scan(cfg, scan_kind, q, p, k, n);
    }
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
