// Copyright 2026 The planar-pentanomials Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "planar/error.hpp"
#include "planar/families.hpp"
#include "planar/log_field.hpp"
#include "planar/parallel.hpp"
#include "planar/planarity.hpp"

#ifndef PLN_VERSION
#define PLN_VERSION "0.0.0"
#endif

namespace pln {

using planar::Element;
using planar::FactorTriple;
using planar::FieldTower;
using planar::Level;
using planar::Pentanomial;
using planar::PlanarityMethod;

namespace {

// Seed of the classify re-check sampler; fixed so reruns pick the same rows.
constexpr std::uint64_t kRecheckSeed = 0x706c6e2d72656368ULL;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint32_t p = 0;
  unsigned n = 1;
  std::string modulus_q;
  std::string modulus_q3;
  unsigned threads = 0;
  std::uint64_t max_scale = std::uint64_t{1} << 20;
  std::string out;
  bool no_timing = false;

  std::string coeffs;
  std::string family;
  std::string params;
  std::string method;
  std::string which;
  std::string cyclic;
  std::string triples;
  double recheck = 0.01;
};

json parse_literal(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
  return j;
}

// "1,-1,[0,2]" -> [1,-1,[0,2]]
json parse_list(const std::string& text, const std::string& what) {
  json j = json::parse("[" + text + "]", nullptr, false);
  if (j.is_discarded()) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
  return j;
}

// "D=1,E=[1,2]" -> {"D":1,"E":[1,2]}
json parse_params(const std::string& text) {
  static const std::regex key(R"(([A-Za-z_][A-Za-z0-9_]*)\s*=)");
  if (text.empty()) return json::object();
  return parse_literal("{" + std::regex_replace(text, key, "\"$1\":") + "}",
                       "--params");
}

// "[(1,-1,1),(1,1,-1),(-1,1,1)]" -> [[1,-1,1],[1,1,-1],[-1,1,1]]
json parse_tuples(std::string text) {
  std::replace(text.begin(), text.end(), '(', '[');
  std::replace(text.begin(), text.end(), ')', ']');
  return parse_literal(text, "--triples");
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const json::exception& e) {
    throw UsageError(e.what());
  }
}

FieldTower make_tower(const Options& o) {
  if (o.modulus_q.empty() && o.modulus_q3.empty()) {
    return FieldTower::build(o.p, o.n);
  }
  const json mid = o.modulus_q.empty()
                       ? json::array()
                       : parse_literal(o.modulus_q, "--modulus-q");
  const json top = o.modulus_q3.empty()
                       ? json::array()
                       : parse_literal(o.modulus_q3, "--modulus-q3");
  const auto moduli = as_usage([&] { return moduli_from_json(mid, top); });
  return FieldTower::build(o.p, o.n, moduli);
}

planar::SweepOptions sweep(const Options& o) {
  return {o.threads, o.max_scale};
}

PlanarityMethod method_or(const Options& o, PlanarityMethod fallback) {
  if (o.method.empty()) return fallback;
  const auto m = planar::parse_planarity_method(o.method);
  if (!m) throw UsageError("unknown method '" + o.method + "'");
  return *m;
}

json verdict_json(const FieldTower& t, const planar::PlanarityVerdict& v) {
  return {{"planar", v.planar},
          {"witness_epsilon",
           v.witness ? to_json(t, *v.witness) : json(nullptr)}};
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct TripleInput {
  std::array<FactorTriple, 3> triples;
  std::optional<FactorTriple> cyclic;
};

std::optional<TripleInput> read_triples(const Options& o, const FieldTower& t) {
  if (!o.cyclic.empty() && !o.triples.empty()) {
    throw UsageError("give either --cyclic or --triples, not both");
  }
  json source;
  if (!o.cyclic.empty()) {
    source = {{"cyclic", parse_list(o.cyclic, "--cyclic")}};
  } else if (!o.triples.empty()) {
    const char first = o.triples.front();
    if (first == '[' || first == '(') {
      source = {{"triples", parse_tuples(o.triples)}};
    } else {
      std::ifstream in(o.triples);
      if (!in) throw UsageError("cannot read triples file '" + o.triples + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      source = parse_literal(buf.str(), "triples file");
    }
  } else {
    return std::nullopt;
  }
  return as_usage([&] {
    TripleInput input;
    if (source.contains("cyclic")) {
      input.cyclic = triple_from_json(t, source.at("cyclic"));
      input.triples = planar::cyclic_triples(*input.cyclic);
    } else if (source.contains("triples") && source.at("triples").is_array() &&
               source.at("triples").size() == 3) {
      for (std::size_t i = 0; i < 3; ++i) {
        input.triples[i] = triple_from_json(t, source.at("triples")[i]);
      }
    } else {
      throw std::invalid_argument(
          "expected {\"triples\": [t1, t2, t3]} or {\"cyclic\": [a, b, c]}");
    }
    return input;
  });
}

json triples_json(const FieldTower& t, const std::array<FactorTriple, 3>& tr) {
  return json::array(
      {to_json(t, tr[0]), to_json(t, tr[1]), to_json(t, tr[2])});
}

// ---- check ----------------------------------------------------------------

int cmd_check(const Options& o, const FieldTower& t, RunReport& r) {
  const Pentanomial f = as_usage(
      [&] { return pentanomial_from_json(t, parse_list(o.coeffs, "--coeffs")); });
  const PlanarityMethod m = method_or(o, PlanarityMethod::kDickson);
  const auto v = planar::check_planarity(t, f, m, sweep(o));
  r.inputs = {{"coeffs", to_json(t, f)}, {"method", planar::to_string(m)}};
  r.results = verdict_json(t, v);
  r.counts = {{"epsilons", t.order(Level::kTop) - 1}};
  return v.planar ? kExitOk : kExitNegative;
}

// ---- verify ---------------------------------------------------------------

struct FamilyDef {
  std::vector<std::string> params;
  // sufficient: predicate => planar; characterization: predicate <=> planar;
  // unconditional: always planar; none: no claim.
  std::string kind;
  std::function<planar::FamilyMember(const FieldTower&,
                                     const std::map<std::string, Element>&)>
      build;
};

const std::map<std::string, FamilyDef>& families() {
  using Args = std::map<std::string, Element>;
  static const std::map<std::string, FamilyDef> table = {
      {"trinomial",
       {{"C", "D", "E"}, "sufficient",
        [](const FieldTower& t, const Args& a) {
          return planar::family_trinomial(t, a.at("C"), a.at("D"), a.at("E"));
        }}},
      {"quad-teo1",
       {{}, "unconditional",
        [](const FieldTower& t, const Args&) {
          return planar::FamilyMember{planar::family_quadrinomial(t), true};
        }}},
      {"two-param",
       {{"D", "E"}, "characterization",
        [](const FieldTower& t, const Args& a) {
          return planar::family_two_param(t, a.at("D"), a.at("E"));
        }}},
      {"pent-neg",
       {{}, "unconditional",
        [](const FieldTower& t, const Args&) {
          return planar::FamilyMember{planar::family_pentanomials(t).first,
                                      true};
        }}},
      {"pent-half",
       {{}, "unconditional",
        [](const FieldTower& t, const Args&) {
          return planar::FamilyMember{planar::family_pentanomials(t).second,
                                      true};
        }}},
      {"pent-ones",
       {{}, "none",
        [](const FieldTower& t, const Args&) {
          return planar::FamilyMember{planar::uniform_pentanomial(t), false};
        }}},
  };
  return table;
}

int cmd_verify(const Options& o, const FieldTower& t, RunReport& r) {
  const auto it = families().find(o.family);
  if (it == families().end()) {
    std::string names;
    for (const auto& [name, def] : families()) {
      names += (names.empty() ? "" : ", ") + name;
    }
    throw UsageError("unknown family '" + o.family + "' (known: " + names +
                     ")");
  }
  const FamilyDef& def = it->second;
  const json given = parse_params(o.params);
  std::map<std::string, Element> args;
  json echoed = json::object();
  for (const auto& [key, value] : given.items()) {
    if (std::find(def.params.begin(), def.params.end(), key) ==
        def.params.end()) {
      throw UsageError("family " + o.family + " has no parameter " + key);
    }
  }
  for (const std::string& key : def.params) {
    if (!given.contains(key)) {
      std::string want;
      for (const auto& k : def.params) want += (want.empty() ? "" : ",") + k;
      throw UsageError("family " + o.family + " needs parameters " + want);
    }
    args[key] = as_usage([&] { return mid_from_json(t, given.at(key)); });
    echoed[key] = to_json(t, args[key]);
  }

  const planar::FamilyMember member = def.build(t, args);
  const PlanarityMethod m = method_or(o, PlanarityMethod::kDefinition);
  const auto v = planar::check_planarity(t, member.f, m, sweep(o));

  const bool has_claim = def.kind != "none";
  bool consistent = true;
  if (def.kind == "characterization") {
    consistent = member.predicate == v.planar;
  } else if (def.kind == "none") {
    consistent = v.planar;
  } else {
    consistent = !member.predicate || v.planar;
  }

  r.inputs = {{"family", o.family},
              {"params", echoed},
              {"coeffs", to_json(t, member.f)},
              {"method", planar::to_string(m)}};
  r.results = verdict_json(t, v);
  r.results["predicate_kind"] = def.kind;
  r.results["predicate"] = has_claim ? json(member.predicate) : json(nullptr);
  r.results["consistent"] = consistent;
  r.counts = {{"epsilons", t.order(Level::kTop) - 1}};
  return consistent ? kExitOk : kExitNegative;
}

// ---- classify -------------------------------------------------------------

std::vector<std::uint64_t> recheck_sample(std::uint64_t total,
                                          double fraction) {
  if (!(fraction > 0)) return {};
  const auto want = std::min<std::uint64_t>(
      total, static_cast<std::uint64_t>(std::ceil(fraction * total)));
  std::vector<std::uint64_t> pool(total);
  std::iota(pool.begin(), pool.end(), 0);
  std::mt19937_64 rng(kRecheckSeed);
  for (std::uint64_t i = 0; i < want; ++i) {
    const std::uint64_t j = i + rng() % (total - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(want);
  std::sort(pool.begin(), pool.end());
  return pool;
}

int cmd_classify(const Options& o, const FieldTower& t, RunReport& r,
                 std::ostream& out, bool& report_to_err) {
  const std::uint64_t total = pow_u64(t.q(), 5);
  planar::check_scale(sweep(o), t.order(Level::kTop));
  planar::check_scale(sweep(o), total);
  if (o.recheck < 0 || o.recheck > 1) {
    throw UsageError("--recheck must be a fraction in [0, 1]");
  }
  const PlanarityMethod m = method_or(o, PlanarityMethod::kDickson);
  const PlanarityMethod other = m == PlanarityMethod::kDefinition
                                    ? PlanarityMethod::kDickson
                                    : PlanarityMethod::kDefinition;

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + o.out + "'");
  }

  // Tuples are spread across workers; each sweep inside runs serially.
  const planar::SweepOptions inner{1, o.max_scale};
  std::vector<ClassifyRecord> records(total);
  planar::parallel_for(total, o.threads, [&](std::uint64_t i) {
    const Pentanomial f = planar::pentanomial_from_index(t, i);
    const auto v = planar::check_planarity(t, f, m, inner);
    records[i] = {i, f, v.planar, v.witness};
  });

  const auto sample = recheck_sample(total, o.recheck);
  std::vector<char> agree(sample.size(), 1);
  planar::parallel_for(sample.size(), o.threads, [&](std::uint64_t k) {
    const ClassifyRecord& rec = records[sample[k]];
    const auto v = planar::check_planarity(t, rec.coeffs, other, inner);
    agree[k] = v.planar == rec.planar && v.witness == rec.witness;
  });

  std::ostream& sink = o.out.empty() ? out : file;
  std::uint64_t planar_count = 0;
  for (const ClassifyRecord& rec : records) {
    planar_count += rec.planar;
    sink << to_json(t, rec).dump() << '\n';
  }
  sink.flush();
  if (!sink) throw UsageError("failed writing classify records");
  report_to_err = o.out.empty();

  json mismatched = json::array();
  for (std::size_t k = 0; k < sample.size(); ++k) {
    if (!agree[k]) mismatched.push_back(sample[k]);
  }
  r.inputs = {{"method", planar::to_string(m)},
              {"recheck_method", planar::to_string(other)},
              {"recheck_fraction", o.recheck},
              {"out", o.out.empty() ? json(nullptr) : json(o.out)}};
  r.results = {{"planar_count", planar_count},
               {"recheck_disagreements", mismatched}};
  r.counts = {{"tuples", total},
              {"epsilons_per_tuple", t.order(Level::kTop) - 1},
              {"planar", planar_count},
              {"rechecked", sample.size()}};
  return mismatched.empty() ? kExitOk : kExitNegative;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const Options& o, const FieldTower& t, RunReport& r) {
  const auto input = read_triples(o, t);
  if (!input) throw UsageError("solve needs --cyclic or --triples");
  const planar::SystemParams params =
      input->cyclic ? planar::cyclic_params(t, *input->cyclic)
                    : planar::system_params(t, input->triples[0],
                                            input->triples[1],
                                            input->triples[2]);
  const PlanarityMethod m = method_or(o, PlanarityMethod::kDickson);
  const auto solutions = planar::solve_system(t, params, {sweep(o), false});

  std::vector<char> planar_flags(solutions.size(), 0);
  const planar::SweepOptions inner{1, o.max_scale};
  planar::parallel_for(solutions.size(), o.threads, [&](std::uint64_t i) {
    planar_flags[i] = planar::is_planar(t, solutions[i], m, inner);
  });

  json list = json::array();
  json non_planar = json::array();
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    list.push_back(to_json(t, solutions[i]));
    if (!planar_flags[i]) non_planar.push_back(to_json(t, solutions[i]));
  }
  r.inputs = {{"triples", triples_json(t, input->triples)},
              {"cyclic",
               input->cyclic ? to_json(t, *input->cyclic) : json(nullptr)},
              {"method", planar::to_string(m)}};
  r.results = {{"params", to_json(t, params)},
               {"solutions", list},
               {"all_planar", non_planar.empty()},
               {"non_planar", non_planar}};
  r.counts = {{"tuples", pow_u64(t.q(), 5)}, {"solutions", solutions.size()}};
  return non_planar.empty() ? kExitOk : kExitNegative;
}

// ---- identities -----------------------------------------------------------

int cmd_identities(const Options& o, const FieldTower& t, RunReport& r) {
  const std::string which = o.which.empty() ? "A" : o.which;
  r.inputs = {{"which", which}};
  if (which == "A" || which == "B") {
    const bool holds = which == "A"
                           ? planar::verify_matrix_identity_a(t, sweep(o))
                           : planar::verify_matrix_identity_b(t, sweep(o));
    r.results = {{"holds", holds}};
    r.counts = {{"epsilons", t.order(Level::kTop) - 1}};
    return holds ? kExitOk : kExitNegative;
  }

  // eq6: determinant = 4 * P1 P2 P3 on every solution of the system.
  const auto input = read_triples(o, t);
  const auto triples = input ? input->triples : planar::unit_triples(t);
  const planar::SystemParams params =
      planar::system_params(t, triples[0], triples[1], triples[2]);
  const auto solutions = planar::solve_system(t, params, {sweep(o), false});

  std::vector<char> as_stated(solutions.size(), 0);
  std::vector<char> transposed(solutions.size(), 0);
  const planar::SweepOptions inner{1, o.max_scale};
  planar::parallel_for(solutions.size(), o.threads, [&](std::uint64_t i) {
    as_stated[i] = planar::verify_eq6_factorization(
        t, triples, solutions[i], inner, planar::FactorOrientation::kAsStated);
    transposed[i] = planar::verify_eq6_factorization(
        t, triples, solutions[i], inner,
        planar::FactorOrientation::kTransposed);
  });
  const auto count = [](const std::vector<char>& v) {
    return static_cast<std::uint64_t>(std::count(v.begin(), v.end(), 1));
  };
  const bool holds = count(as_stated) == solutions.size();
  r.inputs["triples"] = triples_json(t, triples);
  r.results = {{"params", to_json(t, params)},
               {"constant", planar::kFactorizationConstant},
               {"holds", holds},
               {"as_stated_holds", count(as_stated)},
               {"transposed_holds", count(transposed)}};
  r.counts = {{"solutions", solutions.size()},
              {"epsilons", t.order(Level::kTop)}};
  return holds ? kExitOk : kExitNegative;
}

// ---- field-info -----------------------------------------------------------

int cmd_field_info(const Options& o, const FieldTower& t, RunReport& r) {
  planar::check_scale(sweep(o), t.order(Level::kTop));
  const planar::LogField& lf = t.log_field();
  const Element g = t.from_index(Level::kTop, lf.primitive_index());
  r.results = {{"order_p", t.order(Level::kPrime)},
               {"order_q", t.order(Level::kMid)},
               {"order_q3", t.order(Level::kTop)},
               {"generator", to_json(t, g)},
               {"generator_index", lf.primitive_index()}};
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "Characteristic (odd prime)")
      ->required()
      ->envname("PLN_P");
  cmd->add_option("--n", o.n, "Degree of F_q over F_p")
      ->envname("PLN_N")
      ->capture_default_str();
  cmd->add_option("--modulus-q", o.modulus_q,
                  "Monic modulus of F_q, ascending, e.g. [1,0,1]")
      ->envname("PLN_MODULUS_Q");
  cmd->add_option("--modulus-q3", o.modulus_q3,
                  "Monic cubic over F_q, ascending, e.g. [1,2,0,1]")
      ->envname("PLN_MODULUS_Q3");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")
      ->envname("PLN_THREADS")
      ->capture_default_str();
  cmd->add_option("--max-scale", o.max_scale,
                  "Largest sweep allowed, in points (0 = unbounded)")
      ->envname("PLN_MAX_SCALE")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Also write the result to this file")
      ->envname("PLN_OUT");
  cmd->add_flag("--no-timing", o.no_timing,
                "Omit elapsed_ms so reports are byte-identical across runs")
      ->envname("PLN_NO_TIMING");
}

void add_method(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "definition | dickson | expression")
      ->envname("PLN_METHOD")
      ->check(CLI::IsMember({"definition", "dickson", "expression"}));
}

void add_triples(CLI::App* cmd, Options& o) {
  cmd->add_option("--cyclic", o.cyclic, "One cyclic triple a,b,c")
      ->envname("PLN_CYCLIC");
  cmd->add_option("--triples", o.triples,
                  "[(a1,b1,c1),(a2,b2,c2),(a3,b3,c3)] or a JSON file")
      ->envname("PLN_TRIPLES");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Planarity of pentanomials over F_{q^3}", "pln"};
  app.set_version_flag("--version", PLN_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide planarity of one tuple");
  add_common(check, o);
  add_method(check, o);
  check->add_option("--coeffs", o.coeffs, "E,A,B,C,D")
      ->required()
      ->envname("PLN_COEFFS");

  auto* verify = app.add_subcommand(
      "verify", "Compare a family's predicate with brute force");
  add_common(verify, o);
  add_method(verify, o);
  verify->add_option("--family", o.family,
                     "trinomial | quad-teo1 | two-param | pent-neg | "
                     "pent-half | pent-ones")
      ->required()
      ->envname("PLN_FAMILY");
  verify->add_option("--params", o.params, "e.g. D=1,E=2")
      ->envname("PLN_PARAMS");

  auto* classify =
      app.add_subcommand("classify", "Classify every tuple in F_q^5");
  add_common(classify, o);
  add_method(classify, o);
  classify
      ->add_option("--recheck", o.recheck,
                   "Fraction of tuples re-checked with a second method")
      ->envname("PLN_RECHECK")
      ->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Solve the coefficient system");
  add_common(solve, o);
  add_method(solve, o);
  add_triples(solve, o);

  auto* identities =
      app.add_subcommand("identities", "Check a determinant identity");
  add_common(identities, o);
  add_triples(identities, o);
  identities->add_option("--which", o.which, "A | B | eq6")
      ->envname("PLN_WHICH")
      ->check(CLI::IsMember({"A", "B", "eq6"}));

  auto* field_info = app.add_subcommand("field-info", "Describe the tower");
  add_common(field_info, o);

  std::vector<const char*> argv{"pln"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.tool_version = PLN_VERSION;
  bool report_to_err = false;
  int code = kExitOk;
  try {
    const FieldTower tower = make_tower(o);
    report.tower = tower_to_json(tower);
    if (check->parsed()) {
      report.command = "check";
      code = cmd_check(o, tower, report);
    } else if (verify->parsed()) {
      report.command = "verify";
      code = cmd_verify(o, tower, report);
    } else if (classify->parsed()) {
      report.command = "classify";
      code = cmd_classify(o, tower, report, out, report_to_err);
    } else if (solve->parsed()) {
      report.command = "solve";
      code = cmd_solve(o, tower, report);
    } else if (identities->parsed()) {
      report.command = "identities";
      code = cmd_identities(o, tower, report);
    } else {
      report.command = "field-info";
      code = cmd_field_info(o, tower, report);
    }
  } catch (const UsageError& e) {
    err << "pln: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "pln: error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (!o.no_timing) {
    const std::chrono::duration<double, std::milli> ms =
        std::chrono::steady_clock::now() - start;
    report.elapsed_ms = std::round(ms.count() * 1000.0) / 1000.0;
  }
  const std::string text = to_json(report).dump(2) + "\n";
  (report_to_err ? err : out) << text;
  if (!o.out.empty() && !classify->parsed()) {
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!(file << text)) {
      err << "pln: usage: cannot write '" << o.out << "'\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace pln
