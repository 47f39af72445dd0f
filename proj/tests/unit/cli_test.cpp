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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json_io.hpp"
#include "planar/families.hpp"
#include "test_support.hpp"

namespace pln {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

Result pln(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("pln_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

TEST(Check, Examples) {
  auto r = pln({"check", "--p", "3", "--n", "1", "--coeffs", "1,0,0,0,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.report()["results"]["planar"].get<bool>());
  EXPECT_TRUE(r.report()["results"]["witness_epsilon"].is_null());

  r = pln({"check", "--p", "3", "--n", "1", "--coeffs", "0,0,0,0,0"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_FALSE(r.report()["results"]["planar"].get<bool>());
  EXPECT_EQ(r.report()["results"]["witness_epsilon"], json::parse("[1,0,0]"));

  r = pln({"check", "--p", "5", "--n", "1", "--coeffs", "-1,0,2,1,-1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["inputs"]["coeffs"], json::parse("[4,0,2,1,4]"));
}

TEST(Check, ReportEnvelope) {
  const auto r =
      pln({"check", "--p", "3", "--coeffs", "1,0,0,0,0", "--method", "expression"});
  const json j = r.report();
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["tower"]["modulus_q3"], json::parse("[1,2,0,1]"));
  EXPECT_EQ(j["tower"]["modulus_q"], json::parse("[0,1]"));
  EXPECT_EQ(j["inputs"]["method"], "expression");
  EXPECT_EQ(j["counts"]["epsilons"], 26);
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_TRUE(j.contains("tool_version"));
}

TEST(Check, ExtensionFieldLiterals) {
  const auto r = pln({"check", "--p", "3", "--n", "2", "--coeffs",
                      "[1,0],0,[0,0],0,0", "--no-timing"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["inputs"]["coeffs"][0], json::parse("[1,0]"));
  EXPECT_EQ(r.report()["tower"]["modulus_q"], json::parse("[1,0,1]"));
}

TEST(Check, UsageErrors) {
  EXPECT_EQ(pln({"check", "--p", "3", "--coeffs", "1,0,0"}).code, kExitUsage);
  EXPECT_EQ(pln({"check", "--p", "3", "--coeffs", "1,a,0,0,0"}).code,
            kExitUsage);
  EXPECT_EQ(pln({"check", "--p", "3", "--coeffs", "[1,2],0,0,0,0"}).code,
            kExitUsage);
  EXPECT_EQ(pln({"check", "--coeffs", "1,0,0,0,0"}).code, kExitUsage);
  EXPECT_EQ(pln({"check", "--p", "3", "--coeffs", "1,0,0,0,0", "--method",
                 "guess"})
                .code,
            kExitUsage);
  EXPECT_EQ(pln({"frobnicate"}).code, kExitUsage);
  const auto even = pln({"check", "--p", "4", "--coeffs", "1,0,0,0,0"});
  EXPECT_EQ(even.code, kExitUsage);
  EXPECT_NE(even.err.find("InvalidField"), std::string::npos);
}

TEST(Check, ScaleBound) {
  const auto r = pln({"check", "--p", "103", "--coeffs", "1,0,0,0,0"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("ScaleExceeded"), std::string::npos);
  EXPECT_EQ(pln({"check", "--p", "3", "--coeffs", "1,0,0,0,0", "--max-scale",
                 "26"})
                .code,
            kExitUsage);
}

TEST(Check, CustomModuli) {
  const auto r = pln({"check", "--p", "3", "--modulus-q3", "[2,2,0,1]",
                      "--coeffs", "1,0,0,0,0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.report()["tower"]["modulus_q3"], json::parse("[2,2,0,1]"));
  const auto bad = pln({"check", "--p", "3", "--modulus-q3", "[0,0,0,1]",
                        "--coeffs", "1,0,0,0,0"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("ReducibleModulus"), std::string::npos);
}

TEST(Verify, Examples) {
  auto r = pln({"verify", "--family", "two-param", "--p", "7", "--n", "1",
                "--params", "D=1,E=2"});
  EXPECT_EQ(r.code, kExitOk);
  json res = r.report()["results"];
  EXPECT_EQ(res["predicate_kind"], "characterization");
  EXPECT_EQ(res["predicate"], res["planar"]);
  EXPECT_EQ(r.report()["inputs"]["method"], "definition");

  r = pln({"verify", "--family", "pent-neg", "--p", "3", "--n", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.report()["results"]["planar"].get<bool>());

  r = pln({"verify", "--family", "trinomial", "--p", "3", "--n", "1",
           "--params", "C=0,D=0,E=1"});
  EXPECT_EQ(r.code, kExitOk);
  res = r.report()["results"];
  EXPECT_FALSE(res["predicate"].get<bool>());
  EXPECT_TRUE(res["planar"].get<bool>());
}

TEST(Verify, EveryFamilyName) {
  for (const char* name : {"quad-teo1", "pent-neg", "pent-half"}) {
    EXPECT_EQ(pln({"verify", "--family", name, "--p", "5"}).code, kExitOk)
        << name;
  }
  const auto ones = pln({"verify", "--family", "pent-ones", "--p", "3"});
  EXPECT_EQ(ones.code, kExitNegative);
  EXPECT_TRUE(ones.report()["results"]["predicate"].is_null());
  EXPECT_FALSE(ones.report()["results"]["planar"].get<bool>());

  const auto e0 = pln({"verify", "--family", "two-param", "--p", "5",
                       "--params", "D=1,E=0"});
  EXPECT_EQ(e0.code, kExitOk);
  EXPECT_FALSE(e0.report()["results"]["planar"].get<bool>());
}

TEST(Verify, UsageErrors) {
  EXPECT_EQ(pln({"verify", "--family", "nope", "--p", "3"}).code, kExitUsage);
  EXPECT_EQ(pln({"verify", "--family", "two-param", "--p", "3", "--params",
                 "D=1"})
                .code,
            kExitUsage);
  EXPECT_EQ(pln({"verify", "--family", "pent-neg", "--p", "3", "--params",
                 "D=1"})
                .code,
            kExitUsage);
}

TEST(Classify, WritesOneRecordPerTupleAndCountsPlanar) {
  const auto path = temp_file("q3.jsonl");
  const auto r = pln({"classify", "--p", "3", "--n", "1", "--out",
                      path.string(), "--no-timing"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.report()["counts"]["tuples"], 243);
  EXPECT_EQ(r.report()["counts"]["planar"], 78);
  EXPECT_EQ(r.report()["counts"]["rechecked"], 3);

  const auto tower = planar::FieldTower::build(3, 1);
  std::ifstream in(path);
  std::string line;
  std::uint64_t i = 0, planar = 0;
  std::vector<bool> verdicts;
  while (std::getline(in, line)) {
    const ClassifyRecord rec = record_from_json(tower, json::parse(line));
    ASSERT_EQ(rec.index, i++);
    ASSERT_EQ(to_json(tower, rec).dump(), line);
    planar += rec.planar;
    verdicts.push_back(rec.planar);
  }
  EXPECT_EQ(i, 243u);
  EXPECT_EQ(planar, 78u);

  // Containment: every family member with a true predicate is classified planar.
  using planar::Level;
  for (const auto& c : tower.enumerate(Level::kMid)) {
    for (const auto& d : tower.enumerate(Level::kMid)) {
      for (const auto& e : tower.enumerate(Level::kMid)) {
        const auto m = planar::family_trinomial(tower, c, d, e);
        if (m.predicate) EXPECT_TRUE(verdicts[planar::tuple_index(tower, m.f)]);
      }
      const auto m = planar::family_two_param(tower, c, d);
      EXPECT_EQ(verdicts[planar::tuple_index(tower, m.f)], m.predicate);
    }
  }
  const auto [neg, half] = planar::family_pentanomials(tower);
  EXPECT_TRUE(verdicts[planar::tuple_index(tower, neg)]);
  EXPECT_TRUE(verdicts[planar::tuple_index(tower, half)]);
  std::filesystem::remove(path);
}

TEST(Classify, ByteIdenticalAcrossThreadCounts) {
  const auto a = temp_file("t1.jsonl"), b = temp_file("t8.jsonl");
  const auto r1 = pln({"classify", "--p", "3", "--threads", "1", "--out",
                       a.string(), "--no-timing"});
  const auto r8 = pln({"classify", "--p", "3", "--threads", "8", "--out",
                       a.string(), "--no-timing"});
  EXPECT_EQ(r1.out, r8.out);
  pln({"classify", "--p", "3", "--threads", "8", "--out", b.string()});
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Classify, StreamsToStdoutWithoutOut) {
  const auto r = pln({"classify", "--p", "3", "--recheck", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 243);
  EXPECT_EQ(json::parse(r.err)["counts"]["rechecked"], 0);
}

TEST(Classify, Errors) {
  EXPECT_EQ(pln({"classify", "--p", "3", "--out", "/nonexistent/dir/x.jsonl"})
                .code,
            kExitUsage);
  EXPECT_EQ(pln({"classify", "--p", "5", "--max-scale", "1000"}).code,
            kExitUsage);
  EXPECT_EQ(pln({"classify", "--p", "3", "--recheck", "2"}).code, kExitUsage);
}

TEST(Solve, CyclicUnitTriple) {
  const auto r = pln({"solve", "--p", "3", "--n", "1", "--cyclic", "1,0,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json res = r.report()["results"];
  EXPECT_EQ(res["params"], json::parse(R"({"alpha":0,"beta":0,"gamma":0,"delta":1})"));
  EXPECT_TRUE(res["all_planar"].get<bool>());
  // trinomial (E, 0, 0, C, D) with C + D + E = 2
  bool found = false;
  for (const json& s : res["solutions"]) {
    found |= s[1] == 0 && s[2] == 0 &&
             (s[0].get<int>() + s[3].get<int>() + s[4].get<int>()) % 3 == 2;
  }
  EXPECT_TRUE(found);
}

TEST(Solve, ExplicitTriplesAtQ5) {
  const auto r = pln({"solve", "--p", "5", "--n", "1", "--triples",
                      "[(1,-1,1),(1,1,-1),(-1,1,1)]"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json res = r.report()["results"];
  EXPECT_EQ(res["params"], json::parse(R"({"alpha":4,"beta":1,"gamma":1,"delta":3})"));
  const json witness = json::parse("[3,0,4,2,3]");
  EXPECT_NE(std::find(res["solutions"].begin(), res["solutions"].end(), witness),
            res["solutions"].end());
}

TEST(Solve, TriplesFile) {
  const auto path = temp_file("triples.json");
  std::ofstream(path) << R"({"triples": [[1,-1,1],[1,1,-1],[-1,1,1]]})";
  const auto a = pln({"solve", "--p", "5", "--triples", path.string(),
                      "--no-timing"});
  const auto b = pln({"solve", "--p", "5", "--triples",
                      "[(1,-1,1),(1,1,-1),(-1,1,1)]", "--no-timing"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.report()["results"], b.report()["results"]);
  std::ofstream(path) << R"({"cyclic": [1,0,0]})";
  EXPECT_EQ(pln({"solve", "--p", "3", "--triples", path.string()}).code,
            kExitOk);
  std::filesystem::remove(path);
}

TEST(Solve, Errors) {
  const auto r = pln({"solve", "--p", "3", "--cyclic", "1,1,1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("InadmissibleTriple"), std::string::npos);
  const auto s = pln({"solve", "--p", "5", "--triples",
                      "[(1,0,0),(1,0,0),(0,0,1)]"});
  EXPECT_EQ(s.code, kExitUsage);
  EXPECT_NE(s.err.find("SymmetryViolated"), std::string::npos);
  EXPECT_EQ(pln({"solve", "--p", "3"}).code, kExitUsage);
  EXPECT_EQ(pln({"solve", "--p", "3", "--triples", "[(1,0,0)]"}).code,
            kExitUsage);
}

TEST(Identities, Examples) {
  EXPECT_EQ(pln({"identities", "--p", "3", "--n", "1", "--which", "A"}).code,
            kExitOk);
  EXPECT_EQ(pln({"identities", "--p", "5", "--n", "1", "--which", "B"}).code,
            kExitOk);
  const auto r = pln({"identities", "--p", "3", "--n", "2", "--which", "A"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.report()["results"]["holds"].get<bool>());
}

TEST(Identities, FactorProduct) {
  auto r = pln({"identities", "--p", "3", "--which", "eq6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.report()["results"]["constant"], 4);
  EXPECT_EQ(r.report()["results"]["as_stated_holds"],
            r.report()["counts"]["solutions"]);
  r = pln({"identities", "--p", "5", "--which", "eq6", "--triples",
           "[(1,-1,1),(1,1,-1),(-1,1,1)]"});
  EXPECT_EQ(r.code, kExitOk);
}

TEST(FieldInfo, DescribesTower) {
  const auto r = pln({"field-info", "--p", "3", "--n", "2", "--no-timing"});
  ASSERT_EQ(r.code, kExitOk);
  const json j = r.report();
  EXPECT_EQ(j["results"]["order_q3"], 729);
  EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Environment, OverridesApply) {
  ::setenv("PLN_P", "5", 1);
  const auto r = pln({"check", "--coeffs", "1,0,0,0,0"});
  ::unsetenv("PLN_P");
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.report()["tower"]["p"], 5);
}

TEST(Determinism, ReportsIgnoreThreadCount) {
  const auto a = pln({"check", "--p", "7", "--coeffs", "1,1,1,1,1",
                      "--threads", "1", "--no-timing"});
  const auto b = pln({"check", "--p", "7", "--coeffs", "1,1,1,1,1",
                      "--threads", "8", "--no-timing"});
  EXPECT_EQ(a.code, kExitNegative);
  EXPECT_EQ(a.out, b.out);
}

TEST(JsonRoundTrip, ElementsAndPentanomials) {
  using namespace planar;
  for (auto [p, n] : {std::pair{5, 1}, std::pair{3, 2}}) {
    const FieldTower t = FieldTower::build(p, n);
    auto g = planar::testing::rng(p);
    for (int i = 0; i < 100; ++i) {
      const Element x = planar::testing::random_element(t, Level::kTop, g);
      ASSERT_EQ(top_from_json(t, json::parse(to_json(t, x).dump())), x);
      const Element c = planar::testing::random_element(t, Level::kMid, g);
      ASSERT_EQ(mid_from_json(t, to_json(t, c)), c);
      const Pentanomial f = planar::testing::random_pentanomial(t, g);
      ASSERT_EQ(pentanomial_from_json(t, to_json(t, f)), f);
      const FactorTriple tr{c, c, planar::testing::random_element(t, Level::kMid, g)};
      ASSERT_EQ(triple_from_json(t, to_json(t, tr)), tr);
      const SystemParams s{c, c, c, tr.c};
      ASSERT_EQ(params_from_json(t, to_json(t, s)), s);
      const ClassifyRecord rec{tuple_index(t, f), f, i % 2 == 0,
                               i % 2 == 0 ? std::nullopt : std::optional{x}};
      ASSERT_EQ(record_from_json(t, json::parse(to_json(t, rec).dump())), rec);
    }
    const json tj = tower_to_json(t);
    const FieldTower u = FieldTower::build(
        p, n, moduli_from_json(tj["modulus_q"], tj["modulus_q3"]));
    EXPECT_EQ(tower_to_json(u), tj);
  }
}

TEST(JsonRoundTrip, Reports) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check", "--p", "5", "--coeffs", "1,2,3,4,0"},
           {"verify", "--family", "trinomial", "--p", "5", "--params",
            "C=1,D=2,E=3"},
           {"solve", "--p", "3", "--cyclic", "1,0,0"},
           {"identities", "--p", "3", "--which", "eq6"},
           {"field-info", "--p", "7"}}) {
    const auto r = pln(args);
    const json j = r.report();
    const RunReport rep = report_from_json(j);
    EXPECT_EQ(to_json(rep), j);
    EXPECT_EQ(to_json(rep).dump(2) + "\n", r.out);
  }
}

TEST(JsonRoundTrip, RejectsMalformed) {
  const auto t = planar::FieldTower::build(3, 2);
  EXPECT_THROW(mid_from_json(t, json::parse("[1,2,3]")), std::invalid_argument);
  EXPECT_THROW(mid_from_json(t, json::parse("\"x\"")), std::invalid_argument);
  EXPECT_THROW(top_from_json(t, json::parse("[1,2]")), std::invalid_argument);
  EXPECT_THROW(record_from_json(t, json::parse("{}")), std::invalid_argument);
}

}  // namespace
}  // namespace pln
