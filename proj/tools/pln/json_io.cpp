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

#include "json_io.hpp"

#include <stdexcept>
#include <vector>

namespace pln {

using planar::Element;
using planar::FieldTower;
using planar::Level;

namespace {

std::int64_t as_integer(const json& j) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument("expected an integer, got " + j.dump());
  }
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> as_digits(const json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (!j.is_array()) {
    throw std::invalid_argument("expected an integer or digit list, got " +
                                j.dump());
  }
  std::vector<std::int64_t> out;
  for (const json& d : j) out.push_back(as_integer(d));
  return out;
}

json mid_digits(const FieldTower& tower, std::span<const std::uint16_t> d) {
  if (tower.n() == 1) return d[0];
  return json(std::vector<int>(d.begin(), d.end()));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <std::size_t N>
std::array<Element, N> mid_list(const FieldTower& tower, const json& j,
                                const char* what) {
  if (!j.is_array() || j.size() != N) {
    throw std::invalid_argument(std::string(what) + " needs " +
                                std::to_string(N) + " entries, got " +
                                j.dump());
  }
  std::array<Element, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = mid_from_json(tower, j[i]);
  return out;
}

}  // namespace

json to_json(const FieldTower& tower, const Element& x) {
  const auto d = x.digits();
  switch (x.level()) {
    case Level::kPrime:
      return d[0];
    case Level::kMid:
      return mid_digits(tower, d);
    case Level::kTop: {
      const unsigned n = tower.n();
      json out = json::array();
      for (unsigned j = 0; j < 3; ++j) {
        out.push_back(mid_digits(tower, d.subspan(j * n, n)));
      }
      return out;
    }
  }
  return nullptr;
}

Element mid_from_json(const FieldTower& tower, const json& j) {
  if (j.is_number_integer()) {
    return tower.from_int(Level::kMid, j.get<std::int64_t>());
  }
  const auto digits = as_digits(j);
  if (digits.size() > tower.n()) {
    throw std::invalid_argument("F_q literal " + j.dump() + " has more than " +
                                std::to_string(tower.n()) + " digits");
  }
  return tower.from_digits(Level::kMid, digits);
}

Element top_from_json(const FieldTower& tower, const json& j) {
  const auto c = mid_list<3>(tower, j, "F_{q^3} element");
  return tower.make_top(c[0], c[1], c[2]);
}

json tower_to_json(const FieldTower& tower) {
  json top = json::array();
  for (const Element& c : tower.modulus_q3()) top.push_back(to_json(tower, c));
  const auto mq = tower.modulus_q();
  return {{"p", tower.p()},
          {"n", tower.n()},
          {"q", tower.q()},
          {"modulus_q", std::vector<int>(mq.begin(), mq.end())},
          {"modulus_q3", top}};
}

planar::Moduli moduli_from_json(const json& mid, const json& top) {
  planar::Moduli m;
  m.mid = as_digits(mid);
  if (!mid.is_array()) throw std::invalid_argument("modulus_q must be a list");
  if (!top.is_array()) throw std::invalid_argument("modulus_q3 must be a list");
  for (const json& c : top) m.top.push_back(as_digits(c));
  return m;
}

json to_json(const FieldTower& tower, const planar::Pentanomial& f) {
  return json::array({to_json(tower, f.e), to_json(tower, f.a),
                      to_json(tower, f.b), to_json(tower, f.c),
                      to_json(tower, f.d)});
}

planar::Pentanomial pentanomial_from_json(const FieldTower& tower,
                                          const json& j) {
  const auto c = mid_list<5>(tower, j, "pentanomial (E,A,B,C,D)");
  return {c[0], c[1], c[2], c[3], c[4]};
}

json to_json(const FieldTower& tower, const planar::FactorTriple& t) {
  return json::array(
      {to_json(tower, t.a), to_json(tower, t.b), to_json(tower, t.c)});
}

planar::FactorTriple triple_from_json(const FieldTower& tower, const json& j) {
  const auto c = mid_list<3>(tower, j, "factor triple (a,b,c)");
  return {c[0], c[1], c[2]};
}

json to_json(const FieldTower& tower, const planar::SystemParams& s) {
  return {{"alpha", to_json(tower, s.alpha)},
          {"beta", to_json(tower, s.beta)},
          {"gamma", to_json(tower, s.gamma)},
          {"delta", to_json(tower, s.delta)}};
}

planar::SystemParams params_from_json(const FieldTower& tower, const json& j) {
  return {mid_from_json(tower, field(j, "alpha")),
          mid_from_json(tower, field(j, "beta")),
          mid_from_json(tower, field(j, "gamma")),
          mid_from_json(tower, field(j, "delta"))};
}

json to_json(const FieldTower& tower, const ClassifyRecord& r) {
  return {{"index", r.index},
          {"coeffs", to_json(tower, r.coeffs)},
          {"planar", r.planar},
          {"witness_epsilon",
           r.witness ? to_json(tower, *r.witness) : json(nullptr)}};
}

ClassifyRecord record_from_json(const FieldTower& tower, const json& j) {
  ClassifyRecord r;
  r.index = field(j, "index").get<std::uint64_t>();
  r.coeffs = pentanomial_from_json(tower, field(j, "coeffs"));
  r.planar = field(j, "planar").get<bool>();
  if (const json& w = field(j, "witness_epsilon"); !w.is_null()) {
    r.witness = top_from_json(tower, w);
  }
  return r;
}

json to_json(const RunReport& r) {
  json j = {{"command", r.command},
            {"tool_version", r.tool_version},
            {"tower", r.tower},
            {"inputs", r.inputs},
            {"results", r.results},
            {"counts", r.counts}};
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.command = field(j, "command").get<std::string>();
  r.tool_version = field(j, "tool_version").get<std::string>();
  r.tower = field(j, "tower");
  r.inputs = field(j, "inputs");
  r.results = field(j, "results");
  r.counts = field(j, "counts");
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

}  // namespace pln
