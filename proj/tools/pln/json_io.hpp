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

#ifndef PLN_JSON_IO_HPP
#define PLN_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "planar/families.hpp"
#include "planar/field.hpp"
#include "planar/planarity.hpp"

namespace pln {

using nlohmann::json;

// Wire format:
//   F_p and F_q elements: an integer when n = 1, a digit list [d0, ...]
//     over the basis 1, x, ..., x^{n-1} otherwise.
//   F_{q^3} elements: [c0, c1, c2] with each c_j an F_q element.
//   Pentanomials: [E, A, B, C, D].
json to_json(const planar::FieldTower& tower, const planar::Element& x);

/// Accepts an integer (reduced mod p) or a digit list.
planar::Element mid_from_json(const planar::FieldTower& tower, const json& j);
planar::Element top_from_json(const planar::FieldTower& tower, const json& j);

json tower_to_json(const planar::FieldTower& tower);

/// Moduli in the same format as tower_to_json writes them. `top` entries may
/// be integers or digit lists.
planar::Moduli moduli_from_json(const json& mid, const json& top);

json to_json(const planar::FieldTower& tower, const planar::Pentanomial& f);
planar::Pentanomial pentanomial_from_json(const planar::FieldTower& tower,
                                          const json& j);

json to_json(const planar::FieldTower& tower, const planar::FactorTriple& t);
planar::FactorTriple triple_from_json(const planar::FieldTower& tower,
                                      const json& j);

json to_json(const planar::FieldTower& tower, const planar::SystemParams& s);
planar::SystemParams params_from_json(const planar::FieldTower& tower,
                                      const json& j);

/// One line of classify output.
struct ClassifyRecord {
  std::uint64_t index = 0;
  planar::Pentanomial coeffs;
  bool planar = false;
  std::optional<planar::Element> witness;

  friend bool operator==(const ClassifyRecord&, const ClassifyRecord&) = default;
};

json to_json(const planar::FieldTower& tower, const ClassifyRecord& r);
ClassifyRecord record_from_json(const planar::FieldTower& tower, const json& j);

struct RunReport {
  std::string command;
  std::string tool_version;
  json tower;
  json inputs = json::object();
  json results = json::object();
  json counts = json::object();
  std::optional<double> elapsed_ms;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

json to_json(const RunReport& r);
RunReport report_from_json(const json& j);

}  // namespace pln

#endif  // PLN_JSON_IO_HPP
