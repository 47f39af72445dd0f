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

#include "planar/linearized.hpp"

#include "planar/arithmetic.hpp"
#include "planar/error.hpp"
#include "planar/formulas.hpp"

namespace planar {

QPolynomial qpoly_from_mid(const FieldTower& tower, const Element& c0,
                           const Element& c1, const Element& c2) {
  return {tower.embed(c0), tower.embed(c1), tower.embed(c2)};
}

Element evaluate(const FieldTower& tower, const QPolynomial& l,
                 const Element& x) {
  return formulas::evaluate(TowerArithmetic(tower), l.c0, l.c1, l.c2, x);
}

DicksonMatrix dickson_matrix(const FieldTower& tower, const QPolynomial& l) {
  return {formulas::dickson(TowerArithmetic(tower), l.c0, l.c1, l.c2)};
}

Element det3(const FieldTower& tower, const Matrix3& m) {
  return formulas::det3(TowerArithmetic(tower), m.entries);
}

bool is_permutation_dickson(const FieldTower& tower, const QPolynomial& l) {
  return !det3(tower, dickson_matrix(tower, l)).is_zero();
}

bool is_permutation_kernel(const FieldTower& tower, const QPolynomial& l,
                           const SweepOptions& options) {
  const std::uint64_t size = tower.order(Level::kTop);
  check_scale(options, size);
  auto root = find_first(1, size, options.threads, [&] {
    return [&](std::uint64_t i) {
      return evaluate(tower, l, tower.from_index(Level::kTop, i)).is_zero();
    };
  });
  return !root.has_value();
}

Element norm_form(const FieldTower& tower, const Element& a, const Element& b,
                  const Element& c) {
  auto cube = [&](const Element& v) {
    return tower.mul(tower.mul(v, v), v);
  };
  const Element three_abc =
      tower.mul(tower.from_int(Level::kMid, 3), tower.mul(tower.mul(a, b), c));
  return tower.sub(tower.add(tower.add(cube(a), cube(b)), cube(c)), three_abc);
}

QPolynomial conjugate(const FieldTower& tower, const QPolynomial& l,
                      unsigned k) {
  return {tower.frobenius(l.c0, k), tower.frobenius(l.c1, k),
          tower.frobenius(l.c2, k)};
}

}  // namespace planar
