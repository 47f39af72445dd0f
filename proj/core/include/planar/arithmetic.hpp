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

#ifndef PLANAR_ARITHMETIC_HPP
#define PLANAR_ARITHMETIC_HPP

#include <concepts>

#include "planar/field.hpp"

namespace planar {

/// Arithmetic on F_{q^3}. The planarity formulas are written once against
/// this interface and instantiated for both element representations.
template <class K>
concept CubicFieldArithmetic =
    requires(const K& k, const typename K::value_type& a, const Element& c,
             unsigned i) {
      { k.zero() } -> std::convertible_to<typename K::value_type>;
      { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
      { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
      { k.neg(a) } -> std::convertible_to<typename K::value_type>;
      { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
      { k.frobenius(a, i) } -> std::convertible_to<typename K::value_type>;
      { k.is_zero(a) } -> std::convertible_to<bool>;
      { k.lift(c) } -> std::convertible_to<typename K::value_type>;
    };

/// Adapts FieldTower's coefficient-vector arithmetic to CubicFieldArithmetic.
class TowerArithmetic {
 public:
  using value_type = Element;

  explicit TowerArithmetic(const FieldTower& tower) : tower_(&tower) {}

  Element zero() const { return tower_->zero(Level::kTop); }
  Element add(const Element& a, const Element& b) const {
    return tower_->add(a, b);
  }
  Element sub(const Element& a, const Element& b) const {
    return tower_->sub(a, b);
  }
  Element neg(const Element& a) const { return tower_->neg(a); }
  Element mul(const Element& a, const Element& b) const {
    return tower_->mul(a, b);
  }
  Element frobenius(const Element& a, unsigned k) const {
    return tower_->frobenius(a, k);
  }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  /// Mid-level values are embedded; top-level values pass through.
  Element lift(const Element& c) const {
    return c.level() == Level::kTop ? c : tower_->embed(c);
  }

 private:
  const FieldTower* tower_;
};

}  // namespace planar

#endif  // PLANAR_ARITHMETIC_HPP
