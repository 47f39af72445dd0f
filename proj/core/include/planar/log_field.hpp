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

#ifndef PLANAR_LOG_FIELD_HPP
#define PLANAR_LOG_FIELD_HPP

#include <cstdint>
#include <vector>

#include "planar/field.hpp"

namespace planar {

/// F_{q^3} with elements held as discrete logarithms to a fixed primitive
/// element g, and 0 as the sentinel value N = q^3 - 1.
///
/// Products and Frobenius powers are index arithmetic mod N; sums go through
/// a Zech table z(k) = log(1 + g^k). This is the arithmetic used by the
/// exhaustive sweeps. Every operation agrees with FieldTower arithmetic on
/// the element indices (see the unit tests).
class LogField {
 public:
  using value_type = std::uint32_t;

  /// Throws kScaleExceeded when q^3 does not fit the 32-bit log range.
  explicit LogField(const FieldTower& tower);

  std::uint32_t group_order() const noexcept { return n_; }
  std::uint64_t primitive_index() const noexcept { return generator_index_; }

  value_type zero() const noexcept { return n_; }
  value_type one() const noexcept { return 0; }
  bool is_zero(value_type a) const noexcept { return a == n_; }

  value_type mul(value_type a, value_type b) const noexcept {
    if (a == n_ || b == n_) return n_;
    std::uint32_t s = a + b;
    return s >= n_ ? s - n_ : s;
  }

  value_type add(value_type a, value_type b) const noexcept {
    if (a == n_) return b;
    if (b == n_) return a;
    std::uint32_t d = b >= a ? b - a : b + (n_ - a);
    std::uint32_t z = zech_[d];
    if (z == n_) return n_;
    std::uint32_t s = a + z;
    return s >= n_ ? s - n_ : s;
  }

  value_type neg(value_type a) const noexcept {
    if (a == n_) return n_;
    std::uint32_t s = a + half_;
    return s >= n_ ? s - n_ : s;
  }

  value_type sub(value_type a, value_type b) const noexcept {
    return add(a, neg(b));
  }

  value_type frobenius(value_type a, unsigned k) const noexcept {
    if (a == n_) return n_;
    return static_cast<value_type>(
        static_cast<std::uint64_t>(a) * q_powers_[k % 3] % n_);
  }

  value_type from_index(std::uint64_t index) const { return log_[index]; }
  std::uint64_t to_index(value_type a) const {
    return a == n_ ? 0 : exp_[a];
  }

  /// Mid-level elements are embedded first.
  value_type lift(const Element& x) const;

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t half_;
  std::uint64_t q_powers_[3];
  std::uint64_t generator_index_ = 0;
  std::vector<std::uint32_t> exp_;   // log -> index
  std::vector<std::uint32_t> log_;   // index -> log (index 0 -> n_)
  std::vector<std::uint32_t> zech_;  // k -> log(1 + g^k)
};

}  // namespace planar

#endif  // PLANAR_LOG_FIELD_HPP
