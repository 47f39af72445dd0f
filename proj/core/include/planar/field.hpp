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

#ifndef PLANAR_FIELD_HPP
#define PLANAR_FIELD_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string_view>
#include <vector>

namespace planar {

/// Position of an element in the tower F_p ⊂ F_q ⊂ F_{q^3}.
enum class Level : std::uint8_t { kPrime, kMid, kTop };

std::string_view to_string(Level level) noexcept;

/// Largest supported degree n of F_q over F_p.
inline constexpr unsigned kMaxDegree = 8;

/// A field element stored as its canonical base-p digits.
///
/// Prime-level elements have one digit, mid-level elements have n digits
/// (coefficients of 1, x, ..., x^{n-1}) and top-level elements have 3n
/// digits: the three F_q coefficients of 1, y, y^2 laid out one after the
/// other. Digits beyond size() are always zero, so equality is plain
/// member-wise comparison.
class Element {
 public:
  Element() = default;

  Level level() const noexcept { return level_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const std::uint16_t> digits() const noexcept {
    return {digits_.data(), size_};
  }
  bool is_zero() const noexcept;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  friend class FieldTower;

  Level level_ = Level::kPrime;
  std::uint8_t size_ = 1;
  std::array<std::uint16_t, 3 * kMaxDegree> digits_{};
};

/// User-supplied defining polynomials, ascending coefficients. `mid` is the
/// monic degree-n modulus over F_p; `top` is the monic cubic over F_q whose
/// four coefficients are each given as F_p digit lists. An empty list
/// selects the default modulus at that level.
struct Moduli {
  std::vector<std::int64_t> mid;
  std::vector<std::vector<std::int64_t>> top;
};

class LogField;

/// The tower F_p ⊂ F_q = F_p[x]/(m) ⊂ F_{q^3} = F_q[y]/(g).
///
/// Immutable after build(); copies share the lazily built log tables, and a
/// tower may be used concurrently from any number of threads.
class FieldTower {
 public:
  /// Validates the supplied moduli, or picks the first monic irreducible
  /// polynomials in enumeration order when none are given.
  static FieldTower build(std::uint32_t p, unsigned n,
                          const std::optional<Moduli>& moduli = std::nullopt);

  std::uint32_t p() const noexcept { return p_; }
  unsigned n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  /// Number of elements at `level`: p, q or q^3.
  std::uint64_t order(Level level) const noexcept;

  std::span<const std::uint16_t> modulus_q() const noexcept {
    return modulus_q_;
  }
  /// Coefficients g_0..g_3 of the cubic modulus as mid-level elements.
  const std::array<Element, 4>& modulus_q3() const noexcept {
    return modulus_q3_;
  }

  Element zero(Level level) const;
  Element one(Level level) const;
  /// Image of the integer `value` under Z -> F_p ⊂ level.
  Element from_int(Level level, std::int64_t value) const;
  /// Digits are reduced mod p; a short list is zero padded.
  Element from_digits(Level level, std::span<const std::int64_t> digits) const;
  Element from_index(Level level, std::uint64_t index) const;
  /// Position of `x` in enumerate(x.level()).
  std::uint64_t index(const Element& x) const;

  Element make_top(const Element& c0, const Element& c1,
                   const Element& c2) const;
  /// j-th F_q coefficient (j in 0..2) of a top-level element.
  Element coeff(const Element& x, unsigned j) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element inv(const Element& x) const;
  Element pow(const Element& x, std::uint64_t e) const;

  /// x^{q^k} for top-level x using the precomputed images of y and y^2.
  Element frobenius(const Element& x, unsigned k) const;
  /// Same map computed by square-and-multiply; kept as a cross-check.
  Element frobenius_by_power(const Element& x, unsigned k) const;

  /// F_q -> F_{q^3}, c -> (c, 0, 0).
  Element embed(const Element& c) const;
  /// F_p -> F_q.
  Element embed_prime(const Element& c) const;

  /// All elements of `level` in index order: the least significant
  /// coefficient varies fastest and the first element is 0. The view
  /// refers to this tower, which must outlive it.
  auto enumerate(Level level) const {
    return std::views::iota(std::uint64_t{0}, order(level)) |
           std::views::transform(
               [this, level](std::uint64_t i) { return from_index(level, i); });
  }

  /// Zech-logarithm view of F_{q^3}, built on first use.
  const LogField& log_field() const;

 private:
  struct LogCache;

  FieldTower() = default;

  unsigned width(Level level) const noexcept;
  void check_same(const Element& x, const Element& y) const;
  void check_level(const Element& x, Level level) const;

  void mid_mul(const std::uint16_t* a, const std::uint16_t* b,
               std::uint16_t* out) const;
  void top_mul(const std::uint16_t* a, const std::uint16_t* b,
               std::uint16_t* out) const;

  std::uint32_t p_ = 3;
  unsigned n_ = 1;
  std::uint64_t q_ = 3;
  std::uint64_t q3_ = 27;
  std::vector<std::uint16_t> modulus_q_;
  std::array<Element, 4> modulus_q3_{};
  // frobenius_images_[k - 1] holds (y^{q^k}, y^{2q^k}).
  std::array<std::array<Element, 2>, 2> frobenius_images_{};
  std::shared_ptr<LogCache> log_cache_;
};

/// True iff p is a prime (trial division).
bool is_prime(std::uint64_t p) noexcept;

}  // namespace planar

template <>
struct std::hash<planar::Element> {
  std::size_t operator()(const planar::Element& x) const noexcept {
    std::size_t h = static_cast<std::size_t>(x.level());
    for (std::uint16_t d : x.digits()) h = h * 1000003u ^ d;
    return h;
  }
};

#endif  // PLANAR_FIELD_HPP
