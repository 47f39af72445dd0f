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

#include "planar/field.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "planar/error.hpp"
#include "planar/log_field.hpp"

namespace planar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kScaleExceeded: return "ScaleExceeded";
    case ErrorCode::kInadmissibleTriple: return "InadmissibleTriple";
    case ErrorCode::kSymmetryViolated: return "SymmetryViolated";
  }
  return "Unknown";
}

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::kPrime: return "prime";
    case Level::kMid: return "mid";
    case Level::kTop: return "top";
  }
  return "unknown";
}

bool Element::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.begin() + size_,
                     [](std::uint16_t d) { return d == 0; });
}

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// Dense polynomials over F_p, ascending, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e != 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_rem(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = pow_mod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const std::uint64_t t = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + t * (p - m[i])) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m,
                 std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_rem(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// m has no factor of degree <= deg(m)/2 iff gcd(X^{p^k} - X, m) = 1 for all
// such k.
bool irreducible_over_prime(const Poly& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  Poly h = poly_rem({0, 1}, m, p);
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    Poly acc = {1};
    Poly base = h;
    for (std::uint64_t e = p; e != 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, m, p);
      base = poly_mulmod(base, base, m, p);
    }
    h = acc;
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(diff, m, p).size() > 1) return false;
  }
  return true;
}

std::uint64_t reduce(std::int64_t v, std::uint32_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % sp) + sp) % sp);
}

}  // namespace

struct FieldTower::LogCache {
  std::once_flag once;
  std::unique_ptr<LogField> field;
};

FieldTower FieldTower::build(std::uint32_t p, unsigned n,
                             const std::optional<Moduli>& moduli) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidField,
                "characteristic " + std::to_string(p) +
                    " is not an odd prime");
  }
  if (p >= (1u << 16)) {
    throw Error(ErrorCode::kInvalidField, "characteristic must be below 65536");
  }
  if (n < 1 || n > kMaxDegree) {
    throw Error(ErrorCode::kInvalidField,
                "degree n must be in 1.." + std::to_string(kMaxDegree));
  }
  FieldTower t;
  t.p_ = p;
  t.n_ = n;
  t.q_ = 1;
  for (unsigned i = 0; i < n; ++i) t.q_ *= p;
  if (t.q_ > (std::uint64_t{1} << 20)) {
    throw Error(ErrorCode::kInvalidField, "q^3 does not fit in 64 bits");
  }
  t.q3_ = t.q_ * t.q_ * t.q_;

  Poly mid;
  if (moduli && !moduli->mid.empty()) {
    if (moduli->mid.size() != n + 1 || reduce(moduli->mid.back(), p) != 1) {
      throw Error(ErrorCode::kInvalidField,
                  "modulus of F_q must be monic of degree " +
                      std::to_string(n));
    }
    for (std::int64_t c : moduli->mid) mid.push_back(reduce(c, p));
    if (!irreducible_over_prime(mid, p)) {
      throw Error(ErrorCode::kReducibleModulus,
                  "modulus of F_q is reducible over F_p");
    }
  } else {
    // First monic irreducible in index order of the lower coefficients.
    std::uint64_t count = t.q_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly cand(n + 1, 0);
      std::uint64_t v = idx;
      for (unsigned i = 0; i < n; ++i, v /= p) cand[i] = v % p;
      cand[n] = 1;
      if (irreducible_over_prime(cand, p)) {
        mid = std::move(cand);
        break;
      }
    }
  }
  t.modulus_q_.assign(mid.begin(), mid.end());

  auto has_root = [&t](const std::array<Element, 4>& g) {
    for (std::uint64_t i = 0; i < t.q_; ++i) {
      const Element c = t.from_index(Level::kMid, i);
      Element v = g[3];
      for (int k = 2; k >= 0; --k) v = t.add(t.mul(v, c), g[k]);
      if (v.is_zero()) return true;
    }
    return false;
  };

  if (moduli && !moduli->top.empty()) {
    if (moduli->top.size() != 4) {
      throw Error(ErrorCode::kInvalidField,
                  "modulus of F_{q^3} must have 4 coefficients");
    }
    for (unsigned k = 0; k < 4; ++k) {
      t.modulus_q3_[k] = t.from_digits(Level::kMid, moduli->top[k]);
    }
    if (t.modulus_q3_[3] != t.one(Level::kMid)) {
      throw Error(ErrorCode::kInvalidField,
                  "modulus of F_{q^3} must be monic");
    }
    if (has_root(t.modulus_q3_)) {
      throw Error(ErrorCode::kReducibleModulus,
                  "cubic modulus has a root in F_q");
    }
  } else {
    bool found = false;
    for (std::uint64_t idx = 0; idx < t.q3_ && !found; ++idx) {
      std::array<Element, 4> g;
      g[0] = t.from_index(Level::kMid, idx % t.q_);
      g[1] = t.from_index(Level::kMid, (idx / t.q_) % t.q_);
      g[2] = t.from_index(Level::kMid, idx / (t.q_ * t.q_));
      g[3] = t.one(Level::kMid);
      if (!has_root(g)) {
        t.modulus_q3_ = g;
        found = true;
      }
    }
  }

  const Element y = t.make_top(t.zero(Level::kMid), t.one(Level::kMid),
                               t.zero(Level::kMid));
  std::uint64_t qk = 1;
  for (unsigned k = 1; k <= 2; ++k) {
    qk *= t.q_;
    const Element yk = t.pow(y, qk);
    t.frobenius_images_[k - 1] = {yk, t.mul(yk, yk)};
  }
  t.log_cache_ = std::make_shared<LogCache>();
  return t;
}

std::uint64_t FieldTower::order(Level level) const noexcept {
  switch (level) {
    case Level::kPrime: return p_;
    case Level::kMid: return q_;
    case Level::kTop: return q3_;
  }
  return 0;
}

unsigned FieldTower::width(Level level) const noexcept {
  switch (level) {
    case Level::kPrime: return 1;
    case Level::kMid: return n_;
    case Level::kTop: return 3 * n_;
  }
  return 0;
}

void FieldTower::check_level(const Element& x, Level level) const {
  if (x.level() != level || x.size() != width(level)) {
    throw Error(ErrorCode::kLevelMismatch,
                "expected a " + std::string(to_string(level)) +
                    "-level element, got " +
                    std::string(to_string(x.level())));
  }
  for (std::uint16_t d : x.digits()) {
    if (d >= p_) {
      throw Error(ErrorCode::kLevelMismatch,
                  "element digit " + std::to_string(d) +
                      " is outside F_" + std::to_string(p_));
    }
  }
}

void FieldTower::check_same(const Element& x, const Element& y) const {
  check_level(x, x.level());
  if (y.level() != x.level()) {
    throw Error(ErrorCode::kLevelMismatch,
                "operands at levels " + std::string(to_string(x.level())) +
                    " and " + std::string(to_string(y.level())));
  }
  check_level(y, y.level());
}

Element FieldTower::zero(Level level) const {
  Element e;
  e.level_ = level;
  e.size_ = static_cast<std::uint8_t>(width(level));
  return e;
}

Element FieldTower::one(Level level) const { return from_int(level, 1); }

Element FieldTower::from_int(Level level, std::int64_t value) const {
  Element e = zero(level);
  e.digits_[0] = static_cast<std::uint16_t>(reduce(value, p_));
  return e;
}

Element FieldTower::from_digits(Level level,
                                std::span<const std::int64_t> digits) const {
  if (digits.size() > width(level)) {
    throw Error(ErrorCode::kInvalidField,
                "too many digits for a " + std::string(to_string(level)) +
                    "-level element");
  }
  Element e = zero(level);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    e.digits_[i] = static_cast<std::uint16_t>(reduce(digits[i], p_));
  }
  return e;
}

Element FieldTower::from_index(Level level, std::uint64_t index) const {
  if (index >= order(level)) {
    throw std::out_of_range("element index out of range");
  }
  Element e = zero(level);
  for (unsigned i = 0; i < e.size_; ++i, index /= p_) {
    e.digits_[i] = static_cast<std::uint16_t>(index % p_);
  }
  return e;
}

std::uint64_t FieldTower::index(const Element& x) const {
  check_level(x, x.level());
  std::uint64_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * p_ + x.digits_[i];
  return idx;
}

Element FieldTower::make_top(const Element& c0, const Element& c1,
                             const Element& c2) const {
  check_level(c0, Level::kMid);
  check_level(c1, Level::kMid);
  check_level(c2, Level::kMid);
  Element e = zero(Level::kTop);
  std::copy_n(c0.digits_.begin(), n_, e.digits_.begin());
  std::copy_n(c1.digits_.begin(), n_, e.digits_.begin() + n_);
  std::copy_n(c2.digits_.begin(), n_, e.digits_.begin() + 2 * n_);
  return e;
}

Element FieldTower::coeff(const Element& x, unsigned j) const {
  check_level(x, Level::kTop);
  if (j > 2) throw std::out_of_range("coefficient index must be 0..2");
  Element e = zero(Level::kMid);
  std::copy_n(x.digits_.begin() + j * n_, n_, e.digits_.begin());
  return e;
}

Element FieldTower::add(const Element& x, const Element& y) const {
  check_same(x, y);
  Element r = x;
  for (std::size_t i = 0; i < r.size_; ++i) {
    const std::uint32_t s = std::uint32_t{x.digits_[i]} + y.digits_[i];
    r.digits_[i] = static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Element FieldTower::sub(const Element& x, const Element& y) const {
  check_same(x, y);
  Element r = x;
  for (std::size_t i = 0; i < r.size_; ++i) {
    const std::uint32_t s = std::uint32_t{x.digits_[i]} + p_ - y.digits_[i];
    r.digits_[i] = static_cast<std::uint16_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

Element FieldTower::neg(const Element& x) const {
  check_level(x, x.level());
  Element r = x;
  for (std::size_t i = 0; i < r.size_; ++i) {
    if (r.digits_[i] != 0) {
      r.digits_[i] = static_cast<std::uint16_t>(p_ - r.digits_[i]);
    }
  }
  return r;
}

void FieldTower::mid_mul(const std::uint16_t* a, const std::uint16_t* b,
                         std::uint16_t* out) const {
  std::array<std::uint64_t, 2 * kMaxDegree> acc{};
  for (unsigned i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      acc[i + j] += std::uint64_t{a[i]} * b[j];
    }
  }
  for (unsigned k = 2 * n_ - 1; k-- > n_;) {
    const std::uint64_t t = acc[k] % p_;
    if (t == 0) continue;
    for (unsigned i = 0; i < n_; ++i) {
      acc[k - n_ + i] = (acc[k - n_ + i] + t * (p_ - modulus_q_[i])) % p_;
    }
  }
  for (unsigned i = 0; i < n_; ++i) {
    out[i] = static_cast<std::uint16_t>(acc[i] % p_);
  }
}

void FieldTower::top_mul(const std::uint16_t* a, const std::uint16_t* b,
                         std::uint16_t* out) const {
  std::array<std::uint32_t, 5 * kMaxDegree> r{};
  std::array<std::uint16_t, kMaxDegree> tmp{};
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      mid_mul(a + i * n_, b + j * n_, tmp.data());
      for (unsigned d = 0; d < n_; ++d) {
        r[(i + j) * n_ + d] = (r[(i + j) * n_ + d] + tmp[d]) % p_;
      }
    }
  }
  // y^3 = -(g0 + g1 y + g2 y^2)
  std::array<std::uint16_t, kMaxDegree> top{};
  for (unsigned k = 4; k >= 3; --k) {
    bool nonzero = false;
    for (unsigned d = 0; d < n_; ++d) {
      top[d] = static_cast<std::uint16_t>(r[k * n_ + d]);
      nonzero = nonzero || top[d] != 0;
      r[k * n_ + d] = 0;
    }
    if (!nonzero) continue;
    for (unsigned i = 0; i < 3; ++i) {
      mid_mul(top.data(), modulus_q3_[i].digits_.data(), tmp.data());
      for (unsigned d = 0; d < n_; ++d) {
        auto& slot = r[(k - 3 + i) * n_ + d];
        slot = (slot + p_ - tmp[d]) % p_;
      }
    }
  }
  for (unsigned d = 0; d < 3 * n_; ++d) {
    out[d] = static_cast<std::uint16_t>(r[d]);
  }
}

Element FieldTower::mul(const Element& x, const Element& y) const {
  check_same(x, y);
  Element r = zero(x.level());
  switch (x.level()) {
    case Level::kPrime:
      r.digits_[0] = static_cast<std::uint16_t>(
          std::uint32_t{x.digits_[0]} * y.digits_[0] % p_);
      break;
    case Level::kMid:
      mid_mul(x.digits_.data(), y.digits_.data(), r.digits_.data());
      break;
    case Level::kTop:
      top_mul(x.digits_.data(), y.digits_.data(), r.digits_.data());
      break;
  }
  return r;
}

Element FieldTower::pow(const Element& x, std::uint64_t e) const {
  check_level(x, x.level());
  Element result = one(x.level());
  Element base = x;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Element FieldTower::inv(const Element& x) const {
  check_level(x, x.level());
  if (x.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  }
  return pow(x, order(x.level()) - 2);
}

Element FieldTower::frobenius(const Element& x, unsigned k) const {
  check_level(x, Level::kTop);
  k %= 3;
  if (k == 0) return x;
  // x = c0 + c1 y + c2 y^2 with c_j fixed by the map.
  Element r = zero(Level::kTop);
  std::copy_n(x.digits_.begin(), n_, r.digits_.begin());
  std::array<std::uint16_t, kMaxDegree> tmp{};
  for (unsigned j = 1; j <= 2; ++j) {
    const Element& image = frobenius_images_[k - 1][j - 1];
    const std::uint16_t* c = x.digits_.data() + j * n_;
    for (unsigned b = 0; b < 3; ++b) {
      mid_mul(c, image.digits_.data() + b * n_, tmp.data());
      for (unsigned d = 0; d < n_; ++d) {
        const std::uint32_t s = std::uint32_t{r.digits_[b * n_ + d]} + tmp[d];
        r.digits_[b * n_ + d] = static_cast<std::uint16_t>(s % p_);
      }
    }
  }
  return r;
}

Element FieldTower::frobenius_by_power(const Element& x, unsigned k) const {
  check_level(x, Level::kTop);
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k % 3; ++i) e *= q_;
  return pow(x, e);
}

Element FieldTower::embed(const Element& c) const {
  check_level(c, Level::kMid);
  Element e = zero(Level::kTop);
  std::copy_n(c.digits_.begin(), n_, e.digits_.begin());
  return e;
}

Element FieldTower::embed_prime(const Element& c) const {
  check_level(c, Level::kPrime);
  Element e = zero(Level::kMid);
  e.digits_[0] = c.digits_[0];
  return e;
}

const LogField& FieldTower::log_field() const {
  std::call_once(log_cache_->once, [this] {
    log_cache_->field = std::make_unique<LogField>(*this);
  });
  return *log_cache_->field;
}

}  // namespace planar
