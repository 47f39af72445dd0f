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

#include "planar/log_field.hpp"

#include <vector>

#include "planar/error.hpp"

namespace planar {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

LogField::LogField(const FieldTower& tower) : p_(tower.p()) {
  const std::uint64_t size = tower.order(Level::kTop);
  if (size - 1 >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::kScaleExceeded,
                "log tables need q^3 - 1 < 2^31, got q^3 = " +
                    std::to_string(size));
  }
  n_ = static_cast<std::uint32_t>(size - 1);
  half_ = n_ / 2;
  const std::uint64_t q = tower.q();
  q_powers_[0] = 1;
  q_powers_[1] = q % n_;
  q_powers_[2] = q * q % n_;

  const Element one = tower.one(Level::kTop);
  const auto factors = prime_factors(n_);
  Element generator;
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    Element cand = tower.from_index(Level::kTop, idx);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (tower.pow(cand, n_ / r) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = cand;
      generator_index_ = idx;
      break;
    }
  }

  exp_.resize(n_);
  log_.assign(size, n_);
  Element cur = one;
  for (std::uint32_t i = 0; i < n_; ++i) {
    const auto idx = static_cast<std::uint32_t>(tower.index(cur));
    exp_[i] = idx;
    log_[idx] = i;
    cur = tower.mul(cur, generator);
  }

  // 1 + g^k only changes the lowest base-p digit of the index.
  zech_.resize(n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    const std::uint32_t idx = exp_[k];
    const std::uint32_t d0 = idx % p_;
    zech_[k] = log_[idx - d0 + (d0 + 1) % p_];
  }
}

LogField::value_type LogField::lift(const Element& x) const {
  std::uint64_t idx = 0;
  const auto digits = x.digits();
  for (std::size_t i = digits.size(); i-- > 0;) idx = idx * p_ + digits[i];
  return log_[idx];
}

}  // namespace planar
