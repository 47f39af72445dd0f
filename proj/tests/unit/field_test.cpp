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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "planar/error.hpp"
#include "planar/log_field.hpp"
#include "test_support.hpp"

namespace planar {
namespace {

using testing::mid;
using testing::random_element;
using testing::random_nonzero;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no planar::Error thrown";
  return ErrorCode::kInvalidField;
}

std::vector<int> digits(const Element& x) {
  return {x.digits().begin(), x.digits().end()};
}

TEST(BuildTower, DefaultModuliQ27) {
  const FieldTower t = FieldTower::build(3, 1);
  EXPECT_EQ(t.q(), 3u);
  EXPECT_EQ(t.order(Level::kTop), 27u);
  EXPECT_EQ(std::vector<int>(t.modulus_q().begin(), t.modulus_q().end()),
            (std::vector<int>{0, 1}));
  std::vector<int> g;
  for (const Element& c : t.modulus_q3()) g.push_back(c.digits()[0]);
  EXPECT_EQ(g, (std::vector<int>{1, 2, 0, 1}));
}

TEST(BuildTower, DefaultModulusQ9IsXSquaredPlusOne) {
  const FieldTower t = FieldTower::build(3, 2);
  EXPECT_EQ(t.q(), 9u);
  EXPECT_EQ(std::vector<int>(t.modulus_q().begin(), t.modulus_q().end()),
            (std::vector<int>{1, 0, 1}));
}

TEST(BuildTower, SuppliedModuliAccepted) {
  const FieldTower t = FieldTower::build(3, 2, Moduli{{1, 0, 1}, {}});
  EXPECT_EQ(t.order(Level::kMid), 9u);
  const FieldTower u =
      FieldTower::build(3, 1, Moduli{{0, 1}, {{1}, {2}, {0}, {1}}});
  EXPECT_EQ(u.modulus_q3(), FieldTower::build(3, 1).modulus_q3());
}

TEST(BuildTower, Errors) {
  EXPECT_EQ(code_of([] { FieldTower::build(2, 1); }), ErrorCode::kInvalidField);
  EXPECT_EQ(code_of([] { FieldTower::build(9, 1); }), ErrorCode::kInvalidField);
  EXPECT_EQ(code_of([] { FieldTower::build(3, 0); }), ErrorCode::kInvalidField);
  // x^2 - 1 = (x - 1)(x + 1)
  EXPECT_EQ(code_of([] { FieldTower::build(3, 2, Moduli{{2, 0, 1}, {}}); }),
            ErrorCode::kReducibleModulus);
  // y^3 has the root 0
  EXPECT_EQ(code_of([] {
              FieldTower::build(3, 1, Moduli{{}, {{0}, {0}, {0}, {1}}});
            }),
            ErrorCode::kReducibleModulus);
  EXPECT_EQ(code_of([] { FieldTower::build(3, 2, Moduli{{1, 0, 2}, {}}); }),
            ErrorCode::kInvalidField);
}

TEST(Arithmetic, Examples) {
  const FieldTower f3 = FieldTower::build(3, 1);
  const Element two = f3.from_int(Level::kPrime, 2);
  EXPECT_EQ(f3.add(two, two), f3.from_int(Level::kPrime, 1));
  EXPECT_EQ(f3.inv(two), two);

  const FieldTower f9 = FieldTower::build(3, 2, Moduli{{1, 0, 1}, {}});
  const std::int64_t x_digits[] = {0, 1};
  const Element x = f9.from_digits(Level::kMid, x_digits);
  EXPECT_EQ(f9.mul(x, x), mid(f9, 2));

  const FieldTower f7 = FieldTower::build(7, 1);
  EXPECT_EQ(f7.inv(mid(f7, 2)), mid(f7, 4));
  EXPECT_EQ(f7.from_int(Level::kMid, -1), mid(f7, 6));
}

TEST(Arithmetic, Errors) {
  const FieldTower f5 = FieldTower::build(5, 1);
  EXPECT_EQ(code_of([&] { f5.inv(f5.zero(Level::kPrime)); }),
            ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([&] { f5.inv(f5.zero(Level::kTop)); }),
            ErrorCode::kDivisionByZero);
  EXPECT_EQ(code_of([&] {
              f5.add(f5.one(Level::kMid), f5.one(Level::kTop));
            }),
            ErrorCode::kLevelMismatch);
  const FieldTower other = FieldTower::build(7, 1);
  EXPECT_EQ(code_of([&] {
              f5.add(other.from_int(Level::kTop, 6), f5.one(Level::kTop));
            }),
            ErrorCode::kLevelMismatch);
}

class TowerProperty : public ::testing::TestWithParam<std::pair<int, int>> {
 protected:
  FieldTower tower() const {
    return FieldTower::build(GetParam().first, GetParam().second);
  }
};

TEST_P(TowerProperty, FieldAxiomsOnRandomSamples) {
  const FieldTower t = tower();
  auto g = testing::rng(GetParam().first * 10 + GetParam().second);
  for (Level level : {Level::kPrime, Level::kMid, Level::kTop}) {
    const Element zero = t.zero(level), one = t.one(level);
    for (int i = 0; i < 300; ++i) {
      const Element a = random_element(t, level, g);
      const Element b = random_element(t, level, g);
      const Element c = random_element(t, level, g);
      ASSERT_EQ(t.add(a, b), t.add(b, a));
      ASSERT_EQ(t.mul(a, b), t.mul(b, a));
      ASSERT_EQ(t.add(t.add(a, b), c), t.add(a, t.add(b, c)));
      ASSERT_EQ(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
      ASSERT_EQ(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
      ASSERT_EQ(t.add(a, zero), a);
      ASSERT_EQ(t.mul(a, one), a);
      ASSERT_EQ(t.add(a, t.neg(a)), zero);
      ASSERT_EQ(t.sub(a, b), t.add(a, t.neg(b)));
      if (!a.is_zero()) ASSERT_EQ(t.mul(a, t.inv(a)), one);
    }
  }
}

TEST_P(TowerProperty, FrobeniusIsAnAutomorphismFixingExactlyFq) {
  const FieldTower t = tower();
  auto g = testing::rng(7);
  std::uint64_t fixed = 0;
  for (const Element& x : t.enumerate(Level::kTop)) {
    const Element fx = t.frobenius(x, 1);
    if (fx == x) {
      ++fixed;
      ASSERT_EQ(x, t.embed(t.coeff(x, 0)));
    }
    ASSERT_EQ(t.frobenius(t.frobenius(fx, 1), 1), x);
    ASSERT_EQ(t.frobenius(x, 2), t.frobenius(fx, 1));
    const Element y = random_element(t, Level::kTop, g);
    ASSERT_EQ(t.frobenius(t.add(x, y), 1), t.add(fx, t.frobenius(y, 1)));
    ASSERT_EQ(t.frobenius(t.mul(x, y), 1), t.mul(fx, t.frobenius(y, 1)));
  }
  EXPECT_EQ(fixed, t.q());
}

TEST_P(TowerProperty, FrobeniusMatchesSquareAndMultiply) {
  const FieldTower t = tower();
  auto g = testing::rng(11);
  for (int i = 0; i < 200; ++i) {
    const Element x = random_element(t, Level::kTop, g);
    for (unsigned k = 0; k < 3; ++k) {
      ASSERT_EQ(t.frobenius(x, k), t.frobenius_by_power(x, k));
    }
  }
}

TEST_P(TowerProperty, LagrangeOnTheMultiplicativeGroup) {
  const FieldTower t = tower();
  const std::uint64_t n = t.order(Level::kTop) - 1;
  auto g = testing::rng(13);
  for (int i = 0; i < 100; ++i) {
    ASSERT_EQ(t.pow(random_nonzero(t, Level::kTop, g), n), t.one(Level::kTop));
  }
}

TEST_P(TowerProperty, EnumerateIsABijectionInIndexOrder) {
  const FieldTower t = tower();
  for (Level level : {Level::kPrime, Level::kMid, Level::kTop}) {
    std::uint64_t i = 0;
    std::set<std::vector<int>> seen;
    for (const Element& x : t.enumerate(level)) {
      ASSERT_EQ(t.index(x), i++);
      seen.insert(digits(x));
    }
    EXPECT_EQ(i, t.order(level));
    EXPECT_EQ(seen.size(), t.order(level));
    EXPECT_TRUE(t.from_index(level, 0).is_zero());
  }
}

TEST_P(TowerProperty, EmbedIsARingHomomorphism) {
  const FieldTower t = tower();
  EXPECT_TRUE(t.embed(t.zero(Level::kMid)).is_zero());
  EXPECT_EQ(t.embed(t.one(Level::kMid)), t.one(Level::kTop));
  for (const Element& a : t.enumerate(Level::kMid)) {
    for (const Element& b : t.enumerate(Level::kMid)) {
      ASSERT_EQ(t.embed(t.add(a, b)), t.add(t.embed(a), t.embed(b)));
      ASSERT_EQ(t.embed(t.mul(a, b)), t.mul(t.embed(a), t.embed(b)));
    }
  }
}

TEST_P(TowerProperty, LogFieldAgreesWithTowerArithmetic) {
  const FieldTower t = tower();
  const LogField& lf = t.log_field();
  EXPECT_EQ(lf.group_order() + 1, t.order(Level::kTop));
  auto g = testing::rng(17);
  for (std::uint64_t i = 0; i < t.order(Level::kTop); ++i) {
    ASSERT_EQ(lf.to_index(lf.from_index(i)), i);
  }
  for (int s = 0; s < 2000; ++s) {
    const Element x = random_element(t, Level::kTop, g);
    const Element y = random_element(t, Level::kTop, g);
    const auto a = lf.lift(x), b = lf.lift(y);
    ASSERT_EQ(lf.to_index(lf.add(a, b)), t.index(t.add(x, y)));
    ASSERT_EQ(lf.to_index(lf.sub(a, b)), t.index(t.sub(x, y)));
    ASSERT_EQ(lf.to_index(lf.mul(a, b)), t.index(t.mul(x, y)));
    ASSERT_EQ(lf.to_index(lf.neg(a)), t.index(t.neg(x)));
    ASSERT_EQ(lf.to_index(lf.frobenius(a, 1)), t.index(t.frobenius(x, 1)));
    ASSERT_EQ(lf.to_index(lf.frobenius(a, 2)), t.index(t.frobenius(x, 2)));
  }
  const Element c = mid(t, 2);
  EXPECT_EQ(lf.lift(c), lf.lift(t.embed(c)));
}

INSTANTIATE_TEST_SUITE_P(
    SmallTowers, TowerProperty,
    ::testing::Values(std::pair{3, 1}, std::pair{5, 1}, std::pair{7, 1},
                      std::pair{3, 2}, std::pair{11, 1}, std::pair{13, 1}),
    [](const auto& info) {
      return "p" + std::to_string(info.param.first) + "n" +
             std::to_string(info.param.second);
    });

TEST(Frobenius, OfYInF27IsYCubedReduced) {
  const FieldTower t = FieldTower::build(3, 1);
  const Element y = t.make_top(mid(t, 0), mid(t, 1), mid(t, 0));
  // y^3 = -(2y + 1) = y + 2 modulo y^3 + 2y + 1
  EXPECT_EQ(digits(t.frobenius(y, 1)), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(t.frobenius(y, 1), t.pow(y, 3));
}

TEST(Frobenius, FixesEmbeddedFq) {
  const FieldTower t = FieldTower::build(3, 2);
  for (const Element& c : t.enumerate(Level::kMid)) {
    EXPECT_EQ(t.frobenius(t.embed(c), 1), t.embed(c));
  }
}

TEST(Enumerate, PrimeFieldAndF9Order) {
  const FieldTower f3 = FieldTower::build(3, 1);
  std::vector<std::vector<int>> got;
  for (const Element& x : f3.enumerate(Level::kPrime)) got.push_back(digits(x));
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{0}, {1}, {2}}));

  const FieldTower f9 = FieldTower::build(3, 2);
  got.clear();
  for (const Element& x : f9.enumerate(Level::kMid)) got.push_back(digits(x));
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{0, 0},
                                                {1, 0},
                                                {2, 0},
                                                {0, 1},
                                                {1, 1},
                                                {2, 1},
                                                {0, 2},
                                                {1, 2},
                                                {2, 2}}));
}

TEST(Enumerate, TopCardinality) {
  const FieldTower t = FieldTower::build(3, 2);
  EXPECT_EQ(std::ranges::distance(t.enumerate(Level::kTop)), 729);
}

TEST(Element, HashAndEqualityFollowCanonicalForm) {
  const FieldTower t = FieldTower::build(5, 1);
  EXPECT_EQ(t.from_int(Level::kMid, -1), t.from_int(Level::kMid, 4));
  EXPECT_EQ(std::hash<Element>{}(t.from_int(Level::kMid, -1)),
            std::hash<Element>{}(t.from_int(Level::kMid, 4)));
  EXPECT_NE(t.from_int(Level::kMid, 1), t.from_int(Level::kTop, 1));
}

}  // namespace
}  // namespace planar
