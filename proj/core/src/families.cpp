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

#include "planar/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "planar/error.hpp"
#include "planar/linearized.hpp"

namespace planar {

namespace {

// Small helper for writing the symmetric sums below without noise.
class Mid {
 public:
  explicit Mid(const FieldTower& tower) : t_(tower) {}

  Element operator()(std::int64_t v) const {
    return t_.from_int(Level::kMid, v);
  }
  Element mul(const Element& x, const Element& y) const { return t_.mul(x, y); }
  Element mul(const Element& x, const Element& y, const Element& z) const {
    return t_.mul(t_.mul(x, y), z);
  }
  Element mul(std::int64_t k, const Element& x, const Element& y,
              const Element& z) const {
    return t_.mul((*this)(k), mul(x, y, z));
  }
  Element add(std::initializer_list<Element> xs) const {
    Element s = t_.zero(Level::kMid);
    for (const Element& x : xs) s = t_.add(s, x);
    return s;
  }

 private:
  const FieldTower& t_;
};

void require_admissible(const FieldTower& tower, const FactorTriple& t,
                        int position) {
  if (!is_admissible(tower, t)) {
    throw Error(ErrorCode::kInadmissibleTriple,
                "triple " + std::to_string(position) +
                    " has vanishing norm form a^3 + b^3 + c^3 - 3abc");
  }
}

}  // namespace

FactorTriple triple_from_ints(const FieldTower& tower, std::int64_t a,
                              std::int64_t b, std::int64_t c) {
  return {tower.from_int(Level::kMid, a), tower.from_int(Level::kMid, b),
          tower.from_int(Level::kMid, c)};
}

bool is_admissible(const FieldTower& tower, const FactorTriple& t) {
  return !norm_form(tower, t.a, t.b, t.c).is_zero();
}

Element evaluate(const FieldTower& tower, const FactorTriple& t,
                 const Element& eps) {
  return evaluate(tower, qpoly_from_mid(tower, t.c, t.b, t.a), eps);
}

SystemParams params_from_ints(const FieldTower& tower, std::int64_t alpha,
                              std::int64_t beta, std::int64_t gamma,
                              std::int64_t delta) {
  return {tower.from_int(Level::kMid, alpha), tower.from_int(Level::kMid, beta),
          tower.from_int(Level::kMid, gamma),
          tower.from_int(Level::kMid, delta)};
}

SystemParams system_params(const FieldTower& tower, const FactorTriple& t1,
                           const FactorTriple& t2, const FactorTriple& t3) {
  require_admissible(tower, t1, 1);
  require_admissible(tower, t2, 2);
  require_admissible(tower, t3, 3);
  const Mid m(tower);
  const auto& [a1, b1, c1] = t1;
  const auto& [a2, b2, c2] = t2;
  const auto& [a3, b3, c3] = t3;

  const Element aaa = m.mul(a1, a2, a3);
  const Element bbb = m.mul(b1, b2, b3);
  const Element ccc = m.mul(c1, c2, c3);
  if (aaa != bbb || bbb != ccc) {
    throw Error(ErrorCode::kSymmetryViolated,
                "a1a2a3 = b1b2b3 = c1c2c3 does not hold");
  }
  const Element aab = m.add({m.mul(a1, a2, b3), m.mul(a1, b2, a3),
                             m.mul(b1, a2, a3)});
  const Element bbc = m.add({m.mul(b1, b2, c3), m.mul(b1, c2, b3),
                             m.mul(c1, b2, b3)});
  const Element acc = m.add({m.mul(a1, c2, c3), m.mul(c1, c2, a3),
                             m.mul(c1, a2, c3)});
  if (aab != bbc || bbc != acc) {
    throw Error(ErrorCode::kSymmetryViolated,
                "a1a2b3 + a1b2a3 + b1a2a3 = b1b2c3 + b1c2b3 + c1b2b3 = "
                "a1c2c3 + c1c2a3 + c1a2c3 does not hold");
  }
  const Element aac = m.add({m.mul(a1, a2, c3), m.mul(a1, c2, a3),
                             m.mul(c1, a2, a3)});
  const Element bcc = m.add({m.mul(b1, c2, c3), m.mul(c1, c2, b3),
                             m.mul(c1, b2, c3)});
  const Element abb = m.add({m.mul(a1, b2, b3), m.mul(b1, a2, b3),
                             m.mul(b1, b2, a3)});
  if (aac != bcc || bcc != abb) {
    throw Error(ErrorCode::kSymmetryViolated,
                "a1a2c3 + a1c2a3 + c1a2a3 = b1c2c3 + c1c2b3 + c1b2c3 = "
                "a1b2b3 + b1a2b3 + b1b2a3 does not hold");
  }
  const Element delta =
      m.add({m.mul(a1, b2, c3), m.mul(a1, c2, b3), m.mul(b1, a2, c3),
             m.mul(b1, c2, a3), m.mul(c1, a2, b3), m.mul(c1, b2, a3)});
  return {aaa, aab, aac, delta};
}

std::array<FactorTriple, 3> cyclic_triples(const FactorTriple& t) {
  return {{{t.a, t.b, t.c}, {t.b, t.c, t.a}, {t.c, t.a, t.b}}};
}

SystemParams cyclic_params(const FieldTower& tower, const FactorTriple& t) {
  require_admissible(tower, t, 1);
  const Mid m(tower);
  const auto& [a, b, c] = t;
  return {m.mul(a, b, c),
          m.add({m.mul(a, a, b), m.mul(a, c, c), m.mul(b, b, c)}),
          m.add({m.mul(a, a, c), m.mul(a, b, b), m.mul(b, c, c)}),
          m.add({m.mul(a, a, a), m.mul(b, b, b), m.mul(c, c, c),
                 m.mul(3, a, b, c)})};
}

std::array<Element, 4> system_residuals(const FieldTower& tower,
                                        const SystemParams& params,
                                        const Pentanomial& f) {
  validate(tower, f);
  const Mid m(tower);
  const auto& [E, A, B, C, D] = f;
  const Element two = m(2);
  const Element lhs1 =
      m.add({m.mul(-1, A, A, D), m.mul(A, B, E), m.mul(-1, B, B, C)});
  const Element lhs2 =
      m.add({m.mul(A, A, C), m.mul(-1, A, B, D), m.mul(-2, A, C, D),
             m.mul(2, A, E, E), m.mul(B, B, E), m.mul(-2, B, C, E),
             m.mul(2, B, D, D)});
  const Element lhs3 =
      m.add({m.mul(A, A, E), m.mul(-1, A, B, C), m.mul(2, A, C, C),
             m.mul(-2, A, D, E), m.mul(B, B, D), m.mul(-2, B, C, D),
             m.mul(2, B, E, E)});
  const Element lhs4 =
      m.add({m.mul(A, A, A), m.mul(B, B, B), m.mul(4, C, C, C),
             m.mul(-12, C, D, E), m.mul(4, D, D, D), m.mul(4, E, E, E)});
  return {tower.sub(lhs1, m.mul(two, params.alpha)),
          tower.sub(lhs2, m.mul(two, params.beta)),
          tower.sub(lhs3, m.mul(two, params.gamma)),
          tower.sub(lhs4, m.mul(two, params.delta))};
}

bool satisfies_system(const FieldTower& tower, const SystemParams& params,
                      const Pentanomial& f) {
  const auto r = system_residuals(tower, params, f);
  return std::all_of(r.begin(), r.end(),
                     [](const Element& x) { return x.is_zero(); });
}

std::vector<Pentanomial> solve_system(const FieldTower& tower,
                                      const SystemParams& params,
                                      const SolveOptions& options) {
  const std::uint64_t q = tower.q();
  check_scale(options.sweep, q * q * q * q * q);
  const Mid m(tower);
  const Element two_alpha = m.mul(m(2), params.alpha);

  // One task per (D, B, A, E) prefix; C is only iterated when the first
  // equation, which does not involve C, already holds.
  const std::uint64_t prefixes = q * q * q * q;
  std::vector<std::vector<Pentanomial>> found(prefixes);
  parallel_for(prefixes, options.sweep.threads, [&](std::uint64_t i) {
    const Element E = tower.from_index(Level::kMid, i % q);
    const Element A = tower.from_index(Level::kMid, (i / q) % q);
    const Element B = tower.from_index(Level::kMid, (i / (q * q)) % q);
    const Element D = tower.from_index(Level::kMid, i / (q * q * q));
    // -A^2 D + ABE - B^2 C = 2 alpha, so B^2 C must equal ABE - A^2 D - 2 alpha.
    const Element need = tower.sub(
        tower.sub(m.mul(A, B, E), m.mul(A, A, D)), two_alpha);
    const Element bb = tower.mul(B, B);
    for (std::uint64_t ci = 0; ci < q; ++ci) {
      const Element C = tower.from_index(Level::kMid, ci);
      if (tower.mul(bb, C) != need) continue;
      Pentanomial f{E, A, B, C, D};
      if (satisfies_system(tower, params, f)) found[i].push_back(f);
    }
  });

  std::vector<Pentanomial> out;
  for (auto& bucket : found) {
    for (auto& f : bucket) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [&](const Pentanomial& x, const Pentanomial& y) {
              return tuple_index(tower, x) < tuple_index(tower, y);
            });
  if (options.verify_planar) {
    for (const Pentanomial& f : out) {
      if (!is_planar(tower, f, PlanarityMethod::kDickson, options.sweep)) {
        throw std::logic_error("system solution " +
                               std::to_string(tuple_index(tower, f)) +
                               " is not planar");
      }
    }
  }
  return out;
}

Element factor_product(const FieldTower& tower,
                       const std::array<FactorTriple, 3>& triples,
                       const Element& eps, FactorOrientation orientation) {
  Element prod = tower.one(Level::kTop);
  for (const FactorTriple& t : triples) {
    const FactorTriple oriented = orientation == FactorOrientation::kAsStated
                                      ? t
                                      : FactorTriple{t.b, t.a, t.c};
    prod = tower.mul(prod, evaluate(tower, oriented, eps));
  }
  return prod;
}

bool verify_eq6_factorization(const FieldTower& tower,
                              const std::array<FactorTriple, 3>& triples,
                              const Pentanomial& f, const SweepOptions& options,
                              FactorOrientation orientation) {
  const SystemParams params =
      system_params(tower, triples[0], triples[1], triples[2]);
  if (!satisfies_system(tower, params, f)) {
    throw std::invalid_argument(
        "pentanomial does not solve the system for these triples");
  }
  const std::uint64_t size = tower.order(Level::kTop);
  check_scale(options, size);
  const Element k = tower.from_int(Level::kTop, kFactorizationConstant);
  auto bad = find_first(0, size, options.threads, [&] {
    return [&](std::uint64_t i) {
      const Element eps = tower.from_index(Level::kTop, i);
      return delta_expression(tower, f, eps) !=
             tower.mul(k, factor_product(tower, triples, eps, orientation));
    };
  });
  return !bad.has_value();
}

FamilyMember family_trinomial(const FieldTower& tower, const Element& c,
                              const Element& d, const Element& e) {
  const Element zero = tower.zero(Level::kMid);
  Pentanomial f{e, zero, zero, c, d};
  validate(tower, f);
  const Element half = tower.inv(tower.from_int(Level::kMid, 2));
  return {f, norm_form(tower, c, d, e) == half};
}

Pentanomial family_quadrinomial(const FieldTower& tower) {
  return pentanomial_from_ints(tower, {-1, 0, 2, 1, -1});
}

Element two_param_omega(const FieldTower& tower, const Element& d,
                        const Element& e) {
  const Mid m(tower);
  return m.add({m.mul(m(3), m.mul(d, d)), m.mul(m(-3), m.mul(d, e)),
                m.mul(e, e)});
}

FamilyMember family_two_param(const FieldTower& tower, const Element& d,
                              const Element& e) {
  const Element two = tower.from_int(Level::kMid, 2);
  const Element e_minus_d = tower.sub(e, d);
  Pentanomial f{e, tower.mul(two, e_minus_d), tower.mul(two, d), e_minus_d, d};
  validate(tower, f);
  const Element e_omega = tower.mul(e, two_param_omega(tower, d, e));
  return {f, !e_omega.is_zero()};
}

std::pair<Pentanomial, Pentanomial> family_pentanomials(
    const FieldTower& tower) {
  const Element one = tower.one(Level::kMid);
  const Element half = tower.inv(tower.from_int(Level::kMid, 2));
  return {pentanomial_from_ints(tower, {1, -1, -1, 1, 1}),
          Pentanomial{one, one, one, half, half}};
}

Pentanomial uniform_pentanomial(const FieldTower& tower) {
  return pentanomial_from_ints(tower, {1, 1, 1, 1, 1});
}

std::array<FactorTriple, 3> unit_triples(const FieldTower& tower) {
  return {triple_from_ints(tower, 1, 0, 0), triple_from_ints(tower, 0, 1, 0),
          triple_from_ints(tower, 0, 0, 1)};
}

std::array<FactorTriple, 3> quadrinomial_triples(const FieldTower& tower) {
  return {triple_from_ints(tower, 1, -1, 1), triple_from_ints(tower, 1, 1, -1),
          triple_from_ints(tower, -1, 1, 1)};
}

std::array<FactorTriple, 3> two_param_triples(const FieldTower& tower,
                                              const Element& d,
                                              const Element& e) {
  const Element zero = tower.zero(Level::kMid);
  const Element four = tower.from_int(Level::kMid, 4);
  const Element w = two_param_omega(tower, d, e);
  return {FactorTriple{four, four, zero}, FactorTriple{e, zero, e},
          FactorTriple{zero, w, w}};
}

std::vector<Element> cube_roots_of_four(const FieldTower& tower) {
  const Element four = tower.from_int(Level::kMid, 4);
  std::vector<Element> roots;
  for (std::uint64_t i = 1; i < tower.q(); ++i) {
    const Element b = tower.from_index(Level::kMid, i);
    if (tower.mul(tower.mul(b, b), b) == four) roots.push_back(b);
  }
  return roots;
}

std::optional<Pentanomial> quadrinomial_witness(const FieldTower& tower) {
  const auto roots = cube_roots_of_four(tower);
  if (roots.empty()) return std::nullopt;
  const Element& b = roots.front();
  const Element half = tower.inv(tower.from_int(Level::kMid, 2));
  const Element minus_half_b = tower.neg(tower.mul(half, b));
  const Element two_over_bb =
      tower.mul(tower.from_int(Level::kMid, 2), tower.inv(tower.mul(b, b)));
  return Pentanomial{minus_half_b, tower.zero(Level::kMid), b, two_over_bb,
                     minus_half_b};
}

}  // namespace planar
