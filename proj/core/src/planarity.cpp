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

#include "planar/planarity.hpp"

#include <initializer_list>
#include <vector>

#include "planar/arithmetic.hpp"
#include "planar/error.hpp"
#include "planar/formulas.hpp"
#include "planar/log_field.hpp"

namespace planar {

namespace {

struct Term {
  std::int64_t coef;
  std::initializer_list<const Element*> factors;
};

// Sum of integer multiples of products, all at the level of the factors.
Element polynomial(const FieldTower& tower, Level level,
                   std::initializer_list<Term> terms) {
  Element sum = tower.zero(level);
  for (const Term& t : terms) {
    Element prod = tower.from_int(level, t.coef);
    for (const Element* f : t.factors) prod = tower.mul(prod, *f);
    sum = tower.add(sum, prod);
  }
  return sum;
}

template <CubicFieldArithmetic K>
formulas::LiftedPentanomial<typename K::value_type> lift_pentanomial(
    const K& k, const FieldTower& tower, const Pentanomial& f) {
  const Element two = tower.from_int(Level::kMid, 2);
  return {k.lift(f.e),
          k.lift(f.a),
          k.lift(f.b),
          k.lift(f.c),
          k.lift(f.d),
          k.lift(tower.mul(two, f.e)),
          k.lift(tower.mul(two, f.c)),
          k.lift(tower.mul(two, f.d))};
}

template <CubicFieldArithmetic K>
formulas::LiftedWeights<typename K::value_type> lift_weights(
    const K& k, const ExpressionWeights& w) {
  return {k.lift(w.t1), k.lift(w.t2), k.lift(w.t3), k.lift(w.t4)};
}

}  // namespace

void validate(const FieldTower& tower, const Pentanomial& f) {
  for (const Element* c : {&f.e, &f.a, &f.b, &f.c, &f.d}) {
    if (c->level() != Level::kMid || c->size() != tower.n()) {
      throw Error(ErrorCode::kLevelMismatch,
                  "pentanomial coefficients must lie in F_q");
    }
  }
}

Pentanomial pentanomial_from_ints(const FieldTower& tower,
                                  const std::array<std::int64_t, 5>& eabcd) {
  auto mid = [&](std::int64_t v) { return tower.from_int(Level::kMid, v); };
  return {mid(eabcd[0]), mid(eabcd[1]), mid(eabcd[2]), mid(eabcd[3]),
          mid(eabcd[4])};
}

std::uint64_t tuple_index(const FieldTower& tower, const Pentanomial& f) {
  validate(tower, f);
  std::uint64_t idx = 0;
  for (const Element* c : {&f.d, &f.c, &f.b, &f.a, &f.e}) {
    idx = idx * tower.q() + tower.index(*c);
  }
  return idx;
}

Pentanomial pentanomial_from_index(const FieldTower& tower,
                                   std::uint64_t index) {
  const std::uint64_t q = tower.q();
  std::array<Element, 5> c;
  for (auto& slot : c) {
    slot = tower.from_index(Level::kMid, index % q);
    index /= q;
  }
  if (index != 0) throw std::out_of_range("tuple index out of range");
  return {c[0], c[1], c[2], c[3], c[4]};
}

bool is_zero(const Pentanomial& f) {
  return f.e.is_zero() && f.a.is_zero() && f.b.is_zero() && f.c.is_zero() &&
         f.d.is_zero();
}

Pentanomial scale(const FieldTower& tower, const Element& c,
                  const Pentanomial& f) {
  validate(tower, f);
  return {tower.mul(c, f.e), tower.mul(c, f.a), tower.mul(c, f.b),
          tower.mul(c, f.c), tower.mul(c, f.d)};
}

Element eval_pentanomial(const FieldTower& tower, const Pentanomial& f,
                         const Element& x) {
  validate(tower, f);
  const TowerArithmetic k(tower);
  return formulas::eval_pentanomial(k, lift_pentanomial(k, tower, f), x);
}

QPolynomial difference_qpoly(const FieldTower& tower, const Pentanomial& f,
                             const Element& eps) {
  validate(tower, f);
  const TowerArithmetic k(tower);
  const auto c = formulas::difference(k, lift_pentanomial(k, tower, f), eps);
  return {c[0], c[1], c[2]};
}

ExpressionWeights expression_weights(const FieldTower& tower,
                                     const Pentanomial& f) {
  validate(tower, f);
  const Element *A = &f.a, *B = &f.b, *C = &f.c, *D = &f.d, *E = &f.e;
  const Level mid = Level::kMid;
  ExpressionWeights w;
  w.t1 = polynomial(tower, mid,
                    {{-2, {A, A, D}}, {2, {A, B, E}}, {-2, {B, B, C}}});
  w.t2 = polynomial(tower, mid,
                    {{2, {A, A, C}},
                     {-2, {A, B, D}},
                     {-4, {A, C, D}},
                     {4, {A, E, E}},
                     {2, {B, B, E}},
                     {-4, {B, C, E}},
                     {4, {B, D, D}}});
  w.t3 = polynomial(tower, mid,
                    {{2, {A, A, E}},
                     {-2, {A, B, C}},
                     {4, {A, C, C}},
                     {-4, {A, D, E}},
                     {2, {B, B, D}},
                     {-4, {B, C, D}},
                     {4, {B, E, E}}});
  w.t4 = polynomial(tower, mid,
                    {{2, {A, A, A}},
                     {2, {B, B, B}},
                     {8, {C, C, C}},
                     {-24, {C, D, E}},
                     {8, {D, D, D}},
                     {8, {E, E, E}}});
  return w;
}

Element delta_expression(const FieldTower& tower, const Pentanomial& f,
                         const Element& eps) {
  const TowerArithmetic k(tower);
  return formulas::weighted_sum(
      k, lift_weights(k, expression_weights(tower, f)), eps);
}

std::string_view to_string(PlanarityMethod method) noexcept {
  switch (method) {
    case PlanarityMethod::kDefinition: return "definition";
    case PlanarityMethod::kDickson: return "dickson";
    case PlanarityMethod::kExpression: return "expression";
  }
  return "unknown";
}

std::optional<PlanarityMethod> parse_planarity_method(std::string_view name) {
  for (auto m : {PlanarityMethod::kDefinition, PlanarityMethod::kDickson,
                 PlanarityMethod::kExpression}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

PlanarityVerdict check_planarity(const FieldTower& tower, const Pentanomial& f,
                                 PlanarityMethod method,
                                 const SweepOptions& options) {
  validate(tower, f);
  const std::uint64_t size = tower.order(Level::kTop);
  check_scale(options, size);
  if (method != PlanarityMethod::kDefinition && is_zero(f)) {
    return {false, tower.from_index(Level::kTop, 1)};
  }

  const LogField& lf = tower.log_field();
  std::optional<std::uint64_t> hit;
  switch (method) {
    case PlanarityMethod::kDefinition: {
      const auto lifted = lift_pentanomial(lf, tower, f);
      const std::uint32_t n = lf.group_order();
      // f(x) and -f(x) for every x, indexed by log (zero sentinel last).
      std::vector<std::uint32_t> values(std::size_t{n} + 1);
      std::vector<std::uint32_t> negated(std::size_t{n} + 1);
      for (std::uint32_t x = 0; x <= n; ++x) {
        values[x] = formulas::eval_pentanomial(lf, lifted, x);
        negated[x] = lf.neg(values[x]);
      }
      hit = find_first(1, size, options.threads, [&lf, &values, &negated, n] {
        // seen[v] == epoch marks image v as taken for the current eps.
        return [&lf, fx = values.data(), neg_fx = negated.data(), n,
                seen = std::vector<std::uint32_t>(n + 1, 0),
                epoch = std::uint32_t{0}](std::uint64_t i) mutable {
          ++epoch;
          const auto eps = lf.from_index(i);
          std::uint32_t* marks = seen.data();
          for (std::uint32_t x = 0; x <= n; ++x) {
            const auto image = lf.add(fx[lf.add(x, eps)], neg_fx[x]);
            if (marks[image] == epoch) return true;
            marks[image] = epoch;
          }
          return false;
        };
      });
      break;
    }
    case PlanarityMethod::kDickson: {
      const auto lifted = lift_pentanomial(lf, tower, f);
      hit = find_first(1, size, options.threads, [&] {
        return [&](std::uint64_t i) {
          return lf.is_zero(
              formulas::difference_det(lf, lifted, lf.from_index(i)));
        };
      });
      break;
    }
    case PlanarityMethod::kExpression: {
      const auto weights = lift_weights(lf, expression_weights(tower, f));
      hit = find_first(1, size, options.threads, [&] {
        return [&](std::uint64_t i) {
          return lf.is_zero(
              formulas::weighted_sum(lf, weights, lf.from_index(i)));
        };
      });
      break;
    }
  }
  if (!hit) return {true, std::nullopt};
  return {false, tower.from_index(Level::kTop, *hit)};
}

bool is_planar(const FieldTower& tower, const Pentanomial& f,
               PlanarityMethod method, const SweepOptions& options) {
  return check_planarity(tower, f, method, options).planar;
}

Matrix3 matrix_a(const FieldTower& tower, const Element& eps) {
  const Element e1 = tower.frobenius(eps, 1);
  const Element e2 = tower.frobenius(eps, 2);
  const Element two_e = tower.add(eps, eps);
  const Element diag = tower.add(tower.add(two_e, e1), e2);  // 2e + e^q + e^{q^2}
  const Element u = tower.add(eps, e1);                      // e + e^q
  const Element v = tower.add(eps, e2);                      // e + e^{q^2}
  auto fr = [&](const Element& x, unsigned k) { return tower.frobenius(x, k); };
  return {{{{diag, fr(v, 1), fr(u, 2)},
            {u, fr(diag, 1), fr(v, 2)},
            {v, fr(u, 1), fr(diag, 2)}}}};
}

Matrix3 matrix_b(const FieldTower& tower, const Element& eps) {
  const Element e1 = tower.frobenius(eps, 1);
  const Element e2 = tower.frobenius(eps, 2);
  const Element two_e = tower.add(eps, eps);
  const Element diag = tower.sub(tower.sub(two_e, e1), e2);  // 2e - e^q - e^{q^2}
  const Element u = tower.sub(tower.add(e1, e1), eps);       // 2e^q - e
  const Element v = tower.sub(tower.add(e2, e2), eps);       // 2e^{q^2} - e
  auto fr = [&](const Element& x, unsigned k) { return tower.frobenius(x, k); };
  return {{{{diag, fr(v, 1), fr(u, 2)},
            {u, fr(diag, 1), fr(v, 2)},
            {v, fr(u, 1), fr(diag, 2)}}}};
}

namespace {

// Runs `fails(eps)` over F_{q^3}^* and reports whether it never fires.
template <class Fails>
bool holds_for_all_nonzero(const FieldTower& tower, const SweepOptions& options,
                           Fails fails) {
  const std::uint64_t size = tower.order(Level::kTop);
  check_scale(options, size);
  auto bad = find_first(1, size, options.threads, [&] {
    return [&](std::uint64_t i) {
      return fails(tower.from_index(Level::kTop, i));
    };
  });
  return !bad.has_value();
}

}  // namespace

bool verify_matrix_identity_a(const FieldTower& tower,
                              const SweepOptions& options) {
  return holds_for_all_nonzero(tower, options, [&](const Element& eps) {
    const Element x = eps;
    const Element y = tower.frobenius(eps, 1);
    const Element z = tower.frobenius(eps, 2);
    const Element det = det3(tower, matrix_a(tower, eps));
    const Element zy = tower.add(z, y);
    const Element zx = tower.add(z, x);
    const Element yx = tower.add(y, x);
    const Element factored = polynomial(tower, Level::kTop,
                                        {{4, {&zy, &zx, &yx}}});
    const Element expanded = polynomial(tower, Level::kTop,
                                        {{4, {&z, &z, &y}},
                                         {4, {&z, &z, &x}},
                                         {4, {&z, &y, &y}},
                                         {8, {&z, &y, &x}},
                                         {4, {&z, &x, &x}},
                                         {4, {&y, &y, &x}},
                                         {4, {&y, &x, &x}}});
    return det != factored || det != expanded || det.is_zero();
  });
}

bool verify_matrix_identity_b(const FieldTower& tower,
                              const SweepOptions& options) {
  return holds_for_all_nonzero(tower, options, [&](const Element& eps) {
    const Element x = eps;
    const Element y = tower.frobenius(eps, 1);
    const Element z = tower.frobenius(eps, 2);
    const Element det = det3(tower, matrix_b(tower, eps));
    const Element l0 = tower.add(tower.sub(z, y), x);  // z - y + x
    const Element l1 = tower.sub(tower.add(z, y), x);  // z + y - x
    const Element l2 = tower.sub(tower.add(y, x), z);  // -z + y + x
    const Element factored = polynomial(tower, Level::kTop,
                                        {{2, {&l0, &l1, &l2}}});
    const Element expanded = polynomial(tower, Level::kTop,
                                        {{-2, {&z, &z, &z}},
                                         {2, {&z, &z, &y}},
                                         {2, {&z, &z, &x}},
                                         {2, {&z, &y, &y}},
                                         {-4, {&z, &y, &x}},
                                         {2, {&z, &x, &x}},
                                         {-2, {&y, &y, &y}},
                                         {2, {&y, &y, &x}},
                                         {2, {&y, &x, &x}},
                                         {-2, {&x, &x, &x}}});
    return det != factored || det != expanded || det.is_zero();
  });
}

}  // namespace planar
