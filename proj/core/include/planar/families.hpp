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

#ifndef PLANAR_FAMILIES_HPP
#define PLANAR_FAMILIES_HPP

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "planar/field.hpp"
#include "planar/parallel.hpp"
#include "planar/planarity.hpp"

namespace planar {

/// P(X) = a X^{q^2} + b X^q + c X with a, b, c in F_q.
struct FactorTriple {
  Element a, b, c;

  friend bool operator==(const FactorTriple&, const FactorTriple&) = default;
};

FactorTriple triple_from_ints(const FieldTower& tower, std::int64_t a,
                              std::int64_t b, std::int64_t c);

/// P has no root in F_{q^3}^* (nonzero norm form).
bool is_admissible(const FieldTower& tower, const FactorTriple& t);

/// P(eps) for eps in F_{q^3}.
Element evaluate(const FieldTower& tower, const FactorTriple& t,
                 const Element& eps);

/// The four right-hand-side parameters of the coefficient system.
struct SystemParams {
  Element alpha, beta, gamma, delta;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

SystemParams params_from_ints(const FieldTower& tower, std::int64_t alpha,
                              std::int64_t beta, std::int64_t gamma,
                              std::int64_t delta);

/// alpha = a1a2a3, beta = a1a2b3 + a1b2a3 + b1a2a3,
/// gamma = a1a2c3 + a1c2a3 + c1a2a3, delta = sum of a_i b_j c_k over all
/// permutations (i, j, k).
///
/// Throws kInadmissibleTriple if a triple has a vanishing norm form, and
/// kSymmetryViolated naming the failed equation unless
///   a1a2a3 = b1b2b3 = c1c2c3,
///   beta = b1b2c3 + b1c2b3 + c1b2b3 = a1c2c3 + c1c2a3 + c1a2c3,
///   gamma = b1c2c3 + c1c2b3 + c1b2c3 = a1b2b3 + b1a2b3 + b1b2a3.
SystemParams system_params(const FieldTower& tower, const FactorTriple& t1,
                           const FactorTriple& t2, const FactorTriple& t3);

/// (a, b, c), (b, c, a), (c, a, b).
std::array<FactorTriple, 3> cyclic_triples(const FactorTriple& t);

/// alpha = abc, beta = a^2b + ac^2 + b^2c, gamma = a^2c + ab^2 + bc^2,
/// delta = a^3 + b^3 + c^3 + 3abc. Throws kInadmissibleTriple.
SystemParams cyclic_params(const FieldTower& tower, const FactorTriple& t);

/// Residuals of the four equations
///   -A^2D + ABE - B^2C                             = 2 alpha
///   A^2C - ABD - 2ACD + 2AE^2 + B^2E - 2BCE + 2BD^2 = 2 beta
///   A^2E - ABC + 2AC^2 - 2ADE + B^2D - 2BCD + 2BE^2 = 2 gamma
///   A^3 + B^3 + 4C^3 - 12CDE + 4D^3 + 4E^3          = 2 delta
/// in that order (left side minus right side).
std::array<Element, 4> system_residuals(const FieldTower& tower,
                                        const SystemParams& params,
                                        const Pentanomial& f);

bool satisfies_system(const FieldTower& tower, const SystemParams& params,
                      const Pentanomial& f);

struct SolveOptions {
  SweepOptions sweep;
  /// Re-check every solution with the Dickson decider and throw
  /// std::logic_error if one is not planar.
  bool verify_planar = false;
};

/// Every (E, A, B, C, D) in F_q^5 solving the system, in tuple_index order.
/// Throws kScaleExceeded when q^5 is over the sweep bound.
std::vector<Pentanomial> solve_system(const FieldTower& tower,
                                      const SystemParams& params,
                                      const SolveOptions& options = {});

/// Under the system, the closed-form determinant equals
/// kFactorizationConstant * P1(eps) P2(eps) P3(eps) whenever beta = gamma.
inline constexpr int kFactorizationConstant = 4;

enum class FactorOrientation {
  /// P_i(X) = a_i X^{q^2} + b_i X^q + c_i X.
  kAsStated,
  /// P_i(X) = b_i X^{q^2} + a_i X^q + c_i X. Matches the determinant for
  /// every solution, including beta != gamma.
  kTransposed,
};

Element factor_product(const FieldTower& tower,
                       const std::array<FactorTriple, 3>& triples,
                       const Element& eps,
                       FactorOrientation orientation = FactorOrientation::kAsStated);

/// For every eps in F_{q^3}: delta_expression(f, eps) equals
/// kFactorizationConstant * factor_product(triples, eps). `f` must solve the
/// system for system_params(triples); std::invalid_argument otherwise.
bool verify_eq6_factorization(
    const FieldTower& tower, const std::array<FactorTriple, 3>& triples,
    const Pentanomial& f, const SweepOptions& options = {},
    FactorOrientation orientation = FactorOrientation::kAsStated);

/// A constructed family member and the value of its defining condition.
struct FamilyMember {
  Pentanomial f;
  bool predicate = false;
};

/// E X^2 + C X^{2q} + D X^{2q^2}; predicate C^3 + D^3 + E^3 - 3CDE = 1/2.
/// The predicate is sufficient for planarity, not necessary.
FamilyMember family_trinomial(const FieldTower& tower, const Element& c,
                              const Element& d, const Element& e);

/// -X^2 + 2X^{q^2+1} + X^{2q} - X^{2q^2}; planar for every odd q.
Pentanomial family_quadrinomial(const FieldTower& tower);

/// (E, 2(E-D), 2D, E-D, D); predicate E(3D^2 - 3DE + E^2) != 0, which is
/// equivalent to planarity.
FamilyMember family_two_param(const FieldTower& tower, const Element& d,
                              const Element& e);

/// (1, -1, -1, 1, 1) and (1, 1, 1, 1/2, 1/2); both planar for every odd q.
std::pair<Pentanomial, Pentanomial> family_pentanomials(const FieldTower& tower);

/// (1, 1, 1, 1, 1), the all-ones variant of the second pentanomial above.
Pentanomial uniform_pentanomial(const FieldTower& tower);

/// (1,0,0), (0,1,0), (0,0,1): params (0, 0, 0, 1).
std::array<FactorTriple, 3> unit_triples(const FieldTower& tower);

/// (1,-1,1), (1,1,-1), (-1,1,1): params (-1, 1, 1, -2).
std::array<FactorTriple, 3> quadrinomial_triples(const FieldTower& tower);

/// (4,4,0), (E,0,E), (0,w,w) with w = 3D^2 - 3DE + E^2:
/// params (0, 4Ew, 4Ew, 8Ew).
std::array<FactorTriple, 3> two_param_triples(const FieldTower& tower,
                                              const Element& d,
                                              const Element& e);

/// 3D^2 - 3DE + E^2.
Element two_param_omega(const FieldTower& tower, const Element& d,
                        const Element& e);

/// All B in F_q^* with B^3 = 4, ascending by index.
std::vector<Element> cube_roots_of_four(const FieldTower& tower);

/// (-B/2, 0, B, 2/B^2, -B/2) for the first cube root B of 4, if any. It
/// solves the system for the quadrinomial triples.
std::optional<Pentanomial> quadrinomial_witness(const FieldTower& tower);

}  // namespace planar

#endif  // PLANAR_FAMILIES_HPP
