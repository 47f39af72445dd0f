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

#ifndef PLANAR_PLANARITY_HPP
#define PLANAR_PLANARITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "planar/field.hpp"
#include "planar/linearized.hpp"
#include "planar/parallel.hpp"

namespace planar {

/// f(X) = E X^2 + A X^{q+1} + B X^{q^2+1} + C X^{2q} + D X^{2q^2} with all
/// five coefficients in F_q (mid level).
struct Pentanomial {
  Element e, a, b, c, d;

  friend bool operator==(const Pentanomial&, const Pentanomial&) = default;
};

/// Throws kLevelMismatch unless every coefficient is a mid-level element of
/// `tower`.
void validate(const FieldTower& tower, const Pentanomial& f);

/// Builds (E, A, B, C, D) from integers reduced mod p into F_p ⊂ F_q.
Pentanomial pentanomial_from_ints(const FieldTower& tower,
                                  const std::array<std::int64_t, 5>& eabcd);

/// Tuples are ordered like coefficient vectors: E varies fastest, then A,
/// B, C and D. Index 0 is the zero pentanomial.
std::uint64_t tuple_index(const FieldTower& tower, const Pentanomial& f);
Pentanomial pentanomial_from_index(const FieldTower& tower,
                                   std::uint64_t index);

bool is_zero(const Pentanomial& f);

/// c * f for c in F_q.
Pentanomial scale(const FieldTower& tower, const Element& c,
                  const Pentanomial& f);

Element eval_pentanomial(const FieldTower& tower, const Pentanomial& f,
                         const Element& x);

/// F_eps(X) = f(X + eps) - f(X) - f(eps) as a q-polynomial:
/// (2E eps + A eps^q + B eps^{q^2}) X + (A eps + 2C eps^q) X^q
///   + (B eps + 2D eps^{q^2}) X^{q^2}.
QPolynomial difference_qpoly(const FieldTower& tower, const Pentanomial& f,
                             const Element& eps);

/// The F_q weights of the closed-form determinant of F_eps:
///   t1 = -2A^2D + 2ABE - 2B^2C
///   t2 = 2A^2C - 2ABD - 4ACD + 4AE^2 + 2B^2E - 4BCE + 4BD^2
///   t3 = 2A^2E - 2ABC + 4AC^2 - 4ADE + 2B^2D - 4BCD + 4BE^2
///   t4 = 2A^3 + 2B^3 + 8C^3 - 24CDE + 8D^3 + 8E^3
struct ExpressionWeights {
  Element t1, t2, t3, t4;
};

ExpressionWeights expression_weights(const FieldTower& tower,
                                     const Pentanomial& f);

/// t1 S1 + t2 S2 + t3 S3 + t4 eps^{1+q+q^2}; equal to the Dickson
/// determinant of difference_qpoly(f, eps).
Element delta_expression(const FieldTower& tower, const Pentanomial& f,
                         const Element& eps);

enum class PlanarityMethod {
  /// x -> f(x + eps) - f(x) is checked for injectivity by image counting.
  kDefinition,
  /// Dickson determinant of the difference q-polynomial.
  kDickson,
  /// Closed-form determinant expression.
  kExpression,
};

std::string_view to_string(PlanarityMethod method) noexcept;
std::optional<PlanarityMethod> parse_planarity_method(std::string_view name);

struct PlanarityVerdict {
  bool planar = false;
  /// First eps in enumeration order at which F_eps is not a permutation.
  std::optional<Element> witness;
};

/// Decides planarity of f over F_{q^3} by sweeping every eps != 0. The zero
/// pentanomial is never planar. The witness does not depend on the thread
/// count or the method.
PlanarityVerdict check_planarity(const FieldTower& tower, const Pentanomial& f,
                                 PlanarityMethod method = PlanarityMethod::kDickson,
                                 const SweepOptions& options = {});

bool is_planar(const FieldTower& tower, const Pentanomial& f,
               PlanarityMethod method = PlanarityMethod::kDickson,
               const SweepOptions& options = {});

/// The matrix with first column (2e + e^q + e^{q^2}, e + e^q, e + e^{q^2})
/// whose later columns are successive Frobenius images, built entry by entry.
Matrix3 matrix_a(const FieldTower& tower, const Element& eps);

/// Same layout with first column (2e - e^q - e^{q^2}, 2e^q - e, 2e^{q^2} - e).
Matrix3 matrix_b(const FieldTower& tower, const Element& eps);

/// For all eps != 0: det(matrix_a) = 4(e^{q^2} + e^q)(e^{q^2} + e)(e^q + e),
/// agrees with its expanded form, and is nonzero.
bool verify_matrix_identity_a(const FieldTower& tower,
                              const SweepOptions& options = {});

/// For all eps != 0:
/// det(matrix_b) = 2(e^{q^2} - e^q + e)(e^{q^2} + e^q - e)(-e^{q^2} + e^q + e),
/// agrees with its expanded form, and is nonzero.
bool verify_matrix_identity_b(const FieldTower& tower,
                              const SweepOptions& options = {});

}  // namespace planar

#endif  // PLANAR_PLANARITY_HPP
