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

#ifndef PLANAR_LINEARIZED_HPP
#define PLANAR_LINEARIZED_HPP

#include <array>

#include "planar/field.hpp"
#include "planar/parallel.hpp"

namespace planar {

/// L(X) = c0 X + c1 X^q + c2 X^{q^2} over F_{q^3}.
struct QPolynomial {
  Element c0, c1, c2;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

/// 3x3 matrix over F_{q^3}, row-major.
struct Matrix3 {
  std::array<std::array<Element, 3>, 3> entries;

  const Element& operator()(int row, int col) const {
    return entries[row][col];
  }
  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

using DicksonMatrix = Matrix3;

/// Lifts three F_q coefficients: (c0, c1, c2) -> c0 X + c1 X^q + c2 X^{q^2}.
QPolynomial qpoly_from_mid(const FieldTower& tower, const Element& c0,
                           const Element& c1, const Element& c2);

Element evaluate(const FieldTower& tower, const QPolynomial& l,
                 const Element& x);

/// Rows (c0, c1, c2), (c2^q, c0^q, c1^q), (c1^{q^2}, c2^{q^2}, c0^{q^2}).
DicksonMatrix dickson_matrix(const FieldTower& tower, const QPolynomial& l);

/// Cofactor expansion along the first row.
Element det3(const FieldTower& tower, const Matrix3& m);

/// L permutes F_{q^3} iff its Dickson matrix is nonsingular.
bool is_permutation_dickson(const FieldTower& tower, const QPolynomial& l);

/// Independent check: sweeps all of F_{q^3} for a nonzero root of L.
bool is_permutation_kernel(const FieldTower& tower, const QPolynomial& l,
                           const SweepOptions& options = {});

/// a^3 + b^3 + c^3 - 3abc for a, b, c in F_q. Nonzero exactly when
/// a X^{q^2} + b X^q + c X has no root in F_{q^3}^*.
Element norm_form(const FieldTower& tower, const Element& a, const Element& b,
                  const Element& c);

/// Coefficient-wise q^k-th power of L.
QPolynomial conjugate(const FieldTower& tower, const QPolynomial& l,
                      unsigned k);

}  // namespace planar

#endif  // PLANAR_LINEARIZED_HPP
