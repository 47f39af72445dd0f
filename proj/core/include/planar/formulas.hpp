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

#ifndef PLANAR_FORMULAS_HPP
#define PLANAR_FORMULAS_HPP

#include <array>

#include "planar/arithmetic.hpp"

// Closed-form expressions over F_{q^3}, generic in the arithmetic backend.
// Coefficients from F_q enter through K::lift.
namespace planar::formulas {

template <class V>
using Square3 = std::array<std::array<V, 3>, 3>;

template <CubicFieldArithmetic K>
typename K::value_type det3(const K& k,
                            const Square3<typename K::value_type>& m) {
  auto minor = [&](int r0, int c0, int r1, int c1) {
    return k.sub(k.mul(m[r0][c0], m[r1][c1]), k.mul(m[r0][c1], m[r1][c0]));
  };
  auto t0 = k.mul(m[0][0], minor(1, 1, 2, 2));
  auto t1 = k.mul(m[0][1], minor(1, 0, 2, 2));
  auto t2 = k.mul(m[0][2], minor(1, 0, 2, 1));
  return k.add(k.sub(t0, t1), t2);
}

/// Row i is row 0 shifted right by i with entries raised to q^i.
template <CubicFieldArithmetic K>
Square3<typename K::value_type> dickson(const K& k,
                                        const typename K::value_type& c0,
                                        const typename K::value_type& c1,
                                        const typename K::value_type& c2) {
  return {{{c0, c1, c2},
           {k.frobenius(c2, 1), k.frobenius(c0, 1), k.frobenius(c1, 1)},
           {k.frobenius(c1, 2), k.frobenius(c2, 2), k.frobenius(c0, 2)}}};
}

/// c0 x + c1 x^q + c2 x^{q^2}
template <CubicFieldArithmetic K>
typename K::value_type evaluate(const K& k, const typename K::value_type& c0,
                                const typename K::value_type& c1,
                                const typename K::value_type& c2,
                                const typename K::value_type& x) {
  return k.add(k.add(k.mul(c0, x), k.mul(c1, k.frobenius(x, 1))),
               k.mul(c2, k.frobenius(x, 2)));
}

/// Pentanomial coefficients lifted into the backend, with the doubled ones
/// that the difference polynomial needs.
template <class V>
struct LiftedPentanomial {
  V e, a, b, c, d;
  V two_e, two_c, two_d;
};

/// E x^2 + A x^{q+1} + B x^{q^2+1} + C x^{2q} + D x^{2q^2}
template <CubicFieldArithmetic K>
typename K::value_type eval_pentanomial(
    const K& k, const LiftedPentanomial<typename K::value_type>& f,
    const typename K::value_type& x) {
  const auto x1 = k.frobenius(x, 1);
  const auto x2 = k.frobenius(x, 2);
  auto r = k.mul(f.e, k.mul(x, x));
  r = k.add(r, k.mul(f.a, k.mul(x, x1)));
  r = k.add(r, k.mul(f.b, k.mul(x, x2)));
  r = k.add(r, k.mul(f.c, k.mul(x1, x1)));
  return k.add(r, k.mul(f.d, k.mul(x2, x2)));
}

/// Coefficients of f(X+eps) - f(X) - f(eps) as c0 X + c1 X^q + c2 X^{q^2}.
template <CubicFieldArithmetic K>
std::array<typename K::value_type, 3> difference(
    const K& k, const LiftedPentanomial<typename K::value_type>& f,
    const typename K::value_type& eps) {
  const auto e1 = k.frobenius(eps, 1);
  const auto e2 = k.frobenius(eps, 2);
  auto c0 = k.add(k.add(k.mul(f.two_e, eps), k.mul(f.a, e1)), k.mul(f.b, e2));
  auto c1 = k.add(k.mul(f.a, eps), k.mul(f.two_c, e1));
  auto c2 = k.add(k.mul(f.b, eps), k.mul(f.two_d, e2));
  return {c0, c1, c2};
}

template <CubicFieldArithmetic K>
typename K::value_type difference_det(
    const K& k, const LiftedPentanomial<typename K::value_type>& f,
    const typename K::value_type& eps) {
  const auto c = difference(k, f, eps);
  return det3(k, dickson(k, c[0], c[1], c[2]));
}

/// The four F_q weights of the closed-form determinant, lifted.
template <class V>
struct LiftedWeights {
  V t1, t2, t3, t4;
};

/// t1 S1 + t2 S2 + t3 S3 + t4 eps^{1+q+q^2} with
///   S1 = eps^3 + eps^{3q} + eps^{3q^2},
///   S2 = eps^{2+q} + eps^{1+2q^2} + eps^{2q+q^2},
///   S3 = eps^{2+q^2} + eps^{1+2q} + eps^{q+2q^2}.
template <CubicFieldArithmetic K>
typename K::value_type weighted_sum(
    const K& k, const LiftedWeights<typename K::value_type>& w,
    const typename K::value_type& eps) {
  const auto& x = eps;
  const auto y = k.frobenius(eps, 1);
  const auto z = k.frobenius(eps, 2);
  const auto xx = k.mul(x, x);
  const auto yy = k.mul(y, y);
  const auto zz = k.mul(z, z);
  const auto s1 = k.add(k.add(k.mul(xx, x), k.mul(yy, y)), k.mul(zz, z));
  const auto s2 = k.add(k.add(k.mul(xx, y), k.mul(x, zz)), k.mul(yy, z));
  const auto s3 = k.add(k.add(k.mul(xx, z), k.mul(x, yy)), k.mul(y, zz));
  const auto nn = k.mul(k.mul(x, y), z);
  auto r = k.mul(w.t1, s1);
  r = k.add(r, k.mul(w.t2, s2));
  r = k.add(r, k.mul(w.t3, s3));
  return k.add(r, k.mul(w.t4, nn));
}

}  // namespace planar::formulas

#endif  // PLANAR_FORMULAS_HPP
