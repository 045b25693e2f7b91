// Copyright 2026 The Ore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "ore/field.h"
#include "ore/linpoly.h"

namespace ore {

// Element of the skew-polynomial ring F_q[Y; sigma], sigma(a) = a^(p^s),
// with Y a = sigma(a) Y. Coefficients c_0..c_n stand for sum c_i Y^i.
class SkewPoly {
 public:
  SkewPoly(Field field, int s, std::vector<FqElem> coeffs);

  static SkewPoly Zero(const Field& field, int s) { return SkewPoly(field, s, {}); }
  static SkewPoly One(const Field& field, int s) { return SkewPoly(field, s, {field.One()}); }
  static SkewPoly Constant(const Field& field, int s, FqElem c) {
    return SkewPoly(field, s, {c});
  }
  static SkewPoly Monomial(const Field& field, int s, int degree, FqElem c);
  // Uniform monic polynomial of the given degree.
  static SkewPoly RandomMonic(const Field& field, int s, int degree, Rng& rng);

  const Field& field() const { return field_; }
  int s() const { return s_; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int Degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  FqElem Lead() const { return IsZero() ? field_.Zero() : coeffs_.back(); }
  FqElem Coeff(int i) const {
    return i >= 0 && i <= Degree() ? coeffs_[i] : field_.Zero();
  }
  bool IsMonic() const { return !IsZero() && Lead() == field_.One(); }

  // sigma^k(a).
  FqElem Twist(FqElem a, int64_t k) const { return field_.Frobenius(a, int64_t{s_} * k); }

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const;
  SkewPoly operator*(const SkewPoly& o) const;

  // c * f and f * c for a constant c.
  SkewPoly ScaleLeft(FqElem c) const;
  SkewPoly ScaleRight(FqElem c) const;

  bool operator==(const SkewPoly& o) const {
    return field_ == o.field_ && s_ == o.s_ && coeffs_ == o.coeffs_;
  }

  void CheckCompatible(const SkewPoly& o) const;

 private:
  Field field_;
  int s_;
  std::vector<FqElem> coeffs_;
};

enum class Side { kRight, kLeft };

struct DivResult {
  SkewPoly quotient;
  SkewPoly remainder;
};

// kRight: f = q g + r.  kLeft: f = g q + r.  deg r < deg g.
DivResult Divide(const SkewPoly& f, const SkewPoly& g, Side side);

// Called after every Divide with its operands and result, so a harness can
// audit the division contract. nullptr removes the observer.
using DivisionObserver = void (*)(const SkewPoly& f, const SkewPoly& g, Side side,
                                  const DivResult& result);
void SetDivisionObserver(DivisionObserver observer);

// Right remainder of f modulo g.
inline SkewPoly RightRem(const SkewPoly& f, const SkewPoly& g) {
  return Divide(f, g, Side::kRight).remainder;
}

// Normalizations that keep the divisor class on the given side:
// kRight scales on the left (c f), kLeft scales on the right (f c).
SkewPoly MakeMonic(const SkewPoly& f, Side side);

// Monic greatest common right (kRight) or left (kLeft) divisor.
SkewPoly Gcd(const SkewPoly& f, const SkewPoly& g, Side side);

// Coefficient-preserving correspondence a X^(p^(s i)) <-> a Y^i. It carries
// composition to multiplication.
SkewPoly Phi(const LinPoly& l);
LinPoly PhiInverse(const SkewPoly& f);

// Greatest common left-decompositional factor of two p^s-polynomials along
// with cofactors: first == gcldf o first_cofactor, second == gcldf o
// second_cofactor (exact, unreduced).
struct GcldfResult {
  LinPoly gcldf;
  LinPoly first_cofactor;
  LinPoly second_cofactor;
};
GcldfResult Gcldf(const LinPoly& first, const LinPoly& second);

}  // namespace ore
