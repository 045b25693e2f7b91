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

#include <vector>

#include "ore/field.h"
#include "ore/fp_matrix.h"

namespace ore {

// p^s-polynomial sum_i a_i X^(p^(s*i)) over a finite field.
//
// Coefficients are indexed by i, trailing zeros are trimmed, and the zero
// polynomial has no coefficients (TopIndex() == -1, degree "-infinity").
class LinPoly {
 public:
  LinPoly(Field field, int s, std::vector<FqElem> coeffs);

  static LinPoly Zero(const Field& field, int s = 1) { return LinPoly(field, s, {}); }
  // The polynomial X.
  static LinPoly Identity(const Field& field, int s = 1) {
    return LinPoly(field, s, {field.One()});
  }
  // c * X^(p^(s*index)).
  static LinPoly Monomial(const Field& field, int s, int index, FqElem c);
  static LinPoly Random(const Field& field, int s, int top_index, Rng& rng);

  const Field& field() const { return field_; }
  int s() const { return s_; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  int TopIndex() const { return static_cast<int>(coeffs_.size()) - 1; }
  FqElem Lead() const { return IsZero() ? field_.Zero() : coeffs_.back(); }
  FqElem Coeff(int i) const {
    return i >= 0 && i <= TopIndex() ? coeffs_[i] : field_.Zero();
  }

  // Evaluation map x -> L(x).
  FqElem operator()(FqElem x) const;

  LinPoly operator+(const LinPoly& o) const;
  LinPoly operator-(const LinPoly& o) const;
  // Left scalar multiple c * L.
  LinPoly ScaleLeft(FqElem c) const;

  // The same polynomial written as a p-polynomial (twist step 1).
  LinPoly AsPPolynomial() const;

  bool operator==(const LinPoly& o) const {
    return field_ == o.field_ && s_ == o.s_ && coeffs_ == o.coeffs_;
  }

 private:
  void CheckCompatible(const LinPoly& o) const;

  Field field_;
  int s_;
  std::vector<FqElem> coeffs_;
};

// Symbolic composition L1(L2(X)), no reduction mod X^q - X.
LinPoly Compose(const LinPoly& outer, const LinPoly& inner);

// Functional reduction mod X^q - X. The result is a p-polynomial (s = 1)
// with all indices below e, agreeing with the input on every element.
LinPoly Reduce(const LinPoly& l);

// Matrix of the induced F_p-linear map in the field's basis: column j holds
// the coordinates of L(basis_j).
FpMatrix ToMatrix(const LinPoly& l);

// Reduced p-polynomial inducing the linear map `m`. Solves the Moore system
// sum_i a_i b_j^(p^i) = M(b_j) over the field.
LinPoly LinPolyFromMatrix(const FpMatrix& m, const Field& field);

bool IsPermutation(const LinPoly& l);

// Compositional inverse mod X^q - X of a permutation p-polynomial.
LinPoly Inverse(const LinPoly& l);

}  // namespace ore
