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

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "ore/field.h"
#include "ore/linpoly.h"

namespace ore {

// Sparse univariate polynomial: exponent -> nonzero coefficient.
class UniPoly {
 public:
  UniPoly(Field field, std::map<uint64_t, FqElem> terms);

  const Field& field() const { return field_; }
  const std::map<uint64_t, FqElem>& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int64_t Degree() const {
    return terms_.empty() ? -1 : static_cast<int64_t>(terms_.rbegin()->first);
  }
  FqElem operator()(FqElem x) const;

  bool operator==(const UniPoly& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  Field field_;
  std::map<uint64_t, FqElem> terms_;
};

// Unordered index pair {i, j} with i <= j, standing for X^(p^i + p^j).
using IndexPair = std::pair<int, int>;

// Dembowski-Ostrom polynomial with an optional additive part and constant:
//   sum a_ij X^(p^i + p^j) + L(X) + c.
//
// The representation is canonical as a formal polynomial: pairs are stored
// with i <= j, zero coefficients are dropped, and in characteristic 2 a
// diagonal pair X^(2 * 2^i) = X^(2^(i+1)) is moved into the additive part.
class DOPoly {
 public:
  DOPoly(Field field, std::map<IndexPair, FqElem> quad, LinPoly lin, FqElem constant);
  explicit DOPoly(const Field& field)
      : DOPoly(field, {}, LinPoly::Zero(field), field.Zero()) {}

  const Field& field() const { return field_; }
  const std::map<IndexPair, FqElem>& quad() const { return quad_; }
  const LinPoly& lin() const { return lin_; }
  FqElem constant() const { return constant_; }

  FqElem operator()(FqElem x) const;

  // Largest exponent with a nonzero coefficient, saturating at UINT64_MAX;
  // 0 for constants (including zero).
  uint64_t Degree() const;
  size_t TermCount() const;
  bool IsReduced() const;
  bool HasQuadraticTerm() const { return !quad_.empty(); }

  DOPoly operator+(const DOPoly& o) const;
  UniPoly ToUniPoly() const;
  // Structural recognition: every exponent is 0, p^i or p^i + p^j.
  static std::optional<DOPoly> FromUniPoly(const UniPoly& f);

  bool operator==(const DOPoly& o) const {
    return field_ == o.field_ && quad_ == o.quad_ && lin_ == o.lin_ &&
           constant_ == o.constant_;
  }

 private:
  Field field_;
  std::map<IndexPair, FqElem> quad_;
  LinPoly lin_;
  FqElem constant_;
};

// Delta_{f,a}(X) = f(X + a) - f(X) - f(a).
//
// The constant part is -f(0) for every a and is reported on its own; the
// non-constant part is a p-polynomial exactly when f is DO + additive.
struct DeltaResult {
  std::optional<LinPoly> linear;             // set when every monomial is X^(p^i)
  std::map<uint64_t, FqElem> offending;      // monomials that are not X^(p^i)
  FqElem constant;                           // -f(0)
  bool a_is_zero = false;

  bool IsLinear() const { return linear.has_value(); }
};

DeltaResult Delta(const UniPoly& f, FqElem a);
// Closed form on the DO shape; never fails linearity.
DeltaResult Delta(const DOPoly& f, FqElem a);

struct DOCheckResult {
  bool holds = false;                 // Delta_{f,a} is additive for all a != 0
  std::optional<FqElem> witness;      // an a where it is not
  bool structural = false;            // exponents have the DO + additive shape
};

// Constant terms are ignored. Requires deg f < q (DegreeTooLarge).
DOCheckResult CheckDO(const UniPoly& f);

// kLeft: L o D.  kRight: D o L.  Symbolic, no reduction.
enum class ComposeSide { kLeft, kRight };
DOPoly ComposeWithLin(const LinPoly& l, const DOPoly& d, ComposeSide side);

// Reduction mod X^q - X: indices folded mod e, colliding terms summed.
DOPoly Reduce(const DOPoly& d);

// p^k saturating at UINT64_MAX.
uint64_t PowSaturating(uint64_t p, uint64_t k);

}  // namespace ore
