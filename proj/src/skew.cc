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

#include "ore/skew.h"

#include <algorithm>
#include <atomic>

#include "ore/error.h"

namespace ore {

SkewPoly::SkewPoly(Field field, int s, std::vector<FqElem> coeffs)
    : field_(std::move(field)), s_(s), coeffs_(std::move(coeffs)) {
  Enforce(s_ >= 1, Errc::kInvalidArgument, "twist exponent must be positive");
  for (const auto& c : coeffs_) field_.Check(c);
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

SkewPoly SkewPoly::Monomial(const Field& field, int s, int degree, FqElem c) {
  std::vector<FqElem> coeffs(degree + 1, field.Zero());
  coeffs[degree] = c;
  return SkewPoly(field, s, std::move(coeffs));
}

SkewPoly SkewPoly::RandomMonic(const Field& field, int s, int degree, Rng& rng) {
  std::vector<FqElem> coeffs;
  for (int i = 0; i < degree; ++i) coeffs.push_back(field.Random(rng));
  coeffs.push_back(field.One());
  return SkewPoly(field, s, std::move(coeffs));
}

void SkewPoly::CheckCompatible(const SkewPoly& o) const {
  Enforce(field_ == o.field_, Errc::kContextMismatch, "polynomials over different fields");
  Enforce(s_ == o.s_, Errc::kTwistMismatch, "polynomials with different twists");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  CheckCompatible(o);
  std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_.Zero());
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = field_.Add(Coeff(static_cast<int>(i)), o.Coeff(static_cast<int>(i)));
  }
  return SkewPoly(field_, s_, std::move(r));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
  CheckCompatible(o);
  std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_.Zero());
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = field_.Sub(Coeff(static_cast<int>(i)), o.Coeff(static_cast<int>(i)));
  }
  return SkewPoly(field_, s_, std::move(r));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
  CheckCompatible(o);
  if (IsZero() || o.IsZero()) return Zero(field_, s_);
  std::vector<FqElem> r(coeffs_.size() + o.coeffs_.size() - 1, field_.Zero());
  for (int i = 0; i <= Degree(); ++i) {
    const FqElem c = coeffs_[i];
    if (c.value == 0) continue;
    for (int j = 0; j <= o.Degree(); ++j) {
      r[i + j] = field_.Add(r[i + j], field_.Mul(c, Twist(o.coeffs_[j], i)));
    }
  }
  return SkewPoly(field_, s_, std::move(r));
}

SkewPoly SkewPoly::ScaleLeft(FqElem c) const {
  std::vector<FqElem> r(coeffs_);
  for (auto& a : r) a = field_.Mul(c, a);
  return SkewPoly(field_, s_, std::move(r));
}

SkewPoly SkewPoly::ScaleRight(FqElem c) const {
  std::vector<FqElem> r(coeffs_);
  for (int i = 0; i <= Degree(); ++i) r[i] = field_.Mul(r[i], Twist(c, i));
  return SkewPoly(field_, s_, std::move(r));
}

namespace {
std::atomic<DivisionObserver> division_observer{nullptr};
}  // namespace

void SetDivisionObserver(DivisionObserver observer) { division_observer = observer; }

DivResult Divide(const SkewPoly& f, const SkewPoly& g, Side side) {
  f.CheckCompatible(g);
  Enforce(!g.IsZero(), Errc::kDivisionByZeroPoly, "division by the zero polynomial");
  const Field& fld = f.field();
  const int n = g.Degree();
  std::vector<FqElem> r = f.coeffs();
  std::vector<FqElem> q(std::max(0, f.Degree() - n + 1), fld.Zero());
  const FqElem lead_inv = fld.Inv(g.Lead());

  for (int top = f.Degree(); top >= n; --top) {
    if (r[top].value == 0) continue;
    const int k = top - n;
    if (side == Side::kRight) {
      // c Y^k g has leading coefficient c sigma^k(g_n).
      const FqElem c = fld.Mul(r[top], g.Twist(lead_inv, k));
      q[k] = c;
      for (int j = 0; j <= n; ++j) {
        r[k + j] = fld.Sub(r[k + j], fld.Mul(c, g.Twist(g.coeffs()[j], k)));
      }
    } else {
      // g c Y^k has leading coefficient g_n sigma^n(c).
      const FqElem c = g.Twist(fld.Mul(lead_inv, r[top]), -n);
      q[k] = c;
      for (int j = 0; j <= n; ++j) {
        r[k + j] = fld.Sub(r[k + j], fld.Mul(g.coeffs()[j], g.Twist(c, j)));
      }
    }
  }
  DivResult result{SkewPoly(fld, f.s(), std::move(q)), SkewPoly(fld, f.s(), std::move(r))};
  if (auto* observer = division_observer.load()) observer(f, g, side, result);
  return result;
}

SkewPoly MakeMonic(const SkewPoly& f, Side side) {
  if (f.IsZero()) return f;
  const Field& fld = f.field();
  const FqElem inv = fld.Inv(f.Lead());
  if (side == Side::kRight) return f.ScaleLeft(inv);
  return f.ScaleRight(f.Twist(inv, -f.Degree()));
}

SkewPoly Gcd(const SkewPoly& f, const SkewPoly& g, Side side) {
  f.CheckCompatible(g);
  Enforce(!(f.IsZero() && g.IsZero()), Errc::kBothZero, "gcd of two zero polynomials");
  SkewPoly a = f, b = g;
  while (!b.IsZero()) {
    SkewPoly r = Divide(a, b, side).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return MakeMonic(a, side);
}

SkewPoly Phi(const LinPoly& l) { return SkewPoly(l.field(), l.s(), l.coeffs()); }

LinPoly PhiInverse(const SkewPoly& f) { return LinPoly(f.field(), f.s(), f.coeffs()); }

GcldfResult Gcldf(const LinPoly& first, const LinPoly& second) {
  const SkewPoly a = Phi(first);
  const SkewPoly b = Phi(second);
  const SkewPoly g = Gcd(a, b, Side::kLeft);
  auto da = Divide(a, g, Side::kLeft);
  auto db = Divide(b, g, Side::kLeft);
  Enforce(da.remainder.IsZero() && db.remainder.IsZero(), Errc::kShapeViolation,
          "gcld does not divide its inputs");
  return {PhiInverse(g), PhiInverse(da.quotient), PhiInverse(db.quotient)};
}

}  // namespace ore
