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

#include "ore/linpoly.h"

#include <utility>

#include "ore/error.h"

namespace ore {

LinPoly::LinPoly(Field field, int s, std::vector<FqElem> coeffs)
    : field_(std::move(field)), s_(s), coeffs_(std::move(coeffs)) {
  Enforce(s_ >= 1, Errc::kInvalidArgument, "twist step must be positive");
  for (const auto& c : coeffs_) field_.Check(c);
  while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
}

LinPoly LinPoly::Monomial(const Field& field, int s, int index, FqElem c) {
  std::vector<FqElem> coeffs(index + 1, field.Zero());
  coeffs[index] = c;
  return LinPoly(field, s, std::move(coeffs));
}

LinPoly LinPoly::Random(const Field& field, int s, int top_index, Rng& rng) {
  std::vector<FqElem> coeffs;
  for (int i = 0; i <= top_index; ++i) {
    coeffs.push_back(field.Random(rng, i == top_index));
  }
  return LinPoly(field, s, std::move(coeffs));
}

void LinPoly::CheckCompatible(const LinPoly& o) const {
  Enforce(field_ == o.field_, Errc::kContextMismatch, "polynomials over different fields");
  Enforce(s_ == o.s_, Errc::kTwistMismatch, "polynomials with different twist steps");
}

FqElem LinPoly::operator()(FqElem x) const {
  field_.Check(x);
  FqElem acc = field_.Zero();
  for (int i = 0; i <= TopIndex(); ++i) {
    if (coeffs_[i].value == 0) continue;
    acc = field_.Add(acc, field_.Mul(coeffs_[i], field_.Frobenius(x, int64_t{s_} * i)));
  }
  return acc;
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
  CheckCompatible(o);
  std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_.Zero());
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = field_.Add(Coeff(static_cast<int>(i)), o.Coeff(static_cast<int>(i)));
  }
  return LinPoly(field_, s_, std::move(r));
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
  CheckCompatible(o);
  std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), field_.Zero());
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = field_.Sub(Coeff(static_cast<int>(i)), o.Coeff(static_cast<int>(i)));
  }
  return LinPoly(field_, s_, std::move(r));
}

LinPoly LinPoly::ScaleLeft(FqElem c) const {
  std::vector<FqElem> r(coeffs_);
  for (auto& a : r) a = field_.Mul(c, a);
  return LinPoly(field_, s_, std::move(r));
}

LinPoly LinPoly::AsPPolynomial() const {
  if (s_ == 1) return *this;
  std::vector<FqElem> r(IsZero() ? 0 : size_t(TopIndex()) * s_ + 1, field_.Zero());
  for (int i = 0; i <= TopIndex(); ++i) r[size_t(i) * s_] = coeffs_[i];
  return LinPoly(field_, 1, std::move(r));
}

LinPoly Compose(const LinPoly& outer, const LinPoly& inner) {
  Enforce(outer.field() == inner.field(), Errc::kContextMismatch,
          "polynomials over different fields");
  Enforce(outer.s() == inner.s(), Errc::kTwistMismatch,
          "polynomials with different twist steps");
  const Field& f = outer.field();
  if (outer.IsZero() || inner.IsZero()) return LinPoly::Zero(f, outer.s());
  std::vector<FqElem> r(outer.TopIndex() + inner.TopIndex() + 1, f.Zero());
  for (int i = 0; i <= outer.TopIndex(); ++i) {
    const FqElem a = outer.coeffs()[i];
    if (a.value == 0) continue;
    for (int j = 0; j <= inner.TopIndex(); ++j) {
      const FqElem b = f.Frobenius(inner.coeffs()[j], int64_t{outer.s()} * i);
      r[i + j] = f.Add(r[i + j], f.Mul(a, b));
    }
  }
  return LinPoly(f, outer.s(), std::move(r));
}

LinPoly Reduce(const LinPoly& l) {
  const Field& f = l.field();
  const int e = f.e();
  std::vector<FqElem> r(e, f.Zero());
  for (int i = 0; i <= l.TopIndex(); ++i) {
    const int slot = static_cast<int>((int64_t{l.s()} * i) % e);
    r[slot] = f.Add(r[slot], l.coeffs()[i]);
  }
  return LinPoly(f, 1, std::move(r));
}

FpMatrix ToMatrix(const LinPoly& l) {
  const Field& f = l.field();
  const int e = f.e();
  FpMatrix m(f.p(), e, e);
  for (int j = 0; j < e; ++j) {
    const auto col = f.Coordinates(l(f.basis()[j]));
    for (int r = 0; r < e; ++r) m(r, j) = col[r];
  }
  return m;
}

LinPoly LinPolyFromMatrix(const FpMatrix& m, const Field& field) {
  const int e = field.e();
  Enforce(m.rows() == e && m.cols() == e && m.p() == field.p(), Errc::kDegreeMismatch,
          "matrix must be e x e over F_p");
  // Augmented Moore system: row j is [b_j^(p^0) ... b_j^(p^(e-1)) | M(b_j)].
  std::vector<std::vector<FqElem>> a(e, std::vector<FqElem>(e + 1));
  for (int j = 0; j < e; ++j) {
    const FqElem b = field.basis()[j];
    for (int i = 0; i < e; ++i) a[j][i] = field.Frobenius(b, i);
    std::vector<uint32_t> col(e);
    for (int r = 0; r < e; ++r) col[r] = m(r, j) % field.p();
    a[j][e] = field.FromCoordinates(col);
  }
  for (int c = 0; c < e; ++c) {
    int sel = c;
    while (sel < e && a[sel][c].value == 0) ++sel;
    Enforce(sel < e, Errc::kSingularSystem, "Moore matrix is singular");
    std::swap(a[sel], a[c]);
    const FqElem inv = field.Inv(a[c][c]);
    for (int k = c; k <= e; ++k) a[c][k] = field.Mul(a[c][k], inv);
    for (int r = 0; r < e; ++r) {
      if (r == c || a[r][c].value == 0) continue;
      const FqElem factor = a[r][c];
      for (int k = c; k <= e; ++k) {
        a[r][k] = field.Sub(a[r][k], field.Mul(factor, a[c][k]));
      }
    }
  }
  std::vector<FqElem> coeffs(e);
  for (int i = 0; i < e; ++i) coeffs[i] = a[i][e];
  return LinPoly(field, 1, std::move(coeffs));
}

bool IsPermutation(const LinPoly& l) { return ToMatrix(l).IsInvertible(); }

LinPoly Inverse(const LinPoly& l) {
  auto inv = ToMatrix(l).Inverse();
  Enforce(inv.has_value(), Errc::kNotAPermutation, "polynomial has a nontrivial kernel");
  return LinPolyFromMatrix(*inv, l.field());
}

}  // namespace ore
