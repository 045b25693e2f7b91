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

#include "ore/field.h"

#include <string>

#include "ore/error.h"
#include "ore/fp_poly.h"

namespace ore {
namespace {

std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

FpPoly ToPoly(uint32_t value, uint32_t p, int e) {
  std::vector<uint32_t> c(e);
  for (int k = 0; k < e; ++k) {
    c[k] = value % p;
    value /= p;
  }
  return FpPoly(p, std::move(c));
}

uint32_t FromPoly(const FpPoly& f, const std::vector<uint32_t>& pow_p) {
  uint32_t v = 0;
  for (int k = 0; k <= f.Degree(); ++k) v += f[k] * pow_p[k];
  return v;
}

}  // namespace

Field Field::Create(uint32_t p, int e, std::optional<std::vector<uint32_t>> modulus) {
  Enforce(IsPrime(p), Errc::kNonPrime, std::to_string(p) + " is not prime");
  Enforce(e >= 1, Errc::kDegreeMismatch, "extension degree must be >= 1");
  uint64_t q64 = 1;
  for (int k = 0; k < e; ++k) {
    q64 *= p;
    Enforce(q64 <= kMaxFieldOrder, Errc::kPolicyBound,
            "field order exceeds 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<uint32_t>(q64);
  impl->pow_p.resize(e + 1);
  impl->pow_p[0] = 1;
  for (int k = 1; k <= e; ++k) impl->pow_p[k] = impl->pow_p[k - 1] * p;

  FpPoly mod;
  if (modulus) {
    Enforce(static_cast<int>(modulus->size()) == e + 1, Errc::kDegreeMismatch,
            "modulus must have e+1 coefficients");
    for (uint32_t c : *modulus) {
      Enforce(c < p, Errc::kDegreeMismatch, "modulus coefficient out of range");
    }
    Enforce(modulus->back() == 1, Errc::kDegreeMismatch, "modulus must be monic");
    mod = FpPoly(p, *modulus);
    Enforce(IsIrreducible(mod), Errc::kReducibleModulus, "modulus is reducible");
  } else {
    std::vector<uint32_t> c(e + 1, 0);
    c[e] = 1;
    for (uint32_t v = 0;; ++v) {
      uint32_t x = v;
      for (int k = 0; k < e; ++k) {
        c[k] = x % p;
        x /= p;
      }
      mod = FpPoly(p, c);
      if (IsIrreducible(mod)) break;
    }
  }
  impl->modulus = mod.coeffs();

  // Discrete log tables from a primitive element.
  const uint32_t q = impl->q;
  const uint64_t order = q - 1;
  const auto factors = PrimeFactors(order);
  FpPoly gen;
  if (order == 1) {
    gen = FpPoly::Constant(p, 1);
  } else {
    for (uint32_t cand = 2; cand < q; ++cand) {
      FpPoly g = ToPoly(cand, p, e);
      bool primitive = true;
      for (uint64_t r : factors) {
        if (PowMod(g, order / r, mod) == FpPoly::Constant(p, 1)) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = std::move(g);
        break;
      }
    }
  }
  impl->exp.resize(2 * order);
  impl->log.assign(q, 0);
  FpPoly cur = FpPoly::Constant(p, 1);
  for (uint64_t k = 0; k < order; ++k) {
    const uint32_t v = FromPoly(cur, impl->pow_p);
    impl->exp[k] = v;
    impl->exp[k + order] = v;
    impl->log[v] = static_cast<uint32_t>(k);
    cur = MulMod(cur, gen, mod);
  }

  impl->basis.reserve(e);
  for (int k = 0; k < e; ++k) impl->basis.push_back({impl->pow_p[k], 0});
  impl->coord_from_digits = FpMatrix::Identity(p, e);
  impl->id = Fingerprint(*impl);
  for (auto& b : impl->basis) b.field = impl->id;
  return Field(std::move(impl));
}

Field Field::WithBasis(std::vector<FqElem> basis) const {
  Enforce(static_cast<int>(basis.size()) == e(), Errc::kDegreeMismatch,
          "basis must have e elements");
  FpMatrix digits(p(), e(), e());
  for (int j = 0; j < e(); ++j) {
    const auto d = Digits(basis[j]);
    for (int r = 0; r < e(); ++r) digits(r, j) = d[r];
  }
  auto inv = digits.Inverse();
  Enforce(inv.has_value(), Errc::kSingularSystem, "basis is not linearly independent");

  auto impl = std::make_shared<Impl>(*impl_);
  impl->coord_from_digits = *inv;
  impl->default_basis = digits == FpMatrix::Identity(p(), e());
  impl->basis = std::move(basis);
  impl->id = Fingerprint(*impl);
  for (auto& b : impl->basis) b.field = impl->id;
  return Field(std::move(impl));
}

uint32_t Field::Fingerprint(const Impl& impl) {
  // FNV-1a over the defining data.
  uint32_t h = 2166136261u;
  auto mix = [&h](uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 16777619u;
    }
  };
  mix(impl.p);
  mix(static_cast<uint32_t>(impl.e));
  for (uint32_t c : impl.modulus) mix(c);
  for (const auto& b : impl.basis) mix(b.value);
  return h == 0 ? 1 : h;
}

void Field::Check(FqElem x) const {
  if (x.field != impl_->id) {
    Fail(Errc::kContextMismatch, "element does not belong to this field");
  }
}

FqElem Field::FromIndex(uint32_t index) const {
  Enforce(index < q(), Errc::kInvalidArgument, "element index out of range");
  return {index, id()};
}

FqElem Field::FromDigits(std::span<const uint32_t> digits) const {
  Enforce(static_cast<int>(digits.size()) <= e(), Errc::kDegreeMismatch,
          "too many digits for this field");
  uint32_t v = 0;
  for (size_t k = 0; k < digits.size(); ++k) {
    Enforce(digits[k] < p(), Errc::kInvalidArgument, "digit out of range");
    v += digits[k] * impl_->pow_p[k];
  }
  return {v, id()};
}

std::vector<uint32_t> Field::Digits(FqElem x) const {
  Check(x);
  std::vector<uint32_t> d(e());
  uint32_t v = x.value;
  for (int k = 0; k < e(); ++k) {
    d[k] = v % p();
    v /= p();
  }
  return d;
}

std::vector<uint32_t> Field::Coordinates(FqElem x) const {
  auto d = Digits(x);
  if (impl_->default_basis) return d;
  return impl_->coord_from_digits * d;
}

FqElem Field::FromCoordinates(std::span<const uint32_t> coords) const {
  Enforce(static_cast<int>(coords.size()) == e(), Errc::kDegreeMismatch,
          "coordinate vector must have e entries");
  FqElem acc = Zero();
  for (int k = 0; k < e(); ++k) {
    acc = Add(acc, Scale(coords[k] % p(), impl_->basis[k]));
  }
  return acc;
}

uint32_t Field::AddRaw(uint32_t a, uint32_t b) const {
  if (p() == 2) return a ^ b;
  const uint32_t pp = p();
  uint32_t r = 0;
  for (int k = 0; k < e() && (a | b); ++k) {
    r += ((a % pp + b % pp) % pp) * impl_->pow_p[k];
    a /= pp;
    b /= pp;
  }
  return r;
}

FqElem Field::Add(FqElem x, FqElem y) const {
  Check(x);
  Check(y);
  return {AddRaw(x.value, y.value), id()};
}

FqElem Field::Neg(FqElem x) const {
  Check(x);
  if (p() == 2) return x;
  const uint32_t pp = p();
  uint32_t a = x.value, r = 0;
  for (int k = 0; k < e() && a; ++k) {
    r += ((pp - a % pp) % pp) * impl_->pow_p[k];
    a /= pp;
  }
  return {r, id()};
}

FqElem Field::Sub(FqElem x, FqElem y) const { return Add(x, Neg(y)); }

FqElem Field::Mul(FqElem x, FqElem y) const {
  Check(x);
  Check(y);
  if (x.value == 0 || y.value == 0) return Zero();
  return {impl_->exp[impl_->log[x.value] + impl_->log[y.value]], id()};
}

FqElem Field::Scale(uint32_t c, FqElem x) const { return Mul(FromPrime(c), x); }

FqElem Field::Inv(FqElem x) const {
  Check(x);
  Enforce(x.value != 0, Errc::kDivisionByZero, "inverse of zero");
  const uint32_t order = q() - 1;
  return {impl_->exp[(order - impl_->log[x.value]) % order], id()};
}

FqElem Field::Pow(FqElem x, uint64_t n) const {
  Check(x);
  if (n == 0) return One();
  if (x.value == 0) return Zero();
  const uint64_t order = q() - 1;
  return {impl_->exp[(uint64_t{impl_->log[x.value]} * (n % order)) % order], id()};
}

FqElem Field::Frobenius(FqElem x, int64_t s) const {
  Check(x);
  int64_t k = s % e();
  if (k < 0) k += e();
  if (k == 0 || x.value == 0) return x;
  const uint64_t order = q() - 1;
  return {impl_->exp[(uint64_t{impl_->log[x.value]} * impl_->pow_p[k]) % order], id()};
}

FqElem Field::Random(Rng& rng, bool nonzero) const {
  if (nonzero) return {static_cast<uint32_t>(1 + rng.Uniform(q() - 1)), id()};
  return {static_cast<uint32_t>(rng.Uniform(q())), id()};
}

std::vector<FqElem> Field::Elements() const {
  std::vector<FqElem> out;
  out.reserve(q());
  for (uint32_t v = 0; v < q(); ++v) out.push_back({v, id()});
  return out;
}

}  // namespace ore
