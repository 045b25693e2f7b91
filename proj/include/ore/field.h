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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ore/fp_matrix.h"
#include "ore/random.h"

namespace ore {

// Largest field order the library will build tables for.
inline constexpr uint64_t kMaxFieldOrder = uint64_t{1} << 20;

// Element of GF(p^e). `value` packs the digits in the power basis
// 1, t, ..., t^(e-1) as sum(digit_k * p^k); `field` is the fingerprint of
// the owning Field. A default-constructed element belongs to no field.
struct FqElem {
  uint32_t value = 0;
  uint32_t field = 0;

  bool operator==(const FqElem&) const = default;
};

// Immutable description of GF(p^e): prime, degree, irreducible modulus
// (constant term first) and an ordered F_p-basis. Copies share state.
//
// Multiplication goes through discrete log tables built at construction.
// Every operation checks that its operands carry this field's fingerprint
// and throws ContextMismatch otherwise. Two fields built from the same
// (p, e, modulus, basis) share a fingerprint and are interchangeable.
class Field {
 public:
  // Validates p and the modulus. Without a modulus, the first monic
  // irreducible of degree e is taken, counting coefficient vectors upward
  // with the constant term varying fastest.
  static Field Create(uint32_t p, int e,
                      std::optional<std::vector<uint32_t>> modulus = std::nullopt);

  // Same field with a different ordered basis; the basis must be
  // linearly independent over F_p.
  Field WithBasis(std::vector<FqElem> basis) const;

  uint32_t p() const { return impl_->p; }
  int e() const { return impl_->e; }
  uint32_t q() const { return impl_->q; }
  uint32_t id() const { return impl_->id; }
  const std::vector<uint32_t>& modulus() const { return impl_->modulus; }
  const std::vector<FqElem>& basis() const { return impl_->basis; }
  bool HasDefaultBasis() const { return impl_->default_basis; }

  bool operator==(const Field& o) const { return id() == o.id(); }

  FqElem Zero() const { return {0, id()}; }
  FqElem One() const { return {1, id()}; }
  // Image of t, the root of the modulus.
  FqElem Gen() const { return FromDigits(std::vector<uint32_t>{0, 1}); }
  // c * 1 for c in F_p.
  FqElem FromPrime(uint64_t c) const { return {static_cast<uint32_t>(c % p()), id()}; }
  // Element whose packed power-basis value is `index` (0 <= index < q).
  FqElem FromIndex(uint32_t index) const;
  FqElem FromDigits(std::span<const uint32_t> digits) const;
  std::vector<uint32_t> Digits(FqElem x) const;

  // Coordinates relative to basis(), and back.
  std::vector<uint32_t> Coordinates(FqElem x) const;
  FqElem FromCoordinates(std::span<const uint32_t> coords) const;

  FqElem Add(FqElem x, FqElem y) const;
  FqElem Sub(FqElem x, FqElem y) const;
  FqElem Neg(FqElem x) const;
  FqElem Mul(FqElem x, FqElem y) const;
  // F_p scalar times x.
  FqElem Scale(uint32_t c, FqElem x) const;
  FqElem Inv(FqElem x) const;
  FqElem Div(FqElem x, FqElem y) const { return Mul(x, Inv(y)); }
  FqElem Pow(FqElem x, uint64_t n) const;
  // x^(p^s). Negative s applies the inverse automorphism.
  FqElem Frobenius(FqElem x, int64_t s) const;

  bool IsZero(FqElem x) const { Check(x); return x.value == 0; }
  bool InPrimeField(FqElem x) const { Check(x); return x.value < p(); }

  FqElem Random(Rng& rng, bool nonzero = false) const;
  // All q elements in index order.
  std::vector<FqElem> Elements() const;

  void Check(FqElem x) const;

 private:
  struct Impl {
    uint32_t p = 2;
    int e = 1;
    uint32_t q = 2;
    uint32_t id = 0;
    std::vector<uint32_t> modulus;
    std::vector<FqElem> basis;
    bool default_basis = true;
    FpMatrix coord_from_digits;  // inverse of the basis digit matrix
    std::vector<uint32_t> pow_p;  // p^k, k <= e
    std::vector<uint32_t> exp;    // 2(q-1) entries
    std::vector<uint32_t> log;    // q entries, log[0] unused
  };

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static uint32_t Fingerprint(const Impl& impl);

  uint32_t AddRaw(uint32_t a, uint32_t b) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace ore
