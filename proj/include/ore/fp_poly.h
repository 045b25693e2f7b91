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
#include <utility>
#include <vector>

namespace ore {

bool IsPrime(uint64_t n);

// a^-1 mod p, p prime, a != 0 mod p.
uint32_t InvModP(uint32_t a, uint32_t p);

// Dense univariate polynomial over the prime field F_p, constant term first,
// no trailing zeros. The zero polynomial has no coefficients.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(uint32_t p, std::vector<uint32_t> coeffs);

  static FpPoly Monomial(uint32_t p, int degree, uint32_t coeff = 1);
  static FpPoly Constant(uint32_t p, uint32_t c) { return Monomial(p, 0, c); }

  uint32_t p() const { return p_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  bool IsZero() const { return c_.empty(); }
  int Degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t Lead() const { return c_.empty() ? 0 : c_.back(); }
  uint32_t operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly Scale(uint32_t k) const;
  FpPoly MakeMonic() const;

  // {quotient, remainder}; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> DivRem(const FpPoly& d) const;
  FpPoly Mod(const FpPoly& d) const { return DivRem(d).second; }

  bool operator==(const FpPoly& o) const = default;

 private:
  void Trim();

  uint32_t p_ = 2;
  std::vector<uint32_t> c_;
};

// Monic gcd.
FpPoly Gcd(FpPoly a, FpPoly b);
FpPoly MulMod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly PowMod(const FpPoly& base, uint64_t exp, const FpPoly& m);

// x^(p^k) - x tests: gcd(x^(p^k) - x, m) == 1 for k <= deg/2, and
// x^(p^deg) == x mod m.
bool IsIrreducible(const FpPoly& m);

struct FpFactor {
  FpPoly factor;
  int multiplicity;
};

// Complete factorization of a monic polynomial by trial division against
// monic candidates enumerated lexicographically by degree. Only suitable
// for small p and degree.
std::vector<FpFactor> FactorByTrialDivision(const FpPoly& m);

}  // namespace ore
