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

#include "ore/fp_poly.h"

#include <algorithm>
#include <tuple>

#include "ore/error.h"

namespace ore {

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

uint32_t InvModP(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  Enforce(nr != 0, Errc::kDivisionByZero, "inverse of 0 mod p");
  while (nr != 0) {
    int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

FpPoly::FpPoly(uint32_t p, std::vector<uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  Trim();
}

FpPoly FpPoly::Monomial(uint32_t p, int degree, uint32_t coeff) {
  std::vector<uint32_t> c(degree + 1, 0);
  c[degree] = coeff;
  return FpPoly(p, std::move(c));
}

void FpPoly::Trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = ((*this)[i] + o[i]) % p_;
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = ((*this)[i] + p_ - o[i]) % p_;
  }
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (IsZero() || o.IsZero()) return FpPoly(p_, {});
  std::vector<uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + uint64_t{c_[i]} * o.c_[j]) % p_;
    }
  }
  return FpPoly(p_, std::vector<uint32_t>(acc.begin(), acc.end()));
}

FpPoly FpPoly::Scale(uint32_t k) const {
  std::vector<uint32_t> r(c_);
  for (auto& x : r) x = static_cast<uint32_t>(uint64_t{x} * k % p_);
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::MakeMonic() const {
  if (IsZero()) return *this;
  return Scale(InvModP(Lead(), p_));
}

std::pair<FpPoly, FpPoly> FpPoly::DivRem(const FpPoly& d) const {
  Enforce(!d.IsZero(), Errc::kDivisionByZeroPoly, "division by zero polynomial");
  if (Degree() < d.Degree()) return {FpPoly(p_, {}), *this};
  std::vector<uint32_t> r(c_);
  std::vector<uint32_t> q(c_.size() - d.c_.size() + 1, 0);
  const uint32_t inv_lead = InvModP(d.Lead(), p_);
  const int dd = d.Degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    const uint32_t coef = static_cast<uint32_t>(uint64_t{r[k]} * inv_lead % p_);
    if (coef == 0) continue;
    q[k - dd] = coef;
    for (int j = 0; j <= dd; ++j) {
      r[k - dd + j] = static_cast<uint32_t>(
          (r[k - dd + j] + uint64_t{p_ - coef} * d.c_[j]) % p_);
    }
  }
  return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(r))};
}

FpPoly Gcd(FpPoly a, FpPoly b) {
  while (!b.IsZero()) {
    FpPoly r = a.Mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.MakeMonic();
}

FpPoly MulMod(const FpPoly& a, const FpPoly& b, const FpPoly& m) {
  return (a * b).Mod(m);
}

FpPoly PowMod(const FpPoly& base, uint64_t exp, const FpPoly& m) {
  FpPoly result = FpPoly::Constant(m.p(), 1).Mod(m);
  FpPoly b = base.Mod(m);
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, b, m);
    b = MulMod(b, b, m);
    exp >>= 1;
  }
  return result;
}

bool IsIrreducible(const FpPoly& m) {
  const int n = m.Degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const uint32_t p = m.p();
  const FpPoly x = FpPoly::Monomial(p, 1);
  FpPoly xp = x;  // x^(p^k) mod m
  for (int k = 1; k <= n; ++k) {
    xp = PowMod(xp, p, m);
    if (k <= n / 2 && Gcd(xp - x, m).Degree() != 0) return false;
  }
  return (xp - x).Mod(m).IsZero();
}

namespace {

// Advance a base-p counter over coefficients 0..k-1 (constant fastest).
bool NextCandidate(std::vector<uint32_t>& c, int k, uint32_t p) {
  for (int i = 0; i < k; ++i) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<FpFactor> FactorByTrialDivision(const FpPoly& m) {
  Enforce(m.Degree() >= 1 && m.Lead() == 1, Errc::kInvalidArgument,
          "factorization needs a monic polynomial of degree >= 1");
  const uint32_t p = m.p();
  std::vector<FpFactor> out;
  FpPoly rest = m;
  for (int k = 1; 2 * k <= rest.Degree(); ++k) {
    std::vector<uint32_t> c(k + 1, 0);
    c[k] = 1;
    do {
      FpPoly cand(p, c);
      int mult = 0;
      while (true) {
        auto [quo, rem] = rest.DivRem(cand);
        if (!rem.IsZero()) break;
        rest = std::move(quo);
        ++mult;
      }
      if (mult > 0) out.push_back({cand, mult});
      if (2 * k > rest.Degree()) break;
    } while (NextCandidate(c, k, p));
  }
  // No factor of degree <= deg/2 is left, so the remainder is irreducible.
  if (rest.Degree() >= 1) out.push_back({rest, 1});
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor.Degree() != b.factor.Degree()) {
      return a.factor.Degree() < b.factor.Degree();
    }
    const auto& x = a.factor.coeffs();
    const auto& y = b.factor.coeffs();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

}  // namespace ore
