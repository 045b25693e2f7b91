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

// Slow reference implementations used to check the library. Nothing here
// calls library arithmetic: field products are schoolbook digit-polynomial
// products reduced by the modulus, powers are repeated products, and skew
// products follow the defining rule term by term. Library values cross the
// boundary only as digit vectors.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ore/dopoly.h"
#include "ore/field.h"
#include "ore/linpoly.h"
#include "ore/skew.h"

namespace ore::oracle {

using Digits = std::vector<uint32_t>;

class NaiveField {
 public:
  explicit NaiveField(const Field& f) : f_(f), p_(f.p()), e_(f.e()), mod_(f.modulus()) {}

  const Field& field() const { return f_; }

  Digits Of(FqElem x) const { return f_.Digits(x); }
  FqElem To(const Digits& d) const { return f_.FromDigits(d); }

  Digits Zero() const { return Digits(e_, 0); }
  Digits One() const {
    Digits d(e_, 0);
    d[0] = 1;
    return d;
  }

  Digits Add(const Digits& a, const Digits& b) const {
    Digits r(e_);
    for (int i = 0; i < e_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
  }
  Digits Neg(const Digits& a) const {
    Digits r(e_);
    for (int i = 0; i < e_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
  }
  Digits Sub(const Digits& a, const Digits& b) const { return Add(a, Neg(b)); }

  Digits Mul(const Digits& a, const Digits& b) const {
    std::vector<uint64_t> prod(2 * e_, 0);
    for (int i = 0; i < e_; ++i) {
      for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + uint64_t{a[i]} * b[j]) % p_;
    }
    // Reduce by the monic modulus from the top down.
    for (int k = 2 * e_ - 1; k >= e_; --k) {
      const uint64_t c = prod[k];
      if (c == 0) continue;
      for (int i = 0; i <= e_; ++i) {
        prod[k - e_ + i] = (prod[k - e_ + i] + (p_ - c) * mod_[i]) % p_;
      }
    }
    Digits r(e_);
    for (int i = 0; i < e_; ++i) r[i] = static_cast<uint32_t>(prod[i]);
    return r;
  }

  Digits Pow(const Digits& a, uint64_t n) const {
    Digits r = One();
    for (uint64_t i = 0; i < n; ++i) r = Mul(r, a);
    return r;
  }

  // x^(p^k) as k successive p-th powers.
  Digits Frob(const Digits& a, int k) const {
    Digits r = a;
    for (int i = 0; i < k; ++i) r = Pow(r, p_);
    return r;
  }

  // Inverse of the automorphism x -> x^(p^s), by search.
  Digits FrobInv(const Digits& a, int s) const {
    for (uint32_t idx = 0; idx < f_.q(); ++idx) {
      const Digits c = Of(f_.FromIndex(idx));
      if (Frob(c, s) == a) return c;
    }
    return Zero();
  }

  Digits Inv(const Digits& a) const {
    for (uint32_t idx = 1; idx < f_.q(); ++idx) {
      const Digits c = Of(f_.FromIndex(idx));
      if (Mul(a, c) == One()) return c;
    }
    return Zero();
  }

  // FqElem convenience wrappers.
  FqElem Mul(FqElem a, FqElem b) const { return To(Mul(Of(a), Of(b))); }
  FqElem Add(FqElem a, FqElem b) const { return To(Add(Of(a), Of(b))); }
  FqElem Pow(FqElem a, uint64_t n) const { return To(Pow(Of(a), n)); }
  FqElem Frob(FqElem a, int k) const { return To(Frob(Of(a), k)); }

 private:
  Field f_;
  uint32_t p_;
  int e_;
  Digits mod_;
};

// sum a_i x^(p^(s i)).
inline FqElem EvalLin(const NaiveField& nf, const LinPoly& l, FqElem x) {
  Digits acc = nf.Zero();
  const Digits xd = nf.Of(x);
  for (int i = 0; i <= l.TopIndex(); ++i) {
    acc = nf.Add(acc, nf.Mul(nf.Of(l.coeffs()[i]), nf.Frob(xd, l.s() * i)));
  }
  return nf.To(acc);
}

inline FqElem EvalDO(const NaiveField& nf, const DOPoly& d, FqElem x) {
  const Digits xd = nf.Of(x);
  Digits acc = nf.Of(d.constant());
  for (const auto& [key, c] : d.quad()) {
    acc = nf.Add(acc, nf.Mul(nf.Of(c), nf.Mul(nf.Frob(xd, key.first), nf.Frob(xd, key.second))));
  }
  return nf.Add(nf.To(acc), EvalLin(nf, d.lin(), x));
}

inline FqElem EvalUni(const NaiveField& nf, const UniPoly& f, FqElem x) {
  Digits acc = nf.Zero();
  for (const auto& [k, c] : f.terms()) acc = nf.Add(acc, nf.Mul(nf.Of(c), nf.Pow(nf.Of(x), k)));
  return nf.To(acc);
}

// sum_{i,j} c_i sigma^i(d_j) Y^(i+j).
inline SkewPoly SkewMul(const NaiveField& nf, const SkewPoly& f, const SkewPoly& g) {
  if (f.IsZero() || g.IsZero()) return SkewPoly::Zero(f.field(), f.s());
  std::vector<Digits> out(f.Degree() + g.Degree() + 1, nf.Zero());
  for (int i = 0; i <= f.Degree(); ++i) {
    for (int j = 0; j <= g.Degree(); ++j) {
      const Digits t = nf.Mul(nf.Of(f.coeffs()[i]), nf.Frob(nf.Of(g.coeffs()[j]), f.s() * i));
      out[i + j] = nf.Add(out[i + j], t);
    }
  }
  std::vector<FqElem> c;
  for (const auto& d : out) c.push_back(nf.To(d));
  return SkewPoly(f.field(), f.s(), std::move(c));
}

inline SkewPoly SkewAdd(const NaiveField& nf, const SkewPoly& f, const SkewPoly& g) {
  const int n = std::max(f.Degree(), g.Degree());
  std::vector<FqElem> c;
  for (int i = 0; i <= n; ++i) c.push_back(nf.Add(f.Coeff(i), g.Coeff(i)));
  return SkewPoly(f.field(), f.s(), std::move(c));
}

// All polynomials with coefficients c_0..c_deg, the top one ranging over
// nonzero values (or fixed to 1 when monic), in lexicographic digit order.
inline std::vector<SkewPoly> AllSkew(const Field& f, int s, int deg, bool monic) {
  std::vector<SkewPoly> out;
  const uint64_t q = f.q();
  uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= q;
  const uint64_t tops = monic ? 1 : q - 1;
  for (uint64_t t = 0; t < tops; ++t) {
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FqElem> c;
      uint64_t v = idx;
      for (int i = 0; i < deg; ++i) {
        c.push_back(f.FromIndex(static_cast<uint32_t>(v % q)));
        v /= q;
      }
      c.push_back(monic ? f.One() : f.FromIndex(static_cast<uint32_t>(t + 1)));
      out.emplace_back(f, s, std::move(c));
    }
  }
  return out;
}

// Packs coefficients into an integer key (lowest coefficient least significant).
inline uint64_t Key(const SkewPoly& f) {
  uint64_t k = 0;
  for (int i = f.Degree(); i >= 0; --i) k = k * f.field().q() + f.coeffs()[i].value;
  return k * 64 + static_cast<uint64_t>(f.Degree() + 1);
}

// Every product g * h (left) or h * g (right) with deg <= max_deg, for all
// nonzero h. Membership of f in the set means g divides f on that side.
inline std::set<uint64_t> Multiples(const NaiveField& nf, const SkewPoly& g, int max_deg,
                                    Side side) {
  std::set<uint64_t> out;
  for (int k = 0; k + g.Degree() <= max_deg; ++k) {
    for (const auto& h : AllSkew(g.field(), g.s(), k, false)) {
      out.insert(Key(side == Side::kLeft ? SkewMul(nf, g, h) : SkewMul(nf, h, g)));
    }
  }
  return out;
}

// Does f = h * g for some h? Long division written from the defining rule
// with reference arithmetic; a claimed quotient is confirmed by multiplying
// back.
inline bool RightDivides(const NaiveField& nf, const SkewPoly& g, const SkewPoly& f) {
  if (f.IsZero()) return true;
  const int n = g.Degree();
  if (f.Degree() < n) return false;
  const int s = f.s();
  std::vector<Digits> r;
  for (FqElem c : f.coeffs()) r.push_back(nf.Of(c));
  std::vector<FqElem> h(f.Degree() - n + 1, f.field().Zero());
  for (int top = f.Degree(); top >= n; --top) {
    if (r[top] == nf.Zero()) continue;
    const int k = top - n;
    // (c Y^k) g has top coefficient c sigma^k(g_n).
    const Digits c = nf.Mul(r[top], nf.Inv(nf.Frob(nf.Of(g.Lead()), s * k)));
    h[k] = nf.To(c);
    for (int j = 0; j <= n; ++j) {
      r[k + j] = nf.Sub(r[k + j], nf.Mul(c, nf.Frob(nf.Of(g.coeffs()[j]), s * k)));
    }
  }
  for (const auto& d : r) {
    if (d != nf.Zero()) return false;
  }
  return SkewMul(nf, SkewPoly(f.field(), s, h), g) == f;
}

// Monic right factors of f with degree strictly between 0 and deg f.
inline bool HasProperRightFactor(const NaiveField& nf, const SkewPoly& f) {
  for (int d = 1; d < f.Degree(); ++d) {
    for (const auto& g : AllSkew(f.field(), f.s(), d, true)) {
      if (RightDivides(nf, g, f)) return true;
    }
  }
  return false;
}

// Number of irreducible factors of a monic f by recursive brute force; the
// degree multiset goes to `degrees`.
inline void BruteFactorDegrees(const NaiveField& nf, const SkewPoly& f, std::vector<int>& degrees) {
  for (int d = 1; d < f.Degree(); ++d) {
    for (const auto& g : AllSkew(f.field(), f.s(), d, true)) {
      const int k = f.Degree() - d;
      for (const auto& h : AllSkew(f.field(), f.s(), k, true)) {
        if (SkewMul(nf, h, g) == f) {
          BruteFactorDegrees(nf, h, degrees);
          degrees.push_back(d);
          return;
        }
      }
    }
  }
  degrees.push_back(f.Degree());
}

// Truth table of a function F_q -> F_q as packed values.
template <typename F>
std::vector<uint32_t> Table(const Field& field, F&& fn) {
  std::vector<uint32_t> t;
  for (FqElem x : field.Elements()) t.push_back(fn(x).value);
  return t;
}

}  // namespace ore::oracle
