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

#include "ore/dopoly.h"

#include <algorithm>
#include <functional>
#include <vector>

#include "ore/error.h"
#include "ore/fp_poly.h"

namespace ore {

uint64_t PowSaturating(uint64_t p, uint64_t k) {
  uint64_t r = 1;
  for (uint64_t i = 0; i < k; ++i) {
    if (r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

namespace {

uint64_t AddSaturating(uint64_t a, uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::vector<uint32_t> BaseDigits(uint64_t k, uint32_t p) {
  std::vector<uint32_t> d;
  while (k > 0) {
    d.push_back(static_cast<uint32_t>(k % p));
    k /= p;
  }
  return d;
}

// Index i with m == p^i, or -1.
int PowerOfPIndex(uint64_t m, uint32_t p) {
  if (m == 0) return -1;
  int i = 0;
  while (m % p == 0) {
    m /= p;
    ++i;
  }
  return m == 1 ? i : -1;
}

// C(n, r) mod p for 0 <= r <= n < p.
uint32_t SmallBinomial(uint32_t n, uint32_t r, uint32_t p) {
  uint64_t num = 1, den = 1;
  for (uint32_t i = 0; i < r; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return static_cast<uint32_t>(num * InvModP(static_cast<uint32_t>(den), p) % p);
}

void AddTerm(std::map<uint64_t, FqElem>& terms, const Field& f, uint64_t k, FqElem c) {
  auto [it, inserted] = terms.emplace(k, c);
  if (!inserted) it->second = f.Add(it->second, c);
  if (it->second.value == 0) terms.erase(it);
}

void AddPair(std::map<IndexPair, FqElem>& quad, const Field& f, int i, int j, FqElem c) {
  if (c.value == 0) return;
  IndexPair key{std::min(i, j), std::max(i, j)};
  auto [it, inserted] = quad.emplace(key, c);
  if (!inserted) it->second = f.Add(it->second, c);
  if (it->second.value == 0) quad.erase(it);
}

LinPoly AddLinTerm(const LinPoly& l, int index, FqElem c) {
  return l + LinPoly::Monomial(l.field(), 1, index, c);
}

}  // namespace

UniPoly::UniPoly(Field field, std::map<uint64_t, FqElem> terms)
    : field_(std::move(field)) {
  for (const auto& [k, c] : terms) {
    field_.Check(c);
    if (c.value != 0) terms_.emplace(k, c);
  }
}

FqElem UniPoly::operator()(FqElem x) const {
  FqElem acc = field_.Zero();
  for (const auto& [k, c] : terms_) acc = field_.Add(acc, field_.Mul(c, field_.Pow(x, k)));
  return acc;
}

DOPoly::DOPoly(Field field, std::map<IndexPair, FqElem> quad, LinPoly lin, FqElem constant)
    : field_(std::move(field)), lin_(lin.AsPPolynomial()), constant_(constant) {
  Enforce(lin_.field() == field_, Errc::kContextMismatch, "additive part over another field");
  field_.Check(constant_);
  for (const auto& [key, c] : quad) {
    field_.Check(c);
    Enforce(key.first >= 0 && key.second >= 0, Errc::kShapeViolation, "negative index");
    if (field_.p() == 2 && key.first == key.second) {
      lin_ = AddLinTerm(lin_, key.first + 1, c);
    } else {
      AddPair(quad_, field_, key.first, key.second, c);
    }
  }
}

FqElem DOPoly::operator()(FqElem x) const {
  FqElem acc = field_.Add(lin_(x), constant_);
  for (const auto& [key, c] : quad_) {
    const FqElem m = field_.Mul(field_.Frobenius(x, key.first), field_.Frobenius(x, key.second));
    acc = field_.Add(acc, field_.Mul(c, m));
  }
  return acc;
}

uint64_t DOPoly::Degree() const {
  const uint64_t p = field_.p();
  uint64_t deg = 0;
  for (const auto& [key, c] : quad_) {
    deg = std::max(deg, AddSaturating(PowSaturating(p, key.first), PowSaturating(p, key.second)));
  }
  if (!lin_.IsZero()) deg = std::max(deg, PowSaturating(p, lin_.TopIndex()));
  return deg;
}

size_t DOPoly::TermCount() const {
  size_t n = quad_.size() + (constant_.value != 0 ? 1 : 0);
  for (const auto& c : lin_.coeffs()) n += c.value != 0 ? 1 : 0;
  return n;
}

bool DOPoly::IsReduced() const {
  const int e = field_.e();
  for (const auto& [key, c] : quad_) {
    if (key.second >= e) return false;
  }
  return lin_.TopIndex() < e;
}

DOPoly DOPoly::operator+(const DOPoly& o) const {
  Enforce(field_ == o.field_, Errc::kContextMismatch, "polynomials over different fields");
  std::map<IndexPair, FqElem> quad = quad_;
  for (const auto& [key, c] : o.quad_) AddPair(quad, field_, key.first, key.second, c);
  return DOPoly(field_, std::move(quad), lin_ + o.lin_, field_.Add(constant_, o.constant_));
}

UniPoly DOPoly::ToUniPoly() const {
  const uint64_t p = field_.p();
  std::map<uint64_t, FqElem> terms;
  auto exponent = [&](uint64_t k) {
    Enforce(k != UINT64_MAX, Errc::kTooLarge, "exponent does not fit in 64 bits");
    return k;
  };
  for (const auto& [key, c] : quad_) {
    AddTerm(terms, field_,
            exponent(AddSaturating(PowSaturating(p, key.first), PowSaturating(p, key.second))), c);
  }
  for (int i = 0; i <= lin_.TopIndex(); ++i) {
    AddTerm(terms, field_, exponent(PowSaturating(p, i)), lin_.coeffs()[i]);
  }
  AddTerm(terms, field_, 0, constant_);
  return UniPoly(field_, std::move(terms));
}

std::optional<DOPoly> DOPoly::FromUniPoly(const UniPoly& f) {
  const Field& fld = f.field();
  const uint32_t p = fld.p();
  std::map<IndexPair, FqElem> quad;
  LinPoly lin = LinPoly::Zero(fld);
  FqElem constant = fld.Zero();
  for (const auto& [k, c] : f.terms()) {
    if (k == 0) {
      constant = c;
      continue;
    }
    const auto digits = BaseDigits(k, p);
    std::vector<int> ones;
    int twos = -1;
    uint32_t sum = 0;
    for (size_t i = 0; i < digits.size(); ++i) {
      sum += digits[i];
      if (digits[i] == 1) ones.push_back(static_cast<int>(i));
      if (digits[i] == 2) twos = static_cast<int>(i);
    }
    if (sum == 1) {
      lin = AddLinTerm(lin, ones[0], c);
    } else if (sum == 2 && ones.size() == 2) {
      AddPair(quad, fld, ones[0], ones[1], c);
    } else if (sum == 2 && twos >= 0) {
      AddPair(quad, fld, twos, twos, c);
    } else {
      return std::nullopt;
    }
  }
  return DOPoly(fld, std::move(quad), std::move(lin), constant);
}

namespace {

DeltaResult SplitDeltaTerms(const Field& fld, const std::map<uint64_t, FqElem>& terms,
                            FqElem constant, FqElem a) {
  DeltaResult out{std::nullopt, {}, constant, a.value == 0};
  std::vector<FqElem> lin;
  for (const auto& [m, c] : terms) {
    const int idx = PowerOfPIndex(m, fld.p());
    if (idx < 0) {
      out.offending.emplace(m, c);
      continue;
    }
    if (static_cast<int>(lin.size()) <= idx) lin.resize(idx + 1, fld.Zero());
    lin[idx] = fld.Add(lin[idx], c);
  }
  if (out.offending.empty()) out.linear = LinPoly(fld, 1, std::move(lin));
  return out;
}

}  // namespace

DeltaResult Delta(const UniPoly& f, FqElem a) {
  const Field& fld = f.field();
  fld.Check(a);
  const uint32_t p = fld.p();
  std::map<uint64_t, FqElem> terms;
  FqElem constant = fld.Zero();
  for (const auto& [k, c] : f.terms()) {
    if (k == 0) {
      constant = fld.Neg(c);
      continue;
    }
    // (X + a)^k = sum over base-p digitwise m <= k of C(k, m) a^(k-m) X^m
    // (Lucas); the m = k and m = 0 terms cancel against -f(X) and -f(a).
    const auto kd = BaseDigits(k, p);
    std::vector<uint64_t> place(kd.size(), 1);
    for (size_t i = 1; i < kd.size(); ++i) place[i] = place[i - 1] * p;
    std::function<void(size_t, uint64_t, uint32_t)> walk = [&](size_t pos, uint64_t m,
                                                               uint32_t binom) {
      if (pos == kd.size()) {
        if (m == 0 || m == k || binom == 0) return;
        const FqElem coef = fld.Mul(fld.Scale(binom, c), fld.Pow(a, k - m));
        AddTerm(terms, fld, m, coef);
        return;
      }
      for (uint32_t d = 0; d <= kd[pos]; ++d) {
        const uint32_t b = static_cast<uint32_t>(
            uint64_t{binom} * SmallBinomial(kd[pos], d, p) % p);
        walk(pos + 1, m + d * place[pos], b);
      }
    };
    walk(0, 0, 1);
  }
  return SplitDeltaTerms(fld, terms, constant, a);
}

DeltaResult Delta(const DOPoly& f, FqElem a) {
  const Field& fld = f.field();
  fld.Check(a);
  // a_ij ((X + a)^(p^i) (X + a)^(p^j) - X^(p^i+p^j) - a^(p^i+p^j))
  //   = a_ij (a^(p^j) X^(p^i) + a^(p^i) X^(p^j)).
  std::vector<FqElem> lin;
  auto add = [&](int idx, FqElem c) {
    if (static_cast<int>(lin.size()) <= idx) lin.resize(idx + 1, fld.Zero());
    lin[idx] = fld.Add(lin[idx], c);
  };
  for (const auto& [key, c] : f.quad()) {
    add(key.first, fld.Mul(c, fld.Frobenius(a, key.second)));
    add(key.second, fld.Mul(c, fld.Frobenius(a, key.first)));
  }
  DeltaResult out{LinPoly(fld, 1, std::move(lin)), {}, fld.Neg(f.constant()), a.value == 0};
  return out;
}

DOCheckResult CheckDO(const UniPoly& f) {
  const Field& fld = f.field();
  Enforce(f.Degree() < static_cast<int64_t>(fld.q()), Errc::kDegreeTooLarge,
          "characterization needs deg f < q");
  DOCheckResult out;
  out.structural = DOPoly::FromUniPoly(f).has_value();
  out.holds = true;
  for (uint32_t v = 1; v < fld.q(); ++v) {
    const FqElem a = fld.FromIndex(v);
    if (!Delta(f, a).IsLinear()) {
      out.holds = false;
      out.witness = a;
      break;
    }
  }
  return out;
}

DOPoly ComposeWithLin(const LinPoly& l, const DOPoly& d, ComposeSide side) {
  Enforce(l.field() == d.field(), Errc::kContextMismatch, "polynomials over different fields");
  const Field& fld = d.field();
  const LinPoly lp = l.AsPPolynomial();
  std::map<IndexPair, FqElem> quad;
  if (side == ComposeSide::kLeft) {
    // sum_k l_k (sum a_ij X^(p^i+p^j))^(p^k)
    for (const auto& [key, a] : d.quad()) {
      for (int k = 0; k <= lp.TopIndex(); ++k) {
        const FqElem lk = lp.coeffs()[k];
        if (lk.value == 0) continue;
        AddPair(quad, fld, key.first + k, key.second + k, fld.Mul(lk, fld.Frobenius(a, k)));
      }
    }
    return DOPoly(fld, std::move(quad), Compose(lp, d.lin()), lp(d.constant()));
  }
  // a_ij L(X)^(p^i) L(X)^(p^j)
  for (const auto& [key, a] : d.quad()) {
    const auto [i, j] = key;
    for (int u = 0; u <= lp.TopIndex(); ++u) {
      const FqElem lu = lp.coeffs()[u];
      if (lu.value == 0) continue;
      const FqElem left = fld.Mul(a, fld.Frobenius(lu, i));
      for (int v = 0; v <= lp.TopIndex(); ++v) {
        const FqElem lv = lp.coeffs()[v];
        if (lv.value == 0) continue;
        AddPair(quad, fld, u + i, v + j, fld.Mul(left, fld.Frobenius(lv, j)));
      }
    }
  }
  return DOPoly(fld, std::move(quad), Compose(d.lin(), lp), d.constant());
}

DOPoly Reduce(const DOPoly& d) {
  const Field& fld = d.field();
  const int e = fld.e();
  std::map<IndexPair, FqElem> quad;
  for (const auto& [key, c] : d.quad()) {
    AddPair(quad, fld, key.first % e, key.second % e, c);
  }
  // The constructor moves characteristic-2 diagonal pairs into the additive
  // part; reduce that part afterwards so the result is fully folded.
  DOPoly folded(fld, std::move(quad), Reduce(d.lin()), d.constant());
  return DOPoly(fld, folded.quad(), Reduce(folded.lin()), folded.constant());
}

}  // namespace ore
