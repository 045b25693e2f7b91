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

#include "ore/hfe.h"

#include <algorithm>

#include "ore/error.h"
#include "ore/skew.h"

namespace ore {

uint32_t QuadraticForm::operator()(std::span<const uint32_t> x) const {
  const uint64_t p = quad.p();
  uint64_t acc = constant;
  for (size_t k = 0; k < linear.size(); ++k) acc = (acc + uint64_t{linear[k]} * x[k]) % p;
  for (int k = 0; k < quad.rows(); ++k) {
    for (int l = k; l < quad.cols(); ++l) {
      const uint64_t c = quad(k, l);
      if (c == 0) continue;
      acc = (acc + c * x[k] % p * x[l]) % p;
    }
  }
  return static_cast<uint32_t>(acc);
}

FqElem MultivariateKey::Evaluate(const Field& field, FqElem m) const {
  const auto x = field.Coordinates(m);
  std::vector<uint32_t> y(polys.size());
  for (size_t i = 0; i < polys.size(); ++i) y[i] = polys[i](x);
  return field.FromCoordinates(y);
}

MultivariateKey ToMultivariate(const DOPoly& e) {
  const Field& fld = e.field();
  Enforce(e.IsReduced(), Errc::kInvalidArgument, "multivariate form needs a reduced polynomial");
  const int n = fld.e();
  const uint32_t p = fld.p();

  // frob[i][k] = b_k^(p^i); the x_k are fixed by Frobenius.
  std::vector<std::vector<FqElem>> frob(n, std::vector<FqElem>(n));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) frob[i][k] = fld.Frobenius(fld.basis()[k], i);
  }
  // Field-valued coefficients of each monomial, then split into coordinates.
  FqElem constant = e.constant();
  std::vector<FqElem> linear(n, fld.Zero());
  std::vector<std::vector<FqElem>> quad(n, std::vector<FqElem>(n, fld.Zero()));
  for (int i = 0; i <= e.lin().TopIndex(); ++i) {
    const FqElem c = e.lin().coeffs()[i];
    for (int k = 0; k < n; ++k) linear[k] = fld.Add(linear[k], fld.Mul(c, frob[i][k]));
  }
  for (const auto& [key, a] : e.quad()) {
    for (int k = 0; k < n; ++k) {
      const FqElem ak = fld.Mul(a, frob[key.first][k]);
      for (int l = 0; l < n; ++l) {
        const FqElem c = fld.Mul(ak, frob[key.second][l]);
        const int lo = std::min(k, l), hi = std::max(k, l);
        if (lo == hi && p == 2) {
          linear[lo] = fld.Add(linear[lo], c);
        } else {
          quad[lo][hi] = fld.Add(quad[lo][hi], c);
        }
      }
    }
  }

  MultivariateKey key;
  for (int r = 0; r < n; ++r) {
    key.polys.push_back({0, FpVector(n, 0), FpMatrix(p, n, n)});
  }
  auto scatter = [&](FqElem c, auto&& put) {
    const auto coords = fld.Coordinates(c);
    for (int r = 0; r < n; ++r) put(key.polys[r], coords[r]);
  };
  scatter(constant, [](QuadraticForm& f, uint32_t v) { f.constant = v; });
  for (int k = 0; k < n; ++k) {
    scatter(linear[k], [k](QuadraticForm& f, uint32_t v) { f.linear[k] = v; });
    for (int l = k; l < n; ++l) {
      scatter(quad[k][l], [k, l](QuadraticForm& f, uint32_t v) { f.quad(k, l) = v; });
    }
  }
  return key;
}

uint64_t DefaultDegreeBound(const Field& field) { return PowSaturating(field.p(), 4); }

HfeKeyPair MakeKeyPair(LinPoly s, DOPoly d, LinPoly t, uint64_t bound) {
  Enforce(d.Degree() <= bound, Errc::kInvalidArgument, "D exceeds the degree bound");
  LinPoly s_inv = Inverse(s);
  LinPoly t_inv = Inverse(t);
  DOPoly e = Reduce(ComposeWithLin(s, ComposeWithLin(t, d, ComposeSide::kRight),
                                   ComposeSide::kLeft));
  MultivariateKey mv = ToMultivariate(e);
  return {HfePublicKey{std::move(e), std::move(mv)},
          HfeSecretKey{std::move(s), std::move(d), std::move(t), bound, std::move(s_inv),
                       std::move(t_inv)}};
}

LinPoly RandomPermutationLinPoly(const Field& field, Rng& rng) {
  while (true) {
    std::vector<FqElem> c;
    for (int i = 0; i < field.e(); ++i) c.push_back(field.Random(rng));
    LinPoly l(field, 1, std::move(c));
    if (IsPermutation(l)) return l;
  }
}

HfeKeyPair HfeKeygen(const Field& field, uint64_t bound, Rng& rng) {
  const uint64_t p = field.p();
  Enforce(bound >= p * p, Errc::kDegreeBoundTooSmall, "degree bound must be at least p^2");
  std::vector<IndexPair> pairs;
  bool any_quadratic = false;
  for (int i = 0; i < field.e(); ++i) {
    for (int j = i; j < field.e(); ++j) {
      if (PowSaturating(p, i) + PowSaturating(p, j) > bound) continue;
      pairs.emplace_back(i, j);
      any_quadratic |= !(p == 2 && i == j);
    }
  }
  Enforce(any_quadratic, Errc::kDegreeBoundTooSmall, "no quadratic term fits in this field");
  DOPoly d(field);
  do {
    std::map<IndexPair, FqElem> quad;
    for (const auto& key : pairs) quad[key] = field.Random(rng);
    d = DOPoly(field, std::move(quad), LinPoly::Zero(field), field.Zero());
  } while (!d.HasQuadraticTerm());
  LinPoly s = RandomPermutationLinPoly(field, rng);
  LinPoly t = RandomPermutationLinPoly(field, rng);
  return MakeKeyPair(std::move(s), std::move(d), std::move(t), bound);
}

std::vector<FqElem> SolveByExhaustion(const DOPoly& f, FqElem z) {
  std::vector<FqElem> out;
  for (const FqElem x : f.field().Elements()) {
    if (f(x) == z) out.push_back(x);
  }
  return out;
}

std::vector<FqElem> HfeDecrypt(const HfeSecretKey& sec, FqElem y) {
  const FqElem z = sec.s_inv(y);
  std::vector<FqElem> out;
  for (const FqElem m1 : SolveByExhaustion(sec.d, z)) out.push_back(sec.t_inv(m1));
  std::sort(out.begin(), out.end(), [](FqElem a, FqElem b) { return a.value < b.value; });
  return out;
}

std::vector<FqElem> DecryptWithFactor(const LinPoly& l, const DOPoly& f, FqElem y) {
  auto out = SolveByExhaustion(f, Inverse(l)(y));
  return out;
}

namespace {

// Coefficient slots of a reduced DO polynomial in canonical order.
struct Slot {
  enum Kind { kPair, kLin, kConst } kind;
  int i = 0;
  int j = 0;
};

std::vector<Slot> ReducedSlots(const Field& fld, uint64_t bound) {
  const uint64_t p = fld.p();
  std::vector<Slot> out;
  for (int i = 0; i < fld.e(); ++i) {
    for (int j = i; j < fld.e(); ++j) {
      if (p == 2 && i == j) continue;
      if (PowSaturating(p, i) + PowSaturating(p, j) > bound) continue;
      out.push_back({Slot::kPair, i, j});
    }
  }
  for (int i = 0; i < fld.e(); ++i) {
    if (PowSaturating(p, i) <= bound) out.push_back({Slot::kLin, i, 0});
  }
  out.push_back({Slot::kConst, 0, 0});
  return out;
}

FqElem SlotValue(const DOPoly& d, const Slot& s) {
  switch (s.kind) {
    case Slot::kPair: {
      auto it = d.quad().find({s.i, s.j});
      return it == d.quad().end() ? d.field().Zero() : it->second;
    }
    case Slot::kLin: return d.lin().Coeff(s.i);
    case Slot::kConst: return d.constant();
  }
  return d.field().Zero();
}

DOPoly FromSlots(const Field& fld, const std::vector<Slot>& slots,
                 const std::vector<FqElem>& values) {
  std::map<IndexPair, FqElem> quad;
  std::vector<FqElem> lin(fld.e(), fld.Zero());
  FqElem constant = fld.Zero();
  for (size_t k = 0; k < slots.size(); ++k) {
    switch (slots[k].kind) {
      case Slot::kPair: quad[{slots[k].i, slots[k].j}] = values[k]; break;
      case Slot::kLin: lin[slots[k].i] = values[k]; break;
      case Slot::kConst: constant = values[k]; break;
    }
  }
  return DOPoly(fld, std::move(quad), LinPoly(fld, 1, std::move(lin)), constant);
}

FpVector Flatten(const DOPoly& d, const std::vector<Slot>& slots) {
  const Field& fld = d.field();
  FpVector out;
  out.reserve(slots.size() * fld.e());
  for (const auto& s : slots) {
    const auto digits = fld.Digits(SlotValue(d, s));
    out.insert(out.end(), digits.begin(), digits.end());
  }
  return out;
}

}  // namespace

std::optional<DOPoly> SolveLeftCofactor(const LinPoly& l, const DOPoly& e, uint64_t bound) {
  const Field& fld = e.field();
  Enforce(!l.IsZero(), Errc::kInvalidArgument, "left factor must be nonzero");
  Enforce(e.IsReduced(), Errc::kInvalidArgument, "target must be reduced");
  const int n = fld.e();
  const auto unknown = ReducedSlots(fld, bound);
  const auto target_slots = ReducedSlots(fld, UINT64_MAX);
  const FpVector target = Flatten(e, target_slots);
  // Anything outside the target slot set would make the system inconsistent;
  // all reduced DO polynomials live inside it.
  FpMatrix a(fld.p(), static_cast<int>(target.size()), static_cast<int>(unknown.size()) * n);
  for (size_t u = 0; u < unknown.size(); ++u) {
    for (int k = 0; k < n; ++k) {
      std::vector<uint32_t> digits(n, 0);
      digits[k] = 1;
      std::vector<FqElem> values(unknown.size(), fld.Zero());
      values[u] = fld.FromDigits(digits);
      const DOPoly image =
          Reduce(ComposeWithLin(l, FromSlots(fld, unknown, values), ComposeSide::kLeft));
      const FpVector col = Flatten(image, target_slots);
      for (size_t r = 0; r < col.size(); ++r) a(int(r), int(u * n + k)) = col[r];
    }
  }
  auto sol = a.Solve(target);
  if (!sol) return std::nullopt;
  std::vector<FqElem> values;
  for (size_t u = 0; u < unknown.size(); ++u) {
    values.push_back(fld.FromDigits(std::span<const uint32_t>(sol->data() + u * n, n)));
  }
  return FromSlots(fld, unknown, values);
}

std::optional<DOPoly> IsLeftFactor(const LinPoly& l, const DOPoly& e, uint64_t bound) {
  Enforce(!l.IsZero(), Errc::kInvalidArgument, "left factor must be nonzero");
  if (IsPermutation(l)) {
    DOPoly f = Reduce(ComposeWithLin(Inverse(l), e, ComposeSide::kLeft));
    if (f.Degree() <= bound) return f;
    return std::nullopt;
  }
  return SolveLeftCofactor(l, e, bound);
}

namespace {

// GCLDF where a zero argument is neutral; nullopt stands for "no polynomial
// yet" (every difference polynomial so far was zero).
std::optional<LinPoly> Refine(const std::optional<LinPoly>& acc, const LinPoly& delta) {
  if (delta.IsZero()) return acc;
  if (!acc) return Gcldf(delta, delta).gcldf;
  return Gcldf(*acc, delta).gcldf;
}

}  // namespace

AttackOutcome AttackGcldf(const DOPoly& e, uint64_t bound, Rng& rng, int max_rounds) {
  Enforce(max_rounds >= 1, Errc::kInvalidArgument, "max_rounds must be >= 1");
  const Field& fld = e.field();
  const DOPoly target = e.IsReduced() ? e : Reduce(e);
  // Nonzero elements not drawn yet.
  std::vector<uint32_t> pool(fld.q() - 1);
  for (uint32_t v = 1; v < fld.q(); ++v) pool[v - 1] = v;
  auto draw = [&]() {
    const size_t k = rng.Uniform(pool.size());
    const FqElem a = fld.FromIndex(pool[k]);
    pool[k] = pool.back();
    pool.pop_back();
    return a;
  };
  auto delta = [&](FqElem a) { return *Delta(target, a).linear; };

  if (pool.size() < 2) return AttackFailed{0};
  const FqElem a1 = draw();
  const FqElem a2 = draw();
  std::optional<LinPoly> l = Refine(Refine(std::nullopt, delta(a1)), delta(a2));
  int rounds = 1;
  while (true) {
    if (l && IsPermutation(*l)) {
      if (auto f = IsLeftFactor(*l, target, bound)) {
        return AttackSuccess{*l, std::move(*f), rounds};
      }
    }
    if (rounds >= max_rounds || pool.empty()) return AttackFailed{rounds};
    l = Refine(l, delta(draw()));
    ++rounds;
  }
}

}  // namespace ore
