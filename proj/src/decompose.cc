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

#include "ore/decompose.h"

#include <algorithm>
#include <cmath>

#include "ore/error.h"

namespace ore {

EigenRing::EigenRing(const SkewPoly& f) : modulus_(f) {
  Enforce(f.IsMonic() && f.Degree() >= 1, Errc::kInvalidArgument,
          "eigenring needs a monic polynomial of degree >= 1");
  const Field& fld = f.field();
  const int n = f.Degree();
  const int e = fld.e();
  const int unknowns = n * e;

  // Column (i, k) is the image of t^k Y^i under u -> rem_right(f u, f).
  FpMatrix system(fld.p(), unknowns, unknowns);
  std::vector<SkewPoly> units;
  units.reserve(unknowns);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < e; ++k) {
      std::vector<uint32_t> digits(e, 0);
      digits[k] = 1;
      SkewPoly u = SkewPoly::Monomial(fld, f.s(), i, fld.FromDigits(digits));
      const FpVector image = Flatten(RightRem(f * u, f));
      for (int r = 0; r < unknowns; ++r) system(r, i * e + k) = image[r];
      units.push_back(std::move(u));
    }
  }
  for (const auto& v : system.Nullspace()) {
    SkewPoly u = SkewPoly::Zero(fld, f.s());
    for (int c = 0; c < unknowns; ++c) {
      if (v[c] == 0) continue;
      u = u + units[c].ScaleLeft(fld.FromPrime(v[c]));
    }
    basis_.push_back(std::move(u));
  }
}

FpVector EigenRing::Flatten(const SkewPoly& u) const {
  const Field& fld = modulus_.field();
  const int e = fld.e();
  FpVector out(size_t(modulus_.Degree()) * e, 0);
  for (int i = 0; i <= u.Degree(); ++i) {
    const auto d = fld.Digits(u.coeffs()[i]);
    std::copy(d.begin(), d.end(), out.begin() + size_t(i) * e);
  }
  return out;
}

bool EigenRing::Contains(const SkewPoly& u) const {
  if (u.Degree() >= modulus_.Degree()) return false;
  return RightRem(modulus_ * u, modulus_).IsZero();
}

SkewPoly EigenRing::Mul(const SkewPoly& u, const SkewPoly& v) const {
  return RightRem(u * v, modulus_);
}

SkewPoly EigenRing::Combine(const FpVector& coeffs) const {
  const Field& fld = modulus_.field();
  SkewPoly u = SkewPoly::Zero(fld, modulus_.s());
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i] == 0) continue;
    u = u + basis_[i].ScaleLeft(fld.FromPrime(coeffs[i]));
  }
  return u;
}

SkewPoly EigenRing::Evaluate(const FpPoly& g, const SkewPoly& u) const {
  const Field& fld = modulus_.field();
  SkewPoly acc = SkewPoly::Zero(fld, modulus_.s());
  for (int k = g.Degree(); k >= 0; --k) {
    acc = Mul(acc, u) + SkewPoly::Constant(fld, modulus_.s(), fld.FromPrime(g[k]));
  }
  return RightRem(acc, modulus_);
}

FpPoly MinimalPolynomial(const SkewPoly& u, const EigenRing& ring) {
  Enforce(ring.Contains(u), Errc::kNotInRing, "element is not in the eigenring");
  const Field& fld = ring.modulus().field();
  const uint32_t p = fld.p();
  std::vector<FpVector> powers;
  SkewPoly power = RightRem(SkewPoly::One(fld, u.s()), ring.modulus());
  while (true) {
    const FpVector v = ring.Flatten(power);
    if (!powers.empty()) {
      FpMatrix a(p, static_cast<int>(v.size()), static_cast<int>(powers.size()));
      for (size_t c = 0; c < powers.size(); ++c) {
        for (size_t r = 0; r < v.size(); ++r) a(int(r), int(c)) = powers[c][r];
      }
      if (auto sol = a.Solve(v)) {
        // u^k = sum sol_i u^i  =>  m = x^k - sum sol_i x^i.
        std::vector<uint32_t> m(powers.size() + 1, 0);
        for (size_t i = 0; i < powers.size(); ++i) m[i] = (p - (*sol)[i]) % p;
        m.back() = 1;
        return FpPoly(p, std::move(m));
      }
    }
    powers.push_back(v);
    power = ring.Mul(power, u);
  }
}

std::optional<ZeroDivisor> ZeroDivisorFromElement(const SkewPoly& u, const EigenRing& ring) {
  const FpPoly m = MinimalPolynomial(u, ring);
  const auto factors = FactorByTrialDivision(m);
  FpPoly g, h;
  if (factors.size() >= 2) {
    g = FpPoly::Constant(m.p(), 1);
    for (int k = 0; k < factors[0].multiplicity; ++k) g = g * factors[0].factor;
    h = m.DivRem(g).first;
  } else if (factors[0].multiplicity > 1) {
    g = factors[0].factor;
    h = m.DivRem(g).first;
  } else {
    return std::nullopt;
  }
  ZeroDivisor zd{ring.Evaluate(g, u), ring.Evaluate(h, u)};
  // Minimality of m makes both evaluations nonzero.
  Enforce(!zd.divisor.IsZero() && !zd.annihilator.IsZero(), Errc::kShapeViolation,
          "minimal polynomial is not minimal");
  return zd;
}

namespace {

bool IsPrimeScalar(const SkewPoly& u) {
  return u.Degree() <= 0 && u.field().InPrimeField(u.Coeff(0));
}

}  // namespace

ZeroDivisorSearch FindZeroDivisor(const EigenRing& ring, Rng& rng, int max_tries) {
  Enforce(max_tries >= 1, Errc::kInvalidArgument, "max_tries must be >= 1");
  ZeroDivisorSearch out;
  if (ring.dim() <= 1) return out;
  const uint32_t p = ring.modulus().field().p();
  FpVector coeffs(ring.dim());
  while (out.tries_used < max_tries) {
    SkewPoly u = ring.modulus();
    do {
      for (auto& c : coeffs) c = static_cast<uint32_t>(rng.Uniform(p));
      u = ring.Combine(coeffs);
    } while (IsPrimeScalar(u));
    ++out.tries_used;
    if (auto zd = ZeroDivisorFromElement(u, ring)) {
      out.found = std::move(zd);
      break;
    }
  }
  return out;
}

namespace {

bool ExhaustiveFeasible(const SkewPoly& f) {
  const int e = f.field().e();
  if (f.Degree() * e > kExhaustiveThreshold) return false;
  uint64_t total = 0, block = 1;
  for (int k = 1; k < f.Degree(); ++k) {
    block *= f.field().q();
    total += block;
    if (total > kMaxExhaustiveCandidates) return false;
  }
  return true;
}

}  // namespace

SplitOutcome SplitOnce(const SkewPoly& f, Rng& rng, int max_tries) {
  Enforce(f.IsMonic() && f.Degree() >= 2, Errc::kInvalidArgument,
          "split needs a monic polynomial of degree >= 2");
  const EigenRing ring(f);
  const auto search = FindZeroDivisor(ring, rng, max_tries);
  if (search.found) {
    SkewPoly right = Gcd(search.found->divisor, f, Side::kRight);
    auto div = Divide(f, right, Side::kRight);
    Enforce(div.remainder.IsZero() && right.Degree() >= 1 && right.Degree() < f.Degree(),
            Errc::kShapeViolation, "zero divisor gave an improper right factor");
    return Split{std::move(div.quotient), std::move(right), search.tries_used};
  }
  if (ExhaustiveFeasible(f)) {
    if (auto right = FindRightFactorExhaustive(f)) {
      auto div = Divide(f, *right, Side::kRight);
      return Split{std::move(div.quotient), std::move(*right), search.tries_used};
    }
    return Indecomposable{true, 1.0, search.tries_used};
  }
  // A ring of dimension 1 is F_p itself and has no elements to try.
  const double confidence =
      ring.dim() <= 1 ? 1.0 : 1.0 - std::pow(8.0 / 9.0, search.tries_used);
  return Indecomposable{false, confidence, search.tries_used};
}

std::optional<SkewPoly> FindRightFactorExhaustive(const SkewPoly& f) {
  Enforce(f.IsMonic(), Errc::kInvalidArgument, "exhaustive search needs a monic polynomial");
  const Field& fld = f.field();
  const uint32_t q = fld.q();
  uint64_t total = 0, block = 1;
  for (int k = 1; k < f.Degree(); ++k) {
    block *= q;
    total += block;
    Enforce(total <= kMaxExhaustiveCandidates, Errc::kTooLarge,
            "exhaustive right-factor search is too large");
  }
  for (int k = 1; k < f.Degree(); ++k) {
    std::vector<uint32_t> idx(k, 0);
    while (true) {
      std::vector<FqElem> c;
      c.reserve(k + 1);
      for (uint32_t v : idx) c.push_back(fld.FromIndex(v));
      c.push_back(fld.One());
      SkewPoly g(fld, f.s(), std::move(c));
      if (RightRem(f, g).IsZero()) return g;
      int pos = 0;
      while (pos < k && ++idx[pos] == q) idx[pos++] = 0;
      if (pos == k) break;
    }
  }
  return std::nullopt;
}

SkewPoly Decomposition::Product(const Field& field, int s) const {
  SkewPoly acc = SkewPoly::Constant(field, s, unit);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

std::vector<int> Decomposition::SortedDegrees() const {
  std::vector<int> d;
  for (const auto& f : factors) d.push_back(f.Degree());
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

void DecomposeMonic(const SkewPoly& f, Rng& rng, int max_tries, Decomposition& out) {
  if (f.Degree() <= 1) {
    out.factors.push_back(f);
    return;
  }
  auto outcome = SplitOnce(f, rng, max_tries);
  if (auto* split = std::get_if<Split>(&outcome)) {
    DecomposeMonic(split->left, rng, max_tries, out);
    DecomposeMonic(split->right, rng, max_tries, out);
    return;
  }
  out.confidence = std::min(out.confidence, std::get<Indecomposable>(outcome).confidence);
  out.factors.push_back(f);
}

void OracleMonic(const SkewPoly& f, std::vector<SkewPoly>& out) {
  if (f.Degree() <= 1) {
    out.push_back(f);
    return;
  }
  auto right = FindRightFactorExhaustive(f);
  if (!right) {
    out.push_back(f);
    return;
  }
  // The smallest right factor has no proper right factor of its own.
  OracleMonic(Divide(f, *right, Side::kRight).quotient, out);
  out.push_back(*right);
}

}  // namespace

Decomposition DecomposeComplete(const SkewPoly& f, Rng& rng, int max_tries) {
  Enforce(!f.IsZero(), Errc::kInvalidArgument, "cannot decompose the zero polynomial");
  const Field& fld = f.field();
  Decomposition out{f.Lead(), {}, 1.0};
  if (f.Degree() == 0) return out;
  DecomposeMonic(f.ScaleLeft(fld.Inv(f.Lead())), rng, max_tries, out);
  return out;
}

std::vector<LinPoly> DecomposeLinPoly(const LinPoly& l, Rng& rng) {
  Enforce(!l.IsZero(), Errc::kInvalidArgument, "cannot decompose the zero polynomial");
  const Decomposition d = DecomposeComplete(Phi(l), rng);
  if (d.factors.empty()) return {l};
  std::vector<LinPoly> out;
  for (const auto& f : d.factors) out.push_back(PhiInverse(f));
  out.front() = out.front().ScaleLeft(d.unit);
  return out;
}

Decomposition OracleDecompose(const SkewPoly& f) {
  Enforce(!f.IsZero(), Errc::kInvalidArgument, "cannot decompose the zero polynomial");
  const Field& fld = f.field();
  Enforce(f.Degree() * fld.e() <= kExhaustiveThreshold, Errc::kTooLarge,
          "oracle decomposition needs deg(f) * e <= 12");
  Decomposition out{f.Lead(), {}, 1.0};
  if (f.Degree() == 0) return out;
  OracleMonic(f.ScaleLeft(fld.Inv(f.Lead())), out.factors);
  return out;
}

std::pair<double, double> WilsonInterval(int successes, int trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double n = trials;
  const double phat = successes / n;
  const double denom = 1.0 + z * z / n;
  const double center = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

namespace {

constexpr int kRetryCap = 1000;

// Random composition of `degree` into at least two positive parts.
std::vector<int> RandomShape(int degree, Rng& rng) {
  const int parts = 2 + static_cast<int>(rng.Uniform(degree - 1));
  std::vector<int> cuts(degree - 1);
  for (int i = 0; i < degree - 1; ++i) cuts[i] = i + 1;
  for (int i = 0; i < parts - 1; ++i) {
    const int j = i + static_cast<int>(rng.Uniform(cuts.size() - i));
    std::swap(cuts[i], cuts[j]);
  }
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> shape;
  int prev = 0;
  for (int c : cuts) {
    shape.push_back(c - prev);
    prev = c;
  }
  shape.push_back(degree - prev);
  return shape;
}

}  // namespace

SplitStats EstimateSplitSuccess(const Field& field, int s, int degree, int trials,
                                uint64_t seed) {
  Enforce(trials >= 1, Errc::kInvalidArgument, "trials must be >= 1");
  Enforce(degree >= 2, Errc::kInvalidArgument, "degree must be >= 2");
  SplitStats st;
  st.trials = trials;
  st.seed = seed;
  const Rng master(seed);
  long total_tries = 0;
  int succeeded = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.Derive(static_cast<uint64_t>(t));
    SkewPoly f = SkewPoly::One(field, s);
    for (int d : RandomShape(degree, rng)) f = f * SkewPoly::RandomMonic(field, s, d, rng);
    const EigenRing ring(f);
    auto first = FindZeroDivisor(ring, rng, 1);
    int tries = first.tries_used;
    bool ok = first.found.has_value();
    if (ok) {
      ++st.first_try_successes;
    } else {
      auto more = FindZeroDivisor(ring, rng, kRetryCap - 1);
      tries += more.tries_used;
      ok = more.found.has_value();
    }
    if (ok) {
      ++succeeded;
      total_tries += tries;
    } else {
      ++st.never_succeeded;
    }
  }
  st.mean_tries = succeeded == 0 ? 0.0 : double(total_tries) / succeeded;
  std::tie(st.ci95_lo, st.ci95_hi) = WilsonInterval(st.first_try_successes, trials);
  return st;
}

}  // namespace ore
