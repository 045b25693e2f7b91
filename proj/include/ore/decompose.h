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

// Complete factorization in F_q[Y; sigma] (equivalently, complete
// decomposition of p^s-polynomials).
//
// A right factor of a monic f is found from a zero divisor of the eigenring
//   E(f) = { u : deg u < deg f, f u = 0 mod_right f },
// an F_p-algebra under multiplication followed by right remainder by f.
// For a zero divisor z in E(f), gcrd(z, f) is a proper nontrivial right
// factor of f. Zero divisors are found by drawing random u in E(f),
// computing its minimal polynomial m over F_p and evaluating a proper
// factor of m at u.

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ore/fp_matrix.h"
#include "ore/fp_poly.h"
#include "ore/linpoly.h"
#include "ore/skew.h"

namespace ore {

inline constexpr int kDefaultSplitTries = 200;
// Below this value of deg(f) * e indecomposability is confirmed by
// exhaustive search over monic right factors.
inline constexpr int kExhaustiveThreshold = 12;
// Cap on the number of candidate right factors an exhaustive search visits.
inline constexpr uint64_t kMaxExhaustiveCandidates = uint64_t{1} << 22;

class EigenRing {
 public:
  explicit EigenRing(const SkewPoly& f);

  const SkewPoly& modulus() const { return modulus_; }
  const std::vector<SkewPoly>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // u in E(f) iff deg u < deg f and f u has zero right remainder by f.
  bool Contains(const SkewPoly& u) const;
  SkewPoly Mul(const SkewPoly& u, const SkewPoly& v) const;
  // sum coeffs[i] * basis[i].
  SkewPoly Combine(const FpVector& coeffs) const;
  // g(u) for g over F_p.
  SkewPoly Evaluate(const FpPoly& g, const SkewPoly& u) const;

  // Digit coordinates of a residue: index i * e + k is digit k of the
  // coefficient of Y^i.
  FpVector Flatten(const SkewPoly& u) const;

 private:
  SkewPoly modulus_;
  std::vector<SkewPoly> basis_;
};

// Least-degree monic m over F_p with m(u) = 0 in the ring. Throws NotInRing.
FpPoly MinimalPolynomial(const SkewPoly& u, const EigenRing& ring);

struct ZeroDivisor {
  SkewPoly divisor;      // nonzero, not invertible in E(f)
  SkewPoly annihilator;  // nonzero, divisor * annihilator = 0 in E(f)
};

// Zero divisor read off the minimal polynomial of u, if it has one: a
// coprime split m = g h gives g(u), a power m = g^k (k > 1) gives g(u).
std::optional<ZeroDivisor> ZeroDivisorFromElement(const SkewPoly& u, const EigenRing& ring);

struct ZeroDivisorSearch {
  std::optional<ZeroDivisor> found;
  int tries_used = 0;
};

// Draws up to max_tries elements uniformly from E(f) minus the prime-field
// scalars (which are never zero divisors). A ring of dimension 1 has nothing
// to draw and yields NotFound with zero tries.
ZeroDivisorSearch FindZeroDivisor(const EigenRing& ring, Rng& rng, int max_tries);

struct Split {
  SkewPoly left;
  SkewPoly right;  // monic, left * right == f
  int tries = 0;
};

struct Indecomposable {
  bool exhaustive = false;  // certified by exhaustive search
  double confidence = 0.0;  // 1 - (8/9)^tries when not exhaustive
  int tries = 0;
};

using SplitOutcome = std::variant<Split, Indecomposable>;

// One proper factorization f = left * right of a monic f with deg f >= 2.
SplitOutcome SplitOnce(const SkewPoly& f, Rng& rng, int max_tries = kDefaultSplitTries);

// Smallest-degree monic right factor of degree in [1, deg f), scanning each
// degree in lexicographic order of coefficient digits. Throws TooLarge when
// the scan would exceed kMaxExhaustiveCandidates.
std::optional<SkewPoly> FindRightFactorExhaustive(const SkewPoly& f);

struct Decomposition {
  FqElem unit;
  std::vector<SkewPoly> factors;  // monic, indecomposable, leftmost first
  // Lowest confidence among indecomposable leaves; 1 when every leaf was
  // certified (degree 1, exhaustive search, or an oracle run).
  double confidence = 1.0;

  SkewPoly Product(const Field& field, int s) const;
  std::vector<int> SortedDegrees() const;
};

Decomposition DecomposeComplete(const SkewPoly& f, Rng& rng,
                                int max_tries = kDefaultSplitTries);

// Composition factors of L, leftmost first. The leading unit is folded into
// the first factor so that composing the list gives back L exactly.
std::vector<LinPoly> DecomposeLinPoly(const LinPoly& l, Rng& rng);

// Deterministic brute-force decomposition; throws TooLarge when
// deg(f) * e > kExhaustiveThreshold.
Decomposition OracleDecompose(const SkewPoly& f);

struct SplitStats {
  int trials = 0;
  int first_try_successes = 0;
  int never_succeeded = 0;  // within the retry cap
  double mean_tries = 0.0;  // over trials that succeeded
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  uint64_t seed = 0;

  double FirstTryFraction() const {
    return trials == 0 ? 0.0 : double(first_try_successes) / trials;
  }
  bool operator==(const SplitStats&) const = default;
};

// Random decomposable inputs (products of >= 2 random monic factors of total
// degree `degree`), one zero-divisor attempt each, then retries up to a cap
// to measure tries-to-success. Trial i uses Rng(seed).Derive(i).
SplitStats EstimateSplitSuccess(const Field& field, int s, int degree, int trials,
                                uint64_t seed);

// Wilson score interval at 95%.
std::pair<double, double> WilsonInterval(int successes, int trials);

}  // namespace ore
