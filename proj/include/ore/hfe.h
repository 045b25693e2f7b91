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

// Toy HFE: public E = S o D o T mod X^q - X with S, T permutation
// p-polynomials and D a Dembowski-Ostrom polynomial of small degree, plus the
// key-recovery attack that looks for a left factor of E through greatest
// common left-decompositional factors of its difference polynomials.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ore/dopoly.h"
#include "ore/fp_matrix.h"
#include "ore/linpoly.h"

namespace ore {

// Quadratic polynomial over F_p in `vars` variables:
//   constant + sum linear[k] x_k + sum_{k <= l} quad(k, l) x_k x_l.
// Only the upper triangle of `quad` is used. In characteristic 2 the
// diagonal is always zero (x^2 = x on F_2, folded into `linear`).
struct QuadraticForm {
  uint32_t constant = 0;
  FpVector linear;
  FpMatrix quad;

  uint32_t operator()(std::span<const uint32_t> x) const;
  bool operator==(const QuadraticForm&) const = default;
};

// n_1..n_e with E(sum b_i x_i) = sum b_i n_i(x_1..x_e) for the field basis b.
struct MultivariateKey {
  std::vector<QuadraticForm> polys;

  // sum b_i n_i(coordinates of m).
  FqElem Evaluate(const Field& field, FqElem m) const;
  bool operator==(const MultivariateKey&) const = default;
};

MultivariateKey ToMultivariate(const DOPoly& e);

// Default for the "small degree" bound on D.
uint64_t DefaultDegreeBound(const Field& field);

struct HfePublicKey {
  DOPoly e;
  MultivariateKey multivariate;
};

struct HfeSecretKey {
  LinPoly s;
  DOPoly d;
  LinPoly t;
  uint64_t bound;
  LinPoly s_inv;
  LinPoly t_inv;
};

struct HfeKeyPair {
  HfePublicKey pub;
  HfeSecretKey sec;
};

// Validates S and T, caches their inverses and derives the public key.
HfeKeyPair MakeKeyPair(LinPoly s, DOPoly d, LinPoly t, uint64_t bound);

// Random D with deg D <= bound over all pairs i <= j < e that fit, with at
// least one genuinely quadratic term; S, T rejection-sampled permutations.
// Throws DegreeBoundTooSmall when bound < p^2.
HfeKeyPair HfeKeygen(const Field& field, uint64_t bound, Rng& rng);

// Uniform reduced p-polynomial that permutes the field.
LinPoly RandomPermutationLinPoly(const Field& field, Rng& rng);

inline FqElem HfeEncrypt(const DOPoly& e, FqElem m) { return e(m); }

// All m with D(T(m)) = S^-1(y), by exhaustive root search of D.
std::vector<FqElem> HfeDecrypt(const HfeSecretKey& sec, FqElem y);

// All x with f(x) = z.
std::vector<FqElem> SolveByExhaustion(const DOPoly& f, FqElem z);

// Cofactor f with Reduce(L o f) == E and deg f <= bound, if one exists.
// A permutation L gives the single candidate Reduce(L^-1 o E); otherwise an
// F_p-linear system over the coefficients of f is solved.
std::optional<DOPoly> IsLeftFactor(const LinPoly& l, const DOPoly& e, uint64_t bound);

// Linear-system route of IsLeftFactor, usable for any nonzero L.
std::optional<DOPoly> SolveLeftCofactor(const LinPoly& l, const DOPoly& e, uint64_t bound);

struct AttackSuccess {
  LinPoly l;  // permutation, Reduce(l o f) == E
  DOPoly f;   // deg f <= bound
  int rounds = 0;
};

struct AttackFailed {
  int rounds = 0;
};

using AttackOutcome = std::variant<AttackSuccess, AttackFailed>;

// Draw distinct a1, a2 != 0, take L = GCLDF(Delta_{E,a1}, Delta_{E,a2}) and
// test it as a left factor; on failure refine L = GCLDF(L, Delta_{E,a}) with
// a fresh a, up to max_rounds GCLDF computations.
AttackOutcome AttackGcldf(const DOPoly& e, uint64_t bound, Rng& rng, int max_rounds);

// Decryption with a recovered pair: m with f(m) = L^-1(y).
std::vector<FqElem> DecryptWithFactor(const LinPoly& l, const DOPoly& f, FqElem y);

}  // namespace ore
