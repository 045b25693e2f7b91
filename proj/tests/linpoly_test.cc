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

#include "ore/linpoly.h"

#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace ore {
namespace {

using oracle::EvalLin;
using oracle::NaiveField;

Field Gf4() { return Field::Create(2, 2, std::vector<uint32_t>{1, 1, 1}); }

// X^(p^k) written as a p-polynomial.
LinPoly Power(const Field& f, int k) { return LinPoly::Monomial(f, 1, k, f.One()); }

TEST(LinPolyTest, EvaluationExamples) {
  const Field f = Gf4();
  const LinPoly l = Power(f, 1) + Power(f, 0);  // X^2 + X
  EXPECT_EQ(l(f.Gen()), f.One());
  for (FqElem x : f.Elements()) {
    EXPECT_EQ(LinPoly::Identity(f)(x), x);
    EXPECT_EQ(LinPoly::Zero(f)(x), f.Zero());
  }
}

TEST(LinPolyTest, EvaluationMatchesReference) {
  Rng rng(1);
  for (const auto& [p, e, s] : std::vector<std::tuple<uint32_t, int, int>>{
           {2, 4, 1}, {3, 2, 1}, {2, 6, 2}, {2, 6, 3}, {5, 2, 1}}) {
    const Field f = Field::Create(p, e);
    const NaiveField nf(f);
    for (int i = 0; i < 20; ++i) {
      const LinPoly l = LinPoly::Random(f, s, rng.Uniform(6), rng);
      for (FqElem x : f.Elements()) ASSERT_EQ(l(x), EvalLin(nf, l, x));
    }
  }
}

TEST(LinPolyTest, CompositionExamples) {
  const Field f = Field::Create(2, 4);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const FqElem a = f.Random(rng, true);
    // X^2 o (aX) = a^2 X^2
    EXPECT_EQ(Compose(Power(f, 1), LinPoly::Monomial(f, 1, 0, a)),
              LinPoly::Monomial(f, 1, 1, f.Mul(a, a)));
    const LinPoly l = LinPoly::Random(f, 1, 5, rng);
    EXPECT_EQ(Compose(l, LinPoly::Identity(f)), l);
    EXPECT_EQ(Compose(LinPoly::Identity(f), l), l);
  }
  EXPECT_EQ(Compose(Power(f, 1), Power(f, 1)), Power(f, 2));
}

TEST(LinPolyTest, CompositionCoheresWithEvaluation) {
  Rng rng(3);
  for (const auto& [p, e, s] : std::vector<std::tuple<uint32_t, int, int>>{
           {2, 4, 1}, {3, 2, 1}, {2, 8, 1}, {2, 6, 2}, {3, 3, 1}}) {
    const Field f = Field::Create(p, e);
    const NaiveField nf(f);
    for (int i = 0; i < 30; ++i) {
      const LinPoly a = LinPoly::Random(f, s, rng.Uniform(5), rng);
      const LinPoly b = LinPoly::Random(f, s, rng.Uniform(5), rng);
      const LinPoly c = Compose(a, b);
      EXPECT_EQ(c.s(), s);  // p^s-polynomials are closed under composition
      for (int k = 0; k < 16; ++k) {
        const FqElem x = f.Random(rng);
        EXPECT_EQ(c(x), EvalLin(nf, a, EvalLin(nf, b, x)));
      }
    }
  }
}

TEST(LinPolyTest, CompositionRejectsMismatches) {
  const Field f = Field::Create(2, 4);
  const Field g = Field::Create(3, 2);
  EXPECT_ERRC(Compose(LinPoly::Identity(f, 1), LinPoly::Identity(f, 2)), Errc::kTwistMismatch);
  EXPECT_ERRC(Compose(LinPoly::Identity(f), LinPoly::Identity(g)), Errc::kContextMismatch);
}

TEST(LinPolyTest, ReduceExamples) {
  const Field f = Gf4();
  // X^4 + X^2 -> X + X^2
  EXPECT_EQ(Reduce(Power(f, 2) + Power(f, 1)), Power(f, 0) + Power(f, 1));
  const LinPoly r = Power(f, 0) + LinPoly::Monomial(f, 1, 1, f.Gen());
  EXPECT_EQ(Reduce(r), r);
  const Field f2 = Field::Create(2, 1);
  EXPECT_EQ(Reduce(Power(f2, 1)), LinPoly::Identity(f2));
  EXPECT_TRUE(Reduce(Power(f, 1) + Power(f, 3)).IsZero());  // X^2 + X^8 = 0 on GF(4)
}

TEST(LinPolyTest, ReducePreservesEvaluation) {
  Rng rng(4);
  for (const auto& [p, e, s] : std::vector<std::tuple<uint32_t, int, int>>{
           {2, 4, 1}, {2, 4, 2}, {2, 6, 4}, {3, 2, 1}, {2, 3, 2}}) {
    const Field f = Field::Create(p, e);
    for (int i = 0; i < 30; ++i) {
      const LinPoly l = LinPoly::Random(f, s, rng.Uniform(10), rng);
      const LinPoly r = Reduce(l);
      EXPECT_EQ(r.s(), 1);
      EXPECT_LT(r.TopIndex(), e);
      EXPECT_EQ(Reduce(r), r);
      for (FqElem x : f.Elements()) ASSERT_EQ(r(x), l(x));
    }
  }
}

TEST(LinPolyTest, MatrixExamples) {
  const Field f = Gf4();
  FpMatrix frob(2, 2, 2);
  frob(0, 0) = 1;
  frob(0, 1) = 1;
  frob(1, 1) = 1;
  EXPECT_EQ(ToMatrix(Power(f, 1)), frob);
  EXPECT_EQ(LinPolyFromMatrix(frob, f), Power(f, 1));
  EXPECT_EQ(ToMatrix(LinPoly::Identity(f)), FpMatrix::Identity(2, 2));
  EXPECT_EQ(ToMatrix(LinPoly::Zero(f)), FpMatrix(2, 2, 2));
  EXPECT_EQ(LinPolyFromMatrix(FpMatrix::Identity(2, 2), f), LinPoly::Identity(f));
}

TEST(LinPolyTest, MatrixColumnsAreImagesOfBasis) {
  Rng rng(5);
  const Field f = Field::Create(3, 3);
  const FqElem t = f.Gen();
  const Field g = f.WithBasis({f.Add(t, f.One()), f.Mul(t, t), f.FromPrime(2)});
  for (const Field& fld : {f, g}) {
    for (int i = 0; i < 20; ++i) {
      const LinPoly l = LinPoly::Random(fld, 1, 4, rng);
      const FpMatrix m = ToMatrix(l);
      for (int j = 0; j < 3; ++j) {
        const auto col = fld.Coordinates(l(fld.basis()[j]));
        for (int r = 0; r < 3; ++r) EXPECT_EQ(m(r, j), col[r]);
      }
      EXPECT_EQ(LinPolyFromMatrix(m, fld), Reduce(l));
    }
  }
}

TEST(LinPolyTest, MatrixRoundTripOverGf8) {
  Rng rng(6);
  const Field f = Field::Create(2, 3);
  for (int i = 0; i < 100; ++i) {
    const LinPoly l = LinPoly::Random(f, 1, rng.Uniform(7), rng);
    EXPECT_EQ(LinPolyFromMatrix(ToMatrix(l), f), Reduce(l));
  }
  // Every 3x3 matrix over F_2 comes from a unique reduced p-polynomial.
  for (uint32_t bits = 0; bits < 512; ++bits) {
    FpMatrix m(2, 3, 3);
    for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = (bits >> k) & 1;
    EXPECT_EQ(ToMatrix(LinPolyFromMatrix(m, f)), m);
  }
}

TEST(LinPolyTest, MatrixOfCompositionIsProduct) {
  Rng rng(7);
  for (const auto& [p, e] : std::vector<std::pair<uint32_t, int>>{{2, 4}, {3, 2}, {2, 8}}) {
    const Field f = Field::Create(p, e);
    for (int i = 0; i < 30; ++i) {
      const LinPoly a = LinPoly::Random(f, 1, 6, rng);
      const LinPoly b = LinPoly::Random(f, 1, 6, rng);
      EXPECT_EQ(ToMatrix(Reduce(Compose(a, b))), ToMatrix(a) * ToMatrix(b));
    }
  }
}

TEST(LinPolyTest, PermutationExamples) {
  const Field f = Gf4();
  EXPECT_TRUE(IsPermutation(Power(f, 1)));
  EXPECT_TRUE(IsPermutation(LinPoly::Identity(f)));
  const LinPoly l = Power(f, 1) + Power(f, 0);
  EXPECT_FALSE(IsPermutation(l));
  // Kernel is {0, 1}.
  std::vector<FqElem> kernel;
  for (FqElem x : f.Elements()) {
    if (l(x) == f.Zero()) kernel.push_back(x);
  }
  EXPECT_EQ(kernel, (std::vector<FqElem>{f.Zero(), f.One()}));
  EXPECT_FALSE(IsPermutation(LinPoly::Zero(f)));
}

TEST(LinPolyTest, PermutationIffNoNonzeroRoot) {
  Rng rng(8);
  for (const auto& [p, e] : std::vector<std::pair<uint32_t, int>>{{2, 4}, {3, 2}, {2, 8}, {5, 2}}) {
    const Field f = Field::Create(p, e);
    const NaiveField nf(f);
    int perms = 0;
    for (int i = 0; i < 40; ++i) {
      const LinPoly l = LinPoly::Random(f, 1, rng.Uniform(e), rng);
      bool root = false;
      for (FqElem x : f.Elements()) root = root || (x.value != 0 && EvalLin(nf, l, x) == f.Zero());
      EXPECT_EQ(IsPermutation(l), !root);
      perms += !root;
    }
    EXPECT_GT(perms, 0);
  }
}

TEST(LinPolyTest, AdditivityExhaustive) {
  Rng rng(9);
  for (const auto& [p, e] : std::vector<std::pair<uint32_t, int>>{{2, 4}, {3, 2}, {2, 3}}) {
    const Field f = Field::Create(p, e);
    for (int i = 0; i < 10; ++i) {
      const LinPoly l = LinPoly::Random(f, 1, 5, rng);
      for (FqElem x : f.Elements()) {
        for (FqElem y : f.Elements()) ASSERT_EQ(l(f.Add(x, y)), f.Add(l(x), l(y)));
      }
    }
  }
  const Field big = Field::Create(2, 8);
  for (int i = 0; i < 10; ++i) {
    const LinPoly l = LinPoly::Random(big, 1, 9, rng);
    for (int k = 0; k < 500; ++k) {
      const FqElem x = big.Random(rng), y = big.Random(rng);
      ASSERT_EQ(l(big.Add(x, y)), big.Add(l(x), l(y)));
    }
  }
}

TEST(LinPolyTest, InverseExamples) {
  const Field f = Gf4();
  EXPECT_EQ(Inverse(Power(f, 1)), Power(f, 1));
  EXPECT_EQ(Inverse(LinPoly::Identity(f)), LinPoly::Identity(f));
  EXPECT_ERRC(Inverse(Power(f, 1) + Power(f, 0)), Errc::kNotAPermutation);
}

TEST(LinPolyTest, InverseComposesToIdentity) {
  Rng rng(10);
  for (const auto& [p, e] : std::vector<std::pair<uint32_t, int>>{{2, 4}, {3, 2}, {2, 8}, {3, 3}}) {
    const Field f = Field::Create(p, e);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
      const LinPoly l = LinPoly::Random(f, 1, e - 1, rng);
      if (!IsPermutation(l)) continue;
      ++found;
      const LinPoly inv = Inverse(l);
      EXPECT_EQ(Reduce(Compose(l, inv)), LinPoly::Identity(f));
      EXPECT_EQ(Reduce(Compose(inv, l)), LinPoly::Identity(f));
    }
    EXPECT_GT(found, 0);
  }
}

TEST(LinPolyTest, TwistStepRepresentation) {
  const Field f = Field::Create(2, 6);
  Rng rng(11);
  const LinPoly l = LinPoly::Random(f, 3, 3, rng);
  const LinPoly pl = l.AsPPolynomial();
  EXPECT_EQ(pl.s(), 1);
  EXPECT_EQ(pl.TopIndex(), 3 * l.TopIndex());
  for (FqElem x : f.Elements()) EXPECT_EQ(pl(x), l(x));
  // Trailing zeros are trimmed.
  EXPECT_EQ(LinPoly(f, 1, {f.One(), f.Zero(), f.Zero()}).TopIndex(), 0);
  EXPECT_TRUE(LinPoly(f, 1, {f.Zero()}).IsZero());
}

}  // namespace
}  // namespace ore
