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

// Checks the division contract on every Divide call made while installed:
// f = q g + r (right) or f = g q + r (left), with deg r < deg g, using the
// reference skew product.

#pragma once

#include <atomic>
#include <cstdint>

#include "oracles.h"
#include "ore/skew.h"

namespace ore::oracle {

class DivisionAudit {
 public:
  static void Install() { SetDivisionObserver(&Observe); }
  static void Uninstall() { SetDivisionObserver(nullptr); }

  static uint64_t calls() { return calls_; }
  static uint64_t failures() { return failures_; }

 private:
  static void Observe(const SkewPoly& f, const SkewPoly& g, Side side, const DivResult& res) {
    ++calls_;
    const NaiveField nf(f.field());
    const SkewPoly prod =
        side == Side::kRight ? SkewMul(nf, res.quotient, g) : SkewMul(nf, g, res.quotient);
    if (!(SkewAdd(nf, prod, res.remainder) == f) || res.remainder.Degree() >= g.Degree()) {
      ++failures_;
    }
  }

  static inline std::atomic<uint64_t> calls_{0};
  static inline std::atomic<uint64_t> failures_{0};
};

}  // namespace ore::oracle
