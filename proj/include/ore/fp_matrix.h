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
#include <optional>
#include <vector>

namespace ore {

using FpVector = std::vector<uint32_t>;

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(uint32_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static FpMatrix Identity(uint32_t p, int n);

  uint32_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  uint32_t& operator()(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  uint32_t operator()(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpVector operator*(const FpVector& v) const;
  bool operator==(const FpMatrix& o) const = default;

  int Rank() const;
  bool IsInvertible() const { return rows_ == cols_ && Rank() == rows_; }
  std::optional<FpMatrix> Inverse() const;

  // Basis of {x : A x = 0}, as vectors in reduced echelon back-substitution
  // order (one per free column, ascending).
  std::vector<FpVector> Nullspace() const;

  // Some x with A x = b, if one exists.
  std::optional<FpVector> Solve(const FpVector& b) const;

 private:
  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> Rref();

  uint32_t p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint32_t> a_;
};

}  // namespace ore
