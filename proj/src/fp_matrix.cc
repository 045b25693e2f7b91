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

#include "ore/fp_matrix.h"

#include <utility>

#include "ore/error.h"
#include "ore/fp_poly.h"

namespace ore {

FpMatrix FpMatrix::Identity(uint32_t p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  Enforce(cols_ == o.rows_ && p_ == o.p_, Errc::kInvalidArgument,
          "matrix shape mismatch");
  FpMatrix r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const uint64_t x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r(i, j) = static_cast<uint32_t>((r(i, j) + x * o(k, j)) % p_);
      }
    }
  }
  return r;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  Enforce(static_cast<int>(v.size()) == cols_, Errc::kInvalidArgument,
          "vector length mismatch");
  FpVector r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    uint64_t acc = 0;
    for (int j = 0; j < cols_; ++j) acc = (acc + uint64_t{(*this)(i, j)} * v[j]) % p_;
    r[i] = static_cast<uint32_t>(acc);
  }
  return r;
}

std::vector<int> FpMatrix::Rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int r = row; r < rows_; ++r) {
      if ((*this)(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
    }
    const uint64_t inv = InvModP((*this)(row, col), p_);
    for (int c = 0; c < cols_; ++c) {
      (*this)(row, c) = static_cast<uint32_t>((*this)(row, c) * inv % p_);
    }
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const uint64_t f = (*this)(r, col);
      if (f == 0) continue;
      for (int c = 0; c < cols_; ++c) {
        (*this)(r, c) = static_cast<uint32_t>(
            ((*this)(r, c) + (p_ - f) * (*this)(row, c)) % p_);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int FpMatrix::Rank() const {
  FpMatrix m = *this;
  return static_cast<int>(m.Rref().size());
}

std::optional<FpMatrix> FpMatrix::Inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const int n = rows_;
  FpMatrix aug(p_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = aug.Rref();
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  FpMatrix inv(p_, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::vector<FpVector> FpMatrix::Nullspace() const {
  FpMatrix m = *this;
  const auto pivots = m.Rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(cols_, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = (p_ - m(static_cast<int>(r), free)) % p_;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FpVector> FpMatrix::Solve(const FpVector& b) const {
  Enforce(static_cast<int>(b.size()) == rows_, Errc::kInvalidArgument,
          "right-hand side length mismatch");
  FpMatrix aug(p_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i] % p_;
  }
  const auto pivots = aug.Rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  FpVector x(cols_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug(static_cast<int>(r), cols_);
  }
  return x;
}

}  // namespace ore
