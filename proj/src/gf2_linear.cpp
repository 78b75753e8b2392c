/*
   Copyright 2026 The dioph2 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dioph2/gf2_linear.hpp"

#include <utility>

namespace dioph2 {

Gf2System::Gf2System(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 1 + 63) / 64), words_(rows * stride_, 0) {}

void Gf2System::set(std::size_t row, std::size_t col, bool value) {
  std::uint64_t& w = row_ptr(row)[col / 64];
  const std::uint64_t bit = std::uint64_t{1} << (col % 64);
  w = value ? (w | bit) : (w & ~bit);
}

void Gf2System::set_rhs(std::size_t row, bool value) { set(row, cols_, value); }

bool Gf2System::get(std::size_t row, std::size_t col) const {
  return (row_ptr(row)[col / 64] >> (col % 64)) & 1U;
}

std::optional<std::vector<bool>> Gf2System::solve() {
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && !get(pivot, col)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < stride_; ++k) std::swap(row_ptr(pivot)[k], row_ptr(rank)[k]);
    }
    const std::uint64_t* src = row_ptr(rank);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && get(r, col)) {
        std::uint64_t* dst = row_ptr(r);
        for (std::size_t k = 0; k < stride_; ++k) dst[k] ^= src[k];
      }
    }
    pivot_col_of_row.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows_; ++r) {
    if (get(r, cols_)) return std::nullopt;
  }
  std::vector<bool> x(cols_, false);
  for (std::size_t r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = get(r, cols_);
  return x;
}

}  // namespace dioph2
