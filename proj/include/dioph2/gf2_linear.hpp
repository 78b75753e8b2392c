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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dioph2 {

/// Dense linear system A x = b over GF(2). Rows are bit-packed with the
/// right-hand side stored in an extra trailing column.
class Gf2System {
 public:
  Gf2System(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t row, std::size_t col, bool value = true);
  void set_rhs(std::size_t row, bool value = true);
  bool get(std::size_t row, std::size_t col) const;

  /// One solution with every free variable set to zero, or nullopt if the
  /// system is inconsistent. The system is reduced in place.
  std::optional<std::vector<bool>> solve();

 private:
  std::uint64_t* row_ptr(std::size_t row) { return words_.data() + row * stride_; }
  const std::uint64_t* row_ptr(std::size_t row) const { return words_.data() + row * stride_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> words_;
};

}  // namespace dioph2
