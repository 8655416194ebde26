// Copyright 2026 The symlie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "symlie/number.hpp"

namespace symlie {

/// Reduced row echelon form over Q with a fixed column order.
///
/// Rows are kept fully reduced: every pivot entry is 1 and every other row
/// is zero in that pivot column. Rank statements derived from it are exact.
class Echelon {
 public:
  using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

  explicit Echelon(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` in place against the current rows.
  void reduce(std::vector<Rational>& v) const;

  /// Adds v to the span. Returns false (and leaves the form unchanged) when v
  /// is already in the span.
  bool insert(std::vector<Rational> v);
  bool insert(const SparseRow& v);

  bool contains(std::vector<Rational> v) const;

  /// Rows ordered by pivot column.
  std::vector<const SparseRow*> sorted_rows() const;
  std::vector<std::size_t> pivot_columns() const;

  /// Basis of the right nullspace {x : R x = 0}, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t width_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_;   // pivot column of rows_[i]
  std::vector<int> row_of_col_;      // -1 for free columns
};

}  // namespace symlie
