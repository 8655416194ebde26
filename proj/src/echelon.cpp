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

#include "symlie/echelon.hpp"

#include <algorithm>

#include "symlie/errors.hpp"

namespace symlie {

Echelon::Echelon(std::size_t width) : width_(width), row_of_col_(width, -1) {}

void Echelon::reduce(std::vector<Rational>& v) const {
  if (v.size() != width_) throw DimensionError("echelon: vector width mismatch");
  Rational f;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivot_[r];
    if (v[p] == 0) continue;
    f = v[p];
    for (const auto& [c, x] : rows_[r]) v[c] -= f * x;
  }
}

bool Echelon::insert(const SparseRow& v) {
  std::vector<Rational> dense(width_);
  for (const auto& [c, x] : v) {
    if (c >= width_) throw DimensionError("echelon: column out of range");
    dense[c] += x;
  }
  return insert(std::move(dense));
}

bool Echelon::insert(std::vector<Rational> v) {
  reduce(v);
  std::size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;

  const Rational inv = 1 / v[p];
  SparseRow row;
  for (std::size_t c = p; c < width_; ++c) {
    if (v[c] != 0) row.emplace_back(static_cast<std::uint32_t>(c), v[c] * inv);
  }

  // Clear the new pivot column from the existing rows.
  for (auto& other : rows_) {
    auto it = std::lower_bound(other.begin(), other.end(), p,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it == other.end() || it->first != p) continue;
    const Rational f = it->second;
    SparseRow merged;
    merged.reserve(other.size() + row.size());
    auto a = other.begin();
    auto b = row.begin();
    while (a != other.end() || b != row.end()) {
      if (b == row.end() || (a != other.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == other.end() || b->first < a->first) {
        merged.emplace_back(b->first, -f * b->second);
        ++b;
      } else {
        Rational x = a->second - f * b->second;
        if (x != 0) merged.emplace_back(a->first, std::move(x));
        ++a;
        ++b;
      }
    }
    other = std::move(merged);
  }
  row_of_col_[p] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  pivot_.push_back(p);
  return true;
}

bool Echelon::contains(std::vector<Rational> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<const Echelon::SparseRow*> Echelon::sorted_rows() const {
  std::vector<const SparseRow*> out;
  for (std::size_t c = 0; c < width_; ++c) {
    if (row_of_col_[c] >= 0) out.push_back(&rows_[static_cast<std::size_t>(row_of_col_[c])]);
  }
  return out;
}

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < width_; ++c) {
    if (row_of_col_[c] >= 0) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<Rational>> Echelon::nullspace() const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < width_; ++f) {
    if (row_of_col_[f] >= 0) continue;
    std::vector<Rational> x(width_);
    x[f] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const auto& e, std::size_t col) { return e.first < col; });
      if (it != row.end() && it->first == f) x[pivot_[r]] = -it->second;
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace symlie
