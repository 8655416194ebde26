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

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace symlie {

/// Letter counts (k_x, k_y, k_z) labelling the symmetrized Pauli string
/// P_(k_x,k_y,k_z): the sum of all distinct n-qubit Pauli words with that
/// many X, Y and Z letters.
///
/// A triple does not know its n. Validity (k_x + k_y + k_z <= n) is checked
/// wherever a triple meets an explicit n, see `validate`.
struct PauliTriple {
  int kx = 0;
  int ky = 0;
  int kz = 0;

  constexpr int level() const { return kx + ky + kz; }
  constexpr bool is_identity() const { return kx == 0 && ky == 0 && kz == 0; }
  constexpr bool all_even() const {
    return kx % 2 == 0 && ky % 2 == 0 && kz % 2 == 0;
  }

  /// Canonical ordering used for pivots and serialization: by level, then
  /// lexicographically by (k_x, k_y, k_z).
  constexpr auto operator<=>(const PauliTriple& o) const {
    return std::tuple(level(), kx, ky, kz) <=>
           std::tuple(o.level(), o.kx, o.ky, o.kz);
  }
  constexpr bool operator==(const PauliTriple&) const = default;

  /// Validating constructor.
  static PauliTriple make(int kx, int ky, int kz, int n);
};

bool is_valid(const PauliTriple& t, int n);

/// Throws ConstraintError unless t is a valid triple for n.
void validate(const PauliTriple& t, int n);

/// "kx,ky,kz"
std::string to_string(const PauliTriple& t);
PauliTriple parse_triple(const std::string& text);

/// All valid triples for n in canonical order; C(n+3,3) of them.
std::vector<PauliTriple> all_triples(int n);

/// Dense 0..C(n+3,3)-1 numbering of the triples of a fixed n, consistent with
/// the canonical ordering.
class TripleIndex {
 public:
  explicit TripleIndex(int n);

  int n() const { return n_; }
  std::size_t size() const { return triples_.size(); }
  std::size_t index(const PauliTriple& t) const;
  const PauliTriple& triple(std::size_t i) const { return triples_[i]; }
  const std::vector<PauliTriple>& triples() const { return triples_; }

 private:
  int n_;
  std::vector<PauliTriple> triples_;
  std::vector<int> lookup_;  // (n+1)^3 cube, -1 where invalid
};

}  // namespace symlie

template <>
struct std::hash<symlie::PauliTriple> {
  std::size_t operator()(const symlie::PauliTriple& t) const noexcept {
    return (static_cast<std::size_t>(t.kx) * 1000003u +
            static_cast<std::size_t>(t.ky)) * 1000003u +
           static_cast<std::size_t>(t.kz);
  }
};
