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

#include <cstdint>
#include <string>
#include <vector>

#include "symlie/number.hpp"
#include "symlie/sym_op.hpp"

namespace symlie::oracle {

/// Brute-force dense engine over all 4^n Pauli words, for n <= kMaxN. Every
/// routine here works word by word with exact rationals and shares no code
/// path with the structure or closure modules.
inline constexpr int kMaxN = 6;

/// Word encoding: base 4, qubit q (0-based) in digit q; letters 0=I 1=X 2=Y 3=Z.
using Word = std::uint32_t;

/// i * sum_w coeffs[w] * w
struct DenseOp {
  int n = 0;
  std::vector<Rational> coeffs;

  explicit DenseOp(int n);
  bool is_zero() const;
  std::size_t nonzeros() const;
  bool operator==(const DenseOp& o) const { return n == o.n && coeffs == o.coeffs; }
};

/// Pauli word from a letter string such as "XIZ" (qubit 0 first).
Word parse_word(const std::string& letters);
std::string word_string(Word w, int n);
DenseOp word_op(const std::string& letters, const Rational& c = 1);

DenseOp densify(const SymOpVector& v);

/// Reads a symmetric dense operator back into the P basis; throws
/// StructureViolation when coefficients differ inside an orbit.
SymOpVector symmetrize(const DenseOp& d);

/// [iA, iB] word by word; anticommuting words give +-2 i (product word).
DenseOp dense_bracket(const DenseOp& a, const DenseOp& b);

struct DenseClosure {
  std::size_t dim = 0;
  std::vector<DenseOp> basis;  // independent nested brackets spanning the closure
  std::vector<std::string> warnings;
};

/// Lie closure in the word basis, by closing the generator span under ad_g.
DenseClosure dense_closure(const std::vector<DenseOp>& gens);

/// L_mu built from permutation operators: every permutation with exactly mu
/// disjoint transpositions, each transposition as (II + XX + YY + ZZ)/2.
DenseOp class_sum(int mu, int n);

/// Dimension of {v in u^{S_n} : [v, P_t] = 0 for every t}, from dense
/// brackets of densified basis elements.
std::size_t dense_center_dim(int n);

/// Rough bytes needed for one DenseOp at n (for reports).
std::size_t estimated_bytes(int n);

}  // namespace symlie::oracle
