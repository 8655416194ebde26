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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "symlie/echelon.hpp"
#include "symlie/number.hpp"
#include "symlie/structure.hpp"
#include "symlie/sym_op.hpp"
#include "symlie/sympauli.hpp"

namespace symlie {

enum class ClosureStrategy {
  /// Close the span of the generators under ad_g for each generator g. The
  /// Lie algebra generated by a set is spanned by the nested brackets
  /// [g1, [g2, [..., gk]]], so this yields the full closure while bracketing
  /// only against generators.
  kAdjoint,
  /// FIFO over (new element, earlier element) pairs.
  kPairwise,
};

/// Exact basis of a subspace of u^{S_n}, kept in reduced echelon form over
/// the canonical triple order.
class LieBasis {
 public:
  explicit LieBasis(int n);

  /// Span of arbitrary vectors; not marked closed.
  static LieBasis span_of(int n, const std::vector<SymOpVector>& vectors);

  int n() const { return n_; }
  std::size_t dim() const { return echelon_.rank(); }

  /// Rows ordered by pivot; each has coefficient 1 on its pivot triple.
  std::vector<SymOpVector> rows() const;
  std::vector<PauliTriple> pivots() const;

  bool insert(const SymOpVector& v);
  bool contains(const SymOpVector& v) const;
  SymOpVector reduce(const SymOpVector& v) const;

  /// Trace-orthogonal complement of the span inside u^{S_n}.
  std::vector<SymOpVector> orthogonal_complement() const;

  bool closed() const { return closed_; }
  const std::string& label() const { return label_; }
  Preset preset() const { return preset_; }
  int bodyness() const { return k_; }
  std::size_t brackets_evaluated() const { return brackets_; }
  double wall_time_s() const { return wall_time_s_; }

 private:
  friend LieBasis lie_closure(const GeneratorSet&, const StructureTable&,
                              ClosureStrategy);
  std::vector<Rational> to_dense(const SymOpVector& v) const;
  SymOpVector from_dense(const std::vector<Rational>& v) const;

  int n_;
  TripleIndex index_;
  Echelon echelon_;
  bool closed_ = false;
  std::string label_;
  Preset preset_ = Preset::kNone;
  int k_ = 0;
  std::size_t brackets_ = 0;
  double wall_time_s_ = 0;
};

/// Smallest bracket-closed subspace containing the generators. Zero and
/// duplicate generators are dropped; an empty set is rejected.
LieBasis lie_closure(const GeneratorSet& gens, const StructureTable& table,
                     ClosureStrategy strategy = ClosureStrategy::kAdjoint);

/// Checks [r_i, r_j] in span for every pair of rows.
bool is_bracket_closed(const LieBasis& basis, const StructureTable& table);

/// [C(n+3,3) - (floor(n/2)+1)] + floor(k/2); k = 2 for G2.
BigInt predicted_dim(Preset preset, int n, int k = 2);
std::optional<BigInt> predicted_dim(const GeneratorSet& gens);

/// sum_{a+b+c=mu} c_(2a,2b,2c) / (a! b! c!)
Rational constraint_residual(const SymOpVector& v, int mu);

struct ConstraintResidual {
  std::size_t row;
  int mu;
  Rational value;
};

/// One residual per (row, mu) for mu in 0..floor(n/2) outside `exempt`.
std::vector<ConstraintResidual> membership_constraints(const LieBasis& basis,
                                                       const std::set<int>& exempt);

struct ClosureReport {
  int n = 0;
  std::string label;
  std::size_t dim = 0;
  std::optional<BigInt> predicted_dim;
  BigInt dim_u, dim_su, dim_su_cless;
  bool universal = false;
  bool semi_universal = false;
  bool subspace_controllable = false;
  /// "semi-universal", "schur-blocks" or "not-certified".
  std::string subspace_controllable_source;
  std::size_t complement_dim = 0;
  /// Per mu: max over rows of |constraint residual|.
  std::vector<std::pair<int, Rational>> constraint_residuals;
  std::size_t iterations = 0;
  double wall_time_s = 0;

  bool prediction_matches() const {
    return !predicted_dim || BigInt(static_cast<unsigned long>(dim)) == *predicted_dim;
  }
};

/// Verdicts from the orthogonal complement of a finished closure:
/// semi-universal iff the complement is spanned by central elements,
/// universal iff it is spanned by the identity.
ClosureReport verdicts(const LieBasis& basis);

inline constexpr const char* kClosureReportSchema = "symlie.closure_report/1";
nlohmann::json to_json(const ClosureReport& r);

}  // namespace symlie
