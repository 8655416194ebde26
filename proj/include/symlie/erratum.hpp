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
#include <string>
#include <vector>

#include "json.hpp"
#include "symlie/number.hpp"
#include "symlie/sym_op.hpp"

namespace symlie::erratum {

/// Coordinates in this module use the relabelled convention Y -> -Y,
/// P -> iP: a vector c stands for sum_t c_t P'_t with P'_t = i (-1)^{k_y} P_t.
/// Everything else in the library uses the global convention (coordinates
/// of i sum_t c_t P_t). The two maps below convert between them; each is the
/// other's inverse and both are involutions.
SymOpVector to_local(const SymOpVector& global);
SymOpVector to_global(const SymOpVector& local);

/// [P'_a, P'_b] in local coordinates, via the structure module.
SymOpVector local_bracket(const PauliTriple& a, const PauliTriple& b, int n);

/// Same commutator via the dense oracle (n <= 6).
SymOpVector local_bracket_dense(const PauliTriple& a, const PauliTriple& b, int n);

struct ErratumCase {
  int kbar = 0;
  int n = 0;
  bool corrected = true;
  SymOpVector A, B, C;
};

/// A, B, C in local coordinates. `corrected = false` drops the combinatorial
/// factors, reproducing the values used by the earlier universality proof.
/// Requires 3 <= kbar <= n.
ErratumCase build_ABC(int kbar, int n, bool corrected = true);

/// Exact rank of a list of vectors of equal n.
std::size_t exact_rank(const std::vector<SymOpVector>& vs);

/// C == (kbar - 2) A - B coefficientwise.
bool dependence_holds(const ErratumCase& c);

struct PrintedTerm {
  PauliTriple triple;
  Rational printed;
  Rational dense;      // recomputed with the dense oracle
  Rational structure;  // recomputed with the structure constants
  bool match = false;
};

struct CommutatorCheck {
  std::string name;  // "A", "B", "C_with_extras"
  PauliTriple left, right;
  std::vector<PrintedTerm> terms;
  /// Recomputed terms absent from the printed right-hand side.
  std::vector<std::pair<PauliTriple, Rational>> extra_terms;
  /// Printed terms dropped because their index is invalid at this kbar.
  std::vector<std::string> not_applicable;
  bool passed() const;
};

struct NoteFReport {
  int kbar = 0;
  int n = 0;
  std::vector<CommutatorCheck> checks;
  bool passed() const;
};

/// Recomputes the three printed commutators
///   [P'(k-1,1,0), P'(0,0,1)], [P'(k-1,0,1), P'(0,1,0)], [P'(k-2,1,0), P'(1,0,1)]
/// with both engines and compares every printed coefficient. Requires
/// 3 <= kbar <= n <= 6.
NoteFReport verify_note_f_commutators(int kbar, int n);

nlohmann::json to_json(const NoteFReport& r);

}  // namespace symlie::erratum
