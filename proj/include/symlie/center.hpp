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

#include <map>
#include <string>
#include <vector>

#include "symlie/number.hpp"
#include "symlie/structure.hpp"
#include "symlie/sym_op.hpp"
#include "symlie/sympauli.hpp"

namespace symlie {

/// C_mu = sum_{a+b+c=mu} (2a)!(2b)!(2c)!/(a!b!c!) P_(2a,2b,2c), a central
/// element of u^{S_n} living on level 2 mu.
struct CenterElement {
  int mu;
  SymOpVector vec;
};

/// L_mu = sum over permutations made of exactly mu disjoint transpositions
/// of the qubit-permutation operator R(pi), in the P basis.
struct ClassSumElement {
  int mu;
  SymOpVector vec;
};

CenterElement make_C(int mu, int n);

/// Built from the recombination
/// L_mu = 4^-mu/(n-2mu)! * sum_{mu'<=mu} (n-2mu')!/(mu-mu')! C_mu'.
ClassSumElement make_L(int mu, int n);

/// The same operator from the direct pairing count: the coefficient of
/// P_(2a,2b,2c) with f = mu - (a+b+c) unpaired transpositions is
/// 4^-mu/(n-2mu)! * (2a)!(2b)!(2c)!(n-2(mu-f))!/(a!b!c!f!).
SymOpVector make_L_direct(int mu, int n);

/// For every mu in 0..floor(n/2): true when trace_inner(H, C_mu) = 0 for
/// every generator H. Orthogonal directions can never enter the closure.
std::map<int, bool> central_projection_test(const GeneratorSet& gens);

struct CenterReport {
  int n = 0;
  int expected_dim = 0;            // floor(n/2) + 1
  bool brackets_vanish = false;    // [C_mu, P_t] = 0 for all mu, t
  std::size_t nonzero_brackets = 0;
  bool independent = false;        // the C_mu are linearly independent
  bool nullspace_computed = false; // false above kCenterNullspaceMaxN
  int centralizer_dim = -1;        // dimension of {v : [v, P_t] = 0 for all t}
  bool centralizer_matches = false;
  std::string note;

  bool passed() const;
};

inline constexpr int kCenterNullspaceMaxN = 10;

/// Checks that the C_mu are central and independent and, for
/// n <= kCenterNullspaceMaxN, that no larger central subspace exists by
/// solving the exact linear system [v, P_t] = 0 over all t.
CenterReport verify_center(int n, const StructureTable& table);

}  // namespace symlie
