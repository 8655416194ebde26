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

#include "symlie/number.hpp"
#include "symlie/sym_op.hpp"
#include "symlie/triple.hpp"

namespace symlie {

/// Number of distinct Pauli words summed in P_t:
/// n! / (k_x! k_y! k_z! (n - level)!).
BigInt orbit_size(const PauliTriple& t, int n);

/// Frobenius product Tr[U^dagger V] of the operators represented by u and v.
/// Distinct Pauli words are trace-orthogonal, so this is
/// 2^n * sum_t orbit_size(t) u_t v_t.
Rational trace_inner(const SymOpVector& u, const SymOpVector& v);

struct AmbientDims {
  BigInt dim_u;         // u^{S_n}: C(n+3,3)
  BigInt dim_su;        // traceless part
  BigInt dim_su_cless;  // centerless part
  BigInt dim_center;    // floor(n/2) + 1
};

AmbientDims ambient_dims(int n);

enum class Preset { kNone, kG1, kG1Prime, kG2, kGk };

/// Ordered list of equivariant generators, optionally tagged with the
/// preset it was expanded from.
struct GeneratorSet {
  int n = 0;
  std::vector<SymOpVector> members;
  std::string label;
  Preset preset = Preset::kNone;
  int k = 0;  // bodyness for kG2 (2) and kGk

  static GeneratorSet g1(int n);        // {P100}
  static GeneratorSet g1_prime(int n);  // {P100, P010}
  static GeneratorSet g2(int n);        // {P100, P010, P002}
  static GeneratorSet gk(int n, int k); // {P100, P010, P002, ..., P00k}
};

/// Parses the canonical text form: semicolon-separated triples
/// ("1,0,0;0,1,0") and/or preset names ("G1", "G1prime", "G2", "Gk:4").
GeneratorSet parse_generator_set(const std::string& text, int n);

}  // namespace symlie
