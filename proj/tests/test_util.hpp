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

#include <ostream>
#include <random>
#include <vector>

#include "symlie/sym_op.hpp"
#include "symlie/triple.hpp"

namespace symlie {

// Readable gtest failure messages.
inline void PrintTo(const SymOpVector& v, std::ostream* os) { *os << to_string(v); }
inline void PrintTo(const PauliTriple& t, std::ostream* os) { *os << "(" << to_string(t) << ")"; }

}  // namespace symlie

namespace symlie::testing {

/// Seeded generator so property tests are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20260415u);
  return g;
}

inline int uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline PauliTriple random_triple(int n) {
  const int kx = uniform(0, n);
  const int ky = uniform(0, n - kx);
  const int kz = uniform(0, n - kx - ky);
  return {kx, ky, kz};
}

/// Sparse vector with up to `terms` entries, small rational coefficients.
inline SymOpVector random_vector(int n, int terms = 4) {
  SymOpVector v(n);
  for (int i = 0; i < terms; ++i) {
    const Rational c(uniform(-5, 5), uniform(1, 3));
    Rational r = c;
    r.canonicalize();
    v.add_term(random_triple(n), r);
  }
  return v;
}

}  // namespace symlie::testing
