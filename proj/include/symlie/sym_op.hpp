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

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "symlie/number.hpp"
#include "symlie/triple.hpp"

namespace symlie {

/// Exact coordinates of a skew-Hermitian S_n-equivariant operator
/// i * sum_t c_t P_t in the symmetrized-Pauli basis.
///
/// Canonical sparse form: no zero coefficient is ever stored, so equality of
/// vectors is equality of their coefficient maps.
class SymOpVector {
 public:
  using Coeffs = std::map<PauliTriple, Rational>;

  explicit SymOpVector(int n);
  SymOpVector(int n, std::initializer_list<std::pair<PauliTriple, Rational>> terms);
  SymOpVector(int n, const Coeffs& coeffs);

  /// Unit coordinate on one triple.
  static SymOpVector unit(const PauliTriple& t, int n);

  int n() const { return n_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  Rational coeff(const PauliTriple& t) const;

  /// this += c * P_t
  void add_term(const PauliTriple& t, const Rational& c);
  void add_scaled(const SymOpVector& other, const Rational& c);

  SymOpVector operator-() const;
  SymOpVector& operator+=(const SymOpVector& o);
  SymOpVector& operator-=(const SymOpVector& o);
  SymOpVector& operator*=(const Rational& c);

  friend SymOpVector operator+(SymOpVector a, const SymOpVector& b) { return a += b; }
  friend SymOpVector operator-(SymOpVector a, const SymOpVector& b) { return a -= b; }
  friend SymOpVector operator*(SymOpVector a, const Rational& c) { return a *= c; }
  friend SymOpVector operator*(const Rational& c, SymOpVector a) { return a *= c; }

  bool operator==(const SymOpVector& o) const {
    return n_ == o.n_ && coeffs_ == o.coeffs_;
  }

 private:
  int n_;
  Coeffs coeffs_;
};

/// "c*kx,ky,kz + ..." for diagnostics.
std::string to_string(const SymOpVector& v);

void require_same_n(const SymOpVector& a, const SymOpVector& b);

}  // namespace symlie
