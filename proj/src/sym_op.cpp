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

#include "symlie/sym_op.hpp"

#include "symlie/errors.hpp"

namespace symlie {

SymOpVector::SymOpVector(int n) : n_(n) {
  if (n < 1) throw ConstraintError("n must be >= 1");
}

SymOpVector::SymOpVector(
    int n, std::initializer_list<std::pair<PauliTriple, Rational>> terms)
    : SymOpVector(n) {
  for (const auto& [t, c] : terms) add_term(t, c);
}

SymOpVector::SymOpVector(int n, const Coeffs& coeffs) : SymOpVector(n) {
  for (const auto& [t, c] : coeffs) add_term(t, c);
}

SymOpVector SymOpVector::unit(const PauliTriple& t, int n) {
  SymOpVector v(n);
  v.add_term(t, 1);
  return v;
}

Rational SymOpVector::coeff(const PauliTriple& t) const {
  auto it = coeffs_.find(t);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymOpVector::add_term(const PauliTriple& t, const Rational& c) {
  validate(t, n_);
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();  // callers may hand in an unreduced p/q
  auto [it, inserted] = coeffs_.try_emplace(t, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void SymOpVector::add_scaled(const SymOpVector& other, const Rational& c) {
  require_same_n(*this, other);
  if (c == 0) return;
  for (const auto& [t, x] : other.coeffs_) add_term(t, c * x);
}

SymOpVector SymOpVector::operator-() const {
  SymOpVector out(*this);
  for (auto& [t, c] : out.coeffs_) c = -c;
  return out;
}

SymOpVector& SymOpVector::operator+=(const SymOpVector& o) {
  add_scaled(o, 1);
  return *this;
}

SymOpVector& SymOpVector::operator-=(const SymOpVector& o) {
  add_scaled(o, -1);
  return *this;
}

SymOpVector& SymOpVector::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
  } else {
    Rational f = c;
    f.canonicalize();
    for (auto& [t, x] : coeffs_) x *= f;
  }
  return *this;
}

std::string to_string(const SymOpVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [t, c] : v.coeffs()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*P(" + to_string(t) + ")";
  }
  return out;
}

void require_same_n(const SymOpVector& a, const SymOpVector& b) {
  if (a.n() != b.n()) {
    throw DimensionError("operands have n=" + std::to_string(a.n()) + " and n=" +
                         std::to_string(b.n()));
  }
}

}  // namespace symlie
