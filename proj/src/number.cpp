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

#include "symlie/number.hpp"

#include <stdexcept>

namespace symlie {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

BigInt multinomial(unsigned n, unsigned a, unsigned b, unsigned c) {
  if (a + b + c > n) return 0;
  return binomial(n, a) * binomial(n - a, b) * binomial(n - a - b, c);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational ratio(const BigInt& p, const BigInt& q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace symlie
