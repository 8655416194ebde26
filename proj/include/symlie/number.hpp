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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symlie {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);  // 0 when k < 0 or k > n

/// n! / (k_1! k_2! ... k_r! (n - sum k)!)
BigInt multinomial(unsigned n, unsigned a, unsigned b, unsigned c);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
Rational parse_rational(const std::string& text);

Rational abs(const Rational& q);

/// p / q in lowest terms. Prefer this to the two-argument mpq_class
/// constructor, which leaves the fraction unreduced.
Rational ratio(const BigInt& p, const BigInt& q);

}  // namespace symlie
