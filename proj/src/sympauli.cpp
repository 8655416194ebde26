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

#include "symlie/sympauli.hpp"

#include <sstream>

#include "symlie/errors.hpp"

namespace symlie {

BigInt orbit_size(const PauliTriple& t, int n) {
  validate(t, n);
  return multinomial(static_cast<unsigned>(n), static_cast<unsigned>(t.kx),
                     static_cast<unsigned>(t.ky), static_cast<unsigned>(t.kz));
}

Rational trace_inner(const SymOpVector& u, const SymOpVector& v) {
  require_same_n(u, v);
  const auto& small = u.size() <= v.size() ? u : v;
  const auto& large = u.size() <= v.size() ? v : u;
  Rational sum = 0;
  for (const auto& [t, c] : small.coeffs()) {
    auto it = large.coeffs().find(t);
    if (it == large.coeffs().end()) continue;
    sum += Rational(orbit_size(t, u.n())) * c * it->second;
  }
  BigInt two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(u.n()));
  return sum * Rational(two_n);
}

AmbientDims ambient_dims(int n) {
  if (n < 1) throw ConstraintError("n must be >= 1");
  AmbientDims d;
  d.dim_u = binomial(n + 3, 3);
  d.dim_su = d.dim_u - 1;
  d.dim_center = n / 2 + 1;
  d.dim_su_cless = d.dim_u - d.dim_center;
  return d;
}

GeneratorSet GeneratorSet::g1(int n) {
  GeneratorSet g{n, {SymOpVector::unit({1, 0, 0}, n)}, "G1", Preset::kG1, 1};
  return g;
}

GeneratorSet GeneratorSet::g1_prime(int n) {
  GeneratorSet g{n,
                 {SymOpVector::unit({1, 0, 0}, n), SymOpVector::unit({0, 1, 0}, n)},
                 "G1prime",
                 Preset::kG1Prime,
                 1};
  return g;
}

GeneratorSet GeneratorSet::g2(int n) {
  if (n < 2) throw DomainError("G2 needs n >= 2");
  GeneratorSet g = gk(n, 2);
  g.label = "G2";
  g.preset = Preset::kG2;
  return g;
}

GeneratorSet GeneratorSet::gk(int n, int k) {
  if (k < 2 || k > n) {
    throw DomainError("Gk needs 2 <= k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  GeneratorSet g{n, {}, "Gk:" + std::to_string(k), Preset::kGk, k};
  g.members.push_back(SymOpVector::unit({1, 0, 0}, n));
  g.members.push_back(SymOpVector::unit({0, 1, 0}, n));
  for (int kappa = 2; kappa <= k; ++kappa) {
    g.members.push_back(SymOpVector::unit({0, 0, kappa}, n));
  }
  return g;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<GeneratorSet> parse_preset(const std::string& token, int n) {
  if (token == "G1") return GeneratorSet::g1(n);
  if (token == "G1prime" || token == "G1'") return GeneratorSet::g1_prime(n);
  if (token == "G2") return GeneratorSet::g2(n);
  if (token.rfind("Gk:", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(token.substr(3), &used);
      if (used != token.size() - 3) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ConstraintError("malformed preset '" + token + "'");
    }
    return GeneratorSet::gk(n, k);
  }
  return std::nullopt;
}

}  // namespace

GeneratorSet parse_generator_set(const std::string& text, int n) {
  std::vector<std::string> tokens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    tok = trim(tok);
    if (!tok.empty()) tokens.push_back(tok);
  }
  if (tokens.empty()) throw ConstraintError("empty generator specification");
  if (tokens.size() == 1) {
    if (auto preset = parse_preset(tokens[0], n)) return *preset;
  }
  GeneratorSet out{n, {}, trim(text), Preset::kNone, 0};
  for (const auto& t : tokens) {
    if (auto preset = parse_preset(t, n)) {
      for (auto& m : preset->members) out.members.push_back(std::move(m));
    } else {
      auto triple = parse_triple(t);
      validate(triple, n);
      out.members.push_back(SymOpVector::unit(triple, n));
    }
  }
  return out;
}

}  // namespace symlie
