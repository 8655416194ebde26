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

#include "symlie/center.hpp"

#include "symlie/closure.hpp"
#include "symlie/echelon.hpp"
#include "symlie/errors.hpp"

namespace symlie {

namespace {

void check_mu(int mu, int n) {
  if (n < 1) throw ConstraintError("n must be >= 1");
  if (mu < 0 || mu > n / 2) {
    throw ConstraintError("mu=" + std::to_string(mu) + " outside 0..floor(n/2) for n=" +
                          std::to_string(n));
  }
}

BigInt fact(int k) { return factorial(static_cast<unsigned>(k)); }

Rational pow4_inv(int mu) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(mu));
  return ratio(BigInt(1), p);
}

}  // namespace

CenterElement make_C(int mu, int n) {
  check_mu(mu, n);
  SymOpVector v(n);
  for (int a = 0; a <= mu; ++a) {
    for (int b = 0; a + b <= mu; ++b) {
      const int c = mu - a - b;
      v.add_term({2 * a, 2 * b, 2 * c},
                 ratio(fact(2 * a) * fact(2 * b) * fact(2 * c),
                       fact(a) * fact(b) * fact(c)));
    }
  }
  return {mu, std::move(v)};
}

ClassSumElement make_L(int mu, int n) {
  check_mu(mu, n);
  SymOpVector v(n);
  const Rational prefactor = pow4_inv(mu) / Rational(fact(n - 2 * mu));
  for (int m = 0; m <= mu; ++m) {
    const Rational w = prefactor * ratio(fact(n - 2 * m), fact(mu - m));
    v.add_scaled(make_C(m, n).vec, w);
  }
  return {mu, std::move(v)};
}

SymOpVector make_L_direct(int mu, int n) {
  check_mu(mu, n);
  SymOpVector v(n);
  const Rational prefactor = pow4_inv(mu) / Rational(fact(n - 2 * mu));
  for (int a = 0; a <= mu; ++a) {
    for (int b = 0; a + b <= mu; ++b) {
      for (int c = 0; a + b + c <= mu; ++c) {
        const int f = mu - a - b - c;
        v.add_term({2 * a, 2 * b, 2 * c},
                   prefactor * ratio(fact(2 * a) * fact(2 * b) * fact(2 * c) *
                                         fact(n - 2 * (mu - f)),
                                     fact(a) * fact(b) * fact(c) * fact(f)));
      }
    }
  }
  return v;
}

std::map<int, bool> central_projection_test(const GeneratorSet& gens) {
  std::map<int, bool> out;
  for (int mu = 0; mu <= gens.n / 2; ++mu) {
    const auto c = make_C(mu, gens.n).vec;
    bool orthogonal = true;
    for (const auto& h : gens.members) {
      if (trace_inner(h, c) != 0) {
        orthogonal = false;
        break;
      }
    }
    out[mu] = orthogonal;
  }
  return out;
}

bool CenterReport::passed() const {
  return brackets_vanish && independent && (!nullspace_computed || centralizer_matches);
}

CenterReport verify_center(int n, const StructureTable& table) {
  if (table.n() != n) throw DimensionError("verify_center: table n mismatch");
  CenterReport r;
  r.n = n;
  r.expected_dim = n / 2 + 1;

  std::vector<SymOpVector> centers;
  for (int mu = 0; mu <= n / 2; ++mu) centers.push_back(make_C(mu, n).vec);

  const auto& triples = table.index().triples();
  for (const auto& c : centers) {
    for (const auto& t : triples) {
      if (!bracket_vectors(c, SymOpVector::unit(t, n), table).is_zero()) ++r.nonzero_brackets;
    }
  }
  r.brackets_vanish = r.nonzero_brackets == 0;
  r.independent = LieBasis::span_of(n, centers).dim() == centers.size();

  if (n > kCenterNullspaceMaxN) {
    r.note = "centralizer dimension not recomputed above n=" +
             std::to_string(kCenterNullspaceMaxN) + "; it is fixed by the proved count";
    return r;
  }

  // Unknown v = sum_s v_s P_s; equations: coefficient of P_u in [v, P_t] is 0.
  const std::size_t width = triples.size();
  const std::size_t target_rank = width - static_cast<std::size_t>(r.expected_dim);
  const bool may_stop_early = r.brackets_vanish && r.independent;
  Echelon eq(width);
  for (const auto& t : triples) {
    std::map<PauliTriple, Echelon::SparseRow> rows;
    for (std::size_t s = 0; s < width; ++s) {
      for (const auto& term : table.entry(triples[s], t)) {
        rows[term.triple].emplace_back(static_cast<std::uint32_t>(s), Rational(term.coeff));
      }
    }
    for (const auto& [u, row] : rows) eq.insert(row);
    if (may_stop_early && eq.rank() == target_rank) break;
  }
  r.nullspace_computed = true;
  r.centralizer_dim = static_cast<int>(width - eq.rank());
  r.centralizer_matches = r.brackets_vanish && r.independent &&
                          r.centralizer_dim == r.expected_dim;
  return r;
}

}  // namespace symlie
