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

#include "symlie/erratum.hpp"

#include <algorithm>

#include "symlie/echelon.hpp"
#include "symlie/errors.hpp"
#include "symlie/oracle.hpp"
#include "symlie/structure.hpp"
#include "symlie/triple.hpp"

namespace symlie::erratum {

namespace {

void check_kbar(int kbar, int n) {
  if (kbar < 3 || kbar > n) {
    throw DomainError("kbar must satisfy 3 <= kbar <= n (got kbar=" + std::to_string(kbar) +
                      ", n=" + std::to_string(n) + ")");
  }
}

SymOpVector flip_y(const SymOpVector& v) {
  SymOpVector out(v.n());
  for (const auto& [t, c] : v.coeffs()) out.add_term(t, t.ky % 2 ? -c : c);
  return out;
}

PauliTriple T(int kx, int ky, int kz) { return {kx, ky, kz}; }

struct Printed {
  PauliTriple triple;
  Rational coeff;
  bool valid;
};

// Printed right-hand sides, with each coefficient written as the sign factor
// times the combinatorial factor.
std::vector<Printed> printed_rhs(int which, int k, int n) {
  switch (which) {
    case 0:
      return {{T(k - 2, 2, 0), Rational(-2 * 2), true}, {T(k, 0, 0), Rational(2 * k), true}};
    case 1:
      return {{T(k - 2, 0, 2), Rational(2 * 2), true}, {T(k, 0, 0), Rational(-2 * k), true}};
    default:
      return {{T(k - 4, 2, 0), Rational(-2 * 2 * (n - k + 2)), k >= 4},
              {T(k - 2, 0, 0), Rational(2 * (k - 2) * (n - k + 2)), true},
              {T(k - 2, 2, 0), Rational(-2 * 2 * (k - 2)), true},
              {T(k - 2, 0, 2), Rational(-2 * 2), true},
              {T(k, 0, 0), Rational(2 * k * (k - 1)), true}};
  }
}

}  // namespace

SymOpVector to_local(const SymOpVector& global) { return flip_y(global); }
SymOpVector to_global(const SymOpVector& local) { return flip_y(local); }

SymOpVector local_bracket(const PauliTriple& a, const PauliTriple& b, int n) {
  // P'_t = (-1)^{k_y} (iP_t) as a global element.
  const int sign = (a.ky + b.ky) % 2 ? -1 : 1;
  return to_local(bracket(a, b, n) * Rational(sign));
}

SymOpVector local_bracket_dense(const PauliTriple& a, const PauliTriple& b, int n) {
  const auto da = oracle::densify(to_global(SymOpVector::unit(a, n)));
  const auto db = oracle::densify(to_global(SymOpVector::unit(b, n)));
  return to_local(oracle::symmetrize(oracle::dense_bracket(da, db)));
}

ErratumCase build_ABC(int kbar, int n, bool corrected) {
  check_kbar(kbar, n);
  const int k = kbar;
  ErratumCase c{k, n, corrected, SymOpVector(n), SymOpVector(n), SymOpVector(n)};
  // Factor multiplying each sign in the printed formulas; 1 when uncorrected.
  auto f = [&](long v) { return Rational(corrected ? v : 1); };
  c.A.add_term(T(k - 2, 2, 0), -2 * f(2));
  c.A.add_term(T(k, 0, 0), 2 * f(k));
  c.B.add_term(T(k - 2, 0, 2), 2 * f(2));
  c.B.add_term(T(k, 0, 0), -2 * f(k));
  c.C.add_term(T(k - 2, 2, 0), -2 * f(2L * (k - 2)));
  c.C.add_term(T(k - 2, 0, 2), -2 * f(2));
  c.C.add_term(T(k, 0, 0), 2 * f(static_cast<long>(k) * (k - 1)));
  return c;
}

std::size_t exact_rank(const std::vector<SymOpVector>& vs) {
  if (vs.empty()) return 0;
  const TripleIndex index(vs.front().n());
  Echelon e(index.size());
  for (const auto& v : vs) {
    if (v.n() != index.n()) throw DimensionError("exact_rank: n mismatch");
    Echelon::SparseRow row;
    for (const auto& [t, c] : v.coeffs()) {
      row.emplace_back(static_cast<std::uint32_t>(index.index(t)), c);
    }
    e.insert(row);
  }
  return e.rank();
}

bool dependence_holds(const ErratumCase& c) {
  return c.C == c.A * Rational(c.kbar - 2) - c.B;
}

bool CommutatorCheck::passed() const {
  return extra_terms.empty() &&
         std::all_of(terms.begin(), terms.end(), [](const PrintedTerm& t) { return t.match; });
}

bool NoteFReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(),
                                        [](const CommutatorCheck& c) { return c.passed(); });
}

NoteFReport verify_note_f_commutators(int kbar, int n) {
  check_kbar(kbar, n);
  if (n > oracle::kMaxN) {
    throw ResourceError("commutator check uses the dense oracle; n <= " +
                        std::to_string(oracle::kMaxN));
  }
  const int k = kbar;
  const std::pair<PauliTriple, PauliTriple> lhs[3] = {
      {T(k - 1, 1, 0), T(0, 0, 1)},
      {T(k - 1, 0, 1), T(0, 1, 0)},
      {T(k - 2, 1, 0), T(1, 0, 1)},
  };
  const char* names[3] = {"A", "B", "C_with_extras"};

  NoteFReport report{kbar, n, {}};
  for (int w = 0; w < 3; ++w) {
    CommutatorCheck chk;
    chk.name = names[w];
    chk.left = lhs[w].first;
    chk.right = lhs[w].second;
    const auto dense = local_bracket_dense(chk.left, chk.right, n);
    const auto sparse = local_bracket(chk.left, chk.right, n);
    std::vector<PauliTriple> seen;
    for (const auto& p : printed_rhs(w, k, n)) {
      if (!p.valid) {
        chk.not_applicable.push_back(std::to_string(p.triple.kx) + "," +
                                     std::to_string(p.triple.ky) + "," +
                                     std::to_string(p.triple.kz));
        continue;
      }
      PrintedTerm t{p.triple, p.coeff, dense.coeff(p.triple), sparse.coeff(p.triple), false};
      t.match = t.printed == t.dense && t.printed == t.structure;
      chk.terms.push_back(t);
      seen.push_back(p.triple);
    }
    for (const auto* v : {&dense, &sparse}) {
      for (const auto& [t, c] : v->coeffs()) {
        if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
        seen.push_back(t);
        chk.extra_terms.emplace_back(t, c);
      }
    }
    report.checks.push_back(std::move(chk));
  }
  return report;
}

nlohmann::json to_json(const NoteFReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : c.terms) {
      terms.push_back({{"triple", to_string(t.triple)},
                       {"printed", to_string(t.printed)},
                       {"dense", to_string(t.dense)},
                       {"structure", to_string(t.structure)},
                       {"match", t.match}});
    }
    nlohmann::json extra = nlohmann::json::array();
    for (const auto& [t, v] : c.extra_terms) {
      extra.push_back({{"triple", to_string(t)}, {"value", to_string(v)}});
    }
    checks.push_back({{"name", c.name},
                      {"left", to_string(c.left)},
                      {"right", to_string(c.right)},
                      {"terms", terms},
                      {"extra_terms", extra},
                      {"not_applicable", c.not_applicable},
                      {"passed", c.passed()}});
  }
  return {{"kbar", r.kbar},
          {"n", r.n},
          {"convention", "Y -> -Y, P -> iP"},
          {"checks", checks},
          {"passed", r.passed()}};
}

}  // namespace symlie::erratum
