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

#include "symlie/closure.hpp"

#include <chrono>
#include <deque>

#include "symlie/center.hpp"
#include "symlie/errors.hpp"

namespace symlie {

LieBasis::LieBasis(int n) : n_(n), index_(n), echelon_(index_.size()) {}

LieBasis LieBasis::span_of(int n, const std::vector<SymOpVector>& vectors) {
  LieBasis b(n);
  for (const auto& v : vectors) b.insert(v);
  return b;
}

std::vector<Rational> LieBasis::to_dense(const SymOpVector& v) const {
  if (v.n() != n_) {
    throw DimensionError("vector has n=" + std::to_string(v.n()) + ", basis has n=" +
                         std::to_string(n_));
  }
  std::vector<Rational> d(index_.size());
  for (const auto& [t, c] : v.coeffs()) d[index_.index(t)] = c;
  return d;
}

SymOpVector LieBasis::from_dense(const std::vector<Rational>& v) const {
  SymOpVector out(n_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.add_term(index_.triple(i), v[i]);
  }
  return out;
}

std::vector<SymOpVector> LieBasis::rows() const {
  std::vector<SymOpVector> out;
  for (const auto* row : echelon_.sorted_rows()) {
    SymOpVector v(n_);
    for (const auto& [c, x] : *row) v.add_term(index_.triple(c), x);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<PauliTriple> LieBasis::pivots() const {
  std::vector<PauliTriple> out;
  for (auto c : echelon_.pivot_columns()) out.push_back(index_.triple(c));
  return out;
}

bool LieBasis::insert(const SymOpVector& v) { return echelon_.insert(to_dense(v)); }

bool LieBasis::contains(const SymOpVector& v) const { return echelon_.contains(to_dense(v)); }

SymOpVector LieBasis::reduce(const SymOpVector& v) const {
  auto d = to_dense(v);
  echelon_.reduce(d);
  return from_dense(d);
}

std::vector<SymOpVector> LieBasis::orthogonal_complement() const {
  // x is trace-orthogonal to every row iff D x lies in the ordinary nullspace
  // of the row matrix, with D = diag(orbit sizes).
  std::vector<SymOpVector> out;
  for (auto& y : echelon_.nullspace()) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] != 0) y[i] /= Rational(orbit_size(index_.triple(i), n_));
    }
    out.push_back(from_dense(y));
  }
  return out;
}

LieBasis lie_closure(const GeneratorSet& gens, const StructureTable& table,
                     ClosureStrategy strategy) {
  const auto start = std::chrono::steady_clock::now();
  if (gens.members.empty()) throw ConstraintError("lie_closure: empty generator set");
  if (gens.n != table.n()) {
    throw DimensionError("generators have n=" + std::to_string(gens.n) +
                         ", table has n=" + std::to_string(table.n()));
  }
  LieBasis basis(gens.n);
  basis.label_ = gens.label;
  basis.preset_ = gens.preset;
  basis.k_ = gens.k;

  // Raw (unreduced) elements spanning the basis; they stay sparse, which keeps
  // the brackets cheap.
  std::vector<SymOpVector> elems;
  std::vector<SymOpVector> seeds;
  for (const auto& g : gens.members) {
    if (g.n() != gens.n) throw DimensionError("generator with mismatched n");
    if (g.is_zero()) continue;
    if (basis.insert(g)) {
      elems.push_back(g);
      seeds.push_back(g);
    }
  }

  std::size_t brackets = 0;
  if (strategy == ClosureStrategy::kAdjoint) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (const auto& g : seeds) {
        auto w = bracket_vectors(g, elems[i], table);
        ++brackets;
        if (!w.is_zero() && basis.insert(w)) elems.push_back(std::move(w));
      }
    }
  } else {
    std::deque<std::pair<std::size_t, std::size_t>> work;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) work.emplace_back(i, j);
    }
    while (!work.empty()) {
      auto [i, j] = work.front();
      work.pop_front();
      auto w = bracket_vectors(elems[i], elems[j], table);
      ++brackets;
      if (!w.is_zero() && basis.insert(w)) {
        const std::size_t k = elems.size();
        elems.push_back(std::move(w));
        for (std::size_t j2 = 0; j2 < k; ++j2) work.emplace_back(k, j2);
      }
    }
  }
  basis.closed_ = true;
  basis.brackets_ = brackets;
  basis.wall_time_s_ =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return basis;
}

bool is_bracket_closed(const LieBasis& basis, const StructureTable& table) {
  const auto rows = basis.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (!basis.contains(bracket_vectors(rows[i], rows[j], table))) return false;
    }
  }
  return true;
}

BigInt predicted_dim(Preset preset, int n, int k) {
  if (preset == Preset::kG2) k = 2;
  if (preset != Preset::kG2 && preset != Preset::kGk) {
    throw DomainError("predicted_dim is defined for G2 and Gk only");
  }
  if (k < 2 || k > n) {
    throw DomainError("predicted_dim needs 2 <= k <= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  const auto d = ambient_dims(n);
  return d.dim_u - d.dim_center + k / 2;
}

std::optional<BigInt> predicted_dim(const GeneratorSet& gens) {
  if (gens.preset != Preset::kG2 && gens.preset != Preset::kGk) return std::nullopt;
  return predicted_dim(gens.preset, gens.n, gens.k);
}

Rational constraint_residual(const SymOpVector& v, int mu) {
  Rational sum = 0;
  for (int a = 0; a <= mu; ++a) {
    for (int b = 0; a + b <= mu; ++b) {
      const int c = mu - a - b;
      const PauliTriple t{2 * a, 2 * b, 2 * c};
      if (!is_valid(t, v.n())) continue;
      const Rational x = v.coeff(t);
      if (x == 0) continue;
      sum += x / Rational(factorial(static_cast<unsigned>(a)) *
                          factorial(static_cast<unsigned>(b)) *
                          factorial(static_cast<unsigned>(c)));
    }
  }
  return sum;
}

std::vector<ConstraintResidual> membership_constraints(const LieBasis& basis,
                                                       const std::set<int>& exempt) {
  std::vector<ConstraintResidual> out;
  const auto rows = basis.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int mu = 0; mu <= basis.n() / 2; ++mu) {
      if (exempt.count(mu)) continue;
      out.push_back({r, mu, constraint_residual(rows[r], mu)});
    }
  }
  return out;
}

ClosureReport verdicts(const LieBasis& basis) {
  if (!basis.closed()) {
    throw StateError("verdicts needs a completed closure (basis is not closed)");
  }
  const int n = basis.n();
  ClosureReport r;
  r.n = n;
  r.label = basis.label();
  r.dim = basis.dim();
  if (basis.preset() == Preset::kG2 || basis.preset() == Preset::kGk) {
    r.predicted_dim = predicted_dim(basis.preset(), n, basis.bodyness());
  }
  const auto dims = ambient_dims(n);
  r.dim_u = dims.dim_u;
  r.dim_su = dims.dim_su;
  r.dim_su_cless = dims.dim_su_cless;

  const auto complement = basis.orthogonal_complement();
  r.complement_dim = complement.size();

  std::vector<SymOpVector> centers;
  for (int mu = 0; mu <= n / 2; ++mu) centers.push_back(make_C(mu, n).vec);
  const auto center_span = LieBasis::span_of(n, centers);
  const auto identity_span = LieBasis::span_of(n, {SymOpVector::unit({0, 0, 0}, n)});

  r.semi_universal = true;
  r.universal = true;
  for (const auto& v : complement) {
    if (!center_span.contains(v)) r.semi_universal = false;
    if (!identity_span.contains(v)) r.universal = false;
  }
  r.universal = r.universal && r.semi_universal;
  r.subspace_controllable = r.semi_universal;
  r.subspace_controllable_source = r.semi_universal ? "semi-universal" : "not-certified";

  const auto rows = basis.rows();
  for (int mu = 0; mu <= n / 2; ++mu) {
    Rational worst = 0;
    for (const auto& row : rows) {
      auto x = abs(constraint_residual(row, mu));
      if (x > worst) worst = x;
    }
    r.constraint_residuals.emplace_back(mu, worst);
  }
  r.iterations = basis.brackets_evaluated();
  r.wall_time_s = basis.wall_time_s();
  return r;
}

nlohmann::json to_json(const ClosureReport& r) {
  nlohmann::json j;
  j["schema"] = kClosureReportSchema;
  j["n"] = r.n;
  j["generators"] = r.label;
  j["dim"] = r.dim;
  j["predicted_dim"] = r.predicted_dim ? nlohmann::json(to_string(*r.predicted_dim))
                                       : nlohmann::json(nullptr);
  j["prediction_matches"] = r.prediction_matches();
  j["ambient"] = {{"dim_u", to_string(r.dim_u)},
                  {"dim_su", to_string(r.dim_su)},
                  {"dim_su_cless", to_string(r.dim_su_cless)}};
  j["verdicts"] = {{"universal", r.universal},
                   {"semi_universal", r.semi_universal},
                   {"subspace_controllable", r.subspace_controllable},
                   {"subspace_controllable_source", r.subspace_controllable_source}};
  j["complement_dim"] = r.complement_dim;
  nlohmann::json res = nlohmann::json::array();
  for (const auto& [mu, x] : r.constraint_residuals) {
    res.push_back({{"mu", mu}, {"max_abs_residual", to_string(x)}});
  }
  j["constraint_residuals"] = std::move(res);
  j["iterations"] = r.iterations;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

}  // namespace symlie
