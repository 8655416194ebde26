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

#include "symlie/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "symlie/center.hpp"
#include "symlie/closure.hpp"
#include "symlie/erratum.hpp"
#include "symlie/errors.hpp"
#include "symlie/oracle.hpp"
#include "symlie/schurweyl.hpp"
#include "symlie/sympauli.hpp"

namespace symlie::suite {

namespace {

using nlohmann::json;

// dim u^{S_n} = C(n+3,3), computed from the definition rather than taken
// from the library.
BigInt dim_u(int n) { return binomial(n + 3, 3); }

Check make(std::string name, int n, int k = 0) {
  Check c;
  c.name = std::move(name);
  c.n = n;
  c.k = k;
  return c;
}

LieBasis close(const GeneratorSet& g, Tables& t) {
  return lie_closure(g, t.get(g.n), ClosureStrategy::kAdjoint);
}

// Max |trace_inner(row, C_mu)| must be exactly zero for orthogonal mu.
bool conserved(const LieBasis& basis, const std::map<int, bool>& orth, json& detail) {
  bool ok = true;
  const auto rows = basis.rows();
  for (const auto& [mu, is_orth] : orth) {
    if (!is_orth) continue;
    const auto c = make_C(mu, basis.n()).vec;
    std::size_t bad = 0;
    for (const auto& r : rows) bad += trace_inner(r, c) != 0;
    detail["nonzero_overlaps_mu" + std::to_string(mu)] = bad;
    ok = ok && bad == 0;
  }
  return ok;
}

json mus(const std::map<int, bool>& orth, bool want) {
  json out = json::array();
  for (const auto& [mu, o] : orth) {
    if (o == want) out.push_back(mu);
  }
  return out;
}

void thm1(int n, Tables& t, std::vector<Check>& out) {
  auto c = make("g2_dimension", n);
  const auto basis = close(GeneratorSet::g2(n), t);
  const auto r = verdicts(basis);
  const BigInt expected = dim_u(n) - n / 2;
  const bool universal_expected = n / 2 == 1;
  c.passed = BigInt(static_cast<long>(basis.dim())) == expected && r.semi_universal &&
             r.universal == universal_expected;
  c.detail = {{"dim", basis.dim()},
              {"expected", to_string(expected)},
              {"semi_universal", r.semi_universal},
              {"universal", r.universal},
              {"universal_expected", universal_expected}};
  out.push_back(std::move(c));
}

void thm5_cor1(int n, bool threshold, Tables& t, std::vector<Check>& out) {
  for (int k = 2; k <= n; ++k) {
    auto c = make(threshold ? "gk_universality_threshold" : "gk_dimension", n, k);
    const auto basis = close(GeneratorSet::gk(n, k), t);
    const BigInt dim(static_cast<long>(basis.dim()));
    const BigInt su = dim_u(n) - 1;
    if (threshold) {
      const bool expect = (n % 2 == 0 && k == n) || (n % 2 == 1 && k >= n - 1);
      const auto r = verdicts(basis);
      c.passed = r.universal == expect && (dim == su) == expect;
      c.detail = {{"dim", basis.dim()}, {"dim_su", to_string(su)},
                  {"universal", r.universal}, {"universal_expected", expect}};
    } else {
      const BigInt expected = su - n / 2 + k / 2;
      c.passed = dim == expected;
      c.detail = {{"dim", basis.dim()}, {"expected", to_string(expected)}};
    }
    out.push_back(std::move(c));
  }
}

void prop1(int n, Tables& t, std::vector<Check>& out) {
  auto c = make("center", n);
  const auto r = verify_center(n, t.get(n));
  c.passed = r.passed() && (!r.nullspace_computed || r.centralizer_dim == n / 2 + 1);
  c.detail = {{"expected_dim", r.expected_dim},
              {"brackets_vanish", r.brackets_vanish},
              {"independent", r.independent},
              {"nullspace_computed", r.nullspace_computed},
              {"centralizer_dim", r.centralizer_dim}};
  if (!r.note.empty()) c.detail["note"] = r.note;
  out.push_back(std::move(c));
}

void projections(int n, int k, Tables& t, std::vector<Check>& out) {
  const auto gens = k == 2 ? GeneratorSet::g2(n) : GeneratorSet::gk(n, k);
  auto c = make(k == 2 ? "g2_central_projection" : "gk_central_projection", n, k);
  const auto orth = central_projection_test(gens);
  bool pattern = true;
  for (const auto& [mu, o] : orth) pattern = pattern && o == !(mu >= 1 && mu <= k / 2);
  c.detail = {{"non_orthogonal", mus(orth, false)}, {"orthogonal", mus(orth, true)}};
  const bool cons = conserved(close(gens, t), orth, c.detail);
  c.passed = pattern && cons;
  out.push_back(std::move(c));
}

void thm4(int n, Tables& t, std::vector<Check>& out) {
  const auto basis = close(GeneratorSet::g2(n), t);
  auto c = make("g2_membership_constraints", n);
  std::size_t bad = 0;
  for (const auto& r : membership_constraints(basis, {1})) bad += r.value != 0;
  c.passed = bad == 0;
  c.detail = {{"rows", basis.dim()}, {"violations", bad}};
  out.push_back(std::move(c));

  auto w = make("c1_reachable_and_violates_only_mu1", n);
  const auto c1 = make_C(1, n).vec;
  bool only = constraint_residual(c1, 1) != 0;
  for (int mu = 0; mu <= n / 2; ++mu) {
    if (mu != 1) only = only && constraint_residual(c1, mu) == 0;
  }
  const bool reachable = basis.contains(c1);
  w.passed = reachable && only;
  w.detail = {{"reachable", reachable},
              {"mu1_residual", to_string(constraint_residual(c1, 1))},
              {"violates_only_mu1", only}};
  out.push_back(std::move(w));
}

void lemma2(int n, std::vector<Check>& out) {
  std::vector<SymOpVector> ls, cs;
  for (int mu = 0; mu <= n / 2; ++mu) {
    auto c = make("class_sum_mu" + std::to_string(mu), n);
    const auto L = make_L(mu, n).vec;
    const bool direct = L == make_L_direct(mu, n);
    c.detail["recombination_equals_direct_count"] = direct;
    bool dense = true;
    if (n <= oracle::kMaxN) {
      dense = oracle::densify(L) == oracle::class_sum(mu, n);
      c.detail["equals_permutation_sum"] = dense;
    }
    ls.push_back(L);
    cs.push_back(make_C(mu, n).vec);
    const auto sl = LieBasis::span_of(n, ls), sc = LieBasis::span_of(n, cs);
    bool same = sl.dim() == sc.dim();
    for (const auto& v : cs) same = same && sl.contains(v);
    c.detail["span_L_equals_span_C"] = same;
    c.passed = direct && dense && same;
    out.push_back(std::move(c));
  }
}

void note_f(int n, std::vector<Check>& out) {
  for (int k = 3; k <= n; ++k) {
    auto c = make("abc_dependence", n, k);
    const auto fixed = erratum::build_ABC(k, n);
    const auto orig = erratum::build_ABC(k, n, false);
    const auto rank = erratum::exact_rank({fixed.A, fixed.B, fixed.C});
    const auto rank_orig = erratum::exact_rank({orig.A, orig.B, orig.C});
    const bool dep = erratum::dependence_holds(fixed);
    c.passed = rank == 2 && dep && rank_orig == 3;
    c.detail = {{"rank", rank}, {"relation_holds", dep}, {"rank_uncorrected", rank_orig}};
    out.push_back(std::move(c));
    if (n <= oracle::kMaxN) {
      auto v = make("printed_commutators", n, k);
      const auto r = erratum::verify_note_f_commutators(k, n);
      v.passed = r.passed();
      v.detail = erratum::to_json(r);
      out.push_back(std::move(v));
    }
  }
}

void schur(int n, Tables& t, std::vector<Check>& out) {
  auto s = make("sum_rules", n);
  const auto rules = check_sum_rules(n);
  s.passed = rules.holds;
  s.detail = {{"sum_dm", to_string(rules.sum_dm)}, {"sum_m2", to_string(rules.sum_m2)}};
  out.push_back(std::move(s));
  if (n > kSubspaceMaxN) return;

  const auto st = build_schur_transform(n);
  auto u = make("transform_unitary", n);
  u.detail = {{"error", st.unitarity_error()}};
  u.passed = st.unitarity_error() < kUnitarityTol;
  out.push_back(std::move(u));

  auto e = make("center_sector_scalars", n);
  e.passed = true;
  json scalars = json::array();
  for (int mu = 0; mu <= n / 2; ++mu) {
    const auto sc = sector_scalars(make_C(mu, n).vec, st);
    json row = json::array();
    for (const auto& [m, val] : sc.e) row.push_back(val);
    scalars.push_back({{"mu", mu}, {"e", row}, {"variance", sc.max_variance}});
    e.passed = e.passed && sc.max_variance < 1e-18 && sc.max_offdiag < kBlockTol;
  }
  e.detail = {{"C", scalars}};
  out.push_back(std::move(e));

  if (n < 2) return;  // no two-body generators on one qubit
  const auto basis = close(GeneratorSet::g2(n), t);
  auto cert_check = make("g2_blocks_and_subspace_control", n);
  const auto cert = certify_subspace_control(basis, st);
  cert_check.detail = to_json(cert);
  cert_check.passed = cert.max_off_pattern < kBlockTol && cert.certified();
  out.push_back(std::move(cert_check));
}

void oracle_checks(int n, Tables& t, std::vector<Check>& out) {
  std::vector<GeneratorSet> sets;
  if (n <= 5) {
    sets = {GeneratorSet::g1(n), GeneratorSet::g1_prime(n)};
    if (n >= 2) sets.push_back(GeneratorSet::g2(n));
    for (int k = 3; k <= std::min(n, 5); ++k) sets.push_back(GeneratorSet::gk(n, k));
  } else {
    sets = {GeneratorSet::g2(n)};
  }
  for (const auto& g : sets) {
    auto c = make("closure_" + g.label, n, g.k);
    std::vector<oracle::DenseOp> dense;
    for (const auto& m : g.members) dense.push_back(oracle::densify(m));
    const auto dc = oracle::dense_closure(dense);
    const auto sc = close(g, t);
    c.passed = dc.dim == sc.dim();
    c.detail = {{"dense_dim", dc.dim}, {"sparse_dim", sc.dim()}};
    if (!dc.warnings.empty()) c.detail["warnings"] = dc.warnings;
    out.push_back(std::move(c));
  }
  if (n <= 4) {
    auto c = make("dense_center_dim", n);
    const auto d = oracle::dense_center_dim(n);
    c.passed = d == static_cast<std::size_t>(n / 2 + 1);
    c.detail = {{"dim", d}};
    out.push_back(std::move(c));
  }
}

void structure(int n, Tables& t, std::vector<Check>& out) {
  const auto triples = all_triples(n);
  {
    auto c = make("overlap_equals_orbit_expansion", n);
    std::size_t pairs = 0, bad = 0;
    for (const auto& a : triples) {
      for (const auto& b : triples) {
        if (b < a) continue;
        ++pairs;
        bad += !(bracket(a, b, n) == bracket_orbit_expansion(a, b, n));
      }
    }
    c.passed = bad == 0;
    c.detail = {{"pairs", pairs}, {"mismatches", bad}};
    out.push_back(std::move(c));
  }
  if (n <= 5) {
    auto c = make("table_equals_dense_oracle", n);
    std::vector<oracle::DenseOp> dense;
    for (const auto& a : triples) dense.push_back(oracle::densify(SymOpVector::unit(a, n)));
    std::size_t bad = 0;
    const auto& table = t.get(n);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (std::size_t j = 0; j < triples.size(); ++j) {
        const auto d = oracle::symmetrize(oracle::dense_bracket(dense[i], dense[j]));
        bad += !(d == table.entry_vector(triples[i], triples[j]));
      }
    }
    c.passed = bad == 0;
    c.detail = {{"pairs", triples.size() * triples.size()}, {"mismatches", bad}};
    out.push_back(std::move(c));
  }
  if (n <= 4) {
    auto c = make("jacobi_full_scan", n);
    const auto& table = t.get(n);
    std::size_t bad = 0, count = 0;
    for (const auto& a : triples) {
      const auto A = SymOpVector::unit(a, n);
      for (const auto& b : triples) {
        const auto B = SymOpVector::unit(b, n);
        for (const auto& x : triples) {
          const auto X = SymOpVector::unit(x, n);
          const auto j = bracket_vectors(A, table.entry_vector(b, x), table) +
                         bracket_vectors(B, table.entry_vector(x, a), table) +
                         bracket_vectors(X, table.entry_vector(a, b), table);
          bad += !j.is_zero();
          ++count;
        }
      }
    }
    c.passed = bad == 0;
    c.detail = {{"triples", count}, {"violations", bad}};
    out.push_back(std::move(c));
  }
}

}  // namespace

bool Report::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& selectors() {
  static const std::vector<std::string> s = {"thm1", "thm3", "thm4",   "thm5",  "thm6",  "cor1",
                                             "prop1", "lemma2", "noteF", "schur", "oracle",
                                             "structure"};
  return s;
}

int max_n(const std::string& selector) {
  if (selector == "oracle") return oracle::kMaxN;
  if (selector == "schur") return 20;
  if (selector == "structure") return 8;
  if (selector == "prop1") return kCenterNullspaceMaxN;
  return 40;
}

int min_n(const std::string& selector) {
  if (selector == "noteF") return 3;
  if (selector == "thm1" || selector == "thm3" || selector == "thm4" || selector == "thm5" ||
      selector == "thm6" || selector == "cor1") {
    return 2;
  }
  return 1;
}

const StructureTable& Tables::get(int n) {
  auto& slot = tables_[n];
  if (!slot) {
    if (opts_.cache_dir) {
      auto b = build_table(n, {}, BracketMethod::kOverlap, opts_.cache_dir);
      for (auto& w : b.warnings) warnings_.push_back(std::move(w));
      slot = std::move(b.table);
    } else {
      slot = std::make_shared<StructureTable>(n);
    }
  }
  return *slot;
}

Report run(const std::string& selector, int lo, int hi, const Options& opts) {
  Tables tables(opts);
  auto r = run(selector, lo, hi, tables);
  r.warnings.insert(r.warnings.end(), tables.warnings().begin(), tables.warnings().end());
  return r;
}

Report run(const std::string& selector, int lo, int hi, Tables& tables) {
  const auto& all = selectors();
  if (std::find(all.begin(), all.end(), selector) == all.end()) {
    throw ConstraintError("unknown selector '" + selector + "'");
  }
  if (lo < 1 || lo > hi) throw ConstraintError("n-range needs 1 <= lo <= hi");
  if (hi > max_n(selector)) {
    throw ResourceError(selector + " is limited to n <= " + std::to_string(max_n(selector)));
  }
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.selector = selector;
  r.lo = lo;
  r.hi = hi;
  for (int n = std::max(lo, min_n(selector)); n <= hi; ++n) {
    if (selector == "thm1") thm1(n, tables, r.checks);
    else if (selector == "thm5") thm5_cor1(n, false, tables, r.checks);
    else if (selector == "cor1") thm5_cor1(n, true, tables, r.checks);
    else if (selector == "prop1") prop1(n, tables, r.checks);
    else if (selector == "thm3") projections(n, 2, tables, r.checks);
    else if (selector == "thm6") for (int k = 2; k <= n; ++k) projections(n, k, tables, r.checks);
    else if (selector == "thm4") thm4(n, tables, r.checks);
    else if (selector == "lemma2") lemma2(n, r.checks);
    else if (selector == "noteF") note_f(n, r.checks);
    else if (selector == "schur") schur(n, tables, r.checks);
    else if (selector == "oracle") oracle_checks(n, tables, r.checks);
    else if (selector == "structure") structure(n, tables, r.checks);
  }
  r.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = {{"name", c.name}, {"n", c.n}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.k) j["k"] = c.k;
    checks.push_back(std::move(j));
  }
  return {{"schema", "symlie.suite_report/1"},
          {"selector", r.selector},
          {"n_range", {r.lo, r.hi}},
          {"passed", r.passed()},
          {"checks", checks},
          {"warnings", r.warnings},
          {"wall_time_s", r.wall_time_s}};
}

}  // namespace symlie::suite
