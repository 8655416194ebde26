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

// symlie: command-line front end for the symmetrized-Pauli Lie algebra engine.
//
// Exit codes: 0 pass, 1 usage or IO error, 2 verification failure,
// 3 resource refusal.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "symlie/center.hpp"
#include "symlie/closure.hpp"
#include "symlie/errors.hpp"
#include "symlie/oracle.hpp"
#include "symlie/schurweyl.hpp"
#include "symlie/structure.hpp"
#include "symlie/suite.hpp"
#include "symlie/sympauli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace symlie;

namespace {

enum Exit { kOk = 0, kUsage = 1, kFailed = 2, kRefused = 3 };

struct Config {
  int n = 0;
  std::string n_range;
  std::string gens = "G2";
  int k = 0;
  std::string cache_dir;
  std::string out;
  bool verbose = false;
  bool table = false;
  std::string method = "overlap";
  std::string strategy = "adjoint";
  bool schur_refine = false;
  std::string selector;
  std::string emit = "C";
  bool check_center = false;
  bool check_blocks = false;
  std::string export_path;
  bool compare = false;
  std::string cache_action;
};

bool g_verbose = false;

void log(const std::string& msg) {
  if (g_verbose) std::cerr << "symlie: " << msg << "\n";
}

std::optional<fs::path> cache_dir(const Config& c) {
  if (!c.cache_dir.empty()) return fs::path(c.cache_dir);
  if (const char* env = std::getenv("SYMLIE_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

std::pair<int, int> parse_range(const Config& c) {
  if (c.n_range.empty()) {
    if (c.n < 1) throw ConstraintError("give --n or --n-range");
    return {c.n, c.n};
  }
  const auto dots = c.n_range.find("..");
  if (dots == std::string::npos) throw ConstraintError("--n-range must look like lo..hi");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(c.n_range.substr(0, dots));
    hi = std::stoi(c.n_range.substr(dots + 2));
  } catch (const std::exception&) {
    throw ConstraintError("--n-range must look like lo..hi");
  }
  if (lo < 1 || lo > hi) throw ConstraintError("--n-range needs 1 <= lo <= hi");
  return {lo, hi};
}

void emit(const json& j, const Config& c) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    if (!c.table) std::cout << text;
    return;
  }
  std::ofstream os(c.out, std::ios::trunc);
  if (!os) throw IoError("cannot write " + c.out);
  os << text;
  if (!os) throw IoError("cannot write " + c.out);
  log("wrote " + c.out);
}

json coeffs_json(const SymOpVector& v) {
  json j = json::object();
  for (const auto& [t, c] : v.coeffs()) j[to_string(t)] = to_string(c);
  return j;
}

std::shared_ptr<StructureTable> table_for(int n, BracketMethod m, const Config& c) {
  if (const auto dir = cache_dir(c)) {
    auto b = build_table(n, {}, m, dir);
    for (const auto& w : b.warnings) std::cerr << "symlie: warning: " << w << "\n";
    log(b.loaded_from_cache ? "structure table loaded from cache" : "structure table built");
    return b.table;
  }
  return std::make_shared<StructureTable>(n, m);
}

GeneratorSet generators(const Config& c) {
  std::string text = c.gens;
  if (c.k && (text == "Gk" || text == "gk")) text = "Gk:" + std::to_string(c.k);
  return parse_generator_set(text, c.n);
}

int cmd_close(const Config& c) {
  if (c.n < 1) throw ConstraintError("--n is required");
  const auto gens = generators(c);
  const bool dense = c.method == "dense";
  if (dense && c.n > oracle::kMaxN) {
    throw ResourceError("--method dense needs n <= " + std::to_string(oracle::kMaxN));
  }
  const auto table = table_for(c.n, dense ? BracketMethod::kOverlap : parse_bracket_method(c.method), c);
  const auto strategy = c.strategy == "pairwise" ? ClosureStrategy::kPairwise : ClosureStrategy::kAdjoint;
  const auto basis = lie_closure(gens, *table, strategy);
  auto report = verdicts(basis);
  std::optional<SubspaceCertificate> cert;
  if (c.schur_refine) {
    if (c.n > kSubspaceMaxN) throw ResourceError("--schur needs n <= 6");
    cert = certify_subspace_control(basis, build_schur_transform(c.n));
    apply_certificate(report, *cert);
  }
  auto j = to_json(report);
  if (cert) j["subspace_certificate"] = to_json(*cert);
  bool ok = report.prediction_matches();
  if (dense) {
    std::vector<oracle::DenseOp> d;
    for (const auto& m : gens.members) d.push_back(oracle::densify(m));
    const auto dc = oracle::dense_closure(d);
    for (const auto& w : dc.warnings) std::cerr << "symlie: warning: " << w << "\n";
    j["oracle_dim"] = dc.dim;
    ok = ok && dc.dim == report.dim;
  }
  emit(j, c);
  if (c.table) {
    std::cout << "n=" << report.n << " gens=" << report.label << " dim=" << report.dim
              << " predicted=" << (report.predicted_dim ? to_string(*report.predicted_dim) : "-")
              << " dim_su=" << to_string(report.dim_su)
              << " semi_universal=" << report.semi_universal
              << " universal=" << report.universal
              << " subspace_controllable=" << report.subspace_controllable << " ("
              << report.subspace_controllable_source << ")\n";
  }
  if (!ok) std::cerr << "symlie: closure dimension disagrees with the prediction\n";
  return ok ? kOk : kFailed;
}

int cmd_verify(const Config& c) {
  const auto [lo, hi] = parse_range(c);
  suite::Options opts{cache_dir(c)};
  const auto r = suite::run(c.selector, lo, hi, opts);
  for (const auto& w : r.warnings) std::cerr << "symlie: warning: " << w << "\n";
  emit(suite::to_json(r), c);
  if (c.table) {
    for (const auto& ch : r.checks) {
      std::cout << (ch.passed ? "PASS " : "FAIL ") << std::left << std::setw(36) << ch.name
                << " n=" << ch.n;
      if (ch.k) std::cout << " k=" << ch.k;
      std::cout << "\n";
    }
    std::cout << r.selector << ": " << (r.passed() ? "all passed" : "FAILED") << "\n";
  }
  return r.passed() ? kOk : kFailed;
}

int cmd_center(const Config& c) {
  if (c.n < 1) throw ConstraintError("--n is required");
  if (c.emit != "C" && c.emit != "L") throw ConstraintError("--emit must be C or L");
  json elems = json::array();
  for (int mu = 0; mu <= c.n / 2; ++mu) {
    const auto v = c.emit == "C" ? make_C(mu, c.n).vec : make_L(mu, c.n).vec;
    elems.push_back({{"mu", mu}, {"coeffs", coeffs_json(v)}});
  }
  json j = {{"n", c.n}, {"kind", c.emit}, {"elements", elems}};
  bool ok = true;
  if (c.check_center) {
    const auto table = table_for(c.n, BracketMethod::kOverlap, c);
    const auto r = verify_center(c.n, *table);
    j["check"] = {{"brackets_vanish", r.brackets_vanish},
                  {"independent", r.independent},
                  {"centralizer_dim", r.centralizer_dim},
                  {"expected_dim", r.expected_dim},
                  {"passed", r.passed()}};
    ok = r.passed();
  }
  emit(j, c);
  if (c.table) {
    for (const auto& e : elems) std::cout << c.emit << "_" << e["mu"] << ": " << e["coeffs"].dump() << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_schur(const Config& c) {
  if (c.n < 1) throw ConstraintError("--n is required");
  const auto st = build_schur_transform(c.n);
  json j = {{"n", c.n}, {"unitarity_error", st.unitarity_error()}};
  json blocks = json::array();
  for (const auto& b : isotypic_table(c.n)) {
    blocks.push_back({{"mu", b.mu}, {"d", to_string(b.d_lambda)}, {"m", b.m_lambda}});
  }
  j["sectors"] = blocks;
  bool ok = st.unitarity_error() < kUnitarityTol;
  if (c.check_blocks) {
    const auto gens = generators(c);
    const auto table = table_for(c.n, BracketMethod::kOverlap, c);
    const auto basis = lie_closure(gens, *table);
    const auto cert = certify_subspace_control(basis, st);
    j["certificate"] = to_json(cert);
    ok = ok && cert.max_off_pattern < kBlockTol;
    if (c.table) {
      std::cout << "block structure: " << (cert.max_off_pattern < kBlockTol ? "pass" : "FAIL")
                << " (max off-pattern " << cert.max_off_pattern << ")\n";
      for (const auto& s : cert.sectors) {
        std::cout << "  mu=" << s.mu << " m=" << s.m << " span_dim=" << s.span_dim
                  << " su_dim=" << s.su_dim << " contains_su=" << s.contains_su << "\n";
      }
      std::cout << "  trace_rank=" << cert.trace_rank << " closure_dim=" << cert.closure_dim
                << " subspace_controllable=" << cert.certified() << "\n";
    }
  }
  if (!c.export_path.empty()) {
    std::ofstream os(c.export_path, std::ios::trunc);
    if (!os) throw IoError("cannot write " + c.export_path);
    os << transform_to_json(st).dump() << "\n";
    if (!os) throw IoError("cannot write " + c.export_path);
    log("transform written to " + c.export_path);
  }
  emit(j, c);
  return ok ? kOk : kFailed;
}

int compare_methods(int n, json& j) {
  const auto triples = all_triples(n);
  std::size_t pairs = 0, bad = 0;
  json mismatches = json::array();
  for (const auto& a : triples) {
    for (const auto& b : triples) {
      if (b < a) continue;
      ++pairs;
      const auto x = bracket(a, b, n), y = bracket_orbit_expansion(a, b, n);
      if (x == y) continue;
      ++bad;
      if (mismatches.size() < 20) {
        mismatches.push_back({{"a", to_string(a)}, {"b", to_string(b)},
                              {"overlap", to_string(x)}, {"orbit", to_string(y)}});
      }
    }
  }
  j["compare"] = {{"pairs", pairs}, {"mismatches", bad}, {"examples", mismatches}};
  return bad == 0 ? kOk : kFailed;
}

int cmd_table(const Config& c) {
  if (c.n < 1) throw ConstraintError("--n is required");
  json j = {{"n", c.n}};
  int rc = kOk;
  if (c.cache_action.empty() || c.cache_action == "build") {
    std::vector<BracketMethod> methods;
    if (c.method == "both") {
      methods = {BracketMethod::kOverlap, BracketMethod::kOrbit};
    } else {
      methods = {parse_bracket_method(c.method)};
    }
    json built = json::array();
    for (auto m : methods) {
      const auto dir = cache_dir(c);
      if (c.cache_action == "build" && !dir) throw ConstraintError("build needs --cache-dir");
      std::shared_ptr<StructureTable> t;
      if (dir) {
        auto b = build_table(c.n, {}, m, dir);
        for (const auto& w : b.warnings) std::cerr << "symlie: warning: " << w << "\n";
        t = b.table;
        built.push_back({{"method", to_string(m)}, {"pairs", t->cached_pairs()},
                         {"file", cache_file_path(*dir, c.n, m).string()},
                         {"loaded_from_cache", b.loaded_from_cache}});
      } else {
        t = std::make_shared<StructureTable>(c.n, m);
        t->fill();
        built.push_back({{"method", to_string(m)}, {"pairs", t->cached_pairs()}});
      }
    }
    j["tables"] = built;
    if (c.compare) rc = compare_methods(c.n, j);
  } else if (c.cache_action == "validate") {
    const auto dir = cache_dir(c);
    if (!dir) throw ConstraintError("validate needs --cache-dir");
    json files = json::array();
    for (auto m : {BracketMethod::kOverlap, BracketMethod::kOrbit}) {
      const auto path = cache_file_path(*dir, c.n, m);
      if (!fs::exists(path)) continue;
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      json f = {{"file", path.string()}};
      try {
        const auto t = deserialize_table(buf.str(), c.n, m);
        std::size_t bad = 0;
        for (const auto& [a, b] : t->stored_pairs()) bad += !(t->entry_vector(a, b) == bracket(a, b, c.n));
        f["pairs"] = t->cached_pairs();
        f["mismatches"] = bad;
        f["valid"] = bad == 0;
        if (bad) rc = kFailed;
      } catch (const std::runtime_error& e) {
        f["valid"] = false;
        f["error"] = e.what();
        rc = kFailed;
      }
      files.push_back(f);
    }
    if (files.empty()) throw IoError("no cache files for n=" + std::to_string(c.n));
    j["validate"] = files;
  } else if (c.cache_action == "purge") {
    const auto dir = cache_dir(c);
    if (!dir) throw ConstraintError("purge needs --cache-dir");
    json removed = json::array();
    for (auto m : {BracketMethod::kOverlap, BracketMethod::kOrbit}) {
      const auto path = cache_file_path(*dir, c.n, m);
      std::error_code ec;
      if (fs::remove(path, ec)) removed.push_back(path.string());
      if (ec) throw IoError("cannot remove " + path.string());
    }
    j["removed"] = removed;
  } else {
    throw ConstraintError("cache action must be build, validate or purge");
  }
  emit(j, c);
  if (c.table) std::cout << j.dump(2) << "\n";
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Exact Lie closures of S_n-equivariant Pauli generators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "symlie 1.0.0");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of qubits")->check(CLI::PositiveNumber);
    sub->add_option("--cache-dir", c.cache_dir, "Structure cache directory (overrides SYMLIE_CACHE_DIR)");
    sub->add_option("--out", c.out, "Write the JSON report here instead of stdout");
    sub->add_flag("--verbose,-v", c.verbose, "Progress on stderr");
    sub->add_flag("--table", c.table, "Human-readable view instead of JSON on stdout");
  };

  auto* close = app.add_subcommand("close", "Lie closure of a generator set");
  common(close);
  close->add_option("--gens", c.gens, "Preset (G1, G1prime, G2, Gk:K) or triples 'kx,ky,kz;...'");
  close->add_option("--k", c.k, "Bodyness for --gens Gk");
  close->add_option("--method", c.method, "overlap | orbit | dense")
      ->check(CLI::IsMember({"overlap", "orbit", "dense"}));
  close->add_option("--strategy", c.strategy, "adjoint | pairwise")
      ->check(CLI::IsMember({"adjoint", "pairwise"}));
  close->add_flag("--schur", c.schur_refine, "Certify subspace controllability from Schur blocks (n <= 6)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  common(verify);
  verify->add_option("selector", c.selector, "Suite selector")
      ->required()
      ->check(CLI::IsMember(suite::selectors()));
  verify->add_option("--n-range", c.n_range, "lo..hi");

  auto* center = app.add_subcommand("center", "Central elements C_mu or class sums L_mu");
  common(center);
  center->add_option("--emit", c.emit, "C | L")->check(CLI::IsMember({"C", "L"}));
  center->add_flag("--check", c.check_center, "Also verify the center of u^{S_n}");

  auto* schur = app.add_subcommand("schur", "Schur transform and block checks");
  common(schur);
  schur->add_flag("--check-blocks", c.check_blocks, "Block-check the closure of --gens");
  schur->add_option("--gens", c.gens, "Generator set for --check-blocks");
  schur->add_option("--k", c.k, "Bodyness for --gens Gk");
  schur->add_option("--export", c.export_path, "Write the transform as row-major JSON");

  auto* table = app.add_subcommand("table", "Structure constants and the cache");
  common(table);
  table->add_option("--method", c.method, "overlap | orbit | both")
      ->check(CLI::IsMember({"overlap", "orbit", "both"}));
  table->add_flag("--compare", c.compare, "Compare both bracket methods pair by pair");
  table->add_option("action", c.cache_action, "build | validate | purge")
      ->check(CLI::IsMember({"build", "validate", "purge"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  g_verbose = c.verbose;

  try {
    if (*close) return cmd_close(c);
    if (*verify) return cmd_verify(c);
    if (*center) return cmd_center(c);
    if (*schur) return cmd_schur(c);
    if (*table) return cmd_table(c);
  } catch (const ResourceError& e) {
    std::cerr << "symlie: refused: " << e.what() << "\n";
    return kRefused;
  } catch (const StructureViolation& e) {
    std::cerr << "symlie: verification failure: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "symlie: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
