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

#include "symlie/structure.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symlie/errors.hpp"
#include "symlie/sympauli.hpp"

namespace symlie {

namespace {

// Letters: 0 = I, 1 = X, 2 = Y, 3 = Z. Product of two letters is their XOR;
// the phase is +i for the cyclic orders XY, YZ, ZX and -i for the reverse.
int phase_sign(int p, int q) {
  if (p == 0 || q == 0 || p == q) return 0;
  return (q - p + 3) % 3 == 1 ? +1 : -1;
}

constexpr int kMaxTableN = 40;

using Wide = __int128;

BigInt to_bigint(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

// Accumulated coefficients on the representative word, bucketed by the
// class of the product word.
class ClassAccumulator {
 public:
  explicit ClassAccumulator(int n) : n_(n) {}

  void add(int rx, int ry, int rz, Wide c) {
    auto key = (rx * (n_ + 1) + ry) * (n_ + 1) + rz;
    sums_[key] += c;
  }

  // g_u = |a| * H_u / |u|
  SymOpVector finish(const PauliTriple& a) const {
    SymOpVector out(n_);
    const BigInt size_a = orbit_size(a, n_);
    std::vector<std::pair<int, Wide>> sorted(sums_.begin(), sums_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (const auto& [key, h] : sorted) {
      if (h == 0) continue;
      PauliTriple u{key / ((n_ + 1) * (n_ + 1)), (key / (n_ + 1)) % (n_ + 1),
                    key % (n_ + 1)};
      BigInt num = size_a * to_bigint(h);
      BigInt size_u = orbit_size(u, n_);
      if (num % size_u != 0) {
        throw StructureViolation("non-integral structure constant for class " +
                                 to_string(u));
      }
      out.add_term(u, Rational(BigInt(num / size_u)));
    }
    return out;
  }

 private:
  int n_;
  std::unordered_map<int, Wide> sums_;
};

std::vector<int> representative_word(const PauliTriple& t, int n) {
  std::vector<int> w;
  w.insert(w.end(), static_cast<std::size_t>(t.kx), 1);
  w.insert(w.end(), static_cast<std::size_t>(t.ky), 2);
  w.insert(w.end(), static_cast<std::size_t>(t.kz), 3);
  w.insert(w.end(), static_cast<std::size_t>(n - t.level()), 0);
  return w;
}

// Coefficient on i*(product word) of [i s, i w] for anticommuting s, w with
// `plus` sites of phase +i and `minus` sites of phase -i: -2 i^{plus-minus-1}.
Wide anticommutator_coeff(int plus, int minus) {
  int e = ((plus - minus - 1) % 4 + 4) % 4;
  return e == 0 ? Wide(-2) : Wide(2);
}

struct BinomialTable {
  explicit BinomialTable(int n) : n(n), c(static_cast<std::size_t>((n + 1) * (n + 1)), 0) {
    for (int i = 0; i <= n; ++i) {
      at(i, 0) = 1;
      for (int j = 1; j <= i; ++j) at(i, j) = at(i - 1, j - 1) + (j <= i - 1 ? at(i - 1, j) : 0);
    }
  }
  Wide& at(int i, int j) { return c[static_cast<std::size_t>(i * (n + 1) + j)]; }
  Wide get(int i, int j) const {
    if (j < 0 || j > i) return 0;
    return c[static_cast<std::size_t>(i * (n + 1) + j)];
  }
  // m! / (x! y! z! (m-x-y-z)!)
  Wide multi(int m, int x, int y, int z) const {
    return get(m, x) * get(m - x, y) * get(m - x - y, z);
  }
  int n;
  std::vector<Wide> c;
};

// Calls f(parts) for every composition of `total` into four parts with
// parts[i] <= cap[i].
template <typename F>
void for_each_composition(int total, const std::array<int, 4>& cap, F&& f) {
  std::array<int, 4> p{};
  for (p[0] = 0; p[0] <= std::min(total, cap[0]); ++p[0]) {
    const int r0 = total - p[0];
    for (p[1] = 0; p[1] <= std::min(r0, cap[1]); ++p[1]) {
      const int r1 = r0 - p[1];
      for (p[2] = 0; p[2] <= std::min(r1, cap[2]); ++p[2]) {
        p[3] = r1 - p[2];
        if (p[3] <= cap[3]) f(p);
      }
    }
  }
}

}  // namespace

std::string to_string(BracketMethod m) {
  return m == BracketMethod::kOverlap ? "overlap-combinatorics" : "orbit-expansion";
}

BracketMethod parse_bracket_method(const std::string& text) {
  if (text == "overlap" || text == "overlap-combinatorics") return BracketMethod::kOverlap;
  if (text == "orbit" || text == "orbit-expansion") return BracketMethod::kOrbit;
  throw ConstraintError("unknown bracket method '" + text + "'");
}

SymOpVector bracket(const PauliTriple& a, const PauliTriple& b, int n) {
  validate(a, n);
  validate(b, n);
  if (n > kMaxTableN) throw ResourceError("bracket: n too large for 128-bit counts");
  if (a == b) return SymOpVector(n);

  // Block sizes of the representative word of a: X, Y, Z, I.
  const std::array<int, 4> m{a.kx, a.ky, a.kz, n - a.level()};
  static thread_local std::unique_ptr<BinomialTable> binom;
  if (!binom || binom->n < n) binom = std::make_unique<BinomialTable>(n);

  ClassAccumulator acc(n);
  for_each_composition(b.kx, m, [&](const std::array<int, 4>& x) {
    std::array<int, 4> cap_y;
    for (int i = 0; i < 4; ++i) cap_y[i] = m[i] - x[i];
    for_each_composition(b.ky, cap_y, [&](const std::array<int, 4>& y) {
      std::array<int, 4> cap_z;
      for (int i = 0; i < 4; ++i) cap_z[i] = cap_y[i] - y[i];
      for_each_composition(b.kz, cap_z, [&](const std::array<int, 4>& z) {
        // Sites where the two letters differ and neither is I anticommute.
        const int plus = y[0] + z[1] + x[2];   // XY, YZ, ZX
        const int minus = z[0] + x[1] + y[2];  // XZ, YX, ZY
        if ((plus + minus) % 2 == 0) return;
        Wide mult = 1;
        for (int i = 0; i < 4; ++i) mult *= binom->multi(m[i], x[i], y[i], z[i]);
        const int rx = (m[0] - x[0] - y[0] - z[0]) + z[1] + y[2] + x[3];
        const int ry = z[0] + (m[1] - x[1] - y[1] - z[1]) + x[2] + y[3];
        const int rz = y[0] + x[1] + (m[2] - x[2] - y[2] - z[2]) + z[3];
        acc.add(rx, ry, rz, anticommutator_coeff(plus, minus) * mult);
      });
    });
  });
  return acc.finish(a);
}

SymOpVector bracket_orbit_expansion(const PauliTriple& a, const PauliTriple& b, int n) {
  validate(a, n);
  validate(b, n);
  if (n > 16) throw ResourceError("orbit expansion is limited to n <= 16");
  if (a == b) return SymOpVector(n);

  const auto s = representative_word(a, n);
  auto w = representative_word(b, n);
  std::sort(w.begin(), w.end());
  ClassAccumulator acc(n);
  do {
    int plus = 0, minus = 0;
    int counts[4] = {0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
      const int ph = phase_sign(s[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
      if (ph > 0) ++plus;
      if (ph < 0) ++minus;
      ++counts[s[static_cast<std::size_t>(i)] ^ w[static_cast<std::size_t>(i)]];
    }
    if ((plus + minus) % 2 == 1) {
      acc.add(counts[1], counts[2], counts[3], anticommutator_coeff(plus, minus));
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return acc.finish(a);
}

StructureTable::StructureTable(int n, BracketMethod method)
    : n_(n), method_(method), index_(n) {}

const StructureTable::Entry& StructureTable::entry(const PauliTriple& a,
                                                   const PauliTriple& b) const {
  const std::size_t ia = index_.index(a);
  const std::size_t ib = index_.index(b);
  if (ia == ib) return empty_;
  std::lock_guard lock(mutex_);
  if (auto it = entries_.find(key(ia, ib)); it != entries_.end()) return *it->second;

  SymOpVector v = method_ == BracketMethod::kOverlap ? bracket(a, b, n_)
                                                      : bracket_orbit_expansion(a, b, n_);
  auto fwd = std::make_unique<Entry>();
  auto rev = std::make_unique<Entry>();
  for (const auto& [t, c] : v.coeffs()) {
    fwd->push_back({t, c.get_num()});
    rev->push_back({t, BigInt(-c.get_num())});
  }
  const Entry& ref = *fwd;
  entries_.emplace(key(ia, ib), std::move(fwd));
  entries_.emplace(key(ib, ia), std::move(rev));
  return ref;
}

SymOpVector StructureTable::entry_vector(const PauliTriple& a, const PauliTriple& b) const {
  SymOpVector out(n_);
  for (const auto& term : entry(a, b)) out.add_term(term.triple, Rational(term.coeff));
  return out;
}

std::size_t StructureTable::cached_pairs() const {
  std::lock_guard lock(mutex_);
  return entries_.size() / 2;
}

void StructureTable::fill(const std::vector<PauliTriple>& triples) {
  const auto& ts = triples.empty() ? index_.triples() : triples;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) entry(ts[i], ts[j]);
  }
}

std::vector<std::pair<PauliTriple, PauliTriple>> StructureTable::stored_pairs() const {
  std::lock_guard lock(mutex_);
  std::vector<std::pair<PauliTriple, PauliTriple>> out;
  const std::size_t size = index_.size();
  for (const auto& [k, e] : entries_) {
    const std::size_t ia = k / size, ib = k % size;
    if (ia < ib) out.emplace_back(index_.triple(ia), index_.triple(ib));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void StructureTable::insert(const PauliTriple& a, const PauliTriple& b, Entry e) {
  const std::size_t ia = index_.index(a);
  const std::size_t ib = index_.index(b);
  if (ia == ib) throw ConstraintError("diagonal structure entries are always zero");
  auto rev = std::make_unique<Entry>();
  for (const auto& term : e) rev->push_back({term.triple, BigInt(-term.coeff)});
  std::lock_guard lock(mutex_);
  entries_[key(ia, ib)] = std::make_unique<Entry>(std::move(e));
  entries_[key(ib, ia)] = std::move(rev);
}

SymOpVector bracket_vectors(const SymOpVector& u, const SymOpVector& v,
                            const StructureTable& table) {
  require_same_n(u, v);
  if (u.n() != table.n()) {
    throw DimensionError("table has n=" + std::to_string(table.n()) +
                         " but operands have n=" + std::to_string(u.n()));
  }
  std::map<PauliTriple, Rational> acc;
  for (const auto& [a, ca] : u.coeffs()) {
    for (const auto& [b, cb] : v.coeffs()) {
      const auto& e = table.entry(a, b);
      if (e.empty()) continue;
      const Rational w = ca * cb;
      for (const auto& term : e) acc[term.triple] += w * term.coeff;
    }
  }
  return SymOpVector(u.n(), acc);
}

// ---------------------------------------------------------------------------
// Cache file

namespace {

std::string fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

nlohmann::json entries_json(const StructureTable& table) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [a, b] : table.stored_pairs()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : table.entry(a, b)) {
      terms.push_back({to_string(term.triple), to_string(term.coeff)});
    }
    entries[to_string(a) + "|" + to_string(b)] = std::move(terms);
  }
  return entries;
}

}  // namespace

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int n,
                                      BracketMethod method) {
  return dir / ("structure_n" + std::to_string(n) + "_v" +
                std::to_string(kCacheFormatVersion) + "_" + to_string(method) + ".json");
}

std::string serialize_table(const StructureTable& table) {
  nlohmann::json j;
  j["format_version"] = kCacheFormatVersion;
  j["n"] = table.n();
  j["method"] = to_string(table.method());
  j["entries"] = entries_json(table);
  j["digest"] = fnv1a64(j["entries"].dump());
  return j.dump(1) + "\n";
}

std::shared_ptr<StructureTable> deserialize_table(const std::string& text, int expected_n,
                                                  BracketMethod expected_method) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("cache is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kCacheFormatVersion) {
      throw std::runtime_error("cache format version mismatch");
    }
    if (j.at("n").get<int>() != expected_n) throw std::runtime_error("cache n mismatch");
    if (j.at("method").get<std::string>() != to_string(expected_method)) {
      throw std::runtime_error("cache method mismatch");
    }
    const auto& entries = j.at("entries");
    if (fnv1a64(entries.dump()) != j.at("digest").get<std::string>()) {
      throw std::runtime_error("cache digest mismatch");
    }
    auto table = std::make_shared<StructureTable>(expected_n, expected_method);
    for (const auto& [key, terms] : entries.items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos) throw std::runtime_error("bad cache key " + key);
      const auto a = parse_triple(key.substr(0, bar));
      const auto b = parse_triple(key.substr(bar + 1));
      validate(a, expected_n);
      validate(b, expected_n);
      StructureTable::Entry e;
      for (const auto& term : terms) {
        const auto t = parse_triple(term.at(0).get<std::string>());
        validate(t, expected_n);
        BigInt c;
        if (c.set_str(term.at(1).get<std::string>(), 10) != 0) {
          throw std::runtime_error("bad integer in cache");
        }
        e.push_back({t, c});
      }
      table->insert(a, b, std::move(e));
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed cache: ") + e.what());
  } catch (const ConstraintError& e) {
    throw std::runtime_error(std::string("malformed cache: ") + e.what());
  }
}

TableBuild build_table(int n, const std::vector<PauliTriple>& triples, BracketMethod method,
                       const std::optional<std::filesystem::path>& cache_dir) {
  if (n < 1) throw ConstraintError("n must be >= 1");
  for (const auto& t : triples) validate(t, n);
  TableBuild out;
  std::size_t before = 0;
  if (cache_dir) {
    const auto path = cache_file_path(*cache_dir, n, method);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path, std::ios::binary);
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        out.table = deserialize_table(buf.str(), n, method);
        out.loaded_from_cache = true;
        before = out.table->cached_pairs();
      } catch (const std::exception& e) {
        out.warnings.push_back("structure cache " + path.string() +
                               " rejected (" + e.what() + "); rebuilt");
      }
    }
  }
  if (!out.table) out.table = std::make_shared<StructureTable>(n, method);
  out.table->fill(triples);
  if (cache_dir && (!out.loaded_from_cache || out.table->cached_pairs() != before)) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    if (ec) throw IoError("cannot create cache directory " + cache_dir->string());
    const auto path = cache_file_path(*cache_dir, n, method);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot write structure cache " + path.string());
    os << serialize_table(*out.table);
    if (!os) throw IoError("cannot write structure cache " + path.string());
  }
  return out;
}

}  // namespace symlie
