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

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symlie/number.hpp"
#include "symlie/sym_op.hpp"
#include "symlie/triple.hpp"

namespace symlie {

enum class BracketMethod { kOverlap, kOrbit };

/// "overlap-combinatorics" | "orbit-expansion"
std::string to_string(BracketMethod m);
BracketMethod parse_bracket_method(const std::string& text);

/// Coordinates g of [iP_a, iP_b] = sum_u g_u (iP_u).
///
/// Counts, for the fixed representative word of orbit a (X letters first,
/// then Y, then Z, then identities), how the letters of an orbit-b word can
/// land on each of its four letter blocks. Each placement pattern fixes the
/// product word class and phase, so the cost is polynomial in n.
SymOpVector bracket(const PauliTriple& a, const PauliTriple& b, int n);

/// Same quantity by enumerating every word of orbit b against the
/// representative of orbit a. Exponential; used to cross-check `bracket`.
SymOpVector bracket_orbit_expansion(const PauliTriple& a, const PauliTriple& b,
                                    int n);

/// Memoized structure constants for one n. Entries are computed on first use
/// (or up front by build_table) and never change afterwards.
class StructureTable {
 public:
  struct Term {
    PauliTriple triple;
    BigInt coeff;
  };
  using Entry = std::vector<Term>;

  explicit StructureTable(int n, BracketMethod method = BracketMethod::kOverlap);

  int n() const { return n_; }
  BracketMethod method() const { return method_; }
  const TripleIndex& index() const { return index_; }

  /// [iP_a, iP_b] as a sorted term list with integer coefficients.
  const Entry& entry(const PauliTriple& a, const PauliTriple& b) const;
  SymOpVector entry_vector(const PauliTriple& a, const PauliTriple& b) const;

  /// Number of unordered pairs a < b currently materialized.
  std::size_t cached_pairs() const;

  /// Fill all pairs among `triples` (all triples when empty).
  void fill(const std::vector<PauliTriple>& triples = {});

  /// Pairs (a, b) with a < b that are stored, in canonical order.
  std::vector<std::pair<PauliTriple, PauliTriple>> stored_pairs() const;

  /// Adopt a precomputed entry for a < b (used by the cache loader).
  void insert(const PauliTriple& a, const PauliTriple& b, Entry e);

 private:
  std::size_t key(std::size_t ia, std::size_t ib) const { return ia * index_.size() + ib; }

  int n_;
  BracketMethod method_;
  TripleIndex index_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::size_t, std::unique_ptr<Entry>> entries_;
  Entry empty_;
};

/// Bilinear extension of the table: [u, v] for arbitrary vectors.
SymOpVector bracket_vectors(const SymOpVector& u, const SymOpVector& v,
                            const StructureTable& table);

/// Outcome of a cache-backed table build.
struct TableBuild {
  std::shared_ptr<StructureTable> table;
  bool loaded_from_cache = false;
  std::vector<std::string> warnings;
};

/// Build a table for n, filling the requested triples (all when empty).
/// When `cache_dir` is set, a cache file whose digest matches is loaded
/// instead, and the finished table is written back. A corrupt file is
/// rebuilt and the reason recorded in `warnings`.
TableBuild build_table(int n, const std::vector<PauliTriple>& triples = {},
                       BracketMethod method = BracketMethod::kOverlap,
                       const std::optional<std::filesystem::path>& cache_dir = {});

/// Versioned JSON cache format.
inline constexpr int kCacheFormatVersion = 1;
std::filesystem::path cache_file_path(const std::filesystem::path& dir, int n,
                                      BracketMethod method);
std::string serialize_table(const StructureTable& table);
/// Throws std::runtime_error on any format, version or digest mismatch.
std::shared_ptr<StructureTable> deserialize_table(const std::string& text,
                                                  int expected_n,
                                                  BracketMethod expected_method);

}  // namespace symlie
