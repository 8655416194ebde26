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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "symlie/structure.hpp"

namespace symlie::suite {

struct Check {
  std::string name;
  int n = 0;
  int k = 0;  // 0 when the check has no bodyness parameter
  bool passed = false;
  nlohmann::json detail = nlohmann::json::object();
};

struct Options {
  std::optional<std::filesystem::path> cache_dir;
};

struct Report {
  std::string selector;
  int lo = 0, hi = 0;
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  double wall_time_s = 0;
  bool passed() const;
};

/// thm1 thm3 thm4 thm5 thm6 cor1 prop1 lemma2 noteF schur oracle structure
const std::vector<std::string>& selectors();

/// Largest n a selector accepts; ResourceError above it.
int max_n(const std::string& selector);
/// Smallest n at which a selector has anything to check.
int min_n(const std::string& selector);

/// Hands out one structure table per n, from the cache directory when set.
class Tables {
 public:
  explicit Tables(Options opts = {}) : opts_(std::move(opts)) {}
  const StructureTable& get(int n);
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  Options opts_;
  std::map<int, std::shared_ptr<StructureTable>> tables_;
  std::vector<std::string> warnings_;
};

/// Runs every check of `selector` for n in [lo, hi] (clamped below by
/// min_n). Checks are ordered by (n, k, name).
Report run(const std::string& selector, int lo, int hi, const Options& opts = {});
Report run(const std::string& selector, int lo, int hi, Tables& tables);

nlohmann::json to_json(const Report& r);

}  // namespace symlie::suite
