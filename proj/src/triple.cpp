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

#include "symlie/triple.hpp"

#include <algorithm>
#include <charconv>

#include "symlie/errors.hpp"

namespace symlie {

bool is_valid(const PauliTriple& t, int n) {
  return n >= 1 && t.kx >= 0 && t.ky >= 0 && t.kz >= 0 && t.level() <= n;
}

void validate(const PauliTriple& t, int n) {
  if (!is_valid(t, n)) {
    throw ConstraintError("triple (" + to_string(t) + ") is not valid for n=" +
                          std::to_string(n));
  }
}

PauliTriple PauliTriple::make(int kx, int ky, int kz, int n) {
  PauliTriple t{kx, ky, kz};
  validate(t, n);
  return t;
}

std::string to_string(const PauliTriple& t) {
  return std::to_string(t.kx) + "," + std::to_string(t.ky) + "," +
         std::to_string(t.kz);
}

PauliTriple parse_triple(const std::string& text) {
  int parts[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    while (p < end && *p == ' ') ++p;
    auto [next, ec] = std::from_chars(p, end, parts[i]);
    if (ec != std::errc() || parts[i] < 0) {
      throw ConstraintError("malformed triple '" + text + "'");
    }
    p = next;
    while (p < end && *p == ' ') ++p;
    if (i < 2) {
      if (p == end || *p != ',') {
        throw ConstraintError("malformed triple '" + text + "'");
      }
      ++p;
    }
  }
  if (p != end) throw ConstraintError("malformed triple '" + text + "'");
  return PauliTriple{parts[0], parts[1], parts[2]};
}

std::vector<PauliTriple> all_triples(int n) {
  if (n < 1) throw ConstraintError("n must be >= 1");
  std::vector<PauliTriple> out;
  for (int level = 0; level <= n; ++level) {
    for (int kx = 0; kx <= level; ++kx) {
      for (int ky = 0; kx + ky <= level; ++ky) {
        out.push_back({kx, ky, level - kx - ky});
      }
    }
  }
  return out;
}

TripleIndex::TripleIndex(int n)
    : n_(n),
      triples_(all_triples(n)),
      lookup_(static_cast<std::size_t>((n + 1) * (n + 1) * (n + 1)), -1) {
  for (std::size_t i = 0; i < triples_.size(); ++i) {
    const auto& t = triples_[i];
    lookup_[static_cast<std::size_t>((t.kx * (n + 1) + t.ky) * (n + 1) + t.kz)] =
        static_cast<int>(i);
  }
}

std::size_t TripleIndex::index(const PauliTriple& t) const {
  validate(t, n_);
  return static_cast<std::size_t>(
      lookup_[static_cast<std::size_t>((t.kx * (n_ + 1) + t.ky) * (n_ + 1) + t.kz)]);
}

}  // namespace symlie
