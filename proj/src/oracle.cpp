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

#include "symlie/oracle.hpp"

#include <algorithm>
#include <map>

#include "symlie/errors.hpp"
#include "symlie/triple.hpp"

namespace symlie::oracle {

namespace {

void check_n(int n) {
  if (n < 1) throw ConstraintError("n must be >= 1");
  if (n > kMaxN) {
    throw ResourceError("dense oracle refuses n=" + std::to_string(n) + " (limit " +
                        std::to_string(kMaxN) + ")");
  }
}

std::size_t word_count(int n) { return std::size_t{1} << (2 * n); }

int letter(Word w, int q) { return static_cast<int>((w >> (2 * q)) & 3u); }

// Returns (product word, number of +i sites, number of -i sites).
struct Product {
  Word word;
  int plus;
  int minus;
};

Product multiply(Word a, Word b, int n) {
  Product p{a ^ b, 0, 0};
  for (int q = 0; q < n; ++q) {
    const int x = letter(a, q), y = letter(b, q);
    if (x == 0 || y == 0 || x == y) continue;
    if ((x == 1 && y == 2) || (x == 2 && y == 3) || (x == 3 && y == 1)) {
      ++p.plus;
    } else {
      ++p.minus;
    }
  }
  return p;
}

PauliTriple word_class(Word w, int n) {
  PauliTriple t;
  for (int q = 0; q < n; ++q) {
    switch (letter(w, q)) {
      case 1: ++t.kx; break;
      case 2: ++t.ky; break;
      case 3: ++t.kz; break;
      default: break;
    }
  }
  return t;
}

// Plain row echelon (not reduced) over word coordinates, rows stored sparsely
// and keyed by pivot.
class WordEchelon {
 public:
  explicit WordEchelon(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }

  bool insert(std::vector<Rational> v) {
    for (const auto& [p, row] : rows_) {
      if (v[p] == 0) continue;
      const Rational f = v[p];
      for (const auto& [c, x] : row) v[c] -= f * x;
    }
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    std::vector<std::pair<std::size_t, Rational>> row;
    const Rational inv = 1 / v[p];
    for (std::size_t c = p; c < width_; ++c) {
      if (v[c] != 0) row.emplace_back(c, v[c] * inv);
    }
    rows_.emplace(p, std::move(row));
    return true;
  }

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> rows_;
};

std::vector<Word> orbit_words(const PauliTriple& t, int n) {
  std::vector<int> letters;
  letters.insert(letters.end(), static_cast<std::size_t>(n - t.level()), 0);
  letters.insert(letters.end(), static_cast<std::size_t>(t.kx), 1);
  letters.insert(letters.end(), static_cast<std::size_t>(t.ky), 2);
  letters.insert(letters.end(), static_cast<std::size_t>(t.kz), 3);
  std::vector<Word> out;
  do {
    Word w = 0;
    for (int q = 0; q < n; ++q) w |= static_cast<Word>(letters[static_cast<std::size_t>(q)]) << (2 * q);
    out.push_back(w);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace

DenseOp::DenseOp(int n) : n(n) {
  check_n(n);
  coeffs.assign(word_count(n), 0);
}

bool DenseOp::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; });
}

std::size_t DenseOp::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x != 0; }));
}

Word parse_word(const std::string& letters) {
  Word w = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    int l = 0;
    switch (letters[q]) {
      case 'I': l = 0; break;
      case 'X': l = 1; break;
      case 'Y': l = 2; break;
      case 'Z': l = 3; break;
      default: throw ConstraintError("bad Pauli letter in '" + letters + "'");
    }
    w |= static_cast<Word>(l) << (2 * q);
  }
  return w;
}

std::string word_string(Word w, int n) {
  std::string s;
  for (int q = 0; q < n; ++q) s += "IXYZ"[letter(w, q)];
  return s;
}

DenseOp word_op(const std::string& letters, const Rational& c) {
  DenseOp d(static_cast<int>(letters.size()));
  d.coeffs[parse_word(letters)] = c;
  return d;
}

DenseOp densify(const SymOpVector& v) {
  DenseOp d(v.n());
  for (const auto& [t, c] : v.coeffs()) {
    for (Word w : orbit_words(t, v.n())) d.coeffs[w] += c;
  }
  return d;
}

SymOpVector symmetrize(const DenseOp& d) {
  std::map<PauliTriple, Rational> seen;
  for (Word w = 0; w < d.coeffs.size(); ++w) {
    const auto t = word_class(w, d.n);
    auto [it, inserted] = seen.try_emplace(t, d.coeffs[w]);
    if (!inserted && it->second != d.coeffs[w]) {
      throw StructureViolation("dense operator is not S_n-symmetric on class " +
                               to_string(t));
    }
  }
  return SymOpVector(d.n, seen);
}

DenseOp dense_bracket(const DenseOp& a, const DenseOp& b) {
  if (a.n != b.n) throw DimensionError("dense_bracket: n mismatch");
  DenseOp out(a.n);
  std::vector<Word> na, nb;
  for (Word w = 0; w < a.coeffs.size(); ++w) {
    if (a.coeffs[w] != 0) na.push_back(w);
    if (b.coeffs[w] != 0) nb.push_back(w);
  }
  for (Word x : na) {
    for (Word y : nb) {
      const auto p = multiply(x, y, a.n);
      if ((p.plus + p.minus) % 2 == 0) continue;  // commuting words
      // [i x, i y] = -2 x y = -2 i^(plus-minus) (xy); as a multiple of i (xy):
      const int e = ((p.plus - p.minus - 1) % 4 + 4) % 4;
      const int sign = e == 0 ? -2 : 2;
      out.coeffs[p.word] += sign * a.coeffs[x] * b.coeffs[y];
    }
  }
  return out;
}

DenseClosure dense_closure(const std::vector<DenseOp>& gens) {
  if (gens.empty()) throw ConstraintError("dense_closure: empty generator set");
  const int n = gens.front().n;
  DenseClosure out;
  if (n == kMaxN) {
    out.warnings.push_back("dense closure at n=6 is slow (4096 coordinates per element)");
  }
  WordEchelon ech(word_count(n));
  std::vector<DenseOp> seeds;
  for (const auto& g : gens) {
    if (g.n != n) throw DimensionError("dense_closure: n mismatch");
    if (ech.insert(g.coeffs)) {
      seeds.push_back(g);
      out.basis.push_back(g);
    }
  }
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (const auto& g : seeds) {
      auto w = dense_bracket(g, out.basis[i]);
      if (ech.insert(w.coeffs)) out.basis.push_back(std::move(w));
    }
  }
  out.dim = ech.rank();
  return out;
}

DenseOp class_sum(int mu, int n) {
  check_n(n);
  if (mu < 0 || mu > n / 2) throw ConstraintError("class_sum: mu out of range");
  DenseOp out(n);
  // Enumerate sets of mu disjoint pairs with pairs in increasing order of
  // their smaller element, so each involution is produced once.
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  const Rational weight = ratio(BigInt(1), BigInt(1) << static_cast<mp_bitcnt_t>(mu));

  auto emit = [&]() {
    // Expand prod_j (II + XX + YY + ZZ) on the chosen pairs.
    const std::size_t terms = std::size_t{1} << (2 * pairs.size());
    for (std::size_t code = 0; code < terms; ++code) {
      Word w = 0;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const Word l = static_cast<Word>((code >> (2 * j)) & 3u);
        w |= l << (2 * pairs[j].first);
        w |= l << (2 * pairs[j].second);
      }
      out.coeffs[w] += weight;
    }
  };

  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pairs.size()) == mu) {
      emit();
      return;
    }
    for (int a = start; a < n; ++a) {
      if (used[static_cast<std::size_t>(a)]) continue;
      used[static_cast<std::size_t>(a)] = true;
      for (int b = a + 1; b < n; ++b) {
        if (used[static_cast<std::size_t>(b)]) continue;
        used[static_cast<std::size_t>(b)] = true;
        pairs.emplace_back(a, b);
        self(self, a + 1);
        pairs.pop_back();
        used[static_cast<std::size_t>(b)] = false;
      }
      used[static_cast<std::size_t>(a)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t dense_center_dim(int n) {
  check_n(n);
  const auto triples = all_triples(n);
  std::vector<DenseOp> dense;
  for (const auto& t : triples) dense.push_back(densify(SymOpVector::unit(t, n)));

  WordEchelon eq(triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    // Row per word w: sum_s v_s [P_s, P_t]_w = 0.
    std::vector<std::vector<Rational>> rows(word_count(n));
    std::vector<bool> touched(word_count(n), false);
    for (std::size_t s = 0; s < triples.size(); ++s) {
      const auto br = dense_bracket(dense[s], dense[t]);
      for (Word w = 0; w < br.coeffs.size(); ++w) {
        if (br.coeffs[w] == 0) continue;
        if (!touched[w]) {
          rows[w].assign(triples.size(), 0);
          touched[w] = true;
        }
        rows[w][s] = br.coeffs[w];
      }
    }
    for (Word w = 0; w < rows.size(); ++w) {
      if (touched[w]) eq.insert(std::move(rows[w]));
    }
  }
  return triples.size() - eq.rank();
}

std::size_t estimated_bytes(int n) { return word_count(n) * sizeof(Rational) * 2; }

}  // namespace symlie::oracle
