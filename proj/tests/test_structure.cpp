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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "symlie/center.hpp"
#include "symlie/echelon.hpp"
#include "symlie/errors.hpp"
#include "symlie/structure.hpp"
#include "symlie/sympauli.hpp"
#include "test_util.hpp"

namespace symlie {
namespace {

using testing::random_triple;
using testing::random_vector;
using testing::uniform;

SymOpVector P(int kx, int ky, int kz, int n) { return SymOpVector::unit({kx, ky, kz}, n); }

TEST(Bracket, XYGivesZ) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(bracket({1, 0, 0}, {0, 1, 0}, n), P(0, 0, 1, n) * Rational(-2)) << n;
  }
}

TEST(Bracket, SingleQubitCycle) {
  EXPECT_EQ(bracket({0, 1, 0}, {0, 0, 1}, 1), P(1, 0, 0, 1) * Rational(-2));
  EXPECT_EQ(bracket({0, 0, 1}, {1, 0, 0}, 1), P(0, 1, 0, 1) * Rational(-2));
  EXPECT_EQ(bracket({0, 1, 0}, {1, 0, 0}, 1), P(0, 0, 1, 1) * Rational(2));
}

TEST(Bracket, WithSingleXHopsWithinLevel) {
  // (k_y+1) and (k_z+1) weights for a single-X bracket.
  const int kx = 1, ky = 2, kz = 1, n = 5;
  const auto expected = (P(kx, ky + 1, kz - 1, n) * Rational(ky + 1) -
                         P(kx, ky - 1, kz + 1, n) * Rational(kz + 1)) *
                        Rational(-2);
  EXPECT_EQ(bracket({kx, ky, kz}, {1, 0, 0}, n), expected);
  EXPECT_EQ(bracket_orbit_expansion({kx, ky, kz}, {1, 0, 0}, n), expected);
}

TEST(Bracket, KnownValue) {
  const SymOpVector expected(4, {{{2, 1, 0}, -4}, {{0, 1, 0}, -6}});
  EXPECT_EQ(bracket({1, 0, 1}, {2, 0, 0}, 4), expected);
}

TEST(Bracket, SelfBracketVanishes) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : all_triples(n)) EXPECT_TRUE(bracket(t, t, n).is_zero());
  }
}

TEST(Bracket, InvalidInputs) {
  EXPECT_THROW(bracket({3, 0, 0}, {1, 0, 0}, 2), ConstraintError);
  EXPECT_THROW(bracket({1, 0, 0}, {1, 0, 0}, 41), ResourceError);
  EXPECT_THROW(bracket_orbit_expansion({1, 0, 0}, {1, 0, 0}, 17), ResourceError);
}

TEST(Bracket, AntisymmetricWithEvenIntegerCoefficients) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& a : all_triples(n)) {
      for (const auto& b : all_triples(n)) {
        const auto ab = bracket(a, b, n);
        EXPECT_EQ(ab, -bracket(b, a, n));
        for (const auto& [t, c] : ab.coeffs()) {
          ASSERT_EQ(c.get_den(), 1);
          EXPECT_EQ(c.get_num() % 2, 0);
        }
      }
    }
  }
}

TEST(Bracket, SingleXPreservesXCountAndLevel) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : all_triples(n)) {
      const auto r = bracket(a, {1, 0, 0}, n);
      for (const auto& [t, c] : r.coeffs()) {
        EXPECT_EQ(t.kx, a.kx);
        EXPECT_EQ(t.level(), a.level());
      }
    }
  }
}

TEST(Bracket, OverlapEqualsOrbitExpansionUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const auto ts = all_triples(n);
    for (const auto& a : ts) {
      for (const auto& b : ts) {
        ASSERT_EQ(bracket(a, b, n), bracket_orbit_expansion(a, b, n))
            << to_string(a) << " " << to_string(b) << " n=" << n;
      }
    }
  }
}

TEST(Bracket, RandomPairsAgreeAtLargerN) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform(7, 10);
    const auto a = random_triple(n), b = random_triple(n);
    ASSERT_EQ(bracket(a, b, n), bracket_orbit_expansion(a, b, n))
        << to_string(a) << " " << to_string(b) << " n=" << n;
  }
}

TEST(Table, JacobiFullScanSmallN) {
  for (int n = 1; n <= 3; ++n) {
    const StructureTable t(n);
    const auto ts = all_triples(n);
    for (const auto& a : ts) {
      for (const auto& b : ts) {
        for (const auto& c : ts) {
          const auto j = bracket_vectors(P(a.kx, a.ky, a.kz, n), t.entry_vector(b, c), t) +
                         bracket_vectors(P(b.kx, b.ky, b.kz, n), t.entry_vector(c, a), t) +
                         bracket_vectors(P(c.kx, c.ky, c.kz, n), t.entry_vector(a, b), t);
          ASSERT_TRUE(j.is_zero());
        }
      }
    }
  }
}

TEST(Table, JacobiRandomTriplesUpToTen) {
  std::vector<std::unique_ptr<StructureTable>> tables;
  for (int n = 0; n <= 10; ++n) tables.push_back(std::make_unique<StructureTable>(std::max(n, 1)));
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = uniform(1, 10);
    const auto& t = *tables[static_cast<std::size_t>(n)];
    const auto a = random_triple(n), b = random_triple(n), c = random_triple(n);
    const auto j = bracket_vectors(SymOpVector::unit(a, n), t.entry_vector(b, c), t) +
                   bracket_vectors(SymOpVector::unit(b, n), t.entry_vector(c, a), t) +
                   bracket_vectors(SymOpVector::unit(c, n), t.entry_vector(a, b), t);
    ASSERT_TRUE(j.is_zero()) << to_string(a) << " " << to_string(b) << " " << to_string(c);
  }
}

TEST(Table, TraceFormIsAdInvariant) {
  for (int trial = 0; trial < 300; ++trial) {
    const int n = uniform(1, 8);
    const StructureTable t(n);
    const auto u = random_vector(n), v = random_vector(n), w = random_vector(n);
    EXPECT_EQ(trace_inner(bracket_vectors(u, v, t), w) + trace_inner(v, bracket_vectors(u, w, t)),
              0);
  }
}

TEST(Table, BracketVectorsBasics) {
  const StructureTable t(4);
  const auto u = random_vector(4, 6);
  EXPECT_TRUE(bracket_vectors(u, u, t).is_zero());
  EXPECT_EQ(bracket_vectors(P(1, 0, 0, 4), P(0, 1, 0, 4), t), P(0, 0, 1, 4) * Rational(-2));
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_TRUE(bracket_vectors(make_C(1, 4).vec, random_vector(4, 8), t).is_zero());
  }
  EXPECT_THROW(bracket_vectors(P(1, 0, 0, 3), P(1, 0, 0, 4), t), DimensionError);
}

TEST(Table, FillAndLazyEntriesAgree) {
  StructureTable full(3);
  full.fill();
  EXPECT_EQ(full.cached_pairs(), 20u * 19u / 2u);
  const StructureTable lazy(3);
  for (const auto& [a, b] : full.stored_pairs()) {
    EXPECT_EQ(full.entry_vector(a, b), lazy.entry_vector(a, b));
    EXPECT_EQ(full.entry_vector(b, a), -lazy.entry_vector(a, b));
  }
}

TEST(Table, OrbitMethodTableMatches) {
  StructureTable a(6, BracketMethod::kOverlap), b(6, BracketMethod::kOrbit);
  a.fill();
  b.fill();
  for (const auto& [x, y] : a.stored_pairs()) ASSERT_EQ(a.entry_vector(x, y), b.entry_vector(x, y));
}

TEST(Method, Names) {
  EXPECT_EQ(to_string(BracketMethod::kOverlap), "overlap-combinatorics");
  EXPECT_EQ(parse_bracket_method("orbit"), BracketMethod::kOrbit);
  EXPECT_EQ(parse_bracket_method("overlap-combinatorics"), BracketMethod::kOverlap);
  EXPECT_THROW(parse_bracket_method("dense"), ConstraintError);
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("symlie_cache_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, RoundTripIsExact) {
  auto first = build_table(4, {}, BracketMethod::kOverlap, dir_);
  EXPECT_FALSE(first.loaded_from_cache);
  const auto path = cache_file_path(dir_, 4, BracketMethod::kOverlap);
  ASSERT_TRUE(std::filesystem::exists(path));
  auto second = build_table(4, {}, BracketMethod::kOverlap, dir_);
  EXPECT_TRUE(second.loaded_from_cache);
  EXPECT_TRUE(second.warnings.empty());
  EXPECT_EQ(serialize_table(*first.table), serialize_table(*second.table));
  for (const auto& [a, b] : first.table->stored_pairs()) {
    EXPECT_EQ(second.table->entry_vector(a, b), bracket(a, b, 4));
  }
}

TEST_F(CacheTest, CorruptFileIsRebuiltWithWarning) {
  build_table(3, {}, BracketMethod::kOverlap, dir_);
  const auto path = cache_file_path(dir_, 3, BracketMethod::kOverlap);
  std::string text;
  {
    std::ifstream in(path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  const auto pos = text.find("\"-2\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 4, "\"-4\"");
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  const auto rebuilt = build_table(3, {}, BracketMethod::kOverlap, dir_);
  EXPECT_FALSE(rebuilt.loaded_from_cache);
  ASSERT_EQ(rebuilt.warnings.size(), 1u);
  EXPECT_NE(rebuilt.warnings[0].find("digest"), std::string::npos);
  EXPECT_EQ(rebuilt.table->entry_vector({1, 0, 0}, {0, 1, 0}), P(0, 0, 1, 3) * Rational(-2));
}

TEST_F(CacheTest, WrongNOrMethodIsRejected) {
  build_table(2, {}, BracketMethod::kOverlap, dir_);
  std::ifstream in(cache_file_path(dir_, 2, BracketMethod::kOverlap));
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_THROW(deserialize_table(text, 3, BracketMethod::kOverlap), std::runtime_error);
  EXPECT_THROW(deserialize_table(text, 2, BracketMethod::kOrbit), std::runtime_error);
  EXPECT_THROW(deserialize_table("{", 2, BracketMethod::kOverlap), std::runtime_error);
  EXPECT_NO_THROW(deserialize_table(text, 2, BracketMethod::kOverlap));
}

TEST(Echelon, RankContainsNullspace) {
  Echelon e(4);
  EXPECT_TRUE(e.insert(std::vector<Rational>{1, 2, 0, 0}));
  EXPECT_TRUE(e.insert(std::vector<Rational>{0, 1, 1, 0}));
  EXPECT_FALSE(e.insert(std::vector<Rational>{2, 5, 1, 0}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains({1, 3, 1, 0}));
  EXPECT_FALSE(e.contains({0, 0, 0, 1}));
  const auto ns = e.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& x : ns) {
    EXPECT_EQ(x[0] + 2 * x[1], 0);
    EXPECT_EQ(x[1] + x[2], 0);
  }
}

TEST(Echelon, RowsAreReduced) {
  Echelon e(3);
  e.insert(std::vector<Rational>{0, 2, 4});
  e.insert(std::vector<Rational>{3, 1, 0});
  e.insert(std::vector<Rational>{0, 0, 5});
  EXPECT_EQ(e.rank(), 3u);
  const auto rows = e.sorted_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i]->size(), 1u);
    EXPECT_EQ((*rows[i])[0].second, 1);
  }
}

}  // namespace
}  // namespace symlie
