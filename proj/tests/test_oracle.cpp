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

#include "symlie/center.hpp"
#include "symlie/closure.hpp"
#include "symlie/errors.hpp"
#include "symlie/oracle.hpp"
#include "test_util.hpp"

namespace symlie {
namespace {

using oracle::DenseOp;
using oracle::word_op;

SymOpVector P(int kx, int ky, int kz, int n) { return SymOpVector::unit({kx, ky, kz}, n); }

DenseOp sum(std::initializer_list<DenseOp> ops) {
  DenseOp out(ops.begin()->n);
  for (const auto& o : ops) {
    for (std::size_t w = 0; w < o.coeffs.size(); ++w) out.coeffs[w] += o.coeffs[w];
  }
  return out;
}

TEST(Densify, Examples) {
  EXPECT_EQ(oracle::densify(P(0, 0, 2, 2)), word_op("ZZ"));
  EXPECT_EQ(oracle::densify(P(1, 0, 0, 3)), sum({word_op("XII"), word_op("IXI"), word_op("IIX")}));
  EXPECT_EQ(oracle::densify(make_C(1, 2).vec),
            sum({word_op("XX", 2), word_op("YY", 2), word_op("ZZ", 2)}));
  EXPECT_THROW(oracle::densify(P(1, 0, 0, 7)), ResourceError);
}

TEST(Densify, SymmetrizeInverts) {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::uniform(1, 5);
    const auto v = testing::random_vector(n, 6);
    EXPECT_EQ(oracle::symmetrize(oracle::densify(v)), v);
  }
  EXPECT_THROW(oracle::symmetrize(word_op("XI")), StructureViolation);
}

TEST(Words, TextRoundTrip) {
  EXPECT_EQ(oracle::word_string(oracle::parse_word("XIZY"), 4), "XIZY");
  EXPECT_THROW(oracle::parse_word("XQ"), ConstraintError);
}

TEST(DenseBracket, Examples) {
  EXPECT_EQ(oracle::dense_bracket(word_op("X"), word_op("Y")), word_op("Z", -2));
  EXPECT_EQ(oracle::dense_bracket(word_op("Y"), word_op("X")), word_op("Z", 2));
  EXPECT_TRUE(oracle::dense_bracket(word_op("XX"), word_op("YY")).is_zero());
  const StructureTable t(4);
  EXPECT_EQ(oracle::dense_bracket(oracle::densify(P(1, 0, 0, 4)), oracle::densify(P(0, 1, 0, 4))),
            oracle::densify(t.entry_vector({1, 0, 0}, {0, 1, 0})));
  const auto c2 = oracle::densify(make_C(2, 4).vec);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(oracle::dense_bracket(c2, oracle::densify(testing::random_vector(4, 5))).is_zero());
  }
}

TEST(DenseBracket, SymmetricInputsGiveSymmetricOutput) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform(1, 4);
    const auto u = testing::random_vector(n), v = testing::random_vector(n);
    EXPECT_NO_THROW(oracle::symmetrize(
        oracle::dense_bracket(oracle::densify(u), oracle::densify(v))));
  }
}

TEST(DenseBracket, MatchesStructureTableUpToFive) {
  for (int n = 1; n <= 5; ++n) {
    const StructureTable t(n);
    const auto ts = all_triples(n);
    std::vector<DenseOp> dense;
    for (const auto& a : ts) dense.push_back(oracle::densify(SymOpVector::unit(a, n)));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j) {
        ASSERT_EQ(oracle::symmetrize(oracle::dense_bracket(dense[i], dense[j])),
                  t.entry_vector(ts[i], ts[j]));
      }
    }
  }
}

TEST(DenseClosure, Examples) {
  std::vector<DenseOp> g2;
  for (const auto& m : GeneratorSet::g2(3).members) g2.push_back(oracle::densify(m));
  EXPECT_EQ(oracle::dense_closure(g2).dim, 19u);
  EXPECT_EQ(oracle::dense_closure({word_op("XI")}).dim, 1u);

  std::vector<DenseOp> local;
  const char letters[] = {'X', 'Y', 'Z'};
  for (int q = 0; q < 3; ++q) {
    for (char l : letters) {
      std::string w = "III";
      w[static_cast<std::size_t>(q)] = l;
      local.push_back(word_op(w));
    }
  }
  for (int q = 0; q < 3; ++q) {
    for (int r = q + 1; r < 3; ++r) {
      for (char a : letters) {
        for (char b : letters) {
          std::string w = "III";
          w[static_cast<std::size_t>(q)] = a;
          w[static_cast<std::size_t>(r)] = b;
          local.push_back(word_op(w));
        }
      }
    }
  }
  EXPECT_EQ(oracle::dense_closure(local).dim, 63u);
  EXPECT_THROW(oracle::dense_closure({}), ConstraintError);
}

TEST(DenseClosure, MatchesSparseClosure) {
  for (int n = 2; n <= 5; ++n) {
    const StructureTable t(n);
    std::vector<GeneratorSet> sets{GeneratorSet::g1(n), GeneratorSet::g1_prime(n), GeneratorSet::g2(n)};
    for (int k = 3; k <= std::min(n, 5); ++k) sets.push_back(GeneratorSet::gk(n, k));
    for (const auto& g : sets) {
      std::vector<DenseOp> d;
      for (const auto& m : g.members) d.push_back(oracle::densify(m));
      const auto dc = oracle::dense_closure(d);
      EXPECT_EQ(dc.dim, lie_closure(g, t).dim()) << g.label << " n=" << n;
      // Every dense basis element is symmetric and lies in the sparse closure.
      const auto sparse = lie_closure(g, t);
      for (const auto& b : dc.basis) EXPECT_TRUE(sparse.contains(oracle::symmetrize(b)));
    }
  }
}

TEST(ClassSum, Examples) {
  const auto l1 = oracle::class_sum(1, 2);
  EXPECT_EQ(l1, sum({word_op("II", Rational(1, 2)), word_op("XX", Rational(1, 2)),
                     word_op("YY", Rational(1, 2)), word_op("ZZ", Rational(1, 2))}));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(oracle::class_sum(0, n), oracle::densify(P(0, 0, 0, n)));
  EXPECT_THROW(oracle::class_sum(3, 5), ConstraintError);
}

TEST(ClassSum, EqualsClosedFormUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (int mu = 0; mu <= n / 2; ++mu) {
      EXPECT_EQ(oracle::densify(make_L(mu, n).vec), oracle::class_sum(mu, n)) << n << " " << mu;
    }
  }
}

TEST(Budget, RefusesLargeN) {
  EXPECT_THROW(DenseOp(7), ResourceError);
  EXPECT_THROW(oracle::class_sum(1, 7), ResourceError);
  EXPECT_GT(oracle::estimated_bytes(6), oracle::estimated_bytes(5));
}

}  // namespace
}  // namespace symlie
