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

#include "symlie/erratum.hpp"
#include "symlie/errors.hpp"
#include "symlie/structure.hpp"
#include "test_util.hpp"

namespace symlie::erratum {
namespace {

SymOpVector P(int kx, int ky, int kz, int n) { return SymOpVector::unit({kx, ky, kz}, n); }

TEST(Convention, MapsAreInverseInvolutions) {
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testing::uniform(1, 6);
    const auto v = testing::random_vector(n, 6);
    EXPECT_EQ(to_global(to_local(v)), v);
    EXPECT_EQ(to_local(to_local(v)), v);
  }
  EXPECT_EQ(to_local(P(0, 1, 0, 2)), P(0, 1, 0, 2) * Rational(-1));
  EXPECT_EQ(to_local(P(0, 2, 0, 2)), P(0, 2, 0, 2));
}

TEST(Convention, LocalBracketEnginesAgree) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : all_triples(n)) {
      for (const auto& b : all_triples(n)) {
        ASSERT_EQ(local_bracket(a, b, n), local_bracket_dense(a, b, n));
      }
    }
  }
}

TEST(BuildABC, PrintedCoefficients) {
  const auto c = build_ABC(3, 5);
  EXPECT_EQ(c.A, P(1, 2, 0, 5) * Rational(-4) + P(3, 0, 0, 5) * Rational(6));
  EXPECT_EQ(c.B, P(1, 0, 2, 5) * Rational(4) - P(3, 0, 0, 5) * Rational(6));
  EXPECT_EQ(c.C, P(1, 2, 0, 5) * Rational(-4) - P(1, 0, 2, 5) * Rational(4) +
                     P(3, 0, 0, 5) * Rational(12));
  EXPECT_EQ(c.C, c.A - c.B);
}

TEST(BuildABC, DependenceAtFour) {
  const auto c = build_ABC(4, 6);
  EXPECT_TRUE((c.C - c.A * Rational(2) + c.B).is_zero());
}

TEST(BuildABC, RankTwoCorrectedThreeUncorrected) {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 3; k <= n; ++k) {
      const auto c = build_ABC(k, n);
      EXPECT_EQ(exact_rank({c.A, c.B, c.C}), 2u) << k << " " << n;
      EXPECT_TRUE(dependence_holds(c));
      const auto u = build_ABC(k, n, false);
      EXPECT_EQ(exact_rank({u.A, u.B, u.C}), 3u) << k << " " << n;
      EXPECT_FALSE(dependence_holds(u));
    }
  }
}

TEST(BuildABC, RangeIsEnforced) {
  EXPECT_THROW(build_ABC(2, 5), DomainError);
  EXPECT_THROW(build_ABC(6, 5), DomainError);
  EXPECT_THROW(verify_note_f_commutators(2, 4), DomainError);
  EXPECT_THROW(verify_note_f_commutators(3, 7), ResourceError);
}

TEST(Commutators, SpotValues) {
  auto r = verify_note_f_commutators(3, 4);
  ASSERT_TRUE(r.passed());
  const auto& a = r.checks[0].terms;
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0].triple, (PauliTriple{1, 2, 0}));
  EXPECT_EQ(a[0].dense, -4);
  EXPECT_EQ(a[1].triple, (PauliTriple{3, 0, 0}));
  EXPECT_EQ(a[1].dense, 6);
  EXPECT_EQ(r.checks[2].not_applicable.size(), 1u);

  r = verify_note_f_commutators(4, 5);
  ASSERT_TRUE(r.passed());
  bool seen = false;
  for (const auto& t : r.checks[2].terms) {
    if (t.triple == PauliTriple{4, 0, 0}) {
      EXPECT_EQ(t.dense, 24);
      seen = true;
    }
    if (t.triple == PauliTriple{0, 2, 0}) EXPECT_EQ(t.dense, -12);
  }
  EXPECT_TRUE(seen);

  r = verify_note_f_commutators(4, 6);
  EXPECT_EQ(r.checks[1].terms[0].triple, (PauliTriple{2, 0, 2}));
  EXPECT_EQ(r.checks[1].terms[0].dense, 4);
}

TEST(Commutators, AllPrintedTermsUpToSix) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 3; k <= n; ++k) {
      const auto r = verify_note_f_commutators(k, n);
      EXPECT_TRUE(r.passed()) << to_json(r).dump(1);
      for (const auto& c : r.checks) EXPECT_TRUE(c.extra_terms.empty());
    }
  }
}

TEST(Commutators, GlobalConventionNeedsTheMap) {
  // In global coordinates the first commutator comes out with the opposite
  // overall sign; the printed digits only hold after relabelling.
  const int k = 3, n = 4;
  const auto global = symlie::bracket({k - 1, 1, 0}, {0, 0, 1}, n);
  EXPECT_EQ(global, -build_ABC(k, n).A);
  EXPECT_EQ(local_bracket({k - 1, 1, 0}, {0, 0, 1}, n), build_ABC(k, n).A);
}

TEST(Report, Json) {
  const auto j = to_json(verify_note_f_commutators(3, 4));
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), 3u);
  EXPECT_EQ(j["checks"][0]["terms"][0]["printed"], "-4");
}

}  // namespace
}  // namespace symlie::erratum
