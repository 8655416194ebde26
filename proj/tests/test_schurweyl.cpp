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

#include <cmath>
#include <numeric>

#include "symlie/center.hpp"
#include "symlie/closure.hpp"
#include "symlie/errors.hpp"
#include "symlie/schurweyl.hpp"
#include "test_util.hpp"

namespace symlie {
namespace {

TEST(Isotypic, Examples) {
  auto t = isotypic_table(2);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].d_lambda, 1);
  EXPECT_EQ(t[0].m_lambda, 3);
  EXPECT_EQ(t[1].d_lambda, 1);
  EXPECT_EQ(t[1].m_lambda, 1);
  t = isotypic_table(4);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].m_lambda, 5);
  EXPECT_EQ(t[1].m_lambda, 3);
  EXPECT_EQ(t[2].m_lambda, 1);
  EXPECT_EQ(t[0].d_lambda, 1);
  EXPECT_EQ(t[1].d_lambda, 3);
  EXPECT_EQ(t[2].d_lambda, 2);
  t = isotypic_table(1);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].m_lambda, 2);
  EXPECT_THROW(isotypic_table(0), ConstraintError);
}

TEST(Isotypic, SumRulesUpToTwenty) {
  for (int n = 1; n <= 20; ++n) {
    const auto r = check_sum_rules(n);
    EXPECT_TRUE(r.holds) << n;
    EXPECT_EQ(r.sum_dm, BigInt(1) << n);
    EXPECT_EQ(r.sum_m2, binomial(n + 3, 3));
  }
  EXPECT_EQ(check_sum_rules(2).sum_m2, 10);
}

TEST(Transform, TwoQubits) {
  const auto st = build_schur_transform(2);
  const double h = 1 / std::sqrt(2.0);
  Eigen::MatrixXd expected(4, 4);
  expected << 1, 0, 0, 0,
              0, h, h, 0,
              0, 0, 0, 1,
              0, h, -h, 0;
  EXPECT_LT((st.u - expected).cwiseAbs().maxCoeff(), 1e-15);
  ASSERT_EQ(st.sectors.size(), 2u);
  EXPECT_EQ(st.sectors[0].m, 3);
  EXPECT_EQ(st.sectors[1].offset, 3);
}

TEST(Transform, ThreeQubitSectors) {
  const auto st = build_schur_transform(3);
  ASSERT_EQ(st.sectors.size(), 2u);
  EXPECT_EQ(st.sectors[0].m, 4);
  EXPECT_EQ(st.sectors[0].d, 1);
  EXPECT_EQ(st.sectors[1].m, 2);
  EXPECT_EQ(st.sectors[1].d, 2);
  EXPECT_EQ(st.sectors[1].paths, (std::vector<std::string>{"+-", "-+"}));
}

TEST(Transform, UnitaryUpToEight) {
  for (int n = 1; n <= 8; ++n) EXPECT_LT(build_schur_transform(n).unitarity_error(), kUnitarityTol);
  EXPECT_THROW(build_schur_transform(9), ResourceError);
}

TEST(Transform, PermutationsActOnPathFactorOnly) {
  for (int n = 2; n <= 6; ++n) {
    const auto st = build_schur_transform(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> pi(static_cast<std::size_t>(n));
        std::iota(pi.begin(), pi.end(), 0);
        std::swap(pi[static_cast<std::size_t>(a)], pi[static_cast<std::size_t>(b)]);
        EXPECT_LT(permutation_off_pattern(permutation_matrix(pi), st), kBlockTol);
      }
    }
  }
}

TEST(BlockProject, SingleXAtTwoQubits) {
  const auto st = build_schur_transform(2);
  const auto blocks = block_project(SymOpVector::unit({1, 0, 0}, 2), st);
  ASSERT_EQ(blocks.size(), 2u);
  Eigen::MatrixXcd jx = Eigen::MatrixXcd::Zero(3, 3);
  jx(0, 1) = jx(1, 0) = jx(1, 2) = jx(2, 1) = 1 / std::sqrt(2.0);
  EXPECT_LT((blocks[0].a - 2.0 * jx).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(blocks[1].a.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BlockProject, IdentityAndCenter) {
  for (int n = 1; n <= 6; ++n) {
    const auto st = build_schur_transform(n);
    for (const auto& b : block_project(SymOpVector::unit({0, 0, 0}, n), st)) {
      EXPECT_LT((b.a - Eigen::MatrixXcd::Identity(b.m, b.m)).cwiseAbs().maxCoeff(), 1e-12);
    }
    for (int mu = 0; mu <= n / 2; ++mu) {
      const auto sc = sector_scalars(make_C(mu, n).vec, st);
      EXPECT_LT(sc.max_variance, 1e-18) << n << " " << mu;
      EXPECT_LT(sc.max_offdiag, kBlockTol);
      EXPECT_EQ(sc.e.size(), static_cast<std::size_t>(n / 2 + 1));
    }
  }
}

TEST(BlockProject, RejectsNonEquivariantOperators) {
  const auto st = build_schur_transform(2);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 4);
  h(0, 1) = h(1, 0) = 1;  // X on the second qubit only
  EXPECT_GE(block_structure(h, st).off_pattern, kBlockTol);
  EXPECT_THROW(block_project(SymOpVector::unit({1, 0, 0}, 3), st), DimensionError);
}

TEST(BlockProject, EveryG2ClosureRowIsBlockStructured) {
  for (int n = 2; n <= 6; ++n) {
    const auto st = build_schur_transform(n);
    const StructureTable t(n);
    for (const auto& row : lie_closure(GeneratorSet::g2(n), t).rows()) {
      EXPECT_NO_THROW(block_project(row, st));
    }
  }
}

TEST(SubspaceControl, G2AtFour) {
  const auto st = build_schur_transform(4);
  const StructureTable t(4);
  const auto basis = lie_closure(GeneratorSet::g2(4), t);
  const auto cert = certify_subspace_control(basis, st);
  EXPECT_TRUE(cert.certified());
  ASSERT_EQ(cert.sectors.size(), 3u);
  EXPECT_EQ(cert.sectors[0].su_dim, 24);
  EXPECT_EQ(cert.sectors[1].su_dim, 8);
  EXPECT_EQ(cert.sectors[2].su_dim, 0);
  for (const auto& s : cert.sectors) EXPECT_TRUE(s.contains_su);
  // One trace direction survives: besides global tracelessness, the sector
  // traces obey one more relation, so relative phases are out of reach.
  EXPECT_EQ(cert.trace_rank, 1);
  EXPECT_EQ(cert.closure_dim, 33u);

  auto report = verdicts(basis);
  apply_certificate(report, cert);
  EXPECT_TRUE(report.subspace_controllable);
  EXPECT_EQ(report.subspace_controllable_source, "schur-blocks");
}

TEST(SubspaceControl, G2CertifiedUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    const StructureTable t(n);
    const auto cert =
        certify_subspace_control(lie_closure(GeneratorSet::g2(n), t), build_schur_transform(n));
    EXPECT_TRUE(cert.certified()) << n;
  }
}

TEST(SubspaceControl, OneBodyFails) {
  const auto st = build_schur_transform(3);
  const StructureTable t(3);
  const auto cert = certify_subspace_control(lie_closure(GeneratorSet::g1(3), t), st);
  EXPECT_FALSE(cert.certified());
  for (const auto& s : cert.sectors) {
    if (s.m > 1) EXPECT_FALSE(s.contains_su);
  }
}

TEST(SubspaceControl, CenterlessAlgebraPasses) {
  const int n = 3;
  const StructureTable t(n);
  std::vector<SymOpVector> brackets;
  for (const auto& a : all_triples(n)) {
    for (const auto& b : all_triples(n)) brackets.push_back(t.entry_vector(a, b));
  }
  const auto cless = LieBasis::span_of(n, brackets);
  EXPECT_EQ(BigInt(static_cast<long>(cless.dim())), ambient_dims(n).dim_su_cless);
  const auto cert = certify_subspace_control(cless, build_schur_transform(n));
  EXPECT_TRUE(cert.all_sectors);
  EXPECT_EQ(cert.trace_rank, 0);
  EXPECT_TRUE(cert.dimension_consistent);
}

TEST(Export, RowMajorJson) {
  const auto st = build_schur_transform(2);
  const auto j = transform_to_json(st);
  EXPECT_EQ(j["rows"], 4);
  ASSERT_EQ(j["data"].size(), 16u);
  EXPECT_NEAR(j["data"][5].get<double>(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(j["data"][14].get<double>(), -1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(j["sectors"][1]["offset"], 3);
}

}  // namespace
}  // namespace symlie
