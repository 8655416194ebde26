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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "json.hpp"
#include "symlie/closure.hpp"
#include "symlie/number.hpp"
#include "symlie/sym_op.hpp"

namespace symlie {

/// One isotypic sector of (C^2)^{(x)n}, labelled by the two-row Young
/// diagram (n - mu, mu): spin j = n/2 - mu.
struct IsotypicBlock {
  int mu = 0;
  BigInt d_lambda;  // S_n irrep dimension
  int m_lambda = 0; // multiplicity = 2j + 1
};

std::vector<IsotypicBlock> isotypic_table(int n);

struct SumRules {
  BigInt sum_dm;      // must equal 2^n
  BigInt sum_m2;      // must equal C(n+3,3)
  bool holds = false;
};
SumRules check_sum_rules(int n);

inline constexpr int kSchurMaxN = 8;
inline constexpr double kUnitarityTol = 1e-12;
inline constexpr double kBlockTol = 1e-9;
inline constexpr double kRankTol = 1e-8;

/// Real orthogonal change of basis from the computational basis to the
/// Schur basis, built by coupling spins one at a time.
///
/// Row r of `u` is Schur basis vector r expressed in computational
/// coordinates (qubit 0 is the most significant bit, |0> is spin up).
/// Rows are ordered by sector (mu ascending, so m decreasing), then coupling
/// path (lexicographic over "+" / "-" steps, "+" meaning j grows), then
/// magnetic index a = j - M.
struct SchurTransform {
  struct Sector {
    int mu = 0;
    int d = 0;
    int m = 0;
    int offset = 0;  // first row; row = offset + path * m + a
    std::vector<std::string> paths;
  };

  int n = 0;
  Eigen::MatrixXd u;
  std::vector<Sector> sectors;

  int dimension() const { return static_cast<int>(u.rows()); }
  /// max |U U^T - I| entrywise
  double unitarity_error() const;
};

SchurTransform build_schur_transform(int n);

/// Hermitian matrix H = sum_t c_t P_t of the operator iH stored in `op`.
Eigen::MatrixXcd operator_matrix(const SymOpVector& op);

/// Qubit permutation R(pi): qubit q is moved to pi[q].
Eigen::MatrixXd permutation_matrix(const std::vector<int>& pi);

/// Max deviation of U R U^T from the R_lambda (x) I_m pattern: permutations act
/// on the path factor only, identically for every magnetic index.
double permutation_off_pattern(const Eigen::MatrixXd& r, const SchurTransform& st);

struct BlockProjection {
  struct Block {
    int mu = 0;
    int d = 0;
    int m = 0;
    Eigen::MatrixXcd a;  // m x m
  };
  std::vector<Block> blocks;
  /// max magnitude of entries outside the I_d (x) A pattern, including
  /// disagreement between copies of A.
  double off_pattern = 0;
};

/// Conjugates by the transform and reads off the A blocks without raising.
BlockProjection block_structure(const Eigen::MatrixXcd& h, const SchurTransform& st);

/// Blocks A_mu of H; throws StructureViolation when the off-pattern
/// magnitude reaches kBlockTol.
std::vector<BlockProjection::Block> block_project(const SymOpVector& op,
                                                  const SchurTransform& st);

/// Per-sector scalar e with A = e I, plus the largest within-sector
/// variance of the diagonal and the off-diagonal magnitude.
struct SectorScalars {
  std::vector<std::pair<int, double>> e;  // (mu, e_mu)
  double max_variance = 0;
  double max_offdiag = 0;
};
SectorScalars sector_scalars(const SymOpVector& op, const SchurTransform& st);

struct SectorVerdict {
  int mu = 0;
  int m = 0;
  int span_dim = 0;  // real dimension of the span of the A blocks
  int su_dim = 0;    // m^2 - 1
  bool contains_su = false;
};

struct SubspaceCertificate {
  int n = 0;
  std::vector<SectorVerdict> sectors;
  /// Rank of the per-sector trace vectors (tr A_mu)_mu over closure rows.
  int trace_rank = 0;
  std::size_t closure_dim = 0;
  bool all_sectors = false;
  /// closure_dim == sum su_dim + trace_rank (exact count from the closure).
  bool dimension_consistent = false;
  double max_off_pattern = 0;

  bool certified() const { return all_sectors && dimension_consistent; }
};

inline constexpr int kSubspaceMaxN = 6;

SubspaceCertificate certify_subspace_control(const LieBasis& basis, const SchurTransform& st);

/// Replaces the subspace-controllability verdict of a closure report with
/// the block certificate.
void apply_certificate(ClosureReport& report, const SubspaceCertificate& cert);

nlohmann::json to_json(const SubspaceCertificate& c);

/// Row-major export: {"n", "rows", "cols", "sectors": [...], "data": [...]}.
nlohmann::json transform_to_json(const SchurTransform& st);

}  // namespace symlie
