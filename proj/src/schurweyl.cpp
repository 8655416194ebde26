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

#include "symlie/schurweyl.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "symlie/errors.hpp"
#include "symlie/sympauli.hpp"

namespace symlie {

namespace {

using Complex = std::complex<double>;

struct Multiplet {
  std::string path;
  int j2 = 0;                          // 2j
  std::vector<Eigen::VectorXd> states; // index a = j - M, M2 = j2 - 2a
};

Eigen::VectorXd embed(const Eigen::VectorXd& v, int bit) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size() * 2);
  for (Eigen::Index i = 0; i < v.size(); ++i) out[2 * i + bit] = v[i];
  return out;
}

// State |j1, M1> of a multiplet, or nullptr when |M1| > j1.
const Eigen::VectorXd* component(const Multiplet& m, int m2) {
  if (m2 > m.j2 || m2 < -m.j2) return nullptr;
  return &m.states[static_cast<std::size_t>((m.j2 - m2) / 2)];
}

std::vector<Multiplet> couple(const std::vector<Multiplet>& in) {
  std::vector<Multiplet> out;
  for (const auto& old : in) {
    const int j1 = old.j2;
    const double denom = 2.0 * (j1 + 1);
    for (int step = 0; step < 2; ++step) {
      const bool up = step == 0;
      if (!up && j1 == 0) continue;
      Multiplet next;
      next.path = old.path + (up ? '+' : '-');
      next.j2 = up ? j1 + 1 : j1 - 1;
      const Eigen::Index size = old.states.front().size() * 2;
      for (int m2 = next.j2; m2 >= -next.j2; m2 -= 2) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(size);
        const double plus = (j1 + m2 + 1) / denom;
        const double minus = (j1 - m2 + 1) / denom;
        if (const auto* s = component(old, m2 - 1)) {
          v += (up ? std::sqrt(plus) : -std::sqrt(minus)) * embed(*s, 0);
        }
        if (const auto* s = component(old, m2 + 1)) {
          v += (up ? std::sqrt(minus) : std::sqrt(plus)) * embed(*s, 1);
        }
        next.states.push_back(std::move(v));
      }
      out.push_back(std::move(next));
    }
  }
  return out;
}

// Applies a Pauli word (letters per qubit, 0=I 1=X 2=Y 3=Z) to basis state x.
std::pair<unsigned, Complex> apply_word(const std::vector<int>& letters, unsigned x, int n) {
  unsigned y = x;
  Complex phase = 1;
  for (int q = 0; q < n; ++q) {
    const unsigned bit = 1u << (n - 1 - q);
    const bool one = (x & bit) != 0;
    switch (letters[static_cast<std::size_t>(q)]) {
      case 1: y ^= bit; break;
      case 2:
        y ^= bit;
        phase *= one ? Complex(0, -1) : Complex(0, 1);
        break;
      case 3:
        if (one) phase = -phase;
        break;
      default: break;
    }
  }
  return {y, phase};
}

Eigen::VectorXd hermitian_coords(const Eigen::MatrixXcd& a) {
  const Eigen::Index m = a.rows();
  Eigen::VectorXd v(m * m);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m; ++i) v[k++] = a(i, i).real();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      v[k++] = std::sqrt(2.0) * a(i, j).real();
      v[k++] = std::sqrt(2.0) * a(i, j).imag();
    }
  }
  return v;
}

int numeric_rank(std::vector<Eigen::VectorXd> rows, Eigen::Index width) {
  std::vector<Eigen::VectorXd> kept;
  for (auto& r : rows) {
    const double norm = r.norm();
    if (norm > kRankTol) kept.push_back(r / norm);
  }
  if (kept.empty() || width == 0) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(kept.size()), width);
  for (std::size_t i = 0; i < kept.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = kept[i];
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  return static_cast<int>((s.array() > kRankTol).count());
}

std::vector<Eigen::VectorXd> su_basis(int m) {
  std::vector<Eigen::VectorXd> out;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Eigen::MatrixXcd re = Eigen::MatrixXcd::Zero(m, m), im = re;
      re(i, j) = re(j, i) = 1;
      im(i, j) = Complex(0, -1);
      im(j, i) = Complex(0, 1);
      out.push_back(hermitian_coords(re));
      out.push_back(hermitian_coords(im));
    }
  }
  for (int i = 0; i + 1 < m; ++i) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(m, m);
    d(i, i) = 1;
    d(i + 1, i + 1) = -1;
    out.push_back(hermitian_coords(d));
  }
  return out;
}

}  // namespace

std::vector<IsotypicBlock> isotypic_table(int n) {
  if (n < 1) throw ConstraintError("isotypic_table: n must be >= 1");
  std::vector<IsotypicBlock> out;
  for (int mu = 0; mu <= n / 2; ++mu) {
    out.push_back({mu, binomial(n, mu) - binomial(n, mu - 1), n - 2 * mu + 1});
  }
  return out;
}

SumRules check_sum_rules(int n) {
  SumRules r;
  for (const auto& b : isotypic_table(n)) {
    r.sum_dm += b.d_lambda * b.m_lambda;
    r.sum_m2 += b.m_lambda * b.m_lambda;
  }
  const BigInt two_n = BigInt(1) << static_cast<mp_bitcnt_t>(n);
  r.holds = r.sum_dm == two_n && r.sum_m2 == binomial(n + 3, 3);
  return r;
}

double SchurTransform::unitarity_error() const {
  const Eigen::MatrixXd e = u * u.transpose() - Eigen::MatrixXd::Identity(u.rows(), u.cols());
  return e.cwiseAbs().maxCoeff();
}

SchurTransform build_schur_transform(int n) {
  if (n < 1) throw ConstraintError("build_schur_transform: n must be >= 1");
  if (n > kSchurMaxN) {
    throw ResourceError("Schur transform refuses n=" + std::to_string(n) + " (limit " +
                        std::to_string(kSchurMaxN) + ")");
  }
  Multiplet seed;
  seed.j2 = 1;
  seed.states = {Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)};
  std::vector<Multiplet> ms{seed};
  for (int k = 1; k < n; ++k) ms = couple(ms);

  SchurTransform st;
  st.n = n;
  const int dim = 1 << n;
  st.u = Eigen::MatrixXd::Zero(dim, dim);
  int row = 0;
  for (const auto& block : isotypic_table(n)) {
    std::vector<const Multiplet*> sector;
    for (const auto& m : ms) {
      if (m.j2 == n - 2 * block.mu) sector.push_back(&m);
    }
    std::sort(sector.begin(), sector.end(),
              [](const Multiplet* a, const Multiplet* b) { return a->path < b->path; });
    if (BigInt(static_cast<long>(sector.size())) != block.d_lambda) {
      throw StructureViolation("coupling produced the wrong number of paths");
    }
    SchurTransform::Sector s{block.mu, static_cast<int>(sector.size()), block.m_lambda, row, {}};
    for (const auto* m : sector) {
      s.paths.push_back(m->path);
      for (const auto& v : m->states) st.u.row(row++) = v.transpose();
    }
    st.sectors.push_back(std::move(s));
  }
  return st;
}

Eigen::MatrixXcd operator_matrix(const SymOpVector& op) {
  const int n = op.n();
  if (n > kSchurMaxN) throw ResourceError("operator_matrix: n too large");
  const unsigned dim = 1u << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [t, c] : op.coeffs()) {
    const double cd = c.get_d();
    std::vector<int> letters;
    letters.insert(letters.end(), static_cast<std::size_t>(n - t.level()), 0);
    letters.insert(letters.end(), static_cast<std::size_t>(t.kx), 1);
    letters.insert(letters.end(), static_cast<std::size_t>(t.ky), 2);
    letters.insert(letters.end(), static_cast<std::size_t>(t.kz), 3);
    do {
      for (unsigned x = 0; x < dim; ++x) {
        const auto [y, phase] = apply_word(letters, x, n);
        h(y, x) += cd * phase;
      }
    } while (std::next_permutation(letters.begin(), letters.end()));
  }
  return h;
}

Eigen::MatrixXd permutation_matrix(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  const unsigned dim = 1u << n;
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);
  for (unsigned x = 0; x < dim; ++x) {
    unsigned y = 0;
    for (int q = 0; q < n; ++q) {
      if (x & (1u << (n - 1 - q))) y |= 1u << (n - 1 - pi[static_cast<std::size_t>(q)]);
    }
    r(y, x) = 1;
  }
  return r;
}

double permutation_off_pattern(const Eigen::MatrixXd& r, const SchurTransform& st) {
  if (r.rows() != st.dimension()) throw DimensionError("permutation_off_pattern: size mismatch");
  const Eigen::MatrixXd m = st.u * r * st.u.transpose();
  double worst = 0;
  for (const auto& row_sec : st.sectors) {
    for (const auto& col_sec : st.sectors) {
      for (int pr = 0; pr < row_sec.d; ++pr) {
        for (int pc = 0; pc < col_sec.d; ++pc) {
          // Reference entry: path block (pr, pc) at magnetic index 0.
          const double ref = &row_sec == &col_sec
                                 ? m(row_sec.offset + pr * row_sec.m, col_sec.offset + pc * col_sec.m)
                                 : 0.0;
          for (int ar = 0; ar < row_sec.m; ++ar) {
            for (int ac = 0; ac < col_sec.m; ++ac) {
              const double expected = (&row_sec == &col_sec && ar == ac) ? ref : 0.0;
              const double got = m(row_sec.offset + pr * row_sec.m + ar,
                                   col_sec.offset + pc * col_sec.m + ac);
              worst = std::max(worst, std::abs(got - expected));
            }
          }
        }
      }
    }
  }
  return worst;
}

BlockProjection block_structure(const Eigen::MatrixXcd& h, const SchurTransform& st) {
  if (h.rows() != st.dimension()) throw DimensionError("block_structure: size mismatch");
  const Eigen::MatrixXcd m = st.u.cast<Complex>() * h * st.u.transpose().cast<Complex>();

  // Sector, path and magnetic index of each row.
  struct Pos {
    int sector, path, a;
  };
  std::vector<Pos> pos(static_cast<std::size_t>(st.dimension()));
  BlockProjection out;
  for (std::size_t s = 0; s < st.sectors.size(); ++s) {
    const auto& sec = st.sectors[s];
    for (int p = 0; p < sec.d; ++p) {
      for (int a = 0; a < sec.m; ++a) {
        pos[static_cast<std::size_t>(sec.offset + p * sec.m + a)] = {static_cast<int>(s), p, a};
      }
    }
    out.blocks.push_back({sec.mu, sec.d, sec.m, m.block(sec.offset, sec.offset, sec.m, sec.m)});
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const auto& pr = pos[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& pc = pos[static_cast<std::size_t>(c)];
      Complex expected = 0;
      if (pr.sector == pc.sector && pr.path == pc.path) {
        expected = out.blocks[static_cast<std::size_t>(pr.sector)].a(pr.a, pc.a);
      }
      out.off_pattern = std::max(out.off_pattern, std::abs(m(r, c) - expected));
    }
  }
  return out;
}

std::vector<BlockProjection::Block> block_project(const SymOpVector& op,
                                                  const SchurTransform& st) {
  if (op.n() != st.n) throw DimensionError("block_project: n mismatch");
  auto proj = block_structure(operator_matrix(op), st);
  if (proj.off_pattern >= kBlockTol) {
    throw StructureViolation("operator is not block structured (off-pattern " +
                             std::to_string(proj.off_pattern) + ")");
  }
  return std::move(proj.blocks);
}

SectorScalars sector_scalars(const SymOpVector& op, const SchurTransform& st) {
  SectorScalars out;
  for (const auto& b : block_project(op, st)) {
    const Eigen::VectorXd diag = b.a.diagonal().real();
    const double e = diag.mean();
    out.e.emplace_back(b.mu, e);
    out.max_variance = std::max(out.max_variance, (diag.array() - e).square().mean());
    Eigen::MatrixXcd off = b.a;
    off.diagonal().setZero();
    if (off.size() > 0) out.max_offdiag = std::max(out.max_offdiag, off.cwiseAbs().maxCoeff());
  }
  return out;
}

SubspaceCertificate certify_subspace_control(const LieBasis& basis, const SchurTransform& st) {
  if (basis.n() != st.n) throw DimensionError("certify_subspace_control: n mismatch");
  if (st.n > kSubspaceMaxN) {
    throw ResourceError("subspace certificate refuses n=" + std::to_string(st.n));
  }
  SubspaceCertificate cert;
  cert.n = st.n;
  cert.closure_dim = basis.dim();
  const std::size_t ns = st.sectors.size();
  std::vector<std::vector<Eigen::VectorXd>> spans(ns);
  std::vector<Eigen::VectorXd> traces;
  for (const auto& row : basis.rows()) {
    const auto proj = block_structure(operator_matrix(row), st);
    cert.max_off_pattern = std::max(cert.max_off_pattern, proj.off_pattern);
    Eigen::VectorXd tr(static_cast<Eigen::Index>(ns));
    for (std::size_t s = 0; s < ns; ++s) {
      spans[s].push_back(hermitian_coords(proj.blocks[s].a));
      tr[static_cast<Eigen::Index>(s)] = proj.blocks[s].a.trace().real();
    }
    traces.push_back(tr);
  }
  cert.all_sectors = cert.max_off_pattern < kBlockTol;
  int su_total = 0;
  for (std::size_t s = 0; s < ns; ++s) {
    const int m = st.sectors[s].m;
    SectorVerdict v{st.sectors[s].mu, m, 0, m * m - 1, false};
    v.span_dim = numeric_rank(spans[s], m * m);
    auto with_su = spans[s];
    for (auto& b : su_basis(m)) with_su.push_back(std::move(b));
    v.contains_su = numeric_rank(with_su, m * m) == v.span_dim;
    cert.all_sectors = cert.all_sectors && v.contains_su;
    su_total += v.su_dim;
    cert.sectors.push_back(v);
  }
  cert.trace_rank = numeric_rank(traces, static_cast<Eigen::Index>(ns));
  cert.dimension_consistent =
      cert.closure_dim == static_cast<std::size_t>(su_total + cert.trace_rank);
  return cert;
}

void apply_certificate(ClosureReport& report, const SubspaceCertificate& cert) {
  report.subspace_controllable = cert.certified();
  report.subspace_controllable_source = "schur-blocks";
}

nlohmann::json to_json(const SubspaceCertificate& c) {
  nlohmann::json sectors = nlohmann::json::array();
  for (const auto& s : c.sectors) {
    sectors.push_back({{"mu", s.mu},
                       {"m", s.m},
                       {"span_dim", s.span_dim},
                       {"su_dim", s.su_dim},
                       {"contains_su", s.contains_su}});
  }
  return {{"n", c.n},
          {"sectors", sectors},
          {"trace_rank", c.trace_rank},
          {"closure_dim", c.closure_dim},
          {"all_sectors", c.all_sectors},
          {"dimension_consistent", c.dimension_consistent},
          {"max_off_pattern", c.max_off_pattern},
          {"certified", c.certified()}};
}

nlohmann::json transform_to_json(const SchurTransform& st) {
  nlohmann::json sectors = nlohmann::json::array();
  for (const auto& s : st.sectors) {
    sectors.push_back(
        {{"mu", s.mu}, {"d", s.d}, {"m", s.m}, {"offset", s.offset}, {"paths", s.paths}});
  }
  std::vector<double> data;
  data.reserve(static_cast<std::size_t>(st.u.size()));
  for (Eigen::Index r = 0; r < st.u.rows(); ++r) {
    for (Eigen::Index c = 0; c < st.u.cols(); ++c) data.push_back(st.u(r, c));
  }
  return {{"n", st.n},
          {"rows", st.u.rows()},
          {"cols", st.u.cols()},
          {"layout", "row-major; row r is Schur vector r in computational coordinates"},
          {"sectors", sectors},
          {"data", data}};
}

}  // namespace symlie
