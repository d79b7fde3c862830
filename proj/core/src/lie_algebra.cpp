// Copyright 2026 The twopoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twopoint/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "twopoint/errors.hpp"

namespace twopoint {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using cd = std::complex<double>;

constexpr double kSnap = 1e-10;
constexpr double kKernelThreshold = 1e-8;

CMatrix unit(int n, int i, int j) {
  CMatrix m = CMatrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

CMatrix bracket(const CMatrix& x, const CMatrix& y) { return x * y - y * x; }

// Real-flattens matrices into columns and keeps one QR for repeated solves.
class Expander {
 public:
  explicit Expander(const std::vector<CMatrix>& elements) {
    const int n = static_cast<int>(elements.front().rows());
    MatrixXd a(2 * n * n, static_cast<int>(elements.size()));
    for (std::size_t k = 0; k < elements.size(); ++k) {
      a.col(static_cast<int>(k)) = flatten(elements[k]);
    }
    a_ = a;
    qr_.compute(a);
    if (qr_.rank() != a.cols()) {
      throw EigenstructureMismatch("basis matrices are linearly dependent");
    }
  }

  VectorXd solve(const CMatrix& m, double* residual) const {
    const VectorXd v = flatten(m);
    VectorXd c = qr_.solve(v);
    if (residual != nullptr) *residual = (a_ * c - v).norm();
    return c;
  }

  static VectorXd flatten(const CMatrix& m) {
    const int n = static_cast<int>(m.rows());
    VectorXd v(2 * n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        v(i * n + j) = m(i, j).real();
        v(n * n + i * n + j) = m(i, j).imag();
      }
    }
    return v;
  }

 private:
  MatrixXd a_;
  Eigen::ColPivHouseholderQR<MatrixXd> qr_;
};

StructureConstants expand_brackets(const std::vector<CMatrix>& elements,
                                   double* max_residual) {
  const int d = static_cast<int>(elements.size());
  Expander ex(elements);
  StructureConstants c(d);
  double worst = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      double res = 0.0;
      const VectorXd coords = ex.solve(bracket(elements[a], elements[b]), &res);
      worst = std::max(worst, res);
      for (int k = 0; k < d; ++k) c(a, b, k) = coords(k);
    }
  }
  if (max_residual != nullptr) *max_residual = worst;
  return c;
}

double snap(double x) {
  for (double target : {0.0, 0.5, -0.5, 1.0, -1.0}) {
    if (std::abs(x - target) < kSnap) return target;
  }
  return x;
}

MatrixXd killing_table(const StructureConstants& c) {
  const int d = c.dim();
  MatrixXd k = MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      double t = 0.0;
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) t += c(i, p, q) * c(j, q, p);
      }
      k(i, j) = k(j, i) = t;
    }
  }
  return k;
}

// Reduced row echelon form of the rows of m; gives a canonical basis of
// the row space regardless of how the kernel solver ordered its output.
MatrixXd rref(MatrixXd m) {
  int lead = 0;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  for (int r = 0; r < rows && lead < cols; ++lead) {
    int best = r;
    for (int i = r + 1; i < rows; ++i) {
      if (std::abs(m(i, lead)) > std::abs(m(best, lead))) best = i;
    }
    if (std::abs(m(best, lead)) < kKernelThreshold) continue;
    m.row(r).swap(m.row(best));
    m.row(r) /= m(r, lead);
    for (int i = 0; i < rows; ++i) {
      if (i != r) m.row(i) -= m(i, lead) * m.row(r);
    }
    ++r;
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (std::abs(m(i, j)) < 1e-13) m(i, j) = 0.0;
    }
  }
  return m;
}

// Kernel of (op - value) restricted to the coordinates in `idx`; returned
// as columns over the full basis.
std::vector<VectorXd> eigenspace(const MatrixXd& op, const std::vector<int>& idx,
                                 double value) {
  const int k = static_cast<int>(idx.size());
  MatrixXd sub(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) sub(i, j) = op(idx[i], idx[j]);
  }
  sub -= value * MatrixXd::Identity(k, k);
  Eigen::FullPivLU<MatrixXd> lu(sub);
  lu.setThreshold(kKernelThreshold);
  const MatrixXd ker = lu.kernel();
  std::vector<VectorXd> out;
  if (lu.dimensionOfKernel() == 0) return out;
  const MatrixXd canon = rref(ker.transpose());
  for (int r = 0; r < canon.rows(); ++r) {
    VectorXd v = VectorXd::Zero(op.rows());
    for (int i = 0; i < k; ++i) v(idx[i]) = canon(r, i);
    out.push_back(v);
  }
  return out;
}

CMatrix combine(const std::vector<CMatrix>& basis, const VectorXd& coords) {
  CMatrix m = CMatrix::Zero(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coords(static_cast<int>(i)) != 0.0) m += coords(static_cast<int>(i)) * basis[i];
  }
  return m;
}

void append_so(int N, bool hyperbolic, std::vector<CMatrix>& B,
               std::vector<bool>& P) {
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      if (hyperbolic && i == 0) {
        B.push_back(unit(N, i, j) + unit(N, j, i));
      } else {
        B.push_back(unit(N, j, i) - unit(N, i, j));
      }
      P.push_back(i == 0);
    }
  }
}

void append_su(int N, bool hyperbolic, std::vector<CMatrix>& B,
               std::vector<bool>& P) {
  const cd I(0.0, 1.0);
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      if (hyperbolic && i == 0) {
        B.push_back(unit(N, i, j) + unit(N, j, i));
        B.push_back(I * (unit(N, i, j) - unit(N, j, i)));
      } else {
        B.push_back(unit(N, j, i) - unit(N, i, j));
        B.push_back(I * (unit(N, i, j) + unit(N, j, i)));
      }
      P.push_back(i == 0);
      P.push_back(i == 0);
    }
  }
  for (int i = 0; i + 1 < N; ++i) {
    B.push_back(I * (unit(N, i, i) - unit(N, i + 1, i + 1)));
    P.push_back(false);
  }
}

}  // namespace

Eigen::MatrixXd StructureConstants::ad(const Eigen::VectorXd& x) const {
  MatrixXd m = MatrixXd::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x(a) == 0.0) continue;
    for (int b = 0; b < dim_; ++b) {
      for (int k = 0; k < dim_; ++k) m(k, b) += x(a) * (*this)(a, b, k);
    }
  }
  return m;
}

int MatrixAlgebra::k_dim() const {
  return static_cast<int>(std::count(in_p.begin(), in_p.end(), false));
}

const char* subspace_name(Subspace s) {
  switch (s) {
    case Subspace::A: return "a";
    case Subspace::PLambda: return "p_lambda";
    case Subspace::KLambda: return "k_lambda";
    case Subspace::P2Lambda: return "p_2lambda";
    case Subspace::K2Lambda: return "k_2lambda";
    case Subspace::K0: return "k0";
  }
  return "?";
}

Subspace AdaptedBasis::subspace_of(int index) const {
  if (index == 0) return Subspace::A;
  if (index < 1 + q1) return Subspace::PLambda;
  if (index < 1 + 2 * q1) return Subspace::KLambda;
  if (index < 1 + 2 * q1 + q2) return Subspace::P2Lambda;
  if (index < m_dim()) return Subspace::K2Lambda;
  return Subspace::K0;
}

double AdaptedBasis::expected_norm(int index) const {
  const double r2 = space.R * space.R;
  switch (subspace_of(index)) {
    case Subspace::A:
    case Subspace::PLambda:
    case Subspace::P2Lambda:
      return r2;
    default:
      // The Killing form is indefinite on noncompact algebras: k is the
      // negative part once p is scaled positive.
      return space.compact ? r2 : -r2;
  }
}

std::vector<std::string> AdaptedBasis::component_names() const {
  std::vector<std::string> names{"p_L"};
  for (int i = 1; i <= q1; ++i) names.push_back("p_x_lambda_" + std::to_string(i));
  for (int i = 1; i <= q1; ++i) names.push_back("p_y_lambda_" + std::to_string(i));
  for (int j = 1; j <= q2; ++j) names.push_back("p_x_2lambda_" + std::to_string(j));
  for (int j = 1; j <= q2; ++j) names.push_back("p_y_2lambda_" + std::to_string(j));
  for (int k = 1; k <= k0_dim; ++k) names.push_back("p_k0_" + std::to_string(k));
  return names;
}

Eigen::VectorXd expand_in_basis(const std::vector<CMatrix>& elements,
                                const CMatrix& m, double* residual) {
  return Expander(elements).solve(m, residual);
}

double operator_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

MatrixAlgebra realize_algebra(const SpaceSpec& space) {
  MatrixAlgebra alg;
  alg.family = space.family;
  const int N = space.n + 1;
  alg.ambient_dim = N;
  switch (space.family) {
    case Family::Sphere:
    case Family::RealProjective:
      append_so(N, false, alg.basis, alg.in_p);
      break;
    case Family::RealHyperbolic:
      append_so(N, true, alg.basis, alg.in_p);
      break;
    case Family::ComplexProjective:
      append_su(N, false, alg.basis, alg.in_p);
      break;
    case Family::ComplexHyperbolic:
      append_su(N, true, alg.basis, alg.in_p);
      break;
    default:
      throw UnrealizableFamily("no matrix model for " +
                               std::string(family_name(space.family)));
  }
  alg.structure = expand_brackets(alg.basis, &alg.closure_residual);
  alg.killing = killing_table(alg.structure);

  const int d = alg.dim();
  double worst = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        // [p,p] in k, [k,k] in k, [p,k] in p.
        const bool target_p = alg.in_p[a] != alg.in_p[b];
        if (alg.in_p[k] != target_p) {
          worst = std::max(worst, std::abs(alg.structure(a, b, k)));
        }
      }
    }
  }
  alg.symmetric_pair_residual = worst;

  const int i0 = static_cast<int>(
      std::find(alg.in_p.begin(), alg.in_p.end(), true) - alg.in_p.begin());
  VectorXd lam = VectorXd::Unit(d, i0);
  const MatrixXd ad = alg.structure.ad(lam);
  const auto ev = Eigen::EigenSolver<MatrixXd>(ad * ad).eigenvalues();
  double top = 0.0;
  for (int i = 0; i < ev.size(); ++i) top = std::max(top, std::abs(ev(i)));
  lam /= std::sqrt(top);
  alg.kappa = space.R * space.R / lam.dot(alg.killing * lam);
  return alg;
}

AdaptedBasis build_adapted_basis(const SpaceSpec& space) {
  return build_adapted_basis(space, realize_algebra(space));
}

AdaptedBasis build_adapted_basis(const SpaceSpec& space,
                                 const MatrixAlgebra& alg) {
  const int d = alg.dim();
  const double sigma = space.compact ? -1.0 : 1.0;
  const auto& c = alg.structure;

  std::vector<int> ip, ik;
  for (int i = 0; i < d; ++i) (alg.in_p[i] ? ip : ik).push_back(i);

  VectorXd lam = VectorXd::Unit(d, ip.front());
  {
    const MatrixXd ad = c.ad(lam);
    const auto ev = Eigen::EigenSolver<MatrixXd>(ad * ad).eigenvalues();
    double top = 0.0;
    for (int i = 0; i < ev.size(); ++i) top = std::max(top, std::abs(ev(i)));
    lam /= std::sqrt(top);
  }
  const double kappa = space.R * space.R / lam.dot(alg.killing * lam);
  auto inner = [&](const VectorXd& x, const VectorXd& y) {
    return kappa * x.dot(alg.killing * y);
  };

  const MatrixXd adL = c.ad(lam);
  const MatrixXd ad2 = adL * adL;

  auto p1 = eigenspace(ad2, ip, sigma * 0.25);
  auto p2 = eigenspace(ad2, ip, sigma);
  auto pa = eigenspace(ad2, ip, 0.0);
  auto k0 = eigenspace(ad2, ik, 0.0);
  auto k1 = eigenspace(ad2, ik, sigma * 0.25);
  auto k2 = eigenspace(ad2, ik, sigma);

  const int q1 = space.q1, q2 = space.q2;
  const int k0_dim = d - 1 - 2 * q1 - 2 * q2;
  if (static_cast<int>(p1.size()) != q1 || static_cast<int>(k1.size()) != q1 ||
      static_cast<int>(p2.size()) != q2 || static_cast<int>(k2.size()) != q2 ||
      pa.size() != 1 || static_cast<int>(k0.size()) != k0_dim) {
    throw EigenstructureMismatch(
        "eigenspace dimensions (" + std::to_string(pa.size()) + "," +
        std::to_string(p1.size()) + "," + std::to_string(p2.size()) + "," +
        std::to_string(k0.size()) + ") disagree with the multiplicity table");
  }

  auto gram_schmidt = [&](std::vector<VectorXd> vs) {
    std::vector<VectorXd> out;
    for (VectorXd v : vs) {
      for (const auto& u : out) v -= inner(v, u) / inner(u, u) * u;
      v *= space.R / std::sqrt(std::abs(inner(v, v)));
      out.push_back(v);
    }
    return out;
  };
  const auto e1 = gram_schmidt(p1);
  const auto e2 = gram_schmidt(p2);
  const auto kk = gram_schmidt(k0);

  std::vector<VectorXd> coords{lam};
  for (const auto& e : e1) coords.push_back(e);
  for (const auto& e : e1) coords.push_back(2.0 * sigma * (adL * e));
  for (const auto& e : e2) coords.push_back(e);
  for (const auto& e : e2) coords.push_back(sigma * (adL * e));
  for (const auto& k : kk) coords.push_back(k);

  AdaptedBasis basis;
  basis.space = space;
  basis.q1 = q1;
  basis.q2 = q2;
  basis.k0_dim = k0_dim;
  basis.kappa = kappa;
  basis.gram.resize(d, d);
  for (int a = 0; a < d; ++a) {
    basis.elements.push_back(combine(alg.basis, coords[a]));
    for (int b = 0; b < d; ++b) basis.gram(a, b) = inner(coords[a], coords[b]);
  }
  basis.structure_raw = expand_brackets(basis.elements, &basis.closure_residual);
  basis.structure = StructureConstants(d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        basis.structure(a, b, k) = snap(basis.structure_raw(a, b, k));
      }
    }
  }
  return basis;
}

bool RelationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ResidualCheck& c) { return c.passed(); });
}

const ResidualCheck* RelationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// Targets allowed for [X, Y] by the root-space inclusions.
std::vector<Subspace> allowed_targets(Subspace x, Subspace y) {
  using S = Subspace;
  auto key = [](S s) { return static_cast<int>(s); };
  if (key(x) > key(y)) std::swap(x, y);
  if (x == S::A) {
    switch (y) {
      case S::A: case S::K0: return {};
      case S::PLambda: return {S::KLambda};
      case S::KLambda: return {S::PLambda};
      case S::P2Lambda: return {S::K2Lambda};
      case S::K2Lambda: return {S::P2Lambda};
    }
  }
  if (y == S::K0) return {x};
  if (x == S::PLambda) {
    switch (y) {
      case S::PLambda: return {S::K2Lambda, S::K0};
      case S::KLambda: return {S::P2Lambda, S::A};
      case S::P2Lambda: return {S::KLambda};
      case S::K2Lambda: return {S::PLambda};
      default: break;
    }
  }
  if (x == S::KLambda) {
    switch (y) {
      case S::KLambda: return {S::K2Lambda, S::K0};
      case S::P2Lambda: return {S::PLambda};
      case S::K2Lambda: return {S::KLambda};
      default: break;
    }
  }
  if (x == S::P2Lambda) {
    if (y == S::P2Lambda) return {S::K0};
    if (y == S::K2Lambda) return {S::A};
  }
  if (x == S::K2Lambda && y == S::K2Lambda) return {S::K0};
  return {};
}

}  // namespace

RelationReport verify_adapted_relations(const AdaptedBasis& basis) {
  constexpr double kTol = 1e-12;
  RelationReport report;
  const int d = basis.dim();
  const auto& E = basis.elements;
  const double sigma = basis.space.compact ? -1.0 : 1.0;
  const double r2 = basis.space.R * basis.space.R;

  // Normalized commutation relations. The sign of [Lambda, e] follows the
  // signature: -1/2 f (compact) and +1/2 f (noncompact).
  double comm = 0.0;
  auto rel = [&](int a, int b, double coef, int k) {
    comm = std::max(comm, operator_norm(bracket(E[a], E[b]) - coef * E[k]));
  };
  for (int i = 0; i < basis.q1; ++i) {
    const int e = basis.e_lambda(i), f = basis.f_lambda(i);
    rel(0, e, 0.5 * sigma, f);
    rel(0, f, 0.5, e);
    rel(e, f, -0.5, 0);
  }
  for (int j = 0; j < basis.q2; ++j) {
    const int e = basis.e_2lambda(j), f = basis.f_2lambda(j);
    rel(0, e, sigma, f);
    rel(0, f, 1.0, e);
    rel(e, f, -1.0, 0);
  }
  report.checks.push_back({"commutation", comm, kTol});

  double incl = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const auto allowed =
          allowed_targets(basis.subspace_of(a), basis.subspace_of(b));
      CMatrix m = bracket(E[a], E[b]);
      for (int k = 0; k < d; ++k) {
        if (std::find(allowed.begin(), allowed.end(), basis.subspace_of(k)) !=
            allowed.end()) {
          m -= basis.structure_raw(a, b, k) * E[k];
        }
      }
      incl = std::max(incl, operator_norm(m));
    }
  }
  report.checks.push_back({"inclusions", incl, kTol});

  double orth = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const double want = a == b ? basis.expected_norm(a) : 0.0;
      orth = std::max(orth, std::abs(basis.gram(a, b) - want) / r2);
    }
  }
  report.checks.push_back({"orthogonality_norms", orth, kTol});

  double zc = 0.0;
  for (int a = 0; a < basis.m_dim(); ++a) {
    for (int b = 0; b < basis.m_dim(); ++b) {
      if (a == b) continue;
      zc = std::max({zc, std::abs(basis.structure_raw(a, b, a)),
                     std::abs(basis.structure_raw(a, b, b))});
    }
  }
  report.checks.push_back({"zero_self_coordinates", zc, kTol});

  const auto& c = basis.structure;
  double anti = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        anti = std::max(anti, std::abs(c(a, b, k) + c(b, a, k)));
      }
    }
  }
  report.checks.push_back({"antisymmetry", anti, kTol});

  double jac = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      for (int e = b + 1; e < d; ++e) {
        for (int out = 0; out < d; ++out) {
          double s = 0.0;
          for (int m = 0; m < d; ++m) {
            s += c(a, b, m) * c(m, e, out) + c(b, e, m) * c(m, a, out) +
                 c(e, a, m) * c(m, b, out);
          }
          jac = std::max(jac, std::abs(s));
        }
      }
    }
  }
  report.checks.push_back({"jacobi", jac, kTol});

  double inv = 0.0;
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < d; ++z) {
        double s = 0.0;
        for (int m = 0; m < d; ++m) {
          s += c(x, y, m) * basis.gram(m, z) + c(x, z, m) * basis.gram(y, m);
        }
        inv = std::max(inv, std::abs(s) / r2);
      }
    }
  }
  report.checks.push_back({"ad_invariance", inv, kTol});

  double snapped = 0.0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        snapped = std::max(snapped, std::abs(c(a, b, k) - basis.structure_raw(a, b, k)));
      }
    }
  }
  report.checks.push_back({"snapped_vs_raw", snapped, kSnap});
  report.checks.push_back({"closure", basis.closure_residual, kTol});

  // (ad_Lambda)^2 spectrum against {0 x (1 + dim k0), sigma/4 x 2 q1,
  // sigma x 2 q2}.
  const MatrixXd adL = c.ad(VectorXd::Unit(d, 0));
  const auto ev = Eigen::EigenSolver<MatrixXd>(adL * adL).eigenvalues();
  std::vector<double> got, want;
  double imag = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    got.push_back(ev(i).real());
    imag = std::max(imag, std::abs(ev(i).imag()));
  }
  want.insert(want.end(), 1 + basis.k0_dim, 0.0);
  want.insert(want.end(), 2 * basis.q1, 0.25 * sigma);
  want.insert(want.end(), 2 * basis.q2, sigma);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  double spread = imag;
  for (std::size_t i = 0; i < got.size(); ++i) {
    spread = std::max(spread, std::abs(got[i] - want[i]));
  }
  report.checks.push_back({"spectrum_multiplicities", spread, kTol});
  return report;
}

}  // namespace twopoint
