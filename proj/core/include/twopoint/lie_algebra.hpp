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

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twopoint/space_catalog.hpp"

namespace twopoint {

using CMatrix = Eigen::MatrixXcd;

// Dense tensor c(a, b, k): coordinate k of [B_a, B_b] in a fixed basis.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim)
      : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int a, int b, int k) { return data_[index(a, b, k)]; }
  double operator()(int a, int b, int k) const { return data_[index(a, b, k)]; }

  // ad_X as a matrix: column b holds the coordinates of [X, B_b].
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

 private:
  std::size_t index(int a, int b, int k) const {
    return (static_cast<std::size_t>(a) * dim_ + b) * dim_ + k;
  }
  int dim_ = 0;
  std::vector<double> data_;
};

struct MatrixAlgebra {
  Family family = Family::Sphere;
  int ambient_dim = 0;
  std::vector<CMatrix> basis;
  // true when the element lies in p (moves the base point).
  std::vector<bool> in_p;
  StructureConstants structure;
  // Tr(ad_X ad_Y) over the basis.
  Eigen::MatrixXd killing;
  // Scale with kappa * K(Lambda, Lambda) = R^2 for the normalized Lambda.
  double kappa = 0.0;
  double closure_residual = 0.0;
  double symmetric_pair_residual = 0.0;

  int dim() const { return static_cast<int>(basis.size()); }
  int k_dim() const;
};

enum class Subspace { A, PLambda, KLambda, P2Lambda, K2Lambda, K0 };

const char* subspace_name(Subspace s);

/// Adapted frame with ordered basis
///   Lambda, e_lambda[q1], f_lambda[q1], e_2lambda[q2], f_2lambda[q2], k0[..]
/// together with its scaled inner product and structure constants.
///
/// `structure` holds the snapped constants used by the dynamics;
/// `structure_raw` keeps the unsnapped least-squares values.
struct AdaptedBasis {
  SpaceSpec space;
  int q1 = 0;
  int q2 = 0;
  int k0_dim = 0;
  double kappa = 0.0;
  std::vector<CMatrix> elements;
  Eigen::MatrixXd gram;
  StructureConstants structure;
  StructureConstants structure_raw;
  double closure_residual = 0.0;

  int dim() const { return static_cast<int>(elements.size()); }
  // dim m = 1 + 2 q1 + 2 q2; the leading block of the basis.
  int m_dim() const { return 1 + 2 * q1 + 2 * q2; }

  int L() const { return 0; }
  int e_lambda(int i) const { return 1 + i; }
  int f_lambda(int i) const { return 1 + q1 + i; }
  int e_2lambda(int j) const { return 1 + 2 * q1 + j; }
  int f_2lambda(int j) const { return 1 + 2 * q1 + q2 + j; }
  int k0(int k) const { return m_dim() + k; }

  Subspace subspace_of(int index) const;
  // Expected diagonal of the Gram table: R^2 on p-type, +-R^2 on k-type.
  double expected_norm(int index) const;
  std::vector<std::string> component_names() const;
};

MatrixAlgebra realize_algebra(const SpaceSpec& space);
AdaptedBasis build_adapted_basis(const SpaceSpec& space,
                                 const MatrixAlgebra& algebra);
AdaptedBasis build_adapted_basis(const SpaceSpec& space);

struct ResidualCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed() const { return residual < tolerance; }
};

struct RelationReport {
  std::vector<ResidualCheck> checks;
  bool passed() const;
  const ResidualCheck* find(const std::string& name) const;
};

RelationReport verify_adapted_relations(const AdaptedBasis& basis);

// Least-squares coordinates of m in the span of `elements`; residual in
// Frobenius norm is written to *residual when non-null.
Eigen::VectorXd expand_in_basis(const std::vector<CMatrix>& elements,
                                const CMatrix& m, double* residual = nullptr);

double operator_norm(const CMatrix& m);

}  // namespace twopoint
