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

#include <Eigen/Dense>

#include "twopoint/potential.hpp"
#include "twopoint/space_catalog.hpp"

namespace twopoint {

// Masses and the split parameter alpha (beta = 1 - alpha). The points
// s1 = alpha p and s2 = beta p locate the reference point between the
// particles.
struct TwoBodyParams {
  double m1 = 1.0;
  double m2 = 1.0;
  double alpha = 0.5;
  Potential potential;

  double beta() const { return 1.0 - alpha; }
  double reduced_mass() const { return m1 * m2 / (m1 + m2); }
  void validate() const;
};

// Entries of the metric on (d/dr, L, X_lambda, Y_lambda, X_2lambda,
// Y_2lambda); every entry carries mass * length^2.
struct GammaBlocks {
  double a = 0, b = 0, c = 0;  // (r, L)
  double d = 0, h = 0, f = 0;  // lambda pair
  double u = 0, w = 0, v = 0;  // 2 lambda pair

  double top_det() const { return a * c - b * b; }
  double lambda_det() const { return d * f - h * h; }
  double two_lambda_det() const { return u * v - w * w; }
};

GammaBlocks gamma_blocks(const SpaceSpec& space, const TwoBodyParams& params,
                         double r);

// Full (2 + 2 q1 + 2 q2)-square block-diagonal metric.
Eigen::MatrixXd assemble_gamma(const SpaceSpec& space, const GammaBlocks& g);

double gamma_det_closed(const SpaceSpec& space, const TwoBodyParams& params,
                        double r);

// Inverse of the metric: top block (g00, g01, g11), lambda block
// [[D, E], [E, F]], 2 lambda block [[C, B], [B, A]].
struct InverseCoeffs {
  double g00 = 0, g01 = 0, g11 = 0;
  double D = 0, E = 0, F = 0;
  double C = 0, B = 0, A = 0;
};

InverseCoeffs inverse_coeffs(const SpaceSpec& space, const TwoBodyParams& params,
                             double r);

// Density of the invariant radial measure: r^q / w^(1 + q1/2 + q2) with
// q = q1 + q2 and w = 1 +- r^2.
double measure_density(const SpaceSpec& space, double r);

// Radial part of the quantum Hamiltonian as A2 d^2/dr^2 + A1 d/dr, with
// m the reduced mass.
struct RadialOperator {
  double A2 = 0.0;
  double A1 = 0.0;
};

RadialOperator radial_operator(const SpaceSpec& space,
                               const TwoBodyParams& params, double r);

struct ContinuationImage {
  InverseCoeffs real;
  InverseCoeffs imag;
  double max_imag() const;
};

// Compact closed forms evaluated at r -> i r, R -> i R with the p-type
// directions rescaled by -i. `compact_space` must be compact; r in (0, 1).
ContinuationImage continuation_image(const SpaceSpec& compact_space,
                                     const TwoBodyParams& params, double r);

struct CoeffDerivatives {
  InverseCoeffs d;  // d/dr of every inverse coefficient
  double dU = 0.0;
};

CoeffDerivatives coeff_derivatives(const SpaceSpec& space,
                                   const TwoBodyParams& params, double r);

// Alternative printed forms of two coefficients, compared with the values
// obtained by inverting the metric.
struct PrintedFormVariants {
  double g01 = 0.0;
  double g01_variant = 0.0;         // opposite-sign off-diagonal entry
  double cross_term_variant = 0.0;  // classical p_r p_L coefficient
  double g01_ratio() const { return g01_variant / g01; }
  double cross_term_ratio() const { return cross_term_variant / g01; }
};

PrintedFormVariants printed_form_variants(const SpaceSpec& space,
                                          const TwoBodyParams& params, double r);

}  // namespace twopoint
