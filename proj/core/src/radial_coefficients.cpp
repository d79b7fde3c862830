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

#include "twopoint/radial_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "twopoint/errors.hpp"

namespace twopoint {
namespace {

using cd = std::complex<double>;

template <class T>
struct Coeffs {
  T g00, g01, g11, D, E, F, C, B, A;
};

// Trigonometric (compact) or hyperbolic building blocks.
template <class T>
struct Fns {
  bool hyp;
  T S(T x) const { return hyp ? std::sinh(x) : std::sin(x); }
  T Co(T x) const { return hyp ? std::cosh(x) : std::cos(x); }
  T theta(T r) const { return hyp ? std::atanh(r) : std::atan(r); }
  T w(T r) const { return hyp ? T(1.0) - r * r : T(1.0) + r * r; }
};

template <class T>
Coeffs<T> closed_inverse(bool hyp, T r, T R, double m1, double m2, double al) {
  const Fns<T> fn{hyp};
  const double be = 1.0 - al;
  const T w = fn.w(r), th = fn.theta(r), R2 = R * R, r2 = r * r;
  const double mm = m1 * m2;
  const T ta = al * th, tb = be * th;
  Coeffs<T> c;
  c.g00 = w * w * (m1 + m2) / (4.0 * R2 * mm);
  c.g01 = -(m1 * al - m2 * be) * w / (2.0 * R2 * mm);
  c.g11 = (m1 * al * al + m2 * be * be) / (R2 * mm);
  const T P = w / (mm * R2 * r2);
  c.D = P * (m1 * fn.S(ta) * fn.S(ta) + m2 * fn.S(tb) * fn.S(tb));
  c.F = P * (m1 * fn.Co(ta) * fn.Co(ta) + m2 * fn.Co(tb) * fn.Co(tb));
  c.E = 0.5 * P * (m1 * fn.S(2.0 * ta) - m2 * fn.S(2.0 * tb));
  const T Q = w * w / (4.0 * mm * R2 * r2);
  const T s2a = fn.S(2.0 * ta), s2b = fn.S(2.0 * tb);
  const T c2a = fn.Co(2.0 * ta), c2b = fn.Co(2.0 * tb);
  c.C = Q * (m1 * s2a * s2a + m2 * s2b * s2b);
  c.A = Q * (m1 * c2a * c2a + m2 * c2b * c2b);
  c.B = 0.5 * Q * (m1 * fn.S(4.0 * ta) - m2 * fn.S(4.0 * tb));
  return c;
}

InverseCoeffs to_real(const Coeffs<double>& c) {
  return {c.g00, c.g01, c.g11, c.D, c.E, c.F, c.C, c.B, c.A};
}

void check_r(const SpaceSpec& space, const TwoBodyParams& params, double r) {
  params.validate();
  require_in_interval(space, r);
}

}  // namespace

void TwoBodyParams::validate() const {
  if (!(m1 > 0.0) || !(m2 > 0.0)) throw InvalidArgument("masses must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1)");
  }
}

GammaBlocks gamma_blocks(const SpaceSpec& space, const TwoBodyParams& params,
                         double r) {
  check_r(space, params, r);
  const Fns<double> fn{!space.compact};
  const double m1 = params.m1, m2 = params.m2;
  const double al = params.alpha, be = params.beta();
  const double R2 = space.R * space.R;
  const double w = fn.w(r), th = fn.theta(r);
  const double ta = al * th, tb = be * th;
  GammaBlocks g;
  g.a = 4.0 * R2 * (al * al * m1 + be * be * m2) / (w * w);
  g.b = 2.0 * R2 * (m1 * al - m2 * be) / w;
  g.c = (m1 + m2) * R2;
  g.d = R2 * (m1 * std::pow(fn.Co(ta), 2) + m2 * std::pow(fn.Co(tb), 2));
  g.h = R2 * (-m1 * fn.S(ta) * fn.Co(ta) + m2 * fn.S(tb) * fn.Co(tb));
  g.f = R2 * (m1 * std::pow(fn.S(ta), 2) + m2 * std::pow(fn.S(tb), 2));
  g.u = R2 * (m1 * std::pow(fn.Co(2 * ta), 2) + m2 * std::pow(fn.Co(2 * tb), 2));
  g.w = R2 * (-m1 * fn.S(2 * ta) * fn.Co(2 * ta) + m2 * fn.S(2 * tb) * fn.Co(2 * tb));
  g.v = R2 * (m1 * std::pow(fn.S(2 * ta), 2) + m2 * std::pow(fn.S(2 * tb), 2));
  return g;
}

Eigen::MatrixXd assemble_gamma(const SpaceSpec& space, const GammaBlocks& g) {
  const int n = 2 + 2 * space.q1 + 2 * space.q2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  auto put = [&](int k, double x, double y, double z) {
    m(k, k) = x;
    m(k, k + 1) = m(k + 1, k) = y;
    m(k + 1, k + 1) = z;
  };
  put(0, g.a, g.b, g.c);
  int k = 2;
  for (int i = 0; i < space.q1; ++i, k += 2) put(k, g.d, g.h, g.f);
  for (int j = 0; j < space.q2; ++j, k += 2) put(k, g.u, g.w, g.v);
  return m;
}

double gamma_det_closed(const SpaceSpec& space, const TwoBodyParams& params,
                        double r) {
  check_r(space, params, r);
  const int q1 = space.q1, q2 = space.q2;
  const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
  const double R4mm = std::pow(space.R, 4) * params.m1 * params.m2;
  // Logs keep the large-q (Cayley) powers in range.
  const double log_det = (1 + q2) * std::log(4.0) + (1 + q1 + q2) * std::log(R4mm) +
                         2.0 * (q1 + q2) * std::log(r) -
                         (2 + q1 + 2 * q2) * std::log(w);
  return std::exp(log_det);
}

InverseCoeffs inverse_coeffs(const SpaceSpec& space, const TwoBodyParams& params,
                             double r) {
  check_r(space, params, r);
  const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
  const double R4mm = std::pow(space.R, 4) * params.m1 * params.m2;
  const double top = 4.0 * R4mm / (w * w);
  const double lam = R4mm * r * r / w;
  const double two = 4.0 * R4mm * r * r / (w * w);
  if (top < 1e-300 || (space.q1 > 0 && lam < 1e-300) ||
      (space.q2 > 0 && two < 1e-300)) {
    throw DegenerateBlock("metric block determinant underflows at r=" +
                          std::to_string(r));
  }
  return to_real(closed_inverse<double>(!space.compact, r, space.R, params.m1,
                                        params.m2, params.alpha));
}

double measure_density(const SpaceSpec& space, double r) {
  require_in_interval(space, r);
  const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
  const int q = space.q1 + space.q2;
  return std::pow(r, q) / std::pow(w, 1.0 + 0.5 * space.q1 + space.q2);
}

RadialOperator radial_operator(const SpaceSpec& space,
                               const TwoBodyParams& params, double r) {
  check_r(space, params, r);
  const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
  const double dw = space.compact ? 2.0 * r : -2.0 * r;
  const double mu = params.reduced_mass();
  RadialOperator op;
  op.A2 = -w * w / (8.0 * mu * space.R * space.R);
  const double k = 0.5 * space.q1 + space.q2 - 1.0;
  op.A1 = op.A2 * ((space.q1 + space.q2) / r - k * dw / w);
  return op;
}

double ContinuationImage::max_imag() const {
  return std::max({std::abs(imag.g00), std::abs(imag.g01), std::abs(imag.g11),
                   std::abs(imag.D), std::abs(imag.E), std::abs(imag.F),
                   std::abs(imag.C), std::abs(imag.B), std::abs(imag.A)});
}

ContinuationImage continuation_image(const SpaceSpec& compact_space,
                                     const TwoBodyParams& params, double r) {
  if (!compact_space.compact) {
    throw InvalidArgument("continuation starts from a compact space");
  }
  params.validate();
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("r must lie in (0, 1)");
  const cd I(0.0, 1.0);
  auto c = closed_inverse<cd>(false, I * r, I * compact_space.R, params.m1,
                              params.m2, params.alpha);
  // Each p-type direction (d/dr, L, X) picks up -i; F and A pair only
  // k-type directions.
  const cd pp = -1.0, px = -I;
  c.g00 *= pp;
  c.g01 *= pp;
  c.g11 *= pp;
  c.D *= pp;
  c.C *= pp;
  c.E *= px;
  c.B *= px;
  ContinuationImage out;
  out.real = {c.g00.real(), c.g01.real(), c.g11.real(), c.D.real(), c.E.real(),
              c.F.real(),   c.C.real(),   c.B.real(),   c.A.real()};
  out.imag = {c.g00.imag(), c.g01.imag(), c.g11.imag(), c.D.imag(), c.E.imag(),
              c.F.imag(),   c.C.imag(),   c.B.imag(),   c.A.imag()};
  return out;
}

CoeffDerivatives coeff_derivatives(const SpaceSpec& space,
                                   const TwoBodyParams& params, double r) {
  const InverseCoeffs c = inverse_coeffs(space, params, r);
  const bool hyp = !space.compact;
  const Fns<double> fn{hyp};
  const double m1 = params.m1, m2 = params.m2;
  const double al = params.alpha, be = params.beta();
  const double w = fn.w(r), th = fn.theta(r);
  const double dw = hyp ? -2.0 * r : 2.0 * r;
  const double dth = 1.0 / w;
  const double mm = m1 * m2, R2 = space.R * space.R;
  const double ta = al * th, tb = be * th;
  // d/dx cos^2 x = -sin 2x, d/dx cosh^2 x = +sinh 2x.
  const double sc = hyp ? 1.0 : -1.0;

  CoeffDerivatives out;
  auto& d = out.d;
  d.g00 = c.g00 * 2.0 * dw / w;
  d.g01 = c.g01 * dw / w;
  d.g11 = 0.0;

  const double P = w / (mm * R2 * r * r);
  const double dP = P * (dw / w - 2.0 / r);
  const double sD = m1 * std::pow(fn.S(ta), 2) + m2 * std::pow(fn.S(tb), 2);
  const double sF = m1 * std::pow(fn.Co(ta), 2) + m2 * std::pow(fn.Co(tb), 2);
  const double sE = m1 * fn.S(2 * ta) - m2 * fn.S(2 * tb);
  d.D = dP * sD + P * dth * (m1 * al * fn.S(2 * ta) + m2 * be * fn.S(2 * tb));
  d.F = dP * sF + P * dth * sc * (m1 * al * fn.S(2 * ta) + m2 * be * fn.S(2 * tb));
  d.E = 0.5 * dP * sE +
        0.5 * P * dth * 2.0 * (m1 * al * fn.Co(2 * ta) - m2 * be * fn.Co(2 * tb));

  const double Q = w * w / (4.0 * mm * R2 * r * r);
  const double dQ = Q * (2.0 * dw / w - 2.0 / r);
  const double sC = m1 * std::pow(fn.S(2 * ta), 2) + m2 * std::pow(fn.S(2 * tb), 2);
  const double sA = m1 * std::pow(fn.Co(2 * ta), 2) + m2 * std::pow(fn.Co(2 * tb), 2);
  const double sB = m1 * fn.S(4 * ta) - m2 * fn.S(4 * tb);
  const double s4 = m1 * al * fn.S(4 * ta) + m2 * be * fn.S(4 * tb);
  d.C = dQ * sC + Q * dth * 2.0 * s4;
  d.A = dQ * sA + Q * dth * 2.0 * sc * s4;
  d.B = 0.5 * dQ * sB +
        0.5 * Q * dth * 4.0 * (m1 * al * fn.Co(4 * ta) - m2 * be * fn.Co(4 * tb));

  out.dU = params.potential.derivative(space, r);
  return out;
}

PrintedFormVariants printed_form_variants(const SpaceSpec& space,
                                          const TwoBodyParams& params,
                                          double r) {
  const InverseCoeffs c = inverse_coeffs(space, params, r);
  const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
  const double mm = params.m1 * params.m2, R2 = space.R * space.R;
  const double split = params.m1 * params.alpha - params.m2 * params.beta();
  PrintedFormVariants v;
  v.g01 = c.g01;
  v.g01_variant = 2.0 * w * split / (4.0 * R2 * mm);
  v.cross_term_variant = split * w / (4.0 * mm * R2);
  return v;
}

}  // namespace twopoint
