// Copyright 2026 The pathspec Authors
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

#ifndef PATHSPEC_FIT_HPP
#define PATHSPEC_FIT_HPP

#include <span>

#include "point.hpp"

namespace pathspec::fit {

/// Best fit of A x^2 + B y^2 = 1 to a point cloud.
struct EllipseFit {
  double coeff_a = 0.0;  // Ã
  double coeff_b = 0.0;  // B̃
  double a_tilde = 0.0;  // semi-axis along the real direction, 1/sqrt(Ã)
  double b_tilde = 0.0;  // semi-axis along the imaginary direction, 1/sqrt(B̃)
  double rmse = 0.0;
  double eccentricity = 0.0;
};

/// Reference ellipse x^2/lambda^2 + y^2/kappa^2 = 1.
struct EllipseSpec {
  double lambda_axis = 0.0;
  double kappa_axis = 0.0;

  /// x^2/lambda^2 + y^2/kappa^2; <= 1 inside.
  double form(const Point& p) const {
    return p.re * p.re / (lambda_axis * lambda_axis) + p.im * p.im / (kappa_axis * kappa_axis);
  }
};

/// The E(sqrt 5, 1) reference.
EllipseSpec reference_ellipse();

/// Relative determinant below which the 2x2 normal matrix counts as singular.
inline constexpr double kSingularThreshold = 1e-12;

/// Linear least squares over the squared coordinates via the 2x2 normal
/// equations. Throws DegenerateGeometry for a singular normal matrix or a
/// non-positive coefficient (fewer than two points included), InvalidArgument
/// for an empty cloud.
EllipseFit fit_ellipse(std::span<const Point> points);

double rmse(std::span<const Point> points, double a, double b);
double eccentricity(double a, double b);

/// max_k |Mᵀ(M [Ã, B̃]ᵀ - 1)|, divided by max |Mᵀ 1|.
double normal_equation_residual(std::span<const Point> points, double coeff_a, double coeff_b);

}  // namespace pathspec::fit

#endif  // PATHSPEC_FIT_HPP
