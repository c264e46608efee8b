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

#include "fit.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace pathspec::fit {

EllipseSpec reference_ellipse() { return {std::sqrt(5.0), 1.0}; }

namespace {

struct NormalSystem {
  double xx = 0.0, xy = 0.0, yy = 0.0;  // MᵀM
  double bx = 0.0, by = 0.0;            // Mᵀ1
};

NormalSystem accumulate(std::span<const Point> points) {
  NormalSystem s;
  for (const Point& p : points) {
    const double x2 = p.re * p.re, y2 = p.im * p.im;
    s.xx += x2 * x2;
    s.xy += x2 * y2;
    s.yy += y2 * y2;
    s.bx += x2;
    s.by += y2;
  }
  return s;
}

}  // namespace

EllipseFit fit_ellipse(std::span<const Point> points) {
  require(!points.empty(), "ellipse fit needs at least one point");
  const NormalSystem s = accumulate(points);
  const double det = s.xx * s.yy - s.xy * s.xy;
  const double largest = std::max({std::abs(s.xx), std::abs(s.xy), std::abs(s.yy)});
  if (largest == 0.0 || det <= kSingularThreshold * largest * largest) {
    fail(ErrorKind::DegenerateGeometry, "normal matrix is singular");
  }

  EllipseFit out;
  out.coeff_a = (s.yy * s.bx - s.xy * s.by) / det;
  out.coeff_b = (s.xx * s.by - s.xy * s.bx) / det;
  if (!(out.coeff_a > 0.0) || !(out.coeff_b > 0.0)) {
    fail(ErrorKind::DegenerateGeometry, "least-squares conic is not an ellipse");
  }
  out.a_tilde = 1.0 / std::sqrt(out.coeff_a);
  out.b_tilde = 1.0 / std::sqrt(out.coeff_b);
  out.rmse = rmse(points, out.a_tilde, out.b_tilde);
  out.eccentricity = eccentricity(out.a_tilde, out.b_tilde);
  return out;
}

double rmse(std::span<const Point> points, double a, double b) {
  require(!points.empty(), "rmse needs at least one point");
  require(a > 0.0 && b > 0.0, "semi-axes must be positive");
  double sum = 0.0;
  for (const Point& p : points) {
    const double r = p.re * p.re / (a * a) + p.im * p.im / (b * b) - 1.0;
    sum += r * r;
  }
  return std::sqrt(sum / static_cast<double>(points.size()));
}

double eccentricity(double a, double b) {
  require(a > 0.0 && b > 0.0, "semi-axes must be positive");
  const double ratio = std::min(a, b) / std::max(a, b);
  return std::sqrt(1.0 - ratio * ratio);
}

double normal_equation_residual(std::span<const Point> points, double coeff_a, double coeff_b) {
  const NormalSystem s = accumulate(points);
  const double rx = s.xx * coeff_a + s.xy * coeff_b - s.bx;
  const double ry = s.xy * coeff_a + s.yy * coeff_b - s.by;
  const double scale = std::max(std::abs(s.bx), std::abs(s.by));
  return std::max(std::abs(rx), std::abs(ry)) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace pathspec::fit
