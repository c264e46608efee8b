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

#ifndef PATHSPEC_TOOLS_FORMAT_HPP
#define PATHSPEC_TOOLS_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pathspec::cli {

using Json = nlohmann::ordered_json;

/// %.17g; "nan", "inf", "-inf" for non-finite values.
std::string number(double value);

/// Serializes with every float printed through number(). Non-finite floats
/// become null. `indent` < 0 gives the compact form.
std::string dump(const Json& value, int indent = 2);

struct RootRow {
  unsigned long n = 0;
  std::string c;
  double re = 0.0, im = 0.0, residual = 0.0;
};

inline constexpr std::string_view kRootsHeader = "n,c,re,im,residual";
inline constexpr std::string_view kSweepHeader =
    "n,a_tilde,b_tilde,rmse,eccentricity,boundary_residual,max_re,max_im";

std::string roots_csv(const std::vector<RootRow>& rows);
/// Inverse of roots_csv. Throws std::runtime_error on a malformed document.
std::vector<RootRow> parse_roots_csv(std::string_view text);

/// A sweep row after the C layer; missing columns carry `error`.
struct SweepLine {
  unsigned long n = 0;
  std::string c;
  double a_tilde = 0.0, b_tilde = 0.0, rmse = 0.0, eccentricity = 0.0;
  double boundary_residual = 0.0, max_re = 0.0, max_im = 0.0;
  unsigned precision_bits = 0;
  bool solved = false;
  bool fitted = false;
  std::string error;  // status name, empty when the row is complete
};

/// Unavailable cells hold "error:<Kind>".
std::string sweep_csv(const std::vector<SweepLine>& rows);
Json sweep_row_json(const SweepLine& row);

struct PlotPoint {
  double re = 0.0, im = 0.0;
};

struct PlotEllipse {
  double a = 0.0, b = 0.0;
  std::string css_class;
  std::string stroke;
};

inline constexpr double kViewRe = 3.0;
inline constexpr double kViewIm = 1.6;

/// Fixed viewport [-3, 3] x [-1.6, 1.6]; one <circle> per root and one
/// <ellipse> per entry of `ellipses`.
std::string svg_plot(const std::vector<PlotPoint>& roots, const std::vector<PlotEllipse>& ellipses,
                     std::string_view title, int width = 600);

}  // namespace pathspec::cli

#endif  // PATHSPEC_TOOLS_FORMAT_HPP
