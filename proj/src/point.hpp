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

#ifndef PATHSPEC_POINT_HPP
#define PATHSPEC_POINT_HPP

namespace pathspec {

/// A root rounded to double precision, as a point of the complex plane.
struct Point {
  double re = 0.0;
  double im = 0.0;
};

}  // namespace pathspec

#endif  // PATHSPEC_POINT_HPP
