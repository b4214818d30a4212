// Copyright 2026 The dimerlab Authors.
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

#include <vector>

#include "dimerlab/scalar.hpp"

namespace dimerlab {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// True when p lies on the closed segment [a, b].
bool on_segment(const Point& p, const Point& a, const Point& b);

enum class Contact {
  kNone,    // disjoint
  kProper,  // single transversal crossing interior to both segments
  kTouch,   // any other contact: shared or touching endpoint, collinear overlap
};

Contact classify_segments(const Point& a, const Point& b, const Point& c, const Point& d);

// Parameter t in (0,1) of the proper crossing point along [a, b]; requires kProper.
Rational crossing_parameter(const Point& a, const Point& b, const Point& c, const Point& d);

// Twice the signed (shoelace) area of the closed polygon.
Rational twice_signed_area(const std::vector<Point>& polygon);

// Winding number of the closed polygon around p. p must not lie on the polygon.
int winding_number(const std::vector<Point>& polygon, const Point& p);

// Strict weak order on direction vectors by counterclockwise angle from +x, in [0, 2pi).
bool angle_less(const Point& dir_a, const Point& dir_b);

}  // namespace dimerlab
