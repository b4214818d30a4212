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

#include "dimerlab/geometry.hpp"

#include <algorithm>

namespace dimerlab {
namespace {

int sign_of(const Rational& q) { return sgn(q); }

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) { return sign_of(cross(a, b, c)); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

Contact classify_segments(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return Contact::kProper;
  if ((o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
      (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d))) {
    return Contact::kTouch;
  }
  return Contact::kNone;
}

Rational crossing_parameter(const Point& a, const Point& b, const Point& c, const Point& d) {
  // a + t (b - a) on the line through c, d.
  Rational num = cross(c, d, a);
  Rational den = num - cross(c, d, b);
  return num / den;
}

Rational twice_signed_area(const std::vector<Point>& polygon) {
  Rational area = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    area += p.x * q.y - q.x * p.y;
  }
  return area;
}

int winding_number(const std::vector<Point>& polygon, const Point& p) {
  int winding = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % polygon.size()];
    if (a.y <= p.y) {
      if (b.y > p.y && orientation(a, b, p) > 0) ++winding;
    } else {
      if (b.y <= p.y && orientation(a, b, p) < 0) --winding;
    }
  }
  return winding;
}

bool angle_less(const Point& dir_a, const Point& dir_b) {
  auto half = [](const Point& d) { return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1; };
  const int ha = half(dir_a);
  const int hb = half(dir_b);
  if (ha != hb) return ha < hb;
  const Point origin{0, 0};
  return orientation(origin, dir_a, dir_b) > 0;
}

}  // namespace dimerlab
