// Copyright 2026 The gjit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gjit/geometry.h"

#include <stdexcept>

namespace gjit {

char axis_char(Axis a) {
    return "XYZ"[axis_index(a)];
}

Axis axis_from_char(char c) {
    switch (c) {
        case 'X':
        case 'x':
            return Axis::X;
        case 'Y':
        case 'y':
            return Axis::Y;
        case 'Z':
        case 'z':
            return Axis::Z;
    }
    throw std::invalid_argument(std::string("not an axis label: ") + c);
}

std::string Coord3::str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

void Box::include(const Coord3 &p) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
}

void Box::include(const Box &b) {
    if (b.empty())
        return;
    include(b.lo);
    include(b.hi);
}

bool Box::contains(const Coord3 &p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y && p.z >= lo.z && p.z <= hi.z;
}

int Box::diameter() const {
    if (empty())
        return 0;
    return std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z});
}

Box Box::expanded(int margin) const {
    if (empty())
        return *this;
    Box b = *this;
    b.lo = b.lo - Coord3{margin, margin, margin};
    b.hi = b.hi + Coord3{margin, margin, margin};
    return b;
}

Box Box::clipped(const Box &bounds) const {
    Box b;
    b.lo = {std::max(lo.x, bounds.lo.x), std::max(lo.y, bounds.lo.y), std::max(lo.z, bounds.lo.z)};
    b.hi = {std::min(hi.x, bounds.hi.x), std::min(hi.y, bounds.hi.y), std::min(hi.z, bounds.hi.z)};
    if (b.lo.x > b.hi.x || b.lo.y > b.hi.y || b.lo.z > b.hi.z)
        return Box{};
    return b;
}

Box bounding_box(std::span<const Coord3> points) {
    Box b;
    for (const auto &p : points)
        b.include(p);
    return b;
}

int linf_distance(const Coord3 &p, const Box &b) {
    int d = 0;
    for (Axis a : kAxes) {
        int gap = std::max({0, b.lo[a] - p[a], p[a] - b.hi[a]});
        d = std::max(d, gap);
    }
    return d;
}

int linf_distance(const Box &a, const Box &b) {
    int d = 0;
    for (Axis ax : kAxes) {
        int gap = std::max({0, a.lo[ax] - b.hi[ax], b.lo[ax] - a.hi[ax]});
        d = std::max(d, gap);
    }
    return d;
}

int diameter(std::span<const Coord3> points) {
    return bounding_box(points).diameter();
}

int set_distance(std::span<const Coord3> a, std::span<const Coord3> b) {
    int best = std::numeric_limits<int>::max();
    for (const auto &p : a)
        for (const auto &q : b)
            best = std::min(best, linf_distance(p, q));
    return best;
}

int64_t saturating_pow(int64_t base, int exponent) {
    int64_t r = 1;
    for (int i = 0; i < exponent; i++) {
        if (base != 0 && r > std::numeric_limits<int64_t>::max() / base)
            return std::numeric_limits<int64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace gjit
