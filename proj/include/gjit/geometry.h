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

#ifndef GJIT_GEOMETRY_H
#define GJIT_GEOMETRY_H

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace gjit {

enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

inline int axis_index(Axis a) {
    return static_cast<int>(a);
}

char axis_char(Axis a);
Axis axis_from_char(char c);

/// Integer lattice point. Used for vertices, edge/face/cell anchors and sites.
struct Coord3 {
    int x = 0;
    int y = 0;
    int z = 0;

    int &operator[](Axis a) {
        return a == Axis::X ? x : (a == Axis::Y ? y : z);
    }
    int operator[](Axis a) const {
        return a == Axis::X ? x : (a == Axis::Y ? y : z);
    }
    Coord3 operator+(const Coord3 &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    Coord3 operator-(const Coord3 &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    auto operator<=>(const Coord3 &) const = default;

    static Coord3 unit(Axis a) {
        Coord3 c;
        c[a] = 1;
        return c;
    }
    std::string str() const;
};

inline int linf_distance(const Coord3 &a, const Coord3 &b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

/// Axis-aligned closed box of lattice points [lo, hi].
struct Box {
    Coord3 lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    Coord3 hi{std::numeric_limits<int>::min(), std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};

    bool empty() const {
        return lo.x > hi.x;
    }
    void include(const Coord3 &p);
    void include(const Box &b);
    bool contains(const Coord3 &p) const;
    /// ℓ∞ diameter: largest coordinate extent (a single point has diameter 0).
    int diameter() const;
    Box expanded(int margin) const;
    Box clipped(const Box &bounds) const;
    auto operator<=>(const Box &) const = default;
};

Box bounding_box(std::span<const Coord3> points);

/// ℓ∞ distance from a point to a box (0 when inside).
int linf_distance(const Coord3 &p, const Box &b);

/// ℓ∞ separation of two boxes (0 when they overlap or touch in a point).
int linf_distance(const Box &a, const Box &b);

/// ℓ∞ diameter of a point set (0 for a single point or an empty set).
int diameter(std::span<const Coord3> points);

/// Smallest ℓ∞ distance between two point sets; max int when either is empty.
int set_distance(std::span<const Coord3> a, std::span<const Coord3> b);

/// Integer power with saturation at INT64_MAX.
int64_t saturating_pow(int64_t base, int exponent);

}  // namespace gjit

#endif
