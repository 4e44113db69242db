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

#ifndef GJIT_CHUNKS_H
#define GJIT_CHUNKS_H

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gjit/geometry.h"

namespace gjit {

struct DecoderParams {
    int Q = 87;
    int r = 2;
    int s = 8;

    /// Q >= 3[r(s+2) + s + 1]: same-level containers are never tethered.
    bool separates_containers() const {
        return Q >= 3 * (r * (s + 2) + s + 1);
    }
    /// Tethering distance at level j.
    int64_t delta(int j) const;
    /// Fattened container diameter (s+2) Q^j.
    int64_t fattened_diameter(int j) const;
};

/// Maximal subsets whose members are chained by steps of l-inf length at
/// most `radius`. Components are sorted; the list is ordered by first site.
std::vector<std::vector<Coord3>> connected_components(std::span<const Coord3> sites, int64_t radius);

struct ChunkDecomposition {
    int Q = 0;
    /// E_0 ⊇ E_1 ⊇ ... ⊇ E_m, each sorted.
    std::vector<std::vector<Coord3>> levels;
    /// Highest nonempty level; -1 for an empty error.
    int m = -1;
    /// Chunk enumeration exceeded its budget; levels above the last exact one
    /// are lower bounds.
    bool overflow = false;

    std::vector<Coord3> F(int j) const;
    /// Q^j-connected components of F_j.
    std::vector<std::vector<Coord3>> components(int j) const;
    std::string to_json() const;
};

/// Exact E_n: a site is in E_n iff it belongs to some level-n chunk. Rejects Q < 6.
ChunkDecomposition decompose(std::span<const Coord3> sites, int Q, int64_t budget = 200000);

struct LemmaViolation {
    int level = 0;
    std::vector<Coord3> component;
    int64_t diameter = 0;
    int64_t separation = 0;
    std::string reason;
};

struct LemmaReport {
    int components_checked = 0;
    std::vector<LemmaViolation> violations;
    bool ok() const {
        return violations.empty();
    }
};

/// Every Q^n-connected component M of F_n has diameter <= Q^n and lies more
/// than Q^{n+1}/3 from E_n \ M.
LemmaReport verify_diameter_lemma(const ChunkDecomposition &d);

using BigFloat = boost::multiprecision::cpp_bin_float_100;

/// L^3 (3Q)^-6 (3Q p0)^(2^m).
BigFloat chunk_probability_bound(int64_t L, int Q, const BigFloat &p0, int m);
std::string format_big(const BigFloat &x, int digits = 15);

struct ThresholdReport {
    int Q = 0;
    int N = 0;
    BigFloat p0_threshold;   // (3Q)^-6
    BigFloat eps_threshold;  // eps with 1 - (1 - eps)^N = p0_threshold
    double quoted_eps = 6e-15;
    double ratio = 0.0;  // quoted / derived
    std::string to_text() const;
};

ThresholdReport threshold_report(int Q, int N);

enum class ContainerKind : uint8_t { RawBox, Container, Fattened };

/// A region centred on a component F_{j,alpha}: all points within `radius2`/2
/// (l-inf) of a member of F. Raw boxes are the bounding box grown by one.
struct Container {
    ContainerKind kind = ContainerKind::Container;
    int level = 0;
    std::vector<Coord3> core;
    int64_t radius2 = 0;  // doubled fattening radius
    Box box;              // only for RawBox

    /// Doubled l-inf diameter.
    int64_t diameter2() const;
};

Container raw_box(std::span<const Coord3> component, int level);
/// Fattened by (s-1)Q^j/2 so its diameter is at most sQ^j.
Container make_container(std::span<const Coord3> component, int level, const DecoderParams &params);
/// The container grown by Q^j on every side; diameter at most (s+2)Q^j.
Container make_fattened(const Container &c, const DecoderParams &params);

/// Doubled l-inf separation between two containers (0 when they overlap).
int64_t separation2(const Container &a, const Container &b);

/// Separation no greater than Delta_j with j = a.level <= b.level.
bool tethered(const Container &a, const Container &b, const DecoderParams &params);

struct TetherReport {
    int pairs_checked = 0;
    int same_level_tethered = 0;
};

/// Counts same-level tethered container pairs over all levels.
TetherReport same_level_tethering(const ChunkDecomposition &d, const DecoderParams &params);

}  // namespace gjit

#endif
