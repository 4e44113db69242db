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

#ifndef GJIT_LATTICE_H
#define GJIT_LATTICE_H

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gjit/geometry.h"

namespace gjit {

enum class LatticeKind : uint8_t { Cubic, Alternative };
enum class BoundaryType : uint8_t { Rough, Smooth };
enum class Side : uint8_t { XMin = 0, XMax, YMin, YMax, ZMin, ZMax };

constexpr std::array<Side, 6> kSides = {Side::XMin, Side::XMax, Side::YMin, Side::YMax, Side::ZMin, Side::ZMax};

inline Side side_of(Axis a, bool max_side) {
    return static_cast<Side>(2 * axis_index(a) + (max_side ? 1 : 0));
}
inline Axis side_axis(Side s) {
    return static_cast<Axis>(static_cast<int>(s) / 2);
}
inline bool side_is_max(Side s) {
    return static_cast<int>(s) % 2 == 1;
}
std::string side_name(Side s);
std::string kind_name(LatticeKind k);
LatticeKind parse_kind(const std::string &s);

/// Boundary type of each of the six faces of the lattice box.
struct BoundarySpec {
    std::array<BoundaryType, 6> type{};

    BoundaryType operator[](Side s) const {
        return type[static_cast<int>(s)];
    }
    /// Rough on the two faces normal to `axis`, smooth elsewhere.
    static BoundarySpec rough_pair(Axis axis);
    /// Throws unless exactly two opposite faces are rough.
    void validate() const;
    Axis rough_axis() const;
};

struct EdgeId {
    Coord3 anchor;
    Axis axis = Axis::X;
    auto operator<=>(const EdgeId &) const = default;
};

struct FaceId {
    Coord3 anchor;
    Axis normal = Axis::X;
    auto operator<=>(const FaceId &) const = default;
};

struct CellId {
    Coord3 anchor;
    auto operator<=>(const CellId &) const = default;
};

struct VertexId {
    Coord3 anchor;
    auto operator<=>(const VertexId &) const = default;
};

enum class PauliType : uint8_t { X, Z };

struct StabilizerSupport {
    PauliType pauli = PauliType::X;
    std::vector<EdgeId> edges;
};

/// A Z-type measured generator. Cubic: a face (anchor, normal). Alternative: a
/// dual cube (anchor) restricted to one of its corners (corner).
struct PlaquetteSite {
    enum class Kind : uint8_t { Face, CubeCorner } kind = Kind::Face;
    Coord3 anchor;
    Axis normal = Axis::X;
    Coord3 corner;
    auto operator<=>(const PlaquetteSite &) const = default;
};

/// An X-type generator. Cubic: a vertex. Alternative: a primal cube.
struct StarSite {
    enum class Kind : uint8_t { Vertex, Cube } kind = Kind::Vertex;
    Coord3 anchor;
    auto operator<=>(const StarSite &) const = default;
};

/// A set of plaquettes whose product is the identity. Cubic: every cube.
/// Alternative: every dual cube (eight-sided cell) and every interior vertex
/// (four-sided cell).
struct ConstraintCell {
    enum class Kind : uint8_t { Cube, Vertex } kind = Kind::Cube;
    Coord3 anchor;
    auto operator<=>(const ConstraintCell &) const = default;
};

/// Immutable indexed cell complex for one of the two code families.
///
/// Entities are addressed by (anchor, orientation); dense integer indices are
/// derived by arithmetic on the anchor. An edge with anchor v and axis a joins
/// v and v + e_a; a face with anchor v and normal a spans the two other axes
/// from v; a cube with anchor v spans [v, v + (1,1,1)].
class LatticeGeometry {
   public:
    /// Cube of side L (in cells).
    static LatticeGeometry build(LatticeKind kind, int L, const BoundarySpec &boundary, Axis time_axis);
    /// Box with per-axis extents, used for time slabs.
    static LatticeGeometry build_box(LatticeKind kind, Coord3 extents, const BoundarySpec &boundary, Axis time_axis);

    LatticeKind kind() const {
        return kind_;
    }
    const Coord3 &extents() const {
        return extents_;
    }
    int extent(Axis a) const {
        return extents_[a];
    }
    /// Largest extent.
    int size() const;
    const BoundarySpec &boundary() const {
        return boundary_;
    }
    Axis time_axis() const {
        return time_axis_;
    }
    /// The box of vertex coordinates [0, extents].
    Box vertex_box() const;
    /// The box of cell anchors [0, extents - 1].
    Box cell_box() const;

    // Edges (qubits).
    int num_edges() const {
        return static_cast<int>(edges_.size());
    }
    const EdgeId &edge(int index) const {
        return edges_[index];
    }
    /// -1 when the edge is not part of the complex.
    int edge_index(const EdgeId &e) const;
    bool has_edge(const EdgeId &e) const {
        return edge_index(e) >= 0;
    }

    // Plaquettes (Z generators, measured).
    int num_plaquettes() const {
        return static_cast<int>(plaquettes_.size());
    }
    const PlaquetteSite &plaquette(int index) const {
        return plaquettes_[index];
    }
    std::span<const int> plaquette_edges(int index) const;
    /// Cubic only; -1 when absent.
    int plaquette_index(const FaceId &f) const;
    /// Alternative only; -1 when absent.
    int plaquette_index(const CellId &c, const VertexId &v) const;
    std::span<const int> edge_plaquettes(int edge) const;
    /// Time coordinate of a plaquette measurement.
    int plaquette_time(int index) const;

    // Stars (X generators).
    int num_stars() const {
        return static_cast<int>(stars_.size());
    }
    const StarSite &star(int index) const {
        return stars_[index];
    }
    std::span<const int> star_edges(int index) const;
    std::span<const int> edge_stars(int edge) const;
    int star_index(const StarSite &s) const;

    // Constraint cells.
    int num_cells() const {
        return static_cast<int>(cells_.size());
    }
    const ConstraintCell &cell(int index) const {
        return cells_[index];
    }
    std::span<const int> cell_plaquettes(int index) const;
    std::span<const int> plaquette_cells(int plaquette) const;
    int cell_index(const ConstraintCell &c) const;

    /// Primal cubes carry stars in the Alternative lattice.
    static bool is_primal_cube(const Coord3 &anchor) {
        return ((anchor.x + anchor.y + anchor.z) % 2 + 2) % 2 == 0;
    }
    bool in_cell_box(const Coord3 &c) const;
    bool in_vertex_box(const Coord3 &v) const;
    /// True when the point lies on the plane of a rough lattice face.
    bool on_rough_plane(const Coord3 &v) const;

    /// Line-oriented dump `<type> <x> <y> <z> <orientation> <boundary-tag>`.
    void dump(std::ostream &out) const;

   private:
    LatticeGeometry() = default;
    void build_cubic();
    void build_alternative();
    void finish_incidence();
    int edge_slot(const EdgeId &e) const;
    int face_slot(const FaceId &f) const;
    int cube_slot(const Coord3 &c) const;
    int vertex_slot(const Coord3 &v) const;
    int add_edge(const EdgeId &e);
    std::string boundary_tag(const Coord3 &lo, const Coord3 &hi) const;

    LatticeKind kind_ = LatticeKind::Cubic;
    Coord3 extents_;
    BoundarySpec boundary_;
    Axis time_axis_ = Axis::X;

    std::vector<EdgeId> edges_;
    std::vector<int> edge_slot_to_index_;

    std::vector<PlaquetteSite> plaquettes_;
    std::vector<int> plaquette_edge_offsets_, plaquette_edge_data_;
    std::vector<int> face_slot_to_plaquette_;     // cubic
    std::vector<int> cube_corner_to_plaquette_;   // alternative: cube_slot * 8 + corner bits

    std::vector<StarSite> stars_;
    std::vector<int> star_edge_offsets_, star_edge_data_;
    std::vector<int> vertex_slot_to_star_, cube_slot_to_star_;

    std::vector<ConstraintCell> cells_;
    std::vector<int> cell_plaq_offsets_, cell_plaq_data_;
    std::vector<int> cube_slot_to_cell_, vertex_slot_to_cell_;

    std::vector<int> edge_plaq_offsets_, edge_plaq_data_;
    std::vector<int> edge_star_offsets_, edge_star_data_;
    std::vector<int> plaq_cell_offsets_, plaq_cell_data_;
};

LatticeGeometry build_lattice(LatticeKind kind, int L, const BoundarySpec &boundary);

/// Cubic: site is a vertex. Alternative: site is a primal cube.
StabilizerSupport star_support(const LatticeGeometry &g, const VertexId &site);
StabilizerSupport star_support(const LatticeGeometry &g, const CellId &site);

/// Cubic: a face. Alternative: (dual cube, corner).
StabilizerSupport plaquette_support(const LatticeGeometry &g, const FaceId &site);
StabilizerSupport plaquette_support(const LatticeGeometry &g, const CellId &cube, const VertexId &corner);

std::vector<PlaquetteSite> cell_plaquettes(const LatticeGeometry &g, const ConstraintCell &cell);

enum class UnitCellModel : uint8_t { CubicOnly, AlternativeOnly, FullTripleOverlap };

struct UnitCellCounts {
    int data_qubits = 0;
    int ancilla_qubits = 0;
    int total = 0;
};

/// Qubits in one 2x2x2 unit cell: three edges per cube, one ancilla per face
/// (cubic) or eight per dual cube (alternative).
UnitCellCounts unit_cell_counts(UnitCellModel model);

}  // namespace gjit

#endif
