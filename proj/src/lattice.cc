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

#include "gjit/lattice.h"

#include <ostream>
#include <stdexcept>

namespace gjit {

namespace {

// Builds a compressed incidence table from (key, value) pairs.
void build_csr(int num_keys, const std::vector<std::pair<int, int>> &pairs, std::vector<int> &offsets,
               std::vector<int> &data) {
    offsets.assign(num_keys + 1, 0);
    for (const auto &[k, v] : pairs)
        offsets[k + 1]++;
    for (int i = 0; i < num_keys; i++)
        offsets[i + 1] += offsets[i];
    data.assign(pairs.size(), 0);
    std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto &[k, v] : pairs)
        data[cursor[k]++] = v;
}

std::span<const int> csr_row(const std::vector<int> &offsets, const std::vector<int> &data, int row) {
    return {data.data() + offsets[row], static_cast<size_t>(offsets[row + 1] - offsets[row])};
}

std::pair<Axis, Axis> other_axes(Axis a) {
    switch (a) {
        case Axis::X:
            return {Axis::Y, Axis::Z};
        case Axis::Y:
            return {Axis::X, Axis::Z};
        default:
            return {Axis::X, Axis::Y};
    }
}

}  // namespace

std::string side_name(Side s) {
    static const char *names[] = {"x-min", "x-max", "y-min", "y-max", "z-min", "z-max"};
    return names[static_cast<int>(s)];
}

std::string kind_name(LatticeKind k) {
    return k == LatticeKind::Cubic ? "cubic" : "alternative";
}

LatticeKind parse_kind(const std::string &s) {
    if (s == "cubic" || s == "Cubic")
        return LatticeKind::Cubic;
    if (s == "alternative" || s == "Alternative")
        return LatticeKind::Alternative;
    throw std::invalid_argument("unknown lattice kind: " + s);
}

BoundarySpec BoundarySpec::rough_pair(Axis axis) {
    BoundarySpec b;
    for (Side s : kSides)
        b.type[static_cast<int>(s)] = side_axis(s) == axis ? BoundaryType::Rough : BoundaryType::Smooth;
    return b;
}

void BoundarySpec::validate() const {
    int rough = 0;
    for (Side s : kSides)
        rough += (*this)[s] == BoundaryType::Rough;
    if (rough != 2)
        throw std::invalid_argument("boundary spec needs exactly two rough faces, got " + std::to_string(rough));
    for (Axis a : kAxes) {
        if ((*this)[side_of(a, false)] == BoundaryType::Rough && (*this)[side_of(a, true)] == BoundaryType::Rough)
            return;
    }
    throw std::invalid_argument("rough faces of a boundary spec must be opposite");
}

Axis BoundarySpec::rough_axis() const {
    validate();
    for (Axis a : kAxes)
        if ((*this)[side_of(a, false)] == BoundaryType::Rough)
            return a;
    return Axis::Z;
}

LatticeGeometry LatticeGeometry::build(LatticeKind kind, int L, const BoundarySpec &boundary, Axis time_axis) {
    if (L < 2)
        throw std::invalid_argument("lattice size must be at least 2, got " + std::to_string(L));
    return build_box(kind, {L, L, L}, boundary, time_axis);
}

LatticeGeometry LatticeGeometry::build_box(LatticeKind kind, Coord3 extents, const BoundarySpec &boundary,
                                           Axis time_axis) {
    boundary.validate();
    for (Axis a : kAxes)
        if (extents[a] < 1)
            throw std::invalid_argument("lattice extents must be positive, got " + extents.str());
    if (boundary.rough_axis() == time_axis)
        throw std::invalid_argument("time axis must be normal to smooth faces");
    LatticeGeometry g;
    g.kind_ = kind;
    g.extents_ = extents;
    g.boundary_ = boundary;
    g.time_axis_ = time_axis;
    if (kind == LatticeKind::Cubic)
        g.build_cubic();
    else
        g.build_alternative();
    g.finish_incidence();
    return g;
}

int LatticeGeometry::size() const {
    return std::max({extents_.x, extents_.y, extents_.z});
}

Box LatticeGeometry::vertex_box() const {
    return Box{{0, 0, 0}, extents_};
}

Box LatticeGeometry::cell_box() const {
    return Box{{0, 0, 0}, extents_ - Coord3{1, 1, 1}};
}

bool LatticeGeometry::in_cell_box(const Coord3 &c) const {
    return cell_box().contains(c);
}

bool LatticeGeometry::in_vertex_box(const Coord3 &v) const {
    return vertex_box().contains(v);
}

bool LatticeGeometry::on_rough_plane(const Coord3 &v) const {
    for (Axis a : kAxes) {
        if (boundary_[side_of(a, false)] == BoundaryType::Rough && v[a] == 0)
            return true;
        if (boundary_[side_of(a, true)] == BoundaryType::Rough && v[a] == extents_[a])
            return true;
    }
    return false;
}

int LatticeGeometry::vertex_slot(const Coord3 &v) const {
    if (!in_vertex_box(v))
        return -1;
    return (v.x * (extents_.y + 1) + v.y) * (extents_.z + 1) + v.z;
}

int LatticeGeometry::cube_slot(const Coord3 &c) const {
    if (!in_cell_box(c))
        return -1;
    return (c.x * extents_.y + c.y) * extents_.z + c.z;
}

int LatticeGeometry::edge_slot(const EdgeId &e) const {
    int v = vertex_slot(e.anchor);
    if (v < 0 || e.anchor[e.axis] >= extents_[e.axis])
        return -1;
    int nv = (extents_.x + 1) * (extents_.y + 1) * (extents_.z + 1);
    return axis_index(e.axis) * nv + v;
}

int LatticeGeometry::face_slot(const FaceId &f) const {
    int v = vertex_slot(f.anchor);
    if (v < 0)
        return -1;
    auto [b, c] = other_axes(f.normal);
    if (f.anchor[b] >= extents_[b] || f.anchor[c] >= extents_[c])
        return -1;
    int nv = (extents_.x + 1) * (extents_.y + 1) * (extents_.z + 1);
    return axis_index(f.normal) * nv + v;
}

int LatticeGeometry::edge_index(const EdgeId &e) const {
    int s = edge_slot(e);
    return s < 0 ? -1 : edge_slot_to_index_[s];
}

int LatticeGeometry::add_edge(const EdgeId &e) {
    int s = edge_slot(e);
    edge_slot_to_index_[s] = static_cast<int>(edges_.size());
    edges_.push_back(e);
    return edge_slot_to_index_[s];
}

void LatticeGeometry::build_cubic() {
    const int nv = (extents_.x + 1) * (extents_.y + 1) * (extents_.z + 1);
    const int ncube = extents_.x * extents_.y * extents_.z;
    edge_slot_to_index_.assign(3 * nv, -1);
    face_slot_to_plaquette_.assign(3 * nv, -1);
    vertex_slot_to_star_.assign(nv, -1);
    cube_slot_to_star_.assign(ncube, -1);
    cube_slot_to_cell_.assign(ncube, -1);
    vertex_slot_to_cell_.assign(nv, -1);

    // An edge lying inside a rough plane is absent; edges crossing it dangle.
    for (int x = 0; x <= extents_.x; x++)
        for (int y = 0; y <= extents_.y; y++)
            for (int z = 0; z <= extents_.z; z++)
                for (Axis a : kAxes) {
                    EdgeId e{{x, y, z}, a};
                    if (edge_slot(e) < 0)
                        continue;
                    Coord3 far = e.anchor + Coord3::unit(a);
                    if (on_rough_plane(e.anchor) && on_rough_plane(far)) {
                        // Both endpoints on a rough plane: absent only if it is the same plane.
                        bool same_plane = false;
                        for (Axis b : kAxes) {
                            if (b == a)
                                continue;
                            bool lo = boundary_[side_of(b, false)] == BoundaryType::Rough && e.anchor[b] == 0;
                            bool hi = boundary_[side_of(b, true)] == BoundaryType::Rough &&
                                      e.anchor[b] == extents_[b];
                            same_plane |= lo || hi;
                        }
                        if (same_plane)
                            continue;
                    }
                    add_edge(e);
                }

    std::vector<int> data;
    plaquette_edge_offsets_ = {0};
    for (int x = 0; x <= extents_.x; x++)
        for (int y = 0; y <= extents_.y; y++)
            for (int z = 0; z <= extents_.z; z++)
                for (Axis a : kAxes) {
                    FaceId f{{x, y, z}, a};
                    if (face_slot(f) < 0)
                        continue;
                    bool rough_plane = (boundary_[side_of(a, false)] == BoundaryType::Rough && f.anchor[a] == 0) ||
                                       (boundary_[side_of(a, true)] == BoundaryType::Rough &&
                                        f.anchor[a] == extents_[a]);
                    if (rough_plane)
                        continue;
                    auto [b, c] = other_axes(a);
                    const EdgeId sides[4] = {{f.anchor, b},
                                             {f.anchor + Coord3::unit(c), b},
                                             {f.anchor, c},
                                             {f.anchor + Coord3::unit(b), c}};
                    size_t before = plaquette_edge_data_.size();
                    for (const auto &e : sides) {
                        int ei = edge_index(e);
                        if (ei >= 0)
                            plaquette_edge_data_.push_back(ei);
                    }
                    if (plaquette_edge_data_.size() == before)
                        continue;
                    face_slot_to_plaquette_[face_slot(f)] = static_cast<int>(plaquettes_.size());
                    plaquettes_.push_back({PlaquetteSite::Kind::Face, f.anchor, a, {}});
                    plaquette_edge_offsets_.push_back(static_cast<int>(plaquette_edge_data_.size()));
                }

    star_edge_offsets_ = {0};
    for (int x = 0; x <= extents_.x; x++)
        for (int y = 0; y <= extents_.y; y++)
            for (int z = 0; z <= extents_.z; z++) {
                Coord3 v{x, y, z};
                if (on_rough_plane(v))
                    continue;
                size_t before = star_edge_data_.size();
                for (Axis a : kAxes) {
                    for (const EdgeId &e : {EdgeId{v, a}, EdgeId{v - Coord3::unit(a), a}}) {
                        int ei = edge_index(e);
                        if (ei >= 0)
                            star_edge_data_.push_back(ei);
                    }
                }
                if (star_edge_data_.size() == before)
                    continue;
                vertex_slot_to_star_[vertex_slot(v)] = static_cast<int>(stars_.size());
                stars_.push_back({StarSite::Kind::Vertex, v});
                star_edge_offsets_.push_back(static_cast<int>(star_edge_data_.size()));
            }

    cell_plaq_offsets_ = {0};
    for (int x = 0; x < extents_.x; x++)
        for (int y = 0; y < extents_.y; y++)
            for (int z = 0; z < extents_.z; z++) {
                Coord3 c{x, y, z};
                for (Axis a : kAxes) {
                    for (int k = 0; k < 2; k++) {
                        FaceId f{c + (k ? Coord3::unit(a) : Coord3{}), a};
                        int p = plaquette_index(f);
                        if (p >= 0)
                            cell_plaq_data_.push_back(p);
                    }
                }
                cube_slot_to_cell_[cube_slot(c)] = static_cast<int>(cells_.size());
                cells_.push_back({ConstraintCell::Kind::Cube, c});
                cell_plaq_offsets_.push_back(static_cast<int>(cell_plaq_data_.size()));
            }
}

void LatticeGeometry::build_alternative() {
    const int nv = (extents_.x + 1) * (extents_.y + 1) * (extents_.z + 1);
    const int ncube = extents_.x * extents_.y * extents_.z;
    edge_slot_to_index_.assign(3 * nv, -1);
    face_slot_to_plaquette_.assign(3 * nv, -1);
    cube_corner_to_plaquette_.assign(8 * ncube, -1);
    vertex_slot_to_star_.assign(nv, -1);
    cube_slot_to_star_.assign(ncube, -1);
    cube_slot_to_cell_.assign(ncube, -1);
    vertex_slot_to_cell_.assign(nv, -1);

    for (int x = 0; x <= extents_.x; x++)
        for (int y = 0; y <= extents_.y; y++)
            for (int z = 0; z <= extents_.z; z++)
                for (Axis a : kAxes) {
                    EdgeId e{{x, y, z}, a};
                    if (edge_slot(e) < 0)
                        continue;
                    // Keep edges of at least one dual cube; the others carry no plaquette.
                    auto [b, d] = other_axes(a);
                    bool on_dual = false;
                    for (int i = -1; i <= 0; i++)
                        for (int j = -1; j <= 0; j++) {
                            Coord3 c = e.anchor;
                            c[b] += i;
                            c[d] += j;
                            on_dual |= in_cell_box(c) && !is_primal_cube(c);
                        }
                    if (on_dual)
                        add_edge(e);
                }

    auto cube_edges = [&](const Coord3 &c) {
        std::vector<int> out;
        for (Axis a : kAxes) {
            auto [b, d] = other_axes(a);
            for (int i = 0; i < 2; i++)
                for (int j = 0; j < 2; j++) {
                    Coord3 anchor = c;
                    anchor[b] += i;
                    anchor[d] += j;
                    int e = edge_index({anchor, a});
                    if (e >= 0)
                        out.push_back(e);
                }
        }
        return out;
    };

    plaquette_edge_offsets_ = {0};
    star_edge_offsets_ = {0};
    for (int x = 0; x < extents_.x; x++)
        for (int y = 0; y < extents_.y; y++)
            for (int z = 0; z < extents_.z; z++) {
                Coord3 c{x, y, z};
                if (is_primal_cube(c)) {
                    // A primal cube touching a rough face carries no star: strings of
                    // star defects terminate there.
                    bool touches_rough = false;
                    for (Axis a : kAxes) {
                        touches_rough |= boundary_[side_of(a, false)] == BoundaryType::Rough && c[a] == 0;
                        touches_rough |= boundary_[side_of(a, true)] == BoundaryType::Rough &&
                                         c[a] == extents_[a] - 1;
                    }
                    if (touches_rough)
                        continue;
                    for (int e : cube_edges(c))
                        star_edge_data_.push_back(e);
                    cube_slot_to_star_[cube_slot(c)] = static_cast<int>(stars_.size());
                    stars_.push_back({StarSite::Kind::Cube, c});
                    star_edge_offsets_.push_back(static_cast<int>(star_edge_data_.size()));
                    continue;
                }
                for (int bits = 0; bits < 8; bits++) {
                    Coord3 v = c + Coord3{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
                    for (Axis a : kAxes) {
                        // The cube edge along `a` that has v as an endpoint.
                        Coord3 anchor = v;
                        if (v[a] != c[a])
                            anchor[a] -= 1;
                        plaquette_edge_data_.push_back(edge_index({anchor, a}));
                    }
                    cube_corner_to_plaquette_[cube_slot(c) * 8 + bits] = static_cast<int>(plaquettes_.size());
                    plaquettes_.push_back({PlaquetteSite::Kind::CubeCorner, c, Axis::X, v});
                    plaquette_edge_offsets_.push_back(static_cast<int>(plaquette_edge_data_.size()));
                }
            }

    cell_plaq_offsets_ = {0};
    for (int x = 0; x < extents_.x; x++)
        for (int y = 0; y < extents_.y; y++)
            for (int z = 0; z < extents_.z; z++) {
                Coord3 c{x, y, z};
                if (is_primal_cube(c))
                    continue;
                for (int bits = 0; bits < 8; bits++)
                    cell_plaq_data_.push_back(cube_corner_to_plaquette_[cube_slot(c) * 8 + bits]);
                cube_slot_to_cell_[cube_slot(c)] = static_cast<int>(cells_.size());
                cells_.push_back({ConstraintCell::Kind::Cube, c});
                cell_plaq_offsets_.push_back(static_cast<int>(cell_plaq_data_.size()));
            }
    for (int x = 1; x < extents_.x; x++)
        for (int y = 1; y < extents_.y; y++)
            for (int z = 1; z < extents_.z; z++) {
                Coord3 v{x, y, z};
                for (int bits = 0; bits < 8; bits++) {
                    Coord3 c = v - Coord3{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1};
                    if (is_primal_cube(c))
                        continue;
                    Coord3 rel = v - c;
                    int corner = rel.x | (rel.y << 1) | (rel.z << 2);
                    cell_plaq_data_.push_back(cube_corner_to_plaquette_[cube_slot(c) * 8 + corner]);
                }
                vertex_slot_to_cell_[vertex_slot(v)] = static_cast<int>(cells_.size());
                cells_.push_back({ConstraintCell::Kind::Vertex, v});
                cell_plaq_offsets_.push_back(static_cast<int>(cell_plaq_data_.size()));
            }
}

void LatticeGeometry::finish_incidence() {
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < num_plaquettes(); p++)
        for (int e : plaquette_edges(p))
            pairs.emplace_back(e, p);
    build_csr(num_edges(), pairs, edge_plaq_offsets_, edge_plaq_data_);

    pairs.clear();
    for (int s = 0; s < num_stars(); s++)
        for (int e : star_edges(s))
            pairs.emplace_back(e, s);
    build_csr(num_edges(), pairs, edge_star_offsets_, edge_star_data_);

    pairs.clear();
    for (int c = 0; c < num_cells(); c++)
        for (int p : cell_plaquettes(c))
            pairs.emplace_back(p, c);
    build_csr(num_plaquettes(), pairs, plaq_cell_offsets_, plaq_cell_data_);
}

std::span<const int> LatticeGeometry::plaquette_edges(int index) const {
    return csr_row(plaquette_edge_offsets_, plaquette_edge_data_, index);
}

std::span<const int> LatticeGeometry::star_edges(int index) const {
    return csr_row(star_edge_offsets_, star_edge_data_, index);
}

std::span<const int> LatticeGeometry::cell_plaquettes(int index) const {
    return csr_row(cell_plaq_offsets_, cell_plaq_data_, index);
}

std::span<const int> LatticeGeometry::edge_plaquettes(int edge) const {
    return csr_row(edge_plaq_offsets_, edge_plaq_data_, edge);
}

std::span<const int> LatticeGeometry::edge_stars(int edge) const {
    return csr_row(edge_star_offsets_, edge_star_data_, edge);
}

std::span<const int> LatticeGeometry::plaquette_cells(int plaquette) const {
    return csr_row(plaq_cell_offsets_, plaq_cell_data_, plaquette);
}

int LatticeGeometry::plaquette_index(const FaceId &f) const {
    if (kind_ != LatticeKind::Cubic)
        return -1;
    int s = face_slot(f);
    return s < 0 ? -1 : face_slot_to_plaquette_[s];
}

int LatticeGeometry::plaquette_index(const CellId &c, const VertexId &v) const {
    if (kind_ != LatticeKind::Alternative)
        return -1;
    int s = cube_slot(c.anchor);
    if (s < 0)
        return -1;
    Coord3 rel = v.anchor - c.anchor;
    for (Axis a : kAxes)
        if (rel[a] != 0 && rel[a] != 1)
            return -1;
    return cube_corner_to_plaquette_[s * 8 + (rel.x | (rel.y << 1) | (rel.z << 2))];
}

int LatticeGeometry::plaquette_time(int index) const {
    return plaquettes_[index].anchor[time_axis_];
}

int LatticeGeometry::star_index(const StarSite &s) const {
    if (s.kind == StarSite::Kind::Vertex) {
        int slot = vertex_slot(s.anchor);
        return slot < 0 ? -1 : vertex_slot_to_star_[slot];
    }
    int slot = cube_slot(s.anchor);
    return slot < 0 ? -1 : cube_slot_to_star_[slot];
}

int LatticeGeometry::cell_index(const ConstraintCell &c) const {
    if (c.kind == ConstraintCell::Kind::Cube) {
        int slot = cube_slot(c.anchor);
        return slot < 0 ? -1 : cube_slot_to_cell_[slot];
    }
    int slot = vertex_slot(c.anchor);
    return slot < 0 ? -1 : vertex_slot_to_cell_[slot];
}

std::string LatticeGeometry::boundary_tag(const Coord3 &lo, const Coord3 &hi) const {
    bool rough = false;
    bool smooth = false;
    for (Axis a : kAxes) {
        for (bool max_side : {false, true}) {
            bool touches = max_side ? hi[a] == extents_[a] : lo[a] == 0;
            if (!touches)
                continue;
            if (boundary_[side_of(a, max_side)] == BoundaryType::Rough)
                rough = true;
            else
                smooth = true;
        }
    }
    return rough ? "rough" : (smooth ? "smooth" : "bulk");
}

void LatticeGeometry::dump(std::ostream &out) const {
    for (int x = 0; x <= extents_.x; x++)
        for (int y = 0; y <= extents_.y; y++)
            for (int z = 0; z <= extents_.z; z++) {
                Coord3 v{x, y, z};
                out << "vertex " << x << ' ' << y << ' ' << z << " - " << boundary_tag(v, v) << '\n';
            }
    for (const auto &e : edges_) {
        Coord3 hi = e.anchor + Coord3::unit(e.axis);
        out << "edge " << e.anchor.x << ' ' << e.anchor.y << ' ' << e.anchor.z << ' ' << axis_char(e.axis) << ' '
            << boundary_tag(e.anchor, hi) << '\n';
    }
    for (const auto &p : plaquettes_) {
        if (p.kind == PlaquetteSite::Kind::Face) {
            auto [b, c] = other_axes(p.normal);
            Coord3 hi = p.anchor + Coord3::unit(b) + Coord3::unit(c);
            out << "face " << p.anchor.x << ' ' << p.anchor.y << ' ' << p.anchor.z << ' ' << axis_char(p.normal)
                << ' ' << boundary_tag(p.anchor, hi) << '\n';
        }
    }
    for (int x = 0; x < extents_.x; x++)
        for (int y = 0; y < extents_.y; y++)
            for (int z = 0; z < extents_.z; z++) {
                Coord3 c{x, y, z};
                const char *orientation =
                    kind_ == LatticeKind::Alternative ? (is_primal_cube(c) ? "P" : "D") : "-";
                out << "cell " << x << ' ' << y << ' ' << z << ' ' << orientation << ' '
                    << boundary_tag(c, c + Coord3{1, 1, 1}) << '\n';
            }
}

LatticeGeometry build_lattice(LatticeKind kind, int L, const BoundarySpec &boundary) {
    Axis rough = boundary.rough_axis();
    // Live planes must contain both rough faces; time runs along the first other axis.
    Axis time = rough == Axis::X ? Axis::Y : Axis::X;
    return LatticeGeometry::build(kind, L, boundary, time);
}

namespace {

StabilizerSupport support_from(const LatticeGeometry &g, PauliType t, std::span<const int> edges) {
    StabilizerSupport s;
    s.pauli = t;
    for (int e : edges)
        s.edges.push_back(g.edge(e));
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

}  // namespace

StabilizerSupport star_support(const LatticeGeometry &g, const VertexId &site) {
    if (g.kind() != LatticeKind::Cubic)
        throw std::invalid_argument("vertex stars exist only on the cubic lattice");
    int s = g.star_index({StarSite::Kind::Vertex, site.anchor});
    if (s < 0)
        throw std::invalid_argument("no star generator at vertex " + site.anchor.str());
    return support_from(g, PauliType::X, g.star_edges(s));
}

StabilizerSupport star_support(const LatticeGeometry &g, const CellId &site) {
    if (g.kind() != LatticeKind::Alternative)
        throw std::invalid_argument("cube stars exist only on the alternative lattice");
    if (!LatticeGeometry::is_primal_cube(site.anchor))
        throw std::invalid_argument("cube " + site.anchor.str() + " is a dual cube and carries no star");
    int s = g.star_index({StarSite::Kind::Cube, site.anchor});
    if (s < 0)
        throw std::invalid_argument("no star generator on cube " + site.anchor.str());
    return support_from(g, PauliType::X, g.star_edges(s));
}

StabilizerSupport plaquette_support(const LatticeGeometry &g, const FaceId &site) {
    if (g.kind() != LatticeKind::Cubic)
        throw std::invalid_argument("face plaquettes exist only on the cubic lattice");
    int p = g.plaquette_index(site);
    if (p < 0)
        throw std::invalid_argument("no plaquette on face " + site.anchor.str());
    return support_from(g, PauliType::Z, g.plaquette_edges(p));
}

StabilizerSupport plaquette_support(const LatticeGeometry &g, const CellId &cube, const VertexId &corner) {
    if (g.kind() != LatticeKind::Alternative)
        throw std::invalid_argument("cube-corner plaquettes exist only on the alternative lattice");
    if (LatticeGeometry::is_primal_cube(cube.anchor))
        throw std::invalid_argument("cube " + cube.anchor.str() + " is primal and carries no plaquettes");
    int p = g.plaquette_index(cube, corner);
    if (p < 0)
        throw std::invalid_argument("vertex " + corner.anchor.str() + " is not a corner of cube " +
                                    cube.anchor.str());
    return support_from(g, PauliType::Z, g.plaquette_edges(p));
}

std::vector<PlaquetteSite> cell_plaquettes(const LatticeGeometry &g, const ConstraintCell &cell) {
    int c = g.cell_index(cell);
    if (c < 0)
        throw std::invalid_argument("not a constraint cell: " + cell.anchor.str());
    std::vector<PlaquetteSite> out;
    for (int p : g.cell_plaquettes(c))
        out.push_back(g.plaquette(p));
    return out;
}

UnitCellCounts unit_cell_counts(UnitCellModel model) {
    constexpr int cubes = 8;          // 2x2x2 unit cell
    constexpr int edges_per_cube = 3;  // each cube owns three edges
    constexpr int faces_per_cube = 3;
    constexpr int dual_cubes = cubes / 2;
    constexpr int corners = 8;
    UnitCellCounts cubic{cubes * edges_per_cube, cubes * faces_per_cube, 0};
    cubic.total = cubic.data_qubits + cubic.ancilla_qubits;
    UnitCellCounts alt{cubes * edges_per_cube, dual_cubes * corners, 0};
    alt.total = alt.data_qubits + alt.ancilla_qubits;
    switch (model) {
        case UnitCellModel::CubicOnly:
            return cubic;
        case UnitCellModel::AlternativeOnly:
            return alt;
        case UnitCellModel::FullTripleOverlap:
            return {cubic.data_qubits + 2 * alt.data_qubits, cubic.ancilla_qubits + 2 * alt.ancilla_qubits,
                    cubic.total + 2 * alt.total};
    }
    return {};
}

}  // namespace gjit
