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

#include "gjit/jit_decoder.h"

#include <map>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace gjit {

namespace {

void toggle(std::vector<uint8_t> &mask, const std::vector<int> &links) {
    for (int l : links)
        mask[l] ^= 1;
}

std::vector<int> support(const std::vector<uint8_t> &mask) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(mask.size()); i++)
        if (mask[i])
            out.push_back(i);
    return out;
}

nlohmann::json point(const Coord3 &p) {
    return nlohmann::json::array({p.x, p.y, p.z});
}

}  // namespace

JitDecoder::JitDecoder(const LatticeGeometry &g, JitOptions options)
    : g_(&g), options_(std::move(options)), T_(g.time_axis()) {
    if (g.kind() != LatticeKind::Cubic)
        throw std::invalid_argument("the time-sliced decoder runs on the cubic lattice");
    if (options_.absorbing.empty()) {
        for (Side s : kSides)
            if (side_axis(s) != T_ && g.boundary()[s] == BoundaryType::Smooth)
                options_.absorbing.push_back(s);
    }
    for (Side s : options_.absorbing)
        if (side_axis(s) == T_ || g.boundary()[s] != BoundaryType::Smooth)
            throw std::invalid_argument("side " + side_name(s) + " is not a smooth spatial side");
}

int JitDecoder::side_rank(Side s) const {
    const auto &order = options_.boundary_order;
    auto it = std::find(order.begin(), order.end(), s);
    if (it != order.end())
        return static_cast<int>(it - order.begin());
    return static_cast<int>(order.size()) + static_cast<int>(s);
}

int JitDecoder::boundary_distance(const Coord3 &pos, Side side, int t) const {
    Axis a = side_axis(side);
    int c = a == T_ ? t : pos[a];
    return side_is_max(side) ? g_->extent(a) - c : c + 1;
}

std::vector<int> JitDecoder::deferral(const ActiveDefect &d, int t) const {
    std::vector<int> out;
    Coord3 anchor = d.pos;
    for (int k = d.birth + 1; k <= t; k++) {
        anchor[T_] = k;
        out.push_back(g_->plaquette_index(FaceId{anchor, T_}));
    }
    return out;
}

std::vector<int> JitDecoder::spatial_path(Coord3 p, const Coord3 &to, int t) const {
    std::vector<int> out;
    p[T_] = t;
    for (Axis a : kAxes) {
        if (a == T_)
            continue;
        int dir = to[a] > p[a] ? 1 : -1;
        while (p[a] != to[a]) {
            Coord3 anchor = p;
            if (dir > 0)
                anchor[a]++;
            out.push_back(g_->plaquette_index(FaceId{anchor, a}));
            p[a] += dir;
        }
    }
    return out;
}

std::vector<int> JitDecoder::side_path(Coord3 p, Side side, int t) const {
    std::vector<int> out;
    p[T_] = t;
    Axis a = side_axis(side);
    int steps = boundary_distance(p, side, t);
    for (int i = 0; i < steps; i++) {
        Coord3 anchor = p;
        if (side_is_max(side))
            anchor[a]++;
        out.push_back(g_->plaquette_index(FaceId{anchor, a}));
        p[a] += side_is_max(side) ? 1 : -1;
    }
    return out;
}

MatchDecision JitDecoder::to_boundary(const ActiveDefect &d, Side side, int distance) const {
    MatchDecision m;
    m.kind = MatchKind::PairToBoundary;
    m.u = d;
    m.side = side;
    m.t = t_;
    m.separation = distance;
    std::vector<uint8_t> mask(g_->num_plaquettes(), 0);
    toggle(mask, deferral(d, t_));
    toggle(mask, side_path(d.pos, side, t_));
    m.plaquettes = support(mask);
    return m;
}

std::vector<MatchDecision> JitDecoder::step(const DefectSet &new_defects, int t) {
    if (t <= t_)
        throw std::invalid_argument("slice " + std::to_string(t) + " does not follow " + std::to_string(t_));
    if (t >= g_->extent(T_))
        throw std::invalid_argument("slice " + std::to_string(t) + " is outside the time extent");
    for (const auto &d : new_defects)
        if (d.t != t || d.pos[T_] != t)
            throw std::invalid_argument("defect at " + d.pos.str() + " is not born at " + std::to_string(t));
    t_ = t;
    for (const auto &d : new_defects)
        active_.push_back({next_id_++, d.pos, t});

    struct Candidate {
        int separation;
        int kind;
        Coord3 ux;
        Coord3 vx;
        int rank;
        int i;
        int j;
        Side side;
        bool operator<(const Candidate &o) const {
            return std::tie(separation, kind, ux, vx, rank, i, j) <
                   std::tie(o.separation, o.kind, o.ux, o.vx, o.rank, o.i, o.j);
        }
    };
    auto spatial = [&](Coord3 p) {
        p[T_] = 0;
        return p;
    };
    std::vector<Candidate> cands;
    const int n = static_cast<int>(active_.size());
    for (int i = 0; i < n; i++) {
        const auto &u = active_[i];
        int du = t - u.birth;
        for (int j = i + 1; j < n; j++) {
            const auto &v = active_[j];
            int sep = linf_distance(u.pos, v.pos);
            if (du >= sep && t - v.birth >= sep) {
                bool swap = spatial(v.pos) < spatial(u.pos);
                cands.push_back({sep, 0, spatial(swap ? v.pos : u.pos), spatial(swap ? u.pos : v.pos), 0,
                                 swap ? j : i, swap ? i : j, Side::XMin});
            }
        }
        for (Side s : options_.absorbing) {
            int bd = boundary_distance(u.pos, s, t);
            if (du >= bd)
                cands.push_back({bd, 1, spatial(u.pos), Coord3{}, side_rank(s), i, -1, s});
        }
    }
    std::sort(cands.begin(), cands.end());

    std::vector<uint8_t> used(n, 0);
    std::vector<MatchDecision> out;
    for (const auto &c : cands) {
        if (used[c.i] || (c.j >= 0 && used[c.j]))
            continue;
        used[c.i] = 1;
        const auto &u = active_[c.i];
        if (c.j < 0) {
            out.push_back(to_boundary(u, c.side, c.separation));
            continue;
        }
        used[c.j] = 1;
        const auto &v = active_[c.j];
        MatchDecision m;
        m.kind = MatchKind::PairDefects;
        m.u = u;
        m.v = v;
        m.t = t;
        m.separation = c.separation;
        std::vector<uint8_t> mask(g_->num_plaquettes(), 0);
        toggle(mask, deferral(u, t));
        toggle(mask, deferral(v, t));
        toggle(mask, spatial_path(u.pos, v.pos, t));
        m.plaquettes = support(mask);
        out.push_back(std::move(m));
    }
    std::vector<ActiveDefect> survivors;
    for (int i = 0; i < n; i++)
        if (!used[i])
            survivors.push_back(active_[i]);
    active_ = std::move(survivors);
    return out;
}

std::vector<MatchDecision> JitDecoder::flush() {
    std::vector<MatchDecision> out;
    if (t_ < 0)
        return out;
    std::vector<Side> sides = options_.absorbing;
    Side terminal = side_of(T_, true);
    if (g_->boundary()[terminal] == BoundaryType::Smooth)
        sides.push_back(terminal);
    for (const auto &d : active_) {
        std::tuple<int, int> best{std::numeric_limits<int>::max(), 0};
        Side pick = Side::XMin;
        for (Side s : sides) {
            std::tuple<int, int> key{boundary_distance(d.pos, s, t_), side_rank(s)};
            if (key < best) {
                best = key;
                pick = s;
            }
        }
        if (std::get<0>(best) == std::numeric_limits<int>::max())
            throw std::logic_error("no side can absorb the remaining defects");
        out.push_back(to_boundary(d, pick, std::get<0>(best)));
    }
    active_.clear();
    return out;
}

std::string MatchDecision::to_json(const LatticeGeometry &g) const {
    Axis T = g.time_axis();
    auto defect = [&](const ActiveDefect &d) {
        return nlohmann::json{{"id", d.id}, {"pos", point(d.pos)}, {"birth", d.birth}};
    };
    auto at = [&](Coord3 p) {
        p[T] = t;
        return p;
    };
    nlohmann::json j;
    j["kind"] = kind == MatchKind::PairDefects ? "PairDefects" : "PairToBoundary";
    j["t"] = t;
    j["separation"] = separation;
    j["u"] = defect(u);
    nlohmann::json segments = nlohmann::json::array();
    segments.push_back({point(u.pos), point(at(u.pos))});
    if (kind == MatchKind::PairDefects) {
        j["v"] = defect(v);
        segments.push_back({point(v.pos), point(at(v.pos))});
        segments.push_back({point(at(u.pos)), point(at(v.pos))});
    } else {
        j["boundary"] = side_name(side);
        Coord3 end = at(u.pos);
        Axis a = side_axis(side);
        end[a] = side_is_max(side) ? g.extent(a) : -1;
        segments.push_back({point(at(u.pos)), point(end)});
    }
    j["segments"] = segments;
    j["plaquettes"] = plaquettes;
    return j.dump();
}

std::string JitResult::decisions_jsonl(const LatticeGeometry &g) const {
    std::string out;
    for (const auto &d : decisions)
        out += d.to_json(g) + "\n";
    return out;
}

JitResult run_jit(const LatticeGeometry &g, const DefectSet &defects, const JitOptions &options) {
    JitDecoder jit(g, options);
    const Axis T = g.time_axis();
    std::vector<DefectSet> slices(g.extent(T));
    for (const auto &d : defects)
        slices.at(d.t).push_back(d);
    JitResult result;
    auto record = [&](std::vector<MatchDecision> ds) {
        for (auto &d : ds)
            result.decisions.push_back(std::move(d));
    };
    for (int t = 0; t < g.extent(T); t++) {
        std::sort(slices[t].begin(), slices[t].end(),
                  [](const Defect &a, const Defect &b) { return a.cell < b.cell; });
        record(jit.step(slices[t], t));
    }
    record(jit.flush());

    std::vector<uint8_t> mask(g.num_plaquettes(), 0);
    result.lifetimes.assign(defects.size(), 0);
    for (const auto &d : result.decisions) {
        toggle(mask, d.plaquettes);
        result.lifetimes.at(d.u.id) = d.t - d.u.birth;
        if (d.kind == MatchKind::PairDefects)
            result.lifetimes.at(d.v.id) = d.t - d.v.birth;
    }
    result.correction = support(mask);
    for (int l : result.lifetimes)
        result.max_lifetime = std::max(result.max_lifetime, l);
    return result;
}

SpreadReport measure_spread(const ChunkDecomposition &d, std::span<const Coord3> share, int max_lifetime) {
    SpreadReport report;
    report.max_lifetime = max_lifetime;
    if (d.m < 0)
        return report;
    std::vector<std::vector<Coord3>> cores;
    std::vector<int> levels;
    for (int j = 0; j <= d.m; j++)
        for (auto &c : d.components(j)) {
            cores.push_back(std::move(c));
            levels.push_back(j);
        }
    std::vector<int> radius(cores.size(), 1);
    for (const auto &p : share) {
        int best = std::numeric_limits<int>::max();
        size_t pick = 0;
        for (size_t k = 0; k < cores.size(); k++) {
            int dist = set_distance(std::span<const Coord3>(&p, 1), cores[k]);
            if (dist < best) {
                best = dist;
                pick = k;
            }
        }
        radius[pick] = std::max(radius[pick], best);
    }
    for (size_t k = 0; k < cores.size(); k++) {
        ComponentSpread c;
        c.level = levels[k];
        c.core = cores[k];
        int extent = diameter(cores[k]);
        c.box_diameter = extent + 2;
        c.container_diameter = extent + 2 * radius[k];
        c.s_emp = static_cast<double>(c.container_diameter) / static_cast<double>(saturating_pow(d.Q, c.level));
        c.growth = static_cast<double>(c.container_diameter) / c.box_diameter;
        report.max_s_emp = std::max(report.max_s_emp, c.s_emp);
        report.components.push_back(std::move(c));
    }
    return report;
}

std::string SpreadReport::to_json() const {
    nlohmann::json j;
    j["max_s_emp"] = max_s_emp;
    j["max_lifetime"] = max_lifetime;
    j["components"] = nlohmann::json::array();
    for (const auto &c : components) {
        nlohmann::json core = nlohmann::json::array();
        for (const auto &p : c.core)
            core.push_back(point(p));
        j["components"].push_back({{"level", c.level},
                                   {"sites", core},
                                   {"box_diameter", c.box_diameter},
                                   {"container_diameter", c.container_diameter},
                                   {"s_emp", c.s_emp},
                                   {"growth", c.growth}});
    }
    return j.dump();
}

int count_cross_box_pairs(const ChunkDecomposition &d, const std::vector<MatchDecision> &decisions,
                          const SiteGrid &grid) {
    std::vector<Box> boxes;
    for (int j = 0; j <= d.m; j++)
        for (const auto &c : d.components(j))
            boxes.push_back(bounding_box(c).expanded(1));
    int cross = 0;
    for (const auto &m : decisions) {
        if (m.kind != MatchKind::PairDefects)
            continue;
        Coord3 a = grid.site_of(m.u.pos);
        Coord3 b = grid.site_of(m.v.pos);
        bool shared = false;
        for (const auto &box : boxes)
            if (box.contains(a) && box.contains(b))
                shared = true;
        if (!shared)
            cross++;
    }
    return cross;
}

}  // namespace gjit
