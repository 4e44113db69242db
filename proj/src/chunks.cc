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

#include "gjit/chunks.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gjit {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

using Chunk = std::vector<int>;  // sorted site indices

struct ChunkInfo {
    Chunk sites;
    Box box;
};

bool disjoint(const Chunk &a, const Chunk &b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        if (a[i] < b[j])
            i++;
        else
            j++;
    }
    return true;
}

std::vector<Coord3> select(std::span<const Coord3> sites, const std::vector<uint8_t> &mask) {
    std::vector<Coord3> out;
    for (size_t i = 0; i < sites.size(); i++)
        if (mask[i])
            out.push_back(sites[i]);
    return out;
}

int find_root(std::vector<int> &parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

int max_matching(int n, const std::vector<ChunkInfo> &pairs) {
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> graph(n);
    for (const auto &c : pairs)
        boost::add_edge(c.sites[0], c.sites[1], graph);
    std::vector<boost::graph_traits<decltype(graph)>::vertex_descriptor> mate(n);
    boost::edmonds_maximum_cardinality_matching(graph, &mate[0]);
    return static_cast<int>(boost::matching_size(graph, &mate[0]));
}

// Depth-first search for `need` pairwise disjoint chunks from family[from..],
// avoiding `used`. Decrements `budget` per node; throws when exhausted.
bool packing_exists(const std::vector<ChunkInfo> &family, size_t from, std::vector<uint8_t> &used, int need,
                    int64_t &budget) {
    if (need == 0)
        return true;
    for (size_t i = from; i < family.size(); i++) {
        if (--budget < 0)
            throw std::runtime_error("packing budget");
        const auto &c = family[i].sites;
        bool ok = true;
        for (int s : c)
            ok &= !used[s];
        if (!ok)
            continue;
        for (int s : c)
            used[s] = 1;
        bool found = packing_exists(family, i + 1, used, need - 1, budget);
        for (int s : c)
            used[s] = 0;
        if (found)
            return true;
    }
    return false;
}

}  // namespace

int64_t DecoderParams::delta(int j) const {
    return static_cast<int64_t>(r * (s + 2) + 2) * saturating_pow(Q, j);
}

int64_t DecoderParams::fattened_diameter(int j) const {
    return static_cast<int64_t>(s + 2) * saturating_pow(Q, j);
}

std::vector<std::vector<Coord3>> connected_components(std::span<const Coord3> sites, int64_t radius) {
    const int n = static_cast<int>(sites.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (linf_distance(sites[i], sites[j]) <= radius)
                parent[find_root(parent, i)] = find_root(parent, j);
    std::vector<std::vector<Coord3>> by_root(n);
    for (int i = 0; i < n; i++)
        by_root[find_root(parent, i)].push_back(sites[i]);
    std::vector<std::vector<Coord3>> out;
    for (auto &c : by_root)
        if (!c.empty()) {
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coord3> ChunkDecomposition::F(int j) const {
    if (j < 0 || j >= static_cast<int>(levels.size()))
        return {};
    if (j + 1 >= static_cast<int>(levels.size()))
        return levels[j];
    std::vector<Coord3> out;
    std::set_difference(levels[j].begin(), levels[j].end(), levels[j + 1].begin(), levels[j + 1].end(),
                        std::back_inserter(out));
    return out;
}

std::vector<std::vector<Coord3>> ChunkDecomposition::components(int j) const {
    auto f = F(j);
    return connected_components(f, saturating_pow(Q, j));
}

std::string ChunkDecomposition::to_json() const {
    nlohmann::json j;
    j["Q"] = Q;
    j["m"] = m;
    j["overflow"] = overflow;
    j["levels"] = nlohmann::json::array();
    for (int n = 0; n <= m; n++) {
        nlohmann::json level;
        level["level"] = n;
        level["size"] = levels[n].size();
        level["components"] = nlohmann::json::array();
        for (const auto &comp : components(n)) {
            std::vector<Coord3> rest;
            std::set_difference(levels[n].begin(), levels[n].end(), comp.begin(), comp.end(),
                                std::back_inserter(rest));
            nlohmann::json c;
            c["sites"] = comp.size();
            c["diameter"] = diameter(comp);
            if (rest.empty())
                c["separation"] = nullptr;
            else
                c["separation"] = set_distance(comp, rest);
            level["components"].push_back(c);
        }
        j["levels"].push_back(level);
    }
    return j.dump();
}

ChunkDecomposition decompose(std::span<const Coord3> input, int Q, int64_t budget) {
    if (Q < 6)
        throw std::invalid_argument("chunk decomposition needs Q >= 6, got " + std::to_string(Q));
    ChunkDecomposition d;
    d.Q = Q;
    std::vector<Coord3> sites(input.begin(), input.end());
    std::sort(sites.begin(), sites.end());
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    const int n = static_cast<int>(sites.size());
    d.levels.push_back(sites);
    if (n == 0)
        return d;
    d.m = 0;
    const int64_t span = diameter(sites);

    std::vector<ChunkInfo> family;
    for (int i = 0; i < n; i++) {
        Box b;
        b.include(sites[i]);
        family.push_back({{i}, b});
    }
    int level = 1;
    // Levels whose diameter cap is below the span of the whole error need
    // explicit enumeration of chunks.
    for (;; level++) {
        const int64_t cap2 = saturating_pow(Q, level);  // 2 * (Q^level / 2)
        if (2 * span <= cap2)
            break;
        std::sort(family.begin(), family.end(), [](const ChunkInfo &a, const ChunkInfo &b) {
            return std::tie(a.box.lo.x, a.sites) < std::tie(b.box.lo.x, b.sites);
        });
        std::set<Chunk> seen;
        std::vector<ChunkInfo> next;
        int64_t work = 0;
        for (size_t i = 0; i < family.size(); i++) {
            for (size_t j = i + 1; j < family.size(); j++) {
                if (2LL * (family[j].box.lo.x - family[i].box.lo.x) > cap2)
                    break;
                if (++work > budget) {
                    d.overflow = true;
                    return d;
                }
                Box u = family[i].box;
                u.include(family[j].box);
                if (2LL * u.diameter() > cap2 || !disjoint(family[i].sites, family[j].sites))
                    continue;
                Chunk merged;
                std::merge(family[i].sites.begin(), family[i].sites.end(), family[j].sites.begin(),
                           family[j].sites.end(), std::back_inserter(merged));
                if (seen.insert(merged).second)
                    next.push_back({std::move(merged), u});
            }
        }
        if (next.empty())
            return d;
        std::vector<uint8_t> mask(n, 0);
        for (const auto &c : next)
            for (int s : c.sites)
                mask[s] = 1;
        d.levels.push_back(select(sites, mask));
        d.m = level;
        family = std::move(next);
    }

    // From here on the diameter cap never binds: a level-n chunk is any union
    // of 2^(n - base) disjoint chunks of the base level.
    const int base = level - 1;
    std::vector<uint8_t> base_mask(n, 0);
    for (const auto &c : family)
        for (int s : c.sites)
            base_mask[s] = 1;
    if (base == 0) {
        for (int k = 1; (int64_t{1} << k) <= n; k++) {
            d.levels.push_back(sites);
            d.m = k;
        }
        return d;
    }
    if (base == 1) {
        const int nu = max_matching(n, family);
        for (int k = 2; (int64_t{1} << (k - 1)) <= nu; k++) {
            d.levels.push_back(d.levels[1]);
            d.m = k;
        }
        return d;
    }
    int64_t remaining = budget;
    try {
        for (int extra = 1;; extra++) {
            const int need = 1 << extra;
            std::vector<uint8_t> mask(n, 0);
            std::vector<uint8_t> used(n, 0);
            for (const auto &c : family) {
                bool adds = false;
                for (int s : c.sites)
                    adds |= !mask[s];
                if (!adds)
                    continue;
                for (int s : c.sites)
                    used[s] = 1;
                bool ok = packing_exists(family, 0, used, need - 1, remaining);
                for (int s : c.sites)
                    used[s] = 0;
                if (ok)
                    for (int s : c.sites)
                        mask[s] = 1;
            }
            auto e = select(sites, mask);
            if (e.empty())
                break;
            d.levels.push_back(std::move(e));
            d.m = base + extra;
        }
    } catch (const std::runtime_error &) {
        d.overflow = true;
    }
    return d;
}

LemmaReport verify_diameter_lemma(const ChunkDecomposition &d) {
    LemmaReport report;
    for (int n = 0; n <= d.m; n++) {
        const int64_t qn = saturating_pow(d.Q, n);
        const int64_t qn1 = saturating_pow(d.Q, n + 1);
        for (const auto &comp : d.components(n)) {
            report.components_checked++;
            std::vector<Coord3> rest;
            std::set_difference(d.levels[n].begin(), d.levels[n].end(), comp.begin(), comp.end(),
                                std::back_inserter(rest));
            int64_t diam = diameter(comp);
            int64_t sep = rest.empty() ? kInf : set_distance(comp, rest);
            if (diam > qn)
                report.violations.push_back({n, comp, diam, sep, "diameter exceeds Q^n"});
            // sep > Q^{n+1}/3, compared in integers.
            if (sep < kInf && 3 * sep <= qn1)
                report.violations.push_back({n, comp, diam, sep, "separation not above Q^(n+1)/3"});
        }
    }
    return report;
}

BigFloat chunk_probability_bound(int64_t L, int Q, const BigFloat &p0, int m) {
    if (L <= 0 || Q <= 0 || m < 0)
        throw std::invalid_argument("bound arguments must be positive");
    BigFloat three_q = 3 * Q;
    BigFloat base = three_q * p0;
    for (int i = 0; i < m; i++)
        base *= base;
    BigFloat l = L;
    return l * l * l / boost::multiprecision::pow(three_q, 6) * base;
}

std::string format_big(const BigFloat &x, int digits) {
    return x.str(digits, std::ios_base::scientific);
}

ThresholdReport threshold_report(int Q, int N) {
    ThresholdReport r;
    r.Q = Q;
    r.N = N;
    r.p0_threshold = 1 / boost::multiprecision::pow(BigFloat(3 * Q), 6);
    r.eps_threshold = 1 - boost::multiprecision::pow(1 - r.p0_threshold, BigFloat(1) / N);
    r.ratio = r.quoted_eps / static_cast<double>(r.eps_threshold);
    return r;
}

std::string ThresholdReport::to_text() const {
    std::ostringstream out;
    out << "Q=" << Q << " N=" << N << " p0_threshold=(3Q)^-6=" << format_big(p0_threshold, 6)
        << " eps_threshold=" << format_big(eps_threshold, 6) << " quoted_eps=" << quoted_eps
        << " quoted/derived=" << ratio;
    return out.str();
}

int64_t Container::diameter2() const {
    if (kind == ContainerKind::RawBox)
        return 2LL * box.diameter();
    return 2LL * diameter(core) + 2 * radius2;
}

Container raw_box(std::span<const Coord3> component, int level) {
    Container c;
    c.kind = ContainerKind::RawBox;
    c.level = level;
    c.core.assign(component.begin(), component.end());
    c.box = bounding_box(component).expanded(1);
    return c;
}

Container make_container(std::span<const Coord3> component, int level, const DecoderParams &params) {
    Container c;
    c.kind = ContainerKind::Container;
    c.level = level;
    c.core.assign(component.begin(), component.end());
    c.radius2 = static_cast<int64_t>(params.s - 1) * saturating_pow(params.Q, level);
    return c;
}

Container make_fattened(const Container &c, const DecoderParams &params) {
    Container f = c;
    f.kind = ContainerKind::Fattened;
    f.radius2 += 2 * saturating_pow(params.Q, c.level);
    return f;
}

int64_t separation2(const Container &a, const Container &b) {
    int64_t best = kInf;
    if (a.kind == ContainerKind::RawBox && b.kind == ContainerKind::RawBox)
        return 2LL * linf_distance(a.box, b.box);
    if (a.kind == ContainerKind::RawBox || b.kind == ContainerKind::RawBox) {
        const Container &box = a.kind == ContainerKind::RawBox ? a : b;
        const Container &other = a.kind == ContainerKind::RawBox ? b : a;
        for (const auto &p : other.core)
            best = std::min<int64_t>(best, 2LL * linf_distance(p, box.box));
        return std::max<int64_t>(0, best - other.radius2);
    }
    best = 2LL * set_distance(a.core, b.core);
    return std::max<int64_t>(0, best - a.radius2 - b.radius2);
}

bool tethered(const Container &a, const Container &b, const DecoderParams &params) {
    int j = std::min(a.level, b.level);
    return separation2(a, b) <= 2 * params.delta(j);
}

TetherReport same_level_tethering(const ChunkDecomposition &d, const DecoderParams &params) {
    TetherReport report;
    for (int j = 0; j <= d.m; j++) {
        std::vector<Container> containers;
        for (const auto &comp : d.components(j))
            containers.push_back(make_container(comp, j, params));
        for (size_t a = 0; a < containers.size(); a++)
            for (size_t b = a + 1; b < containers.size(); b++) {
                report.pairs_checked++;
                report.same_level_tethered += tethered(containers[a], containers[b], params);
            }
    }
    return report;
}

}  // namespace gjit
