#include "gjit/jit_decoder.h"

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"

using namespace gjit;

namespace {

LatticeGeometry cubic(int L) {
    return build_lattice(LatticeKind::Cubic, L, BoundarySpec::rough_pair(Axis::Z));
}

Defect cube_defect(const LatticeGeometry &g, Coord3 pos) {
    int c = g.cell_index({ConstraintCell::Kind::Cube, pos});
    EXPECT_GE(c, 0);
    return Defect{c, pos, ConstraintCell::Kind::Cube, pos[g.time_axis()]};
}

GaugeOutcome flips(const LatticeGeometry &g, const std::vector<int> &plaquettes) {
    return plaquette_set(g, plaquettes);
}

std::vector<int> random_plaquettes(const LatticeGeometry &g, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution hit(p);
    std::vector<int> out;
    for (int i = 0; i < g.num_plaquettes(); i++)
        if (hit(rng))
            out.push_back(i);
    return out;
}

}  // namespace

TEST(Jit, NoDefectsNoDecisions) {
    auto g = cubic(5);
    auto result = run_jit(g, {});
    EXPECT_TRUE(result.decisions.empty());
    EXPECT_TRUE(result.correction.empty());
    EXPECT_EQ(result.max_lifetime, 0);
}

TEST(Jit, PairsOnceBothDeferralsReachSeparation) {
    auto g = cubic(8);
    JitDecoder jit(g);
    EXPECT_TRUE(jit.step({cube_defect(g, {0, 3, 3})}, 0).empty());
    EXPECT_TRUE(jit.step({}, 1).empty());
    EXPECT_TRUE(jit.step({cube_defect(g, {2, 3, 3})}, 2).empty());
    EXPECT_TRUE(jit.step({}, 3).empty());
    auto out = jit.step({}, 4);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].kind, MatchKind::PairDefects);
    EXPECT_EQ(out[0].t, 4);
    EXPECT_EQ(out[0].separation, 2);
    EXPECT_EQ(out[0].u.birth, 0);
    EXPECT_EQ(out[0].v.birth, 2);
    // The two deferral strings overlap from 3 to 4 and cancel there.
    std::vector<int> expect = {g.plaquette_index(FaceId{{1, 3, 3}, Axis::X}),
                               g.plaquette_index(FaceId{{2, 3, 3}, Axis::X})};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(out[0].plaquettes, expect);
    EXPECT_TRUE(jit.active().empty());
}

TEST(Jit, LoneDefectGoesToTheBoundaryAfterItsDistance) {
    auto g = cubic(8);
    JitDecoder jit(g);
    // y = 2: three faces from the y-min side, five from y-max.
    EXPECT_TRUE(jit.step({cube_defect(g, {1, 2, 4})}, 1).empty());
    EXPECT_TRUE(jit.step({}, 2).empty());
    EXPECT_TRUE(jit.step({}, 3).empty());
    auto out = jit.step({}, 4);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].kind, MatchKind::PairToBoundary);
    EXPECT_EQ(out[0].side, Side::YMin);
    EXPECT_EQ(out[0].separation, 3);
    EXPECT_EQ(out[0].t - out[0].u.birth, 3);
    EXPECT_EQ(out[0].plaquettes.size(), 6u);
}

TEST(Jit, RejectsOutOfOrderSlices) {
    auto g = cubic(5);
    JitDecoder jit(g);
    jit.step({}, 2);
    EXPECT_THROW(jit.step({}, 2), std::invalid_argument);
    EXPECT_THROW(jit.step({}, 1), std::invalid_argument);
    EXPECT_THROW(jit.step({cube_defect(g, {4, 1, 1})}, 3), std::invalid_argument);
    EXPECT_THROW(jit.step({}, 5), std::invalid_argument);
    EXPECT_THROW(JitDecoder(build_lattice(LatticeKind::Alternative, 4, BoundarySpec::rough_pair(Axis::Z))),
                 std::invalid_argument);
    EXPECT_THROW(JitDecoder(g, JitOptions{{Side::ZMin}, {}}), std::invalid_argument);
}

TEST(Jit, FlushUsesTheTerminalFace) {
    auto g = cubic(6);
    auto result = run_jit(g, {cube_defect(g, {5, 3, 3})});
    ASSERT_EQ(result.decisions.size(), 1u);
    EXPECT_EQ(result.decisions[0].side, Side::XMax);
    EXPECT_EQ(result.correction, std::vector<int>{g.plaquette_index(FaceId{{6, 3, 3}, Axis::X})});
}

TEST(Jit, DecisionsAreSoundCausalAndComplete) {
    auto g = cubic(8);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; trial++) {
        auto gauge = sample_random_gauge(g, 21, trial);
        auto meas = random_plaquettes(g, 0.01, rng);
        std::vector<int> observed = xor_sets(gauge.outcome.support(), meas);
        auto defects = extract_defects(g, flips(g, observed));
        auto result = run_jit(g, defects);
        EXPECT_EQ(result.lifetimes.size(), defects.size());

        std::vector<int> seen(defects.size(), 0);
        const int last = g.extent(Axis::X) - 1;
        for (const auto &d : result.decisions) {
            EXPECT_LE(d.u.birth, d.t);
            seen[d.u.id]++;
            if (d.kind == MatchKind::PairDefects) {
                seen[d.v.id]++;
                EXPECT_LE(d.v.birth, d.t);
                EXPECT_EQ(d.separation, linf_distance(d.u.pos, d.v.pos));
                EXPECT_GE(d.t - d.u.birth, d.separation);
                EXPECT_GE(d.t - d.v.birth, d.separation);
            } else if (d.side != Side::XMax) {
                EXPECT_TRUE(d.t == last || d.t - d.u.birth >= d.separation);
            }
        }
        for (int s : seen)
            EXPECT_EQ(s, 1);
        auto closed = flips(g, xor_sets(observed, result.correction));
        EXPECT_TRUE(extract_defects(g, closed).empty()) << "trial " << trial;
    }
}

TEST(Jit, DecisionLogIsJsonLines) {
    auto g = cubic(8);
    auto result = run_jit(g, {cube_defect(g, {0, 3, 3}), cube_defect(g, {2, 3, 3})});
    auto text = result.decisions_jsonl(g);
    ASSERT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
    auto j = nlohmann::json::parse(text.substr(0, text.find('\n')));
    EXPECT_EQ(j["kind"], "PairDefects");
    EXPECT_EQ(j["t"], 4);
    EXPECT_EQ(j["u"]["pos"], nlohmann::json::array({0, 3, 3}));
    EXPECT_EQ(j["v"]["birth"], 2);
    EXPECT_EQ(j["segments"].size(), 3u);

    auto single = run_jit(g, {cube_defect(g, {2, 0, 3})});
    auto b = nlohmann::json::parse(single.decisions[0].to_json(g));
    EXPECT_EQ(b["boundary"], "y-min");
    EXPECT_EQ(b["segments"][1][1], nlohmann::json::array({3, -1, 3}));
}

TEST(Spread, EmptyErrorGivesEmptyReport) {
    auto d = decompose(std::vector<Coord3>{}, 33);
    auto report = measure_spread(d, std::vector<Coord3>{});
    EXPECT_TRUE(report.components.empty());
    EXPECT_EQ(report.max_s_emp, 0.0);
}

TEST(Spread, ContainerGrowsToCoverItsShare) {
    std::vector<Coord3> sites = {{5, 5, 5}, {30, 30, 30}};
    auto d = decompose(sites, 33);
    ASSERT_EQ(d.m, 0);
    std::vector<Coord3> share = {{5, 5, 6}, {5, 8, 5}, {30, 30, 30}};
    auto report = measure_spread(d, share, 4);
    ASSERT_EQ(report.components.size(), 2u);
    EXPECT_EQ(report.components[0].container_diameter, 6);
    EXPECT_EQ(report.components[0].box_diameter, 2);
    EXPECT_DOUBLE_EQ(report.components[0].growth, 3.0);
    EXPECT_EQ(report.components[1].container_diameter, 2);
    EXPECT_DOUBLE_EQ(report.max_s_emp, 6.0);
    auto j = nlohmann::json::parse(report.to_json());
    EXPECT_EQ(j["max_lifetime"], 4);
    EXPECT_EQ(j["components"][0]["level"], 0);
}

// Single-site components in the bulk: every flip anchored at one cell.
TEST(Spread, IsolatedBulkComponentsStayWithinThree) {
    auto g = cubic(12);
    std::mt19937_64 rng(8);
    const SiteGrid grid{1};
    for (int trial = 0; trial < 300; trial++) {
        std::uniform_int_distribution<int> coord(4, 6);
        Coord3 site{coord(rng), coord(rng), coord(rng)};
        std::vector<int> meas;
        for (Axis a : kAxes)
            if (std::bernoulli_distribution(0.5)(rng))
                meas.push_back(g.plaquette_index(FaceId{site, a}));
        if (meas.empty())
            meas.push_back(g.plaquette_index(FaceId{site, Axis::X}));
        auto defects = extract_defects(g, flips(g, meas));
        auto result = run_jit(g, defects);
        EXPECT_LE(result.max_lifetime, 2 * (1 + 2));

        std::vector<Coord3> share;
        for (const auto &d : defects)
            share.push_back(grid.site_of(d.pos));
        for (int p : xor_sets(meas, result.correction))
            share.push_back(plaquette_site(g, p, grid));
        auto dec = decompose(std::vector<Coord3>{site}, 33);
        auto report = measure_spread(dec, share, result.max_lifetime);
        EXPECT_LE(report.max_s_emp, 3.0);
        for (const auto &c : report.components)
            EXPECT_GE(c.growth, 1.0);
        EXPECT_EQ(count_cross_box_pairs(dec, result.decisions, grid), 0);
    }
}
