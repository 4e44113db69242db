#include "gjit/harness.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "json.hpp"

using namespace gjit;

TEST(Resources, MatchClosedForms) {
    for (int d = 1; d <= 25; d++) {
        auto local = estimate_resources(d, Layout::Local);
        auto cyl = estimate_resources(d, Layout::Cylinder);
        const int64_t d3 = int64_t{d} * d * d;
        EXPECT_EQ(local.qubit_count, 10 * d * d);
        EXPECT_EQ(local.time_units, 3 * d);
        EXPECT_EQ(local.spacetime_volume, 30 * d3);
        EXPECT_EQ(cyl.qubit_count, 6 * d * d);
        EXPECT_EQ(cyl.spacetime_volume, 18 * d3);
        EXPECT_EQ(local.transit_time, 2 * d);
        EXPECT_EQ(cyl.qubit_count * 5, local.qubit_count * 3);
    }
    EXPECT_THROW(estimate_resources(0, Layout::Local), std::invalid_argument);
    EXPECT_EQ(nlohmann::json::parse(estimate_resources(3, Layout::Cylinder).to_json())["spacetime_volume"], 486);
}

TEST(Config, ParsesKeyValueAndJson) {
    auto c = ExperimentConfig::parse(
        "# sweep\n"
        "L = [4, 6]\n"
        "eps = 0.002   # one point\n"
        "trials = 50\n"
        "layout = \"Cylinder\"\n"
        "prefix = false\n"
        "output = \"out#1.csv\"\n");
    EXPECT_EQ(c.L, (std::vector<int>{4, 6}));
    EXPECT_EQ(c.eps, std::vector<double>{0.002});
    EXPECT_EQ(c.trials, 50);
    EXPECT_EQ(c.layout, Layout::Cylinder);
    EXPECT_FALSE(c.prefix);
    EXPECT_EQ(c.output, "out#1.csv");

    auto j = ExperimentConfig::parse(R"({"L": 5, "Q": 33, "seed": 9, "lattices": ["cubic", "alternative"]})");
    EXPECT_EQ(j.L, std::vector<int>{5});
    EXPECT_EQ(j.params.Q, 33);
    EXPECT_EQ(j.seed, 9u);
    EXPECT_EQ(j.lattices.size(), 2u);
    EXPECT_EQ(ExperimentConfig::parse(j.to_json()).to_json(), j.to_json());
}

TEST(Config, RejectsBadInput) {
    EXPECT_THROW(ExperimentConfig::parse("trials = 0"), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("L = [4, 1]"), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("eps = 2"), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("colour = 3"), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("L 4"), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("L = [4,"), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("layout = \"Ring\""), ConfigError);
    EXPECT_THROW(ExperimentConfig::parse("lattice = \"hex\""), ConfigError);
    EXPECT_THROW(ExperimentConfig::load("/nonexistent/gjit.toml"), ConfigError);
}

TEST(Stats, ExactBinomialInterval) {
    auto [lo0, hi0] = binomial_interval(0, 1000);
    EXPECT_EQ(lo0, 0.0);
    EXPECT_NEAR(hi0, 1.0 - std::pow(0.025, 1.0 / 1000), 1e-12);
    auto [lo, hi] = binomial_interval(50, 100);
    EXPECT_NEAR(lo, 0.398321, 1e-6);
    EXPECT_NEAR(hi, 0.601679, 1e-6);
}

TEST(Trial, NoiselessTrialSucceedsWithoutCorrections) {
    ExperimentConfig config;
    TrialGeometry geometry(4, 0);
    TrialDetail detail;
    auto rec = run_trial(config, geometry, 0.0, 3, nullptr, &detail);
    EXPECT_TRUE(rec.jit_success);
    EXPECT_TRUE(rec.hp_success);
    EXPECT_TRUE(rec.agreement);
    EXPECT_TRUE(rec.postselect_accept);
    EXPECT_EQ(rec.logical, Outcome::Success);
    EXPECT_TRUE(detail.jit.correction.empty());
    EXPECT_TRUE(detail.hp.links.empty());
    EXPECT_TRUE(detail.residual_jit.empty());
    EXPECT_TRUE(detail.spread.components.empty());
    EXPECT_EQ(rec.max_s_emp, 0.0);
}

TEST(Trial, PrefixingRemovesAnInitialFaceFlip) {
    const int L = 8;
    TrialGeometry geometry(L, 0);
    const auto &slab = geometry.prefix.slab;
    int p = slab.plaquette_index(FaceId{{L, L / 2, L / 2}, Axis::X});
    ASSERT_GE(p, 0);
    PlantedErrors planted;
    planted.slab = {p};

    ExperimentConfig without;
    without.prefix = false;
    TrialDetail bad;
    auto r0 = run_trial(without, geometry, 0.0, 0, &planted, &bad);
    EXPECT_EQ(bad.defects.size(), 1u);
    EXPECT_GE(r0.residual_weight, L / 2);

    ExperimentConfig with;
    TrialDetail good;
    auto r1 = run_trial(with, geometry, 0.0, 0, &planted, &good);
    EXPECT_EQ(good.flags, std::vector<int>{geometry.prefix.to_main[p]});
    EXPECT_TRUE(good.defects.empty());
    EXPECT_EQ(r1.residual_weight, 0);
    EXPECT_TRUE(r1.jit_success);
}

TEST(Trial, ReplayIsBitIdentical) {
    ExperimentConfig config;
    config.seed = 77;
    TrialGeometry geometry(6, 0);
    for (uint64_t t = 0; t < 20; t++) {
        auto a = run_trial(config, geometry, 0.01, t);
        auto b = run_trial(config, geometry, 0.01, t);
        EXPECT_EQ(a.to_json(false), b.to_json(false));
    }
    EXPECT_THROW(run_trial(ExperimentConfig::parse("lattices = [\"alternative\"]"), 4, 0.0, 0), ConfigError);
}

TEST(Trial, ConservesSyndromeUnderNoise) {
    ExperimentConfig config;
    TrialGeometry geometry(6, 0);
    int accepted = 0;
    for (uint64_t t = 0; t < 100; t++) {
        TrialDetail d;
        auto rec = run_trial(config, geometry, 0.01, t, nullptr, &d);
        accepted += rec.postselect_accept;
        EXPECT_EQ(rec.postselect_accept, rec.agreement);
        for (const auto &c : d.spread.components)
            EXPECT_GE(c.growth, 1.0);
    }
    EXPECT_GT(accepted, 50);
}

TEST(Sweep, WritesCsvRowsAndIsReproducible) {
    auto config = ExperimentConfig::parse("L = [4]\neps = [0.0, 0.01]\ntrials = 30\nseed = 5");
    std::ostringstream a, b;
    auto rows = run_sweep(config, &a);
    run_sweep(config, &b);
    EXPECT_EQ(a.str(), b.str());
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].failures, 0);
    EXPECT_EQ(rows[0].discard_rate, 0.0);
    EXPECT_TRUE(a.str().starts_with("L,eps,trials,failures,ci_lo,ci_hi,discard_rate,accepted_failures,max_spread\n"));
    EXPECT_LE(rows[1].accepted_failure_rate(), rows[1].failure_rate() + 1e-12);
    auto m = nlohmann::json::parse(sweep_manifest(config, rows));
    EXPECT_EQ(m["config"]["trials"], 30);
    EXPECT_EQ(m["rows"].size(), 2u);
    EXPECT_EQ(m["config_hash"].get<std::string>().size(), 16u);
}
