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


#ifndef GJIT_HARNESS_H
#define GJIT_HARNESS_H

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gjit/chunks.h"
#include "gjit/jit_decoder.h"
#include "gjit/lattice.h"
#include "gjit/noise.h"
#include "gjit/prefix.h"
#include "gjit/rg_decoder.h"

namespace gjit {

/// Bad configuration: CLI exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Layout : uint8_t { Local, Cylinder };

std::string layout_name(Layout l);
Layout parse_layout(const std::string &s);

struct ResourceEstimate {
    int64_t qubit_count = 0;
    int64_t time_units = 0;
    int64_t spacetime_volume = 0;
    int64_t transit_time = 0;

    std::string to_json() const;
};

/// Local: 10d^2 qubits, 3d time, 30d^3. Cylinder: 6d^2, 3d, 18d^3. Transit is
/// 2d in both.
ResourceEstimate estimate_resources(int d, Layout layout);

struct ExperimentConfig {
    std::vector<LatticeKind> lattices = {LatticeKind::Cubic};
    std::vector<int> L = {4, 6, 8};
    std::vector<double> eps = {0.001, 0.01};
    int trials = 1000;
    DecoderParams params;
    /// Prefix depth; 0 means L.
    int t_pre = 0;
    bool prefix = true;
    uint64_t seed = 1;
    Layout layout = Layout::Local;
    std::string output = "sweep.csv";
    /// Site side in lattice units for the spread audit.
    int site_side = 2;

    /// Throws ConfigError.
    void validate() const;
    std::string to_json() const;
    /// A JSON object, or `key = value` lines whose values are JSON literals
    /// (`#` starts a comment). Unknown keys are errors.
    static ExperimentConfig parse(const std::string &text);
    static ExperimentConfig load(const std::string &path);
};

/// Geometries shared by every trial at one L.
struct TrialGeometry {
    TrialGeometry(int L, int t_pre);

    LatticeGeometry main;
    LatticeGeometry partner;
    PrefixVolume prefix;
};

/// Replaces sampling: flips on the main volume (initial-face measurement flips
/// included), on the prefix slab, and Z flips on the partner.
struct PlantedErrors {
    ErrorSet main;
    std::vector<int> slab;
    std::vector<int> partner;
};

struct TrialRecord {
    uint64_t seed = 0;
    uint64_t trial = 0;
    int L = 0;
    double eps = 0.0;
    bool jit_success = false;
    bool hp_success = false;
    bool agreement = false;
    bool postselect_accept = false;
    double max_s_emp = 0.0;
    Outcome logical = Outcome::Success;
    double wall_ms = 0.0;
    int defects = 0;
    int flags = 0;
    int residual_weight = 0;

    /// Wall time is omitted so replays compare equal.
    std::string to_json(bool with_time = true) const;
};

struct TrialDetail {
    ErrorSet errors;
    std::vector<int> slab_flips;
    std::vector<int> flags;
    DefectSet defects;
    JitResult jit;
    RgResult hp;
    std::vector<int> residual_jit;
    std::vector<int> residual_hp;
    SpreadReport spread;
};

/// Prefix, random gauge, errors, JIT, global comparison decode, handoff to the
/// partner, partner decode and homology check. Deterministic per (seed, trial).
/// Throws std::logic_error on an internal inconsistency.
TrialRecord run_trial(const ExperimentConfig &config, const TrialGeometry &geometry, double eps, uint64_t trial,
                      const PlantedErrors *planted = nullptr, TrialDetail *detail = nullptr);
TrialRecord run_trial(const ExperimentConfig &config, int L, double eps, uint64_t trial);

/// Exact (Clopper-Pearson) two-sided interval.
std::pair<double, double> binomial_interval(int successes, int trials, double confidence = 0.95);

struct SweepRow {
    int L = 0;
    double eps = 0.0;
    int trials = 0;
    int failures = 0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double discard_rate = 0.0;
    int accepted = 0;
    int accepted_failures = 0;
    double max_spread = 0.0;
    double mean_spread = 0.0;

    double failure_rate() const;
    double accepted_failure_rate() const;
    std::string csv_line() const;
};

std::string sweep_csv_header();

/// Worker threads: GJIT_THREADS when set, else the hardware concurrency.
int thread_count();

/// Runs every (L, eps) point; each finished row is written and flushed to
/// `csv` when given.
std::vector<SweepRow> run_sweep(const ExperimentConfig &config, std::ostream *csv = nullptr);

std::string sweep_manifest(const ExperimentConfig &config, const std::vector<SweepRow> &rows);

}  // namespace gjit

#endif
