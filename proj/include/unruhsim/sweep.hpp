// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "unruhsim/scenarios.hpp"

namespace unruhsim {

struct GammaGrid {
    double start = 0.0;
    double stop = 0.0;   // defaulted to pi/4 by SweepConfig
    int steps = 181;     // 0.25-degree resolution over [0, pi/4]
};

struct SweepConfig {
    Family family = Family::phi_plus;
    std::vector<DetectorConfig> configs;
    std::vector<double> alphas;
    std::vector<double> q_rs;
    std::vector<double> fidelities;  // Werner only; must stay empty otherwise
    GammaGrid grid;
    std::string out_path;
    int workers = 1;

    SweepConfig();
};

/// One evaluated grid point.
struct CurveRecord {
    Family family;
    DetectorConfig config;
    double alpha;
    double q_r;
    double fidelity;  // NaN for pure families
    double gamma;
    double negativity;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const SweepConfig& config);

/// All grid points in deterministic (config, alpha, q_r, F, gamma) order,
/// evaluated with the configured number of worker threads.
std::vector<CurveRecord> evaluate_sweep(const SweepConfig& config);

/// Writes the CSV (header + one row per record) to config.out_path.
/// Byte-identical across runs for identical configs.
void run_sweep(const SweepConfig& config);

void write_csv(std::ostream& os, const std::vector<CurveRecord>& records);

/// Built-in figure-data presets "fig2" ... "fig8".
SweepConfig preset(const std::string& name);
std::vector<std::string> preset_names();

/// key=value sweep file, one pair per line, '#' comments. Keys: family,
/// configs, alpha, qr, fidelity, gamma-start, gamma-stop, gamma-steps, out,
/// workers. List values are comma-separated.
SweepConfig parse_config_file(const std::string& path);

/// Locale-independent formatting with 12 significant digits.
std::string format_real(double value);

}  // namespace unruhsim
