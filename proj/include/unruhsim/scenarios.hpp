// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "unruhsim/density.hpp"
#include "unruhsim/unruh_states.hpp"

namespace unruhsim {

/// One of the six detector configurations: Bob in region I or antiBob in
/// region II, either unable to distinguish particles from antiparticles
/// (keeps both species modes of his region) or distinguishing (keeps one).
struct DetectorConfig {
    Region observer;
    bool distinguishing = false;
    Species species = Species::particle;  // meaningful only when distinguishing

    std::string name() const;
};

DetectorConfig detector_from_name(const std::string& name);
const std::vector<DetectorConfig>& all_detector_configs();

/// Canonical |pqmn> modes rearranged into the per-region physical order
/// (particle-I, antiparticle-I, particle-II, antiparticle-II). The
/// rearrangement moves the antiparticle-II operator past two others, so a
/// basis state picks up (-1)^{q(m+n)}; tracing on this register is what makes
/// the reduced matrices correspond to detector observations.
inline constexpr std::array<int, kModeCount> kPhysicalOrder{0, 3, 1, 2};

StateVector to_physical_order(const StateVector& state);
DensityMatrix to_physical_order(const DensityMatrix& rho);

/// Reduced density matrix for a detector configuration. Factor structure
/// [2,2,2] (Alice, then the observer's modes in physical order) for
/// non-distinguishing detectors, [2,2] for distinguishing ones.
DensityMatrix reduce_for(const DetectorConfig& config, const StateVector& state);
DensityMatrix reduce_for(const DetectorConfig& config, const DensityMatrix& rho);
DensityMatrix reduce_for(const DetectorConfig& config, const SharedState& state);

/// Alice-vs-retained-modes cut for a matrix produced by reduce_for.
BipartitionSpec alice_cut(const DensityMatrix& reduced);

struct ScenarioParams {
    Family family;
    double alpha = 0.0;
    std::optional<double> fidelity;
    double gamma = 0.0;
    double q_r = 1.0;
};

struct ScenarioResult {
    DensityMatrix reduced;
    double negativity = 0.0;
    ScenarioParams params;
    DetectorConfig config;
};

ScenarioResult scenario_negativity(const ScenarioParams& params, const DetectorConfig& config);

}  // namespace unruhsim
