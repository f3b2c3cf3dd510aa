// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/scenarios.hpp"

#include <stdexcept>

namespace unruhsim {

namespace {

// Kept factor indices on the physical register [Alice, p-I, ap-I, p-II, ap-II].
std::vector<int> kept_factors(const DetectorConfig& config) {
    if (!config.distinguishing)
        return config.observer == Region::I ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 3, 4};
    if (config.observer == Region::I)
        return config.species == Species::particle ? std::vector<int>{0, 1} : std::vector<int>{0, 2};
    return config.species == Species::particle ? std::vector<int>{0, 3} : std::vector<int>{0, 4};
}

}  // namespace

std::string DetectorConfig::name() const {
    std::string base = observer == Region::I ? "AB_I" : "AB_II";
    if (!distinguishing) return base;
    return base + (species == Species::particle ? "-particle" : "-antiparticle");
}

DetectorConfig detector_from_name(const std::string& name) {
    for (const DetectorConfig& c : all_detector_configs())
        if (c.name() == name) return c;
    throw std::invalid_argument("unknown detector config: " + name);
}

const std::vector<DetectorConfig>& all_detector_configs() {
    static const std::vector<DetectorConfig> configs{
        {Region::I, false, Species::particle},
        {Region::II, false, Species::particle},
        {Region::I, true, Species::particle},
        {Region::I, true, Species::antiparticle},
        {Region::II, true, Species::particle},
        {Region::II, true, Species::antiparticle},
    };
    return configs;
}

StateVector to_physical_order(const StateVector& state) {
    return reorder_modes(state, kPhysicalOrder);
}

DensityMatrix to_physical_order(const DensityMatrix& rho) {
    if (rho.dim() != kStateDim)
        throw std::invalid_argument("to_physical_order: expected the full 32-dim matrix");

    // Signed permutation of the composite index: Alice digit kept, Fock bits
    // rearranged with the fermionic reordering sign.
    std::array<std::size_t, kStateDim> target{};
    std::array<double, kStateDim> sign{};
    for (int alice = 0; alice < kAliceDim; ++alice)
        for (int f = 0; f < kFockDim; ++f) {
            const auto bits = static_cast<std::uint8_t>(f);
            const std::size_t i = static_cast<std::size_t>(alice) * kFockDim + f;
            target[i] = static_cast<std::size_t>(alice) * kFockDim + reorder_bits(bits, kPhysicalOrder);
            sign[i] = reorder_sign(bits, kPhysicalOrder);
        }

    ComplexMatrix out(kStateDim);
    for (std::size_t i = 0; i < kStateDim; ++i)
        for (std::size_t j = 0; j < kStateDim; ++j)
            out(target[i], target[j]) = sign[i] * sign[j] * rho.mat(i, j);
    return DensityMatrix(std::move(out), rho.factors);
}

DensityMatrix reduce_for(const DetectorConfig& config, const StateVector& state) {
    return partial_trace(from_pure(to_physical_order(state)), kept_factors(config));
}

DensityMatrix reduce_for(const DetectorConfig& config, const DensityMatrix& rho) {
    if (rho.dim() != kStateDim)
        throw std::invalid_argument("reduce_for: expected the full (Alice x modes) matrix");
    return partial_trace(to_physical_order(rho), kept_factors(config));
}

DensityMatrix reduce_for(const DetectorConfig& config, const SharedState& state) {
    if (const auto* pure = std::get_if<StateVector>(&state)) return reduce_for(config, *pure);
    return reduce_for(config, std::get<DensityMatrix>(state));
}

BipartitionSpec alice_cut(const DensityMatrix& reduced) {
    BipartitionSpec cut;
    cut.alice_factors = {0};
    for (int k = 1; k < static_cast<int>(reduced.factors.size()); ++k) cut.bob_factors.push_back(k);
    return cut;
}

ScenarioResult scenario_negativity(const ScenarioParams& params, const DetectorConfig& config) {
    const UnruhParams unruh(params.gamma, params.q_r);
    const SharedState state =
        build_shared_state({params.family, params.alpha, params.fidelity}, unruh);

    ScenarioResult result{reduce_for(config, state), 0.0, params, config};
    result.negativity = negativity(result.reduced, alice_cut(result.reduced));
    return result;
}

}  // namespace unruhsim
