// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "unruhsim/unruh_states.hpp"

using namespace unruhsim;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

double max_diff(const FockVector& a, const FockVector& b) {
    double worst = 0.0;
    for (int i = 0; i < kFockDim; ++i) worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    return worst;
}

}  // namespace

TEST_CASE("gamma from acceleration: limits and closed-form point") {
    // a -> infinity: exponent -> 0, cos gamma -> 1/sqrt(2)
    CHECK(gamma_from_acceleration(1e12, 1.0) == doctest::Approx(kQuarterPi).epsilon(1e-9));
    // a -> 0+: gamma -> 0
    CHECK(gamma_from_acceleration(1e-2, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    // a = 2 pi omega c / ln 3  =>  cos gamma = sqrt(3)/2  =>  gamma = pi/6
    const double a = 2.0 * std::numbers::pi / std::log(3.0);
    CHECK(gamma_from_acceleration(a, 1.0) ==
          doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-14));
    CHECK(gamma_from_acceleration(2.0 * a, 2.0, 1.0) ==
          doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-14));

    CHECK_THROWS_AS((void)gamma_from_acceleration(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)gamma_from_acceleration(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("UnruhParams derives q_L and validates ranges") {
    const UnruhParams p(0.3, 0.6);
    CHECK(p.q_r * p.q_r + p.q_l * p.q_l == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(UnruhParams(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(UnruhParams(1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(UnruhParams(0.3, 1.5), std::invalid_argument);
}

TEST_CASE("vacuum at gamma = 0 is |0000>") {
    const FockVector v = unruh_vacuum(UnruhParams(0.0, 1.0));
    CHECK(v.amp[0b0000] == cplx{1.0});
    CHECK(v.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("vacuum at gamma = pi/4 has the printed four amplitudes") {
    const FockVector v = unruh_vacuum(UnruhParams(kQuarterPi, 1.0));
    CHECK(v.amp[0b0000].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v.amp[0b0011].real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(v.amp[0b1100].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(v.amp[0b1111].real() == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("vacuum norm is 1 across the gamma range") {
    for (int g = 0; g <= 100; ++g) {
        const FockVector v = unruh_vacuum(UnruhParams(kQuarterPi * g / 100, 0.5));
        CHECK(std::abs(v.norm_sq() - 1.0) <= 1e-14);
    }

    // Frozen spot value: gamma = pi/6 gives amplitudes (3/4, -sqrt(3)/4, ...).
    const FockVector v = unruh_vacuum(UnruhParams(std::numbers::pi / 6.0, 1.0));
    CHECK(v.amp[0b0000].real() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(v.amp[0b0011].real() == doctest::Approx(-std::sqrt(3.0) / 4.0).epsilon(1e-15));
    CHECK(inner_product(v, v).real() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("one-particle state limits") {
    CHECK(unruh_particle(UnruhParams(0.0, 1.0)).amp[0b1000] == cplx{1.0});
    CHECK(unruh_particle(UnruhParams(0.0, 0.0)).amp[0b0001] == cplx{1.0});
    CHECK(unruh_antiparticle(UnruhParams(0.0, 1.0)).amp[0b0010] == cplx{1.0});
    CHECK(unruh_antiparticle(UnruhParams(0.0, 0.0)).amp[0b0100] == cplx{1.0});
}

// The string direction is pinned here only through the closed-form
// coefficients it must reproduce. A residual freedom remains: rephasing any
// mode operator a_k -> e^{i t} a_k changes basis-ket phases in matched
// bra/ket pairs, so no reduced matrix or negativity value can detect it.
// These tests fix that freedom by asserting the printed amplitudes verbatim.
TEST_CASE("operator-level construction reproduces the closed forms") {
    for (int g = 0; g <= 20; ++g)
        for (int q = 0; q <= 10; ++q) {
            const UnruhParams p(kQuarterPi * g / 20, q / 10.0);
            CHECK(max_diff(unruh_particle_via_operators(p), unruh_particle(p)) <= 1e-12);
            CHECK(max_diff(unruh_antiparticle_via_operators(p), unruh_antiparticle(p)) <= 1e-12);
        }
}

TEST_CASE("alternate sign convention breaks the operator reproduction") {
    const UnruhParams p(0.5, 0.8);
    CHECK(max_diff(unruh_particle_via_operators(p, SignConvention::alternate),
                   unruh_particle(p)) > 1e-3);
}

TEST_CASE("vacuum and excitations are mutually orthogonal") {
    for (double q : {0.0, 0.3, 0.73, 1.0}) {
        const UnruhParams p(0.6, q);
        CHECK(std::abs(inner_product(unruh_vacuum(p), unruh_particle(p))) <= 1e-14);
        CHECK(std::abs(inner_product(unruh_vacuum(p), unruh_antiparticle(p))) <= 1e-14);
        CHECK(std::abs(inner_product(unruh_particle(p), unruh_antiparticle(p))) <= 1e-14);
    }
}

TEST_CASE("phi-plus at alpha = 0 is Alice-0 times the vacuum") {
    const UnruhParams p(0.4, 0.9);
    const auto state = std::get<StateVector>(
        build_shared_state({Family::phi_plus, 0.0, std::nullopt}, p));
    const FockVector vac = unruh_vacuum(p);
    for (int i = 0; i < kFockDim; ++i) {
        CHECK(state.at(0, static_cast<std::uint8_t>(i)) == vac.amp[i]);
        CHECK(state.at(1, static_cast<std::uint8_t>(i)) == cplx{0.0});
    }
}

TEST_CASE("phi-star at alpha=pi/4, gamma=0, qR=1 is (|+>|1000> + |->|0010>)/sqrt(2)") {
    const auto state = std::get<StateVector>(
        build_shared_state({Family::phi_star, kQuarterPi, std::nullopt}, UnruhParams(0.0, 1.0)));
    CHECK(state.basis == AliceBasis::plus_minus);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    CHECK(state.at(0, 0b1000).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(state.at(1, 0b0010).real() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(state.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pure families have unit norm over the parameter grid") {
    for (Family family : {Family::phi_plus, Family::phi_minus, Family::phi_star})
        for (double alpha : {0.2, kQuarterPi, 1.3})
            for (int g = 0; g <= 10; ++g)
                for (double q : {0.0, 0.5, 1.0}) {
                    const auto state = std::get<StateVector>(build_shared_state(
                        {family, alpha, std::nullopt}, UnruhParams(kQuarterPi * g / 10, q)));
                    CHECK(std::abs(state.norm_sq() - 1.0) <= 1e-14);
                }
}

TEST_CASE("werner state: fidelity handling") {
    const UnruhParams p(0.5, 0.73);
    CHECK_THROWS_AS((void)build_shared_state({Family::werner, kQuarterPi, std::nullopt}, p),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_shared_state({Family::werner, kQuarterPi, 1.2}, p),
                    std::invalid_argument);

    // F = 1 reduces to the pure phi-plus(pi/4) projector.
    const auto rho =
        std::get<DensityMatrix>(build_shared_state({Family::werner, kQuarterPi, 1.0}, p));
    const auto pure = std::get<StateVector>(
        build_shared_state({Family::phi_plus, kQuarterPi, std::nullopt}, p));
    CHECK(ComplexMatrix::max_abs_diff(rho.mat, from_pure(pure).mat) <= 1e-15);
}

TEST_CASE("werner state is a valid density matrix for all F") {
    for (double f : {0.0, 0.25, 0.5, 0.65, 0.95, 1.0}) {
        const auto rho = std::get<DensityMatrix>(
            build_shared_state({Family::werner, kQuarterPi, f}, UnruhParams(0.7, 0.4)));
        CHECK_NOTHROW(rho.validate());
    }
}
