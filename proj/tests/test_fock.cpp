// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unruhsim/fock.hpp"
#include "unruhsim/scenarios.hpp"

using namespace unruhsim;

namespace {

FockVector random_fock(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    FockVector v;
    for (auto& a : v.amp) a = cplx{unit(rng), unit(rng)};
    const double norm = std::sqrt(v.norm_sq());
    for (auto& a : v.amp) a /= norm;
    return v;
}

constexpr std::uint8_t bits(const char* label) {
    std::uint8_t b = 0;
    for (int k = 0; k < 4; ++k) b = static_cast<std::uint8_t>((b << 1) | (label[k] == '1'));
    return b;
}

}  // namespace

TEST_CASE("canonical mode order matches the |pqmn> label") {
    CHECK(mode(0).region == Region::I);
    CHECK(mode(0).species == Species::particle);
    CHECK(mode(1).region == Region::II);
    CHECK(mode(1).species == Species::antiparticle);
    CHECK(mode(2).region == Region::I);
    CHECK(mode(2).species == Species::antiparticle);
    CHECK(mode(3).region == Region::II);
    CHECK(mode(3).species == Species::particle);
    CHECK(FockBasisState{bits("1000")}.label() == "1000");
    CHECK(FockBasisState{bits("0110")}.occupied(1));
    CHECK(FockBasisState{bits("0110")}.occupied(2));
    CHECK(!FockBasisState{bits("0110")}.occupied(0));
}

TEST_CASE("creation on the empty sector carries sign +1") {
    const FockVector out = apply_creation(FockVector::basis(bits("0000")), mode(0));
    CHECK(out.amp[bits("1000")] == cplx{1.0});
    CHECK(out.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("creation on an occupied mode annihilates the state") {
    const FockVector out = apply_creation(FockVector::basis(bits("1000")), mode(0));
    CHECK(out.is_zero());
}

TEST_CASE("creation past one occupied mode picks up the string sign") {
    // |1000> -> antiparticle-II creation crosses the occupied particle-I mode.
    const FockVector out =
        apply_creation(FockVector::basis(bits("1000")), mode(Region::II, Species::antiparticle));
    CHECK(out.amp[bits("1100")] == cplx{-1.0});
}

TEST_CASE("annihilation examples") {
    CHECK(apply_annihilation(FockVector::basis(bits("1000")), mode(0)).amp[bits("0000")] ==
          cplx{1.0});
    for (int m = 0; m < kModeCount; ++m)
        CHECK(apply_annihilation(FockVector::basis(0), mode(m)).is_zero());
}

TEST_CASE("nilpotency on every basis state and both conventions") {
    for (auto conv : {SignConvention::canonical, SignConvention::alternate})
        for (int b = 0; b < kFockDim; ++b)
            for (int m = 0; m < kModeCount; ++m) {
                const auto basis = FockVector::basis(static_cast<std::uint8_t>(b));
                CHECK(apply_creation(apply_creation(basis, mode(m), conv), mode(m), conv)
                          .is_zero());
                CHECK(apply_annihilation(apply_annihilation(basis, mode(m), conv), mode(m), conv)
                          .is_zero());
            }
}

TEST_CASE("anticommutators are exactly delta_ij on every basis state") {
    for (auto conv : {SignConvention::canonical, SignConvention::alternate})
        for (int b = 0; b < kFockDim; ++b)
            for (int i = 0; i < kModeCount; ++i)
                for (int j = 0; j < kModeCount; ++j) {
                    const auto basis = FockVector::basis(static_cast<std::uint8_t>(b));
                    const FockVector mixed =
                        apply_annihilation(apply_creation(basis, mode(j), conv), mode(i), conv) +
                        apply_creation(apply_annihilation(basis, mode(i), conv), mode(j), conv);
                    for (int k = 0; k < kFockDim; ++k) {
                        const cplx expected = (i == j && k == b) ? cplx{1.0} : cplx{0.0};
                        CHECK(mixed.amp[k] == expected);
                    }
                    if (i != j) {
                        const FockVector cc =
                            apply_creation(apply_creation(basis, mode(j), conv), mode(i), conv) +
                            apply_creation(apply_creation(basis, mode(i), conv), mode(j), conv);
                        CHECK(cc.is_zero());
                    }
                }
}

TEST_CASE("number operator reads off the occupation") {
    for (int b = 0; b < kFockDim; ++b)
        for (int m = 0; m < kModeCount; ++m) {
            const auto basis = FockVector::basis(static_cast<std::uint8_t>(b));
            const FockVector n = apply_creation(apply_annihilation(basis, mode(m)), mode(m));
            const double expected = FockBasisState{static_cast<std::uint8_t>(b)}.occupied(m);
            CHECK(n.amp[b] == cplx{expected});
        }
}

TEST_CASE("annihilation is the matrix adjoint of creation") {
    for (int m = 0; m < kModeCount; ++m) {
        ComplexMatrix up(kFockDim), down(kFockDim);
        for (int b = 0; b < kFockDim; ++b) {
            const auto col_up = apply_creation(FockVector::basis(static_cast<std::uint8_t>(b)),
                                               mode(m));
            const auto col_down =
                apply_annihilation(FockVector::basis(static_cast<std::uint8_t>(b)), mode(m));
            for (int r = 0; r < kFockDim; ++r) {
                up(static_cast<std::size_t>(r), static_cast<std::size_t>(b)) = col_up.amp[r];
                down(static_cast<std::size_t>(r), static_cast<std::size_t>(b)) = col_down.amp[r];
            }
        }
        CHECK(ComplexMatrix::max_abs_diff(down, up.adjoint()) <= 1e-15);
    }
}

TEST_CASE("adjoint property on random states") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const FockVector psi = random_fock(rng);
        const FockVector phi = random_fock(rng);
        for (int m = 0; m < kModeCount; ++m) {
            const cplx lhs = inner_product(psi, apply_annihilation(phi, mode(m)));
            const cplx rhs = std::conj(inner_product(phi, apply_creation(psi, mode(m))));
            CHECK(std::abs(lhs - rhs) <= 1e-14);
        }
    }
}

TEST_CASE("inner product basics") {
    std::mt19937 rng(11);
    const FockVector v = random_fock(rng);
    CHECK(inner_product(v, v).real() == doctest::Approx(1.0));
    CHECK(std::abs(inner_product(FockVector::basis(bits("0000")),
                                 FockVector::basis(bits("1000")))) == 0.0);

    const StateVector a = StateVector::embed(0, v, AliceBasis::zero_one);
    const StateVector b = StateVector::embed(0, v, AliceBasis::plus_minus);
    CHECK_THROWS_AS((void)inner_product(a, b), std::invalid_argument);
}

TEST_CASE("mode operators act blockwise on composite states") {
    StateVector psi;
    psi.at(0, bits("0000")) = std::sqrt(0.5);
    psi.at(1, bits("1000")) = std::sqrt(0.5);
    const StateVector raised = apply_creation(psi, mode(Region::II, Species::antiparticle));
    CHECK(raised.at(0, bits("0100")).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    // Alice-1 block crosses the occupied particle-I mode.
    CHECK(raised.at(1, bits("1100")).real() == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));

    const StateVector lowered = apply_annihilation(raised, mode(Region::II, Species::antiparticle));
    for (int i = 0; i < kStateDim; ++i) CHECK(std::abs(lowered.amp[i] - psi.amp[i]) <= 1e-15);
}

TEST_CASE("mode reordering carries fermionic permutation signs") {
    // Canonical -> physical order: q moves past m and n.
    CHECK(reorder_sign(bits("0100"), kPhysicalOrder) == 1);
    CHECK(reorder_sign(bits("0110"), kPhysicalOrder) == -1);  // q and m occupied
    CHECK(reorder_sign(bits("0101"), kPhysicalOrder) == -1);  // q and n occupied
    CHECK(reorder_sign(bits("0111"), kPhysicalOrder) == 1);   // q, m, n occupied
    CHECK(reorder_sign(bits("1111"), kPhysicalOrder) == 1);

    CHECK(reorder_bits(bits("0100"), kPhysicalOrder) == bits("0001"));
    CHECK(reorder_bits(bits("1101"), kPhysicalOrder) == bits("1011"));

    // Double application of an involutive permutation is the identity.
    std::mt19937 rng(23);
    const FockVector v = random_fock(rng);
    const std::array<int, 4> swap_first_two{1, 0, 2, 3};
    const FockVector twice = reorder_modes(reorder_modes(v, swap_first_two), swap_first_two);
    for (int i = 0; i < kFockDim; ++i) CHECK(std::abs(twice.amp[i] - v.amp[i]) <= 1e-15);

    // Reordering preserves norms (signed permutation).
    const FockVector w = reorder_modes(v, kPhysicalOrder);
    CHECK(w.norm_sq() == doctest::Approx(v.norm_sq()).epsilon(1e-14));
}
