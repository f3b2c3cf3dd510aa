// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include "unruhsim/matrix.hpp"

namespace unruhsim {

enum class Region : std::uint8_t { I, II };
enum class Species : std::uint8_t { particle, antiparticle };

/// One fermionic mode of the four-mode frequency sector.
///
/// Canonical order matches the |pqmn> basis label: position 0 is the
/// region-I particle (p), 1 the region-II antiparticle (q), 2 the region-I
/// antiparticle (m), 3 the region-II particle (n). All sign bookkeeping is
/// relative to this order.
struct ModeId {
    int index;
    Region region;
    Species species;
};

inline constexpr int kModeCount = 4;
inline constexpr int kFockDim = 16;
inline constexpr int kAliceDim = 2;
inline constexpr int kStateDim = kAliceDim * kFockDim;

const ModeId& mode(int index);
const ModeId& mode(Region region, Species species);

/// Occupation pattern over the canonical modes. The basis index reads the
/// same as the printed label: |pqmn> has index p*8 + q*4 + m*2 + n.
struct FockBasisState {
    std::uint8_t index = 0;

    bool occupied(int mode_index) const { return (index >> (3 - mode_index)) & 1u; }

    FockBasisState with_flipped(int mode_index) const {
        return {static_cast<std::uint8_t>(index ^ (1u << (3 - mode_index)))};
    }

    /// Occupied modes at canonical positions strictly before mode_index.
    int occupied_before(int mode_index) const;
    int occupied_after(int mode_index) const;

    std::string label() const;  // "pqmn"
};

/// Direction of the Jordan-Wigner string. `canonical` counts occupied modes
/// earlier in the |pqmn> order and is the convention that reproduces the
/// closed-form one-particle states from the operator construction;
/// `alternate` counts later modes and is kept for ordering-sensitivity runs.
enum class SignConvention : std::uint8_t { canonical, alternate };

/// Amplitudes over the 16-dimensional four-mode Fock sector.
struct FockVector {
    std::array<cplx, kFockDim> amp{};

    static FockVector basis(std::uint8_t index);

    double norm_sq() const;
    bool is_zero(double tol = 0.0) const;
};

FockVector apply_creation(const FockVector& state, const ModeId& mode,
                          SignConvention convention = SignConvention::canonical);
FockVector apply_annihilation(const FockVector& state, const ModeId& mode,
                              SignConvention convention = SignConvention::canonical);
cplx inner_product(const FockVector& a, const FockVector& b);

FockVector operator+(const FockVector& a, const FockVector& b);
FockVector operator*(cplx scale, const FockVector& v);

/// Which two-dimensional basis Alice's label refers to.
enum class AliceBasis : std::uint8_t { zero_one, plus_minus };

/// Composite state on (Alice qubit) x (four-mode Fock sector); 32 amplitudes
/// with Alice as the most significant factor.
struct StateVector {
    AliceBasis basis = AliceBasis::zero_one;
    std::array<cplx, kStateDim> amp{};

    static StateVector embed(int alice, const FockVector& fock,
                             AliceBasis basis = AliceBasis::zero_one);

    cplx& at(int alice, std::uint8_t fock) { return amp[alice * kFockDim + fock]; }
    const cplx& at(int alice, std::uint8_t fock) const { return amp[alice * kFockDim + fock]; }

    FockVector fock_block(int alice) const;

    double norm_sq() const;
};

StateVector apply_creation(const StateVector& state, const ModeId& mode,
                           SignConvention convention = SignConvention::canonical);
StateVector apply_annihilation(const StateVector& state, const ModeId& mode,
                               SignConvention convention = SignConvention::canonical);

/// Hermitian inner product <a|b>, conjugate-linear in `a`. Throws on
/// mismatched Alice basis labels.
cplx inner_product(const StateVector& a, const StateVector& b);

StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator*(cplx scale, const StateVector& v);

/// Sign picked up when the canonical mode operators of an occupation pattern
/// are rearranged into the order given by perm (perm[k] = new position of
/// canonical mode k): parity of transpositions restricted to occupied modes.
int reorder_sign(std::uint8_t bits, const std::array<int, kModeCount>& perm);

std::uint8_t reorder_bits(std::uint8_t bits, const std::array<int, kModeCount>& perm);

FockVector reorder_modes(const FockVector& v, const std::array<int, kModeCount>& perm);
StateVector reorder_modes(const StateVector& v, const std::array<int, kModeCount>& perm);

}  // namespace unruhsim
