// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/fock.hpp"

#include <stdexcept>

namespace unruhsim {

namespace {

constexpr std::array<ModeId, kModeCount> kModes{{
    {0, Region::I, Species::particle},
    {1, Region::II, Species::antiparticle},
    {2, Region::I, Species::antiparticle},
    {3, Region::II, Species::particle},
}};

int string_sign(const FockBasisState& basis, int mode_index, SignConvention convention) {
    const int count = convention == SignConvention::canonical
                          ? basis.occupied_before(mode_index)
                          : basis.occupied_after(mode_index);
    return (count & 1) ? -1 : 1;
}

}  // namespace

const ModeId& mode(int index) {
    if (index < 0 || index >= kModeCount) throw std::invalid_argument("mode index out of range");
    return kModes[index];
}

const ModeId& mode(Region region, Species species) {
    for (const ModeId& m : kModes)
        if (m.region == region && m.species == species) return m;
    throw std::logic_error("unreachable");
}

int FockBasisState::occupied_before(int mode_index) const {
    int count = 0;
    for (int k = 0; k < mode_index; ++k) count += occupied(k);
    return count;
}

int FockBasisState::occupied_after(int mode_index) const {
    int count = 0;
    for (int k = mode_index + 1; k < kModeCount; ++k) count += occupied(k);
    return count;
}

std::string FockBasisState::label() const {
    std::string s(4, '0');
    for (int k = 0; k < kModeCount; ++k)
        if (occupied(k)) s[k] = '1';
    return s;
}

FockVector FockVector::basis(std::uint8_t index) {
    FockVector v;
    v.amp[index] = 1.0;
    return v;
}

double FockVector::norm_sq() const {
    double sum = 0.0;
    for (const cplx& a : amp) sum += std::norm(a);
    return sum;
}

bool FockVector::is_zero(double tol) const {
    for (const cplx& a : amp)
        if (std::abs(a) > tol) return false;
    return true;
}

FockVector apply_creation(const FockVector& state, const ModeId& mode, SignConvention convention) {
    FockVector out;
    for (int i = 0; i < kFockDim; ++i) {
        if (state.amp[i] == cplx{}) continue;
        const FockBasisState basis{static_cast<std::uint8_t>(i)};
        if (basis.occupied(mode.index)) continue;  // Pauli exclusion
        const int sign = string_sign(basis, mode.index, convention);
        out.amp[basis.with_flipped(mode.index).index] += double(sign) * state.amp[i];
    }
    return out;
}

FockVector apply_annihilation(const FockVector& state, const ModeId& mode, SignConvention convention) {
    FockVector out;
    for (int i = 0; i < kFockDim; ++i) {
        if (state.amp[i] == cplx{}) continue;
        const FockBasisState basis{static_cast<std::uint8_t>(i)};
        if (!basis.occupied(mode.index)) continue;
        // Same string as creation: the sign depends on the other modes only.
        const FockBasisState lowered = basis.with_flipped(mode.index);
        const int sign = string_sign(lowered, mode.index, convention);
        out.amp[lowered.index] += double(sign) * state.amp[i];
    }
    return out;
}

cplx inner_product(const FockVector& a, const FockVector& b) {
    cplx sum = 0.0;
    for (int i = 0; i < kFockDim; ++i) sum += std::conj(a.amp[i]) * b.amp[i];
    return sum;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
    FockVector out;
    for (int i = 0; i < kFockDim; ++i) out.amp[i] = a.amp[i] + b.amp[i];
    return out;
}

FockVector operator*(cplx scale, const FockVector& v) {
    FockVector out;
    for (int i = 0; i < kFockDim; ++i) out.amp[i] = scale * v.amp[i];
    return out;
}

StateVector StateVector::embed(int alice, const FockVector& fock, AliceBasis basis) {
    StateVector out;
    out.basis = basis;
    for (int i = 0; i < kFockDim; ++i) out.at(alice, static_cast<std::uint8_t>(i)) = fock.amp[i];
    return out;
}

FockVector StateVector::fock_block(int alice) const {
    FockVector out;
    for (int i = 0; i < kFockDim; ++i) out.amp[i] = at(alice, static_cast<std::uint8_t>(i));
    return out;
}

double StateVector::norm_sq() const {
    double sum = 0.0;
    for (const cplx& a : amp) sum += std::norm(a);
    return sum;
}

StateVector apply_creation(const StateVector& state, const ModeId& mode, SignConvention convention) {
    StateVector out;
    out.basis = state.basis;
    for (int alice = 0; alice < kAliceDim; ++alice) {
        const FockVector block = apply_creation(state.fock_block(alice), mode, convention);
        for (int i = 0; i < kFockDim; ++i) out.at(alice, static_cast<std::uint8_t>(i)) = block.amp[i];
    }
    return out;
}

StateVector apply_annihilation(const StateVector& state, const ModeId& mode, SignConvention convention) {
    StateVector out;
    out.basis = state.basis;
    for (int alice = 0; alice < kAliceDim; ++alice) {
        const FockVector block = apply_annihilation(state.fock_block(alice), mode, convention);
        for (int i = 0; i < kFockDim; ++i) out.at(alice, static_cast<std::uint8_t>(i)) = block.amp[i];
    }
    return out;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.basis != b.basis)
        throw std::invalid_argument("inner_product: mismatched Alice basis labels");
    cplx sum = 0.0;
    for (int i = 0; i < kStateDim; ++i) sum += std::conj(a.amp[i]) * b.amp[i];
    return sum;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
    if (a.basis != b.basis) throw std::invalid_argument("operator+: mismatched Alice basis labels");
    StateVector out;
    out.basis = a.basis;
    for (int i = 0; i < kStateDim; ++i) out.amp[i] = a.amp[i] + b.amp[i];
    return out;
}

StateVector operator*(cplx scale, const StateVector& v) {
    StateVector out;
    out.basis = v.basis;
    for (int i = 0; i < kStateDim; ++i) out.amp[i] = scale * v.amp[i];
    return out;
}

int reorder_sign(std::uint8_t bits, const std::array<int, kModeCount>& perm) {
    const FockBasisState basis{bits};
    int inversions = 0;
    for (int i = 0; i < kModeCount; ++i)
        for (int j = i + 1; j < kModeCount; ++j)
            if (basis.occupied(i) && basis.occupied(j) && perm[i] > perm[j]) ++inversions;
    return (inversions & 1) ? -1 : 1;
}

std::uint8_t reorder_bits(std::uint8_t bits, const std::array<int, kModeCount>& perm) {
    const FockBasisState basis{bits};
    std::uint8_t out = 0;
    for (int k = 0; k < kModeCount; ++k)
        if (basis.occupied(k)) out |= static_cast<std::uint8_t>(1u << (3 - perm[k]));
    return out;
}

FockVector reorder_modes(const FockVector& v, const std::array<int, kModeCount>& perm) {
    FockVector out;
    for (int i = 0; i < kFockDim; ++i) {
        if (v.amp[i] == cplx{}) continue;
        const auto bits = static_cast<std::uint8_t>(i);
        out.amp[reorder_bits(bits, perm)] += double(reorder_sign(bits, perm)) * v.amp[i];
    }
    return out;
}

StateVector reorder_modes(const StateVector& v, const std::array<int, kModeCount>& perm) {
    StateVector out;
    out.basis = v.basis;
    for (int alice = 0; alice < kAliceDim; ++alice) {
        const FockVector block = reorder_modes(v.fock_block(alice), perm);
        for (int i = 0; i < kFockDim; ++i) out.at(alice, static_cast<std::uint8_t>(i)) = block.amp[i];
    }
    return out;
}

}  // namespace unruhsim
