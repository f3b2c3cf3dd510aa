// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/unruh_states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruhsim {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

// Basis indices named by their |pqmn> labels.
constexpr std::uint8_t k0000 = 0b0000, k0001 = 0b0001, k0010 = 0b0010, k0100 = 0b0100;
constexpr std::uint8_t k0011 = 0b0011, k0111 = 0b0111, k1000 = 0b1000, k1011 = 0b1011;
constexpr std::uint8_t k1100 = 0b1100, k1101 = 0b1101, k1110 = 0b1110, k1111 = 0b1111;

}  // namespace

UnruhParams::UnruhParams(double gamma_, double q_r_) : gamma(gamma_), q_r(q_r_) {
    if (!(gamma >= 0.0 && gamma <= kQuarterPi + 1e-12))
        throw std::invalid_argument("UnruhParams: gamma must lie in [0, pi/4]");
    if (!(q_r >= 0.0 && q_r <= 1.0))
        throw std::invalid_argument("UnruhParams: q_r must lie in [0, 1]");
    q_l = std::sqrt(std::max(0.0, 1.0 - q_r * q_r));
}

double gamma_from_acceleration(double acceleration, double omega, double speed_of_light) {
    if (acceleration <= 0.0) throw std::invalid_argument("gamma_from_acceleration: a must be > 0");
    if (omega <= 0.0) throw std::invalid_argument("gamma_from_acceleration: omega must be > 0");
    if (speed_of_light <= 0.0) throw std::invalid_argument("gamma_from_acceleration: c must be > 0");
    const double expo = std::exp(-2.0 * std::numbers::pi * omega * speed_of_light / acceleration);
    return std::acos(1.0 / std::sqrt(expo + 1.0));
}

FockVector unruh_vacuum(const UnruhParams& p) {
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    FockVector v;
    v.amp[k0000] = c * c;
    v.amp[k0011] = -s * c;
    v.amp[k1100] = s * c;
    v.amp[k1111] = -s * s;
    return v;
}

FockVector unruh_particle(const UnruhParams& p) {
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    FockVector v;
    v.amp[k1000] = p.q_r * c;
    v.amp[k1011] = -p.q_r * s;
    v.amp[k1101] = p.q_l * s;
    v.amp[k0001] = p.q_l * c;
    return v;
}

FockVector unruh_antiparticle(const UnruhParams& p) {
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    FockVector v;
    v.amp[k0100] = p.q_l * c;
    v.amp[k0111] = -p.q_l * s;
    v.amp[k1110] = p.q_r * s;
    v.amp[k0010] = p.q_r * c;
    return v;
}

FockVector unruh_particle_via_operators(const UnruhParams& p, SignConvention convention) {
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    const FockVector vac = unruh_vacuum(p);

    const ModeId& particle_i = mode(Region::I, Species::particle);
    const ModeId& particle_ii = mode(Region::II, Species::particle);
    const ModeId& anti_i = mode(Region::I, Species::antiparticle);
    const ModeId& anti_ii = mode(Region::II, Species::antiparticle);

    // A^dag_R = cos g a^dag_I - sin g b_II ; A^dag_L = cos g a^dag_II - sin g b_I
    const FockVector right = cplx{c} * apply_creation(vac, particle_i, convention) +
                             cplx{-s} * apply_annihilation(vac, anti_ii, convention);
    const FockVector left = cplx{c} * apply_creation(vac, particle_ii, convention) +
                            cplx{-s} * apply_annihilation(vac, anti_i, convention);
    return cplx{p.q_r} * right + cplx{p.q_l} * left;
}

FockVector unruh_antiparticle_via_operators(const UnruhParams& p, SignConvention convention) {
    const double c = std::cos(p.gamma), s = std::sin(p.gamma);
    const FockVector vac = unruh_vacuum(p);

    const ModeId& particle_i = mode(Region::I, Species::particle);
    const ModeId& particle_ii = mode(Region::II, Species::particle);
    const ModeId& anti_i = mode(Region::I, Species::antiparticle);
    const ModeId& anti_ii = mode(Region::II, Species::antiparticle);

    // B^dag_R = cos g b^dag_I + sin g a_II ; B^dag_L = cos g b^dag_II + sin g a_I
    const FockVector right = cplx{c} * apply_creation(vac, anti_i, convention) +
                             cplx{s} * apply_annihilation(vac, particle_ii, convention);
    const FockVector left = cplx{c} * apply_creation(vac, anti_ii, convention) +
                            cplx{s} * apply_annihilation(vac, particle_i, convention);
    return cplx{p.q_r} * right + cplx{p.q_l} * left;
}

const char* family_name(Family family) {
    switch (family) {
        case Family::phi_plus: return "phi-plus";
        case Family::phi_minus: return "phi-minus";
        case Family::phi_star: return "phi-star";
        case Family::werner: return "werner";
    }
    throw std::logic_error("unreachable");
}

Family family_from_name(const std::string& name) {
    if (name == "phi-plus") return Family::phi_plus;
    if (name == "phi-minus") return Family::phi_minus;
    if (name == "phi-star") return Family::phi_star;
    if (name == "werner") return Family::werner;
    throw std::invalid_argument("unknown family: " + name);
}

SharedState build_shared_state(const SharedStateSpec& spec, const UnruhParams& params) {
    const double ca = std::cos(spec.alpha), sa = std::sin(spec.alpha);

    switch (spec.family) {
        case Family::phi_plus:
            return cplx{ca} * StateVector::embed(0, unruh_vacuum(params)) +
                   cplx{sa} * StateVector::embed(1, unruh_particle(params));
        case Family::phi_minus:
            return cplx{ca} * StateVector::embed(0, unruh_vacuum(params)) +
                   cplx{sa} * StateVector::embed(1, unruh_antiparticle(params));
        case Family::phi_star:
            return cplx{ca} * StateVector::embed(0, unruh_particle(params), AliceBasis::plus_minus) +
                   cplx{sa} * StateVector::embed(1, unruh_antiparticle(params), AliceBasis::plus_minus);
        case Family::werner: {
            if (!spec.fidelity)
                throw std::invalid_argument("build_shared_state: werner requires a fidelity");
            const double f = *spec.fidelity;
            if (f < 0.0 || f > 1.0)
                throw std::invalid_argument("build_shared_state: fidelity must lie in [0, 1]");

            const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
            const StateVector bell =
                cplx{inv_sqrt2} * StateVector::embed(0, unruh_vacuum(params)) +
                cplx{inv_sqrt2} * StateVector::embed(1, unruh_particle(params));

            // Maximally mixed state on the logical two-qubit subspace
            // {|0>_M,|1>_M} x {|0>_U,|1+>_U}; the Unruh pair is orthonormal
            // for every parameter value.
            const std::array<StateVector, 4> logical{
                StateVector::embed(0, unruh_vacuum(params)),
                StateVector::embed(0, unruh_particle(params)),
                StateVector::embed(1, unruh_vacuum(params)),
                StateVector::embed(1, unruh_particle(params)),
            };

            DensityMatrix rho = from_pure(bell);
            rho.mat.scale(f);
            for (const StateVector& basis_state : logical)
                rho.mat.add_scaled(from_pure(basis_state).mat, (1.0 - f) / 4.0);
            return rho;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace unruhsim
