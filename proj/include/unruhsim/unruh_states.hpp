// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <variant>

#include "unruhsim/density.hpp"
#include "unruhsim/fock.hpp"

namespace unruhsim {

/// Acceleration parameter of one Unruh mode. gamma in [0, pi/4] with
/// gamma = pi/4 the infinite-acceleration limit; q_r in [0, 1] weights the
/// right-wedge part of the Unruh mode, q_l = sqrt(1 - q_r^2) the left one
/// (both real throughout).
struct UnruhParams {
    double gamma;
    double q_r;
    double q_l;

    UnruhParams(double gamma, double q_r);
};

/// cos(gamma) = (exp(-2*pi*omega*c/a) + 1)^(-1/2); returns gamma in (0, pi/4).
double gamma_from_acceleration(double acceleration, double omega, double speed_of_light = 1.0);

/// Unruh vacuum of the Grassmann scalar:
/// cos^2 g |0000> - sin g cos g |0011> + sin g cos g |1100> - sin^2 g |1111>.
FockVector unruh_vacuum(const UnruhParams& params);

/// One-particle Unruh excitation:
/// q_r (cos g |1000> - sin g |1011>) + q_l (sin g |1101> + cos g |0001>).
FockVector unruh_particle(const UnruhParams& params);

/// One-antiparticle Unruh excitation:
/// q_l (cos g |0100> - sin g |0111>) + q_r (sin g |1110> + cos g |0010>).
FockVector unruh_antiparticle(const UnruhParams& params);

/// a^dag_U |0_U>: the Unruh particle creation operator
///   q_l (cos g a^dag_II - sin g b_I) + q_r (cos g a^dag_I - sin g b_II)
/// applied to the vacuum. Matches unruh_particle() under the canonical sign
/// convention; kept separate as the operator-level cross-check route.
FockVector unruh_particle_via_operators(const UnruhParams& params,
                                        SignConvention convention = SignConvention::canonical);

/// b^dag_U |0_U> with
///   b^dag_U = q_l (cos g b^dag_II + sin g a_I) + q_r (cos g b^dag_I + sin g a_II).
/// The plus signs on the annihilator parts are fixed by the closed-form
/// antiparticle state; note they differ from the particle operator.
FockVector unruh_antiparticle_via_operators(const UnruhParams& params,
                                            SignConvention convention = SignConvention::canonical);

enum class Family : std::uint8_t { phi_plus, phi_minus, phi_star, werner };

const char* family_name(Family family);
Family family_from_name(const std::string& name);

struct SharedStateSpec {
    Family family;
    double alpha = 0.0;                  // ignored for the Werner family
    std::optional<double> fidelity;      // required for the Werner family
};

using SharedState = std::variant<StateVector, DensityMatrix>;

/// The four shared-state families:
///   phi_plus:  cos a |0>_M |0>_U   + sin a |1>_M |1+>_U
///   phi_minus: cos a |0>_M |0>_U   + sin a |1>_M |1->_U
///   phi_star:  cos a |+>_M |1+>_U  + sin a |->_M |1->_U
///   werner:    F |phi_plus(pi/4)><phi_plus(pi/4)| + (1-F)/4 * identity on the
///              logical subspace spanned by {|0>_M,|1>_M} x {|0>_U,|1+>_U}.
/// Pure families return a StateVector; werner returns a 32x32 DensityMatrix.
SharedState build_shared_state(const SharedStateSpec& spec, const UnruhParams& params);

}  // namespace unruhsim
