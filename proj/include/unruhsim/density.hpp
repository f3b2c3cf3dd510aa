// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "unruhsim/fock.hpp"
#include "unruhsim/matrix.hpp"

namespace unruhsim {

/// Which tensor factors belong to Alice and which to the retained Bob
/// subsystem. Indices refer to the factor list of the matrix they cut.
struct BipartitionSpec {
    std::vector<int> alice_factors;
    std::vector<int> bob_factors;
};

/// Square complex matrix with a recorded tensor-factor structure. Density
/// matrices are Hermitian, unit-trace and PSD; partial_transpose returns the
/// same type but may be indefinite, so validation is explicit.
struct DensityMatrix {
    ComplexMatrix mat;
    std::vector<int> factors;

    DensityMatrix() = default;
    DensityMatrix(ComplexMatrix m, std::vector<int> f);

    std::size_t dim() const { return mat.dim(); }

    /// Hermitian within 1e-12, trace 1 within 1e-12, min eigenvalue >= -1e-10.
    /// Throws std::runtime_error naming the violated invariant.
    void validate() const;
};

/// |psi><psi| on (Alice x four modes), factors [2,2,2,2,2].
/// Throws when the squared norm deviates from 1 by more than 1e-9.
DensityMatrix from_pure(const StateVector& state);

/// Reduced matrix on the kept factors (ascending factor indices), tracing the
/// rest. Keeping every factor is the identity operation.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Transpose of the indices of the chosen factors; involutive.
DensityMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& over);

/// N(rho) = sum |lambda| over the negative eigenvalues of the partial
/// transpose, taken over Alice's factors (negativity is invariant to the
/// side transposed). Eigenvalues above -1e-10 count as zero.
double negativity(const DensityMatrix& rho, const BipartitionSpec& cut);

inline constexpr double kNegativeEigenvalueFloor = -1e-10;

}  // namespace unruhsim
