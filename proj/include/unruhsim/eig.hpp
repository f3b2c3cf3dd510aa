// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "unruhsim/matrix.hpp"

namespace unruhsim {

struct EigenSystem {
    std::vector<double> values;          // ascending
    std::vector<std::vector<cplx>> vectors;  // vectors[k] belongs to values[k]
};

/// Cyclic complex Jacobi rotations; sweeps until the off-diagonal Frobenius
/// norm drops below 1e-13 (scaled by the matrix norm when that exceeds 1).
/// Throws std::invalid_argument when the input is not Hermitian to 1e-10.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace unruhsim
