// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace unruhsim {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Small dimensions only (<= 32 in
/// this project), so no blocking or sparsity.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const noexcept { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    static ComplexMatrix identity(std::size_t dim);

    ComplexMatrix adjoint() const;
    cplx trace() const;

    /// max_ij |a_ij - b_ij|
    static double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

    double hermiticity_error() const;   // max |a_ij - conj(a_ji)|
    double frobenius_norm() const;
    double offdiag_frobenius_norm() const;

    ComplexMatrix& add_scaled(const ComplexMatrix& other, double weight);
    ComplexMatrix& scale(double weight);

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace unruhsim
