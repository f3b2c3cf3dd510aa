// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace unruhsim {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim_; ++i)
        for (std::size_t j = 0; j < a.dim_; ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& v : data_) sum += std::norm(v);
    return std::sqrt(sum);
}

double ComplexMatrix::offdiag_frobenius_norm() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (i != j) sum += std::norm((*this)(i, j));
    return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::add_scaled(const ComplexMatrix& other, double weight) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += weight * other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::scale(double weight) {
    for (cplx& v : data_) v *= weight;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

}  // namespace unruhsim
