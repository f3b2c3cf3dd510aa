// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace unruhsim {

namespace {

// One rotation zeroing a[p][q]. The 2x2 unitary is
//   [ c           -s e^{i phi} ]
//   [ s e^{-i phi}  c          ]
// with phi = arg(a_pq) and tan(2 theta) = 2|a_pq| / (a_pp - a_qq).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    const std::size_t n = a.dim();
    // columns: (A U)
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip + s * std::conj(phase) * aiq;
        a(i, q) = -s * phase * aip + c * aiq;
    }
    // rows: (U^dag A)
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j);
        const cplx aqj = a(q, j);
        a(p, j) = c * apj + s * phase * aqj;
        a(q, j) = -s * std::conj(phase) * apj + c * aqj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip + s * std::conj(phase) * viq;
        v(i, q) = -s * phase * vip + c * viq;
    }
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    if (m.hermiticity_error() > 1e-10)
        throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian");

    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize away the sub-1e-10 asymmetry so the rotations see an exactly
    // Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
        a(i, i) = a(i, i).real();
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double tol = 1e-13 * std::max(1.0, a.frobenius_norm());

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (a.offdiag_frobenius_norm() > tol) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("hermitian_eigensystem: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&a](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t k : order) {
        out.values.push_back(a(k, k).real());
        std::vector<cplx> vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = v(i, k);
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    return hermitian_eigensystem(m).values;
}

}  // namespace unruhsim
