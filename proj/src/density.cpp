// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "unruhsim/eig.hpp"

namespace unruhsim {

namespace {

std::size_t factor_product(const std::vector<int>& factors) {
    std::size_t p = 1;
    for (int f : factors) p *= static_cast<std::size_t>(f);
    return p;
}

// Row-major strides of the factor list.
std::vector<std::size_t> strides_of(const std::vector<int>& factors) {
    std::vector<std::size_t> strides(factors.size(), 1);
    for (std::size_t k = factors.size(); k-- > 1;)
        strides[k - 1] = strides[k] * static_cast<std::size_t>(factors[k]);
    return strides;
}

void check_factor_subset(const std::vector<int>& subset, std::size_t nfactors, const char* what) {
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] < 0 || static_cast<std::size_t>(subset[k]) >= nfactors)
            throw std::invalid_argument(std::string(what) + ": factor index out of range");
        if (k > 0 && subset[k] <= subset[k - 1])
            throw std::invalid_argument(std::string(what) + ": factor indices must be ascending");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::vector<int> f)
    : mat(std::move(m)), factors(std::move(f)) {
    if (factor_product(factors) != mat.dim())
        throw std::invalid_argument("DensityMatrix: factor list does not match dimension");
}

void DensityMatrix::validate() const {
    if (mat.hermiticity_error() > 1e-12)
        throw std::runtime_error("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(mat.trace() - cplx{1.0}) > 1e-12)
        throw std::runtime_error("DensityMatrix: trace deviates from 1 beyond 1e-12");
    const std::vector<double> eigs = hermitian_eigenvalues(mat);
    if (!eigs.empty() && eigs.front() < -1e-10)
        throw std::runtime_error("DensityMatrix: negative eigenvalue below -1e-10");
}

DensityMatrix from_pure(const StateVector& state) {
    if (std::abs(state.norm_sq() - 1.0) > 1e-9)
        throw std::invalid_argument("from_pure: state is not normalized within 1e-9");
    ComplexMatrix m(kStateDim);
    for (int i = 0; i < kStateDim; ++i)
        for (int j = 0; j < kStateDim; ++j) m(i, j) = state.amp[i] * std::conj(state.amp[j]);
    return DensityMatrix(std::move(m), {2, 2, 2, 2, 2});
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
    check_factor_subset(keep, rho.factors.size(), "partial_trace");

    std::vector<int> traced;
    for (std::size_t k = 0; k < rho.factors.size(); ++k)
        if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end())
            traced.push_back(static_cast<int>(k));

    const auto strides = strides_of(rho.factors);

    std::vector<int> kept_dims;
    for (int k : keep) kept_dims.push_back(rho.factors[k]);
    const std::size_t out_dim = factor_product(kept_dims);
    const auto out_strides = strides_of(kept_dims);

    std::size_t traced_count = 1;
    for (int t : traced) traced_count *= static_cast<std::size_t>(rho.factors[t]);

    // Base offset of each kept multi-index in the full matrix.
    std::vector<std::size_t> kept_offset(out_dim, 0);
    for (std::size_t a = 0; a < out_dim; ++a)
        for (std::size_t k = 0; k < keep.size(); ++k) {
            const std::size_t digit = (a / out_strides[k]) % static_cast<std::size_t>(kept_dims[k]);
            kept_offset[a] += digit * strides[static_cast<std::size_t>(keep[k])];
        }

    std::vector<std::size_t> traced_offset(traced_count, 0);
    if (!traced.empty()) {
        const auto tdims = [&] {
            std::vector<int> d;
            for (int t : traced) d.push_back(rho.factors[t]);
            return d;
        }();
        const auto tstr = strides_of(tdims);
        for (std::size_t t = 0; t < traced_count; ++t)
            for (std::size_t k = 0; k < traced.size(); ++k) {
                const std::size_t digit = (t / tstr[k]) % static_cast<std::size_t>(tdims[k]);
                traced_offset[t] += digit * strides[static_cast<std::size_t>(traced[k])];
            }
    }

    ComplexMatrix out(out_dim);
    for (std::size_t a = 0; a < out_dim; ++a)
        for (std::size_t b = 0; b < out_dim; ++b) {
            cplx sum = 0.0;
            for (std::size_t t = 0; t < traced_count; ++t)
                sum += rho.mat(kept_offset[a] + traced_offset[t], kept_offset[b] + traced_offset[t]);
            out(a, b) = sum;
        }
    return DensityMatrix(std::move(out), std::move(kept_dims));
}

DensityMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& over) {
    check_factor_subset(over, rho.factors.size(), "partial_transpose");

    const auto strides = strides_of(rho.factors);
    const std::size_t dim = rho.dim();

    ComplexMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            std::size_t ti = 0, tj = 0;
            for (std::size_t f = 0; f < rho.factors.size(); ++f) {
                const std::size_t stride = strides[f];
                const auto d = static_cast<std::size_t>(rho.factors[f]);
                std::size_t di = (i / stride) % d;
                std::size_t dj = (j / stride) % d;
                if (std::find(over.begin(), over.end(), static_cast<int>(f)) != over.end())
                    std::swap(di, dj);
                ti += di * stride;
                tj += dj * stride;
            }
            out(ti, tj) = rho.mat(i, j);
        }
    return DensityMatrix(std::move(out), rho.factors);
}

double negativity(const DensityMatrix& rho, const BipartitionSpec& cut) {
    std::vector<int> alice = cut.alice_factors;
    std::sort(alice.begin(), alice.end());
    for (int b : cut.bob_factors)
        if (std::find(alice.begin(), alice.end(), b) != alice.end())
            throw std::invalid_argument("negativity: bipartition factor sets overlap");
    if (alice.size() + cut.bob_factors.size() != rho.factors.size())
        throw std::invalid_argument("negativity: bipartition does not cover all factors");

    for (int b : cut.bob_factors)
        if (b < 0 || static_cast<std::size_t>(b) >= rho.factors.size())
            throw std::invalid_argument("negativity: bob factor index out of range");

    const DensityMatrix pt = partial_transpose(rho, alice);
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(pt.mat))
        if (lambda < kNegativeEigenvalueFloor) sum += -lambda;
    return sum;
}

}  // namespace unruhsim
