// Copyright 2026 The latgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATGATE_NUMERICS_H
#define LATGATE_NUMERICS_H

#include <cstddef>
#include <vector>

#include "latgate/exact.h"

namespace latgate {

/// Dense square matrix of doubles, row-major.
struct RealMatrix {
    size_t n = 0;
    std::vector<double> a;

    RealMatrix() = default;
    explicit RealMatrix(size_t size) : n(size), a(size * size, 0.0) {
    }
    static RealMatrix identity(size_t size);

    double &operator()(size_t i, size_t j) {
        return a[i * n + j];
    }
    double operator()(size_t i, size_t j) const {
        return a[i * n + j];
    }
};

RealMatrix to_real(const RationalMatrix &m);
RealMatrix multiply(const RealMatrix &x, const RealMatrix &y);
double max_abs_diff(const RealMatrix &x, const RealMatrix &y);
double max_abs(const RealMatrix &x);

struct SymmetricSpectrum {
    std::vector<double> eigenvalues;  // non-increasing
    RealMatrix eigenvectors;          // column k belongs to eigenvalues[k]
    double residual = 0;              // max_k |A v_k - lambda_k v_k|_inf
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below 1e-14 * |A|_F.
/// Throws std::invalid_argument when the symmetry defect exceeds 1e-12.
SymmetricSpectrum sym_eigen(const RealMatrix &m);

/// Symmetric square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are clamped to zero;
/// anything more negative throws std::domain_error. When the exact rank is known, passing it
/// zeroes the trailing eigenvalues outright instead of taking roots of rounding noise.
RealMatrix psd_sqrt(const RealMatrix &m, size_t rank = static_cast<size_t>(-1));

}  // namespace latgate

#endif
