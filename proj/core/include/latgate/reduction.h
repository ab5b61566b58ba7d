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

#ifndef LATGATE_REDUCTION_H
#define LATGATE_REDUCTION_H

#include "latgate/exact.h"

namespace latgate {

/// Result of reducing a positive-definite Gram matrix: gram == transform * input * transform^T,
/// transform unimodular.
struct GramReduction {
    IntMatrix transform;
    RationalMatrix gram;
};

/// LLL reduction (delta = 99/100) carried out on the Gram matrix alone, exact rationals.
/// Throws std::domain_error if the Gram matrix is not positive definite.
GramReduction lll_reduce_gram(const RationalMatrix &gram);

/// Stable reordering of a reduction so that diagonal entries are non-decreasing.
GramReduction sort_by_norm(GramReduction r);

/// Exact LDL-style decomposition used by the enumerator:
/// x G x^T = sum_i d[i] * (x_i + sum_{j>i} u(i,j) x_j)^2.
struct QuadraticDecomposition {
    std::vector<Rational> d;
    RationalMatrix u;
};
QuadraticDecomposition quadratic_decomposition(const RationalMatrix &gram);

bool is_positive_definite(const RationalMatrix &gram);

}  // namespace latgate

#endif
