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

#ifndef LATGATE_ENUMERATE_H
#define LATGATE_ENUMERATE_H

#include <cstdint>
#include <map>
#include <vector>

#include "latgate/exact.h"
#include "latgate/lattice.h"

namespace latgate {

struct ShortVector {
    std::vector<int64_t> coeffs;  // coefficients w.r.t. the lattice basis
    Rational norm;                // v (gram / norm_divisor) v^T
};

/// Nonzero lattice vectors of normalized norm <= bound, one representative per +/- pair
/// (the one whose last nonzero coefficient is positive), sorted lexicographically.
struct ShortVectorSet {
    Rational bound;
    std::vector<ShortVector> vectors;
    std::map<Rational, std::vector<size_t>> by_norm;

    /// Number of vectors counting both signs.
    size_t count() const {
        return 2 * vectors.size();
    }
    /// norm -> number of vectors counting both signs.
    std::map<Rational, size_t> counts_by_norm() const;
};

/// Complete Fincke-Pohst enumeration. Traversal runs in floating point with a safety margin;
/// every emitted vector is accepted by an exact integer norm check. Output is independent of
/// `threads`.
ShortVectorSet enumerate_short_vectors(const Lattice &l, const Rational &bound, unsigned threads = 1);

/// Same enumeration directly on a positive-definite rational Gram matrix.
ShortVectorSet enumerate_gram(const RationalMatrix &gram, const Rational &bound, unsigned threads = 1);

/// The vectors of minimal nonzero norm (both signs counted by `count()`).
ShortVectorSet minimal_vectors(const Lattice &l, unsigned threads = 1);

Rational minimum(const Lattice &l, unsigned threads = 1);
size_t kissing_number(const Lattice &l, unsigned threads = 1);

}  // namespace latgate

#endif
