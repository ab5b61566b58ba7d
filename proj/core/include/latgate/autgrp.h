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

#ifndef LATGATE_AUTGRP_H
#define LATGATE_AUTGRP_H

#include <cstdint>
#include <string>
#include <vector>

#include "latgate/enumerate.h"
#include "latgate/exact.h"
#include "latgate/lattice.h"
#include "latgate/perm_group.h"

namespace latgate {

/// Action on basis coefficients: v -> v U for coefficient rows v.
struct IntegralAutomorphism {
    IntMatrix u;
};

/// Action on ambient coordinates: x -> x B. Related to U by U = M B M^-1.
struct OrthogonalGate {
    RationalMatrix b;
};

struct Verdict {
    bool ok = true;
    std::string reason;  // empty when ok

    explicit operator bool() const {
        return ok;
    }
};

/// Exact checks: B B^T = I, then M B M^-1 integral with det +-1.
Verdict is_automorphism(const Lattice &l, const OrthogonalGate &b);
/// Exact checks: U G U^T = G and |det U| = 1.
Verdict is_automorphism(const Lattice &l, const IntegralAutomorphism &u);

/// B = M^-1 U M. Throws std::domain_error if U does not preserve the Gram matrix.
OrthogonalGate natural_action(const Lattice &l, const IntegralAutomorphism &u);
/// U = M B M^-1. Throws std::domain_error if the result is not integral.
IntegralAutomorphism integral_action(const Lattice &l, const OrthogonalGate &b);

struct SearchBudget {
    uint64_t max_nodes = 0;   // 0 = unlimited
    double max_seconds = 0;   // 0 = unlimited
    unsigned threads = 1;     // used for enumeration and fingerprints
    bool reduce_generators = true;
};

struct AutGroupResult {
    std::vector<IntegralAutomorphism> generators;
    Integer order = 1;
    std::vector<size_t> orbit_sizes;  // order == product, when complete
    bool complete = true;             // false: budget ran out, order is only a lower bound
    uint64_t nodes = 0;
    size_t candidate_vectors = 0;     // both signs
};

/// Backtrack search over images of an LLL-reduced basis among short vectors, with
/// inner-product fingerprints and orbit pruning. Generators are in the lattice's own basis.
AutGroupResult automorphism_group(const Lattice &l, const SearchBudget &budget = {});
/// Same search for a positive definite Gram matrix; generators act on its coordinates.
AutGroupResult automorphism_group(const RationalMatrix &gram, const SearchBudget &budget = {});

/// Short vectors up to the largest norm in an LLL-reduced basis. The set contains a basis, so
/// every automorphism is determined by the permutation it induces on it.
ShortVectorSet faithful_vector_set(const Lattice &l, unsigned threads = 1);

/// Permutation induced on `vectors` (both signs; point 2k is vectors[k], 2k+1 its negative).
/// Throws std::domain_error if u does not map the set onto itself.
Perm induced_permutation(const IntMatrix &u, const ShortVectorSet &vectors);

/// Exact order of the group generated by `gens` acting on the short-vector set.
Integer order_on_vectors(const std::vector<IntegralAutomorphism> &gens, const ShortVectorSet &vectors);

/// true iff order_on_vectors(gens, vectors) == claimed.
bool group_order_check(const std::vector<IntegralAutomorphism> &gens, const Integer &claimed,
                       const ShortVectorSet &vectors);

}  // namespace latgate

#endif
