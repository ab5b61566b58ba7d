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

#ifndef LATGATE_PERM_GROUP_H
#define LATGATE_PERM_GROUP_H

#include <cstdint>
#include <vector>

#include "latgate/exact.h"

namespace latgate {

/// Permutation of {0, ..., n-1}; p[x] is the image of x.
using Perm = std::vector<uint32_t>;

Perm identity_perm(size_t degree);
/// First `a`, then `b`.
Perm compose(const Perm &a, const Perm &b);
Perm inverse(const Perm &p);
bool is_identity(const Perm &p);

/// Base and strong generating set built by Schreier-Sims.
class StabilizerChain {
   public:
    explicit StabilizerChain(size_t degree);

    /// Exact chain: a randomized phase (fixed seed) followed by a deterministic check of
    /// every Schreier generator.
    static StabilizerChain build(size_t degree, const std::vector<Perm> &generators);

    /// Randomized phase only. Stops once the order reaches `target` (if nonzero) or after
    /// `max_idle` consecutive random elements sift through. The result is a lower bound on
    /// the order of the generated group.
    static StabilizerChain build_random(size_t degree, const std::vector<Perm> &generators, const Integer &target,
                                        size_t max_idle, uint64_t seed = 0x6c617467617465ULL);

    /// Exact chain over a known base. The pointwise stabilizer of `base` in the generated group
    /// must be trivial; sifting then only follows base images, and full permutations are
    /// formed only when a strong generator is added. Throws std::invalid_argument if a
    /// nontrivial element fixing every base point turns up.
    static StabilizerChain build_with_base(size_t degree, const std::vector<Perm> &generators,
                                           const std::vector<uint32_t> &base, size_t max_idle = 40,
                                           uint64_t seed = 0x6c617467617465ULL);

    size_t degree() const {
        return degree_;
    }
    Integer order() const;
    std::vector<size_t> orbit_sizes() const;
    std::vector<uint32_t> base() const;
    size_t strong_generator_count() const {
        return strong_.size();
    }
    bool contains(const Perm &p) const;

   private:
    struct Level {
        uint32_t point;
        std::vector<size_t> gens;    // indices into strong_
        std::vector<uint32_t> orbit;
        std::vector<int32_t> edge;   // -1 outside orbit, -2 root, else position in gens
    };

    /// Residue after sifting from `start`, and the level where sifting stopped
    /// (levels_.size() if it passed every level).
    std::pair<Perm, size_t> sift(Perm g, size_t start) const;
    void add_strong_generator(const Perm &h, size_t deepest_level);
    void rebuild_orbit(size_t level);
    Perm transversal(size_t level, uint32_t point) const;
    void complete();

    using Images = std::vector<uint32_t>;
    std::pair<Images, size_t> sift_images(Images img, size_t start) const;
    bool images_trivial(const Images &img) const;
    void complete_with_base();

    bool fixed_base_ = false;
    size_t degree_;
    std::vector<Perm> strong_;
    std::vector<Perm> strong_inv_;
    std::vector<Level> levels_;
};

/// Exact order of the group generated by `generators`.
Integer group_order(size_t degree, const std::vector<Perm> &generators);

}  // namespace latgate

#endif
