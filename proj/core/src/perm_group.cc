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

#include "latgate/perm_group.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace latgate {

Perm identity_perm(size_t degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

Perm compose(const Perm &a, const Perm &b) {
    Perm c(a.size());
    for (size_t x = 0; x < a.size(); x++) {
        c[x] = b[a[x]];
    }
    return c;
}

Perm inverse(const Perm &p) {
    Perm q(p.size());
    for (size_t x = 0; x < p.size(); x++) {
        q[p[x]] = static_cast<uint32_t>(x);
    }
    return q;
}

bool is_identity(const Perm &p) {
    for (size_t x = 0; x < p.size(); x++) {
        if (p[x] != x) {
            return false;
        }
    }
    return true;
}

StabilizerChain::StabilizerChain(size_t degree) : degree_(degree) {
}

Integer StabilizerChain::order() const {
    Integer o = 1;
    for (const auto &l : levels_) {
        o *= static_cast<unsigned long>(l.orbit.size());
    }
    return o;
}

std::vector<size_t> StabilizerChain::orbit_sizes() const {
    std::vector<size_t> out;
    for (const auto &l : levels_) {
        out.push_back(l.orbit.size());
    }
    return out;
}

std::vector<uint32_t> StabilizerChain::base() const {
    std::vector<uint32_t> out;
    for (const auto &l : levels_) {
        out.push_back(l.point);
    }
    return out;
}

bool StabilizerChain::contains(const Perm &p) const {
    if (p.size() != degree_) {
        return false;
    }
    auto [residue, level] = sift(p, 0);
    return level == levels_.size() && is_identity(residue);
}

std::pair<Perm, size_t> StabilizerChain::sift(Perm g, size_t start) const {
    for (size_t i = start; i < levels_.size(); i++) {
        const Level &l = levels_[i];
        uint32_t y = g[l.point];
        if (l.edge[y] == -1) {
            return {std::move(g), i};
        }
        // Multiply by the inverse transversal element, one Schreier-vector edge at a time.
        while (y != l.point) {
            const Perm &inv = strong_inv_[l.gens[static_cast<size_t>(l.edge[y])]];
            for (auto &v : g) {
                v = inv[v];
            }
            y = inv[y];
        }
    }
    return {std::move(g), levels_.size()};
}

Perm StabilizerChain::transversal(size_t level, uint32_t point) const {
    const Level &l = levels_[level];
    std::vector<size_t> path;
    uint32_t y = point;
    while (y != l.point) {
        size_t g = l.gens[static_cast<size_t>(l.edge[y])];
        path.push_back(g);
        y = strong_inv_[g][y];
    }
    Perm u = identity_perm(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        const Perm &s = strong_[*it];
        for (auto &v : u) {
            v = s[v];
        }
    }
    return u;
}

void StabilizerChain::rebuild_orbit(size_t level) {
    Level &l = levels_[level];
    l.edge.assign(degree_, -1);
    l.orbit.assign(1, l.point);
    l.edge[l.point] = -2;
    for (size_t k = 0; k < l.orbit.size(); k++) {
        uint32_t x = l.orbit[k];
        for (size_t gi = 0; gi < l.gens.size(); gi++) {
            uint32_t y = strong_[l.gens[gi]][x];
            if (l.edge[y] == -1) {
                l.edge[y] = static_cast<int32_t>(gi);
                l.orbit.push_back(y);
            }
        }
    }
}

void StabilizerChain::add_strong_generator(const Perm &h, size_t deepest_level) {
    size_t id = strong_.size();
    strong_.push_back(h);
    strong_inv_.push_back(inverse(h));
    if (deepest_level == levels_.size()) {
        if (fixed_base_) {
            throw std::invalid_argument("stabilizer chain: the given points are not a base");
        }
        uint32_t moved = 0;
        while (h[moved] == moved) {
            moved++;
        }
        Level l;
        l.point = moved;
        levels_.push_back(std::move(l));
    }
    for (size_t i = 0; i <= deepest_level; i++) {
        levels_[i].gens.push_back(id);
        rebuild_orbit(i);
    }
}

StabilizerChain StabilizerChain::build_random(size_t degree, const std::vector<Perm> &generators,
                                              const Integer &target, size_t max_idle, uint64_t seed) {
    StabilizerChain chain(degree);
    std::vector<Perm> gens;
    for (const auto &g : generators) {
        if (g.size() != degree) {
            throw std::invalid_argument("generator degree mismatch");
        }
        if (!is_identity(g)) {
            gens.push_back(g);
        }
    }
    if (gens.empty()) {
        return chain;
    }
    for (const auto &g : gens) {
        auto [residue, level] = chain.sift(g, 0);
        if (!is_identity(residue)) {
            chain.add_strong_generator(residue, level);
        }
    }
    // Product replacement with an accumulator.
    std::mt19937_64 rng(seed);
    std::vector<Perm> slots = gens;
    while (slots.size() < 10) {
        slots.push_back(gens[slots.size() % gens.size()]);
    }
    Perm acc = identity_perm(degree);
    auto next_random = [&]() {
        std::uniform_int_distribution<size_t> pick(0, slots.size() - 1);
        size_t a = pick(rng);
        size_t b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        slots[a] = (rng() & 1) ? compose(slots[a], slots[b]) : compose(slots[b], slots[a]);
        acc = compose(acc, slots[a]);
        return acc;
    };
    for (int warm = 0; warm < 30; warm++) {
        next_random();
    }
    size_t idle = 0;
    while (idle < max_idle) {
        if (target != 0 && chain.order() >= target) {
            break;
        }
        auto [residue, level] = chain.sift(next_random(), 0);
        if (is_identity(residue)) {
            idle++;
            continue;
        }
        idle = 0;
        chain.add_strong_generator(residue, level);
    }
    return chain;
}

void StabilizerChain::complete() {
    // Every Schreier generator of every level must sift to the identity through the levels
    // below it. A failure adds a strong generator and restarts at the deepest touched level.
    size_t i = levels_.size();
    while (i > 0) {
        size_t level = i - 1;
        bool restarted = false;
        const size_t orbit_len = levels_[level].orbit.size();
        for (size_t k = 0; k < orbit_len && !restarted; k++) {
            uint32_t b = levels_[level].orbit[k];
            Perm ub = transversal(level, b);
            for (size_t gi = 0; gi < levels_[level].gens.size(); gi++) {
                const Perm &s = strong_[levels_[level].gens[gi]];
                uint32_t bs = s[b];
                Perm h = compose(ub, s);
                // h * u_{b^s}^{-1}
                uint32_t y = bs;
                const Level &l = levels_[level];
                while (y != l.point) {
                    const Perm &inv = strong_inv_[l.gens[static_cast<size_t>(l.edge[y])]];
                    for (auto &v : h) {
                        v = inv[v];
                    }
                    y = inv[y];
                }
                auto [residue, stop] = sift(std::move(h), level + 1);
                if (!is_identity(residue)) {
                    add_strong_generator(residue, stop);
                    i = stop + 1;
                    restarted = true;
                    break;
                }
            }
        }
        if (!restarted) {
            i--;
        }
    }
}

StabilizerChain StabilizerChain::build(size_t degree, const std::vector<Perm> &generators) {
    StabilizerChain chain = build_random(degree, generators, 0, 40);
    chain.complete();
    return chain;
}

std::pair<StabilizerChain::Images, size_t> StabilizerChain::sift_images(Images img, size_t start) const {
    for (size_t i = start; i < levels_.size(); i++) {
        const Level &l = levels_[i];
        uint32_t y = img[i];
        if (l.edge[y] == -1) {
            return {std::move(img), i};
        }
        while (y != l.point) {
            const Perm &inv = strong_inv_[l.gens[static_cast<size_t>(l.edge[y])]];
            for (auto &v : img) {
                v = inv[v];
            }
            y = inv[y];
        }
    }
    return {std::move(img), levels_.size()};
}

bool StabilizerChain::images_trivial(const Images &img) const {
    for (size_t t = 0; t < levels_.size(); t++) {
        if (img[t] != levels_[t].point) {
            return false;
        }
    }
    return true;
}

void StabilizerChain::complete_with_base() {
    const size_t k_base = levels_.size();
    std::vector<uint32_t> pos(degree_);
    std::vector<uint32_t> table;  // u_b(base[t]) for each orbit point b, BFS order
    size_t i = levels_.size();
    while (i > 0) {
        size_t level = i - 1;
        const Level &l = levels_[level];
        const size_t orbit_len = l.orbit.size();
        table.assign(orbit_len * k_base, 0);
        for (size_t k = 0; k < orbit_len; k++) {
            uint32_t b = l.orbit[k];
            pos[b] = static_cast<uint32_t>(k);
            uint32_t *row = table.data() + k * k_base;
            if (k == 0) {
                for (size_t t = 0; t < k_base; t++) {
                    row[t] = levels_[t].point;
                }
                continue;
            }
            size_t g = l.gens[static_cast<size_t>(l.edge[b])];
            const uint32_t *parent = table.data() + size_t{pos[strong_inv_[g][b]]} * k_base;
            for (size_t t = 0; t < k_base; t++) {
                row[t] = strong_[g][parent[t]];
            }
        }
        bool restarted = false;
        Images img(k_base);
        for (size_t k = 0; k < orbit_len && !restarted; k++) {
            uint32_t b = l.orbit[k];
            for (size_t gi = 0; gi < l.gens.size(); gi++) {
                const Perm &s = strong_[l.gens[gi]];
                const uint32_t *row = table.data() + k * k_base;
                for (size_t t = 0; t < k_base; t++) {
                    img[t] = s[row[t]];
                }
                uint32_t y = s[b];
                while (y != l.point) {
                    const Perm &inv = strong_inv_[l.gens[static_cast<size_t>(l.edge[y])]];
                    for (auto &v : img) {
                        v = inv[v];
                    }
                    y = inv[y];
                }
                auto [res, stop_img] = sift_images(img, level + 1);
                if (images_trivial(res)) {
                    continue;
                }
                // Rare: form the full Schreier generator.
                Perm h = compose(transversal(level, b), s);
                y = s[b];
                while (y != l.point) {
                    const Perm &inv = strong_inv_[l.gens[static_cast<size_t>(l.edge[y])]];
                    for (auto &v : h) {
                        v = inv[v];
                    }
                    y = inv[y];
                }
                auto [residue, stop] = sift(std::move(h), level + 1);
                add_strong_generator(residue, stop);
                i = stop + 1;
                restarted = true;
                break;
            }
        }
        if (!restarted) {
            i--;
        }
    }
}

StabilizerChain StabilizerChain::build_with_base(size_t degree, const std::vector<Perm> &generators,
                                                 const std::vector<uint32_t> &base, size_t max_idle,
                                                 uint64_t seed) {
    StabilizerChain chain(degree);
    chain.fixed_base_ = true;
    for (uint32_t b : base) {
        if (b >= degree) {
            throw std::invalid_argument("base point out of range");
        }
        Level l;
        l.point = b;
        chain.levels_.push_back(std::move(l));
        chain.rebuild_orbit(chain.levels_.size() - 1);
    }
    std::vector<Perm> gens;
    for (const auto &g : generators) {
        if (g.size() != degree) {
            throw std::invalid_argument("generator degree mismatch");
        }
        if (!is_identity(g)) {
            gens.push_back(g);
        }
    }
    if (gens.empty()) {
        return chain;
    }
    for (const auto &g : gens) {
        auto [residue, level] = chain.sift(g, 0);
        if (!is_identity(residue)) {
            chain.add_strong_generator(residue, level);
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<Perm> slots = gens;
    while (slots.size() < 10) {
        slots.push_back(gens[slots.size() % gens.size()]);
    }
    Perm acc = identity_perm(degree);
    Images img(base.size());
    size_t idle = 0;
    for (int step = 0; idle < max_idle; step++) {
        std::uniform_int_distribution<size_t> pick(0, slots.size() - 1);
        size_t a = pick(rng);
        size_t b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        slots[a] = (rng() & 1) ? compose(slots[a], slots[b]) : compose(slots[b], slots[a]);
        acc = compose(acc, slots[a]);
        if (step < 30) {
            continue;
        }
        for (size_t t = 0; t < base.size(); t++) {
            img[t] = acc[base[t]];
        }
        if (chain.images_trivial(chain.sift_images(img, 0).first)) {
            idle++;
            continue;
        }
        idle = 0;
        auto [residue, level] = chain.sift(acc, 0);
        chain.add_strong_generator(residue, level);
    }
    chain.complete_with_base();
    return chain;
}

Integer group_order(size_t degree, const std::vector<Perm> &generators) {
    return StabilizerChain::build(degree, generators).order();
}

}  // namespace latgate
