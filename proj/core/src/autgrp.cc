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

#include "latgate/autgrp.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "latgate/log.h"
#include "latgate/reduction.h"

namespace latgate {

namespace {

int64_t to_i64(const Integer &z, const char *what) {
    if (!z.fits_slong_p()) {
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    }
    return z.get_si();
}

// Flat table of integer vectors with a hash index. Point 2k is a stored representative,
// point 2k+1 its negative.
class PointTable {
   public:
    PointTable(size_t dim, const std::vector<ShortVector> &reps) : n_(dim) {
        coords_.reserve(2 * reps.size() * n_);
        for (const auto &v : reps) {
            coords_.insert(coords_.end(), v.coeffs.begin(), v.coeffs.end());
            for (int64_t c : v.coeffs) {
                coords_.push_back(-c);
            }
        }
        size_t cap = 16;
        while (cap < 4 * size()) {
            cap <<= 1;
        }
        slots_.assign(cap, kEmpty);
        for (uint32_t p = 0; p < size(); p++) {
            size_t h = hash(at(p)) & (cap - 1);
            while (slots_[h] != kEmpty) {
                h = (h + 1) & (cap - 1);
            }
            slots_[h] = p;
        }
    }

    size_t dim() const {
        return n_;
    }
    size_t size() const {
        return n_ == 0 ? 0 : coords_.size() / n_;
    }
    const int64_t *at(uint32_t p) const {
        return coords_.data() + static_cast<size_t>(p) * n_;
    }

    /// Index of x, or -1.
    int64_t find(const int64_t *x) const {
        size_t mask = slots_.size() - 1;
        size_t h = hash(x) & mask;
        while (slots_[h] != kEmpty) {
            if (std::equal(x, x + n_, at(slots_[h]))) {
                return slots_[h];
            }
            h = (h + 1) & mask;
        }
        return -1;
    }

    /// Permutation p -> index of (p * u); nullopt-like empty result if some image is missing.
    Perm apply(const std::vector<int64_t> &u) const {
        Perm out(size());
        std::vector<int64_t> y(n_);
        for (uint32_t p = 0; p < size(); p++) {
            const int64_t *x = at(p);
            std::fill(y.begin(), y.end(), 0);
            for (size_t i = 0; i < n_; i++) {
                if (x[i] == 0) {
                    continue;
                }
                for (size_t j = 0; j < n_; j++) {
                    y[j] += x[i] * u[i * n_ + j];
                }
            }
            int64_t q = find(y.data());
            if (q < 0) {
                return {};
            }
            out[p] = static_cast<uint32_t>(q);
        }
        return out;
    }

   private:
    static constexpr uint32_t kEmpty = std::numeric_limits<uint32_t>::max();

    size_t hash(const int64_t *x) const {
        uint64_t h = 1469598103934665603ULL;
        for (size_t i = 0; i < n_; i++) {
            h ^= static_cast<uint64_t>(x[i]) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
            h ^= h >> 29;
        }
        return static_cast<size_t>(h);
    }

    size_t n_;
    std::vector<int64_t> coords_;
    std::vector<uint32_t> slots_;
};

std::vector<int64_t> flatten(const IntMatrix &u) {
    std::vector<int64_t> out;
    out.reserve(u.rows() * u.cols());
    for (const auto &z : u.data()) {
        out.push_back(to_i64(z, "automorphism entry"));
    }
    return out;
}

std::vector<uint32_t> orbit(uint32_t start, const std::vector<const Perm *> &gens, size_t degree) {
    std::vector<uint32_t> out{start};
    std::vector<char> seen(degree, 0);
    seen[start] = 1;
    for (size_t k = 0; k < out.size(); k++) {
        for (const Perm *g : gens) {
            uint32_t y = (*g)[out[k]];
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    }
    return out;
}

// Product replacement with a fixed seed.
class RandomElements {
   public:
    RandomElements(const std::vector<Perm> &gens, uint64_t seed) : rng_(seed) {
        size_t degree = gens.front().size();
        while (state_.size() < std::max<size_t>(10, gens.size())) {
            state_.push_back(gens[state_.size() % gens.size()]);
        }
        acc_ = identity_perm(degree);
        for (int i = 0; i < 50; i++) {
            next();
        }
    }

    Perm next() {
        std::uniform_int_distribution<size_t> pick(0, state_.size() - 1);
        size_t i = pick(rng_);
        size_t j = pick(rng_);
        while (j == i) {
            j = pick(rng_);
        }
        const Perm rhs = (rng_() & 1) ? state_[j] : inverse(state_[j]);
        state_[i] = (rng_() & 1) ? compose(state_[i], rhs) : compose(rhs, state_[i]);
        acc_ = compose(acc_, state_[i]);
        return acc_;
    }

   private:
    std::mt19937_64 rng_;
    std::vector<Perm> state_;
    Perm acc_;
};

struct BudgetExceeded {};

class Search {
   public:
    Search(const std::vector<int64_t> &gram, size_t n, const PointTable &pts, std::vector<uint32_t> order,
           std::vector<std::vector<uint32_t>> candidates, const SearchBudget &budget)
        : n_(n),
          gram_(gram),
          pts_(pts),
          ord_(std::move(order)),
          cand_(std::move(candidates)),
          budget_(budget),
          start_(std::chrono::steady_clock::now()) {
        gv_.resize(pts_.size() * n_);
        for (uint32_t p = 0; p < pts_.size(); p++) {
            const int64_t *x = pts_.at(p);
            for (size_t j = 0; j < n_; j++) {
                int64_t s = 0;
                for (size_t i = 0; i < n_; i++) {
                    s += x[i] * gram_[i * n_ + j];
                }
                gv_[p * n_ + j] = s;
            }
        }
        base_.resize(n_);
        for (size_t k = 0; k < n_; k++) {
            std::vector<int64_t> e(n_, 0);
            e[ord_[k]] = 1;
            base_[k] = static_cast<uint32_t>(pts_.find(e.data()));
        }
    }

    void run() {
        orbit_sizes_.assign(n_, 1);
        image_.assign(n_, 0);
        for (size_t level = n_; level-- > 0;) {
            level_ = level;
            for (size_t j = 0; j < level; j++) {
                image_[j] = base_[j];
            }
            // Lists for levels >= level, filtered by the fixed prefix.
            std::vector<std::vector<uint32_t>> lists(n_);
            for (size_t m = level; m < n_; m++) {
                for (uint32_t x : cand_[m]) {
                    bool ok = true;
                    for (size_t j = 0; j < level && ok; j++) {
                        ok = ip(x, base_[j]) == target(m, j);
                    }
                    if (ok) {
                        lists[m].push_back(x);
                    }
                }
            }
            std::vector<const Perm *> stab = stabilizer_gens(level);
            std::vector<uint32_t> orb = orbit(base_[level], stab, pts_.size());
            std::vector<char> done(pts_.size(), 0);
            for (uint32_t y : orb) {
                done[y] = 1;
            }
            orbit_sizes_[level] = orb.size();
            for (uint32_t c : lists[level]) {
                if (done[c]) {
                    continue;
                }
                image_[level] = c;
                bool found = false;
                std::vector<std::vector<uint32_t>> next;
                count_node();
                if (filter(level, c, lists, next)) {
                    found = level + 1 == n_ || extend(level + 1, next);
                }
                if (found) {
                    add_generator(level);
                    stab = stabilizer_gens(level);
                    orb = orbit(base_[level], stab, pts_.size());
                    for (uint32_t y : orb) {
                        done[y] = 1;
                    }
                    orbit_sizes_[level] = orb.size();
                    log_debug("aut: level %zu orbit %zu (%zu generators, %llu nodes)", level, orb.size(),
                              gens_.size(), static_cast<unsigned long long>(nodes_));
                } else {
                    for (uint32_t y : orbit(c, stab, pts_.size())) {
                        done[y] = 1;
                    }
                }
            }
            log_info("aut: level %zu done, orbit %zu", level, orbit_sizes_[level]);
        }
    }

    const std::vector<Perm> &generators() const {
        return gens_;
    }
    const std::vector<size_t> &orbit_sizes() const {
        return orbit_sizes_;
    }
    uint64_t nodes() const {
        return nodes_;
    }
    size_t processed_from() const {
        return level_;
    }

    /// Rows of the reduced-basis automorphism described by a permutation of the points.
    std::vector<int64_t> matrix_of(const Perm &p) const {
        std::vector<int64_t> u(n_ * n_);
        for (size_t k = 0; k < n_; k++) {
            const int64_t *row = pts_.at(p[base_[k]]);
            std::copy(row, row + n_, u.begin() + static_cast<ptrdiff_t>(ord_[k] * n_));
        }
        return u;
    }

   private:
    int64_t ip(uint32_t x, uint32_t y) const {
        const int64_t *a = gv_.data() + static_cast<size_t>(x) * n_;
        const int64_t *b = pts_.at(y);
        int64_t s = 0;
        for (size_t i = 0; i < n_; i++) {
            s += a[i] * b[i];
        }
        return s;
    }

    int64_t target(size_t m, size_t j) const {
        return gram_[ord_[m] * n_ + ord_[j]];
    }

    void count_node() {
        nodes_++;
        if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) {
            throw BudgetExceeded{};
        }
        if (budget_.max_seconds > 0 && (nodes_ & 255) == 0) {
            std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
            if (dt.count() > budget_.max_seconds) {
                throw BudgetExceeded{};
            }
        }
    }

    // Filters the lists of levels > k by the image c of level k. Fails if a list becomes
    // shorter than that level's (already complete) orbit.
    bool filter(size_t k, uint32_t c, const std::vector<std::vector<uint32_t>> &lists,
                std::vector<std::vector<uint32_t>> &out) const {
        out.assign(n_, {});
        for (size_t m = k + 1; m < n_; m++) {
            int64_t t = target(m, k);
            for (uint32_t x : lists[m]) {
                if (ip(x, c) == t) {
                    out[m].push_back(x);
                }
            }
            if (out[m].size() < orbit_sizes_[m]) {
                return false;
            }
        }
        return true;
    }

    bool extend(size_t k, const std::vector<std::vector<uint32_t>> &lists) {
        for (uint32_t c : lists[k]) {
            count_node();
            image_[k] = c;
            if (k + 1 == n_) {
                return true;
            }
            std::vector<std::vector<uint32_t>> next;
            if (filter(k, c, lists, next) && extend(k + 1, next)) {
                return true;
            }
        }
        return false;
    }

    std::vector<const Perm *> stabilizer_gens(size_t level) const {
        std::vector<const Perm *> out;
        for (size_t g = 0; g < gens_.size(); g++) {
            if (gen_level_[g] >= level) {
                out.push_back(&gens_[g]);
            }
        }
        return out;
    }

    void add_generator(size_t level) {
        std::vector<int64_t> u(n_ * n_);
        for (size_t k = 0; k < n_; k++) {
            const int64_t *row = pts_.at(image_[k]);
            std::copy(row, row + n_, u.begin() + static_cast<ptrdiff_t>(ord_[k] * n_));
        }
        Perm p = pts_.apply(u);
        if (p.empty()) {
            throw std::logic_error("automorphism search produced a map that does not permute the vectors");
        }
        gens_.push_back(std::move(p));
        gen_level_.push_back(level);
    }

    size_t n_;
    const std::vector<int64_t> &gram_;
    const PointTable &pts_;
    std::vector<uint32_t> ord_;
    std::vector<std::vector<uint32_t>> cand_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;

    std::vector<int64_t> gv_;
    std::vector<uint32_t> base_;
    std::vector<uint32_t> image_;
    std::vector<size_t> orbit_sizes_;
    std::vector<Perm> gens_;
    std::vector<size_t> gen_level_;
    uint64_t nodes_ = 0;
    size_t level_ = 0;
};

// Fingerprint of each point: histogram of inner products with the minimal shell.
std::vector<uint32_t> fingerprints(const PointTable &pts, const std::vector<int64_t> &gram,
                                   const std::vector<int64_t> &norms, unsigned threads) {
    const size_t n = pts.dim();
    const size_t count = pts.size();
    int64_t min_norm = *std::min_element(norms.begin(), norms.end());
    int64_t max_norm = *std::max_element(norms.begin(), norms.end());
    std::vector<uint32_t> shell;
    for (uint32_t p = 0; p < count; p += 2) {
        if (norms[p] == min_norm) {
            shell.push_back(p);
        }
    }
    const size_t width = static_cast<size_t>(2 * max_norm + 1);
    std::vector<std::vector<uint32_t>> hist(count / 2);
    auto work = [&](unsigned w) {
        std::vector<int64_t> gx(n);
        for (size_t r = w; r < count / 2; r += threads) {
            const int64_t *x = pts.at(static_cast<uint32_t>(2 * r));
            for (size_t j = 0; j < n; j++) {
                int64_t s = 0;
                for (size_t i = 0; i < n; i++) {
                    s += x[i] * gram[i * n + j];
                }
                gx[j] = s;
            }
            std::vector<uint32_t> h(width, 0);
            for (uint32_t s : shell) {
                const int64_t *y = pts.at(s);
                int64_t v = 0;
                for (size_t j = 0; j < n; j++) {
                    v += gx[j] * y[j];
                }
                h[static_cast<size_t>(max_norm + v)]++;
                h[static_cast<size_t>(max_norm - v)]++;
            }
            hist[r] = std::move(h);
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    std::map<std::vector<uint32_t>, uint32_t> ids;
    std::vector<uint32_t> out(count);
    for (size_t r = 0; r < count / 2; r++) {
        // The negative has the mirrored histogram, which is the same since the shell is symmetric.
        auto [it, inserted] = ids.emplace(hist[r], static_cast<uint32_t>(ids.size()));
        out[2 * r] = out[2 * r + 1] = it->second;
    }
    return out;
}

}  // namespace

Verdict is_automorphism(const Lattice &l, const IntegralAutomorphism &u) {
    const size_t n = l.dimension();
    if (u.u.rows() != n || u.u.cols() != n) {
        throw std::invalid_argument("is_automorphism: dimension mismatch");
    }
    RationalMatrix ur = to_rational(u.u);
    if (!(mat_mul(mat_mul(ur, l.gram()), ur.transpose()) == l.gram())) {
        return {false, "Gram not preserved"};
    }
    Integer d = determinant(u.u);
    if (d != 1 && d != -1) {
        return {false, "determinant is not +-1"};
    }
    return {};
}

Verdict is_automorphism(const Lattice &l, const OrthogonalGate &b) {
    const size_t n = l.dimension();
    if (b.b.rows() != n || b.b.cols() != n) {
        throw std::invalid_argument("is_automorphism: dimension mismatch");
    }
    RationalMatrix bbt = mat_mul(b.b, b.b.transpose());
    for (size_t i = 0; i < n; i++) {
        if (bbt(i, i) != 1) {
            return {false, "Gram not preserved: row " + std::to_string(i) + " has squared norm " +
                               to_string(bbt(i, i))};
        }
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (bbt(i, j) != 0) {
                return {false, "Gram not preserved: rows " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are not orthogonal"};
            }
        }
    }
    RationalMatrix u = mat_mul(mat_mul(l.basis(), b.b), mat_inverse(l.basis()));
    if (!is_integral(u)) {
        return {false, "M B M^-1 is not integral"};
    }
    Rational d = determinant(u);
    if (d != 1 && d != -1) {
        return {false, "determinant is not +-1"};
    }
    return {};
}

OrthogonalGate natural_action(const Lattice &l, const IntegralAutomorphism &u) {
    Verdict v = is_automorphism(l, u);
    if (!v) {
        throw std::domain_error("natural_action: " + v.reason);
    }
    return {mat_mul(mat_mul(mat_inverse(l.basis()), to_rational(u.u)), l.basis())};
}

IntegralAutomorphism integral_action(const Lattice &l, const OrthogonalGate &b) {
    RationalMatrix u = mat_mul(mat_mul(l.basis(), b.b), mat_inverse(l.basis()));
    if (!is_integral(u)) {
        throw std::domain_error("integral_action: M B M^-1 is not integral");
    }
    return {to_integer(u)};
}

AutGroupResult automorphism_group(const Lattice &l, const SearchBudget &budget) {
    return automorphism_group(l.gram(), budget);
}

AutGroupResult automorphism_group(const RationalMatrix &gram_in, const SearchBudget &budget) {
    if (!gram_in.is_square() || !is_symmetric(gram_in)) {
        throw std::invalid_argument("automorphism_group: Gram matrix must be square and symmetric");
    }
    const size_t n = gram_in.rows();
    AutGroupResult result;

    // Integral Gram, LLL-reduced, short basis vectors first.
    RationalMatrix g = to_rational(clear_denominators(gram_in));
    GramReduction red = sort_by_norm(lll_reduce_gram(g));
    std::vector<int64_t> gram(n * n);
    Rational max_diag = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            gram[i * n + j] = to_i64(red.gram(i, j).get_num(), "reduced Gram entry");
        }
        max_diag = std::max(max_diag, red.gram(i, i));
    }

    ShortVectorSet sv = enumerate_gram(red.gram, max_diag, budget.threads);
    PointTable pts(n, sv.vectors);
    std::vector<int64_t> norms(pts.size());
    for (size_t k = 0; k < sv.vectors.size(); k++) {
        norms[2 * k] = norms[2 * k + 1] = to_i64(sv.vectors[k].norm.get_num(), "vector norm");
    }
    result.candidate_vectors = pts.size();

    size_t shell = 0;
    int64_t min_norm = *std::min_element(norms.begin(), norms.end());
    for (int64_t q : norms) {
        shell += q == min_norm;
    }
    std::vector<uint32_t> fp;
    if (static_cast<double>(pts.size()) * static_cast<double>(shell) / 4.0 <= 2e8) {
        fp = fingerprints(pts, gram, norms, budget.threads);
    } else {
        fp.assign(pts.size(), 0);
        log_info("aut: fingerprints skipped (%zu points, shell %zu)", pts.size(), shell);
    }

    std::vector<uint32_t> base(n);
    for (size_t i = 0; i < n; i++) {
        std::vector<int64_t> e(n, 0);
        e[i] = 1;
        base[i] = static_cast<uint32_t>(pts.find(e.data()));
    }
    std::vector<std::vector<uint32_t>> cand(n);
    for (size_t i = 0; i < n; i++) {
        for (uint32_t p = 0; p < pts.size(); p++) {
            if (norms[p] == gram[i * n + i] && fp[p] == fp[base[i]]) {
                cand[i].push_back(p);
            }
        }
        std::sort(cand[i].begin(), cand[i].end(), [&](uint32_t a, uint32_t b) {
            return std::lexicographical_compare(pts.at(a), pts.at(a) + n, pts.at(b), pts.at(b) + n);
        });
    }
    // Most constrained basis vector first.
    std::vector<uint32_t> order(n);
    for (size_t i = 0; i < n; i++) {
        order[i] = static_cast<uint32_t>(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return cand[a].size() < cand[b].size();
    });
    std::vector<std::vector<uint32_t>> cand_by_level(n);
    for (size_t k = 0; k < n; k++) {
        cand_by_level[k] = cand[order[k]];
    }

    Search search(gram, n, pts, order, std::move(cand_by_level), budget);
    try {
        search.run();
    } catch (const BudgetExceeded &) {
        result.complete = false;
        log_info("aut: budget exhausted after %llu nodes", static_cast<unsigned long long>(search.nodes()));
    }
    result.nodes = search.nodes();
    result.orbit_sizes = search.orbit_sizes();
    for (size_t s : result.orbit_sizes) {
        result.order *= static_cast<unsigned long>(s);
    }

    std::vector<Perm> gens = search.generators();
    if (result.complete && budget.reduce_generators && gens.size() > 1) {
        // Greedy removal, then a few random pairs; a randomized chain reaching the known order
        // certifies that the smaller set still generates everything.
        auto generates = [&](const std::vector<Perm> &set) {
            return StabilizerChain::build_random(pts.size(), set, result.order, 40).order() == result.order;
        };
        for (size_t i = gens.size(); i-- > 0 && gens.size() > 1;) {
            std::vector<Perm> trial = gens;
            trial.erase(trial.begin() + static_cast<ptrdiff_t>(i));
            if (generates(trial)) {
                gens = std::move(trial);
            }
        }
        if (gens.size() > 2 && pts.size() <= 20000) {
            RandomElements rnd(gens, 0x61757467ULL);
            for (int t = 0; t < 30; t++) {
                std::vector<Perm> pair{rnd.next(), rnd.next()};
                if (generates(pair)) {
                    gens = std::move(pair);
                    break;
                }
            }
        }
    }

    // U = T^-1 U_red T maps back to the lattice's own basis.
    RationalMatrix t = to_rational(red.transform);
    RationalMatrix t_inv = mat_inverse(t);
    for (const Perm &p : gens) {
        std::vector<int64_t> u = search.matrix_of(p);
        IntMatrix ured(n, n);
        for (size_t k = 0; k < n * n; k++) {
            ured(k / n, k % n) = static_cast<long>(u[k]);
        }
        result.generators.push_back({to_integer(mat_mul(mat_mul(t_inv, to_rational(ured)), t))});
    }
    log_info("aut: order %s from %zu generators, %llu nodes", to_string(result.order).c_str(),
             result.generators.size(), static_cast<unsigned long long>(result.nodes));
    return result;
}

ShortVectorSet faithful_vector_set(const Lattice &l, unsigned threads) {
    GramReduction red = lll_reduce_gram(l.normalized_gram());
    Rational bound = 0;
    for (size_t i = 0; i < red.gram.rows(); i++) {
        bound = std::max(bound, red.gram(i, i));
    }
    return enumerate_short_vectors(l, bound, threads);
}

Perm induced_permutation(const IntMatrix &u, const ShortVectorSet &vectors) {
    size_t n = u.rows();
    PointTable pts(n, vectors.vectors);
    Perm p = pts.apply(flatten(u));
    if (p.empty()) {
        throw std::domain_error("generator does not permute the short-vector set");
    }
    return p;
}

Integer order_on_vectors(const std::vector<IntegralAutomorphism> &gens, const ShortVectorSet &vectors) {
    if (vectors.vectors.empty()) {
        throw std::invalid_argument("order_on_vectors: empty vector set");
    }
    size_t n = vectors.vectors.front().coeffs.size();
    PointTable pts(n, vectors.vectors);
    std::vector<Perm> perms;
    for (const auto &g : gens) {
        Perm p = pts.apply(flatten(g.u));
        if (p.empty()) {
            throw std::domain_error("generator does not permute the short-vector set");
        }
        perms.push_back(std::move(p));
    }
    // n independent vectors form a base: a linear map fixing them is the identity.
    std::vector<uint32_t> base;
    std::vector<std::vector<Rational>> echelon;
    std::vector<size_t> pivots;
    for (size_t k = 0; k < vectors.vectors.size() && base.size() < n; k++) {
        std::vector<Rational> v(n);
        for (size_t j = 0; j < n; j++) {
            v[j] = static_cast<long>(vectors.vectors[k].coeffs[j]);
        }
        for (size_t r = 0; r < echelon.size(); r++) {
            if (v[pivots[r]] != 0) {
                Rational f = v[pivots[r]] / echelon[r][pivots[r]];
                for (size_t j = 0; j < n; j++) {
                    v[j] -= f * echelon[r][j];
                }
            }
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational &x) {
            return x != 0;
        });
        if (nz == v.end()) {
            continue;
        }
        pivots.push_back(static_cast<size_t>(nz - v.begin()));
        echelon.push_back(std::move(v));
        base.push_back(static_cast<uint32_t>(2 * k));
    }
    if (base.size() < n) {
        throw std::invalid_argument("order_on_vectors: vectors do not span the space");
    }
    return StabilizerChain::build_with_base(pts.size(), perms, base).order();
}

bool group_order_check(const std::vector<IntegralAutomorphism> &gens, const Integer &claimed,
                       const ShortVectorSet &vectors) {
    return order_on_vectors(gens, vectors) == claimed;
}

}  // namespace latgate
