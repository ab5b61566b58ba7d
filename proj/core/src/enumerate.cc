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

#include "latgate/enumerate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "latgate/log.h"
#include "latgate/reduction.h"

namespace latgate {

std::map<Rational, size_t> ShortVectorSet::counts_by_norm() const {
    std::map<Rational, size_t> out;
    for (const auto &[norm, idx] : by_norm) {
        out[norm] = 2 * idx.size();
    }
    return out;
}

namespace {

using i128 = __int128;

int64_t to_i64(const Integer &z, const char *what) {
    if (!z.fits_slong_p()) {
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    }
    return z.get_si();
}

struct Task {
    std::vector<int64_t> prefix;  // values of the outermost coordinates, outermost first
    double remaining;
    bool outer_zero;
};

class Enumerator {
   public:
    Enumerator(const RationalMatrix &reduced_gram, const Rational &bound) : n_(reduced_gram.rows()) {
        QuadraticDecomposition qd = quadratic_decomposition(reduced_gram);
        d_.resize(n_);
        u_.assign(n_ * n_, 0.0);
        for (size_t i = 0; i < n_; i++) {
            d_[i] = qd.d[i].get_d();
            for (size_t j = i + 1; j < n_; j++) {
                u_[i * n_ + j] = qd.u(i, j).get_d();
            }
        }
        Integer l = common_denominator(reduced_gram);
        IntMatrix a = clear_denominators(reduced_gram);
        a_.resize(n_ * n_);
        for (size_t i = 0; i < n_; i++) {
            for (size_t j = 0; j < n_; j++) {
                a_[i * n_ + j] = to_i64(a(i, j), "scaled Gram entry");
            }
        }
        scale_ = l;
        // Accept iff q * bound_den <= bound_num * scale.
        Integer rhs = bound.get_num() * l;
        rhs_ = to_i64(rhs, "scaled bound");
        bound_den_ = to_i64(bound.get_den(), "bound denominator");
        bound_ = bound.get_d();
        eps_ = 1e-9 * (1.0 + bound_);
    }

    size_t dim() const {
        return n_;
    }
    const Integer &scale() const {
        return scale_;
    }
    double bound() const {
        return bound_;
    }

    /// Expands the outermost `depth` coordinates into independent tasks.
    std::vector<Task> split(size_t depth) const {
        std::vector<Task> tasks;
        std::vector<int64_t> x(n_, 0);
        split_rec(n_ - 1, depth, bound_, true, x, tasks);
        return tasks;
    }

    /// Runs one task, appending (coefficients, q) pairs to `out`.
    void run(const Task &task, std::vector<int64_t> &coeffs, std::vector<int64_t> &norms) const {
        std::vector<int64_t> x(n_, 0);
        for (size_t k = 0; k < task.prefix.size(); k++) {
            x[n_ - 1 - k] = task.prefix[k];
        }
        size_t level = n_ - task.prefix.size();
        if (level == 0) {
            if (!task.outer_zero) {
                emit(x, coeffs, norms);
            }
            return;
        }
        recurse(level - 1, task.remaining, task.outer_zero, x, coeffs, norms);
    }

   private:
    double center(size_t i, const std::vector<int64_t> &x) const {
        double c = 0;
        for (size_t j = i + 1; j < n_; j++) {
            c -= u_[i * n_ + j] * static_cast<double>(x[j]);
        }
        return c;
    }

    template <typename Visit>
    void for_range(size_t i, double remaining, bool outer_zero, const std::vector<int64_t> &x, Visit &&visit) const {
        double c = outer_zero ? 0.0 : center(i, x);
        double r = std::sqrt(std::max(0.0, (remaining + eps_) / d_[i]));
        auto lo = static_cast<int64_t>(std::ceil(c - r));
        auto hi = static_cast<int64_t>(std::floor(c + r));
        if (outer_zero) {
            lo = std::max<int64_t>(lo, 0);
        }
        for (int64_t v = lo; v <= hi; v++) {
            double t = static_cast<double>(v) - c;
            double rem = remaining - d_[i] * t * t;
            if (rem < -eps_) {
                continue;
            }
            visit(v, rem);
        }
    }

    void split_rec(size_t i, size_t depth, double remaining, bool outer_zero, std::vector<int64_t> &x,
                   std::vector<Task> &tasks) const {
        size_t done = n_ - 1 - i;
        if (done == depth || n_ == 0) {
            std::vector<int64_t> prefix;
            for (size_t k = 0; k < done; k++) {
                prefix.push_back(x[n_ - 1 - k]);
            }
            tasks.push_back({std::move(prefix), remaining, outer_zero});
            return;
        }
        for_range(i, remaining, outer_zero, x, [&](int64_t v, double rem) {
            x[i] = v;
            if (i == 0) {
                std::vector<int64_t> prefix(x.rbegin(), x.rend());
                tasks.push_back({std::move(prefix), rem, outer_zero && v == 0});
            } else {
                split_rec(i - 1, depth, rem, outer_zero && v == 0, x, tasks);
            }
        });
        x[i] = 0;
    }

    void recurse(size_t i, double remaining, bool outer_zero, std::vector<int64_t> &x, std::vector<int64_t> &coeffs,
                 std::vector<int64_t> &norms) const {
        for_range(i, remaining, outer_zero, x, [&](int64_t v, double rem) {
            x[i] = v;
            if (i == 0) {
                if (!(outer_zero && v == 0)) {
                    emit(x, coeffs, norms);
                }
            } else {
                recurse(i - 1, rem, outer_zero && v == 0, x, coeffs, norms);
            }
        });
        x[i] = 0;
    }

    void emit(const std::vector<int64_t> &x, std::vector<int64_t> &coeffs, std::vector<int64_t> &norms) const {
        i128 q = 0;
        for (size_t i = 0; i < n_; i++) {
            if (x[i] == 0) {
                continue;
            }
            i128 s = 0;
            for (size_t j = 0; j < n_; j++) {
                s += static_cast<i128>(a_[i * n_ + j]) * x[j];
            }
            q += s * x[i];
        }
        if (q * bound_den_ > static_cast<i128>(rhs_)) {
            return;
        }
        coeffs.insert(coeffs.end(), x.begin(), x.end());
        norms.push_back(static_cast<int64_t>(q));
    }

    size_t n_;
    std::vector<double> d_;
    std::vector<double> u_;
    std::vector<int64_t> a_;
    Integer scale_;
    int64_t rhs_ = 0;
    int64_t bound_den_ = 1;
    double bound_ = 0;
    double eps_ = 0;
};

}  // namespace

ShortVectorSet enumerate_gram(const RationalMatrix &gram, const Rational &bound, unsigned threads) {
    if (bound <= 0) {
        throw std::invalid_argument("enumeration bound must be positive");
    }
    GramReduction red = lll_reduce_gram(gram);
    const size_t n = gram.rows();
    Enumerator en(red.gram, bound);

    std::vector<Task> tasks = en.split(std::min<size_t>(n, 2));
    threads = std::max(1u, threads);
    std::vector<std::vector<int64_t>> coeffs(threads), norms(threads);
    auto work = [&](unsigned w) {
        for (size_t t = w; t < tasks.size(); t += threads) {
            en.run(tasks[t], coeffs[w], norms[w]);
        }
    };
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

    // Back to the caller's coordinates: y = x * transform.
    std::vector<int64_t> t(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            t[i * n + j] = to_i64(red.transform(i, j), "reduction transform entry");
        }
    }
    ShortVectorSet out;
    out.bound = bound;
    for (unsigned w = 0; w < threads; w++) {
        size_t count = norms[w].size();
        for (size_t k = 0; k < count; k++) {
            const int64_t *x = coeffs[w].data() + k * n;
            std::vector<int64_t> y(n, 0);
            for (size_t j = 0; j < n; j++) {
                i128 s = 0;
                for (size_t i = 0; i < n; i++) {
                    s += static_cast<i128>(x[i]) * t[i * n + j];
                }
                if (s > std::numeric_limits<int64_t>::max() || s < std::numeric_limits<int64_t>::min()) {
                    throw std::overflow_error("short vector coefficient overflow");
                }
                y[j] = static_cast<int64_t>(s);
            }
            auto last = std::find_if(y.rbegin(), y.rend(), [](int64_t v) {
                return v != 0;
            });
            if (last != y.rend() && *last < 0) {
                for (auto &v : y) {
                    v = -v;
                }
            }
            out.vectors.push_back({std::move(y), make_rational(Integer(static_cast<long>(norms[w][k])), en.scale())});
        }
    }
    std::sort(out.vectors.begin(), out.vectors.end(), [](const ShortVector &a, const ShortVector &b) {
        return a.coeffs < b.coeffs;
    });
    for (size_t i = 0; i < out.vectors.size(); i++) {
        out.by_norm[out.vectors[i].norm].push_back(i);
    }
    log_debug("enumerate: dim %zu bound %s -> %zu vectors", n, to_string(bound).c_str(), out.count());
    return out;
}

ShortVectorSet enumerate_short_vectors(const Lattice &l, const Rational &bound, unsigned threads) {
    return enumerate_gram(l.normalized_gram(), bound, threads);
}

ShortVectorSet minimal_vectors(const Lattice &l, unsigned threads) {
    GramReduction red = lll_reduce_gram(l.normalized_gram());
    Rational min_diag = red.gram(0, 0);
    for (size_t i = 1; i < red.gram.rows(); i++) {
        min_diag = std::min(min_diag, red.gram(i, i));
    }
    // Increasing schedule; the last bound always contains a reduced basis vector.
    for (Rational frac : {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)}) {
        ShortVectorSet s = enumerate_short_vectors(l, min_diag * frac, threads);
        if (s.vectors.empty()) {
            continue;
        }
        Rational m = s.by_norm.begin()->first;
        ShortVectorSet out;
        out.bound = m;
        for (const auto &v : s.vectors) {
            if (v.norm == m) {
                out.by_norm[m].push_back(out.vectors.size());
                out.vectors.push_back(v);
            }
        }
        return out;
    }
    throw std::logic_error("minimal_vectors: no vector found up to a basis norm");
}

Rational minimum(const Lattice &l, unsigned threads) {
    return minimal_vectors(l, threads).bound;
}

size_t kissing_number(const Lattice &l, unsigned threads) {
    return minimal_vectors(l, threads).count();
}

}  // namespace latgate
