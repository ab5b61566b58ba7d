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

#include "latgate/reduction.h"

#include <numeric>

namespace latgate {

namespace {

Rational round_nearest(const Rational &x) {
    // floor(x + 1/2)
    Rational shifted = x + Rational(1, 2);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return Rational(q);
}

void swap_rows_and_cols(RationalMatrix &g, size_t a, size_t b) {
    g.swap_rows(a, b);
    for (size_t i = 0; i < g.rows(); i++) {
        std::swap(g(i, a), g(i, b));
    }
}

}  // namespace

QuadraticDecomposition quadratic_decomposition(const RationalMatrix &gram) {
    if (!gram.is_square() || !is_symmetric(gram)) {
        throw std::invalid_argument("Gram matrix must be square and symmetric");
    }
    size_t n = gram.rows();
    RationalMatrix q = gram;
    QuadraticDecomposition out{std::vector<Rational>(n), RationalMatrix(n, n)};
    for (size_t i = 0; i < n; i++) {
        if (q(i, i) <= 0) {
            throw std::domain_error("Gram matrix is not positive definite");
        }
        out.d[i] = q(i, i);
        out.u(i, i) = 1;
        for (size_t j = i + 1; j < n; j++) {
            out.u(i, j) = q(i, j) / q(i, i);
        }
        for (size_t j = i + 1; j < n; j++) {
            for (size_t k = i + 1; k < n; k++) {
                q(j, k) -= q(i, j) * q(i, k) / q(i, i);
            }
        }
    }
    return out;
}

bool is_positive_definite(const RationalMatrix &gram) {
    try {
        quadratic_decomposition(gram);
        return true;
    } catch (const std::domain_error &) {
        return false;
    }
}

GramReduction lll_reduce_gram(const RationalMatrix &gram) {
    if (!gram.is_square() || !is_symmetric(gram)) {
        throw std::invalid_argument("Gram matrix must be square and symmetric");
    }
    const size_t n = gram.rows();
    RationalMatrix g = gram;
    IntMatrix h = IntMatrix::identity(n);
    if (n == 0) {
        return {h, g};
    }
    const Rational delta(99, 100);
    RationalMatrix mu(n, n);
    std::vector<Rational> b(n);

    auto reduce = [&](size_t k, size_t l) {
        if (abs(mu(k, l)) * 2 <= 1) {
            return;
        }
        Rational q = round_nearest(mu(k, l));
        Integer qi = q.get_num();
        for (size_t j = 0; j < n; j++) {
            g(k, j) -= q * g(l, j);
        }
        for (size_t j = 0; j < n; j++) {
            g(j, k) = g(k, j);
        }
        g(k, k) = g(k, k) - q * g(l, k);
        for (size_t j = 0; j < n; j++) {
            h(k, j) -= qi * h(l, j);
        }
        mu(k, l) -= q;
        for (size_t i = 0; i < l; i++) {
            mu(k, i) -= q * mu(l, i);
        }
    };

    size_t k = 1;
    size_t kmax = 0;
    b[0] = g(0, 0);
    if (b[0] <= 0) {
        throw std::domain_error("Gram matrix is not positive definite");
    }
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (size_t j = 0; j < k; j++) {
                Rational s = g(k, j);
                for (size_t i = 0; i < j; i++) {
                    s -= mu(j, i) * mu(k, i) * b[i];
                }
                mu(k, j) = s / b[j];
            }
            b[k] = g(k, k);
            for (size_t j = 0; j < k; j++) {
                b[k] -= mu(k, j) * mu(k, j) * b[j];
            }
            if (b[k] <= 0) {
                throw std::domain_error("Gram matrix is not positive definite");
            }
        }
        reduce(k, k - 1);
        if (b[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
            swap_rows_and_cols(g, k, k - 1);
            h.swap_rows(k, k - 1);
            for (size_t j = 0; j + 1 < k; j++) {
                std::swap(mu(k, j), mu(k - 1, j));
            }
            Rational m = mu(k, k - 1);
            Rational bb = b[k] + m * m * b[k - 1];
            mu(k, k - 1) = m * b[k - 1] / bb;
            b[k] = b[k - 1] * b[k] / bb;
            b[k - 1] = bb;
            for (size_t i = k + 1; i <= kmax; i++) {
                Rational t = mu(i, k);
                mu(i, k) = mu(i, k - 1) - m * t;
                mu(i, k - 1) = t + mu(k, k - 1) * mu(i, k);
            }
            if (k > 1) {
                k--;
            }
            continue;
        }
        for (size_t l = k - 1; l-- > 0;) {
            reduce(k, l);
        }
        k++;
    }
    return {std::move(h), std::move(g)};
}

GramReduction sort_by_norm(GramReduction r) {
    size_t n = r.gram.rows();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return r.gram(a, a) < r.gram(b, b);
    });
    GramReduction out{IntMatrix(n, n), RationalMatrix(n, n)};
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            out.transform(i, j) = r.transform(order[i], j);
            out.gram(i, j) = r.gram(order[i], order[j]);
        }
    }
    return out;
}

}  // namespace latgate
