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

#include <algorithm>

#include "latgate/exact.h"

namespace latgate {

namespace {

// row[target] -= q * row[source], applied to both the working matrix and its transform.
void row_axpy(IntMatrix &m, size_t target, size_t source, const Integer &q) {
    for (size_t j = 0; j < m.cols(); j++) {
        m(target, j) -= q * m(source, j);
    }
}

void negate_row(IntMatrix &m, size_t r) {
    for (auto &x : m.row(r)) {
        x = -x;
    }
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix &a) {
    IntMatrix h = a;
    IntMatrix t = IntMatrix::identity(a.rows());
    size_t m = a.rows();
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < m; c++) {
        // Euclid on column c among rows r.., always pivoting on the smallest magnitude.
        while (true) {
            size_t best = m;
            for (size_t i = r; i < m; i++) {
                if (h(i, c) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) {
                    best = i;
                }
            }
            if (best == m) {
                break;
            }
            h.swap_rows(best, r);
            t.swap_rows(best, r);
            bool clean = true;
            for (size_t i = r + 1; i < m; i++) {
                if (h(i, c) == 0) {
                    continue;
                }
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                row_axpy(h, i, r, q);
                row_axpy(t, i, r, q);
                if (h(i, c) != 0) {
                    clean = false;
                }
            }
            if (clean) {
                break;
            }
        }
        if (h(r, c) == 0) {
            continue;
        }
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(t, r);
        }
        for (size_t i = 0; i < r; i++) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0) {
                row_axpy(h, i, r, q);
                row_axpy(t, i, r, q);
            }
        }
        r++;
    }
    return {std::move(h), std::move(t)};
}

IntMatrix row_lattice_basis(const IntMatrix &a) {
    HermiteForm hf = hermite_normal_form(a);
    size_t nonzero = 0;
    for (size_t i = 0; i < hf.h.rows(); i++) {
        auto row = hf.h.row(i);
        if (std::any_of(row.begin(), row.end(), [](const Integer &x) {
                return x != 0;
            })) {
            nonzero = i + 1;
        }
    }
    IntMatrix out(nonzero, a.cols());
    for (size_t i = 0; i < nonzero; i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) = hf.h(i, j);
        }
    }
    return out;
}

SmithForm smith_normal_form(const IntMatrix &a) {
    IntMatrix s = a;
    size_t rows = s.rows();
    size_t cols = s.cols();
    size_t k = 0;
    while (k < rows && k < cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        size_t pi = rows, pj = cols;
        for (size_t i = k; i < rows; i++) {
            for (size_t j = k; j < cols; j++) {
                if (s(i, j) != 0 && (pi == rows || abs(s(i, j)) < abs(s(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) {
            break;
        }
        s.swap_rows(pi, k);
        if (pj != k) {
            for (size_t i = 0; i < rows; i++) {
                std::swap(s(i, pj), s(i, k));
            }
        }

        bool dirty = false;
        for (size_t i = k + 1; i < rows; i++) {
            if (s(i, k) == 0) {
                continue;
            }
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), s(i, k).get_mpz_t(), s(k, k).get_mpz_t());
            row_axpy(s, i, k, q);
            dirty |= s(i, k) != 0;
        }
        for (size_t j = k + 1; j < cols; j++) {
            if (s(k, j) == 0) {
                continue;
            }
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), s(k, j).get_mpz_t(), s(k, k).get_mpz_t());
            for (size_t i = 0; i < rows; i++) {
                s(i, j) -= q * s(i, k);
            }
            dirty |= s(k, j) != 0;
        }
        if (dirty) {
            continue;
        }

        // Pivot must divide the whole trailing block; otherwise fold an offending row in.
        bool divides = true;
        for (size_t i = k + 1; i < rows && divides; i++) {
            for (size_t j = k + 1; j < cols; j++) {
                if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(k, k).get_mpz_t())) {
                    for (size_t jj = 0; jj < cols; jj++) {
                        s(k, jj) += s(i, jj);
                    }
                    divides = false;
                    break;
                }
            }
        }
        if (!divides) {
            continue;
        }
        if (s(k, k) < 0) {
            s(k, k) = -s(k, k);
        }
        k++;
    }
    return {std::move(s), k};
}

}  // namespace latgate
