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
#include <cstdint>

#include "latgate/lattice.h"

namespace latgate {

LinearCode::LinearCode(unsigned field_order, IntMatrix generator)
    : field_order_(field_order), generator_(std::move(generator)) {
    if (field_order_ != 2 && field_order_ != 3) {
        throw std::invalid_argument("only GF(2) and GF(3) codes are supported");
    }
    for (size_t i = 0; i < generator_.rows(); i++) {
        for (auto &x : generator_.row(i)) {
            x %= static_cast<unsigned long>(field_order_);
            if (x < 0) {
                x += field_order_;
            }
        }
    }
    // Rank over GF(p) must equal the number of rows.
    std::vector<std::vector<int>> m(generator_.rows(), std::vector<int>(generator_.cols()));
    for (size_t i = 0; i < generator_.rows(); i++) {
        for (size_t j = 0; j < generator_.cols(); j++) {
            m[i][j] = static_cast<int>(generator_(i, j).get_si());
        }
    }
    int p = static_cast<int>(field_order_);
    size_t r = 0;
    for (size_t c = 0; c < generator_.cols() && r < m.size(); c++) {
        size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) {
            piv++;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[r]);
        int inv = m[r][c];  // self-inverse in GF(2) and GF(3)
        for (auto &x : m[r]) {
            x = (x * inv) % p;
        }
        for (size_t i = 0; i < m.size(); i++) {
            if (i != r && m[i][c] != 0) {
                int f = m[i][c];
                for (size_t j = 0; j < m[i].size(); j++) {
                    m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
                }
            }
        }
        r++;
    }
    if (r != generator_.rows()) {
        throw std::invalid_argument("code generator rows are linearly dependent");
    }
}

std::vector<std::vector<int>> LinearCode::codewords() const {
    size_t k = dimension();
    size_t n = length();
    int p = static_cast<int>(field_order_);
    size_t total = 1;
    for (size_t i = 0; i < k; i++) {
        total *= field_order_;
    }
    std::vector<std::vector<int>> out;
    out.reserve(total);
    std::vector<int> digits(k, 0);
    for (size_t idx = 0; idx < total; idx++) {
        std::vector<int> w(n, 0);
        for (size_t i = 0; i < k; i++) {
            if (digits[i] == 0) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                w[j] = (w[j] + digits[i] * static_cast<int>(generator_(i, j).get_si())) % p;
            }
        }
        out.push_back(std::move(w));
        for (size_t i = 0; i < k; i++) {
            if (++digits[i] < p) {
                break;
            }
            digits[i] = 0;
        }
    }
    return out;
}

std::vector<size_t> LinearCode::weight_distribution() const {
    std::vector<size_t> dist(length() + 1, 0);
    for (const auto &w : codewords()) {
        dist[static_cast<size_t>(std::count_if(w.begin(), w.end(), [](int x) {
            return x != 0;
        }))]++;
    }
    return dist;
}

size_t LinearCode::minimum_distance() const {
    auto dist = weight_distribution();
    for (size_t w = 1; w < dist.size(); w++) {
        if (dist[w] != 0) {
            return w;
        }
    }
    return 0;
}

bool LinearCode::is_self_dual() const {
    if (2 * dimension() != length()) {
        return false;
    }
    IntMatrix prod = mat_mul(generator_, generator_.transpose());
    return std::all_of(prod.data().begin(), prod.data().end(), [&](const Integer &x) {
        return mpz_divisible_ui_p(x.get_mpz_t(), field_order_) != 0;
    });
}

LinearCode reed_muller_code(unsigned order, unsigned log_length) {
    if (log_length == 0 || log_length > 12 || order > log_length) {
        throw std::invalid_argument("unsupported Reed-Muller parameters");
    }
    size_t n = size_t{1} << log_length;
    // Monomials as variable subsets, ordered by degree then by subset bitmask.
    std::vector<uint32_t> monomials;
    for (unsigned deg = 0; deg <= order; deg++) {
        for (uint32_t mask = 0; mask < (1u << log_length); mask++) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) == deg) {
                monomials.push_back(mask);
            }
        }
    }
    IntMatrix g(monomials.size(), n);
    for (size_t r = 0; r < monomials.size(); r++) {
        for (size_t point = 0; point < n; point++) {
            // Variable i reads bit (m-1-i) of the point index.
            bool value = true;
            for (unsigned i = 0; i < log_length; i++) {
                if ((monomials[r] >> i) & 1u) {
                    value = value && ((point >> (log_length - 1 - i)) & 1u);
                }
            }
            g(r, point) = value ? 1 : 0;
        }
    }
    return LinearCode(2, std::move(g));
}

namespace {

IntMatrix binary_rows(std::initializer_list<uint32_t> masks, size_t n) {
    IntMatrix g(masks.size(), n);
    size_t r = 0;
    for (uint32_t m : masks) {
        for (size_t j = 0; j < n; j++) {
            g(r, j) = (m >> (n - 1 - j)) & 1u;
        }
        r++;
    }
    return g;
}

}  // namespace

LinearCode extended_hamming_code_8() {
    // Coordinate labelling chosen so that the printed Hamming-rep generators of Aut(E8)
    // act on the resulting Construction A lattice.
    return LinearCode(2, binary_rows({0b10001101, 0b01000111, 0b00101110, 0b00011011}, 8));
}

LinearCode extended_golay_code_ternary() {
    // [I_6 | A] with A the Paley-type circulant border.
    return LinearCode(3, int_matrix({
                             {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
                             {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
                             {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2},
                             {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
                             {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1},
                             {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0},
                         }));
}

LinearCode extended_golay_code_binary() {
    // Systematic form of the extended quadratic-residue code of length 23.
    return LinearCode(2, binary_rows({0x800ae3, 0x400f92, 0x200d2b, 0x100c76, 0x080cd9, 0x04066d, 0x020337,
                                      0x010b78, 0x0085bc, 0x0042de, 0x002b8d, 0x0015c7},
                                     24));
}

}  // namespace latgate
