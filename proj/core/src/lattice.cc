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

#include "latgate/lattice.h"

#include <algorithm>

namespace latgate {

Lattice::Lattice(RationalMatrix basis, Rational norm_divisor, std::optional<std::string> name)
    : basis_(std::move(basis)), norm_divisor_(std::move(norm_divisor)), name_(std::move(name)) {
    if (!basis_.is_square()) {
        throw std::invalid_argument("lattice basis must be square");
    }
    if (norm_divisor_ <= 0) {
        throw std::invalid_argument("norm divisor must be positive");
    }
    if (latgate::rank(basis_) != basis_.rows()) {
        throw std::domain_error("lattice basis is singular");
    }
    gram_ = mat_mul(basis_, basis_.transpose());
}

RationalMatrix Lattice::normalized_gram() const {
    Rational inv = 1 / norm_divisor_;
    return scale(gram_, inv);
}

Rational Lattice::determinant() const {
    return latgate::determinant(normalized_gram());
}

Lattice lattice_from_basis(const RationalMatrix &basis, const Rational &norm_divisor,
                           std::optional<std::string> name) {
    return Lattice(basis, norm_divisor, std::move(name));
}

Lattice construction_a(const LinearCode &code) {
    size_t n = code.length();
    unsigned p = code.field_order();
    IntMatrix stacked(code.dimension() + n, n);
    for (size_t i = 0; i < code.dimension(); i++) {
        for (size_t j = 0; j < n; j++) {
            stacked(i, j) = code.generator()(i, j);
        }
    }
    for (size_t j = 0; j < n; j++) {
        stacked(code.dimension() + j, j) = p;
    }
    return Lattice(to_rational(row_lattice_basis(stacked)), Rational(p));
}

Lattice construction_b(const LinearCode &code) {
    if (code.field_order() != 2) {
        throw std::invalid_argument("construction B needs a binary code");
    }
    size_t n = code.length();
    if (n < 2) {
        throw std::invalid_argument("construction B needs length >= 2");
    }
    auto dist = code.weight_distribution();
    for (size_t w = 0; w < dist.size(); w++) {
        if (dist[w] != 0 && w % 4 != 0) {
            throw std::invalid_argument("construction B needs all codeword weights divisible by 4");
        }
    }
    // Code lifts (coordinate sums = weights = 0 mod 4) plus generators of 2*D_n.
    IntMatrix stacked(code.dimension() + n, n);
    for (size_t i = 0; i < code.dimension(); i++) {
        for (size_t j = 0; j < n; j++) {
            stacked(i, j) = code.generator()(i, j);
        }
    }
    size_t r = code.dimension();
    for (size_t j = 1; j < n; j++, r++) {
        stacked(r, 0) = -2;
        stacked(r, j) = 2;
    }
    stacked(r, 0) = 2;
    stacked(r, 1) = 2;
    return Lattice(to_rational(row_lattice_basis(stacked)), Rational(2));
}

bool is_integral_lattice(const Lattice &l) {
    return is_integral(l.normalized_gram());
}

bool is_even(const Lattice &l) {
    RationalMatrix g = l.normalized_gram();
    if (!is_integral(g)) {
        return false;
    }
    for (size_t i = 0; i < g.rows(); i++) {
        if (!mpz_even_p(g(i, i).get_num_mpz_t())) {
            return false;
        }
    }
    return true;
}

bool is_unimodular(const Lattice &l) {
    return abs(l.determinant()) == 1;
}

bool contains(const Lattice &l, std::span<const Rational> v) {
    if (v.size() != l.dimension()) {
        throw std::invalid_argument("vector length does not match lattice dimension");
    }
    RationalMatrix row(1, v.size(), std::vector<Rational>(v.begin(), v.end()));
    return is_integral(mat_mul(row, mat_inverse(l.basis())));
}

LatticeName parse_lattice_name(const std::string &text) {
    static const std::pair<const char *, LatticeName> table[] = {
        {"zn", LatticeName::Zn},         {"z4-mr", LatticeName::Z4Mr},   {"d4", LatticeName::D4},
        {"e8-root", LatticeName::E8Root}, {"e8-hamming", LatticeName::E8Hamming},
        {"bw16", LatticeName::BW16},     {"d12plus", LatticeName::D12Plus}, {"leech", LatticeName::Leech},
    };
    for (const auto &[key, value] : table) {
        if (text == key) {
            return value;
        }
    }
    throw std::invalid_argument("unknown lattice name: " + text);
}

std::string lattice_name_str(LatticeName name) {
    switch (name) {
        case LatticeName::Zn:
            return "zn";
        case LatticeName::Z4Mr:
            return "z4-mr";
        case LatticeName::D4:
            return "d4";
        case LatticeName::E8Root:
            return "e8-root";
        case LatticeName::E8Hamming:
            return "e8-hamming";
        case LatticeName::BW16:
            return "bw16";
        case LatticeName::D12Plus:
            return "d12plus";
        case LatticeName::Leech:
            return "leech";
    }
    throw std::invalid_argument("unknown lattice name");
}

namespace {

Lattice leech_lattice() {
    // Scaled by sqrt(8): 2c for Golay codewords c, 4*D_24, and (-3, 1, ..., 1).
    LinearCode golay = extended_golay_code_binary();
    const size_t n = 24;
    IntMatrix stacked(golay.dimension() + n + 1, n);
    size_t r = 0;
    for (; r < golay.dimension(); r++) {
        for (size_t j = 0; j < n; j++) {
            stacked(r, j) = 2 * golay.generator()(r, j);
        }
    }
    for (size_t j = 1; j < n; j++, r++) {
        stacked(r, 0) = -4;
        stacked(r, j) = 4;
    }
    stacked(r, 0) = 4;
    stacked(r, 1) = 4;
    r++;
    stacked(r, 0) = -3;
    for (size_t j = 1; j < n; j++) {
        stacked(r, j) = 1;
    }
    return Lattice(to_rational(row_lattice_basis(stacked)), Rational(8), "leech");
}

}  // namespace

Lattice catalog(LatticeName name, size_t n) {
    switch (name) {
        case LatticeName::Zn:
            if (n == 0) {
                throw std::invalid_argument("Z^n needs n >= 1");
            }
            return Lattice(RationalMatrix::identity(n), Rational(1), "z" + std::to_string(n));
        case LatticeName::Z4Mr:
            // Common eigenbasis of the Mermin-square row {XX, YY, ZZ}.
            return Lattice(rational_matrix({{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}}), Rational(2),
                           "z4-mr");
        case LatticeName::D4:
            return Lattice(rational_matrix({{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}}), Rational(1),
                           "d4");
        case LatticeName::E8Root:
            return Lattice(rational_matrix({
                               {2, -2, 0, 0, 0, 0, 0, 0},
                               {0, 2, -2, 0, 0, 0, 0, 0},
                               {0, 0, 2, -2, 0, 0, 0, 0},
                               {0, 0, 0, 2, -2, 0, 0, 0},
                               {0, 0, 0, 0, 2, -2, 0, 0},
                               {0, 0, 0, 0, 0, 2, -2, 0},
                               {0, 0, 0, 0, 0, 0, 2, -2},
                               {1, 1, 1, 1, 1, -1, -1, -1},
                           }),
                           Rational(4), "e8-root");
        case LatticeName::E8Hamming: {
            Lattice l = construction_a(extended_hamming_code_8());
            return Lattice(l.basis(), l.norm_divisor(), "e8-hamming");
        }
        case LatticeName::BW16: {
            Lattice l = construction_b(reed_muller_code(1, 4));
            return Lattice(l.basis(), l.norm_divisor(), "bw16");
        }
        case LatticeName::D12Plus: {
            Lattice l = construction_a(extended_golay_code_ternary());
            return Lattice(l.basis(), l.norm_divisor(), "d12plus");
        }
        case LatticeName::Leech:
            return leech_lattice();
    }
    throw std::invalid_argument("unknown lattice name");
}

}  // namespace latgate
