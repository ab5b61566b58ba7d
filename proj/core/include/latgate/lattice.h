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

#ifndef LATGATE_LATTICE_H
#define LATGATE_LATTICE_H

#include <optional>
#include <string>

#include "latgate/exact.h"

namespace latgate {

/// A linear code over GF(2) or GF(3), stored by a generator matrix with entries in [0, p).
class LinearCode {
   public:
    LinearCode(unsigned field_order, IntMatrix generator);

    unsigned field_order() const {
        return field_order_;
    }
    const IntMatrix &generator() const {
        return generator_;
    }
    size_t length() const {
        return generator_.cols();
    }
    size_t dimension() const {
        return generator_.rows();
    }

    /// All p^k codewords, in the order of their message digits (first row least significant).
    std::vector<std::vector<int>> codewords() const;
    /// Minimum nonzero Hamming weight (0 for the zero code).
    size_t minimum_distance() const;
    /// weight -> number of codewords.
    std::vector<size_t> weight_distribution() const;
    /// Generator * generator^T vanishes mod p and 2k == n.
    bool is_self_dual() const;

   private:
    unsigned field_order_;
    IntMatrix generator_;
};

LinearCode reed_muller_code(unsigned order, unsigned log_length);
LinearCode extended_hamming_code_8();
LinearCode extended_golay_code_ternary();
LinearCode extended_golay_code_binary();

/// Full-rank lattice given by basis rows. All predicates use gram / norm_divisor.
class Lattice {
   public:
    Lattice(RationalMatrix basis, Rational norm_divisor, std::optional<std::string> name = std::nullopt);

    const RationalMatrix &basis() const {
        return basis_;
    }
    const RationalMatrix &gram() const {
        return gram_;
    }
    const Rational &norm_divisor() const {
        return norm_divisor_;
    }
    const std::optional<std::string> &name() const {
        return name_;
    }
    size_t dimension() const {
        return basis_.rows();
    }
    /// gram / norm_divisor
    RationalMatrix normalized_gram() const;
    /// det(normalized_gram)
    Rational determinant() const;

   private:
    RationalMatrix basis_;
    RationalMatrix gram_;
    Rational norm_divisor_;
    std::optional<std::string> name_;
};

/// Rejects non-square or singular bases and non-positive divisors.
Lattice lattice_from_basis(const RationalMatrix &basis, const Rational &norm_divisor,
                           std::optional<std::string> name = std::nullopt);

/// Integer vectors congruent mod p to a codeword; norm_divisor p.
Lattice construction_a(const LinearCode &code);
/// Construction A vectors with coordinate sum = 0 mod 4; binary doubly-even codes only.
Lattice construction_b(const LinearCode &code);

bool is_integral_lattice(const Lattice &l);
bool is_even(const Lattice &l);
bool is_unimodular(const Lattice &l);

/// Exact membership test: v (ambient coordinates) is an integer combination of basis rows.
bool contains(const Lattice &l, std::span<const Rational> v);

enum class LatticeName { Zn, Z4Mr, D4, E8Root, E8Hamming, BW16, D12Plus, Leech };

/// Parses CLI names ("zn", "z4-mr", "d4", "e8-root", "e8-hamming", "bw16", "d12plus", "leech").
LatticeName parse_lattice_name(const std::string &text);
std::string lattice_name_str(LatticeName name);

/// `n` is only used by LatticeName::Zn.
Lattice catalog(LatticeName name, size_t n = 4);

}  // namespace latgate

#endif
