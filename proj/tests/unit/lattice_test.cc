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


#include <gtest/gtest.h>

#include "latgate/enumerate.h"
#include "latgate/lattice.h"

using namespace latgate;

TEST(Codes, HammingAndGolayParameters) {
    LinearCode h = extended_hamming_code_8();
    EXPECT_EQ(h.length(), 8u);
    EXPECT_EQ(h.dimension(), 4u);
    EXPECT_EQ(h.minimum_distance(), 4u);
    LinearCode g3 = extended_golay_code_ternary();
    EXPECT_EQ(g3.length(), 12u);
    EXPECT_EQ(g3.dimension(), 6u);
    EXPECT_EQ(g3.minimum_distance(), 6u);
    LinearCode g2 = extended_golay_code_binary();
    EXPECT_EQ(g2.dimension(), 12u);
    EXPECT_EQ(g2.minimum_distance(), 8u);
    LinearCode rm = reed_muller_code(1, 4);
    EXPECT_EQ(rm.length(), 16u);
    EXPECT_EQ(rm.dimension(), 5u);
    EXPECT_EQ(rm.minimum_distance(), 8u);
}

TEST(Lattice, RejectsSingularBasis) {
    EXPECT_THROW(Lattice(rational_matrix({{1, 2}, {2, 4}}), 1), std::domain_error);
    EXPECT_THROW(Lattice(rational_matrix({{1, 0}, {0, 1}}), 0), std::invalid_argument);
}

TEST(Lattice, ConstructionAOfHammingIsE8) {
    Lattice l = construction_a(extended_hamming_code_8());
    EXPECT_TRUE(is_even(l));
    EXPECT_TRUE(is_unimodular(l));
    EXPECT_EQ(kissing_number(l), 240u);
}

TEST(Lattice, CatalogDeterminants) {
    EXPECT_EQ(catalog(LatticeName::D4).determinant(), Rational(4));
    EXPECT_EQ(catalog(LatticeName::Zn, 5).determinant(), Rational(1));
    EXPECT_EQ(catalog(LatticeName::BW16).determinant(), Rational(256));
    EXPECT_EQ(kissing_number(catalog(LatticeName::BW16)), 4320u);
    EXPECT_EQ(kissing_number(catalog(LatticeName::D4)), 24u);
    EXPECT_TRUE(is_unimodular(catalog(LatticeName::Leech)));
    EXPECT_FALSE(is_even(catalog(LatticeName::D12Plus)));
}

TEST(Lattice, Membership) {
    Lattice d4 = catalog(LatticeName::D4);
    std::vector<Rational> in{1, 1, 0, 0}, out{1, 0, 0, 0};
    EXPECT_TRUE(contains(d4, in));
    EXPECT_FALSE(contains(d4, out));
}

TEST(Lattice, NameRoundTrip) {
    for (auto n : {LatticeName::Zn, LatticeName::Z4Mr, LatticeName::D4, LatticeName::E8Root, LatticeName::E8Hamming,
                   LatticeName::BW16, LatticeName::D12Plus, LatticeName::Leech}) {
        EXPECT_EQ(parse_lattice_name(lattice_name_str(n)), n);
    }
    EXPECT_THROW(parse_lattice_name("e7"), std::invalid_argument);
}
