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

#include "latgate/entangle.h"
#include "latgate/fixtures.h"

using namespace latgate;

namespace {

MultipartiteState state(std::vector<size_t> dims, std::vector<std::pair<size_t, long>> amps, long den) {
    FactorShape shape = make_shape(std::move(dims));
    std::vector<Rational> a(shape.total());
    for (auto [i, v] : amps) {
        a[i] = make_rational(v, den);
    }
    return make_state(shape, a);
}

}  // namespace

TEST(Shape, MixedRadixIsBigEndian) {
    FactorShape s = FactorShape::parse("3x2x2");
    EXPECT_EQ(s.total(), 12u);
    EXPECT_EQ(s.index({2, 0, 1}), 9u);
    EXPECT_EQ(s.digits(9), (std::vector<size_t>{2, 0, 1}));
    EXPECT_EQ(s.str(), "3,2,2");
    EXPECT_THROW(make_shape({2, 1}), std::invalid_argument);
}

TEST(State, NormIsCheckedExactly) {
    EXPECT_THROW(state({2, 2}, {{0, 1}, {3, 1}}, 1), std::domain_error);
    EXPECT_THROW(make_state(make_shape({2, 2}), {1, 0, 0}), std::invalid_argument);
}

TEST(Tangle, GhzAndW) {
    // GHZ: (|000> + |111>)/sqrt 2 is not rational; the rational GHZ-class state
    // (|000> + |011> + |101> - |110>)/2 has tau3 = 1.
    MultipartiteState ghz = state({2, 2, 2}, {{0, 1}, {3, 1}, {5, 1}, {6, -1}}, 2);
    EXPECT_EQ(three_tangle(ghz), Rational(1));
    // W-class with rational amplitudes: (2|001> + 2|010> + |100>)/3.
    MultipartiteState w = state({2, 2, 2}, {{1, 2}, {2, 2}, {4, 1}}, 3);
    EXPECT_EQ(three_tangle(w), Rational(0));
    DensityMatrix rho = density_matrix(w);
    // Pure-state W tangles: tau_ij = 4 |a_i a_j|^2.
    EXPECT_NEAR(two_tangle(partial_trace(rho, {1, 2})), 4.0 * 16 / 81, 1e-12);
    EXPECT_NEAR(two_tangle(partial_trace(rho, {0, 1})), 4.0 * 4 / 81, 1e-12);
}

TEST(Tangle, ProductStateIsZero) {
    MultipartiteState p = state({2, 2}, {{0, 3}, {1, 4}}, 5);
    EXPECT_EQ(two_tangle(density_matrix(p)), 0.0);
}

TEST(PartialTrace, KeepsTraceAndHermiticity) {
    MultipartiteState s = fixture_state("leech-row");
    DensityMatrix rho = density_matrix(s);
    for (std::vector<size_t> keep : {std::vector<size_t>{0}, {1, 2}, {0, 2}}) {
        DensityMatrix r = partial_trace(rho, keep);
        Rational tr = 0;
        for (size_t i = 0; i < r.entries.rows(); i++) {
            tr += r.entries(i, i);
        }
        EXPECT_EQ(tr, 1);
        EXPECT_EQ(r.entries, r.entries.transpose());
    }
    EXPECT_THROW(partial_trace(rho, {2, 1}), std::invalid_argument);
}

TEST(Reshape, PermuteFactorsMovesDigits) {
    MultipartiteState s = fixture_state("d12plus-row");
    MultipartiteState t = permute_factors(s, {1, 2, 0});
    EXPECT_EQ(t.shape.str(), "2,2,3");
    for (size_t i = 0; i < s.shape.total(); i++) {
        auto d = s.shape.digits(i);
        EXPECT_EQ(t.amplitudes[t.shape.index({d[1], d[2], d[0]})], s.amplitudes[i]);
    }
}

TEST(Schmidt, RankAcrossCuts) {
    EXPECT_EQ(schmidt_rank(fixture_state("d12plus-row"), {0}), 3u);
    EXPECT_EQ(schmidt_rank(fixture_state("leech-row"), {0}), 4u);
    MultipartiteState p = state({2, 2}, {{0, 3}, {1, 4}}, 5);
    EXPECT_EQ(schmidt_rank(p, {0}), 1u);
}

TEST(Ppt, TwoQubitBellStateIsEntangledAndProductIsSeparable) {
    MultipartiteState bell = state({2, 2}, {{0, 1}, {1, 1}, {2, 1}, {3, -1}}, 2);
    PptSpectrum e = ppt_spectrum(density_matrix(bell), 0);
    EXPECT_TRUE(e.entangled);
    EXPECT_NEAR(e.eigenvalues.back(), -0.5, 1e-12);
    PptSpectrum p = ppt_spectrum(density_matrix(state({2, 2}, {{0, 3}, {1, 4}}, 5)), 0);
    EXPECT_FALSE(p.entangled);
    EXPECT_TRUE(p.separable);
}

TEST(Pauli, ObservablesAndEigenbases) {
    RationalMatrix yy = pauli_observable("YY");
    EXPECT_EQ(yy(0, 3), Rational(-1));
    EXPECT_EQ(yy(1, 2), Rational(1));
    EXPECT_EQ(pauli_observable("-ZZ")(0, 0), Rational(-1));
    EXPECT_THROW(pauli_observable("XY"), std::invalid_argument);
    // Rows |00>+|11> and |00>-|11> are eigenvectors of ZZ and XX.
    RationalMatrix rows = rational_matrix({{1, 0, 0, 1}, {1, 0, 0, -1}});
    EXPECT_TRUE(common_eigenbasis_check(rows, {pauli_observable("ZZ"), pauli_observable("XX")}));
    EXPECT_FALSE(common_eigenbasis_check(rows, {pauli_observable("ZI")}));
    EXPECT_THROW(common_eigenbasis_check(rows, {pauli_observable("XI"), pauli_observable("ZI")}),
                 std::invalid_argument);
}

TEST(Analysis, MeasuresParse) {
    AnalysisOptions o = AnalysisOptions::from_measures("tangle3,ppt");
    EXPECT_TRUE(o.tangle3);
    EXPECT_FALSE(o.tangle2);
    EXPECT_TRUE(o.ppt);
    EXPECT_THROW(AnalysisOptions::from_measures("bogus"), std::invalid_argument);
}

TEST(Analysis, ResidualOnFourQubits) {
    TangleReport r = analyze_state(fixture_state("bw16-row"), AnalysisOptions{});
    ASSERT_FALSE(r.residual.empty());
    bool found = false;
    for (const auto &e : r.residual) {
        found = found || (e.factor == 0 && e.tau3 == 1);
    }
    EXPECT_TRUE(found);
}

TEST(Analysis, GateRowsKeepOrder) {
    AnalysisOptions o;
    o.threads = 3;
    auto reports = analyze_gate(fixture_gate("e8-root-g2"), make_shape({2, 2, 2}), o);
    ASSERT_EQ(reports.size(), 8u);
    for (size_t i = 0; i < reports.size(); i++) {
        EXPECT_EQ(reports[i].row, i);
        EXPECT_EQ(*reports[i].tau3, Rational(1, 4));
    }
}
