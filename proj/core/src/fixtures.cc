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

#include "latgate/fixtures.h"

namespace latgate {

namespace {

FactorShape qubits(size_t k) {
    return make_shape(std::vector<size_t>(k, 2));
}

RationalMatrix state_row(size_t length, std::initializer_list<std::pair<size_t, long>> entries, long den) {
    RationalMatrix m(1, length);
    for (const auto &[index, value] : entries) {
        m(0, index) = make_rational(value, den);
    }
    return m;
}

std::vector<Fixture> build() {
    std::vector<Fixture> out;

    out.push_back({"cnot", FixtureKind::Gate,
                   rational_matrix({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}), qubits(2),
                   LatticeName::Zn, 4, ""});
    out.push_back({"mr", FixtureKind::Basis,
                   rational_matrix({{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, 1, 0}, {0, 1, -1, 0}}), qubits(2),
                   std::nullopt, 4, ""});
    out.push_back({"z4-s", FixtureKind::Gate,
                   rational_matrix({{1, -1, 1, 1}, {1, 1, 1, -1}, {1, -1, -1, -1}, {1, 1, -1, 1}}, 2), qubits(2),
                   LatticeName::Z4Mr, 4, ""});
    out.push_back({"z4-s-prime", FixtureKind::Gate,
                   rational_matrix({{1, -1, 1, -1}, {-1, 1, 1, -1}, {1, 1, 1, 1}, {-1, -1, 1, 1}}, 2), qubits(2),
                   LatticeName::Z4Mr, 4, ""});
    out.push_back({"d4-g1", FixtureKind::Gate,
                   rational_matrix({{1, -1, 1, 1}, {1, 1, 1, -1}, {1, -1, -1, -1}, {-1, -1, 1, -1}}, 2), qubits(2),
                   LatticeName::D4, 4, ""});
    out.push_back({"d4-g2", FixtureKind::Gate,
                   rational_matrix({{1, -1, 1, 1}, {-1, 1, 1, 1}, {-1, -1, 1, -1}, {1, 1, 1, -1}}, 2), qubits(2),
                   LatticeName::D4, 4, ""});
    out.push_back({"e8-root-g1", FixtureKind::Gate,
                   rational_matrix({{0, 0, -1, -1, 1, 0, 1, 0},
                                    {1, -1, 0, 0, 0, -1, 0, -1},
                                    {0, 0, 1, -1, 1, 0, -1, 0},
                                    {-1, -1, 0, 0, 0, 1, 0, -1},
                                    {-1, -1, 0, 0, 0, -1, 0, 1},
                                    {0, 0, -1, 1, 1, 0, -1, 0},
                                    {0, 0, -1, -1, -1, 0, -1, 0},
                                    {1, -1, 0, 0, 0, 1, 0, 1}},
                                   2),
                   qubits(3), LatticeName::E8Root, 4, ""});
    out.push_back({"e8-root-g2", FixtureKind::Gate,
                   rational_matrix({{1, -1, 0, 0, 0, 1, 1, 0},
                                    {-1, 1, 0, 0, 0, 1, 1, 0},
                                    {0, 0, 1, 1, 1, 0, 0, 1},
                                    {0, 0, -1, -1, 1, 0, 0, 1},
                                    {0, 0, 1, -1, -1, 0, 0, 1},
                                    {-1, -1, 0, 0, 0, -1, 1, 0},
                                    {0, 0, -1, 1, -1, 0, 0, 1},
                                    {-1, -1, 0, 0, 0, 1, -1, 0}},
                                   2),
                   qubits(3), LatticeName::E8Root, 4, ""});
    out.push_back({"e8-hamming-g1", FixtureKind::Gate,
                   rational_matrix({{0, 1, -1, 0, 1, 0, 0, 1},
                                    {1, -1, 0, 0, 1, 0, -1, 0},
                                    {-1, 0, -1, 0, 0, 0, -1, -1},
                                    {0, 0, 0, -2, 0, 0, 0, 0},
                                    {1, 1, 0, 0, -1, 0, -1, 0},
                                    {0, 0, 0, 0, 0, -2, 0, 0},
                                    {0, -1, 1, 0, -1, 0, 0, 1},
                                    {1, 0, -1, 0, 0, 0, 1, -1}},
                                   2),
                   qubits(3), LatticeName::E8Hamming, 4,
                   "rows 4 and 6 are printed as a lone -1 inside the 1/2 factor (norm 1/4); read as -1. "
                   "Row 7 as printed is not orthogonal to rows 1, 3 and 8, so this matrix is not an "
                   "automorphism; it is kept for per-row analysis only."});
    out.push_back({"e8-hamming-g2", FixtureKind::Gate,
                   rational_matrix({{0, 1, 0, 0, 0, 1, -1, -1},
                                    {1, 0, -1, -1, 1, 0, 0, 0},
                                    {1, 0, 0, 0, -1, -1, 0, -1},
                                    {-1, -1, 0, -1, 0, 0, 0, -1},
                                    {0, 0, 0, 1, 1, 0, 1, -1},
                                    {0, -1, -1, 1, 0, 0, -1, 0},
                                    {1, -1, 1, 0, 0, 1, 0, 0},
                                    {0, 0, -1, 0, -1, 1, 1, 0}},
                                   2),
                   qubits(3), LatticeName::E8Hamming, 4, ""});

    // Single states, amplitudes indexed big-endian.
    out.push_back({"z8-g1-row4", FixtureKind::State, state_row(8, {{0, 1}, {1, -1}, {4, 1}, {6, -1}}, 2), qubits(3),
                   std::nullopt, 4, ""});
    out.push_back({"e8-root-g2-row1", FixtureKind::State, state_row(8, {{0, 1}, {1, -1}, {5, 1}, {6, 1}}, 2),
                   qubits(3), std::nullopt, 4, ""});
    out.push_back({"e8-hamming-ghz", FixtureKind::State, state_row(8, {{1, 1}, {2, -1}, {4, 1}, {7, 1}}, 2),
                   qubits(3), std::nullopt, 4, ""});
    out.push_back({"bw16-row", FixtureKind::State, state_row(16, {{0, 1}, {3, -1}, {5, -1}, {6, 1}}, 2), qubits(4),
                   std::nullopt, 4, ""});
    out.push_back({"d12plus-row", FixtureKind::State,
                   state_row(12, {{0, 2}, {1, 1}, {2, -1}, {3, 1}, {6, 1}, {8, 1}}, 3), make_shape({3, 2, 2}),
                   std::nullopt, 4, ""});
    out.push_back({"d12plus-row-223", FixtureKind::State,
                   state_row(12, {{0, 2}, {1, 1}, {2, 1}, {4, -1}, {8, -1}, {10, 1}}, 3), make_shape({3, 2, 2}),
                   std::nullopt, 4,
                   "printed as the two-qubit/qutrit regrouping of d12plus-row, written qutrit first; the "
                   "ket |2000> is read as |200>. The sign of |100> differs from the exact regrouping, which "
                   "does not change the reduced state of the two qubits."});
    out.push_back({"leech-row", FixtureKind::State,
                   state_row(24,
                             {{1, -2}, {4, 1}, {5, 1}, {8, 1}, {10, 1}, {12, 1}, {15, 1}, {20, -1}, {21, -1}, {22, -2}},
                             4),
                   make_shape({6, 2, 2}), std::nullopt, 4, ""});
    return out;
}

}  // namespace

const std::vector<Fixture> &fixtures() {
    static const std::vector<Fixture> all = build();
    return all;
}

const Fixture &fixture(const std::string &name) {
    for (const auto &f : fixtures()) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

MultipartiteState fixture_state(const std::string &name) {
    const Fixture &f = fixture(name);
    if (f.kind != FixtureKind::State) {
        throw std::invalid_argument("fixture '" + name + "' is not a state");
    }
    auto r = f.rows.row(0);
    return make_state(f.shape, std::vector<Rational>(r.begin(), r.end()));
}

OrthogonalGate fixture_gate(const std::string &name) {
    const Fixture &f = fixture(name);
    if (f.kind != FixtureKind::Gate) {
        throw std::invalid_argument("fixture '" + name + "' is not a gate");
    }
    return {f.rows};
}

std::string fixture_kind_str(FixtureKind kind) {
    switch (kind) {
        case FixtureKind::Gate:
            return "gate";
        case FixtureKind::State:
            return "state";
        case FixtureKind::Basis:
            return "basis";
    }
    return "?";
}

}  // namespace latgate
