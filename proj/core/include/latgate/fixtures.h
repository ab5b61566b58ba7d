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

#ifndef LATGATE_FIXTURES_H
#define LATGATE_FIXTURES_H

#include <optional>
#include <string>
#include <vector>

#include "latgate/entangle.h"
#include "latgate/lattice.h"

namespace latgate {

enum class FixtureKind { Gate, State, Basis };

/// Built-in matrices and states. Gates are natural-action matrices for `lattice`; states are
/// single rows; bases are unnormalized rows for eigenbasis checks.
struct Fixture {
    std::string name;
    FixtureKind kind;
    RationalMatrix rows;
    FactorShape shape;
    std::optional<LatticeName> lattice;
    size_t lattice_n = 4;
    std::string note;  // transcription issues, empty if none
};

const std::vector<Fixture> &fixtures();
/// Throws std::invalid_argument for an unknown name.
const Fixture &fixture(const std::string &name);

MultipartiteState fixture_state(const std::string &name);
OrthogonalGate fixture_gate(const std::string &name);

std::string fixture_kind_str(FixtureKind kind);

}  // namespace latgate

#endif
