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

#ifndef LATGATE_JSON_IO_H
#define LATGATE_JSON_IO_H

#include <nlohmann/json.hpp>

#include "latgate/autgrp.h"
#include "latgate/entangle.h"
#include "latgate/enumerate.h"
#include "latgate/lattice.h"

namespace latgate {

using Json = nlohmann::ordered_json;

/// Raised for malformed input documents.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// {"rows": n, "cols": m, "den": q, "num": [[...]]}, q the LCM of entry denominators.
Json matrix_to_json(const RationalMatrix &m);
Json matrix_to_json(const IntMatrix &m);
RationalMatrix matrix_from_json(const Json &j);

/// {"name": str|null, "basis": <matrix>, "norm_divisor": "p/q"}
Json lattice_to_json(const Lattice &l);
Lattice lattice_from_json(const Json &j);

/// {"field": 2|3, "generator": <matrix with den 1>}
Json code_to_json(const LinearCode &c);
LinearCode code_from_json(const Json &j);

/// {"shape": [d1, ...], "den": q, "num": [...]}
Json state_to_json(const MultipartiteState &s);
MultipartiteState state_from_json(const Json &j);

/// {"bound": "p/q", "count": n, "by_norm": {"2": n2, ...}}
Json short_vectors_to_json(const ShortVectorSet &s);

/// {"lattice", "order", "complete", "orbit_sizes", "generators_integral", "generators_natural"}
Json aut_to_json(const Lattice &l, const AutGroupResult &r);

/// Generators from an aut document: integral ones if present, otherwise the natural ones
/// converted with U = M B M^-1 (which must be integral).
struct ImportedGenerators {
    std::vector<IntegralAutomorphism> integral;
    std::vector<OrthogonalGate> natural;  // empty if the document has none
};
ImportedGenerators generators_from_json(const Json &j);

/// 12 significant digits.
double round_sig(double v);

Json report_to_json(const TangleReport &r);

/// Reads a whole file; throws ParseError when unreadable or not JSON.
Json read_json_file(const std::string &path);

}  // namespace latgate

#endif
