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

#ifndef LATGATE_ENTANGLE_H
#define LATGATE_ENTANGLE_H

#include <optional>
#include <string>
#include <vector>

#include "latgate/autgrp.h"
#include "latgate/exact.h"

namespace latgate {

/// Factor dimensions, leftmost most significant: |i1 i2 ... ik> has flat index
/// sum_j i_j * prod_{l>j} d_l.
struct FactorShape {
    std::vector<size_t> dims;

    size_t total() const;
    size_t size() const {
        return dims.size();
    }
    /// Digits of a flat index.
    std::vector<size_t> digits(size_t index) const;
    size_t index(const std::vector<size_t> &digits) const;
    bool operator==(const FactorShape &) const = default;

    /// "3,2,2" or "3x2x2".
    static FactorShape parse(const std::string &text);
    std::string str() const;
};

/// Validates dims >= 2.
FactorShape make_shape(std::vector<size_t> dims);

struct MultipartiteState {
    FactorShape shape;
    std::vector<Rational> amplitudes;
};

/// Throws std::invalid_argument on a length mismatch and std::domain_error unless the
/// squared norm is exactly 1.
MultipartiteState make_state(FactorShape shape, std::vector<Rational> amplitudes);

struct DensityMatrix {
    FactorShape shape;
    RationalMatrix entries;
};

MultipartiteState state_from_row(const OrthogonalGate &g, size_t row, const FactorShape &shape);

/// Same flat amplitude vector under a different factor structure.
MultipartiteState reinterpret(const MultipartiteState &s, const FactorShape &shape);
/// New factor k is old factor order[k].
MultipartiteState permute_factors(const MultipartiteState &s, const std::vector<size_t> &order);
/// Permutes factors (empty `order` = keep), then reinterprets the flat vector as `shape`.
MultipartiteState reshape(const MultipartiteState &s, const FactorShape &shape, const std::vector<size_t> &order = {});

DensityMatrix density_matrix(const MultipartiteState &s);
/// Keeps the factors listed in `keep` (strictly increasing) and traces out the rest.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep);

/// (Y x Y) rho (Y x Y); rho is real so conjugation is trivial. Shape must be (2,2).
DensityMatrix spin_flip(const DensityMatrix &rho);
/// Eigenvalues of rho * spin_flip(rho), non-increasing, via sqrt(rho) rho~ sqrt(rho). Eigenvalues
/// past the exact rank of the rational product are reported as 0.
std::vector<double> concurrence_spectrum(const DensityMatrix &rho);
/// C^2 with C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)). Eigenvalues in (-tol, 0) are
/// clamped; anything lower throws std::domain_error. A concurrence below 1e-12 is rounding noise
/// and reported as exactly 0.
double two_tangle(const DensityMatrix &rho, double tol = 1e-10);

/// 4 |(T001 - T000)^2 - 4 P1 P0| from the four 2x2 amplitude determinants.
Rational three_tangle(const MultipartiteState &s);

/// The state with factor `factor` removed, if s = |value> (x) rest exactly.
std::optional<MultipartiteState> factor_out(const MultipartiteState &s, size_t factor, size_t value);
/// three_tangle(factor_out(...)); throws std::domain_error if the state does not factorize.
Rational residual_three_tangle(const MultipartiteState &s, size_t factor, size_t value);

/// Rank of the amplitude matrix with the factors in `left` as rows (Smith form over Z).
size_t schmidt_rank(const MultipartiteState &s, const std::vector<size_t> &left);

RationalMatrix partial_transpose(const DensityMatrix &rho, size_t part);

struct PptSpectrum {
    std::vector<double> eigenvalues;  // non-increasing
    bool entangled = false;           // min eigenvalue < -tol
    bool separable = false;           // positive and total dimension <= 6
};
PptSpectrum ppt_spectrum(const DensityMatrix &rho, size_t part, double tol = 1e-10);

/// Tensor product of Pauli letters, e.g. "XZ", "-YY", "ZXZ". Requires an even number of Y.
RationalMatrix pauli_observable(const std::string &word);

/// Every row of `rows` (nonzero, any scale) is an eigenvector with eigenvalue +-1 of every
/// observable. Throws std::invalid_argument if two observables do not commute.
bool common_eigenbasis_check(const RationalMatrix &rows, const std::vector<RationalMatrix> &observables);

struct SchmidtEntry {
    std::string cut;  // e.g. "A|BC"
    size_t rank;
};

struct PptEntry {
    std::string label;  // e.g. "AB^TA"
    PptSpectrum spectrum;
};

struct ResidualEntry {
    size_t factor;
    size_t value;
    Rational tau3;
};

struct TangleReport {
    size_t row = 0;
    std::optional<Rational> tau3;
    std::optional<double> tau_ab, tau_ac, tau_bc;
    std::vector<SchmidtEntry> schmidt;
    std::vector<PptEntry> ppt;
    std::vector<ResidualEntry> residual;
};

struct AnalysisOptions {
    bool tangle3 = true;
    bool tangle2 = true;
    bool schmidt = true;
    bool ppt = true;
    bool residual = true;
    double tol = 1e-10;
    unsigned threads = 1;

    /// Comma separated subset of tangle3,tangle2,schmidt,ppt,residual; "all" enables everything.
    static AnalysisOptions from_measures(const std::string &measures);
};

TangleReport analyze_state(const MultipartiteState &s, const AnalysisOptions &opts);
/// One report per row, in row order regardless of `threads`.
std::vector<TangleReport> analyze_gate(const OrthogonalGate &g, const FactorShape &shape, const AnalysisOptions &opts);

/// "A", "B", ... for factor indices.
std::string factor_label(size_t factor);

}  // namespace latgate

#endif
