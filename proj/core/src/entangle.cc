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

#include "latgate/entangle.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "latgate/numerics.h"

namespace latgate {

size_t FactorShape::total() const {
    size_t t = 1;
    for (size_t d : dims) {
        t *= d;
    }
    return t;
}

std::vector<size_t> FactorShape::digits(size_t index) const {
    std::vector<size_t> out(dims.size());
    for (size_t k = dims.size(); k-- > 0;) {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    return out;
}

size_t FactorShape::index(const std::vector<size_t> &digits) const {
    size_t out = 0;
    for (size_t k = 0; k < dims.size(); k++) {
        out = out * dims[k] + digits[k];
    }
    return out;
}

FactorShape FactorShape::parse(const std::string &text) {
    std::vector<size_t> dims;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, text.find('x') != std::string::npos ? 'x' : ',')) {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size()) {
            throw std::invalid_argument("bad shape '" + text + "'");
        }
        dims.push_back(v);
    }
    return make_shape(std::move(dims));
}

std::string FactorShape::str() const {
    std::string out;
    for (size_t k = 0; k < dims.size(); k++) {
        out += (k ? "," : "") + std::to_string(dims[k]);
    }
    return out;
}

FactorShape make_shape(std::vector<size_t> dims) {
    if (dims.empty()) {
        throw std::invalid_argument("shape needs at least one factor");
    }
    for (size_t d : dims) {
        if (d < 2) {
            throw std::invalid_argument("factor dimensions must be at least 2");
        }
    }
    return FactorShape{std::move(dims)};
}

std::string factor_label(size_t factor) {
    return std::string(1, static_cast<char>('A' + factor));
}

MultipartiteState make_state(FactorShape shape, std::vector<Rational> amplitudes) {
    if (amplitudes.size() != shape.total()) {
        throw std::invalid_argument("state length " + std::to_string(amplitudes.size()) + " does not match shape " +
                                    shape.str());
    }
    Rational norm = 0;
    for (const auto &a : amplitudes) {
        norm += a * a;
    }
    if (norm != 1) {
        throw std::domain_error("state has squared norm " + to_string(norm));
    }
    return {std::move(shape), std::move(amplitudes)};
}

MultipartiteState state_from_row(const OrthogonalGate &g, size_t row, const FactorShape &shape) {
    if (row >= g.b.rows()) {
        throw std::out_of_range("row index out of range");
    }
    if (shape.total() != g.b.cols()) {
        throw std::invalid_argument("shape " + shape.str() + " does not match gate dimension " +
                                    std::to_string(g.b.cols()));
    }
    auto r = g.b.row(row);
    return make_state(shape, std::vector<Rational>(r.begin(), r.end()));
}

MultipartiteState reinterpret(const MultipartiteState &s, const FactorShape &shape) {
    if (shape.total() != s.shape.total()) {
        throw std::invalid_argument("cannot reinterpret " + s.shape.str() + " as " + shape.str());
    }
    return {shape, s.amplitudes};
}

MultipartiteState permute_factors(const MultipartiteState &s, const std::vector<size_t> &order) {
    const size_t k = s.shape.size();
    std::vector<size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); i++) {
        if (sorted.size() != k || sorted[i] != i) {
            throw std::invalid_argument("factor order is not a permutation");
        }
    }
    FactorShape out_shape;
    for (size_t i : order) {
        out_shape.dims.push_back(s.shape.dims[i]);
    }
    std::vector<Rational> amps(s.amplitudes.size());
    std::vector<size_t> nd(k);
    for (size_t idx = 0; idx < amps.size(); idx++) {
        std::vector<size_t> d = s.shape.digits(idx);
        for (size_t i = 0; i < k; i++) {
            nd[i] = d[order[i]];
        }
        amps[out_shape.index(nd)] = s.amplitudes[idx];
    }
    return {out_shape, std::move(amps)};
}

MultipartiteState reshape(const MultipartiteState &s, const FactorShape &shape, const std::vector<size_t> &order) {
    return reinterpret(order.empty() ? s : permute_factors(s, order), shape);
}

DensityMatrix density_matrix(const MultipartiteState &s) {
    const size_t n = s.amplitudes.size();
    RationalMatrix rho(n, n);
    for (size_t i = 0; i < n; i++) {
        if (s.amplitudes[i] == 0) {
            continue;
        }
        for (size_t j = 0; j < n; j++) {
            rho(i, j) = s.amplitudes[i] * s.amplitudes[j];
        }
    }
    return {s.shape, std::move(rho)};
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<size_t> &keep) {
    const size_t k = rho.shape.size();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: nothing to keep");
    }
    for (size_t i = 0; i < keep.size(); i++) {
        if (keep[i] >= k || (i > 0 && keep[i] <= keep[i - 1])) {
            throw std::invalid_argument("partial_trace: invalid subsystem list");
        }
    }
    FactorShape out_shape;
    for (size_t f : keep) {
        out_shape.dims.push_back(rho.shape.dims[f]);
    }
    std::vector<char> kept(k, 0);
    for (size_t f : keep) {
        kept[f] = 1;
    }
    const size_t n = rho.shape.total();
    RationalMatrix out(out_shape.total(), out_shape.total());
    std::vector<size_t> sub(keep.size());
    std::vector<std::vector<size_t>> digits(n);
    std::vector<size_t> reduced(n);
    for (size_t i = 0; i < n; i++) {
        digits[i] = rho.shape.digits(i);
        for (size_t t = 0; t < keep.size(); t++) {
            sub[t] = digits[i][keep[t]];
        }
        reduced[i] = out_shape.index(sub);
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (rho.entries(i, j) == 0) {
                continue;
            }
            bool same = true;
            for (size_t f = 0; f < k && same; f++) {
                same = kept[f] || digits[i][f] == digits[j][f];
            }
            if (same) {
                out(reduced[i], reduced[j]) += rho.entries(i, j);
            }
        }
    }
    return {out_shape, std::move(out)};
}

namespace {

void require_two_qubits(const DensityMatrix &rho) {
    if (rho.shape.dims != std::vector<size_t>{2, 2}) {
        throw std::invalid_argument("expected a two-qubit density matrix, got shape " + rho.shape.str());
    }
}

}  // namespace

DensityMatrix spin_flip(const DensityMatrix &rho) {
    require_two_qubits(rho);
    RationalMatrix yy = pauli_observable("YY");
    return {rho.shape, mat_mul(mat_mul(yy, rho.entries), yy)};
}

std::vector<double> concurrence_spectrum(const DensityMatrix &rho) {
    require_two_qubits(rho);
    RationalMatrix tilde = spin_flip(rho).entries;
    size_t r_rho = rank(rho.entries);
    size_t r_prod = rank(mat_mul(rho.entries, tilde));
    RealMatrix s = psd_sqrt(to_real(rho.entries), r_rho);
    RealMatrix m = multiply(multiply(s, to_real(tilde)), s);
    // Symmetrize away rounding before the eigen solve.
    for (size_t i = 0; i < m.n; i++) {
        for (size_t j = i + 1; j < m.n; j++) {
            double avg = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = m(j, i) = avg;
        }
    }
    std::vector<double> ev = sym_eigen(m).eigenvalues;
    for (size_t k = r_prod; k < ev.size(); k++) {
        ev[k] = 0.0;
    }
    return ev;
}

double two_tangle(const DensityMatrix &rho, double tol) {
    std::vector<double> ev = concurrence_spectrum(rho);
    double c = 0;
    for (size_t k = 0; k < ev.size(); k++) {
        if (ev[k] < -tol) {
            throw std::domain_error("rho * rho~ has a negative eigenvalue " + std::to_string(ev[k]));
        }
        double root = std::sqrt(std::max(ev[k], 0.0));
        c += k == 0 ? root : -root;
    }
    // Equal leading eigenvalues leave a difference of a few ulps.
    if (c < 1e-12) {
        return 0.0;
    }
    return std::clamp(c * c, 0.0, 1.0);
}

Rational three_tangle(const MultipartiteState &s) {
    if (s.shape.dims != std::vector<size_t>{2, 2, 2}) {
        throw std::invalid_argument("three_tangle needs shape 2,2,2, got " + s.shape.str());
    }
    auto a = [&](int i, int j, int k) -> const Rational & {
        return s.amplitudes[static_cast<size_t>(4 * i + 2 * j + k)];
    };
    Rational t000 = a(0, 0, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 0, 0);
    Rational t001 = a(0, 0, 1) * a(1, 1, 0) - a(0, 1, 0) * a(1, 0, 1);
    Rational p0 = a(0, 0, 0) * a(1, 0, 1) - a(0, 0, 1) * a(1, 0, 0);
    Rational p1 = a(0, 1, 0) * a(1, 1, 1) - a(0, 1, 1) * a(1, 1, 0);
    Rational d = t001 - t000;
    Rational v = d * d - 4 * p1 * p0;
    return 4 * abs(v);
}

std::optional<MultipartiteState> factor_out(const MultipartiteState &s, size_t factor, size_t value) {
    if (factor >= s.shape.size() || value >= s.shape.dims[factor]) {
        throw std::invalid_argument("factor_out: invalid factor or value");
    }
    if (s.shape.size() < 2) {
        throw std::invalid_argument("factor_out: need at least two factors");
    }
    FactorShape rest;
    for (size_t f = 0; f < s.shape.size(); f++) {
        if (f != factor) {
            rest.dims.push_back(s.shape.dims[f]);
        }
    }
    std::vector<Rational> amps(rest.total());
    for (size_t idx = 0; idx < s.amplitudes.size(); idx++) {
        std::vector<size_t> d = s.shape.digits(idx);
        if (d[factor] != value) {
            if (s.amplitudes[idx] != 0) {
                return std::nullopt;
            }
            continue;
        }
        d.erase(d.begin() + static_cast<ptrdiff_t>(factor));
        amps[rest.index(d)] = s.amplitudes[idx];
    }
    return MultipartiteState{rest, std::move(amps)};
}

Rational residual_three_tangle(const MultipartiteState &s, size_t factor, size_t value) {
    auto rest = factor_out(s, factor, value);
    if (!rest) {
        throw std::domain_error("state does not factorize as |" + std::to_string(value) + "> on factor " +
                                factor_label(factor));
    }
    return three_tangle(*rest);
}

size_t schmidt_rank(const MultipartiteState &s, const std::vector<size_t> &left) {
    const size_t k = s.shape.size();
    std::vector<char> in_left(k, 0);
    for (size_t f : left) {
        if (f >= k || in_left[f]) {
            throw std::invalid_argument("schmidt_rank: invalid cut");
        }
        in_left[f] = 1;
    }
    if (left.empty() || left.size() == k) {
        throw std::invalid_argument("schmidt_rank: both sides of the cut must be nonempty");
    }
    std::vector<size_t> order = left;
    size_t rows = 1;
    for (size_t f : left) {
        rows *= s.shape.dims[f];
    }
    for (size_t f = 0; f < k; f++) {
        if (!in_left[f]) {
            order.push_back(f);
        }
    }
    MultipartiteState p = permute_factors(s, order);
    const size_t cols = p.shape.total() / rows;
    RationalMatrix a(rows, cols, p.amplitudes);
    return smith_normal_form(clear_denominators(a)).rank;
}

RationalMatrix partial_transpose(const DensityMatrix &rho, size_t part) {
    if (part >= rho.shape.size()) {
        throw std::invalid_argument("partial_transpose: invalid subsystem");
    }
    const size_t n = rho.shape.total();
    RationalMatrix out(n, n);
    for (size_t i = 0; i < n; i++) {
        std::vector<size_t> di = rho.shape.digits(i);
        for (size_t j = 0; j < n; j++) {
            std::vector<size_t> dj = rho.shape.digits(j);
            std::swap(di[part], dj[part]);
            out(rho.shape.index(di), rho.shape.index(dj)) = rho.entries(i, j);
            std::swap(di[part], dj[part]);
        }
    }
    return out;
}

PptSpectrum ppt_spectrum(const DensityMatrix &rho, size_t part, double tol) {
    PptSpectrum out;
    out.eigenvalues = sym_eigen(to_real(partial_transpose(rho, part))).eigenvalues;
    out.entangled = !out.eigenvalues.empty() && out.eigenvalues.back() < -tol;
    out.separable = !out.entangled && rho.shape.size() == 2 && rho.shape.total() <= 6;
    return out;
}

RationalMatrix pauli_observable(const std::string &word) {
    size_t pos = 0;
    int sign = 1;
    if (!word.empty() && (word[0] == '-' || word[0] == '+')) {
        sign = word[0] == '-' ? -1 : 1;
        pos = 1;
    }
    if (pos == word.size()) {
        throw std::invalid_argument("empty Pauli word");
    }
    RationalMatrix out = rational_matrix({{sign}});
    size_t ys = 0;
    for (; pos < word.size(); pos++) {
        RationalMatrix f;
        switch (word[pos]) {
            case 'I':
                f = rational_matrix({{1, 0}, {0, 1}});
                break;
            case 'X':
                f = rational_matrix({{0, 1}, {1, 0}});
                break;
            case 'Y':
                // sigma_y = i * J; the powers of i are collected below.
                f = rational_matrix({{0, -1}, {1, 0}});
                ys++;
                break;
            case 'Z':
                f = rational_matrix({{1, 0}, {0, -1}});
                break;
            default:
                throw std::invalid_argument(std::string("bad Pauli letter '") + word[pos] + "'");
        }
        RationalMatrix k(out.rows() * 2, out.cols() * 2);
        for (size_t i = 0; i < out.rows(); i++) {
            for (size_t j = 0; j < out.cols(); j++) {
                for (size_t a = 0; a < 2; a++) {
                    for (size_t b = 0; b < 2; b++) {
                        k(2 * i + a, 2 * j + b) = out(i, j) * f(a, b);
                    }
                }
            }
        }
        out = std::move(k);
    }
    if (ys % 2 != 0) {
        throw std::invalid_argument("Pauli word with an odd number of Y is not real");
    }
    if ((ys / 2) % 2 == 1) {
        out = scale(out, -1);
    }
    return out;
}

bool common_eigenbasis_check(const RationalMatrix &rows, const std::vector<RationalMatrix> &observables) {
    for (size_t a = 0; a < observables.size(); a++) {
        for (size_t b = a + 1; b < observables.size(); b++) {
            if (!(mat_mul(observables[a], observables[b]) == mat_mul(observables[b], observables[a]))) {
                throw std::invalid_argument("observables " + std::to_string(a) + " and " + std::to_string(b) +
                                            " do not commute");
            }
        }
    }
    for (const auto &o : observables) {
        if (o.rows() != rows.cols() || o.cols() != rows.cols()) {
            throw std::invalid_argument("observable dimension does not match the rows");
        }
        RationalMatrix image = mat_mul(rows, o.transpose());  // row r of image is (O v_r^T)^T
        for (size_t r = 0; r < rows.rows(); r++) {
            bool plus = true;
            bool minus = true;
            bool nonzero = false;
            for (size_t j = 0; j < rows.cols(); j++) {
                nonzero = nonzero || rows(r, j) != 0;
                plus = plus && image(r, j) == rows(r, j);
                minus = minus && image(r, j) == -rows(r, j);
            }
            if (!nonzero || !(plus || minus)) {
                return false;
            }
        }
    }
    return true;
}

AnalysisOptions AnalysisOptions::from_measures(const std::string &measures) {
    AnalysisOptions o;
    if (measures.empty() || measures == "all") {
        return o;
    }
    o.tangle3 = o.tangle2 = o.schmidt = o.ppt = o.residual = false;
    std::stringstream ss(measures);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "tangle3") {
            o.tangle3 = true;
        } else if (tok == "tangle2") {
            o.tangle2 = true;
        } else if (tok == "schmidt") {
            o.schmidt = true;
        } else if (tok == "ppt") {
            o.ppt = true;
        } else if (tok == "residual") {
            o.residual = true;
        } else if (tok == "tangle") {
            o.tangle2 = o.tangle3 = true;
        } else {
            throw std::invalid_argument("unknown measure '" + tok + "'");
        }
    }
    return o;
}

TangleReport analyze_state(const MultipartiteState &s, const AnalysisOptions &opts) {
    TangleReport rep;
    const auto &dims = s.shape.dims;
    const size_t k = dims.size();
    const bool all_qubits = std::all_of(dims.begin(), dims.end(), [](size_t d) {
        return d == 2;
    });
    DensityMatrix rho = density_matrix(s);

    if (opts.tangle3 && k == 3 && all_qubits) {
        rep.tau3 = three_tangle(s);
    }
    if (opts.tangle2) {
        if (k == 2 && all_qubits) {
            rep.tau_ab = two_tangle(rho, opts.tol);
        } else if (k == 3) {
            std::optional<double> *slots[3] = {&rep.tau_ab, &rep.tau_ac, &rep.tau_bc};
            const size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
            for (int p = 0; p < 3; p++) {
                if (dims[pairs[p][0]] == 2 && dims[pairs[p][1]] == 2) {
                    *slots[p] = two_tangle(partial_trace(rho, {pairs[p][0], pairs[p][1]}), opts.tol);
                }
            }
        }
    }
    if (opts.schmidt && k >= 2) {
        for (size_t f = 0; f < (k == 2 ? 1 : k); f++) {
            std::string rest;
            for (size_t g = 0; g < k; g++) {
                if (g != f) {
                    rest += factor_label(g);
                }
            }
            rep.schmidt.push_back({factor_label(f) + "|" + rest, schmidt_rank(s, {f})});
        }
    }
    if (opts.ppt && k >= 2 && k <= 3) {
        for (size_t i = 0; i < k; i++) {
            for (size_t j = i + 1; j < k; j++) {
                DensityMatrix pair = k == 2 ? rho : partial_trace(rho, {i, j});
                rep.ppt.push_back({factor_label(i) + factor_label(j) + "^T" + factor_label(i),
                                   ppt_spectrum(pair, 0, opts.tol)});
            }
        }
    }
    if (opts.residual && k == 4 && all_qubits) {
        for (size_t f = 0; f < k; f++) {
            for (size_t v = 0; v < 2; v++) {
                if (auto rest = factor_out(s, f, v)) {
                    rep.residual.push_back({f, v, three_tangle(*rest)});
                }
            }
        }
    }
    return rep;
}

std::vector<TangleReport> analyze_gate(const OrthogonalGate &g, const FactorShape &shape, const AnalysisOptions &opts) {
    if (shape.total() != g.b.cols()) {
        throw std::invalid_argument("shape " + shape.str() + " does not match gate dimension " +
                                    std::to_string(g.b.cols()));
    }
    const size_t n = g.b.rows();
    std::vector<TangleReport> out(n);
    std::vector<std::exception_ptr> errors(n);
    unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
    auto work = [&](unsigned w) {
        for (size_t r = w; r < n; r += threads) {
            try {
                out[r] = analyze_state(state_from_row(g, r, shape), opts);
                out[r].row = r;
            } catch (...) {
                errors[r] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

}  // namespace latgate
