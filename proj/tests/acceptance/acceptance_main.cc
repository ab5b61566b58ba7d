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


// Acceptance runner. One PASS/FAIL line per criterion; failing sub-checks are listed above it.
// Usage: latgate_acceptance [criterion ...]   (no arguments: every default criterion)

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "latgate/autgrp.h"
#include "latgate/entangle.h"
#include "latgate/enumerate.h"
#include "latgate/fixtures.h"
#include "latgate/json_io.h"
#include "latgate/lattice.h"
#include "latgate/reduction.h"

#ifndef LATGATE_TEST_DATA_DIR
#define LATGATE_TEST_DATA_DIR "tests/data"
#endif

using namespace latgate;

namespace {

class Report {
   public:
    void check(bool ok, const std::string &what) {
        if (ok) {
            passed_++;
        } else {
            failed_.push_back(what);
        }
    }
    void near(double got, double want, double tol, const std::string &what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, " (got %.12g, want %.12g, tol %.0e)", got, want, tol);
        check(std::fabs(got - want) <= tol, what + buf);
    }
    void info(const std::string &line) {
        std::printf("    %s\n", line.c_str());
    }
    bool ok() const {
        return failed_.empty();
    }
    void finish(const std::string &id, const std::string &title) const {
        for (const auto &f : failed_) {
            std::printf("    mismatch: %s\n", f.c_str());
        }
        std::printf("%s criterion %s: %s (%zu checks, %zu failed)\n", ok() ? "PASS" : "FAIL", id.c_str(),
                    title.c_str(), passed_ + failed_.size(), failed_.size());
        std::fflush(stdout);
    }

   private:
    size_t passed_ = 0;
    std::vector<std::string> failed_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

unsigned default_threads() {
    return std::max(2u, std::thread::hardware_concurrency());
}

void check_order(Report &r, const std::string &label, const Lattice &l, const Integer &want, double limit_s) {
    auto t0 = std::chrono::steady_clock::now();
    AutGroupResult res = automorphism_group(l);
    double secs = seconds_since(t0);
    r.check(res.complete, label + ": search completed");
    r.check(res.order == want, label + ": order " + to_string(res.order) + ", want " + to_string(want));
    r.check(secs <= limit_s, label + ": runtime " + fmt("%.2f s", secs) + " over " + fmt("%.0f s", limit_s));
    // The returned generators must themselves be automorphisms and regenerate the order.
    bool all_aut = true;
    for (const auto &g : res.generators) {
        all_aut = all_aut && static_cast<bool>(is_automorphism(l, g));
    }
    r.check(all_aut, label + ": generators preserve the Gram matrix");
    Integer regen = order_on_vectors(res.generators, faithful_vector_set(l));
    r.check(regen == want, label + ": generators regenerate order " + to_string(regen));
    r.info(label + ": order " + to_string(res.order) + " in " + fmt("%.2f s", secs));
}

Integer pow_product(std::initializer_list<std::pair<unsigned long, unsigned long>> factors) {
    Integer out = 1;
    for (auto [p, e] : factors) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), p, e);
        out *= t;
    }
    return out;
}

// ---- criterion 1 ----

void group_orders(Report &r) {
    check_order(r, "Z^2", catalog(LatticeName::Zn, 2), 8, 60);
    check_order(r, "Z^3", catalog(LatticeName::Zn, 3), 48, 60);
    check_order(r, "Z^4 (M_r basis)", catalog(LatticeName::Z4Mr), 384, 60);
    check_order(r, "D4", catalog(LatticeName::D4), 1152, 60);
    check_order(r, "E8 root basis", catalog(LatticeName::E8Root), Integer("696729600"), 60);
    check_order(r, "E8 Hamming", catalog(LatticeName::E8Hamming), Integer("696729600"), 60);
}

void group_orders_slow(Report &r) {
    check_order(r, "BW16", catalog(LatticeName::BW16), Integer("89181388800"), 900);
    check_order(r, "D12+", catalog(LatticeName::D12Plus), pow_product({{2, 21}, {3, 5}, {5, 2}, {7, 1}, {11, 1}}), 900);
}

// ---- criterion 2 ----

ImportedGenerators leech_generators() {
    return generators_from_json(read_json_file(std::string(LATGATE_TEST_DATA_DIR) + "/leech_aut.json"));
}

Integer leech_order() {
    return pow_product({{2, 22}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}});
}

void leech_generators_check(Report &r) {
    Lattice leech = catalog(LatticeName::Leech);
    auto t0 = std::chrono::steady_clock::now();
    ImportedGenerators g = leech_generators();
    r.check(!g.integral.empty(), "generator file has generators");
    for (size_t i = 0; i < g.integral.size(); i++) {
        Verdict v = is_automorphism(leech, g.integral[i]);
        r.check(v.ok, "integral generator " + std::to_string(i) + ": " + v.reason);
    }
    for (size_t i = 0; i < g.natural.size(); i++) {
        Verdict v = is_automorphism(leech, g.natural[i]);
        r.check(v.ok, "natural generator " + std::to_string(i) + ": " + v.reason);
    }
    double secs = seconds_since(t0);
    r.check(secs <= 10, "verification runtime " + fmt("%.2f s", secs) + " over 10 s");
    r.info("verified " + std::to_string(g.integral.size()) + " generators in " + fmt("%.3f s", secs));
}

void leech_order_check(Report &r) {
    Lattice leech = catalog(LatticeName::Leech);
    auto t0 = std::chrono::steady_clock::now();
    ImportedGenerators g = leech_generators();
    Integer order = order_on_vectors(g.integral, faithful_vector_set(leech));
    r.check(order == leech_order(), "order " + to_string(order) + ", want " + to_string(leech_order()));
    r.info("order check in " + fmt("%.2f s", seconds_since(t0)));
}

// ---- criterion 3 ----

void cnot(Report &r) {
    Verdict v = is_automorphism(catalog(LatticeName::Zn, 4), fixture_gate("cnot"));
    r.check(v.ok, "CNOT in Aut(Z^4): " + v.reason);
}

// ---- criterion 4 ----

void invariants(Report &r) {
    for (auto name : {LatticeName::E8Root, LatticeName::E8Hamming}) {
        Lattice l = catalog(name);
        std::string s = lattice_name_str(name);
        r.check(is_even(l), s + " even");
        r.check(is_unimodular(l), s + " unimodular");
        ShortVectorSet m = minimal_vectors(l);
        r.check(m.bound == 2, s + " minimum " + to_string(m.bound));
        r.check(m.count() == 240, s + " kissing " + std::to_string(m.count()));
    }
    Rational bw = minimum(catalog(LatticeName::BW16));
    r.check(bw == 4, "bw16 minimum " + to_string(bw));
    r.check(is_unimodular(catalog(LatticeName::D12Plus)), "d12plus unimodular");

    Lattice leech = catalog(LatticeName::Leech);
    r.check(is_even(leech), "leech even");
    r.check(is_unimodular(leech), "leech unimodular");
    auto t0 = std::chrono::steady_clock::now();
    ShortVectorSet m = minimal_vectors(leech, default_threads());
    double secs = seconds_since(t0);
    r.check(m.bound == 4, "leech minimum " + to_string(m.bound));
    r.check(m.count() == 196560, "leech kissing " + std::to_string(m.count()));
    r.check(secs <= 600, "leech kissing runtime " + fmt("%.1f s", secs));
    r.info("leech kissing number in " + fmt("%.2f s", secs));
}

// ---- criterion 5 ----

void mermin(Report &r) {
    struct Case {
        const char *fixture;
        std::vector<std::string> words;
    };
    for (const Case &c : {Case{"mr", {"XX", "YY", "ZZ"}}, Case{"z4-s", {"XZ", "ZX", "YY"}},
                          Case{"z4-s-prime", {"XI", "IX", "XX"}}}) {
        std::vector<RationalMatrix> obs;
        for (const auto &w : c.words) {
            obs.push_back(pauli_observable(w));
        }
        r.check(common_eigenbasis_check(fixture(c.fixture).rows, obs),
                std::string(c.fixture) + " rows are common eigenvectors");
    }
}

// ---- criterion 6 ----

DensityMatrix reduced(const MultipartiteState &s, std::vector<size_t> keep) {
    return partial_trace(density_matrix(s), keep);
}

void spectrum_near(Report &r, const std::vector<double> &got, const std::vector<double> &want, double tol,
                   const std::string &what) {
    r.check(got.size() == want.size(), what + ": spectrum length");
    for (size_t i = 0; i < std::min(got.size(), want.size()); i++) {
        r.near(got[i], want[i], tol, what + " eigenvalue " + std::to_string(i));
    }
}

void tangles(Report &r) {
    const double tol = 1e-9;
    const double s2 = std::sqrt(2.0);
    {
        MultipartiteState s = fixture_state("z8-g1-row4");
        r.check(three_tangle(s) == Rational(1, 4), "Z^8 row: tau3 = " + to_string(three_tangle(s)));
        DensityMatrix ab = reduced(s, {0, 1}), ac = reduced(s, {0, 2}), bc = reduced(s, {1, 2});
        r.near(two_tangle(ab), 0.25, tol, "Z^8 row: tau_AB");
        r.near(two_tangle(ac), 0.25, tol, "Z^8 row: tau_AC");
        r.near(two_tangle(bc), 0.0, tol, "Z^8 row: tau_BC");
        std::vector<double> lam{(3 + 2 * s2) / 16, (3 - 2 * s2) / 16, 0, 0};
        spectrum_near(r, concurrence_spectrum(ab), lam, tol, "Z^8 row: AB");
        spectrum_near(r, concurrence_spectrum(ac), lam, tol, "Z^8 row: AC");
        spectrum_near(r, concurrence_spectrum(bc), {1.0 / 16, 1.0 / 16, 0, 0}, tol, "Z^8 row: BC");
    }
    {
        MultipartiteState s = fixture_state("e8-root-g2-row1");
        r.check(three_tangle(s) == Rational(1, 4), "E8 root row: tau3 = " + to_string(three_tangle(s)));
        r.near(two_tangle(reduced(s, {0, 1})), 0.25, tol, "E8 root row: tau_AB");
        r.near(two_tangle(reduced(s, {0, 2})), 0.25, tol, "E8 root row: tau_AC");
        r.near(two_tangle(reduced(s, {1, 2})), 0.25, tol, "E8 root row: tau_BC");
    }
    {
        MultipartiteState s = fixture_state("e8-hamming-ghz");
        r.check(three_tangle(s) == 1, "E8 Hamming GHZ row: tau3 = " + to_string(three_tangle(s)));
        r.near(two_tangle(reduced(s, {0, 1})), 0, tol, "E8 Hamming GHZ row: tau_AB");
        r.near(two_tangle(reduced(s, {0, 2})), 0, tol, "E8 Hamming GHZ row: tau_AC");
        r.near(two_tangle(reduced(s, {1, 2})), 0, tol, "E8 Hamming GHZ row: tau_BC");
    }
    {
        MultipartiteState s = fixture_state("bw16-row");
        std::optional<MultipartiteState> rest;
        for (size_t v = 0; v < 2 && !rest; v++) {
            rest = factor_out(s, 0, v);
        }
        r.check(rest.has_value(), "BW16 row factorizes on qubit A");
        if (rest) {
            r.check(three_tangle(*rest) == 1, "BW16 row: residual tau3 = " + to_string(three_tangle(*rest)));
        }
    }
}

// ---- criterion 7 ----

// Every listed value has its own computed eigenvalue within tol (greedy on sorted lists).
bool matches_listed(std::vector<double> computed, std::vector<double> listed, double tol) {
    std::sort(listed.begin(), listed.end());
    for (double want : listed) {
        auto best = computed.end();
        for (auto it = computed.begin(); it != computed.end(); ++it) {
            if (std::fabs(*it - want) <= tol && (best == computed.end() || std::fabs(*it - want) < std::fabs(*best - want))) {
                best = it;
            }
        }
        if (best == computed.end()) {
            return false;
        }
        computed.erase(best);
    }
    return true;
}

std::string list_str(const std::vector<double> &v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); i++) {
        out += (i ? ", " : "") + fmt("%.4f", v[i]);
    }
    return out + "}";
}

void d12plus_state(Report &r) {
    const double tol = 1e-9;
    MultipartiteState s = fixture_state("d12plus-row");
    r.check(schmidt_rank(s, {0}) == 3, "Schmidt rank across the qutrit cut = " + std::to_string(schmidt_rank(s, {0})));
    DensityMatrix bc = reduced(s, {1, 2});
    r.near(two_tangle(bc), 4.0 / 9, tol, "(3,2,2): tau_BC");
    const double s11 = std::sqrt(11.0), s2 = std::sqrt(2.0);
    spectrum_near(r, concurrence_spectrum(bc), {2 * (10 + 3 * s11) / 81, 2 * (10 - 3 * s11) / 81, 0, 0}, tol,
                  "(3,2,2): BC");

    MultipartiteState t = fixture_state("d12plus-row-223");
    DensityMatrix bc2 = reduced(t, {1, 2});
    r.near(two_tangle(bc2), 4.0 / 81, tol, "(2,2,3): tau of the qubit pair");
    spectrum_near(r, concurrence_spectrum(bc2), {(3 + 2 * s2) / 81, (3 - 2 * s2) / 81, 0, 0}, tol,
                  "(2,2,3): qubit pair");

    DensityMatrix ab = reduced(s, {0, 1}), ac = reduced(s, {0, 2});
    PptSpectrum pab = ppt_spectrum(ab, 0), pac = ppt_spectrum(ac, 0);
    r.check(pab.entangled, "AB^TA has a negative eigenvalue");
    r.check(pac.entangled, "AC^TA has a negative eigenvalue");
    r.info("AB^TA spectrum " + list_str(pab.eigenvalues));
    r.info("AC^TA spectrum " + list_str(pac.eigenvalues));
    const std::vector<double> listed_ab{0.663, 0.392, 0.092, 0.047, -0.151, -0.0044};
    const std::vector<double> listed_ac{0.717, 0.211, 0.111, 0.047, -0.008};
    r.check(matches_listed(pab.eigenvalues, listed_ab, 2e-3),
            "AB^TA spectrum " + list_str(pab.eigenvalues) + " vs published " + list_str(listed_ab) + " (tol 2e-3)");
    r.check(matches_listed(pac.eigenvalues, listed_ac, 2e-3),
            "AC^TA spectrum " + list_str(pac.eigenvalues) + " vs published " + list_str(listed_ac) + " (tol 2e-3)");
}

// ---- criterion 8 ----

void leech_state(Report &r) {
    MultipartiteState s = fixture_state("leech-row");
    r.check(schmidt_rank(s, {0}) == 4, "Schmidt rank across the 6|4 cut = " + std::to_string(schmidt_rank(s, {0})));
    DensityMatrix bc = reduced(s, {1, 2});
    RationalMatrix want = rational_matrix({{4, 2, 3, 1}, {2, 6, 2, 0}, {3, 2, 5, 0}, {1, 0, 0, 1}}, 16);
    r.check(bc.entries == want, "rho_BC equals the printed matrix exactly");
    const double s2 = std::sqrt(2.0);
    spectrum_near(r, concurrence_spectrum(bc),
                  {(9 + 4 * s2) / 64, (9 - 4 * s2) / 64, (3 + 2 * s2) / 256, (3 - 2 * s2) / 256}, 1e-9, "BC");
    r.near(two_tangle(bc), 0.00536, 1e-4, "tau_BC");
    r.check(ppt_spectrum(reduced(s, {0, 1}), 0).entangled, "AB^TA has a negative eigenvalue");
    r.check(ppt_spectrum(reduced(s, {0, 2}), 0).entangled, "AC^TA has a negative eigenvalue");
}

// ---- criterion 9 ----

std::mt19937_64 &rng() {
    static std::mt19937_64 g(20260101);
    return g;
}

long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

IntMatrix random_int_matrix(size_t rows, size_t cols, long range) {
    IntMatrix a(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            a(i, j) = uniform(-range, range);
        }
    }
    return a;
}

// Plain Gaussian elimination over Q, written separately from the library's Bareiss code.
size_t oracle_rank(const IntMatrix &a) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            m[i][j] = a(i, j);
        }
    }
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t p = r;
        while (p < a.rows() && m[p][c] == 0) {
            p++;
        }
        if (p == a.rows()) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < a.rows(); i++) {
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < a.cols(); j++) {
                m[i][j] -= f * m[r][j];
            }
        }
        r++;
    }
    return r;
}

bool hnf_shape(const IntMatrix &h) {
    size_t col = 0;
    bool zero_rows = false;
    for (size_t i = 0; i < h.rows(); i++) {
        size_t p = 0;
        while (p < h.cols() && h(i, p) == 0) {
            p++;
        }
        if (p == h.cols()) {
            zero_rows = true;
            continue;
        }
        if (zero_rows || (i > 0 && p < col) || h(i, p) <= 0) {
            return false;
        }
        for (size_t k = 0; k < i; k++) {
            if (h(k, p) < 0 || h(k, p) >= h(i, p)) {
                return false;
            }
        }
        col = p + 1;
    }
    return true;
}

void linalg_properties(Report &r) {
    size_t n_inv = 0;
    for (int trial = 0; trial < 150; trial++) {
        size_t rows = static_cast<size_t>(uniform(1, 6));
        size_t cols = static_cast<size_t>(uniform(1, 6));
        if (trial % 3 == 0) {
            cols = rows;
        }
        IntMatrix a = random_int_matrix(rows, cols, trial % 5 == 0 ? 1 : 9);
        if (trial % 7 == 0 && rows > 1) {
            for (size_t j = 0; j < cols; j++) {
                a(rows - 1, j) = a(0, j) * 2;
            }
        }
        size_t want_rank = oracle_rank(a);
        r.check(rank(a) == want_rank, "rank trial " + std::to_string(trial));

        HermiteForm hf = hermite_normal_form(a);
        r.check(mat_mul(hf.t, a) == hf.h, "HNF h = t a, trial " + std::to_string(trial));
        r.check(abs(determinant(hf.t)) == 1, "HNF transform unimodular, trial " + std::to_string(trial));
        r.check(hnf_shape(hf.h), "HNF echelon shape, trial " + std::to_string(trial));

        SmithForm sf = smith_normal_form(a);
        bool diag = sf.rank == want_rank;
        for (size_t i = 0; i < rows; i++) {
            for (size_t j = 0; j < cols; j++) {
                if (i != j && sf.s(i, j) != 0) {
                    diag = false;
                }
            }
        }
        for (size_t i = 0; i + 1 < sf.rank; i++) {
            diag = diag && sf.s(i, i) > 0 && sf.s(i + 1, i + 1) % sf.s(i, i) == 0;
        }
        r.check(diag, "SNF diagonal divisibility chain and rank, trial " + std::to_string(trial));
        if (rows == cols) {
            Integer det = determinant(a);
            Integer prod = 1;
            for (size_t i = 0; i < rows; i++) {
                prod *= sf.s(i, i);
            }
            r.check(abs(det) == abs(prod), "SNF product equals |det|, trial " + std::to_string(trial));
            if (det != 0) {
                RationalMatrix q = to_rational(a);
                r.check(mat_mul(q, mat_inverse(q)) == RationalMatrix::identity(rows),
                        "inverse round trip, trial " + std::to_string(trial));
                n_inv++;
            }
        }
    }
    r.info("linear algebra: 150 random matrices, " + std::to_string(n_inv) + " inverted");
}

RationalMatrix random_gram(size_t n, long range) {
    for (;;) {
        IntMatrix b = random_int_matrix(n, n, range);
        if (determinant(b) != 0) {
            return to_rational(mat_mul(b, b.transpose()));
        }
    }
}

// Every coefficient vector with x G x^T <= bound, by scanning the box |x_i| <= sqrt(bound (G^-1)_ii).
std::map<Rational, size_t> box_counts(const RationalMatrix &g, const Rational &bound) {
    size_t n = g.rows();
    RationalMatrix inv = mat_inverse(g);
    std::vector<long> lim(n);
    for (size_t i = 0; i < n; i++) {
        lim[i] = static_cast<long>(std::floor(std::sqrt(Rational(bound * inv(i, i)).get_d()))) + 1;
    }
    // Integral Gram from B B^T, so the scan runs in machine integers.
    std::vector<long> gi(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            gi[i * n + j] = g(i, j).get_num().get_si();
        }
    }
    std::map<long, size_t> raw;
    std::vector<long> x(n);
    for (size_t i = 0; i < n; i++) {
        x[i] = -lim[i];
    }
    for (;;) {
        long q = 0;
        for (size_t i = 0; i < n; i++) {
            long s = 0;
            for (size_t j = 0; j < n; j++) {
                s += gi[i * n + j] * x[j];
            }
            q += s * x[i];
        }
        if (q != 0 && Rational(q) <= bound) {
            raw[q]++;
        }
        size_t k = 0;
        while (k < n && x[k] == lim[k]) {
            x[k] = -lim[k];
            k++;
        }
        if (k == n) {
            break;
        }
        x[k]++;
    }
    std::map<Rational, size_t> counts;
    for (auto [q, m] : raw) {
        counts[Rational(q)] = m;
    }
    return counts;
}

void enumeration_properties(Report &r) {
    size_t cases = 0;
    for (size_t n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 6; trial++) {
            RationalMatrix g = random_gram(n, n <= 3 ? 3 : 2);
            GramReduction red = lll_reduce_gram(g);
            Rational bound = red.gram(0, 0) * make_rational(uniform(2, 5), 2);
            std::map<Rational, size_t> want = box_counts(g, bound);
            std::map<Rational, size_t> got = enumerate_gram(g, bound).counts_by_norm();
            r.check(got == want, "enumeration vs box, dim " + std::to_string(n) + " trial " + std::to_string(trial));
            cases++;
        }
    }
    r.info("enumeration: " + std::to_string(cases) + " random Gram matrices, dims 1-6");
}

// Exhaustive 2x2 automorphism count: the rows of U are coefficient vectors with the norms of
// the basis vectors, so the box of criterion-9 enumeration bounds them.
size_t exhaustive_aut_2d(const RationalMatrix &g) {
    RationalMatrix inv = mat_inverse(g);
    long lim = 0;
    for (size_t i = 0; i < 2; i++) {
        for (size_t k = 0; k < 2; k++) {
            lim = std::max(lim, static_cast<long>(std::floor(std::sqrt(Rational(g(k, k) * inv(i, i)).get_d()))) + 1);
        }
    }
    size_t count = 0;
    for (long a = -lim; a <= lim; a++) {
        for (long b = -lim; b <= lim; b++) {
            for (long c = -lim; c <= lim; c++) {
                for (long d = -lim; d <= lim; d++) {
                    RationalMatrix u{{a, b}, {c, d}};
                    if (mat_mul(mat_mul(u, g), u.transpose()) == g) {
                        count++;
                    }
                }
            }
        }
    }
    return count;
}

void autgrp_properties(Report &r) {
    std::vector<RationalMatrix> grams{rational_matrix({{2, 1}, {1, 2}}), rational_matrix({{1, 0}, {0, 1}}),
                                      rational_matrix({{2, 0}, {0, 3}}), rational_matrix({{4, 2}, {2, 5}}),
                                      rational_matrix({{2, -1}, {-1, 5}})};
    for (int trial = 0; trial < 25; trial++) {
        grams.push_back(random_gram(2, 3));
    }
    for (size_t k = 0; k < grams.size(); k++) {
        size_t want = exhaustive_aut_2d(grams[k]);
        AutGroupResult res = automorphism_group(grams[k]);
        r.check(res.order == want, "2-dim Gram " + std::to_string(k) + ": search " + to_string(res.order) +
                                       ", exhaustive " + std::to_string(want));
    }
    r.check(exhaustive_aut_2d(grams[0]) == 12, "hexagonal Gram has 12 automorphisms");
    r.check(exhaustive_aut_2d(grams[1]) == 8, "square Gram has 8 automorphisms");
    r.info("automorphisms: " + std::to_string(grams.size()) + " two-dimensional Gram matrices");
}

MultipartiteState random_two_qubit_state() {
    std::vector<Rational> t(3);
    Rational s = 0;
    for (auto &x : t) {
        x = Rational(uniform(-20, 20), uniform(1, 12));
        x.canonicalize();
        s += x * x;
    }
    std::vector<Rational> v{2 * t[0] / (s + 1), 2 * t[1] / (s + 1), 2 * t[2] / (s + 1), (s - 1) / (s + 1)};
    return make_state(make_shape({2, 2}), v);
}

void tangle_properties(Report &r) {
    for (int trial = 0; trial < 120; trial++) {
        MultipartiteState s = random_two_qubit_state();
        const auto &a = s.amplitudes;
        Rational d = a[0] * a[3] - a[1] * a[2];
        Rational want = 4 * d * d;
        double got = two_tangle(density_matrix(s));
        r.near(got, want.get_d(), 1e-9, "pure two-qubit state " + std::to_string(trial));
    }
    r.info("two-tangle: 120 random pure states");
}

// Rows of every 3-qubit fixture, pure, so tau3 = 4 det(rho_f) - tau_fa - tau_fb for each focus f.
std::vector<std::pair<std::string, MultipartiteState>> three_qubit_rows(Report &r) {
    std::vector<std::pair<std::string, MultipartiteState>> out;
    FactorShape q3 = make_shape({2, 2, 2});
    for (const auto &f : fixtures()) {
        if (f.kind == FixtureKind::State && f.shape == q3) {
            out.emplace_back(f.name, fixture_state(f.name));
        }
        if (f.kind == FixtureKind::Gate && f.rows.cols() == 8) {
            for (size_t i = 0; i < f.rows.rows(); i++) {
                try {
                    out.emplace_back(f.name + " row " + std::to_string(i + 1), state_from_row({f.rows}, i, q3));
                } catch (const std::domain_error &e) {
                    r.info(f.name + " row " + std::to_string(i + 1) + " skipped: " + e.what());
                }
            }
        }
    }
    return out;
}

void ckw_properties(Report &r) {
    auto rows = three_qubit_rows(r);
    for (const auto &[label, s] : rows) {
        DensityMatrix rho = density_matrix(s);
        double tau3 = three_tangle(s).get_d();
        for (size_t f = 0; f < 3; f++) {
            size_t a = (f + 1) % 3, b = (f + 2) % 3;
            double one = 4 * determinant(partial_trace(rho, {f}).entries).get_d();
            double ta = two_tangle(partial_trace(rho, {std::min(f, a), std::max(f, a)}));
            double tb = two_tangle(partial_trace(rho, {std::min(f, b), std::max(f, b)}));
            r.check(ta + tb <= one + 1e-9, label + ": monogamy at " + factor_label(f));
            r.near(one - ta - tb, tau3, 1e-9, label + ": residual equals tau3 at " + factor_label(f));
        }
    }
    r.info("monogamy: " + std::to_string(rows.size()) + " three-qubit rows");
}

bool same_vectors(const ShortVectorSet &a, const ShortVectorSet &b) {
    if (a.vectors.size() != b.vectors.size()) {
        return false;
    }
    for (size_t i = 0; i < a.vectors.size(); i++) {
        if (a.vectors[i].coeffs != b.vectors[i].coeffs || a.vectors[i].norm != b.vectors[i].norm) {
            return false;
        }
    }
    return true;
}

void thread_properties(Report &r) {
    unsigned t = default_threads();
    for (auto name : {LatticeName::E8Root, LatticeName::BW16, LatticeName::D12Plus}) {
        Lattice l = catalog(name);
        r.check(same_vectors(enumerate_short_vectors(l, 4, 1), enumerate_short_vectors(l, 4, t)),
                lattice_name_str(name) + ": enumeration identical across thread counts");
        SearchBudget one, many;
        many.threads = t;
        AutGroupResult a = automorphism_group(l, one), b = automorphism_group(l, many);
        bool same = a.order == b.order && a.generators.size() == b.generators.size();
        for (size_t i = 0; same && i < a.generators.size(); i++) {
            same = a.generators[i].u == b.generators[i].u;
        }
        r.check(same, lattice_name_str(name) + ": automorphism search identical across thread counts");
    }
    for (const char *gate : {"e8-root-g1", "e8-hamming-g1", "e8-hamming-g2"}) {
        AnalysisOptions one, many;
        many.threads = t;
        FactorShape q3 = make_shape({2, 2, 2});
        auto ra = analyze_gate(fixture_gate(gate), q3, one);
        auto rb = analyze_gate(fixture_gate(gate), q3, many);
        bool same = ra.size() == rb.size();
        for (size_t i = 0; same && i < ra.size(); i++) {
            same = report_to_json(ra[i]).dump() == report_to_json(rb[i]).dump();
        }
        r.check(same, std::string(gate) + ": analysis identical across thread counts");
    }
    r.info("threads: 1 vs " + std::to_string(t));
}

void property_suites(Report &r) {
    for (auto suite : {linalg_properties, enumeration_properties, autgrp_properties, tangle_properties,
                       ckw_properties, thread_properties}) {
        auto t0 = std::chrono::steady_clock::now();
        suite(r);
        r.info(fmt("  (%.2f s)", seconds_since(t0)));
    }
}

// ---- criterion 10 ----

struct Profile {
    Rational tau3;
    double ab, ac, bc;
};

Profile profile(const MultipartiteState &s) {
    DensityMatrix rho = density_matrix(s);
    return {three_tangle(s), two_tangle(partial_trace(rho, {0, 1})), two_tangle(partial_trace(rho, {0, 2})),
            two_tangle(partial_trace(rho, {1, 2}))};
}

std::string profile_str(const Profile &p) {
    return "(tau3 " + to_string(p.tau3) + ", " + fmt("%.4g", p.ab) + ", " + fmt("%.4g", p.ac) + ", " +
           fmt("%.4g", p.bc) + ")";
}

void row_claims(Report &r) {
    const double tol = 1e-9;
    FactorShape q3 = make_shape({2, 2, 2});
    auto near = [&](double a, double b) {
        return std::fabs(a - b) <= tol;
    };
    OrthogonalGate root = fixture_gate("e8-root-g1");
    for (size_t i = 0; i < 8; i++) {
        Profile p = profile(state_from_row(root, i, q3));
        bool balanced = p.tau3 == Rational(1, 4) && near(p.ab, 0.25) && near(p.ac, 0.25) && near(p.bc, 0.25);
        r.check(balanced, "e8-root-g1 row " + std::to_string(i + 1) + " balanced: got " + profile_str(p));
    }
    OrthogonalGate h1 = fixture_gate("e8-hamming-g1");
    for (size_t i = 0; i < 8; i++) {
        std::string label = "e8-hamming-g1 row " + std::to_string(i + 1);
        Profile p;
        try {
            p = profile(state_from_row(h1, i, q3));
        } catch (const std::exception &e) {
            r.check(false, label + ": " + e.what());
            continue;
        }
        if (i == 3 || i == 5) {
            bool product = p.tau3 == 0 && near(p.ab, 0) && near(p.ac, 0) && near(p.bc, 0);
            r.check(product, label + " product state: got " + profile_str(p));
        } else {
            r.check(p.tau3 == 1, label + " GHZ-type: got " + profile_str(p));
        }
    }
    OrthogonalGate h2 = fixture_gate("e8-hamming-g2");
    size_t relabelled = 0;
    for (size_t i = 0; i < 8; i++) {
        Profile p = profile(state_from_row(h2, i, q3));
        std::vector<double> two{p.ab, p.ac, p.bc};
        std::sort(two.begin(), two.end());
        bool ok = p.tau3 == Rational(1, 4) && near(two[0], 0) && near(two[1], 0.25) && near(two[2], 0.25);
        r.check(ok, "e8-hamming-g2 row " + std::to_string(i + 1) + " two-tangles {1/4,1/4,0}: got " + profile_str(p));
        relabelled += ok && !near(p.bc, 0);
    }
    r.info("e8-hamming-g2: " + std::to_string(relabelled) + " rows have the vanishing tangle on a pair other than BC");
}

struct Criterion {
    std::string id;
    std::string title;
    std::function<void(Report &)> run;
    bool by_default;
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> all{
        {"1", "automorphism group orders", group_orders, true},
        {"1-slow", "automorphism group orders, BW16 and D12+", group_orders_slow, true},
        {"2", "Leech generators verified", leech_generators_check, true},
        {"2-order", "Leech full order check", leech_order_check, false},
        {"3", "CNOT is a Z^4 automorphism", cnot, true},
        {"4", "lattice invariants", invariants, true},
        {"5", "Mermin-square eigenbases", mermin, true},
        {"6", "tangles of the three-qubit states", tangles, true},
        {"7", "D12+ state", d12plus_state, true},
        {"8", "Leech state", leech_state, true},
        {"9", "property suites", property_suites, true},
        {"10", "per-row claims for the E8 gates", row_claims, true},
    };
    return all;
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<const Criterion *> selected;
    for (int i = 1; i < argc; i++) {
        std::string id = argv[i];
        auto it = std::find_if(criteria().begin(), criteria().end(), [&](const Criterion &c) {
            return c.id == id;
        });
        if (it == criteria().end()) {
            std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
            return 2;
        }
        selected.push_back(&*it);
    }
    if (selected.empty()) {
        for (const auto &c : criteria()) {
            if (c.by_default) {
                selected.push_back(&c);
            }
        }
    }
    int failed = 0;
    for (const Criterion *c : selected) {
        Report r;
        try {
            c->run(r);
        } catch (const std::exception &e) {
            r.check(false, std::string("exception: ") + e.what());
        }
        r.finish(c->id, c->title);
        failed += !r.ok();
    }
    return failed == 0 ? 0 : 1;
}
