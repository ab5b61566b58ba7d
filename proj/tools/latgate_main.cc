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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "latgate/autgrp.h"
#include "latgate/entangle.h"
#include "latgate/enumerate.h"
#include "latgate/fixtures.h"
#include "latgate/json_io.h"
#include "latgate/lattice.h"
#include "latgate/log.h"

using namespace latgate;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kInvariant = 3, kBudget = 4 };

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string lattice;
    size_t n = 4;
    std::string basis_file;
    std::string code_file;
    std::string construction = "a";
    std::string shape;
    std::string measures = "all";
    double tol = 1e-10;
    uint64_t budget_nodes = 0;
    double budget_secs = 0;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string format = "json";
    std::string out;
    std::string fixture;
    std::string gates_file;
    std::string claimed_order;
    std::string bound;
};

Lattice select_lattice(const Options &o) {
    int sources = !o.lattice.empty() + !o.basis_file.empty() + !o.code_file.empty();
    if (sources != 1) {
        throw ParseError("give exactly one of --lattice, --basis-file, --code-file");
    }
    if (!o.lattice.empty()) {
        try {
            return catalog(parse_lattice_name(o.lattice), o.n);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
    }
    if (!o.basis_file.empty()) {
        return lattice_from_json(read_json_file(o.basis_file));
    }
    LinearCode code = code_from_json(read_json_file(o.code_file));
    if (o.construction == "a") {
        return construction_a(code);
    }
    if (o.construction == "b") {
        try {
            return construction_b(code);
        } catch (const std::domain_error &e) {
            throw InvariantViolation(e.what());
        }
    }
    throw ParseError("--construction must be a or b");
}

void emit(const Options &o, const Json &j, const std::string &text) {
    std::string body = o.format == "json" ? j.dump(2) + "\n" : text;
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out);
    if (!f) {
        throw std::runtime_error("cannot write '" + o.out + "'");
    }
    f << body;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", round_sig(v));
    return buf;
}

std::string yes_no(bool b) {
    return b ? "true" : "false";
}

int cmd_info(const Options &o) {
    Lattice l = select_lattice(o);
    ShortVectorSet mins = minimal_vectors(l, o.threads);
    Json j{{"name", l.name() ? Json(*l.name()) : Json(nullptr)},
           {"dimension", l.dimension()},
           {"norm_divisor", to_string(l.norm_divisor())},
           {"det", to_string(l.determinant())},
           {"integral", is_integral_lattice(l)},
           {"even", is_even(l)},
           {"unimodular", is_unimodular(l)},
           {"min", to_string(mins.bound)},
           {"kissing", mins.count()}};
    std::ostringstream t;
    if (o.format == "csv") {
        t << "key,value\n";
        for (const auto &[k, v] : j.items()) {
            t << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else {
        t << "dimension=" << l.dimension() << " det=" << to_string(l.determinant()) << " even=" << yes_no(is_even(l))
          << " unimodular=" << yes_no(is_unimodular(l)) << " min=" << to_string(mins.bound)
          << " kissing=" << mins.count() << "\n";
    }
    emit(o, j, t.str());
    return kOk;
}

int cmd_enumerate(const Options &o) {
    Lattice l = select_lattice(o);
    Rational bound;
    if (o.bound.empty()) {
        bound = minimum(l, o.threads);
    } else {
        try {
            bound = parse_rational(o.bound);
        } catch (const std::exception &e) {
            throw ParseError(std::string("--bound: ") + e.what());
        }
    }
    ShortVectorSet s = enumerate_short_vectors(l, bound, o.threads);
    Json j = short_vectors_to_json(s);
    std::ostringstream t;
    t << "bound=" << to_string(s.bound) << " count=" << s.count() << "\n";
    for (const auto &[norm, c] : s.counts_by_norm()) {
        t << "  norm " << to_string(norm) << ": " << c << "\n";
    }
    emit(o, j, t.str());
    return kOk;
}

int cmd_aut(const Options &o) {
    Lattice l = select_lattice(o);
    SearchBudget b;
    b.max_nodes = o.budget_nodes;
    b.max_seconds = o.budget_secs;
    b.threads = o.threads;
    AutGroupResult r = automorphism_group(l, b);
    Json j = aut_to_json(l, r);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            throw std::runtime_error("cannot write '" + o.out + "'");
        }
        f << j.dump(2) << "\n";
    }
    if (o.format == "json" && o.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "order=" << to_string(r.order) << (r.complete ? "" : " (lower bound, budget exhausted)")
                  << " generators=" << r.generators.size() << " nodes=" << r.nodes << "\n";
    }
    if (!r.complete) {
        throw BudgetError("search budget exhausted; order unverified");
    }
    return kOk;
}

struct GateInput {
    std::string label;
    OrthogonalGate gate;
    std::optional<FactorShape> shape;
};

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) {
            out.push_back(tok);
        }
    }
    return out;
}

std::vector<GateInput> load_gates(const Options &o, const std::optional<Lattice> &lattice) {
    std::vector<GateInput> out;
    if (!o.fixture.empty()) {
        for (const auto &name : split_list(o.fixture)) {
            const Fixture *f = nullptr;
            try {
                f = &fixture(name);
            } catch (const std::invalid_argument &e) {
                throw ParseError(e.what());
            }
            out.push_back({f->name, {f->rows}, f->shape});
        }
        return out;
    }
    if (o.gates_file.empty()) {
        throw ParseError("give --fixture or --gates-file");
    }
    Json j = read_json_file(o.gates_file);
    if (j.contains("shape")) {
        MultipartiteState s = state_from_json(j);
        out.push_back({"state", {RationalMatrix(1, s.amplitudes.size(), s.amplitudes)}, s.shape});
    } else if (j.contains("num")) {
        out.push_back({"gate", {matrix_from_json(j)}, std::nullopt});
    } else {
        ImportedGenerators g = generators_from_json(j);
        if (!g.natural.empty()) {
            for (size_t k = 0; k < g.natural.size(); k++) {
                out.push_back({"g" + std::to_string(k + 1), g.natural[k], std::nullopt});
            }
        } else {
            std::optional<Lattice> l = lattice;
            if (!l && j.contains("lattice")) {
                l = lattice_from_json(j.at("lattice"));
            }
            if (!l) {
                throw ParseError("integral generators need a lattice to convert to the natural action");
            }
            for (size_t k = 0; k < g.integral.size(); k++) {
                out.push_back({"g" + std::to_string(k + 1), natural_action(*l, g.integral[k]), std::nullopt});
            }
        }
    }
    return out;
}

int cmd_analyze(const Options &o) {
    AnalysisOptions ao;
    try {
        ao = AnalysisOptions::from_measures(o.measures);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    ao.tol = o.tol;
    ao.threads = o.threads;
    std::optional<FactorShape> shape;
    if (!o.shape.empty()) {
        try {
            shape = FactorShape::parse(o.shape);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
    }
    std::vector<GateInput> gates = load_gates(o, std::nullopt);
    Json all = Json::array();
    std::ostringstream text;
    std::ostringstream csv;
    csv << "gate,row,tau3,tau_ab,tau_ac,tau_bc,schmidt,ppt_min\n";
    for (const auto &g : gates) {
        std::optional<FactorShape> sh = shape ? shape : g.shape;
        if (!sh) {
            throw ParseError("--shape is required for " + g.label);
        }
        if (sh->total() != g.gate.b.cols()) {
            throw ParseError("shape " + sh->str() + " does not match dimension " + std::to_string(g.gate.b.cols()));
        }
        std::vector<TangleReport> reps;
        try {
            reps = analyze_gate(g.gate, *sh, ao);
        } catch (const std::domain_error &e) {
            throw InvariantViolation(g.label + ": " + e.what());
        }
        Json rows = Json::array();
        for (const auto &r : reps) {
            rows.push_back(report_to_json(r));
            auto opt = [](const std::optional<double> &v) {
                return v ? fmt(*v) : std::string();
            };
            std::string schmidt;
            for (const auto &e : r.schmidt) {
                schmidt += (schmidt.empty() ? "" : ";") + e.cut + "=" + std::to_string(e.rank);
            }
            std::string ppt;
            for (const auto &e : r.ppt) {
                ppt += (ppt.empty() ? "" : ";") + e.label + "=" + fmt(e.spectrum.eigenvalues.back());
            }
            std::string t3 = r.tau3 ? fmt(r.tau3->get_d()) : "";
            csv << g.label << "," << r.row << "," << t3 << "," << opt(r.tau_ab) << "," << opt(r.tau_ac) << ","
                << opt(r.tau_bc) << "," << schmidt << "," << ppt << "\n";
            text << g.label << " row " << r.row << ":";
            if (r.tau3) {
                text << " tau3=" << t3;
            }
            if (r.tau_ab) {
                text << " tau_ab=" << fmt(*r.tau_ab);
            }
            if (r.tau_ac) {
                text << " tau_ac=" << fmt(*r.tau_ac);
            }
            if (r.tau_bc) {
                text << " tau_bc=" << fmt(*r.tau_bc);
            }
            for (const auto &e : r.schmidt) {
                text << " schmidt[" << e.cut << "]=" << e.rank;
            }
            for (const auto &e : r.ppt) {
                text << " ppt[" << e.label << "]min=" << fmt(e.spectrum.eigenvalues.back())
                     << (e.spectrum.entangled ? " (entangled)" : "");
            }
            for (const auto &e : r.residual) {
                text << " residual[" << factor_label(e.factor) << "=" << e.value << "]tau3=" << to_string(e.tau3);
            }
            text << "\n";
        }
        all.push_back(Json{{"gate", g.label}, {"shape", sh->dims}, {"rows", std::move(rows)}});
    }
    if (o.format == "csv") {
        emit(o, all, csv.str());
    } else {
        emit(o, all, text.str());
    }
    return kOk;
}

int cmd_verify(const Options &o) {
    std::optional<Lattice> lattice;
    if (!o.lattice.empty() || !o.basis_file.empty() || !o.code_file.empty()) {
        lattice = select_lattice(o);
    } else if (!o.fixture.empty()) {
        const Fixture &f = fixture(split_list(o.fixture).front());
        if (f.lattice) {
            lattice = catalog(*f.lattice, f.lattice_n);
        }
    } else if (!o.gates_file.empty()) {
        Json j = read_json_file(o.gates_file);
        if (j.contains("lattice")) {
            lattice = lattice_from_json(j.at("lattice"));
        }
    }
    if (!lattice) {
        throw ParseError("no lattice given (--lattice, --basis-file, --code-file or a lattice in the gates file)");
    }

    std::vector<IntegralAutomorphism> integral;
    Json verdicts = Json::array();
    std::ostringstream text;
    bool all_ok = true;
    auto record = [&](const std::string &label, const Verdict &v) {
        verdicts.push_back(Json{{"generator", label}, {"ok", v.ok}, {"reason", v.reason}});
        text << label << ": " << (v.ok ? "automorphism" : "FAIL " + v.reason) << "\n";
        all_ok = all_ok && v.ok;
    };

    bool from_integral = false;
    if (!o.gates_file.empty() && o.fixture.empty()) {
        ImportedGenerators g = generators_from_json(read_json_file(o.gates_file));
        if (!g.integral.empty()) {
            from_integral = true;
            for (size_t k = 0; k < g.integral.size(); k++) {
                if (g.integral[k].u.rows() != lattice->dimension() || g.integral[k].u.cols() != lattice->dimension()) {
                    throw ParseError("generator dimension does not match the lattice");
                }
                Verdict v = is_automorphism(*lattice, g.integral[k]);
                record("g" + std::to_string(k + 1), v);
                if (v) {
                    integral.push_back(g.integral[k]);
                }
            }
        }
    }
    if (!from_integral) {
        for (const auto &g : load_gates(o, lattice)) {
            if (g.gate.b.rows() != lattice->dimension() || g.gate.b.cols() != lattice->dimension()) {
                throw ParseError(g.label + ": dimension does not match the lattice");
            }
            Verdict v = is_automorphism(*lattice, g.gate);
            record(g.label, v);
            if (v) {
                integral.push_back(integral_action(*lattice, g.gate));
            }
        }
    }

    Json j{{"lattice", lattice_to_json(*lattice)}, {"generators", verdicts}};
    if (!o.claimed_order.empty()) {
        Integer claimed;
        if (claimed.set_str(o.claimed_order, 10) != 0 || claimed <= 0) {
            throw ParseError("--claimed-order must be a positive integer");
        }
        Json check{{"claimed", o.claimed_order}};
        if (all_ok) {
            ShortVectorSet sv = faithful_vector_set(*lattice, o.threads);
            Integer order = order_on_vectors(integral, sv);
            check["order"] = to_string(order);
            check["ok"] = order == claimed;
            text << "order " << to_string(order) << (order == claimed ? " matches" : " DOES NOT match")
                 << " claimed " << o.claimed_order << "\n";
            all_ok = order == claimed;
        } else {
            check["order"] = nullptr;
            check["ok"] = false;
            text << "order check skipped: some generator is not an automorphism\n";
        }
        j["order_check"] = std::move(check);
    }
    j["ok"] = all_ok;
    emit(o, j, text.str());
    return all_ok ? kOk : kInvariant;
}

int cmd_fixtures(const Options &o) {
    Json j = Json::array();
    std::ostringstream t;
    for (const auto &f : fixtures()) {
        j.push_back(Json{{"name", f.name},
                         {"kind", fixture_kind_str(f.kind)},
                         {"shape", f.shape.dims},
                         {"lattice", f.lattice ? Json(lattice_name_str(*f.lattice)) : Json(nullptr)},
                         {"rows", matrix_to_json(f.rows)},
                         {"note", f.note}});
        t << f.name << " (" << fixture_kind_str(f.kind) << ", shape " << f.shape.str() << ")";
        if (!f.note.empty()) {
            t << "  note: " << f.note;
        }
        t << "\n";
    }
    emit(o, j, t.str());
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"latgate: lattice automorphism groups as gates, and the entanglement of their rows"};
    app.require_subcommand(1);
    Options o;

    auto add_lattice = [&](CLI::App *c) {
        c->add_option("--lattice", o.lattice, "zn, z4-mr, d4, e8-root, e8-hamming, bw16, d12plus, leech");
        c->add_option("--n", o.n, "dimension for zn")->check(CLI::Range(1, 64));
        c->add_option("--basis-file", o.basis_file, "lattice JSON");
        c->add_option("--code-file", o.code_file, "code JSON");
        c->add_option("--construction", o.construction, "a or b (with --code-file)")
            ->check(CLI::IsMember({"a", "b"}));
    };
    auto add_common = [&](CLI::App *c, bool csv) {
        c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember(csv ? std::vector<std::string>{"json", "text", "csv"}
                                      : std::vector<std::string>{"json", "text"}));
        c->add_option("--out", o.out, "write output to a file");
    };

    auto *info = app.add_subcommand("info", "dimension, determinant, parity, minimum, kissing number");
    add_lattice(info);
    add_common(info, true);

    auto *en = app.add_subcommand("enumerate", "count short vectors");
    add_lattice(en);
    add_common(en, false);
    en->add_option("--bound", o.bound, "maximal normalized norm (default: the minimum)");

    auto *aut = app.add_subcommand("aut", "automorphism group: order and generators");
    add_lattice(aut);
    add_common(aut, false);
    aut->add_option("--emit", o.out, "write generator JSON to this file");
    aut->add_option("--budget-nodes", o.budget_nodes, "search node limit (0 = none)");
    aut->add_option("--budget-secs", o.budget_secs, "search time limit in seconds (0 = none)");

    auto *an = app.add_subcommand("analyze", "entanglement of gate rows or states");
    add_common(an, true);
    an->add_option("--fixture", o.fixture, "built-in gate or state (comma separated list allowed)");
    an->add_option("--gates-file", o.gates_file, "matrix, state or generator JSON");
    an->add_option("--shape", o.shape, "factor dimensions, e.g. 3,2,2");
    an->add_option("--measures", o.measures, "tangle3,tangle2,schmidt,ppt,residual or all");
    an->add_option("--tol", o.tol, "eigenvalue tolerance")->check(CLI::PositiveNumber);

    auto *ver = app.add_subcommand("verify", "check generators and a claimed group order");
    add_lattice(ver);
    add_common(ver, false);
    ver->add_option("--fixture", o.fixture, "built-in gates (comma separated)");
    ver->add_option("--gates-file", o.gates_file, "generator JSON");
    ver->add_option("--claimed-order", o.claimed_order, "decimal group order to check");

    auto *fx = app.add_subcommand("fixtures", "list built-in gates and states");
    add_common(fx, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*info) {
            return cmd_info(o);
        }
        if (*en) {
            return cmd_enumerate(o);
        }
        if (*aut) {
            return cmd_aut(o);
        }
        if (*an) {
            return cmd_analyze(o);
        }
        if (*ver) {
            return cmd_verify(o);
        }
        if (*fx) {
            return cmd_fixtures(o);
        }
    } catch (const ParseError &e) {
        std::cerr << "latgate: " << e.what() << "\n";
        return kParse;
    } catch (const InvariantViolation &e) {
        std::cerr << "latgate: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::domain_error &e) {
        std::cerr << "latgate: " << e.what() << "\n";
        return kInvariant;
    } catch (const BudgetError &e) {
        std::cerr << "latgate: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception &e) {
        std::cerr << "latgate: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
