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

#include "latgate/json_io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace latgate {

namespace {

Json integer_to_json(const Integer &z) {
    if (z.fits_slong_p()) {
        return z.get_si();
    }
    return z.get_str();
}

Integer integer_from_json(const Json &j) {
    if (j.is_number_integer()) {
        return Integer(static_cast<long>(j.get<int64_t>()));
    }
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
            throw ParseError("bad integer '" + j.get<std::string>() + "'");
        }
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

Rational rational_from_json(const Json &j) {
    try {
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
        return Rational(integer_from_json(j));
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &e) {
        throw ParseError(std::string("bad rational: ") + e.what());
    }
}

}  // namespace

Json matrix_to_json(const RationalMatrix &m) {
    Integer den = common_denominator(m);
    IntMatrix num = clear_denominators(m);
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); i++) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); j++) {
            row.push_back(integer_to_json(num(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"den", integer_to_json(den)}, {"num", std::move(rows)}};
}

Json matrix_to_json(const IntMatrix &m) {
    return matrix_to_json(to_rational(m));
}

RationalMatrix matrix_from_json(const Json &j) {
    if (!field(j, "rows").is_number_unsigned() || !field(j, "cols").is_number_unsigned()) {
        throw ParseError("matrix rows/cols must be non-negative integers");
    }
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    Integer den = j.contains("den") ? integer_from_json(j.at("den")) : Integer(1);
    if (den <= 0) {
        throw ParseError("matrix denominator must be positive");
    }
    const Json &num = field(j, "num");
    if (!num.is_array() || num.size() != rows) {
        throw ParseError("matrix 'num' must have 'rows' rows");
    }
    RationalMatrix m(rows, cols);
    for (size_t i = 0; i < rows; i++) {
        if (!num[i].is_array() || num[i].size() != cols) {
            throw ParseError("matrix row " + std::to_string(i) + " does not have 'cols' entries");
        }
        for (size_t c = 0; c < cols; c++) {
            m(i, c) = make_rational(integer_from_json(num[i][c]), den);
        }
    }
    return m;
}

Json lattice_to_json(const Lattice &l) {
    return Json{{"name", l.name() ? Json(*l.name()) : Json(nullptr)},
                {"basis", matrix_to_json(l.basis())},
                {"norm_divisor", to_string(l.norm_divisor())}};
}

Lattice lattice_from_json(const Json &j) {
    RationalMatrix basis = matrix_from_json(field(j, "basis"));
    Rational div = j.contains("norm_divisor") ? rational_from_json(j.at("norm_divisor")) : Rational(1);
    std::optional<std::string> name;
    if (j.contains("name") && j.at("name").is_string()) {
        name = j.at("name").get<std::string>();
    }
    try {
        return lattice_from_basis(basis, div, name);
    } catch (const std::exception &e) {
        throw ParseError(std::string("invalid lattice: ") + e.what());
    }
}

Json code_to_json(const LinearCode &c) {
    return Json{{"field", c.field_order()}, {"generator", matrix_to_json(c.generator())}};
}

LinearCode code_from_json(const Json &j) {
    const Json &f = field(j, "field");
    if (!f.is_number_unsigned()) {
        throw ParseError("code field must be 2 or 3");
    }
    RationalMatrix g = matrix_from_json(field(j, "generator"));
    if (!is_integral(g)) {
        throw ParseError("code generator must be integral");
    }
    try {
        return LinearCode(f.get<unsigned>(), to_integer(g));
    } catch (const std::exception &e) {
        throw ParseError(std::string("invalid code: ") + e.what());
    }
}

Json state_to_json(const MultipartiteState &s) {
    RationalMatrix row(1, s.amplitudes.size(), s.amplitudes);
    Integer den = common_denominator(row);
    IntMatrix num = clear_denominators(row);
    Json nums = Json::array();
    for (size_t k = 0; k < num.cols(); k++) {
        nums.push_back(integer_to_json(num(0, k)));
    }
    return Json{{"shape", s.shape.dims}, {"den", integer_to_json(den)}, {"num", std::move(nums)}};
}

MultipartiteState state_from_json(const Json &j) {
    const Json &shape = field(j, "shape");
    if (!shape.is_array()) {
        throw ParseError("state shape must be an array");
    }
    std::vector<size_t> dims;
    for (const auto &d : shape) {
        if (!d.is_number_unsigned()) {
            throw ParseError("state shape entries must be positive integers");
        }
        dims.push_back(d.get<size_t>());
    }
    Integer den = j.contains("den") ? integer_from_json(j.at("den")) : Integer(1);
    if (den <= 0) {
        throw ParseError("state denominator must be positive");
    }
    std::vector<Rational> amps;
    const Json &num = field(j, "num");
    if (!num.is_array()) {
        throw ParseError("state 'num' must be an array");
    }
    for (const auto &a : num) {
        amps.push_back(make_rational(integer_from_json(a), den));
    }
    try {
        return make_state(make_shape(std::move(dims)), std::move(amps));
    } catch (const std::exception &e) {
        throw ParseError(std::string("invalid state: ") + e.what());
    }
}

Json short_vectors_to_json(const ShortVectorSet &s) {
    Json by_norm = Json::object();
    for (const auto &[norm, count] : s.counts_by_norm()) {
        by_norm[to_string(norm)] = count;
    }
    return Json{{"bound", to_string(s.bound)}, {"count", s.count()}, {"by_norm", std::move(by_norm)}};
}

Json aut_to_json(const Lattice &l, const AutGroupResult &r) {
    Json integral = Json::array();
    Json natural = Json::array();
    for (const auto &g : r.generators) {
        integral.push_back(matrix_to_json(g.u));
        natural.push_back(matrix_to_json(natural_action(l, g).b));
    }
    return Json{{"lattice", lattice_to_json(l)},
                {"order", to_string(r.order)},
                {"complete", r.complete},
                {"orbit_sizes", r.orbit_sizes},
                {"generators_integral", std::move(integral)},
                {"generators_natural", std::move(natural)}};
}

ImportedGenerators generators_from_json(const Json &j) {
    ImportedGenerators out;
    if (j.contains("generators_natural")) {
        for (const auto &m : j.at("generators_natural")) {
            out.natural.push_back({matrix_from_json(m)});
        }
    }
    if (j.contains("generators_integral")) {
        for (const auto &m : j.at("generators_integral")) {
            RationalMatrix u = matrix_from_json(m);
            if (!is_integral(u)) {
                throw ParseError("integral generator has non-integer entries");
            }
            out.integral.push_back({to_integer(u)});
        }
    }
    if (out.integral.empty() && out.natural.empty()) {
        throw ParseError("document has neither 'generators_integral' nor 'generators_natural'");
    }
    return out;
}

double round_sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

Json report_to_json(const TangleReport &r) {
    auto opt = [](const std::optional<double> &v) {
        return v ? Json(round_sig(*v)) : Json(nullptr);
    };
    Json j;
    j["row"] = r.row;
    j["tau3"] = r.tau3 ? Json(round_sig(r.tau3->get_d())) : Json(nullptr);
    j["tau3_exact"] = r.tau3 ? Json(to_string(*r.tau3)) : Json(nullptr);
    j["tau_ab"] = opt(r.tau_ab);
    j["tau_ac"] = opt(r.tau_ac);
    j["tau_bc"] = opt(r.tau_bc);
    if (r.schmidt.empty()) {
        j["schmidt"] = nullptr;
    } else {
        Json s = Json::object();
        for (const auto &e : r.schmidt) {
            s[e.cut] = e.rank;
        }
        j["schmidt"] = std::move(s);
    }
    if (r.ppt.empty()) {
        j["ppt"] = nullptr;
    } else {
        Json p = Json::object();
        for (const auto &e : r.ppt) {
            Json ev = Json::array();
            for (double v : e.spectrum.eigenvalues) {
                ev.push_back(round_sig(v));
            }
            p[e.label] = Json{{"eigenvalues", std::move(ev)},
                              {"entangled", e.spectrum.entangled},
                              {"separable", e.spectrum.separable}};
        }
        j["ppt"] = std::move(p);
    }
    if (!r.residual.empty()) {
        Json res = Json::array();
        for (const auto &e : r.residual) {
            res.push_back(Json{{"factor", factor_label(e.factor)},
                               {"value", e.value},
                               {"tau3", round_sig(e.tau3.get_d())},
                               {"tau3_exact", to_string(e.tau3)}});
        }
        j["residual"] = std::move(res);
    }
    return j;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

}  // namespace latgate
