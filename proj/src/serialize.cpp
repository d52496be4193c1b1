// Copyright 2026 The tqdstab Authors
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

#include "tqd/serialize.hpp"

#include <set>
#include <stdexcept>

namespace tqd::io {

namespace {

std::vector<int64_t> int_list(const Json &j, const char *what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be an array of integers");
    }
    std::vector<int64_t> out;
    for (const auto &v : j) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument(std::string(what) + " must be an array of integers");
        }
        out.push_back(v.get<int64_t>());
    }
    return out;
}

int64_t int_field(const Json &j, const char *key, int64_t fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number_integer()) {
        throw std::invalid_argument(std::string("model spec field '") + key + "' must be an integer");
    }
    return j.at(key).get<int64_t>();
}

Json exponent_map(const std::map<size_t, int64_t> &m) {
    Json out = Json::object();
    for (const auto &[site, e] : m) {
        out[std::to_string(site)] = e;
    }
    return out;
}

}  // namespace

std::string rational_text(const Rational01 &r) {
    return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

Rational01 parse_rational(const Json &j) {
    if (j.is_number_integer()) {
        return Rational01(j.get<int64_t>(), 1);
    }
    if (!j.is_string()) {
        throw std::invalid_argument("rational values must be \"p/q\" strings");
    }
    try {
        return Rational01::from_string(j.get<std::string>());
    } catch (const std::logic_error &) {
        throw std::invalid_argument("malformed rational '" + j.get<std::string>() + "'");
    }
}

Json big_int_json(const BigInt &v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max()) {
        return v.convert_to<int64_t>();
    }
    return v.str();
}

Json pauli_json(const PauliOperator &p) {
    return Json{{"phase", p.phase()}, {"x", exponent_map(p.x())}, {"z", exponent_map(p.z())}};
}

PauliOperator pauli_from_json(const SystemPtr &system, const Json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("generator entries must be objects");
    }
    PauliOperator p(system);
    if (j.contains("phase")) {
        p.set_phase(j.at("phase").get<int64_t>());
    }
    for (const char *key : {"x", "z"}) {
        if (!j.contains(key)) {
            continue;
        }
        for (const auto &[site_text, e] : j.at(key).items()) {
            size_t site = std::stoull(site_text);
            if (site >= system->size()) {
                throw std::invalid_argument("generator site " + site_text + " outside the system");
            }
            if (key[0] == 'x') {
                p.set_x(site, e.get<int64_t>());
            } else {
                p.set_z(site, e.get<int64_t>());
            }
        }
    }
    return p;
}

Json group_json(const StabilizerGroup &g) {
    Json gens = Json::array();
    for (const auto &p : g.generators()) {
        gens.push_back(pauli_json(p));
    }
    return Json{{"dims", g.system()->dims()}, {"generators", gens}};
}

StabilizerGroup group_from_json(const Json &j) {
    auto system = make_system(int_list(j.at("dims"), "dims"));
    std::vector<PauliOperator> gens;
    for (const auto &g : j.at("generators")) {
        gens.push_back(pauli_from_json(system, g));
    }
    return StabilizerGroup::candidate(system, gens);
}

ModelType parse_model_type(const std::string &name) {
    for (ModelType t : {ModelType::TC, ModelType::DS, ModelType::TQD, ModelType::SPT, ModelType::StackedTC}) {
        if (name == model_type_name(t)) {
            return t;
        }
    }
    throw std::invalid_argument("unknown model type '" + name + "' (expected tc, ds, tqd, spt or stacked_tc)");
}

ModelSpec model_spec_from_json(const Json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("model spec must be a JSON object");
    }
    static const std::set<std::string> known = {"type", "N", "n", "nij", "Lx", "Ly"};
    for (const auto &[key, value] : j.items()) {
        if (!known.count(key)) {
            throw std::invalid_argument("unknown model spec field '" + key + "'");
        }
    }
    ModelSpec spec;
    spec.type = parse_model_type(j.value("type", std::string("tqd")));
    spec.Lx = int_field(j, "Lx", 3);
    spec.Ly = int_field(j, "Ly", 3);
    if (spec.Lx < 2 || spec.Ly < 2) {
        throw std::invalid_argument("torus dimensions must be at least 2");
    }
    std::vector<int64_t> N = j.contains("N") ? int_list(j.at("N"), "N") : std::vector<int64_t>{};
    std::vector<int64_t> n = j.contains("n") ? int_list(j.at("n"), "n") : std::vector<int64_t>{};
    switch (spec.type) {
        case ModelType::DS:
        case ModelType::SPT:
            spec.params = TqdParams::make({2}, {1});
            return spec;
        case ModelType::TC:
            if (N.size() != 1 || N[0] < 2) {
                throw std::invalid_argument("tc spec needs \"N\": [N] with N >= 2");
            }
            spec.params = TqdParams{N, {0}, {{0}}};
            return spec;
        case ModelType::StackedTC:
            if (N.empty()) {
                throw std::invalid_argument("stacked_tc spec needs a nonempty \"N\"");
            }
            for (int64_t d : N) {
                if (d < 2) {
                    throw std::invalid_argument("stacked_tc layer dimensions must be at least 2");
                }
            }
            spec.params.N = N;
            spec.params.n.assign(N.size(), 0);
            spec.params.nij.assign(N.size(), std::vector<int64_t>(N.size(), 0));
            return spec;
        case ModelType::TQD:
            break;
    }
    if (N.empty()) {
        throw std::invalid_argument("tqd spec needs a nonempty \"N\"");
    }
    if (n.empty()) {
        n.assign(N.size(), 0);
    }
    if (n.size() != N.size()) {
        throw std::invalid_argument("tqd spec: \"n\" must match the length of \"N\"");
    }
    TqdParams p;
    p.N = N;
    p.n = n;
    p.nij.assign(N.size(), std::vector<int64_t>(N.size(), 0));
    if (j.contains("nij")) {
        const Json &m = j.at("nij");
        if (!m.is_array() || m.size() != N.size()) {
            throw std::invalid_argument("tqd spec: \"nij\" must be an M x M matrix");
        }
        for (size_t r = 0; r < N.size(); r++) {
            auto row = int_list(m.at(r), "nij rows");
            if (row.size() != N.size()) {
                throw std::invalid_argument("tqd spec: \"nij\" must be an M x M matrix");
            }
            p.nij[r] = row;
        }
    }
    // The diagonal is determined by n_i.
    for (size_t i = 0; i < N.size(); i++) {
        p.nij[i][i] = mod(2 * p.n[i], p.N[i]);
    }
    p.validate();
    spec.params = p;
    return spec;
}

Json params_json(const TqdParams &p) {
    return Json{{"N", p.N}, {"n", p.n}, {"nij", p.nij}};
}

Json model_spec_json(const ModelSpec &spec) {
    Json out = params_json(spec.params);
    out["type"] = model_type_name(spec.type);
    out["Lx"] = spec.Lx;
    out["Ly"] = spec.Ly;
    return out;
}

LatticeModel build_model(const ModelSpec &spec) {
    switch (spec.type) {
        case ModelType::TC:
            return build_zn_tc(spec.params.N.at(0), spec.Lx, spec.Ly);
        case ModelType::DS:
            return build_ds(spec.Lx, spec.Ly);
        case ModelType::TQD:
            return build_tqd(spec.params, spec.Lx, spec.Ly);
        case ModelType::SPT:
            return build_spt(spec.Lx, spec.Ly);
        case ModelType::StackedTC:
            return build_stacked_tc(spec.params.N, spec.Lx, spec.Ly);
    }
    throw std::logic_error("unreachable model type");
}

Json model_json(const ModelSpec &spec, const LatticeModel &model) {
    Json out;
    out["spec"] = model_spec_json(spec);
    out["group"] = group_json(model.group);
    out["generator_family"] = model.generator_family;
    const auto &lat = model.lattice;
    Json names = Json::array();
    for (size_t s = 0; s < lat.system()->size(); s++) {
        names.push_back(lat.site_name(s));
    }
    Json legend;
    legend["edge_rule"] = "site = layer*2*Lx*Ly + 2*(y*Lx + x) + o; o = 0 for the edge (x,y)-(x+1,y), o = 1 for (x,y)-(x,y+1)";
    if (lat.has_vertex_layer()) {
        legend["vertex_rule"] = "site = layers*2*Lx*Ly + y*Lx + x";
    }
    legend["site_names"] = names;
    out["legend"] = legend;
    return out;
}

Json element_json(const Element &a) {
    return Json(a);
}

Element element_from_json(const Json &j) {
    return int_list(j, "group elements");
}

Json theory_json(const AnyonTheory &t) {
    Json q = Json::array();
    for (const auto &r : t.q_gen()) {
        q.push_back(rational_text(r));
    }
    Json b = Json::array();
    for (const auto &row : t.b_gen()) {
        Json r = Json::array();
        for (const auto &v : row) {
            r.push_back(rational_text(v));
        }
        b.push_back(r);
    }
    return Json{{"orders", t.group().orders}, {"q_gen", q}, {"b_gen", b}};
}

AnyonTheory theory_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("orders") || !j.contains("q_gen") || !j.contains("b_gen")) {
        throw std::invalid_argument("theory JSON needs \"orders\", \"q_gen\" and \"b_gen\"");
    }
    FiniteAbelianGroup g{int_list(j.at("orders"), "orders")};
    for (int64_t o : g.orders) {
        if (o < 1) {
            throw std::invalid_argument("theory orders must be positive");
        }
    }
    std::vector<Rational01> q;
    for (const auto &v : j.at("q_gen")) {
        q.push_back(parse_rational(v));
    }
    std::vector<std::vector<Rational01>> b;
    for (const auto &row : j.at("b_gen")) {
        std::vector<Rational01> r;
        for (const auto &v : row) {
            r.push_back(parse_rational(v));
        }
        b.push_back(r);
    }
    if (q.size() != g.rank() || b.size() != g.rank()) {
        throw std::invalid_argument("theory JSON: q_gen and b_gen must have one entry per generator");
    }
    for (const auto &r : b) {
        if (r.size() != g.rank()) {
            throw std::invalid_argument("theory JSON: b_gen must be square");
        }
    }
    AnyonTheory t(g, q, b);
    auto problems = validate_theory(t);
    if (!problems.empty()) {
        throw std::invalid_argument("invalid theory: " + problems.front());
    }
    return t;
}

Json theory_report(const AnyonTheory &t) {
    Json out = theory_json(t);
    Json table = Json::array();
    for (const auto &a : t.group().elements()) {
        table.push_back(Json{{"element", a}, {"theta", rational_text(t.q(a))}});
    }
    out["theta_table"] = table;
    out["size"] = t.size();
    out["modular"] = is_modular(t);
    out["fusion_group"] = t.group().invariant_factors();
    return out;
}

Json int_matrix_json(const IntMatrix &m) {
    Json out = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(big_int_json(m.at(r, c)));
        }
        out.push_back(row);
    }
    return out;
}

IntMatrix int_matrix_from_json(const Json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrices must be nonempty arrays of integer rows");
    }
    size_t cols = 0;
    std::vector<std::vector<int64_t>> rows;
    for (const auto &row : j) {
        rows.push_back(int_list(row, "matrix rows"));
        if (rows.size() == 1) {
            cols = rows.back().size();
        } else if (rows.back().size() != cols) {
            throw std::invalid_argument("matrix rows must have equal length");
        }
    }
    IntMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

Json census_json(const KCensus &c) {
    Json out = Json::object();
    for (const auto &[theta, count] : c.by_theta) {
        out[rational_text(theta)] = count;
    }
    return out;
}

Json kmatrix_report(const IntMatrix &K) {
    auto group = anyon_group_from_k(K);
    auto c = census(K);
    return Json{{"K", int_matrix_json(K)},
                {"group", group.invariant_factors},
                {"census", census_json(c)},
                {"signature", c.signature},
                {"size", c.size}};
}

Json extraction_report(const ExtractedTheory &ex, bool iso_match, const std::string &target) {
    Json theta = Json::object();
    Json orders = Json::object();
    Json braiding = Json::array();
    for (size_t i = 0; i < ex.names.size(); i++) {
        theta[ex.names[i]] = rational_text(ex.theta[i]);
        orders[ex.names[i]] = ex.fusion_orders[i];
        Json row = Json::array();
        for (const auto &v : ex.braiding[i]) {
            row.push_back(rational_text(v));
        }
        braiding.push_back(row);
    }
    return Json{{"names", ex.names},          {"theta", theta},   {"braiding", braiding},
                {"fusion_orders", orders},    {"iso_match", iso_match}, {"target", target},
                {"theory", theory_json(ex.theory())}};
}

}  // namespace tqd::io
