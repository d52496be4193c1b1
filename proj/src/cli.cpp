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

#include "tqd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "tqd/anyon.hpp"
#include "tqd/circuitmap.hpp"
#include "tqd/extraction.hpp"
#include "tqd/kmatrix.hpp"
#include "tqd/lattice.hpp"
#include "tqd/serialize.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsed command line shared by every leaf command.
struct CommandSpec {
    std::string command;  // e.g. "verify degeneracy"
    std::string action;
    std::string spec_path;
    std::string out_path;
    std::string type;
    std::string N, n, nij;
    int64_t L = 0, Lx = 0, Ly = 0;
    bool json = false;
    int verbosity = 0;
    // Command-specific inputs.
    std::string theory_path, with_path, bosons, K, W, target_K, labels, triple;
    int64_t ell = 4;
    std::optional<int64_t> expect;
};

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

int64_t parse_int(const std::string &text, const std::string &what) {
    size_t used = 0;
    int64_t v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::logic_error &) {
        throw UsageError("malformed integer '" + text + "' in " + what);
    }
    if (used != text.size()) {
        throw UsageError("malformed integer '" + text + "' in " + what);
    }
    return v;
}

std::vector<int64_t> parse_list(const std::string &text, const std::string &what) {
    std::vector<int64_t> out;
    for (const auto &item : split(text, ',')) {
        out.push_back(parse_int(item, what));
    }
    return out;
}

// "a,b;c,d" -> rows.
std::vector<std::vector<int64_t>> parse_rows(const std::string &text, const std::string &what) {
    std::vector<std::vector<int64_t>> out;
    for (const auto &row : split(text, ';')) {
        out.push_back(parse_list(row, what));
    }
    return out;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

bool has_inline_params(const CommandSpec &c) {
    return !c.type.empty() || !c.N.empty() || !c.n.empty() || !c.nij.empty();
}

// The model spec JSON assembled from --spec and/or the inline flags; inline
// torus sizes override those of the file.
Json spec_json(const CommandSpec &c) {
    Json j;
    if (!c.spec_path.empty()) {
        if (has_inline_params(c)) {
            throw UsageError("give either --spec or inline model parameters, not both");
        }
        j = read_json_file(c.spec_path);
        if (!j.is_object()) {
            throw UsageError("model spec must be a JSON object");
        }
    } else if (has_inline_params(c)) {
        j["type"] = c.type.empty() ? "tqd" : c.type;
        if (!c.N.empty()) {
            j["N"] = parse_list(c.N, "--N");
        }
        if (!c.n.empty()) {
            j["n"] = parse_list(c.n, "--n");
        }
        if (!c.nij.empty()) {
            size_t m = c.N.empty() ? 0 : parse_list(c.N, "--N").size();
            std::vector<std::vector<int64_t>> matrix(m, std::vector<int64_t>(m, 0));
            for (const auto &entry : parse_rows(c.nij, "--nij")) {
                if (entry.size() != 3) {
                    throw UsageError("--nij entries are 'i,j,v' triples separated by ';'");
                }
                int64_t i = entry[0] - 1, k = entry[1] - 1;
                if (i < 0 || k < 0 || i >= (int64_t)m || k >= (int64_t)m || i == k) {
                    throw UsageError("--nij indices must be distinct and in 1..M");
                }
                matrix[i][k] = entry[2];
                matrix[k][i] = entry[2];
            }
            j["nij"] = matrix;
        }
    } else {
        throw UsageError("this command needs --spec PATH or inline parameters (--N, --n, --nij, --type)");
    }
    if (c.L) {
        j["Lx"] = c.L;
        j["Ly"] = c.L;
    }
    if (c.Lx) {
        j["Lx"] = c.Lx;
    }
    if (c.Ly) {
        j["Ly"] = c.Ly;
    }
    return j;
}

io::ModelSpec resolve_spec(const CommandSpec &c) {
    return io::model_spec_from_json(spec_json(c));
}

TqdParams resolve_tqd_params(const CommandSpec &c) {
    auto spec = resolve_spec(c);
    if (spec.type != ModelType::TQD && spec.type != ModelType::DS) {
        throw UsageError(std::string("this command needs twisted quantum double parameters, not a ") +
                         model_type_name(spec.type) + " model");
    }
    return spec.params;
}

// The theory given by --theory, else the TQD theory of the parameters.
AnyonTheory resolve_theory(const CommandSpec &c) {
    if (!c.theory_path.empty()) {
        return io::theory_from_json(read_json_file(c.theory_path));
    }
    return tqd_theory(resolve_tqd_params(c));
}

IntMatrix matrix_from_rows(const std::vector<std::vector<int64_t>> &rows, const std::string &what) {
    Json j = rows;
    try {
        return io::int_matrix_from_json(j);
    } catch (const std::invalid_argument &e) {
        throw UsageError(what + ": " + e.what());
    }
}

// The K-matrix from --K, else the one attached to the model spec.
IntMatrix resolve_k(const CommandSpec &c) {
    if (!c.K.empty()) {
        return matrix_from_rows(parse_rows(c.K, "--K"), "--K");
    }
    auto spec = resolve_spec(c);
    switch (spec.type) {
        case ModelType::TC:
            return build_k_toric(spec.params.N).K;
        case ModelType::StackedTC: {
            std::vector<int64_t> dims;
            for (int64_t d : spec.params.N) {
                dims.push_back(d * d);
            }
            return build_k_toric(dims).K;
        }
        case ModelType::DS:
        case ModelType::TQD:
            return build_k_tqd(spec.params).K;
        case ModelType::SPT:
            break;
    }
    throw UsageError("the spt model has no K-matrix");
}

std::vector<Element> parse_elements(const std::string &text, const std::string &what) {
    auto rows = parse_rows(text, what);
    return std::vector<Element>(rows.begin(), rows.end());
}

// The named theory a lattice model should realize.
std::pair<AnyonTheory, std::string> model_target(const LatticeModel &model) {
    switch (model.type) {
        case ModelType::TC:
            return {zn_toric_code_theory(model.layer_dims().at(0)),
                    "zn_toric_code_theory(" + std::to_string(model.layer_dims().at(0)) + ")"};
        case ModelType::StackedTC: {
            std::string name = "stacked_toric_code_theory([";
            for (size_t i = 0; i < model.layer_dims().size(); i++) {
                name += (i ? "," : "") + std::to_string(model.layer_dims()[i]);
            }
            return {stacked_toric_code_theory(model.layer_dims()), name + "])"};
        }
        case ModelType::DS:
        case ModelType::TQD:
            return {tqd_theory(model.params), "tqd_theory(" + model.params.str() + ")"};
        case ModelType::SPT:
            break;
    }
    throw UsageError("the spt model has no deconfined anyons to extract");
}

BigInt expected_degeneracy(const io::ModelSpec &spec) {
    BigInt out = 1;
    switch (spec.type) {
        case ModelType::SPT:
            return 1;
        case ModelType::DS:
            return 4;
        case ModelType::StackedTC:
            for (int64_t d : spec.params.N) {
                out *= BigInt(d) * d * d * d;
            }
            return out;
        case ModelType::TC:
        case ModelType::TQD:
            for (int64_t d : spec.params.N) {
                out *= BigInt(d) * d;
            }
            return out;
    }
    return out;
}

struct Report {
    Json body;
    bool pass = true;
};

// --------------------------------------------------------------------------
// Commands
// --------------------------------------------------------------------------

Report model_build(const CommandSpec &c) {
    auto spec = resolve_spec(c);
    auto model = io::build_model(spec);
    return {io::model_json(spec, model), true};
}

Report verify(const CommandSpec &c) {
    auto spec = resolve_spec(c);
    Report r;
    r.body["spec"] = io::model_spec_json(spec);
    if (c.action == "condensation-equality") {
        GroupComparison cmp;
        std::string parent;
        if (spec.type == ModelType::DS || spec.type == ModelType::TQD) {
            auto stack = build_stacked_tc(spec.params.N, spec.Lx, spec.Ly);
            auto condensed = measure(stack.group, tqd_edge_terms(stack.lattice, spec.params));
            cmp = compare_groups(condensed, io::build_model(spec).group);
            parent = "stacked_tc";
        } else if (spec.type == ModelType::SPT) {
            auto ds_hat = build_ds_with_vertex_qubits(spec.Lx, spec.Ly);
            auto gauged = measure(ds_hat.group, spt_gauss_terms(ds_hat.lattice));
            cmp = compare_groups(gauged, build_spt(spec.Lx, spec.Ly).group);
            parent = "ds_with_vertex_qubits";
        } else {
            throw UsageError("condensation-equality applies to ds, tqd and spt models");
        }
        r.body["parent"] = parent;
        r.body["equal"] = cmp.equal;
        r.body["equal_up_to_phase"] = cmp.equal_up_to_phase;
        r.body["missing_from_model"] = cmp.missing_from_second;
        r.body["missing_from_condensed"] = cmp.missing_from_first;
        r.pass = cmp.equal;
        return r;
    }
    auto model = io::build_model(spec);
    if (c.action == "commuting") {
        auto bad = assert_commuting(model.group);
        r.body["generators"] = model.group.size();
        Json pairs = Json::array();
        for (const auto &[i, j] : bad) {
            pairs.push_back({i, j});
        }
        r.body["violations"] = pairs;
        r.pass = bad.empty();
    } else if (c.action == "scalar") {
        auto s = scalar_consistency(model.group);
        r.body["consistent"] = s.consistent;
        r.body["witness"] = s.witness ? Json(s.witness->str()) : Json(nullptr);
        r.pass = s.consistent;
    } else if (c.action == "degeneracy") {
        BigInt d = logical_dimension(model.group);
        BigInt expected = c.expect ? BigInt(*c.expect) : expected_degeneracy(spec);
        r.body["logical_dimension"] = io::big_int_json(d);
        r.body["expected"] = io::big_int_json(expected);
        r.pass = d == expected;
    } else {
        throw UsageError("unknown verification '" + c.action + "'");
    }
    return r;
}

Report anyons_extract(const CommandSpec &c) {
    auto spec = resolve_spec(c);
    auto model = io::build_model(spec);
    auto [target, target_name] = model_target(model);
    std::vector<std::string> names;
    if (!c.labels.empty()) {
        names = split(c.labels, ',');
    } else {
        for (const auto &[name, label] : generating_labels(model)) {
            names.push_back(name);
        }
    }
    auto ex = extract_theory(model, names);
    bool iso = theories_isomorphic(ex.theory(), target).isomorphic;
    Report r{io::extraction_report(ex, iso, target_name), iso};
    r.body["spec"] = io::model_spec_json(spec);
    return r;
}

Report theory_command(const CommandSpec &c) {
    Report r;
    const std::string &a = c.action;
    if (a == "tqd") {
        auto params = resolve_tqd_params(c);
        r.body = io::theory_report(tqd_theory(params));
        r.body["params"] = io::params_json(params);
    } else if (a == "condense") {
        if (c.bosons.empty()) {
            throw UsageError("theory condense needs --bosons 'a,b,...;...'");
        }
        auto t = resolve_theory(c);
        auto bosons = parse_elements(c.bosons, "--bosons");
        auto res = condense(t, bosons);
        r.body = io::theory_report(res.theory);
        r.body["parent"] = io::theory_json(t);
        r.body["bosons"] = bosons;
    } else if (a == "lagrangian") {
        auto t = resolve_theory(c);
        auto subs = lagrangian_subgroups(t);
        r.body["theory"] = io::theory_json(t);
        r.body["lagrangian_subgroups"] = subs;
        r.body["count"] = subs.size();
    } else if (a == "stack") {
        if (c.with_path.empty()) {
            throw UsageError("theory stack needs --with PATH");
        }
        auto t = stack(resolve_theory(c), io::theory_from_json(read_json_file(c.with_path)));
        r.body = io::theory_report(t);
    } else if (a == "iso") {
        if (c.with_path.empty()) {
            throw UsageError("theory iso needs --with PATH");
        }
        auto t = resolve_theory(c);
        auto u = io::theory_from_json(read_json_file(c.with_path));
        auto iso = theories_isomorphic(t, u);
        r.body["first"] = io::theory_json(t);
        r.body["second"] = io::theory_json(u);
        r.body["isomorphic"] = iso.isomorphic;
        r.body["images"] = iso.images;
        r.pass = iso.isomorphic;
    } else if (a == "fusion-group") {
        auto params = resolve_tqd_params(c);
        auto snf = fusion_group(params);
        auto table = fusion_group_from_cocycle(params);
        r.body["params"] = io::params_json(params);
        r.body["invariant_factors"] = snf;
        r.body["from_cocycle"] = table;
        r.body["agree"] = snf == table;
        r.pass = snf == table;
    } else if (a == "cocycle") {
        auto params = resolve_tqd_params(c);
        bool ok = cocycle_condition_holds(params);
        r.body["params"] = io::params_json(params);
        r.body["cocycle_condition"] = ok;
        if (!c.triple.empty()) {
            auto e = parse_elements(c.triple, "--triple");
            if (e.size() != 3) {
                throw UsageError("--triple takes three elements 'g;h;k'");
            }
            r.body["triple"] = e;
            r.body["value"] = io::rational_text(cocycle_value(params, e[0], e[1], e[2]));
        }
        r.pass = ok;
    } else {
        throw UsageError("unknown theory action '" + a + "'");
    }
    return r;
}

Report kmatrix_command(const CommandSpec &c) {
    Report r;
    const std::string &a = c.action;
    if (a == "build" || a == "census") {
        IntMatrix K = resolve_k(c);
        r.body = io::kmatrix_report(K);
        if (a == "census" && c.K.empty()) {
            // Cross-check against the spins of the theory the spec names.
            auto model_spec = resolve_spec(c);
            AnyonTheory target = model_spec.type == ModelType::TC || model_spec.type == ModelType::StackedTC
                                     ? theory_from_k(K)
                                     : tqd_theory(model_spec.params);
            auto expected = spin_census(target);
            Json ej = Json::object();
            for (const auto &[q, n] : expected) {
                ej[io::rational_text(q)] = n;
            }
            r.body["theory_census"] = ej;
            r.pass = census(K).by_theta == expected;
        }
    } else if (a == "condense-check") {
        auto params = resolve_tqd_params(c);
        auto m = condensation_matrices(params);
        r.body["params"] = io::params_json(params);
        r.body["K_TQD"] = io::int_matrix_json(build_k_tqd(params).K);
        r.body["K_TC"] = io::int_matrix_json(m.K_TC);
        r.body["Q"] = io::int_matrix_json(m.Q);
        r.body["L"] = io::int_matrix_json(m.L);
        r.body["q_identity"] = m.q_identity;
        r.body["l_identity"] = m.l_identity;
        r.body["k_identity"] = m.k_identity;
        r.pass = m.q_identity && m.l_identity && m.k_identity;
    } else if (a == "transform") {
        if (c.W.empty()) {
            throw UsageError("kmatrix transform needs --W 'row;row;...'");
        }
        IntMatrix K = resolve_k(c);
        IntMatrix W = matrix_from_rows(parse_rows(c.W, "--W"), "--W");
        if (W.rows() != K.rows() || W.cols() != K.cols()) {
            throw UsageError("--W must have the shape of K");
        }
        IntMatrix T = transform(K, W);
        auto before = census(K);
        auto after = census(T);
        bool group_same = anyon_group_from_k(K).invariant_factors == anyon_group_from_k(T).invariant_factors;
        bool census_same = before.by_theta == after.by_theta && before.signature == after.signature;
        r.body["K"] = io::int_matrix_json(K);
        r.body["W"] = io::int_matrix_json(W);
        r.body["transformed"] = io::kmatrix_report(T);
        r.body["group_preserved"] = group_same;
        r.body["census_preserved"] = census_same;
        r.pass = group_same && census_same;
        if (!c.target_K.empty()) {
            IntMatrix target = matrix_from_rows(parse_rows(c.target_K, "--target"), "--target");
            r.body["matches_target"] = T == target;
            r.pass = r.pass && T == target;
        }
    } else {
        throw UsageError("unknown kmatrix action '" + a + "'");
    }
    return r;
}

Report spt_cocycle_command(const CommandSpec &c) {
    if (c.ell < 1) {
        throw UsageError("--ell must be positive");
    }
    SptCocycle res = (c.Lx || c.Ly || c.L) ? spt_cocycle(build_spt(c.Lx ? c.Lx : (c.L ? c.L : c.ell + 6),
                                                                   c.Ly ? c.Ly : (c.L ? c.L : 7)),
                                                         c.ell)
                                           : spt_cocycle(c.ell);
    Report r;
    Json omega = Json::object();
    bool others_trivial = true;
    for (const auto &[ghk, value] : res.omega) {
        omega[std::to_string(ghk[0]) + "," + std::to_string(ghk[1]) + "," + std::to_string(ghk[2])] =
            io::rational_text(value);
        if (ghk != std::array<int, 3>{1, 1, 1} && !value.is_zero()) {
            others_trivial = false;
        }
    }
    Rational01 w111 = res.omega.at({1, 1, 1});
    r.body["ell"] = c.ell;
    r.body["omega"] = omega;
    r.body["omega_111"] = io::rational_text(w111);
    r.body["others_trivial"] = others_trivial;
    r.body["cocycle_condition"] = res.cocycle_condition;
    r.body["region_stabilizers"] = res.region_stabilizers;
    r.pass = w111 == Rational01(1, 2) && others_trivial && res.cocycle_condition;
    return r;
}

Report appendixa_check(const CommandSpec &c) {
    int64_t L = c.L ? c.L : 3;
    if (c.Lx || c.Ly) {
        throw UsageError("appendixa check uses a square torus; pass --L");
    }
    auto rep = appendix_a_check(L);
    auto word = [](bool ok) { return ok ? "pass" : "fail"; };
    Report r;
    r.body["L"] = L;
    r.body["configurations"] = rep.configurations;
    r.body["psi_identity"] = word(rep.psi_identity);
    r.body["table1"] = word(rep.table1);
    r.body["ucx_terms"] = word(rep.ucx_terms);
    r.body["uab_ce"] = word(rep.uab_ce);
    r.pass = rep.psi_identity && rep.table1 && rep.ucx_terms && rep.uab_ce;
    return r;
}

// --------------------------------------------------------------------------
// Argument wiring
// --------------------------------------------------------------------------

void add_common(CLI::App *sub, CommandSpec &c, bool model_flags) {
    sub->add_option("--out", c.out_path, "Write the JSON report to PATH");
    sub->add_flag("--json", c.json, "Also print the report to stdout when --out is given");
    sub->add_flag("-v,--verbose", c.verbosity, "Print a one-line summary to stderr");
    if (!model_flags) {
        return;
    }
    sub->add_option("--spec", c.spec_path, "Model spec JSON file");
    sub->add_option("--type", c.type, "Model type for inline parameters (tc, ds, tqd, spt, stacked_tc)");
    sub->add_option("--N", c.N, "Comma-separated N_i");
    sub->add_option("--n", c.n, "Comma-separated n_i");
    sub->add_option("--nij", c.nij, "Off-diagonal couplings 'i,j,v;...' (1-based indices)");
    sub->add_option("--L", c.L, "Square torus size");
    sub->add_option("--Lx", c.Lx, "Torus width");
    sub->add_option("--Ly", c.Ly, "Torus height");
}

using Handler = std::function<Report(const CommandSpec &)>;

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact stabilizer toolkit for twisted quantum doubles", "tqdstab"};
    app.require_subcommand(1);
    CommandSpec c;
    Handler handler;
    std::vector<std::pair<CLI::App *, std::pair<std::string, Handler>>> leaves;

    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help, Handler h,
                    bool model_flags = true) {
        auto *sub = parent->add_subcommand(name, help);
        add_common(sub, c, model_flags);
        std::string full = parent == &app ? name : parent->get_name() + " " + name;
        leaves.push_back({sub, {full, std::move(h)}});
        return sub;
    };
    auto group = [&](const std::string &name, const std::string &help) {
        auto *sub = app.add_subcommand(name, help);
        sub->require_subcommand(1);
        return sub;
    };

    leaf(group("model", "Build lattice models"), "build", "Emit the stabilizer group of a model", model_build);

    auto *v = leaf(&app, "verify", "Check a model's stabilizer group", verify);
    v->add_option("check", c.action, "commuting | scalar | degeneracy | condensation-equality")
        ->required()
        ->check(CLI::IsMember({"commuting", "scalar", "degeneracy", "condensation-equality"}));
    v->add_option("--expect", c.expect, "Expected logical dimension (degeneracy)");

    auto *ax = leaf(group("anyons", "Anyon data from lattice string operators"), "extract",
                    "T-junction spins and crossing braidings of generating anyons", anyons_extract);
    ax->add_option("--labels", c.labels, "Comma-separated anyon names (default: generating anyons)");

    auto *th = leaf(&app, "theory", "Abstract anyon theories", theory_command);
    th->add_option("action", c.action, "tqd | condense | lagrangian | stack | iso | fusion-group | cocycle")
        ->required()
        ->check(CLI::IsMember({"tqd", "condense", "lagrangian", "stack", "iso", "fusion-group", "cocycle"}));
    th->add_option("--theory", c.theory_path, "Theory JSON file (instead of TQD parameters)");
    th->add_option("--with", c.with_path, "Second theory JSON file (stack, iso)");
    th->add_option("--bosons", c.bosons, "Bosons to condense, 'a,b,...;...'");
    th->add_option("--triple", c.triple, "Evaluate omega(g,h,k) for 'g;h;k'");

    auto *km = leaf(&app, "kmatrix", "K-matrix descriptions", kmatrix_command);
    km->add_option("action", c.action, "build | census | condense-check | transform")
        ->required()
        ->check(CLI::IsMember({"build", "census", "condense-check", "transform"}));
    km->add_option("--K", c.K, "Explicit K-matrix 'row;row;...'");
    km->add_option("--W", c.W, "Unimodular W for K -> W K W^T");
    km->add_option("--target", c.target_K, "Expected W K W^T");

    auto *sp = leaf(group("spt", "Z_2 SPT boundary data"), "cocycle", "Boundary 3-cocycle", spt_cocycle_command,
                    false);
    sp->add_option("--ell", c.ell, "Boundary action length (default 4)");
    sp->add_option("--L", c.L, "Square torus size");
    sp->add_option("--Lx", c.Lx, "Torus width");
    sp->add_option("--Ly", c.Ly, "Torus height");

    auto *ap = leaf(group("appendixa", "Qubit circuit chain on the triangular lattice"), "check",
                    "Psi identity, CZ versus phase-gate rows, U_CX terms and U_AB collapse", appendixa_check, false);
    ap->add_option("--L", c.L, "Square torus size (default 3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsageError;
    }

    for (auto &[sub, named] : leaves) {
        if (sub->parsed()) {
            c.command = named.first + (c.action.empty() ? "" : " " + c.action);
            handler = named.second;
        }
    }
    if (!handler) {
        err << "error: no command given\n";
        return kUsageError;
    }

    Report report;
    try {
        report = handler(c);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Json::exception &e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << c.command << " failed: " << e.what() << "\n";
        return kUsageError;
    }

    report.body["command"] = c.command;
    report.body["pass"] = report.pass;
    std::string text = report.body.dump(2) + "\n";
    if (!c.out_path.empty()) {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << c.out_path << "'\n";
            return kUsageError;
        }
        file << text;
    }
    if (c.out_path.empty() || c.json) {
        out << text;
    }
    if (c.verbosity > 0) {
        err << c.command << ": " << (report.pass ? "pass" : "FAIL") << "\n";
    }
    return report.pass ? kPass : kVerificationFailure;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; i++) {
        args.emplace_back(argv[i]);
    }
    return run(args, out, err);
}

}  // namespace tqd::cli
