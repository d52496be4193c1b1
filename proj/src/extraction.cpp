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

#include "tqd/extraction.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace tqd {

// --------------------------------------------------------------------------
// Junctions
// --------------------------------------------------------------------------

namespace {

int direction_index(char m) {
    switch (m) {
        case 'E':
            return 0;
        case 'N':
            return 1;
        case 'W':
            return 2;
        case 'S':
            return 3;
    }
    throw std::invalid_argument(std::string("unknown path move '") + m + "'");
}

const char kDirections[] = {'E', 'N', 'W', 'S'};

}  // namespace

JunctionSpec JunctionSpec::straight(int64_t cx, int64_t cy, const std::string &dirs, int64_t length) {
    if (dirs.size() != 3 || length < 1) {
        throw std::invalid_argument("a junction needs three directions and a positive arm length");
    }
    JunctionSpec j;
    j.cx = cx;
    j.cy = cy;
    for (size_t i = 0; i < 3; i++) {
        j.arms[i] = std::string((size_t)length, dirs[i]);
    }
    return j;
}

void JunctionSpec::validate(const TorusLattice &lat) const {
    int first[3];
    for (size_t i = 0; i < 3; i++) {
        if (arms[i].empty()) {
            throw std::invalid_argument("junction arms must be nonempty");
        }
        first[i] = direction_index(arms[i][0]);
    }
    int turn1 = (first[1] - first[0] + 4) % 4;
    int turn2 = (first[2] - first[1] + 4) % 4;
    if (turn1 == 0 || turn2 == 0 || turn1 + turn2 >= 4) {
        throw std::invalid_argument("junction arms must leave the center in counter-clockwise order");
    }
    std::set<std::pair<int64_t, int64_t>> visited;
    for (const auto &arm : arms) {
        int64_t x = cx, y = cy;
        for (char m : arm) {
            int d = direction_index(m);
            x += d == 0 ? 1 : d == 2 ? -1 : 0;
            y += d == 1 ? 1 : d == 3 ? -1 : 0;
            auto key = std::make_pair(mod(x, lat.Lx()), mod(y, lat.Ly()));
            if (key == std::make_pair(mod(cx, lat.Lx()), mod(cy, lat.Ly())) || !visited.insert(key).second) {
                throw std::invalid_argument("junction arms must be disjoint away from the center");
            }
        }
    }
}

JunctionSpec default_junction(const TorusLattice &lat, int rotation) {
    int64_t length = (lat.Lx() >= 5 && lat.Ly() >= 5) ? 2 : 1;
    std::string dirs;
    for (int i = 0; i < 3; i++) {
        dirs += kDirections[(i + rotation) % 4];
    }
    return JunctionSpec::straight(lat.Lx() / 2, lat.Ly() / 2, dirs, length);
}

// --------------------------------------------------------------------------
// Statistics
// --------------------------------------------------------------------------

void require_deconfined(const LatticeModel &model, const Label &label) {
    const auto &lat = model.lattice;
    for (const auto &path : {horizontal_loop(lat, 0), vertical_loop(lat, 0), PathSpec::dual(0, 0, "NWSE", true)}) {
        PauliOperator loop = string_operator(model, label, path);
        for (const auto &g : model.group.generators()) {
            if (!commutes(g, loop)) {
                throw std::invalid_argument("label " + label.str() + " is confined in this model");
            }
        }
    }
}

Rational01 t_junction_theta(const LatticeModel &model, const Label &label, const JunctionSpec &junction) {
    junction.validate(model.lattice);
    require_deconfined(model, label);
    PauliOperator w[3];
    for (size_t i = 0; i < 3; i++) {
        w[i] = string_operator(model, label, PathSpec::dual(junction.cx, junction.cy, junction.arms[i]));
    }
    // W1 W2^dagger W3 = theta W3 W2^dagger W1.
    PauliOperator a = w[0], b = adjoint(w[1]), c = w[2];
    return commutation_phase(a, b) + commutation_phase(a, c) + commutation_phase(b, c);
}

Rational01 t_junction_theta(const LatticeModel &model, const Label &label) {
    return t_junction_theta(model, label, default_junction(model.lattice));
}

Rational01 crossing_braiding(const LatticeModel &model, const Label &a, const Label &b) {
    require_deconfined(model, a);
    require_deconfined(model, b);
    PauliOperator va = string_operator(model, a, vertical_loop(model.lattice, 0));
    PauliOperator hb = string_operator(model, b, horizontal_loop(model.lattice, 0));
    return commutation_phase(va, hb);
}

std::vector<std::pair<std::string, Label>> generating_labels(const LatticeModel &model) {
    std::vector<std::pair<std::string, Label>> out;
    auto add = [&](const std::string &name) { out.push_back({name, model.label(name)}); };
    switch (model.type) {
        case ModelType::TC:
            add("e");
            add("m");
            break;
        case ModelType::StackedTC:
            for (size_t i = 1; i <= model.lattice.layers(); i++) {
                add("e" + std::to_string(i));
                add("m" + std::to_string(i));
            }
            break;
        case ModelType::TQD:
        case ModelType::DS:
            for (size_t i = 1; i <= model.params.M(); i++) {
                add("c" + std::to_string(i));
                add("phi" + std::to_string(i));
            }
            break;
        case ModelType::SPT:
            break;
    }
    return out;
}

int64_t fusion_order(const LatticeModel &model, const Label &label) {
    require_deconfined(model, label);
    int64_t bound = 1;
    for (int64_t d : model.lattice.layer_dims()) {
        bound = lcm64(bound, d);
    }
    auto gens = generating_labels(model);
    for (int64_t n = 1; n <= bound; n++) {
        Label power = label_power(label, n);
        if (!t_junction_theta(model, power).is_zero()) {
            continue;
        }
        bool transparent = true;
        for (const auto &[name, g] : gens) {
            if (!crossing_braiding(model, power, g).is_zero()) {
                transparent = false;
                break;
            }
        }
        if (transparent) {
            return n;
        }
    }
    throw std::logic_error("fusion order exceeds the qudit dimension");
}

ExtractedTheory extract_theory(const LatticeModel &model, const std::vector<std::string> &names) {
    ExtractedTheory out;
    out.names = names;
    size_t r = names.size();
    for (const auto &n : names) {
        out.labels.push_back(model.label(n));
    }
    for (size_t i = 0; i < r; i++) {
        out.theta.push_back(t_junction_theta(model, out.labels[i]));
        out.fusion_orders.push_back(fusion_order(model, out.labels[i]));
    }
    out.braiding.assign(r, std::vector<Rational01>(r));
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            out.braiding[i][j] = crossing_braiding(model, out.labels[i], out.labels[j]);
        }
    }
    // Internal consistency: B(a, a') = theta(a a') - theta(a) - theta(a').
    for (size_t i = 0; i < r; i++) {
        for (size_t j = i; j < r; j++) {
            Rational01 joint = t_junction_theta(model, label_product(out.labels[i], out.labels[j]));
            if (!(joint - out.theta[i] - out.theta[j] == out.braiding[i][j])) {
                throw std::logic_error("extracted statistics are inconsistent for " + names[i] + ", " + names[j]);
            }
        }
    }
    // Relations: words that braid trivially with every generator.
    int64_t L = 1;
    for (const auto &row : out.braiding) {
        for (const auto &b : row) {
            L = lcm64(L, b.den());
        }
    }
    IntMatrix stacked(2 * r, r);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < r; j++) {
            stacked.at(i, j) = out.braiding[i][j].num() * (L / out.braiding[i][j].den());
        }
        stacked.at(r + i, i) = L;
    }
    IntMatrix ker = integer_left_kernel(stacked);
    IntMatrix relations(ker.rows(), r);
    for (size_t row = 0; row < ker.rows(); row++) {
        for (size_t j = 0; j < r; j++) {
            relations.at(row, j) = ker.at(row, j);
        }
    }
    out.presentation = theory_from_presentation(relations, out.theta, out.braiding);
    return out;
}

// --------------------------------------------------------------------------
// Logical algebra
// --------------------------------------------------------------------------

LogicalReport logical_algebra(const LatticeModel &model) {
    LogicalReport rep;
    const auto &lat = model.lattice;
    auto loop = [&](const std::string &label, bool horizontal) {
        return string_operator(model, model.label(label), horizontal ? horizontal_loop(lat, 0) : vertical_loop(lat, 0));
    };
    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    switch (model.type) {
        case ModelType::TC:
            pairs.push_back({loop("e", true), loop("m", false)});
            pairs.push_back({loop("e", false), loop("m", true)});
            break;
        case ModelType::StackedTC:
            for (size_t i = 1; i <= lat.layers(); i++) {
                std::string e = "e" + std::to_string(i), m = "m" + std::to_string(i);
                pairs.push_back({loop(e, true), loop(m, false)});
                pairs.push_back({loop(e, false), loop(m, true)});
            }
            break;
        case ModelType::DS:
            pairs.push_back({loop("s", true), loop("s", false)});
            pairs.push_back({loop("sbar", true), loop("sbar", false)});
            break;
        default:
            throw std::invalid_argument("logical_algebra supports toric-code and double-semion models");
    }
    for (size_t i = 0; i < pairs.size(); i++) {
        rep.names.push_back("Z" + std::to_string(i + 1));
        rep.operators.push_back(pairs[i].first);
        rep.names.push_back("X" + std::to_string(i + 1));
        rep.operators.push_back(pairs[i].second);
    }
    size_t n = rep.operators.size();
    rep.commutation.assign(n, std::vector<Rational01>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            rep.commutation[i][j] = commutation_phase(rep.operators[i], rep.operators[j]);
        }
    }
    MembershipOracle oracle(model.group);
    for (const auto &op : rep.operators) {
        for (const auto &g : model.group.generators()) {
            rep.commute_with_stabilizers = rep.commute_with_stabilizers && commutes(g, op);
        }
        rep.membership.push_back(oracle.query(op).verdict);
        PauliOperator power = op;
        int64_t k = 1;
        while (oracle.query(power).verdict == Verdict::NotMember) {
            power = multiply(power, op);
            k++;
            if (k > model.group.system()->D() * 2) {
                throw std::logic_error("logical operator has no finite order modulo the stabilizer group");
            }
        }
        rep.order.push_back(k);
        rep.power_membership.push_back(oracle.query(power).verdict);
    }
    rep.standard_form = true;
    rep.implied_dimension = 1;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            bool partner = (i / 2 == j / 2) && i != j;
            if (partner != !rep.commutation[i][j].is_zero()) {
                rep.standard_form = false;
            }
        }
        if (i % 2 == 0) {
            rep.implied_dimension *= rep.commutation[i][i + 1].den();
        }
    }
    rep.logical_dimension = logical_dimension(model.group);
    return rep;
}

// --------------------------------------------------------------------------
// SPT boundary cocycle
// --------------------------------------------------------------------------

namespace {

PauliOperator restrict_to(const PauliOperator &p, const std::function<bool(size_t)> &keep) {
    PauliOperator out = PauliOperator::identity(p.system());
    for (const auto &[site, e] : p.x()) {
        if (keep(site)) {
            out.set_x(site, e);
        }
    }
    for (const auto &[site, e] : p.z()) {
        if (keep(site)) {
            out.set_z(site, e);
        }
    }
    return out;
}

int64_t cyclic_distance(int64_t a, int64_t b, int64_t L) {
    int64_t d = mod(a - b, L);
    return std::min(d, L - d);
}

}  // namespace

SptCocycle spt_cocycle(const LatticeModel &spt, int64_t ell) {
    if (spt.type != ModelType::SPT) {
        throw std::invalid_argument("spt_cocycle needs the SPT model");
    }
    if (ell < 4) {
        throw std::invalid_argument("interval length must be at least 4");
    }
    const auto &lat = spt.lattice;
    if (lat.Lx() < ell + 6 || lat.Ly() < 7) {
        throw std::invalid_argument("torus too small for the requested interval");
    }
    const SystemPtr &sys = lat.system();
    size_t nsites = sys->dims().size();

    // R: the band of vertex rows 0..H-1 with the edges between its vertices.
    int64_t H = lat.Ly() - 2;
    auto in_region = [&](size_t site) {
        auto info = lat.describe(site);
        if (info.is_vertex || info.orient == Orient::H) {
            return info.y < H;
        }
        return info.y < H - 1;
    };

    // Effective boundary action P(1) = P_R(1) Ptilde_R(1)^dagger.
    PauliOperator p_r = PauliOperator::identity(sys);
    for (int64_t y = 0; y < H; y++) {
        for (int64_t x = 0; x < lat.Lx(); x++) {
            p_r = multiply(p_r, PauliOperator::single(sys, lat.vertex(x, y), PauliKind::X, 1));
        }
    }
    PauliOperator p_tilde = PauliOperator::identity(sys);
    for (const auto &ax : spt.families.at("AX")) {
        bool inside = true;
        for (size_t s : ax.support()) {
            inside = inside && in_region(s);
        }
        if (inside) {
            p_tilde = multiply(p_tilde, ax);
        }
    }
    PauliOperator action = multiply(p_r, adjoint(p_tilde));


    // Stabilizers supported in R: products of generators vanishing outside R.
    const auto &gens = spt.group.generators();
    std::vector<size_t> outside;
    for (size_t s = 0; s < nsites; s++) {
        if (!in_region(s)) {
            outside.push_back(s);
        }
    }
    IntMatrix kmat(2 * outside.size(), gens.size());
    std::vector<int64_t> kmod;
    for (size_t r = 0; r < outside.size(); r++) {
        for (size_t j = 0; j < gens.size(); j++) {
            kmat.at(2 * r, j) = gens[j].x_at(outside[r]);
            kmat.at(2 * r + 1, j) = gens[j].z_at(outside[r]);
        }
        kmod.push_back(sys->dims()[outside[r]]);
        kmod.push_back(sys->dims()[outside[r]]);
    }
    LinearModSolver ksolver(kmat, kmod);
    std::vector<PauliOperator> region_ops;
    for (const auto &c : ksolver.kernel_basis()) {
        PauliOperator prod = product_of_generators(spt.group, c);
        if (!prod.is_identity_up_to_phase()) {
            region_ops.push_back(prod);
        }
    }
    StabilizerGroup region = StabilizerGroup::candidate(sys, region_ops);

    // Sites of R in the upper boundary rows within distance w of an endpoint.
    int64_t xL = 2, xR = 2 + ell;
    auto endpoint_window = [&](int64_t w) {
        return [&, w](size_t s) {
            auto info = lat.describe(s);
            bool upper = in_region(s) && info.y >= H - 1 - w;
            return upper &&
                   (cyclic_distance(info.x, xL, lat.Lx()) <= w || cyclic_distance(info.x, xR, lat.Lx()) <= w);
        };
    };

    // Truncate to the upper boundary of R and the interval [xL, xR], then
    // repair the ends so that the truncated action commutes with every
    // R-supported stabilizer (it must act within the boundary Hilbert space).
    PauliOperator naive = restrict_to(action, [&](size_t s) {
        auto info = lat.describe(s);
        return 2 * info.y >= H && info.x >= xL && info.x <= xR;
    });
    int64_t D = sys->D();
    std::optional<PauliOperator> p_ell_opt;
    for (int64_t w = 1; w <= 3 && !p_ell_opt; w++) {
        auto window = endpoint_window(w);
        std::vector<size_t> vars;
        for (size_t s = 0; s < nsites; s++) {
            if (window(s)) {
                vars.push_back(s);
            }
        }
        // phi(g, naive * E) = 0 for every R-stabilizer generator g.
        IntMatrix a(region_ops.size(), 2 * vars.size());
        std::vector<int64_t> b, moduli;
        for (size_t r = 0; r < region_ops.size(); r++) {
            const auto &g = region_ops[r];
            for (size_t v = 0; v < vars.size(); v++) {
                int64_t scale = D / sys->dims()[vars[v]];
                a.at(r, 2 * v) = g.z_at(vars[v]) * scale;
                a.at(r, 2 * v + 1) = -g.x_at(vars[v]) * scale;
            }
            Rational01 phase = commutation_phase(g, naive);
            b.push_back(mod(-phase.num() * (D / phase.den()), D));
            moduli.push_back(D);
        }
        auto sol = solve_linear_mod(a, b, moduli);
        if (sol) {
            PauliOperator fix = PauliOperator::identity(sys);
            for (size_t v = 0; v < vars.size(); v++) {
                int64_t d = sys->dims()[vars[v]];
                fix.set_x(vars[v], mod((*sol)[2 * v], d));
                fix.set_z(vars[v], mod((*sol)[2 * v + 1], d));
            }
            p_ell_opt = multiply(naive, fix);
        }
    }
    if (!p_ell_opt) {
        throw std::runtime_error("no endpoint repair makes the truncated action commute with R-stabilizers");
    }
    PauliOperator p_ell = *p_ell_opt;

    // P_ell(1)^2 modulo R-supported stabilizers, localized at the endpoints.
    PauliOperator square = multiply(p_ell, p_ell);
    std::optional<PauliOperator> omega;
    int64_t window = 0;
    for (int64_t w = 1; w <= 3 && !omega; w++) {
        auto near_end = endpoint_window(w);
        std::vector<size_t> far;
        for (size_t s = 0; s < nsites; s++) {
            if (!near_end(s)) {
                far.push_back(s);
            }
        }
        IntMatrix a(2 * far.size(), region_ops.size());
        std::vector<int64_t> b, moduli;
        for (size_t r = 0; r < far.size(); r++) {
            for (size_t j = 0; j < region_ops.size(); j++) {
                a.at(2 * r, j) = region_ops[j].x_at(far[r]);
                a.at(2 * r + 1, j) = region_ops[j].z_at(far[r]);
            }
            b.push_back(square.x_at(far[r]));
            b.push_back(square.z_at(far[r]));
            moduli.push_back(sys->dims()[far[r]]);
            moduli.push_back(sys->dims()[far[r]]);
        }
        auto sol = solve_linear_mod(a, b, moduli);
        if (sol) {
            omega = multiply(square, adjoint(product_of_generators(region, *sol)));
            window = w;
        }
    }
    if (!omega) {
        throw std::runtime_error("boundary action squared does not localize at the interval endpoints");
    }
    auto near_left = [&](size_t s) { return cyclic_distance(lat.describe(s).x, xL, lat.Lx()) <= window; };
    auto near_right = [&](size_t s) { return cyclic_distance(lat.describe(s).x, xR, lat.Lx()) <= window; };
    PauliOperator omega_l = restrict_to(*omega, near_left);
    omega_l.set_phase(omega->phase());
    PauliOperator omega_r = restrict_to(*omega, near_right);
    if (!(multiply(omega_l, omega_r) == *omega)) {
        throw std::runtime_error("endpoint operators overlap; the interval is too short");
    }

    SptCocycle out;
    out.boundary_action = p_ell;
    out.omega_full = *omega;
    out.omega_left = omega_l;
    out.omega_right = omega_r;
    out.region_stabilizers = region_ops.size();
    PauliOperator id = PauliOperator::identity(sys);
    auto P = [&](int g) { return g ? p_ell : id; };
    auto OmL = [&](int g, int h) { return (g && h) ? omega_l : id; };
    for (int g = 0; g < 2; g++) {
        for (int h = 0; h < 2; h++) {
            for (int k = 0; k < 2; k++) {
                PauliOperator lhs = multiply(multiply(multiply(P(g), OmL(h, k)), adjoint(P(g))), OmL(g, (h + k) % 2));
                PauliOperator rhs = multiply(OmL(g, h), OmL((g + h) % 2, k));
                MembershipResult m = member_with_phase(region, multiply(lhs, adjoint(rhs)));
                if (m.verdict == Verdict::NotMember) {
                    throw std::runtime_error("associativity defect is not a stabilizer up to phase");
                }
                out.omega[{g, h, k}] = m.residual_phase;
            }
        }
    }
    out.cocycle_condition = true;
    for (int g = 0; g < 2; g++) {
        for (int h = 0; h < 2; h++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    Rational01 d = out.omega[{h, k, l}] - out.omega[{(g + h) % 2, k, l}] +
                                   out.omega[{g, (h + k) % 2, l}] - out.omega[{g, h, (k + l) % 2}] +
                                   out.omega[{g, h, k}];
                    out.cocycle_condition = out.cocycle_condition && d.is_zero();
                }
            }
        }
    }
    return out;
}

SptCocycle spt_cocycle(int64_t ell) {
    return spt_cocycle(build_spt(ell + 6, 7), ell);
}

}  // namespace tqd
