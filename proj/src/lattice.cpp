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

#include "tqd/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tqd {

// --------------------------------------------------------------------------
// TqdParams
// --------------------------------------------------------------------------

namespace {

bool is_prime_power(int64_t n) {
    if (n < 2) {
        return false;
    }
    for (int64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            return n == 1;
        }
    }
    return true;
}

}  // namespace

void TqdParams::validate() const {
    size_t m = N.size();
    if (m == 0) {
        throw std::invalid_argument("TQD parameters need at least one factor N_i");
    }
    if (n.size() != m || nij.size() != m) {
        throw std::invalid_argument("TQD parameters: n and nij must match the length of N");
    }
    for (size_t i = 0; i < m; i++) {
        if (!is_prime_power(N[i])) {
            throw std::invalid_argument("TQD parameters: N_i must be a prime power, got " + std::to_string(N[i]));
        }
        if (i > 0 && N[i] < N[i - 1]) {
            throw std::invalid_argument("TQD parameters: factors must be ordered N_1 <= N_2 <= ...");
        }
        if (n[i] < 0 || n[i] >= N[i]) {
            throw std::invalid_argument("TQD parameters: n_i must lie in Z_{N_i}");
        }
        if (nij[i].size() != m) {
            throw std::invalid_argument("TQD parameters: nij must be square");
        }
        if (nij[i][i] != mod(2 * n[i], N[i])) {
            throw std::invalid_argument("TQD parameters: n_ii must equal 2 n_i mod N_i");
        }
        for (size_t j = 0; j < m; j++) {
            if (i == j) {
                continue;
            }
            if (nij[i][j] != nij[j][i]) {
                throw std::invalid_argument("TQD parameters: nij must be symmetric");
            }
            int64_t g = std::gcd(N[i], N[j]);
            if (nij[i][j] < 0 || nij[i][j] >= g) {
                throw std::invalid_argument("TQD parameters: n_ij must lie in Z_gcd(N_i,N_j)");
            }
        }
    }
}

TqdParams TqdParams::make(std::vector<int64_t> N, std::vector<int64_t> n,
                          const std::vector<std::tuple<size_t, size_t, int64_t>> &off_diagonal) {
    TqdParams p;
    p.N = std::move(N);
    p.n = std::move(n);
    size_t m = p.N.size();
    if (p.n.empty()) {
        p.n.assign(m, 0);
    }
    if (p.n.size() != m) {
        throw std::invalid_argument("TQD parameters: n and N must have equal length");
    }
    p.nij.assign(m, std::vector<int64_t>(m, 0));
    for (size_t i = 0; i < m; i++) {
        p.nij[i][i] = mod(2 * p.n[i], p.N[i]);
    }
    for (const auto &[i, j, v] : off_diagonal) {
        if (i >= m || j >= m || i == j) {
            throw std::invalid_argument("TQD parameters: bad n_ij index");
        }
        p.nij[i][j] = v;
        p.nij[j][i] = v;
    }
    p.validate();
    return p;
}

std::string TqdParams::str() const {
    std::stringstream out;
    out << "N=[";
    for (size_t i = 0; i < N.size(); i++) {
        out << (i ? "," : "") << N[i];
    }
    out << "] n=[";
    for (size_t i = 0; i < n.size(); i++) {
        out << (i ? "," : "") << n[i];
    }
    out << "]";
    for (size_t i = 0; i < N.size(); i++) {
        for (size_t j = i + 1; j < N.size(); j++) {
            if (nij[i][j]) {
                out << " n" << i + 1 << j + 1 << "=" << nij[i][j];
            }
        }
    }
    return out.str();
}

// --------------------------------------------------------------------------
// TorusLattice
// --------------------------------------------------------------------------

TorusLattice::TorusLattice(int64_t Lx, int64_t Ly, std::vector<int64_t> layer_dims, int64_t vertex_dim)
    : Lx_(Lx), Ly_(Ly), layer_dims_(std::move(layer_dims)), vertex_dim_(vertex_dim) {
    if (Lx < 2 || Ly < 2) {
        throw std::invalid_argument("torus dimensions must be at least 2");
    }
    std::vector<int64_t> dims;
    for (int64_t d : layer_dims_) {
        dims.insert(dims.end(), 2 * cells(), d);
    }
    if (vertex_dim_ > 0) {
        dims.insert(dims.end(), cells(), vertex_dim_);
    }
    system_ = make_system(dims);
}

size_t TorusLattice::edge(int64_t x, int64_t y, Orient o, size_t layer) const {
    if (layer >= layer_dims_.size()) {
        throw std::out_of_range("edge layer out of range");
    }
    x = mod(x, Lx_);
    y = mod(y, Ly_);
    return layer * 2 * cells() + 2 * (size_t)(y * Lx_ + x) + (size_t)o;
}

size_t TorusLattice::vertex(int64_t x, int64_t y) const {
    if (vertex_dim_ <= 0) {
        throw std::logic_error("lattice has no vertex layer");
    }
    x = mod(x, Lx_);
    y = mod(y, Ly_);
    return layer_dims_.size() * 2 * cells() + (size_t)(y * Lx_ + x);
}

TorusLattice::SiteInfo TorusLattice::describe(size_t site) const {
    size_t edges = layer_dims_.size() * 2 * cells();
    if (site < edges) {
        size_t layer = site / (2 * cells());
        size_t rem = site % (2 * cells());
        size_t cell = rem / 2;
        return {false, (int64_t)(cell % Lx_), (int64_t)(cell / Lx_), (Orient)(rem % 2), layer};
    }
    size_t cell = site - edges;
    if (cell >= cells() || vertex_dim_ <= 0) {
        throw std::out_of_range("site index out of range");
    }
    return {true, (int64_t)(cell % Lx_), (int64_t)(cell / Lx_), Orient::H, 0};
}

std::string TorusLattice::site_name(size_t site) const {
    auto info = describe(site);
    std::stringstream out;
    if (info.is_vertex) {
        out << "vertex(" << info.x << "," << info.y << ")";
    } else {
        out << (info.orient == Orient::H ? "h(" : "v(") << info.x << "," << info.y << ")";
        if (layer_dims_.size() > 1) {
            out << "@" << info.layer + 1;
        }
    }
    return out.str();
}

PauliOperator TorusLattice::translate(const PauliOperator &p, int64_t dx, int64_t dy) const {
    PauliOperator out(p.system());
    out.set_phase(p.phase());
    auto shift = [&](size_t site) {
        auto info = describe(site);
        if (info.is_vertex) {
            return vertex(info.x + dx, info.y + dy);
        }
        return edge(info.x + dx, info.y + dy, info.orient, info.layer);
    };
    for (const auto &[site, e] : p.x()) {
        out.set_x(shift(site), e);
    }
    for (const auto &[site, e] : p.z()) {
        out.set_z(shift(site), e);
    }
    return out;
}

// --------------------------------------------------------------------------
// Labels and paths
// --------------------------------------------------------------------------

bool Label::is_trivial(const std::vector<int64_t> &dims) const {
    for (size_t i = 0; i < dims.size(); i++) {
        if (mod(p[i], dims[i]) || mod(q[i], dims[i])) {
            return false;
        }
    }
    return true;
}

std::string Label::str() const {
    std::stringstream out;
    bool wrote = false;
    for (size_t i = 0; i < p.size(); i++) {
        std::string suffix = p.size() > 1 ? std::to_string(i + 1) : "";
        if (p[i]) {
            out << (wrote ? " " : "") << "e" << suffix << "^" << p[i];
            wrote = true;
        }
        if (q[i]) {
            out << (wrote ? " " : "") << "m" << suffix << "^" << q[i];
            wrote = true;
        }
    }
    return wrote ? out.str() : "1";
}

Label label_product(const Label &a, const Label &b) {
    Label out = a;
    for (size_t i = 0; i < a.p.size(); i++) {
        out.p[i] += b.p[i];
        out.q[i] += b.q[i];
    }
    return out;
}

Label label_power(const Label &a, int64_t k) {
    Label out = a;
    for (size_t i = 0; i < a.p.size(); i++) {
        out.p[i] *= k;
        out.q[i] *= k;
    }
    return out;
}

PathSpec PathSpec::dual(int64_t x, int64_t y, std::string moves, bool closed) {
    return PathSpec{Kind::Dual, x, y, std::move(moves), closed};
}

PathSpec PathSpec::direct(int64_t x, int64_t y, std::string moves, bool closed) {
    return PathSpec{Kind::Direct, x, y, std::move(moves), closed};
}

namespace {

void step_delta(char m, int64_t &dx, int64_t &dy) {
    dx = dy = 0;
    switch (m) {
        case 'E':
            dx = 1;
            break;
        case 'W':
            dx = -1;
            break;
        case 'N':
            dy = 1;
            break;
        case 'S':
            dy = -1;
            break;
        default:
            throw std::invalid_argument(std::string("unknown path move '") + m + "'");
    }
}

void check_closure(const TorusLattice &lat, const PathSpec &path) {
    int64_t x = path.x0, y = path.y0;
    for (char m : path.moves) {
        int64_t dx, dy;
        step_delta(m, dx, dy);
        x += dx;
        y += dy;
    }
    bool returns = mod(x - path.x0, lat.Lx()) == 0 && mod(y - path.y0, lat.Ly()) == 0;
    if (path.closed && !returns) {
        throw std::invalid_argument("path marked closed does not return to its start");
    }
}

}  // namespace

std::vector<std::pair<size_t, int>> path_steps(const TorusLattice &lat, const PathSpec &path, size_t layer) {
    check_closure(lat, path);
    std::vector<std::pair<size_t, int>> out;
    int64_t x = path.x0, y = path.y0;
    for (char m : path.moves) {
        int64_t dx, dy;
        step_delta(m, dx, dy);
        if (path.kind == PathSpec::Kind::Dual) {
            switch (m) {
                case 'E':
                    out.push_back({lat.edge(x + 1, y, Orient::V, layer), +1});
                    break;
                case 'N':
                    out.push_back({lat.edge(x, y + 1, Orient::H, layer), +1});
                    break;
                case 'W':
                    out.push_back({lat.edge(x, y, Orient::V, layer), -1});
                    break;
                case 'S':
                    out.push_back({lat.edge(x, y, Orient::H, layer), -1});
                    break;
            }
        } else {
            switch (m) {
                case 'E':
                    out.push_back({lat.edge(x, y, Orient::H, layer), +1});
                    break;
                case 'N':
                    out.push_back({lat.edge(x, y, Orient::V, layer), +1});
                    break;
                case 'W':
                    out.push_back({lat.edge(x - 1, y, Orient::H, layer), -1});
                    break;
                case 'S':
                    out.push_back({lat.edge(x, y - 1, Orient::V, layer), -1});
                    break;
            }
        }
        x += dx;
        y += dy;
    }
    return out;
}

PauliOperator string_operator(const TorusLattice &lat, const Label &label, const PathSpec &path) {
    const SystemPtr &sys = lat.system();
    size_t layers = lat.layers();
    if (label.p.size() != layers || label.q.size() != layers) {
        throw std::invalid_argument("label does not match the lattice layer count");
    }
    check_closure(lat, path);
    if (path.kind == PathSpec::Kind::Direct) {
        for (size_t i = 0; i < layers; i++) {
            if (mod(label.q[i], lat.layer_dims()[i]) != 0) {
                throw std::invalid_argument("direct-lattice paths only carry pure charges; use a dual path");
            }
        }
    }
    auto X = [&](size_t s, int64_t e) { return PauliOperator::single(sys, s, PauliKind::X, e); };
    auto Z = [&](size_t s, int64_t e) { return PauliOperator::single(sys, s, PauliKind::Z, e); };
    PauliOperator out = PauliOperator::identity(sys);
    int64_t x = path.x0, y = path.y0;
    for (char m : path.moves) {
        int64_t dx, dy;
        step_delta(m, dx, dy);
        // One short segment: flux part on the crossed edge, charge part on the
        // edge joining the north-east corners of the two plaquettes.
        PauliOperator segment = PauliOperator::identity(sys);
        for (size_t i = 0; i < layers; i++) {
            int64_t p = label.p[i], q = label.q[i];
            if (path.kind == PathSpec::Kind::Dual) {
                switch (m) {
                    case 'E':
                        segment = multiply(segment, X(lat.edge(x + 1, y, Orient::V, i), q));
                        segment = multiply(segment, Z(lat.edge(x + 1, y + 1, Orient::H, i), p));
                        break;
                    case 'N':
                        segment = multiply(segment, X(lat.edge(x, y + 1, Orient::H, i), -q));
                        segment = multiply(segment, Z(lat.edge(x + 1, y + 1, Orient::V, i), p));
                        break;
                    case 'W':
                        segment = multiply(segment, X(lat.edge(x, y, Orient::V, i), -q));
                        segment = multiply(segment, Z(lat.edge(x, y + 1, Orient::H, i), -p));
                        break;
                    case 'S':
                        segment = multiply(segment, X(lat.edge(x, y, Orient::H, i), q));
                        segment = multiply(segment, Z(lat.edge(x + 1, y, Orient::V, i), -p));
                        break;
                }
            } else {
                switch (m) {
                    case 'E':
                        segment = multiply(segment, Z(lat.edge(x, y, Orient::H, i), p));
                        break;
                    case 'N':
                        segment = multiply(segment, Z(lat.edge(x, y, Orient::V, i), p));
                        break;
                    case 'W':
                        segment = multiply(segment, Z(lat.edge(x - 1, y, Orient::H, i), -p));
                        break;
                    case 'S':
                        segment = multiply(segment, Z(lat.edge(x, y - 1, Orient::V, i), -p));
                        break;
                }
            }
        }
        out = multiply(out, segment);
        x += dx;
        y += dy;
    }
    return out;
}

PauliOperator string_operator(const LatticeModel &model, const Label &label, const PathSpec &path) {
    return string_operator(model.lattice, label, path);
}

PathSpec horizontal_loop(const TorusLattice &lat, int64_t y0, int64_t x0) {
    return PathSpec::dual(x0, y0, std::string((size_t)lat.Lx(), 'E'), true);
}

PathSpec vertical_loop(const TorusLattice &lat, int64_t x0, int64_t y0) {
    return PathSpec::dual(x0, y0, std::string((size_t)lat.Ly(), 'N'), true);
}

// --------------------------------------------------------------------------
// Model builders
// --------------------------------------------------------------------------

namespace {

PauliOperator single(const TorusLattice &lat, size_t site, PauliKind kind, int64_t e) {
    return PauliOperator::single(lat.system(), site, kind, e);
}

// Toric-code vertex term to the given power: X on edges leaving v, X^dagger
// on edges entering v.
PauliOperator vertex_tc(const TorusLattice &lat, int64_t a, int64_t b, size_t layer, int64_t power) {
    PauliOperator out = PauliOperator::identity(lat.system());
    out = multiply(out, single(lat, lat.edge(a, b, Orient::H, layer), PauliKind::X, power));
    out = multiply(out, single(lat, lat.edge(a, b, Orient::V, layer), PauliKind::X, power));
    out = multiply(out, single(lat, lat.edge(a - 1, b, Orient::H, layer), PauliKind::X, -power));
    out = multiply(out, single(lat, lat.edge(a, b - 1, Orient::V, layer), PauliKind::X, -power));
    return out;
}

// Toric-code plaquette term to the given power: Z on the bottom and right
// edges, Z^dagger on the top and left edges (counter-clockwise circulation).
PauliOperator plaquette_tc(const TorusLattice &lat, int64_t x, int64_t y, size_t layer, int64_t power) {
    PauliOperator out = PauliOperator::identity(lat.system());
    out = multiply(out, single(lat, lat.edge(x, y, Orient::H, layer), PauliKind::Z, power));
    out = multiply(out, single(lat, lat.edge(x + 1, y, Orient::V, layer), PauliKind::Z, power));
    out = multiply(out, single(lat, lat.edge(x, y + 1, Orient::H, layer), PauliKind::Z, -power));
    out = multiply(out, single(lat, lat.edge(x, y, Orient::V, layer), PauliKind::Z, -power));
    return out;
}

void add(LatticeModel &model, std::vector<PauliOperator> &gens, const std::string &family, PauliOperator op) {
    model.families[family].push_back(op);
    model.generator_family.push_back(family);
    gens.push_back(std::move(op));
}

// Exponent of Z_j inside the charge part of C_{e,i}: N_i n_i on layer i and
// N_j n_ij on lower layers j < i.
int64_t hat_exponent(const TqdParams &params, size_t i, size_t j) {
    if (j == i) {
        return params.N[i] * params.n[i];
    }
    if (j < i) {
        return params.N[j] * params.nij[i][j];
    }
    return 0;
}

// Exponent of Z_j inside the loop attached to A_{v,i}: n_i on layer i and
// (N_j / N_i) n_ij on higher layers j > i.
int64_t tilde_exponent(const TqdParams &params, size_t i, size_t j) {
    if (j == i) {
        return params.n[i];
    }
    if (j > i && params.nij[i][j] != 0) {
        if (params.N[j] % params.N[i] != 0) {
            throw std::logic_error("n_ij nonzero for coprime factors");
        }
        return (params.N[j] / params.N[i]) * params.nij[i][j];
    }
    return 0;
}

LatticeModel empty_model(ModelType type, TorusLattice lat, TqdParams params) {
    return LatticeModel{type, std::move(lat), std::move(params), StabilizerGroup(), {}, {}, {}};
}

std::vector<int64_t> squared(const std::vector<int64_t> &N) {
    std::vector<int64_t> out;
    for (int64_t n : N) {
        out.push_back(n * n);
    }
    return out;
}

void add_tqd_terms(LatticeModel &model, std::vector<PauliOperator> &gens, bool with_vertex_x) {
    const TorusLattice &lat = model.lattice;
    const TqdParams &params = model.params;
    size_t M = params.M();
    for (size_t i = 0; i < M; i++) {
        for (int64_t b = 0; b < lat.Ly(); b++) {
            for (int64_t a = 0; a < lat.Lx(); a++) {
                PauliOperator av = vertex_tc(lat, a, b, i, -1);
                for (size_t j = i; j < M; j++) {
                    int64_t e = tilde_exponent(params, i, j);
                    if (e) {
                        av = multiply(av, plaquette_tc(lat, a, b, j, e));
                    }
                }
                if (with_vertex_x) {
                    av = multiply(av, single(lat, lat.vertex(a, b), PauliKind::X, 1));
                    add(model, gens, "AX", av);
                } else {
                    add(model, gens, "A", av);
                }
            }
        }
    }
    if (!with_vertex_x) {
        for (size_t i = 0; i < M; i++) {
            for (int64_t y = 0; y < lat.Ly(); y++) {
                for (int64_t x = 0; x < lat.Lx(); x++) {
                    add(model, gens, "B", plaquette_tc(lat, x, y, i, params.N[i]));
                }
            }
        }
    }
    for (auto &c : tqd_edge_terms(lat, params)) {
        add(model, gens, "C", c);
    }
}

}  // namespace

std::vector<PauliOperator> tqd_edge_terms(const TorusLattice &lat, const TqdParams &params) {
    std::vector<PauliOperator> out;
    size_t M = params.M();
    for (size_t i = 0; i < M; i++) {
        for (int64_t y = 0; y < lat.Ly(); y++) {
            for (int64_t x = 0; x < lat.Lx(); x++) {
                for (Orient o : {Orient::H, Orient::V}) {
                    PauliOperator c = PauliOperator::identity(lat.system());
                    for (size_t j = 0; j <= i; j++) {
                        c = multiply(c, single(lat, lat.edge(x, y, o, j), PauliKind::Z, hat_exponent(params, i, j)));
                    }
                    if (o == Orient::H) {
                        c = multiply(c, single(lat, lat.edge(x + 1, y, Orient::V, i), PauliKind::X, -params.N[i]));
                    } else {
                        c = multiply(c, single(lat, lat.edge(x, y + 1, Orient::H, i), PauliKind::X, params.N[i]));
                    }
                    out.push_back(c);
                }
            }
        }
    }
    return out;
}

std::vector<PauliOperator> spt_gauss_terms(const TorusLattice &lat) {
    std::vector<PauliOperator> out;
    for (int64_t y = 0; y < lat.Ly(); y++) {
        for (int64_t x = 0; x < lat.Lx(); x++) {
            for (Orient o : {Orient::H, Orient::V}) {
                PauliOperator d = single(lat, lat.edge(x, y, o, 0), PauliKind::Z, 2);
                d = multiply(d, single(lat, lat.vertex(x, y), PauliKind::Z, 1));
                if (o == Orient::H) {
                    d = multiply(d, single(lat, lat.vertex(x + 1, y), PauliKind::Z, 1));
                } else {
                    d = multiply(d, single(lat, lat.vertex(x, y + 1), PauliKind::Z, 1));
                }
                out.push_back(d);
            }
        }
    }
    return out;
}

const char *model_type_name(ModelType t) {
    switch (t) {
        case ModelType::TC:
            return "tc";
        case ModelType::DS:
            return "ds";
        case ModelType::TQD:
            return "tqd";
        case ModelType::SPT:
            return "spt";
        case ModelType::StackedTC:
            return "stacked_tc";
    }
    return "?";
}

LatticeModel build_zn_tc(int64_t N, int64_t Lx, int64_t Ly) {
    if (N < 1) {
        throw std::invalid_argument("toric code needs N >= 1");
    }
    TqdParams params{{N}, {0}, {{0}}};
    LatticeModel model = empty_model(ModelType::TC, TorusLattice(Lx, Ly, {N}), params);
    std::vector<PauliOperator> gens;
    const TorusLattice &lat = model.lattice;
    for (int64_t b = 0; b < Ly; b++) {
        for (int64_t a = 0; a < Lx; a++) {
            add(model, gens, "A", vertex_tc(lat, a, b, 0, 1));
        }
    }
    for (int64_t y = 0; y < Ly; y++) {
        for (int64_t x = 0; x < Lx; x++) {
            add(model, gens, "B", plaquette_tc(lat, x, y, 0, 1));
        }
    }
    model.group = StabilizerGroup(lat.system(), gens);
    model.named_labels["e"] = Label{{1}, {0}};
    model.named_labels["m"] = Label{{0}, {1}};
    return model;
}

LatticeModel build_stacked_tc(const std::vector<int64_t> &N, int64_t Lx, int64_t Ly, int64_t vertex_dim) {
    TqdParams params = TqdParams::make(N, std::vector<int64_t>(N.size(), 0));
    LatticeModel model = empty_model(ModelType::StackedTC, TorusLattice(Lx, Ly, squared(N), vertex_dim), params);
    std::vector<PauliOperator> gens;
    const TorusLattice &lat = model.lattice;
    for (size_t i = 0; i < N.size(); i++) {
        for (int64_t b = 0; b < Ly; b++) {
            for (int64_t a = 0; a < Lx; a++) {
                add(model, gens, "A", vertex_tc(lat, a, b, i, 1));
            }
        }
        for (int64_t y = 0; y < Ly; y++) {
            for (int64_t x = 0; x < Lx; x++) {
                add(model, gens, "B", plaquette_tc(lat, x, y, i, 1));
            }
        }
    }
    model.group = StabilizerGroup(lat.system(), gens);
    for (size_t i = 0; i < N.size(); i++) {
        Label e{std::vector<int64_t>(N.size(), 0), std::vector<int64_t>(N.size(), 0)};
        Label m = e;
        e.p[i] = 1;
        m.q[i] = 1;
        model.named_labels["e" + std::to_string(i + 1)] = e;
        model.named_labels["m" + std::to_string(i + 1)] = m;
    }
    return model;
}

namespace {

void add_tqd_labels(LatticeModel &model) {
    const TqdParams &params = model.params;
    size_t M = params.M();
    for (size_t i = 0; i < M; i++) {
        Label c{std::vector<int64_t>(M, 0), std::vector<int64_t>(M, 0)};
        c.p[i] = params.N[i];
        model.named_labels["c" + std::to_string(i + 1)] = c;
        Label phi{std::vector<int64_t>(M, 0), std::vector<int64_t>(M, 0)};
        phi.q[i] = 1;
        for (size_t j = i; j < M; j++) {
            phi.p[j] = tilde_exponent(params, i, j);
        }
        model.named_labels["phi" + std::to_string(i + 1)] = phi;
    }
}

}  // namespace

LatticeModel build_tqd(const TqdParams &params, int64_t Lx, int64_t Ly) {
    params.validate();
    LatticeModel model = empty_model(ModelType::TQD, TorusLattice(Lx, Ly, squared(params.N)), params);
    std::vector<PauliOperator> gens;
    add_tqd_terms(model, gens, false);
    model.group = StabilizerGroup(model.lattice.system(), gens);
    add_tqd_labels(model);
    return model;
}

LatticeModel build_ds(int64_t Lx, int64_t Ly) {
    LatticeModel model = build_tqd(TqdParams::make({2}, {1}), Lx, Ly);
    model.type = ModelType::DS;
    model.named_labels["s"] = Label{{1}, {1}};
    model.named_labels["sbar"] = Label{{1}, {3}};
    model.named_labels["ssbar"] = Label{{2}, {0}};
    return model;
}

LatticeModel build_ds_with_vertex_qubits(int64_t Lx, int64_t Ly) {
    TqdParams params = TqdParams::make({2}, {1});
    LatticeModel model = empty_model(ModelType::DS, TorusLattice(Lx, Ly, {4}, 2), params);
    std::vector<PauliOperator> gens;
    add_tqd_terms(model, gens, false);
    for (int64_t y = 0; y < Ly; y++) {
        for (int64_t x = 0; x < Lx; x++) {
            add(model, gens, "X", single(model.lattice, model.lattice.vertex(x, y), PauliKind::X, 1));
        }
    }
    model.group = StabilizerGroup(model.lattice.system(), gens);
    return model;
}

LatticeModel build_spt(int64_t Lx, int64_t Ly) {
    TqdParams params = TqdParams::make({2}, {1});
    LatticeModel model = empty_model(ModelType::SPT, TorusLattice(Lx, Ly, {4}, 2), params);
    std::vector<PauliOperator> gens;
    add_tqd_terms(model, gens, true);
    for (auto &d : spt_gauss_terms(model.lattice)) {
        add(model, gens, "D", d);
    }
    model.group = StabilizerGroup(model.lattice.system(), gens);
    return model;
}

// --------------------------------------------------------------------------
// Label resolution
// --------------------------------------------------------------------------

Label LatticeModel::label(const std::string &name) const {
    size_t M = lattice.layers();
    Label out{std::vector<int64_t>(M, 0), std::vector<int64_t>(M, 0)};
    std::stringstream ss(name);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        factor.erase(0, factor.find_first_not_of(' '));
        factor.erase(factor.find_last_not_of(' ') + 1);
        if (factor.empty() || factor == "1") {
            continue;
        }
        int64_t k = 1;
        auto caret = factor.find('^');
        std::string base = factor.substr(0, caret);
        if (caret != std::string::npos) {
            k = std::stoll(factor.substr(caret + 1));
        }
        auto it = named_labels.find(base);
        if (it == named_labels.end()) {
            throw std::invalid_argument("unknown anyon label '" + base + "' for this model");
        }
        out = label_product(out, label_power(it->second, k));
    }
    for (size_t i = 0; i < M; i++) {
        out.p[i] = mod(out.p[i], lattice.layer_dims()[i]);
        out.q[i] = mod(out.q[i], lattice.layer_dims()[i]);
    }
    return out;
}

bool LatticeModel::deconfined(const Label &a) const {
    if (type == ModelType::TC || type == ModelType::StackedTC) {
        return true;
    }
    if (type == ModelType::SPT) {
        return a.is_trivial(lattice.layer_dims());
    }
    // Zero braiding with every condensed boson b_i = m_i^{-N_i} e_i^{N_i n_i} prod_{j<i} e_j^{N_j n_ij}.
    size_t M = params.M();
    for (size_t i = 0; i < M; i++) {
        Rational01 acc;
        for (size_t j = 0; j <= i; j++) {
            int64_t d = params.N[j] * params.N[j];
            int64_t bp = hat_exponent(params, i, j);
            int64_t bq = j == i ? -params.N[i] : 0;
            acc = acc + Rational01(a.p[j] * bq + a.q[j] * bp, d);
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace tqd
