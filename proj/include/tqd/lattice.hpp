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

#pragma once

#include <map>
#include <tuple>
#include <string>
#include <vector>

#include "tqd/pauli.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd {

// Abelian TQD data: G = prod_i Z_{N_i} with cocycle integers {n_i, n_ij}.
struct TqdParams {
    std::vector<int64_t> N;
    std::vector<int64_t> n;
    std::vector<std::vector<int64_t>> nij;  // symmetric, nij[i][i] = 2 n_i mod N_i

    size_t M() const {
        return N.size();
    }
    // Fills the diagonal of nij and checks ranges, ordering and symmetry.
    void validate() const;
    static TqdParams make(std::vector<int64_t> N, std::vector<int64_t> n,
                          const std::vector<std::tuple<size_t, size_t, int64_t>> &off_diagonal = {});
    std::string str() const;
};

enum class Orient { H = 0, V = 1 };

// Lx x Ly periodic square lattice.  Edge h(x,y) joins (x,y)->(x+1,y) and
// v(x,y) joins (x,y)->(x,y+1); plaquette p(x,y) has corners (x,y), (x+1,y),
// (x+1,y+1), (x,y+1).  Every layer places one qudit on each edge; an
// optional extra layer places one qudit on each vertex.
class TorusLattice {
   public:
    TorusLattice(int64_t Lx, int64_t Ly, std::vector<int64_t> layer_dims, int64_t vertex_dim = 0);

    int64_t Lx() const {
        return Lx_;
    }
    int64_t Ly() const {
        return Ly_;
    }
    size_t layers() const {
        return layer_dims_.size();
    }
    const std::vector<int64_t> &layer_dims() const {
        return layer_dims_;
    }
    bool has_vertex_layer() const {
        return vertex_dim_ > 0;
    }
    const SystemPtr &system() const {
        return system_;
    }
    size_t cells() const {
        return (size_t)(Lx_ * Ly_);
    }

    size_t edge(int64_t x, int64_t y, Orient o, size_t layer = 0) const;
    size_t vertex(int64_t x, int64_t y) const;

    struct SiteInfo {
        bool is_vertex;
        int64_t x, y;
        Orient orient;
        size_t layer;
    };
    SiteInfo describe(size_t site) const;
    std::string site_name(size_t site) const;

    // Shifts every site of p by (dx, dy) unit cells.
    PauliOperator translate(const PauliOperator &p, int64_t dx, int64_t dy) const;

   private:
    int64_t Lx_, Ly_;
    std::vector<int64_t> layer_dims_;
    int64_t vertex_dim_;
    SystemPtr system_;
};

// An anyon of the layered Z_{d_i} toric codes: prod_i e_i^{p_i} m_i^{q_i}.
struct Label {
    std::vector<int64_t> p;
    std::vector<int64_t> q;
    bool operator==(const Label &other) const = default;
    bool operator<(const Label &other) const {
        return std::tie(p, q) < std::tie(other.p, other.q);
    }
    bool is_trivial(const std::vector<int64_t> &dims) const;
    std::string str() const;
};
Label label_product(const Label &a, const Label &b);
Label label_power(const Label &a, int64_t k);

// A path through plaquettes (dual) or vertices (direct), given as a start
// cell and unit moves 'E', 'N', 'W', 'S'.
struct PathSpec {
    enum class Kind { Direct, Dual };
    Kind kind = Kind::Dual;
    int64_t x0 = 0, y0 = 0;
    std::string moves;
    bool closed = false;

    static PathSpec dual(int64_t x, int64_t y, std::string moves, bool closed = false);
    static PathSpec direct(int64_t x, int64_t y, std::string moves, bool closed = false);
};

// (edge site, orientation sign) for each step: the crossed edge for dual
// paths, the traversed edge for direct paths; sign +1 when the step moves
// with the edge orientation (direct) or with the dual orientation (dual).
std::vector<std::pair<size_t, int>> path_steps(const TorusLattice &lat, const PathSpec &path, size_t layer = 0);

enum class ModelType { TC, DS, TQD, SPT, StackedTC };
const char *model_type_name(ModelType t);

struct LatticeModel {
    ModelType type;
    TorusLattice lattice;
    TqdParams params;  // layer data (N_i; all-zero cocycle for TC / stacked TC)
    StabilizerGroup group;
    std::map<std::string, std::vector<PauliOperator>> families;  // "A", "B", "C", "D", "AX", "X"
    std::vector<std::string> generator_family;                  // parallel to group.generators()
    std::map<std::string, Label> named_labels;

    std::vector<int64_t> layer_dims() const {
        return lattice.layer_dims();
    }
    // Resolves "s", "sbar", "ssbar", "e", "m", "c1", "phi2", products "a*b",
    // and powers "a^k".
    Label label(const std::string &name) const;
    // Abstract deconfinement test: zero braiding with every condensed boson.
    bool deconfined(const Label &a) const;
};

// Z_N toric code with A_v = X on outgoing, X^dagger on incoming edges and
// B_p = Z on bottom/right, Z^dagger on top/left.
LatticeModel build_zn_tc(int64_t N, int64_t Lx, int64_t Ly);
// Decoupled Z_{N_i^2} toric codes (the pre-condensation stack).
LatticeModel build_stacked_tc(const std::vector<int64_t> &N, int64_t Lx, int64_t Ly, int64_t vertex_dim = 0);
LatticeModel build_tqd(const TqdParams &params, int64_t Lx, int64_t Ly);
LatticeModel build_ds(int64_t Lx, int64_t Ly);
// DS plus a vertex qubit layer stabilized by X_v (the pre-gauging model).
LatticeModel build_ds_with_vertex_qubits(int64_t Lx, int64_t Ly);
LatticeModel build_spt(int64_t Lx, int64_t Ly);

// The short edge terms C_{e,i} of a TQD model realised on an arbitrary
// lattice with matching layers (used to condense the stacked toric codes).
std::vector<PauliOperator> tqd_edge_terms(const TorusLattice &lat, const TqdParams &params);
// The D_e terms of the SPT construction on a lattice with a vertex qubit layer.
std::vector<PauliOperator> spt_gauss_terms(const TorusLattice &lat);

// Ordered product of short string segments along a path.
PauliOperator string_operator(const LatticeModel &model, const Label &label, const PathSpec &path);
PauliOperator string_operator(const TorusLattice &lat, const Label &label, const PathSpec &path);

// Non-contractible dual loops (x- and y-direction) through cell (x0, y0).
PathSpec horizontal_loop(const TorusLattice &lat, int64_t y0, int64_t x0 = 0);
PathSpec vertical_loop(const TorusLattice &lat, int64_t x0, int64_t y0 = 0);

}  // namespace tqd
