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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "tqd/pauli.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd {

// ---------------------------------------------------------------------------
// Branched triangular lattice on an Lx x Ly torus.
//
// Vertices sit at (x, y).  Each unit cell carries three edges, all oriented
// towards increasing coordinates: h(x,y): (x,y)->(x+1,y), v(x,y):
// (x,y)->(x,y+1) and the diagonal d(x,y): (x,y)->(x+1,y+1).  The diagonal
// splits the square into a lower face (x,y),(x+1,y),(x+1,y+1) and an upper
// face (x,y),(x,y+1),(x+1,y+1).  Drawn with the diagonal horizontal, the
// upper faces point upwards.  In both faces the diagonal is the edge <13>.
// ---------------------------------------------------------------------------

enum class TriEdge { H = 0, V = 1, D = 2 };

class BranchedTriangularLattice {
   public:
    BranchedTriangularLattice(int64_t Lx, int64_t Ly);  // needs Lx, Ly >= 3

    int64_t Lx() const {
        return Lx_;
    }
    int64_t Ly() const {
        return Ly_;
    }
    size_t num_vertices() const {
        return size_t(Lx_ * Ly_);
    }
    size_t num_edges() const {
        return 3 * num_vertices();
    }
    size_t num_faces() const {
        return 2 * num_vertices();
    }

    size_t vertex(int64_t x, int64_t y) const;
    size_t edge(int64_t x, int64_t y, TriEdge o) const;
    size_t face(int64_t x, int64_t y, bool up) const;
    bool face_is_up(size_t f) const {
        return f % 2 == 1;
    }

    // (tail, head) following the branching orientation.
    std::array<size_t, 2> edge_vertices(size_t e) const;
    // Vertices <1>, <2>, <3> of a face in branching order.
    std::array<size_t, 3> face_vertices(size_t f) const;
    // Edges <12>, <13>, <23> of a face.
    std::array<size_t, 3> face_edges(size_t f) const;
    // The two faces adjacent to an edge.
    std::array<size_t, 2> edge_faces(size_t e) const;

   private:
    int64_t wrap_x(int64_t x) const;
    int64_t wrap_y(int64_t y) const;
    int64_t Lx_, Ly_;
};

// Simplicial cochain with coefficients in Z_modulus.
struct Cochain {
    int degree = 0;
    int64_t modulus = 2;
    std::vector<int64_t> values;

    bool operator==(const Cochain &other) const {
        return degree == other.degree && modulus == other.modulus && values == other.values;
    }
};

Cochain zero_cochain(const BranchedTriangularLattice &lat, int degree, int64_t modulus);
// Indicator cochain of a single simplex.
Cochain simplex_cochain(const BranchedTriangularLattice &lat, int degree, int64_t modulus, size_t index);
Cochain add_cochains(const Cochain &a, const Cochain &b);
// delta c (sigma) = c(boundary sigma) with the signed simplicial boundary.
Cochain coboundary(const BranchedTriangularLattice &lat, const Cochain &c);
// (a u b)(<1..p+q+1>) = a(<1..p+1>) b(<p+1..p+q+1>).
Cochain cup_product(const BranchedTriangularLattice &lat, const Cochain &a, const Cochain &b);

// Product of (-1)^{b_u b_v b_w} over faces, (-1)^{b_v b_w} over edges and
// (-1)^{b_v} over vertices.
int amplitude_psi(const BranchedTriangularLattice &lat, const std::vector<int64_t> &b);
// Number of closed dual loops formed by the edges with delta b = 1.
int64_t domain_wall_count(const BranchedTriangularLattice &lat, const std::vector<int64_t> &b);

// ---------------------------------------------------------------------------
// Quadratic-phase operators on qubits.
//
// An operator acts on computational basis states as
//     P |b> = w^{phase + 2 Q(b)} |M b + x>,      w = e^{i pi / 4},
// where Q(b) = sum_s lambda_s b_s + 2 sum_{s<t} kappa_st b_s b_t  (mod 4) and
// M is an invertible matrix over GF(2).  With M = 1 this is
// phase * X^x * Diag(i^{lambda.b} (-1)^{b.kappa.b}).  The permutation part M
// makes the class closed under conjugation by CX gates and lets it hold the
// image X^A CX^{AB} of a ququart X.
// ---------------------------------------------------------------------------

class QuadraticPhaseOperator {
   public:
    QuadraticPhaseOperator() = default;
    explicit QuadraticPhaseOperator(size_t n);  // identity on n qubits

    static QuadraticPhaseOperator identity(size_t n);
    static QuadraticPhaseOperator x(size_t n, size_t s);
    static QuadraticPhaseOperator z(size_t n, size_t s);
    static QuadraticPhaseOperator s_gate(size_t n, size_t s);
    static QuadraticPhaseOperator s_dagger(size_t n, size_t s);
    static QuadraticPhaseOperator cz(size_t n, size_t a, size_t b);
    static QuadraticPhaseOperator cx(size_t n, size_t control, size_t target);

    size_t size() const {
        return n_;
    }
    int64_t phase() const {
        return phase_;
    }
    const std::vector<uint8_t> &x_bits() const {
        return x_;
    }
    const std::vector<int64_t> &lambda() const {
        return lambda_;
    }
    uint8_t kappa(size_t s, size_t t) const {
        return kappa_[s][t];
    }
    uint8_t permutation(size_t r, size_t c) const {
        return m_[r][c];
    }
    bool has_permutation() const;
    bool is_diagonal() const;

    void set_phase(int64_t phase);
    void set_x(size_t s, bool bit);
    void set_lambda(size_t s, int64_t value);
    void set_kappa(size_t s, size_t t, bool bit);

    // Phase exponent (mod 8) and image basis state of P|b>.
    std::pair<int64_t, std::vector<uint8_t>> apply(const std::vector<uint8_t> &b) const;

    bool operator==(const QuadraticPhaseOperator &other) const;
    bool operator!=(const QuadraticPhaseOperator &other) const {
        return !(*this == other);
    }
    bool same_up_to_phase(const QuadraticPhaseOperator &other) const;

    // e.g. "w^2 * X[0] L[1]^1 K[0,3] M[4<-1]"; identity prints "I".
    std::string str() const;

    friend QuadraticPhaseOperator multiply(const QuadraticPhaseOperator &a, const QuadraticPhaseOperator &b);

   private:
    size_t n_ = 0;
    int64_t phase_ = 0;
    std::vector<uint8_t> x_;
    std::vector<int64_t> lambda_;
    std::vector<std::vector<uint8_t>> kappa_;
    std::vector<std::vector<uint8_t>> m_;
};

QuadraticPhaseOperator multiply(const QuadraticPhaseOperator &a, const QuadraticPhaseOperator &b);

enum class QubitGateKind { CZ, CX, S, Sdg };

struct QubitGate {
    QubitGateKind kind;
    size_t a;       // control / first qubit
    size_t b = 0;   // target / second qubit (unused for S, Sdg)
};

QuadraticPhaseOperator gate_operator(size_t n, const QubitGate &g);
QuadraticPhaseOperator gate_inverse(size_t n, const QubitGate &g);
// U P U^dagger with U = g_k ... g_1 for the circuit (g_1, ..., g_k).
QuadraticPhaseOperator conjugate_qpp(const QuadraticPhaseOperator &op, const std::vector<QubitGate> &circuit);

// Ququart site s maps to qubits A = 2s and B = 2s + 1 via
// Z -> S^A Z^B and X -> X^A CX^{AB} (basis |j> <-> |a, b> with j = a + 2b).
QuadraticPhaseOperator map_qudit_to_qubits(const PauliOperator &p);
size_t qubit_a(size_t site);
size_t qubit_b(size_t site);

// ---------------------------------------------------------------------------
// The chain from the square-lattice double semion to qubits.
// ---------------------------------------------------------------------------

// Ququart system with one site per triangular edge (site index = edge index).
SystemPtr triangular_ququart_system(const BranchedTriangularLattice &lat);
// Square-lattice DS on the h and v edges plus X_d^2, Z_d^2 on the diagonals.
StabilizerGroup square_ds_with_ancillas(const BranchedTriangularLattice &lat);
// prod over upward faces of CX_{12,13} CX_{23,13}.
std::vector<CliffordGate> ucx_circuit(const BranchedTriangularLattice &lat);
StabilizerGroup conjugate_code(const StabilizerGroup &code, const std::vector<CliffordGate> &circuit);

// Triangular DS terms: C_e = X_e^2 prod_{e',f} (Z_{e'}^2)^{e' u e (f)} and the
// face term B_f = (Z_12 Z_23 Z_13^dagger)^2.
PauliOperator tri_c_term(const BranchedTriangularLattice &lat, const SystemPtr &sys, size_t e);
PauliOperator tri_b_term(const BranchedTriangularLattice &lat, const SystemPtr &sys, size_t f);
// X part prod_e (X_e^2)^{v u delta v (e)} X_e^{delta v (e)} of the vertex term.
PauliOperator tri_a_x_part(const BranchedTriangularLattice &lat, const SystemPtr &sys, size_t v);

struct UcxReport {
    StabilizerGroup conjugated;
    bool c_terms_match = false;     // conjugated C terms (times X_d^2) equal C_e for h and v edges
    bool ancilla_x_match = false;   // conjugated X_d^2 equals C_d
    bool b_up_match = false;        // conjugated Z_d^2 equals the upward-face term
    bool b_down_member = false;     // every downward-face term lies in the conjugated group
    bool a_x_parts_match = false;   // X parts of conjugated vertex terms
    bool group_matches = false;     // <A, B_f, C_e> equals the conjugated group
    int64_t logical_dimension = 0;
    bool all() const {
        return c_terms_match && ancilla_x_match && b_up_match && b_down_member && a_x_parts_match && group_matches;
    }
};
UcxReport conjugate_code_by_ucx(const BranchedTriangularLattice &lat);

// prod over all faces <123> of CZ between A on <12> and B on <23>.
std::vector<QubitGate> uab_circuit(const BranchedTriangularLattice &lat);
// prod over upward faces of CZ between A on <12> and A on <23>.
std::vector<QubitGate> uaa_circuit(const BranchedTriangularLattice &lat);

struct Table1Row {
    int a12, a13, a23;
    bool allowed;     // even edge sum, i.e. B_f = 1
    int cz_power;     // CZ_{12,23} eigenvalue as a power of i
    int s_power;      // S^dag_12 S_13 S^dag_23 eigenvalue as a power of i
};
struct Table1Report {
    std::vector<Table1Row> rows;   // all eight basis states
    bool allowed_rows_agree = false;
    bool excluded_rows_odd = false;
    bool pass() const {
        return allowed_rows_agree && excluded_rows_odd;
    }
};
Table1Report table1_identity();

struct AppendixAReport {
    bool psi_identity = false;
    bool table1 = false;
    bool ucx_terms = false;
    bool uab_ce = false;
    int64_t configurations = 0;
};
// Psi = (-1)^{N_dw} over all 2^{L^2} configurations on an L x L torus, the
// CZ versus S-gate identity on even-parity faces, the U_CX term shapes and
// the U_AB collapse of every C_e.
AppendixAReport appendix_a_check(int64_t L = 3);

// ---------------------------------------------------------------------------
// Dense oracle.
// ---------------------------------------------------------------------------

struct DenseGroundSpace {
    int64_t dimension = 0;
    std::vector<std::vector<std::complex<double>>> basis;  // orthonormal
};
constexpr double kDenseTolerance = 1e-9;
// Applies prod_g (1/|g|) sum_k g^k to random vectors; needs total dimension <= 2^20.
DenseGroundSpace dense_ground_space(const StabilizerGroup &code, uint64_t seed = 1);
// P |psi> for a dense state vector (first site varies fastest).
std::vector<std::complex<double>> apply_pauli_dense(const PauliOperator &p, const std::vector<std::complex<double>> &psi);

}  // namespace tqd
