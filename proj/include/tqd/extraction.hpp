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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tqd/anyon.hpp"
#include "tqd/lattice.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd {

// Three dual-lattice paths leaving a common center plaquette, listed in
// counter-clockwise order.  Each arm is a move string over E/N/W/S.
struct JunctionSpec {
    int64_t cx = 0, cy = 0;
    std::array<std::string, 3> arms;

    // Straight arms of the given length; dirs lists the three first moves,
    // e.g. "ENW".
    static JunctionSpec straight(int64_t cx, int64_t cy, const std::string &dirs, int64_t length);
    // Throws std::invalid_argument unless the arms leave in counter-clockwise
    // order and visit pairwise disjoint plaquettes away from the center.
    void validate(const TorusLattice &lat) const;
};

// A straight junction near the middle of the torus (arm length 2 when the
// torus allows it, else 1); rotation r in 0..3 turns the arms by r quarter turns.
JunctionSpec default_junction(const TorusLattice &lat, int rotation = 0);

// Throws std::invalid_argument if closed loops of the label fail to commute
// with some stabilizer generator.
void require_deconfined(const LatticeModel &model, const Label &label);

Rational01 t_junction_theta(const LatticeModel &model, const Label &label, const JunctionSpec &junction);
Rational01 t_junction_theta(const LatticeModel &model, const Label &label);
Rational01 crossing_braiding(const LatticeModel &model, const Label &a, const Label &b);

// Generating anyon labels of a model: e/m per layer for toric codes, c_i and
// phi_i for twisted quantum doubles.
std::vector<std::pair<std::string, Label>> generating_labels(const LatticeModel &model);
int64_t fusion_order(const LatticeModel &model, const Label &label);

struct ExtractedTheory {
    std::vector<std::string> names;
    std::vector<Label> labels;
    std::vector<int64_t> fusion_orders;
    std::vector<Rational01> theta;
    std::vector<std::vector<Rational01>> braiding;
    PresentedTheory presentation;  // generators = the labels, in order

    const AnyonTheory &theory() const {
        return presentation.theory;
    }
};

ExtractedTheory extract_theory(const LatticeModel &model, const std::vector<std::string> &names);

struct LogicalReport {
    std::vector<std::string> names;  // Z1, X1, Z2, X2, ...
    std::vector<PauliOperator> operators;
    std::vector<std::vector<Rational01>> commutation;  // phi(op_i, op_j)
    bool commute_with_stabilizers = true;
    std::vector<Verdict> membership;            // of each operator itself
    std::vector<int64_t> order;                 // smallest k with op^k in the group up to phase
    std::vector<Verdict> power_membership;      // verdict of op^order
    bool standard_form = false;                 // symplectic pairs (Z_i, X_i)
    BigInt implied_dimension;                   // prod_i denominator of phi(Z_i, X_i)
    BigInt logical_dimension;
};

LogicalReport logical_algebra(const LatticeModel &model);

struct SptCocycle {
    std::map<std::array<int, 3>, Rational01> omega;
    PauliOperator boundary_action;  // P_ell(1)
    PauliOperator omega_full;       // Omega(1,1)
    PauliOperator omega_left;       // Omega_vL(1,1)
    PauliOperator omega_right;      // Omega_vR(1,1)
    size_t region_stabilizers = 0;  // generators of the R-supported subgroup
    bool cocycle_condition = false; // delta omega = 0 over all 16 tuples
};

// Boundary cocycle of the Z_2 SPT model (which must be at least (ell + 6) x 7).
SptCocycle spt_cocycle(const LatticeModel &spt, int64_t ell);
SptCocycle spt_cocycle(int64_t ell);

}  // namespace tqd
