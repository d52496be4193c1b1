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

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tqd/anyon.hpp"
#include "tqd/exactmath.hpp"
#include "tqd/lattice.hpp"

namespace tqd {

using BigRational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<BigRational>>;

// Symmetric integer K matrix; for twisted quantum doubles the first M
// coordinates are fluxes and the last M are charges.
struct KMatrix {
    size_t M = 0;
    IntMatrix K;
};

// [[0, N], [N, -S]] with S = U + U^T, U upper triangular with U_ii = n_i and
// U_ij = n_ij for i < j.
KMatrix build_k_tqd(const TqdParams &params);
// [[0, D], [D, 0]] with D = diag(dims).
KMatrix build_k_toric(const std::vector<int64_t> &dims);
IntMatrix cocycle_matrix_u(const TqdParams &params);
IntMatrix cocycle_matrix_s(const TqdParams &params);

RationalMatrix to_rational(const IntMatrix &m);
RationalMatrix rational_inverse(const RationalMatrix &m);  // throws on singular input
RationalMatrix k_inverse(const IntMatrix &K);
RationalMatrix rational_product(const RationalMatrix &a, const RationalMatrix &b);
RationalMatrix rational_transpose(const RationalMatrix &a);
Rational01 rational_mod1(const BigRational &r);

struct KAnyonGroup {
    std::vector<int64_t> invariant_factors;  // nontrivial SNF entries
    std::vector<std::vector<int64_t>> representatives;  // one integer vector per anyon
};
KAnyonGroup anyon_group_from_k(const IntMatrix &K);

Rational01 q_of(const IntMatrix &K, const std::vector<int64_t> &l);
Rational01 b_of(const IntMatrix &K, const std::vector<int64_t> &l, const std::vector<int64_t> &lp);

// Abstract theory with one presentation generator per coordinate, relations
// given by the columns of K, and q from K^{-1}; requires an even diagonal.
AnyonTheory theory_from_k(const IntMatrix &K);

// W K W^T; throws unless W is unimodular.
IntMatrix transform(const IntMatrix &K, const IntMatrix &W);

// Exact signature via congruence diagonalization over the rationals.
int64_t signature(const IntMatrix &K);

struct KCensus {
    std::map<Rational01, int64_t> by_theta;
    int64_t signature = 0;
    int64_t size = 0;
};
KCensus census(const IntMatrix &K);

struct CondensationMatrices {
    IntMatrix K_TC;  // [[0, N^2], [N^2, 0]]
    IntMatrix Q;     // (-N ; N U)
    IntMatrix L;     // [[I, 0], [N U^T N^{-1}, N]]
    bool q_identity = false;  // Q^T K_TC^{-1} Q = -S
    bool l_identity = false;  // L^T K_TC^{-1} Q = (0 ; -I) mod 1
    bool k_identity = false;  // L^{-1} K_TC L^{-T} = K_TQD
};
CondensationMatrices condensation_matrices(const TqdParams &params);

// The F_{2^r} family: Z_{2^r} x Z_{2^r} with q(a1, a2) = (a1^2 + a2^2 + a1 a2) / 2^r.
AnyonTheory f_family_theory(int r);

}  // namespace tqd
