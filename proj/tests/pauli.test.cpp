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

#include "tqd/pauli.hpp"

#include <complex>
#include <random>

#include "gtest/gtest.h"

using namespace tqd;

namespace {

using cd = std::complex<double>;
using Dense = std::vector<std::vector<cd>>;

// Independent oracle: explicit matrices on the full tensor-product space,
// built from the defining shift/clock matrices.
struct DenseOracle {
    std::vector<int64_t> dims;
    size_t total = 1;

    explicit DenseOracle(std::vector<int64_t> d) : dims(std::move(d)) {
        for (auto x : dims) {
            total *= x;
        }
    }
    std::vector<int64_t> digits(size_t index) const {
        std::vector<int64_t> out(dims.size());
        for (size_t s = 0; s < dims.size(); s++) {
            out[s] = index % dims[s];
            index /= dims[s];
        }
        return out;
    }
    size_t index(const std::vector<int64_t> &dg) const {
        size_t out = 0, stride = 1;
        for (size_t s = 0; s < dims.size(); s++) {
            out += dg[s] * stride;
            stride *= dims[s];
        }
        return out;
    }
    Dense zero() const {
        return Dense(total, std::vector<cd>(total));
    }
    Dense mul(const Dense &a, const Dense &b) const {
        Dense out = zero();
        for (size_t i = 0; i < total; i++) {
            for (size_t k = 0; k < total; k++) {
                if (std::abs(a[i][k]) < 1e-12) {
                    continue;
                }
                for (size_t j = 0; j < total; j++) {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        return out;
    }
    Dense dagger(const Dense &a) const {
        Dense out = zero();
        for (size_t i = 0; i < total; i++) {
            for (size_t j = 0; j < total; j++) {
                out[j][i] = std::conj(a[i][j]);
            }
        }
        return out;
    }
    // X_s: |j> -> |j+1>, Z_s: |j> -> w^j |j>.
    Dense elementary(size_t site, bool is_x, int64_t power) const {
        Dense out = zero();
        int64_t d = dims[site];
        for (size_t col = 0; col < total; col++) {
            auto dg = digits(col);
            if (is_x) {
                dg[site] = ((dg[site] + power) % d + d) % d;
                out[index(dg)][col] = 1;
            } else {
                out[col][col] = std::polar(1.0, 2 * M_PI * dg[site] * power / (double)d);
            }
        }
        return out;
    }
    Dense of(const PauliOperator &p) const {
        Dense out = zero();
        double angle = M_PI * p.phase() / (double)p.system()->D();
        for (size_t i = 0; i < total; i++) {
            out[i][i] = std::polar(1.0, angle);
        }
        for (size_t s = 0; s < dims.size(); s++) {
            out = mul(out, elementary(s, true, p.x_at(s)));
            out = mul(out, elementary(s, false, p.z_at(s)));
        }
        return out;
    }
    Dense gate(const CliffordGate &g) const {
        Dense out = zero();
        for (size_t col = 0; col < total; col++) {
            auto dg = digits(col);
            cd amp = 1;
            switch (g.kind) {
                case GateKind::QuditCX:
                case GateKind::QubitCXab:
                    dg[g.b] = (dg[g.b] + dg[g.a]) % dims[g.b];
                    break;
                case GateKind::QubitCZ:
                    amp = (dg[g.a] && dg[g.b]) ? -1 : 1;
                    break;
                case GateKind::QubitS:
                    amp = dg[g.a] ? cd(0, 1) : cd(1, 0);
                    break;
            }
            out[index(dg)][col] = amp;
        }
        return out;
    }
    static bool close(const Dense &a, const Dense &b) {
        for (size_t i = 0; i < a.size(); i++) {
            for (size_t j = 0; j < a.size(); j++) {
                if (std::abs(a[i][j] - b[i][j]) > 1e-9) {
                    return false;
                }
            }
        }
        return true;
    }
};

PauliOperator random_pauli(std::mt19937 &rng, const SystemPtr &sys) {
    PauliOperator p = PauliOperator::identity(sys);
    for (size_t s = 0; s < sys->size(); s++) {
        p.set_x(s, rng() % sys->dim(s));
        p.set_z(s, rng() % sys->dim(s));
    }
    p.set_phase(rng() % (2 * sys->D()));
    return p;
}

}  // namespace

TEST(pauli, single_reduces_exponents) {
    auto sys4 = make_system({4});
    auto z = PauliOperator::single(sys4, 0, PauliKind::Z, 1);
    EXPECT_EQ(z.z_at(0), 1);
    EXPECT_EQ(z.phase(), 0);
    EXPECT_EQ(PauliOperator::single(sys4, 0, PauliKind::X, 5).x_at(0), 1);
    auto sys9 = make_system({9, 9, 9});
    EXPECT_EQ(PauliOperator::single(sys9, 2, PauliKind::Z, -1).z_at(2), 8);
    EXPECT_THROW(PauliOperator::single(sys4, 1, PauliKind::Z, 1), std::out_of_range);
}

TEST(pauli, clock_shift_commutation) {
    auto sys = make_system({4});
    auto Z = PauliOperator::single(sys, 0, PauliKind::Z, 1);
    auto X = PauliOperator::single(sys, 0, PauliKind::X, 1);
    auto zx = multiply(Z, X);
    // Z X = i X Z: phase exponent 2 of e^{pi i/4}.
    EXPECT_EQ(zx.phase(), 2);
    EXPECT_EQ(zx.x_at(0), 1);
    EXPECT_EQ(zx.z_at(0), 1);
    EXPECT_EQ(commutation_phase(Z, X), Rational01(1, 4));
    EXPECT_EQ(commutation_phase(Z, Z), Rational01());
    EXPECT_EQ(multiply(PauliOperator::identity(sys), Z), Z);
}

TEST(pauli, x2z2_squares_to_identity) {
    auto sys = make_system({4});
    auto p = multiply(PauliOperator::single(sys, 0, PauliKind::X, 2), PauliOperator::single(sys, 0, PauliKind::Z, 2));
    auto sq = multiply(p, p);
    EXPECT_TRUE(sq.is_identity_up_to_phase());
    EXPECT_EQ(sq.phase(), 0);
}

TEST(pauli, adjoint_inverts) {
    auto sys4 = make_system({4});
    auto id = PauliOperator::identity(sys4);
    EXPECT_EQ(adjoint(id), id);
    auto z = PauliOperator::single(sys4, 0, PauliKind::Z, 1);
    EXPECT_EQ(adjoint(z).z_at(0), 3);
    EXPECT_EQ(multiply(z, adjoint(z)), id);
    auto sys2 = make_system({2});
    auto ixz = multiply(PauliOperator::single(sys2, 0, PauliKind::X, 1), PauliOperator::single(sys2, 0, PauliKind::Z, 1))
                   .with_added_phase(Rational01(1, 4));
    EXPECT_EQ(multiply(ixz, adjoint(ixz)), PauliOperator::identity(sys2));
}

TEST(pauli, orders_of_generators) {
    auto sys = make_system({4, 2, 9, 6});
    for (size_t s = 0; s < sys->size(); s++) {
        for (auto kind : {PauliKind::X, PauliKind::Z}) {
            auto p = power(PauliOperator::single(sys, s, kind, 1), sys->dim(s));
            EXPECT_EQ(p, PauliOperator::identity(sys));
        }
    }
}

TEST(pauli, dense_oracle_products_and_commutation) {
    std::mt19937 rng(5);
    for (const auto &dims : std::vector<std::vector<int64_t>>{{4}, {2, 2}, {4, 2}, {3, 3}, {4, 4}}) {
        auto sys = make_system(dims);
        DenseOracle oracle(dims);
        for (int trial = 0; trial < 15; trial++) {
            auto p = random_pauli(rng, sys);
            auto q = random_pauli(rng, sys);
            EXPECT_TRUE(DenseOracle::close(oracle.of(multiply(p, q)), oracle.mul(oracle.of(p), oracle.of(q))));
            EXPECT_TRUE(DenseOracle::close(oracle.of(adjoint(p)), oracle.dagger(oracle.of(p))));
            // P Q = e^{2 pi i phi} Q P
            Rational01 phi = commutation_phase(p, q);
            auto qp = oracle.mul(oracle.of(q), oracle.of(p));
            cd w = std::polar(1.0, 2 * M_PI * phi.num() / (double)phi.den());
            for (auto &row : qp) {
                for (auto &v : row) {
                    v *= w;
                }
            }
            EXPECT_TRUE(DenseOracle::close(oracle.mul(oracle.of(p), oracle.of(q)), qp));
        }
    }
}

TEST(pauli, dense_oracle_gate_conjugation) {
    std::mt19937 rng(9);
    struct Case {
        std::vector<int64_t> dims;
        CliffordGate gate;
    };
    std::vector<Case> cases = {
        {{4, 4}, {GateKind::QuditCX, 0, 1}}, {{4, 4}, {GateKind::QuditCX, 1, 0}},
        {{3, 3}, {GateKind::QuditCX, 0, 1}}, {{2, 2}, {GateKind::QubitCZ, 0, 1}},
        {{2, 2}, {GateKind::QubitCXab, 1, 0}}, {{2, 2}, {GateKind::QubitS, 1}},
        {{2, 4, 2}, {GateKind::QubitCZ, 2, 0}},
    };
    for (const auto &c : cases) {
        auto sys = make_system(c.dims);
        DenseOracle oracle(c.dims);
        auto u = oracle.gate(c.gate);
        for (int trial = 0; trial < 10; trial++) {
            auto p = random_pauli(rng, sys);
            auto expected = oracle.mul(oracle.mul(u, oracle.of(p)), oracle.dagger(u));
            EXPECT_TRUE(DenseOracle::close(oracle.of(conjugate(p, {c.gate})), expected));
        }
    }
}

TEST(pauli, conjugation_examples) {
    auto sys = make_system({4, 4});
    auto xc = PauliOperator::single(sys, 0, PauliKind::X, 1);
    auto expected = multiply(xc, PauliOperator::single(sys, 1, PauliKind::X, 1));
    EXPECT_EQ(conjugate(xc, {{GateKind::QuditCX, 0, 1}}), expected);
    auto qubits = make_system({2, 2});
    auto xa = PauliOperator::single(qubits, 0, PauliKind::X, 1);
    EXPECT_EQ(conjugate(xa, {{GateKind::QubitCZ, 0, 1}}), multiply(xa, PauliOperator::single(qubits, 1, PauliKind::Z, 1)));
    auto id = PauliOperator::identity(qubits);
    EXPECT_EQ(conjugate(id, {{GateKind::QubitCZ, 0, 1}, {GateKind::QubitS, 1}}), id);
    auto mixed = make_system({4, 2});
    EXPECT_THROW(conjugate(PauliOperator::identity(mixed), {{GateKind::QuditCX, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(conjugate(PauliOperator::identity(mixed), {{GateKind::QubitS, 0}}), std::invalid_argument);
}

TEST(pauli, properties_random) {
    std::mt19937 rng(21);
    auto sys = make_system({4, 2, 3, 4, 9});
    std::vector<CliffordGate> gates = {{GateKind::QuditCX, 0, 3}, {GateKind::QubitS, 1}, {GateKind::QuditCX, 3, 0}};
    for (int trial = 0; trial < 200; trial++) {
        auto p = random_pauli(rng, sys);
        auto q = random_pauli(rng, sys);
        auto r = random_pauli(rng, sys);
        EXPECT_EQ(multiply(multiply(p, q), r), multiply(p, multiply(q, r)));
        EXPECT_EQ(commutation_phase(p, q) + commutation_phase(q, p), Rational01());
        for (const auto &g : gates) {
            EXPECT_EQ(commutation_phase(conjugate(p, {g}), conjugate(q, {g})), commutation_phase(p, q));
        }
        // Conjugation is a homomorphism.
        EXPECT_EQ(conjugate(multiply(p, q), gates), multiply(conjugate(p, gates), conjugate(q, gates)));
    }
}

TEST(pauli, text_round_trip) {
    std::mt19937 rng(2);
    auto sys = make_system({4, 4, 2, 9});
    for (int trial = 0; trial < 50; trial++) {
        auto p = random_pauli(rng, sys);
        EXPECT_EQ(parse_pauli(sys, p.str()), p) << p.str();
    }
    EXPECT_EQ(PauliOperator::identity(sys).str(), "I");
    auto z = PauliOperator::single(sys, 0, PauliKind::Z, 1);
    auto x = PauliOperator::single(sys, 0, PauliKind::X, 1);
    EXPECT_EQ(multiply(z, x).str(), "i * X[0]^1 Z[0]^1");
    EXPECT_THROW(parse_pauli(sys, "Q[1]"), std::invalid_argument);
}
