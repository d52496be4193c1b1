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

#include "tqd/exactmath.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace tqd;

namespace {

// Independent oracle: cokernel order of a small integer matrix computed as the
// gcd of maximal minors (product of invariant factors) by direct expansion.
BigInt minor_det(const std::vector<std::vector<int64_t>> &m) {
    size_t n = m.size();
    if (n == 1) {
        return m[0][0];
    }
    BigInt out = 0;
    for (size_t c = 0; c < n; c++) {
        std::vector<std::vector<int64_t>> sub;
        for (size_t r = 1; r < n; r++) {
            std::vector<int64_t> row;
            for (size_t k = 0; k < n; k++) {
                if (k != c) {
                    row.push_back(m[r][k]);
                }
            }
            sub.push_back(row);
        }
        BigInt term = m[0][c] * minor_det(sub);
        out += (c % 2 == 0) ? term : BigInt(-term);
    }
    return out;
}

void check_snf_contract(const IntMatrix &a) {
    SnfResult snf = smith_normal_form(a);
    EXPECT_EQ(snf.U * a * snf.V, snf.S);
    EXPECT_TRUE(snf.S.is_diagonal());
    auto diag = snf.diagonal();
    for (size_t i = 0; i < diag.size(); i++) {
        EXPECT_GE(diag[i], 0);
        if (i + 1 < diag.size() && diag[i] != 0) {
            EXPECT_EQ(diag[i + 1] % diag[i], 0);
        }
        if (diag[i] == 0 && i + 1 < diag.size()) {
            EXPECT_EQ(diag[i + 1], 0);
        }
    }
    BigInt du = determinant(snf.U);
    BigInt dv = determinant(snf.V);
    EXPECT_TRUE(du == 1 || du == -1);
    EXPECT_TRUE(dv == 1 || dv == -1);
}

IntMatrix random_matrix(std::mt19937 &rng, size_t rows, size_t cols, int spread) {
    std::uniform_int_distribution<int> dist(-spread, spread);
    IntMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.at(r, c) = dist(rng);
        }
    }
    return m;
}

bool satisfies(const IntMatrix &a, const std::vector<int64_t> &x, const std::vector<int64_t> &b,
               const std::vector<int64_t> &moduli) {
    for (size_t r = 0; r < a.rows(); r++) {
        BigInt acc = 0;
        for (size_t c = 0; c < a.cols(); c++) {
            acc += a.at(r, c) * x[c];
        }
        if (mod(acc - b[r], BigInt(moduli[r])) != 0) {
            return false;
        }
    }
    return true;
}

// Exhaustive search over the product of moduli ranges (small instances only).
bool exhaustive_has_solution(const IntMatrix &a, const std::vector<int64_t> &b,
                             const std::vector<int64_t> &moduli) {
    int64_t l = 1;
    for (int64_t d : moduli) {
        l = lcm64(l, d);
    }
    std::vector<int64_t> x(a.cols(), 0);
    while (true) {
        if (satisfies(a, x, b, moduli)) {
            return true;
        }
        size_t k = 0;
        while (k < x.size()) {
            if (++x[k] < l) {
                break;
            }
            x[k] = 0;
            k++;
        }
        if (k == x.size()) {
            return false;
        }
    }
}

}  // namespace

TEST(rational01, canonical_form) {
    EXPECT_EQ(Rational01(2, 4), Rational01(1, 2));
    EXPECT_EQ(Rational01(-1, 4), Rational01(3, 4));
    EXPECT_EQ(Rational01(5, 4), Rational01(1, 4));
    EXPECT_EQ(Rational01(4, 4), Rational01());
    EXPECT_EQ(Rational01(3, -4), Rational01(1, 4));
    EXPECT_EQ(Rational01(1, 4) + Rational01(3, 4), Rational01());
    EXPECT_EQ(Rational01(1, 6) + Rational01(1, 3), Rational01(1, 2));
    EXPECT_EQ((Rational01(1, 4) * 6).str(), "1/2");
    EXPECT_EQ(Rational01::from_string("-1/4"), Rational01(3, 4));
    EXPECT_EQ(Rational01().str(), "0");
}

TEST(smith_normal_form, identity) {
    SnfResult snf = smith_normal_form(IntMatrix::identity(2));
    EXPECT_EQ(snf.diagonal(), (std::vector<BigInt>{1, 1}));
    check_snf_contract(IntMatrix::identity(2));
}

TEST(smith_normal_form, z9_cokernel) {
    IntMatrix a{{0, 3}, {3, -2}};
    EXPECT_EQ(smith_normal_form(a).diagonal(), (std::vector<BigInt>{1, 9}));
    EXPECT_EQ(cokernel_invariants(a), (std::vector<BigInt>{9}));
    check_snf_contract(a);
}

TEST(smith_normal_form, z2_squared_cokernel) {
    IntMatrix a{{0, 2}, {2, -2}};
    EXPECT_EQ(smith_normal_form(a).diagonal(), (std::vector<BigInt>{2, 2}));
    check_snf_contract(a);
    // Oracle: gcd of 1x1 minors is 2, determinant magnitude is 4.
    EXPECT_EQ(minor_det({{0, 2}, {2, -2}}), -4);
}

TEST(smith_normal_form, empty_and_zero) {
    SnfResult snf = smith_normal_form(IntMatrix());
    EXPECT_EQ(snf.S.rows(), 0u);
    IntMatrix z(2, 3);
    check_snf_contract(z);
    EXPECT_EQ(smith_normal_form(z).rank(), 0u);
}

TEST(smith_normal_form, random_contract_and_determinant) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; trial++) {
        size_t rows = 1 + rng() % 6;
        size_t cols = 1 + rng() % 6;
        IntMatrix a = random_matrix(rng, rows, cols, 9);
        check_snf_contract(a);
        if (rows == cols) {
            // |det A| equals the product of the invariant factors.
            BigInt prod = 1;
            for (const auto &d : smith_normal_form(a).diagonal()) {
                prod *= d;
            }
            BigInt det = determinant(a);
            EXPECT_EQ(prod, det < 0 ? BigInt(-det) : det);
        }
    }
}

TEST(smith_normal_form, large_cofactors_exceed_64_bits) {
    std::mt19937 rng(11);
    IntMatrix a = random_matrix(rng, 8, 8, 1000);
    check_snf_contract(a);
}

TEST(solve_linear_mod, parity_examples) {
    auto x = solve_linear_mod(IntMatrix{{2}}, {0}, {4});
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(satisfies(IntMatrix{{2}}, *x, {0}, {4}));
    EXPECT_FALSE(solve_linear_mod(IntMatrix{{2}}, {1}, {4}).has_value());
}

TEST(solve_linear_mod, z9_pair) {
    IntMatrix a{{3, 0}, {0, 3}};
    auto x = solve_linear_mod(a, {3, 6}, {9, 9});
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(satisfies(a, *x, {3, 6}, {9, 9}));
    // Exhaustive oracle over Z_9^2: every solution is congruent to (1,2) mod 3.
    for (int64_t u = 0; u < 9; u++) {
        for (int64_t v = 0; v < 9; v++) {
            if (satisfies(a, {u, v}, {3, 6}, {9, 9})) {
                EXPECT_EQ(u % 3, 1);
                EXPECT_EQ(v % 3, 2);
            }
        }
    }
    EXPECT_EQ((*x)[0] % 3, 1);
    EXPECT_EQ((*x)[1] % 3, 2);
}

TEST(solve_linear_mod, dimension_mismatch_throws) {
    EXPECT_THROW(solve_linear_mod(IntMatrix{{1, 2}}, {0}, {2, 2}), std::invalid_argument);
    EXPECT_THROW(LinearModSolver(IntMatrix{{1}}, {2}).solve({0, 0}), std::invalid_argument);
}

TEST(solve_linear_mod, random_against_exhaustive_search) {
    std::mt19937 rng(3);
    const std::vector<std::vector<int64_t>> moduli_choices = {{4, 2}, {4, 4}, {2, 2, 4}, {9, 3}, {6, 4}};
    for (int trial = 0; trial < 120; trial++) {
        auto moduli = moduli_choices[rng() % moduli_choices.size()];
        size_t cols = 1 + rng() % 3;
        IntMatrix a = random_matrix(rng, moduli.size(), cols, 5);
        std::vector<int64_t> b;
        for (int64_t d : moduli) {
            b.push_back(rng() % d);
        }
        LinearModSolver solver(a, moduli);
        auto x = solver.solve(b);
        EXPECT_EQ(x.has_value(), exhaustive_has_solution(a, b, moduli));
        if (x) {
            EXPECT_TRUE(satisfies(a, *x, b, moduli));
        }
        for (const auto &k : solver.kernel_basis()) {
            EXPECT_TRUE(satisfies(a, k, std::vector<int64_t>(moduli.size(), 0), moduli));
        }
    }
}

TEST(solve_linear_mod, kernel_basis_spans_all_solutions) {
    // Every homogeneous solution found by brute force lies in the span of the
    // returned basis (checked by solving for coefficients in the span).
    IntMatrix a{{2, 1}, {0, 2}};
    std::vector<int64_t> moduli{4, 4};
    LinearModSolver solver(a, moduli);
    const auto &basis = solver.kernel_basis();
    std::set<std::pair<int64_t, int64_t>> span;
    std::vector<std::pair<int64_t, int64_t>> frontier{{0, 0}};
    span.insert({0, 0});
    while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        for (const auto &k : basis) {
            std::pair<int64_t, int64_t> nxt{mod(cur.first + k[0], 4), mod(cur.second + k[1], 4)};
            if (span.insert(nxt).second) {
                frontier.push_back(nxt);
            }
        }
    }
    for (int64_t u = 0; u < 4; u++) {
        for (int64_t v = 0; v < 4; v++) {
            if (satisfies(a, {u, v}, {0, 0}, moduli)) {
                EXPECT_TRUE(span.count({u, v})) << u << "," << v;
            }
        }
    }
}

TEST(ExactMath, LeftKernelAnnihilatesAndUnimodularInverse) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 30; trial++) {
        size_t rows = 2 + trial % 4, cols = 1 + trial % 3;
        IntMatrix a(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                a.at(r, c) = dist(rng);
            }
        }
        IntMatrix k = integer_left_kernel(a);
        EXPECT_EQ(k.rows() + smith_normal_form(a).rank(), rows);
        IntMatrix prod = k * a;
        for (size_t r = 0; r < prod.rows(); r++) {
            for (size_t c = 0; c < prod.cols(); c++) {
                EXPECT_EQ(prod.at(r, c), 0);
            }
        }
        SnfResult snf = smith_normal_form(a);
        EXPECT_EQ(unimodular_inverse(snf.U) * snf.U, IntMatrix::identity(rows));
        EXPECT_EQ(snf.V * unimodular_inverse(snf.V), IntMatrix::identity(cols));
    }
    EXPECT_THROW(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
}
