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

// Acceptance run: one pass/fail line per criterion.  Exit status is the
// number of failing criteria (0 when everything passes).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz_params.hpp"
#include "tqd/anyon.hpp"
#include "tqd/circuitmap.hpp"
#include "tqd/extraction.hpp"
#include "tqd/kmatrix.hpp"
#include "tqd/lattice.hpp"
#include "tqd/stabilizer.hpp"

using namespace tqd;

namespace {

// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string &what) {
        if (!ok) {
            failures.push_back(what);
        }
    }
};

IntMatrix rows(std::initializer_list<std::initializer_list<int64_t>> r) {
    return IntMatrix(r);
}

BigInt product_of_squares(const std::vector<int64_t> &N) {
    BigInt out = 1;
    for (int64_t d : N) {
        out *= BigInt(d) * d;
    }
    return out;
}

PauliOperator product_of_vertex_x(const LatticeModel &spt) {
    const auto &lat = spt.lattice;
    auto out = PauliOperator::identity(lat.system());
    for (int64_t y = 0; y < lat.Ly(); y++) {
        for (int64_t x = 0; x < lat.Lx(); x++) {
            out = multiply(out, PauliOperator::single(lat.system(), lat.vertex(x, y), PauliKind::X, 1));
        }
    }
    return out;
}

void criterion1(Check &c) {
    for (int64_t L : {3, 4}) {
        auto ds = build_ds(L, L);
        std::string at = " on " + std::to_string(L) + "x" + std::to_string(L);
        c.expect(assert_commuting(ds.group).empty(), "non-commuting generators" + at);
        c.expect(scalar_consistency(ds.group).consistent, "scalar inconsistency" + at);
        c.expect(logical_dimension(ds.group) == 4, "logical dimension != 4" + at);
    }
}

void criterion2(Check &c) {
    auto tc = build_zn_tc(4, 3, 3);
    auto ds = build_ds(3, 3);
    auto condensed = measure(tc.group, tqd_edge_terms(tc.lattice, ds.params));
    c.expect(compare_groups(condensed, ds.group).equal, "measured Z_4 toric code differs from the DS group");
}

void criterion3(Check &c) {
    auto ds = build_ds(3, 3);
    std::vector<JunctionSpec> placements;
    for (int r = 0; r < 4; r++) {
        placements.push_back(default_junction(ds.lattice, r));
    }
    placements.push_back(JunctionSpec::straight(0, 1, "ENW", 1));
    for (size_t i = 0; i < placements.size(); i++) {
        std::string at = " (placement " + std::to_string(i) + ")";
        c.expect(t_junction_theta(ds, ds.label("s"), placements[i]) == Rational01(1, 4), "theta(s)" + at);
        c.expect(t_junction_theta(ds, ds.label("sbar"), placements[i]) == Rational01(3, 4), "theta(sbar)" + at);
        c.expect(t_junction_theta(ds, ds.label("ssbar"), placements[i]) == Rational01(), "theta(ssbar)" + at);
    }
    c.expect(crossing_braiding(ds, ds.label("s"), ds.label("s")) == Rational01(1, 2), "B(s,s)");
    c.expect(crossing_braiding(ds, ds.label("s"), ds.label("sbar")) == Rational01(), "B(s,sbar)");
}

void criterion4(Check &c) {
    auto tc = build_zn_tc(4, 3, 3);
    for (int64_t p = 0; p < 4; p++) {
        for (int64_t q = 0; q < 4; q++) {
            c.expect(t_junction_theta(tc, Label{{p}, {q}}) == Rational01(p * q, 4),
                     "theta(e^" + std::to_string(p) + " m^" + std::to_string(q) + ")");
        }
    }
}

void criterion5(Check &c) {
    std::vector<TqdParams> cases = {TqdParams::make({2}, {1}), TqdParams::make({2}, {0}), TqdParams::make({3}, {1}),
                                    TqdParams::make({2, 2}, {0, 0}, {{0, 1, 1}}),
                                    TqdParams::make({2, 2}, {1, 1}, {{0, 1, 1}})};
    for (const auto &params : cases) {
        std::string p = " for " + params.str();
        auto model = build_tqd(params, 3, 3);
        c.expect(assert_commuting(model.group).empty(), "non-commuting generators" + p);
        c.expect(logical_dimension(model.group) == product_of_squares(params.N), "logical dimension" + p);
        std::vector<std::string> names;
        for (const auto &[name, label] : generating_labels(model)) {
            names.push_back(name);
        }
        AnyonTheory lattice = extract_theory(model, names).theory();
        AnyonTheory abstract = tqd_theory(params);
        auto stacked = stack_condense_to_tqd(params);
        AnyonTheory from_k = theory_from_k(build_k_tqd(params).K);
        c.expect(theories_isomorphic(lattice, abstract).isomorphic, "lattice vs tqd_theory" + p);
        c.expect(theories_isomorphic(stacked.result.theory, abstract).isomorphic, "stack condensation vs tqd_theory" + p);
        c.expect(theories_isomorphic(from_k, abstract).isomorphic, "K-matrix vs tqd_theory" + p);
        c.expect(theories_isomorphic(lattice, from_k).isomorphic, "lattice vs K-matrix" + p);
    }
}

void criterion6(Check &c) {
    auto params = TqdParams::make({2, 2}, {1, 1}, {{0, 1, 1}});
    auto k = census(build_k_tqd(params).K);
    c.expect(k.size == 16, "K census size");
    c.expect(k.by_theta[Rational01(1, 4)] == 6 && k.by_theta[Rational01(3, 4)] == 6 && k.by_theta[Rational01()] == 4,
             "K census counts");
    auto model = build_tqd(params, 3, 3);
    std::map<Rational01, int> lattice;
    for (int64_t a = 0; a < 4; a++) {
        for (int64_t b = 0; b < 4; b++) {
            Label l = label_product(label_power(model.label("phi1"), a), label_power(model.label("phi2"), b));
            lattice[t_junction_theta(model, l)]++;
        }
    }
    c.expect(lattice[Rational01(1, 4)] == 6 && lattice[Rational01(3, 4)] == 6 && lattice[Rational01()] == 4,
             "lattice census counts");
}

bool block_formula_holds(const TqdParams &params) {
    KMatrix k = build_k_tqd(params);
    RationalMatrix inv = k_inverse(k.K);
    IntMatrix S = cocycle_matrix_s(params);
    for (size_t i = 0; i < k.M; i++) {
        for (size_t j = 0; j < k.M; j++) {
            BigRational ni(params.N[i]), nj(params.N[j]);
            BigRational diag = i == j ? 1 / ni : BigRational(0);
            if (inv[i][j] != BigRational(S.at(i, j)) / (ni * nj) || inv[i][k.M + j] != diag ||
                inv[k.M + i][j] != diag || inv[k.M + i][k.M + j] != 0) {
                return false;
            }
        }
    }
    return true;
}

void criterion7(Check &c) {
    std::vector<TqdParams> cases = {TqdParams::make({2, 2}, {0, 0}, {{0, 1, 1}})};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; i++) {
        cases.push_back(testing::random_tqd_params(rng, 3));
    }
    for (const auto &params : cases) {
        auto m = condensation_matrices(params);
        c.expect(block_formula_holds(params), "inverse block formula for " + params.str());
        c.expect(m.q_identity, "Q identity for " + params.str());
        c.expect(m.k_identity, "L identity for " + params.str());
    }
    IntMatrix K = build_k_tqd(cases.front()).K;
    // Columns of W are the new basis vectors: W^T K W, i.e. transform by W^T.
    IntMatrix W = rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 2, 0, -1}, {2, 0, 1, 0}});
    IntMatrix target = rows({{0, 4, 0, 0}, {4, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    c.expect(transform(K, W.transpose()) == target, "explicit W change of basis");
}

void criterion8(Check &c) {
    auto expect_group = [&](const TqdParams &p, std::vector<int64_t> want) {
        c.expect(fusion_group(p) == want, "fusion group of " + p.str());
    };
    expect_group(TqdParams::make({2}, {1}), {2, 2});
    expect_group(TqdParams::make({3}, {1}), {9});
    expect_group(TqdParams::make({2, 2}, {0, 0}, {{0, 1, 1}}), {4, 4});
    for (const std::vector<int64_t> &N : {std::vector<int64_t>{2}, {3}, {2, 4}, {2, 3}, {4, 4}}) {
        auto p = TqdParams::make(N, std::vector<int64_t>(N.size(), 0));
        std::vector<int64_t> doubled = N;
        doubled.insert(doubled.end(), N.begin(), N.end());
        expect_group(p, FiniteAbelianGroup{doubled}.invariant_factors());
    }
    std::vector<TqdParams> sweep = {TqdParams::make({2}, {1}), TqdParams::make({4}, {1}), TqdParams::make({4}, {2}),
                                    TqdParams::make({8}, {3}), TqdParams::make({9}, {4}),
                                    TqdParams::make({2, 2}, {1, 1}, {{0, 1, 1}}),
                                    TqdParams::make({2, 4}, {1, 3}, {{0, 1, 1}}),
                                    TqdParams::make({2, 2, 2}, {1, 0, 1}, {{0, 1, 1}, {1, 2, 1}})};
    std::mt19937_64 rng(8);
    while (sweep.size() < 40) {
        auto p = testing::random_tqd_params(rng, 3);
        if (product_of_squares(p.N) <= 256) {
            sweep.push_back(p);
        }
    }
    for (const auto &p : sweep) {
        c.expect(fusion_group(p) == fusion_group_from_cocycle(p), "SNF vs cocycle route for " + p.str());
    }
}

void criterion9(Check &c) {
    for (int64_t L : {3, 4}) {
        auto spt = build_spt(L, L);
        std::string at = " on " + std::to_string(L) + "x" + std::to_string(L);
        c.expect(logical_dimension(spt.group) == 1, "logical dimension" + at);
        auto all_x = product_of_vertex_x(spt);
        bool commutes_all = true;
        for (const auto &g : spt.group.generators()) {
            commutes_all = commutes_all && commutes(g, all_x);
        }
        c.expect(commutes_all, "product of vertex X fails to commute" + at);
    }
    auto res = spt_cocycle(4);
    for (int g = 0; g < 2; g++) {
        for (int h = 0; h < 2; h++) {
            for (int k = 0; k < 2; k++) {
                Rational01 want = (g && h && k) ? Rational01(1, 2) : Rational01();
                c.expect(res.omega.at({g, h, k}) == want, "omega(" + std::to_string(g) + "," + std::to_string(h) +
                                                              "," + std::to_string(k) + ")");
            }
        }
    }
    c.expect(res.cocycle_condition, "delta omega");
}

void criterion10(Check &c) {
    auto r = appendix_a_check(3);
    c.expect(r.configurations == 512, "configuration count");
    c.expect(r.psi_identity, "Psi = (-1)^N_dw");
    c.expect(r.table1, "CZ versus phase-gate rows");
    c.expect(r.ucx_terms, "U_CX term shapes");
    c.expect(r.uab_ce, "U_AB collapse of C_e");
}

void criterion11(Check &c) {
    auto ququart = make_system({4});
    std::vector<std::pair<std::string, StabilizerGroup>> codes = {
        {"DS 2x2", build_ds(2, 2).group},
        {"Z_2 TC 2x2", build_zn_tc(2, 2, 2).group},
        {"<X^2, Z^2>", StabilizerGroup(ququart, {PauliOperator::single(ququart, 0, PauliKind::X, 2),
                                                 PauliOperator::single(ququart, 0, PauliKind::Z, 2)})},
    };
    for (const auto &[name, code] : codes) {
        c.expect(BigInt(dense_ground_space(code).dimension) == logical_dimension(code), "dense rank for " + name);
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *title;
        std::function<void(Check &)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "DS model commutes, is scalar consistent, logical dimension 4 (3x3, 4x4)", criterion1},
        {2, "measuring C_e on the Z_4 toric code yields the DS group", criterion2},
        {3, "DS spins and braidings at several junction placements", criterion3},
        {4, "Z_4 toric code spins theta(e^p m^q) = pq/4", criterion4},
        {5, "TQD matrix: commuting, degeneracy, four-way theory agreement", criterion5},
        {6, "six-semion census from K-matrix and lattice", criterion6},
        {7, "K-matrix identities, 50 fuzzed params, explicit W", criterion7},
        {8, "fusion groups, SNF route vs cocycle route", criterion8},
        {9, "SPT: unique ground state, global symmetry, boundary cocycle", criterion9},
        {10, "triangular-lattice circuit chain", criterion10},
        {11, "dense ground-space cross-check", criterion11},
    };
    int failed = 0;
    for (const auto &cr : criteria) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception &e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = check.failures.empty();
        failed += ok ? 0 : 1;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << cr.id << ": " << (ok ? "pass" : "FAIL") << " - " << cr.title << " (" << secs << " s)";
        if (!ok) {
            line << " [" << check.failures.front();
            if (check.failures.size() > 1) {
                line << "; +" << check.failures.size() - 1 << " more";
            }
            line << "]";
        }
        std::cout << line.str() << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed;
}
