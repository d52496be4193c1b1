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

#include "gtest/gtest.h"

using namespace tqd;

namespace {

bool commutes_with_all(const StabilizerGroup &g, const PauliOperator &p) {
    for (const auto &h : g.generators()) {
        if (!commutes(h, p)) {
            return false;
        }
    }
    return true;
}

std::vector<Label> all_labels(const std::vector<int64_t> &dims) {
    std::vector<Label> out{Label{std::vector<int64_t>(dims.size(), 0), std::vector<int64_t>(dims.size(), 0)}};
    for (size_t i = 0; i < dims.size(); i++) {
        std::vector<Label> next;
        for (const auto &l : out) {
            for (int64_t p = 0; p < dims[i]; p++) {
                for (int64_t q = 0; q < dims[i]; q++) {
                    Label m = l;
                    m.p[i] = p;
                    m.q[i] = q;
                    next.push_back(m);
                }
            }
        }
        out = next;
    }
    return out;
}

int64_t product_of_squares(const std::vector<int64_t> &N) {
    int64_t out = 1;
    for (int64_t n : N) {
        out *= n * n;
    }
    return out;
}

}  // namespace

TEST(Lattice, SiteIndexingRoundTrips) {
    TorusLattice lat(3, 4, {4, 9}, 2);
    EXPECT_EQ(lat.system()->dims().size(), 2u * 2 * 12 + 12);
    for (size_t s = 0; s < lat.system()->dims().size(); s++) {
        auto info = lat.describe(s);
        size_t back = info.is_vertex ? lat.vertex(info.x, info.y) : lat.edge(info.x, info.y, info.orient, info.layer);
        EXPECT_EQ(back, s);
    }
    EXPECT_EQ(lat.edge(-1, 0, Orient::H), lat.edge(2, 0, Orient::H));
    EXPECT_EQ(lat.edge(0, 4, Orient::V, 1), lat.edge(0, 0, Orient::V, 1));
}

TEST(Lattice, ToricCodeDegeneracyIsNSquared) {
    for (int64_t N = 1; N <= 5; N++) {
        for (int64_t L : {2, 3}) {
            auto tc = build_zn_tc(N, L, L + 1);
            EXPECT_TRUE(assert_commuting(tc.group).empty());
            EXPECT_EQ(logical_dimension(tc.group), BigInt(N * N)) << "N=" << N << " L=" << L;
        }
    }
}

TEST(Lattice, DoubleSemionCommutesAndIsFourFoldDegenerate) {
    for (int64_t L : {3, 4}) {
        auto ds = build_ds(L, L);
        EXPECT_TRUE(assert_commuting(ds.group).empty());
        EXPECT_TRUE(scalar_consistency(ds.group).consistent);
        EXPECT_EQ(logical_dimension(ds.group), BigInt(4)) << "L=" << L;
        EXPECT_EQ(ds.families.at("A").size(), (size_t)(L * L));
        EXPECT_EQ(ds.families.at("B").size(), (size_t)(L * L));
        EXPECT_EQ(ds.families.at("C").size(), (size_t)(2 * L * L));
    }
}

TEST(Lattice, DoubleSemionIsCondensedZ4ToricCode) {
    for (int64_t L : {2, 3}) {
        auto tc = build_zn_tc(4, L, L);
        auto ds = build_ds(L, L);
        auto condensed = measure(tc.group, tqd_edge_terms(tc.lattice, ds.params));
        auto cmp = compare_groups(condensed, ds.group);
        EXPECT_TRUE(cmp.equal) << "L=" << L;
    }
}

TEST(Lattice, TwistedQuantumDoublesAreCondensedStacks) {
    std::vector<TqdParams> cases = {
        TqdParams::make({2}, {0}),
        TqdParams::make({3}, {1}),
        TqdParams::make({3}, {2}),
        TqdParams::make({2, 2}, {1, 0}, {{0, 1, 1}}),
        TqdParams::make({2, 2}, {1, 1}, {{0, 1, 1}}),
        TqdParams::make({2, 4}, {1, 3}, {{0, 1, 1}}),
        TqdParams::make({2, 3}, {1, 2}),
    };
    for (const auto &params : cases) {
        auto tqd = build_tqd(params, 2, 3);
        EXPECT_TRUE(assert_commuting(tqd.group).empty()) << params.str();
        EXPECT_EQ(logical_dimension(tqd.group), BigInt(product_of_squares(params.N))) << params.str();
        auto stack = build_stacked_tc(params.N, 2, 3);
        auto condensed = measure(stack.group, tqd_edge_terms(stack.lattice, params));
        EXPECT_TRUE(compare_groups(condensed, tqd.group).equal) << params.str();
    }
}

TEST(Lattice, SptGroupIsUniqueAndEqualsGaugedDoubleSemion) {
    for (int64_t L : {2, 3}) {
        auto spt = build_spt(L, L);
        EXPECT_TRUE(assert_commuting(spt.group).empty());
        EXPECT_EQ(logical_dimension(spt.group), BigInt(1));

        auto all_x = PauliOperator::identity(spt.lattice.system());
        for (int64_t y = 0; y < L; y++) {
            for (int64_t x = 0; x < L; x++) {
                all_x = multiply(all_x, PauliOperator::single(spt.lattice.system(), spt.lattice.vertex(x, y),
                                                              PauliKind::X, 1));
            }
        }
        EXPECT_TRUE(commutes_with_all(spt.group, all_x));

        auto ds_hat = build_ds_with_vertex_qubits(L, L);
        EXPECT_EQ(logical_dimension(ds_hat.group), BigInt(4));
        auto gauged = measure(ds_hat.group, spt_gauss_terms(ds_hat.lattice));
        EXPECT_TRUE(compare_groups(gauged, spt.group).equal) << "L=" << L;
    }
}

TEST(Lattice, ChargeLoopAroundPlaquetteIsThePlaquetteTerm) {
    auto ds = build_ds(3, 3);
    const auto &B = ds.families.at("B");
    for (int64_t y = 0; y < 3; y++) {
        for (int64_t x = 0; x < 3; x++) {
            auto loop = string_operator(ds, ds.label("ssbar"), PathSpec::direct(x, y, "ENWS", true));
            EXPECT_EQ(loop, B[(size_t)(y * 3 + x)]);
        }
    }
}

TEST(Lattice, SemionLoopAroundVertexIsTheVertexTerm) {
    auto ds = build_ds(4, 4);
    const auto &A = ds.families.at("A");
    for (int64_t b = 0; b < 4; b++) {
        for (int64_t a = 0; a < 4; a++) {
            auto loop = string_operator(ds, ds.label("s"), PathSpec::dual(a, b - 1, "NWSE", true));
            EXPECT_TRUE(loop.same_up_to_phase(A[(size_t)(b * 4 + a)])) << loop.str();
            EXPECT_NE(member_with_phase(ds.group, loop).verdict, Verdict::NotMember);
        }
    }
}

TEST(Lattice, BareChargeStringIsConfinedInDoubleSemion) {
    auto ds = build_ds(3, 3);
    Label e{{1}, {0}};
    EXPECT_FALSE(ds.deconfined(e));
    auto loop = string_operator(ds, e, PathSpec::direct(0, 0, "EEE", true));
    EXPECT_FALSE(commutes_with_all(ds.group, loop));
    bool some_c_fails = false;
    for (const auto &c : ds.families.at("C")) {
        some_c_fails = some_c_fails || !commutes(c, loop);
    }
    EXPECT_TRUE(some_c_fails);
}

TEST(Lattice, ClosedLoopsCommuteExactlyForDeconfinedLabels) {
    std::vector<LatticeModel> models;
    models.push_back(build_ds(3, 3));
    models.push_back(build_tqd(TqdParams::make({2, 2}, {1, 0}, {{0, 1, 1}}), 3, 3));
    models.push_back(build_tqd(TqdParams::make({3}, {1}), 3, 3));
    for (const auto &model : models) {
        int deconfined = 0;
        for (const auto &l : all_labels(model.layer_dims())) {
            bool ok = true;
            for (const auto &path : {horizontal_loop(model.lattice, 1), vertical_loop(model.lattice, 2),
                                     PathSpec::dual(0, 0, "NWSE", true)}) {
                ok = ok && commutes_with_all(model.group, string_operator(model, l, path));
            }
            EXPECT_EQ(ok, model.deconfined(l)) << model.params.str() << " " << l.str();
            deconfined += ok;
        }
        // Deconfined labels: prod N_i^2 anyon types, each with prod N_i condensed representatives.
        int64_t n3 = product_of_squares(model.params.N);
        for (int64_t n : model.params.N) {
            n3 *= n;
        }
        EXPECT_EQ(deconfined, n3) << model.params.str();
    }
}

TEST(Lattice, NamedLabelsAreDeconfined) {
    auto ds = build_ds(3, 3);
    for (const char *name : {"s", "sbar", "ssbar", "c1", "phi1", "s*sbar", "s^2"}) {
        EXPECT_TRUE(ds.deconfined(ds.label(name))) << name;
    }
    EXPECT_EQ(ds.label("s*sbar"), ds.label("ssbar"));
    EXPECT_EQ(ds.label("phi1"), ds.label("s"));
    auto tqd = build_tqd(TqdParams::make({2, 4}, {1, 3}, {{0, 1, 1}}), 3, 3);
    for (const char *name : {"c1", "c2", "phi1", "phi2"}) {
        EXPECT_TRUE(tqd.deconfined(tqd.label(name))) << name;
    }
    EXPECT_THROW(ds.label("zz"), std::invalid_argument);
}

TEST(Lattice, GroupsAreTranslationInvariant) {
    std::vector<LatticeModel> models;
    models.push_back(build_ds(3, 4));
    models.push_back(build_spt(3, 3));
    models.push_back(build_tqd(TqdParams::make({2, 4}, {1, 3}, {{0, 1, 1}}), 3, 3));
    for (const auto &model : models) {
        MembershipOracle oracle(model.group);
        for (const auto &g : model.group.generators()) {
            for (auto [dx, dy] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 3}}) {
                EXPECT_EQ(oracle.query(model.lattice.translate(g, dx, dy)).verdict, Verdict::Member);
            }
        }
    }
}

TEST(Lattice, OpenStringsOnlyViolateTermsNearTheirEnds) {
    auto ds = build_ds(5, 5);
    auto s = string_operator(ds, ds.label("s"), PathSpec::dual(0, 2, "EEE"));
    int violated = 0;
    for (const auto &g : ds.group.generators()) {
        if (!commutes(g, s)) {
            violated++;
            for (size_t site : g.support()) {
                auto info = ds.lattice.describe(site);
                int64_t x = info.x;
                EXPECT_TRUE(x <= 2 || x >= 3) << g.str();
                EXPECT_TRUE(std::abs(info.y - 2) <= 2);
            }
        }
    }
    EXPECT_GT(violated, 0);
}

TEST(Lattice, ParameterValidation) {
    EXPECT_THROW(TqdParams::make({6}, {0}), std::invalid_argument);
    EXPECT_THROW(TqdParams::make({4, 2}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(TqdParams::make({2}, {2}), std::invalid_argument);
    EXPECT_THROW(TqdParams::make({2, 3}, {0, 0}, {{0, 1, 1}}), std::invalid_argument);
    EXPECT_NO_THROW(TqdParams::make({2, 4}, {1, 3}, {{0, 1, 1}}));
    EXPECT_THROW(TorusLattice(1, 3, {4}), std::invalid_argument);
    auto ds = build_ds(3, 3);
    EXPECT_THROW(string_operator(ds, ds.label("s"), PathSpec::direct(0, 0, "E")), std::invalid_argument);
    EXPECT_THROW(string_operator(ds, ds.label("s"), PathSpec::dual(0, 0, "E", true)), std::invalid_argument);
}
