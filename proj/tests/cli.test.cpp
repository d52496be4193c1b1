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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tqd/anyon.hpp"
#include "tqd/cli.hpp"
#include "tqd/lattice.hpp"
#include "tqd/serialize.hpp"
#include "tqd/stabilizer.hpp"

using namespace tqd;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
    json report() const {
        return json::parse(out);
    }
};

Outcome run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() {
        path_ = std::filesystem::temp_directory_path() /
                ("tqdstab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::filesystem::remove_all(path_);
    }
    std::string write(const std::string &name, const std::string &text) const {
        auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string &name) const {
        return (path_ / name).string();
    }
    static std::string read(const std::string &path) {
        std::ifstream in(path);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

   private:
    std::filesystem::path path_;
};

std::multiset<std::string> theta_values(const json &report) {
    std::multiset<std::string> out;
    for (const auto &row : report.at("theta_table")) {
        out.insert(row.at("theta").get<std::string>());
    }
    return out;
}

}  // namespace

TEST(Cli, TheoryTqdDoubleSemionSpins) {
    auto r = run_cli({"theory", "tqd", "--N", "2", "--n", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = r.report();
    // theta in {1, i, -i, 1}: exponents 0, 1/4, 3/4, 0 of a full turn.
    EXPECT_EQ(theta_values(rep), (std::multiset<std::string>{"0/1", "0/1", "1/4", "3/4"}));
    EXPECT_EQ(rep.at("orders"), json({2, 2}));
    EXPECT_EQ(rep.at("command"), "theory tqd");
    EXPECT_TRUE(rep.at("pass").get<bool>());
}

TEST(Cli, VerifyDegeneracyFromSpecFile) {
    TempDir dir;
    auto spec = dir.write("ds_3x3.json", R"({"type": "ds", "Lx": 3, "Ly": 3})");
    auto out = dir.path("report.json");
    auto r = run_cli({"verify", "degeneracy", "--spec", spec, "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto rep = json::parse(TempDir::read(out));
    EXPECT_EQ(rep.at("logical_dimension"), 4);
    EXPECT_TRUE(rep.at("pass").get<bool>());

    auto echoed = run_cli({"verify", "degeneracy", "--spec", spec, "--out", out, "--json"});
    EXPECT_EQ(echoed.out, TempDir::read(out));
}

TEST(Cli, ModelBuildRejectsCouplingOutsideGcdRange) {
    // gcd(2, 2) = 2, so n_12 = 2 is out of range.
    auto r = run_cli({"model", "build", "--N", "2,2", "--n", "0,0", "--nij", "1,2,2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("n_ij"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, MalformedInputsExitWithUsageError) {
    TempDir dir;
    auto broken = dir.write("broken.json", "{\"type\": \"ds\",");
    auto unknown_type = dir.write("u.json", R"({"type": "ising"})");
    auto unknown_field = dir.write("f.json", R"({"type": "ds", "colour": 1})");
    auto bad_n = dir.write("n.json", R"({"type": "tqd", "N": [2], "n": [5]})");
    auto not_prime_power = dir.write("p.json", R"({"type": "tqd", "N": [6], "n": [0]})");
    for (const auto &path : {broken, unknown_type, unknown_field, bad_n, not_prime_power, dir.path("missing.json")}) {
        auto r = run_cli({"verify", "commuting", "--spec", path});
        EXPECT_EQ(r.code, 2) << path;
        EXPECT_FALSE(r.err.empty()) << path;
    }
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "entropy", "--type", "ds"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "degeneracy"}).code, 2);
    EXPECT_EQ(run_cli({"theory", "tqd", "--N", "2,x"}).code, 2);
    EXPECT_EQ(run_cli({"theory", "tqd", "--type", "tc", "--N", "2"}).code, 2);
    EXPECT_EQ(run_cli({"model", "build", "--N", "2,2", "--nij", "1,1,1"}).code, 2);
    EXPECT_EQ(run_cli({"anyons", "extract", "--type", "spt"}).code, 2);
    EXPECT_EQ(run_cli({"kmatrix", "transform", "--N", "2", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, ModelBuildEmitsTheBuiltGroup) {
    auto r = run_cli({"model", "build", "--type", "ds", "--L", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = r.report();
    auto group = io::group_from_json(rep.at("group"));
    auto ds = build_ds(2, 2);
    EXPECT_EQ(group.system()->dims(), ds.group.system()->dims());
    EXPECT_TRUE(compare_groups(group, ds.group).equal);
    EXPECT_EQ(rep.at("legend").at("site_names").size(), ds.lattice.system()->size());
    EXPECT_EQ(rep.at("generator_family").size(), ds.group.size());
}

TEST(Cli, ReportsAreByteForByteDeterministic) {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"theory", "tqd", "--N", "2,2", "--n", "1,0", "--nij", "1,2,1"},
          std::vector<std::string>{"kmatrix", "census", "--N", "2", "--n", "1"},
          std::vector<std::string>{"anyons", "extract", "--type", "tc", "--N", "3"}}) {
        auto a = run_cli(args);
        auto b = run_cli(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, VerificationFailuresExitWithOne) {
    EXPECT_EQ(run_cli({"verify", "degeneracy", "--type", "ds", "--expect", "5"}).code, 1);
    TempDir dir;
    auto tc = dir.write("tc.json", io::theory_json(zn_toric_code_theory(2)).dump());
    auto r = run_cli({"theory", "iso", "--N", "2", "--n", "1", "--with", tc});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.report().at("isomorphic").get<bool>());
    auto same = run_cli({"theory", "iso", "--N", "2", "--n", "0", "--with", tc});
    EXPECT_EQ(same.code, 0);
}

TEST(Cli, VerifyChecksOnTwistedModels) {
    std::vector<std::string> base = {"--N", "2,2", "--n", "1,1", "--nij", "1,2,1", "--L", "2"};
    for (const std::string check : {"commuting", "scalar", "degeneracy", "condensation-equality"}) {
        std::vector<std::string> args = {"verify", check};
        args.insert(args.end(), base.begin(), base.end());
        auto r = run_cli(args);
        EXPECT_EQ(r.code, 0) << check << ": " << r.err;
    }
    auto deg = run_cli({"verify", "degeneracy", "--N", "2,2", "--n", "1,1", "--nij", "1,2,1", "--L", "2"});
    EXPECT_EQ(deg.report().at("logical_dimension"), 16);
    EXPECT_EQ(run_cli({"verify", "condensation-equality", "--type", "spt", "--L", "2"}).code, 0);
    EXPECT_EQ(run_cli({"verify", "degeneracy", "--type", "spt", "--L", "2"}).report().at("logical_dimension"), 1);
}

TEST(Cli, AnyonsExtractMatchesTarget) {
    auto r = run_cli({"anyons", "extract", "--type", "tc", "--N", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto rep = r.report();
    EXPECT_TRUE(rep.at("iso_match").get<bool>());
    EXPECT_EQ(rep.at("theta").at("e"), "0/1");
    EXPECT_EQ(rep.at("fusion_orders").at("m"), 4);
    EXPECT_EQ(rep.at("braiding")[0][1], "1/4");

    auto ds = run_cli({"anyons", "extract", "--type", "ds", "--labels", "s,sbar"});
    ASSERT_EQ(ds.code, 0) << ds.err;
    EXPECT_EQ(ds.report().at("theta").at("s"), "1/4");
    EXPECT_EQ(ds.report().at("theta").at("sbar"), "3/4");
}

TEST(Cli, TheoryActions) {
    TempDir dir;
    auto tc2 = dir.write("tc2.json", io::theory_json(zn_toric_code_theory(2)).dump());
    auto ds = dir.write("ds.json", io::theory_json(tqd_theory(TqdParams::make({2}, {1}))).dump());

    auto lag = run_cli({"theory", "lagrangian", "--theory", tc2});
    ASSERT_EQ(lag.code, 0) << lag.err;
    EXPECT_EQ(lag.report().at("count"), 2);  // the e and m condensates
    EXPECT_EQ(run_cli({"theory", "lagrangian", "--theory", ds}).report().at("count"), 1);

    auto st = run_cli({"theory", "stack", "--theory", tc2, "--with", ds});
    ASSERT_EQ(st.code, 0) << st.err;
    EXPECT_EQ(st.report().at("size"), 16);

    // Condensing e in the Z_2 toric code leaves the trivial theory.
    auto cond = run_cli({"theory", "condense", "--theory", tc2, "--bosons", "1,0"});
    ASSERT_EQ(cond.code, 0) << cond.err;
    EXPECT_EQ(cond.report().at("size"), 1);
    // The semion is not a boson.
    EXPECT_EQ(run_cli({"theory", "condense", "--theory", ds, "--bosons", "0,1"}).code, 2);

    auto fg = run_cli({"theory", "fusion-group", "--N", "2,2", "--n", "0,0", "--nij", "1,2,1"});
    ASSERT_EQ(fg.code, 0) << fg.err;
    EXPECT_EQ(fg.report().at("invariant_factors"), json({4, 4}));

    auto cc = run_cli({"theory", "cocycle", "--N", "2", "--n", "1", "--triple", "1;1;1"});
    ASSERT_EQ(cc.code, 0) << cc.err;
    EXPECT_EQ(cc.report().at("value"), "1/2");
}

TEST(Cli, KMatrixActions) {
    auto six = run_cli({"kmatrix", "census", "--N", "2,2,2", "--n", "1,1,1", "--nij", "1,2,1;1,3,1;2,3,1"});
    ASSERT_EQ(six.code, 0) << six.err;
    auto b = run_cli({"kmatrix", "build", "--type", "ds"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(b.report().at("K"), json({{0, 2}, {2, -2}}));
    EXPECT_EQ(b.report().at("group"), json({2, 2}));
    EXPECT_EQ(b.report().at("signature"), 0);

    EXPECT_EQ(run_cli({"kmatrix", "condense-check", "--N", "2,4", "--n", "1,3", "--nij", "1,2,1"}).code, 0);

    auto tr = run_cli({"kmatrix", "transform", "--N", "2,2", "--n", "0,0", "--nij", "1,2,1", "--W",
                       "1,0,0,2;0,1,2,0;0,0,0,1;0,0,-1,0", "--target", "0,4,0,0;4,0,0,0;0,0,0,1;0,0,1,0"});
    ASSERT_EQ(tr.code, 0) << tr.err;
    EXPECT_TRUE(tr.report().at("matches_target").get<bool>());
    // Non-unimodular W is a usage error.
    EXPECT_EQ(run_cli({"kmatrix", "transform", "--K", "0,2;2,0", "--W", "2,0;0,1"}).code, 2);

    auto e8 = run_cli({"kmatrix", "build", "--K",
                       "2,-1,0,0,0,0,0,0;-1,2,-1,0,0,0,0,0;0,-1,2,-1,0,0,0,-1;0,0,-1,2,-1,0,0,0;"
                       "0,0,0,-1,2,-1,0,0;0,0,0,0,-1,2,-1,0;0,0,0,0,0,-1,2,0;0,0,-1,0,0,0,0,2"});
    ASSERT_EQ(e8.code, 0) << e8.err;
    EXPECT_EQ(e8.report().at("signature"), 8);
    EXPECT_EQ(e8.report().at("size"), 1);
}

TEST(Cli, SptCocycleAndAppendixA) {
    auto spt = run_cli({"spt", "cocycle", "--ell", "4"});
    ASSERT_EQ(spt.code, 0) << spt.err;
    auto rep = spt.report();
    EXPECT_EQ(rep.at("omega_111"), "1/2");
    EXPECT_TRUE(rep.at("cocycle_condition").get<bool>());
    EXPECT_EQ(rep.at("omega").size(), 8u);

    auto app = run_cli({"appendixa", "check"});
    ASSERT_EQ(app.code, 0) << app.err;
    auto a = app.report();
    for (const char *key : {"psi_identity", "table1", "ucx_terms", "uab_ce"}) {
        EXPECT_EQ(a.at(key), "pass") << key;
    }
    EXPECT_EQ(a.at("configurations"), 512);
}

TEST(Cli, TheoryJsonRoundTrips) {
    auto t = tqd_theory(TqdParams::make({2, 4}, {1, 3}, {{0, 1, 1}}));
    auto back = io::theory_from_json(io::theory_json(t));
    EXPECT_EQ(back.group().orders, t.group().orders);
    EXPECT_EQ(back.q_gen(), t.q_gen());
    EXPECT_EQ(back.b_gen(), t.b_gen());
    EXPECT_EQ(io::rational_text(Rational01()), "0/1");
    EXPECT_EQ(io::parse_rational(json("3/4")), Rational01(3, 4));
    EXPECT_THROW(io::parse_rational(json("x/4")), std::invalid_argument);
    // q(g) must be compatible with the generator order.
    EXPECT_THROW(io::theory_from_json(json{{"orders", {2}}, {"q_gen", {"1/3"}}, {"b_gen", {{"0/1"}}}}),
                 std::invalid_argument);
}
