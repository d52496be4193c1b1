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

#include "tqd/stabilizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tqd {

StabilizerGroup::StabilizerGroup(SystemPtr system, std::vector<PauliOperator> generators)
    : system_(std::move(system)), generators_(std::move(generators)) {
    for (const auto &g : generators_) {
        if (!(*g.system() == *system_)) {
            throw std::invalid_argument("generator acts on a different qudit system");
        }
    }
    auto bad = assert_commuting(*this);
    if (!bad.empty()) {
        throw std::invalid_argument("stabilizer generators " + std::to_string(bad[0].first) + " and " +
                                    std::to_string(bad[0].second) + " do not commute");
    }
}

StabilizerGroup StabilizerGroup::candidate(SystemPtr system, std::vector<PauliOperator> generators) {
    StabilizerGroup s;
    s.system_ = std::move(system);
    s.generators_ = std::move(generators);
    return s;
}

std::vector<std::pair<size_t, size_t>> assert_commuting(const StabilizerGroup &s) {
    std::vector<std::pair<size_t, size_t>> out;
    const auto &g = s.generators();
    // Bucket generators by site so only overlapping pairs are compared.
    std::vector<std::vector<size_t>> by_site(s.system()->size());
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t site : g[i].support()) {
            by_site[site].push_back(i);
        }
    }
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto &bucket : by_site) {
        for (size_t a = 0; a < bucket.size(); a++) {
            for (size_t b = a + 1; b < bucket.size(); b++) {
                std::pair<size_t, size_t> key{bucket[a], bucket[b]};
                if (seen.insert(key).second && !commutes(g[key.first], g[key.second])) {
                    out.push_back(key);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<size_t> group_support(const StabilizerGroup &s) {
    std::set<size_t> sites;
    for (const auto &g : s.generators()) {
        for (size_t q : g.support()) {
            sites.insert(q);
        }
    }
    return {sites.begin(), sites.end()};
}

// Rows (x_q, z_q) for each support site q; one column per generator.
IntMatrix symplectic_matrix(const StabilizerGroup &s, const std::vector<size_t> &sites) {
    IntMatrix m(2 * sites.size(), s.size());
    for (size_t j = 0; j < s.size(); j++) {
        const auto &g = s.generators()[j];
        for (size_t k = 0; k < sites.size(); k++) {
            m.at(2 * k, j) = g.x_at(sites[k]);
            m.at(2 * k + 1, j) = g.z_at(sites[k]);
        }
    }
    return m;
}

std::vector<int64_t> row_moduli(const StabilizerGroup &s, const std::vector<size_t> &sites) {
    std::vector<int64_t> out;
    for (size_t q : sites) {
        out.push_back(s.system()->dim(q));
        out.push_back(s.system()->dim(q));
    }
    return out;
}

void require_commuting(const StabilizerGroup &s, const char *what) {
    if (!assert_commuting(s).empty()) {
        throw std::invalid_argument(std::string(what) + " requires commuting generators");
    }
}

}  // namespace

BigInt group_order(const StabilizerGroup &s) {
    require_commuting(s, "group_order");
    auto sites = group_support(s);
    if (sites.empty()) {
        return 1;
    }
    IntMatrix g = symplectic_matrix(s, sites);
    auto moduli = row_moduli(s, sites);
    IntMatrix aug(g.rows(), g.cols() + g.rows());
    BigInt ambient = 1;
    for (size_t r = 0; r < g.rows(); r++) {
        for (size_t c = 0; c < g.cols(); c++) {
            aug.at(r, c) = g.at(r, c);
        }
        aug.at(r, g.cols() + r) = moduli[r];
        ambient *= moduli[r];
    }
    BigInt coker = 1;
    for (const auto &d : smith_normal_form(aug).diagonal()) {
        coker *= d;
    }
    return ambient / coker;
}

PauliOperator product_of_generators(const StabilizerGroup &s, const std::vector<int64_t> &coefficients) {
    PauliOperator out = PauliOperator::identity(s.system());
    for (size_t j = 0; j < coefficients.size(); j++) {
        if (coefficients[j] != 0) {
            out = multiply(out, power(s.generators()[j], coefficients[j]));
        }
    }
    return out;
}

ScalarConsistency scalar_consistency(const StabilizerGroup &s) {
    require_commuting(s, "scalar_consistency");
    ScalarConsistency result;
    auto check = [&](const std::vector<int64_t> &c) {
        PauliOperator p = product_of_generators(s, c);
        if (!p.is_identity_up_to_phase()) {
            throw std::logic_error("kernel vector does not multiply to a scalar");
        }
        if (p.phase() != 0) {
            result.consistent = false;
            result.coefficients = c;
            result.witness = p;
            return false;
        }
        return true;
    };
    auto sites = group_support(s);
    int64_t D = s.system()->D();
    // Powers g^D are always scalars; they complete the kernel lattice that the
    // solver reports modulo D.
    for (size_t j = 0; j < s.size(); j++) {
        std::vector<int64_t> c(s.size(), 0);
        c[j] = D;
        if (!check(c)) {
            return result;
        }
    }
    if (sites.empty()) {
        for (size_t j = 0; j < s.size(); j++) {
            std::vector<int64_t> c(s.size(), 0);
            c[j] = 1;
            if (!check(c)) {
                return result;
            }
        }
        return result;
    }
    LinearModSolver solver(symplectic_matrix(s, sites), row_moduli(s, sites));
    for (const auto &c : solver.kernel_basis()) {
        if (!check(c)) {
            return result;
        }
    }
    return result;
}

BigInt logical_dimension(const StabilizerGroup &s) {
    if (!scalar_consistency(s).consistent) {
        throw std::invalid_argument("logical_dimension of a scalar-inconsistent group");
    }
    BigInt total = 1;
    for (int64_t d : s.system()->dims()) {
        total *= d;
    }
    BigInt order = group_order(s);
    if (total % order != 0) {
        throw std::logic_error("group order does not divide the Hilbert space dimension");
    }
    return total / order;
}

const char *verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Member:
            return "Member";
        case Verdict::MemberUpToPhase:
            return "MemberUpToPhase";
        case Verdict::NotMember:
            return "NotMember";
    }
    return "?";
}

MembershipOracle::MembershipOracle(const StabilizerGroup &s) : group_(s) {
    sites_ = group_support(s);
    site_slot_.assign(s.system()->size(), -1);
    for (size_t k = 0; k < sites_.size(); k++) {
        site_slot_[sites_[k]] = (int64_t)k;
    }
    if (!sites_.empty()) {
        solver_.emplace(symplectic_matrix(s, sites_), row_moduli(s, sites_));
    }
}

MembershipResult MembershipOracle::query(const PauliOperator &p) const {
    MembershipResult result;
    for (size_t q : p.support()) {
        if (site_slot_.at(q) < 0) {
            return result;
        }
    }
    std::vector<int64_t> coefficients(group_.size(), 0);
    if (solver_) {
        std::vector<int64_t> b(2 * sites_.size(), 0);
        for (const auto &[q, e] : p.x()) {
            b[2 * site_slot_[q]] = e;
        }
        for (const auto &[q, e] : p.z()) {
            b[2 * site_slot_[q] + 1] = e;
        }
        auto x = solver_->solve(b);
        if (!x) {
            return result;
        }
        coefficients = *x;
    }
    PauliOperator built = product_of_generators(group_, coefficients);
    if (!built.same_up_to_phase(p)) {
        throw std::logic_error("membership solve produced a mismatched operator");
    }
    result.coefficients = coefficients;
    result.residual_phase = p.phase_turns() - built.phase_turns();
    result.verdict = result.residual_phase.is_zero() ? Verdict::Member : Verdict::MemberUpToPhase;
    return result;
}

MembershipResult member_with_phase(const StabilizerGroup &s, const PauliOperator &p) {
    return MembershipOracle(s).query(p);
}

StabilizerGroup centralizer_in_group(const StabilizerGroup &s, const std::vector<PauliOperator> &probes) {
    if (probes.empty() || s.size() == 0) {
        return s;
    }
    int64_t D = s.system()->D();
    // A[p][j] = D * phase(g_j, probe_p); we need A c == 0 (mod D).
    IntMatrix a(probes.size(), s.size());
    for (size_t p = 0; p < probes.size(); p++) {
        for (size_t j = 0; j < s.size(); j++) {
            Rational01 phi = commutation_phase(s.generators()[j], probes[p]);
            a.at(p, j) = phi.num() * (D / phi.den());
        }
    }
    LinearModSolver solver(a, std::vector<int64_t>(probes.size(), D));
    std::vector<PauliOperator> gens;
    for (const auto &c : solver.kernel_basis()) {
        PauliOperator g = product_of_generators(s, c);
        if (g.is_identity_up_to_phase() && g.phase() == 0) {
            continue;
        }
        gens.push_back(g);
    }
    return StabilizerGroup(s.system(), std::move(gens));
}

StabilizerGroup measure(const StabilizerGroup &s, const std::vector<PauliOperator> &ops) {
    auto check = StabilizerGroup::candidate(s.system(), ops);
    if (!assert_commuting(check).empty()) {
        throw std::invalid_argument("measured operators must commute");
    }
    StabilizerGroup cent = centralizer_in_group(s, ops);
    std::vector<PauliOperator> gens = cent.generators();
    gens.insert(gens.end(), ops.begin(), ops.end());
    return StabilizerGroup(s.system(), std::move(gens));
}

GroupComparison compare_groups(const StabilizerGroup &a, const StabilizerGroup &b) {
    GroupComparison out;
    bool phase_free = true;
    MembershipOracle in_b(b);
    for (size_t j = 0; j < a.size(); j++) {
        auto r = in_b.query(a.generators()[j]);
        if (r.verdict != Verdict::Member) {
            out.missing_from_second.push_back(j);
        }
        phase_free &= r.verdict != Verdict::NotMember;
    }
    MembershipOracle in_a(a);
    for (size_t j = 0; j < b.size(); j++) {
        auto r = in_a.query(b.generators()[j]);
        if (r.verdict != Verdict::Member) {
            out.missing_from_first.push_back(j);
        }
        phase_free &= r.verdict != Verdict::NotMember;
    }
    out.equal = out.missing_from_first.empty() && out.missing_from_second.empty();
    out.equal_up_to_phase = phase_free;
    return out;
}

}  // namespace tqd
