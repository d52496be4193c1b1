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

#include <optional>
#include <utility>
#include <vector>

#include "tqd/exactmath.hpp"
#include "tqd/pauli.hpp"

namespace tqd {

// A list of Pauli generators on a qudit system.  Constructed groups are
// checked for pairwise commutation unless built as an unchecked candidate
// set (used before measurement and for testing the commutation checker).
class StabilizerGroup {
   public:
    StabilizerGroup() = default;
    StabilizerGroup(SystemPtr system, std::vector<PauliOperator> generators);
    static StabilizerGroup candidate(SystemPtr system, std::vector<PauliOperator> generators);

    const SystemPtr &system() const {
        return system_;
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    size_t size() const {
        return generators_.size();
    }

   private:
    SystemPtr system_;
    std::vector<PauliOperator> generators_;
};

// Index pairs (i < j) of generators that fail to commute.
std::vector<std::pair<size_t, size_t>> assert_commuting(const StabilizerGroup &s);

// Order of the generated group modulo phases.
BigInt group_order(const StabilizerGroup &s);

struct ScalarConsistency {
    bool consistent = true;
    // For an inconsistent group: a coefficient vector whose ordered product of
    // generators is a nontrivial phase times the identity, and that product.
    std::vector<int64_t> coefficients;
    std::optional<PauliOperator> witness;
};
ScalarConsistency scalar_consistency(const StabilizerGroup &s);

// prod_q d_q / |S|; throws for non-commuting or scalar-inconsistent input.
BigInt logical_dimension(const StabilizerGroup &s);

enum class Verdict { Member, MemberUpToPhase, NotMember };
const char *verdict_name(Verdict v);

struct MembershipResult {
    std::vector<int64_t> coefficients;
    Rational01 residual_phase;  // query = e^{2 pi i r} * prod_j g_j^{c_j}
    Verdict verdict = Verdict::NotMember;
};

// The ordered product g_0^{c_0} g_1^{c_1} ... of generators.
PauliOperator product_of_generators(const StabilizerGroup &s, const std::vector<int64_t> &coefficients);

// Precomputed solver answering many membership queries against one group.
class MembershipOracle {
   public:
    explicit MembershipOracle(const StabilizerGroup &s);
    MembershipResult query(const PauliOperator &p) const;

   private:
    StabilizerGroup group_;
    std::vector<size_t> sites_;  // support of the generators
    std::vector<int64_t> site_slot_;
    std::optional<LinearModSolver> solver_;
};

MembershipResult member_with_phase(const StabilizerGroup &s, const PauliOperator &p);

// Generators of { g in <S> : g commutes with every probe }.
StabilizerGroup centralizer_in_group(const StabilizerGroup &s, const std::vector<PauliOperator> &probes);

// <centralizer_in_group(S, ops), ops>, assuming +1 outcomes.
StabilizerGroup measure(const StabilizerGroup &s, const std::vector<PauliOperator> &ops);

struct GroupComparison {
    bool equal = false;            // mutual exact (phase-including) membership
    bool equal_up_to_phase = false;  // mutual membership ignoring phases
    std::vector<size_t> missing_from_second;  // generators of the first not Member of the second
    std::vector<size_t> missing_from_first;
};
GroupComparison compare_groups(const StabilizerGroup &a, const StabilizerGroup &b);

}  // namespace tqd
