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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tqd/exactmath.hpp"

namespace tqd {

// A register of qudits with per-site dimensions.  D is the lcm of all
// dimensions; phases of operators on the system are multiples of e^{pi i/D}.
class QuditSystem {
   public:
    explicit QuditSystem(std::vector<int64_t> dims);

    size_t size() const {
        return dims_.size();
    }
    int64_t dim(size_t site) const {
        return dims_.at(site);
    }
    const std::vector<int64_t> &dims() const {
        return dims_;
    }
    int64_t D() const {
        return D_;
    }
    bool operator==(const QuditSystem &other) const {
        return dims_ == other.dims_;
    }

   private:
    std::vector<int64_t> dims_;
    int64_t D_ = 1;
};

using SystemPtr = std::shared_ptr<const QuditSystem>;
SystemPtr make_system(std::vector<int64_t> dims);

enum class PauliKind { X, Z };

// phase * prod_q X_q^{x_q} Z_q^{z_q}, each site in X-then-Z order, sites in
// increasing index order.  The phase is stored as an exponent of e^{pi i/D}
// reduced mod 2D.  Exponent maps only hold nonzero entries.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(SystemPtr system);

    static PauliOperator identity(SystemPtr system);
    static PauliOperator single(SystemPtr system, size_t site, PauliKind kind, int64_t exponent);

    const SystemPtr &system() const {
        return system_;
    }
    int64_t phase() const {
        return phase_;
    }
    const std::map<size_t, int64_t> &x() const {
        return x_;
    }
    const std::map<size_t, int64_t> &z() const {
        return z_;
    }
    int64_t x_at(size_t site) const;
    int64_t z_at(size_t site) const;

    // Sets entries (reducing into range); mainly for deserialisation and tests.
    void set_phase(int64_t phase);
    void set_x(size_t site, int64_t exponent);
    void set_z(size_t site, int64_t exponent);

    bool is_identity_up_to_phase() const {
        return x_.empty() && z_.empty();
    }
    // Sites carrying a nonzero X or Z exponent.
    std::vector<size_t> support() const;

    bool operator==(const PauliOperator &other) const;
    bool operator!=(const PauliOperator &other) const {
        return !(*this == other);
    }
    // Same operator up to a global phase.
    bool same_up_to_phase(const PauliOperator &other) const;

    // Multiplies the stored phase by e^{2 pi i r}; r must be a multiple of 1/(2D).
    PauliOperator with_added_phase(const Rational01 &r) const;
    // The global phase as a fraction of a full turn.
    Rational01 phase_turns() const;

    // Canonical text form, e.g. "i * X[3]^2 Z[7]^1"; see README for grammar.
    std::string str() const;

   private:
    SystemPtr system_;
    int64_t phase_ = 0;
    std::map<size_t, int64_t> x_;
    std::map<size_t, int64_t> z_;
};

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
PauliOperator power(const PauliOperator &p, int64_t k);
PauliOperator adjoint(const PauliOperator &p);
// phi such that P Q = e^{2 pi i phi} Q P.
Rational01 commutation_phase(const PauliOperator &p, const PauliOperator &q);
bool commutes(const PauliOperator &p, const PauliOperator &q);

PauliOperator parse_pauli(SystemPtr system, const std::string &text);

enum class GateKind { QuditCX, QubitCZ, QubitS, QubitCXab };

struct CliffordGate {
    GateKind kind;
    size_t a;       // control / first site
    size_t b = 0;   // target / second site (unused for QubitS)
};

// U P U^dagger for U = gates applied in sequence (first gate acts first).
PauliOperator conjugate(const PauliOperator &p, const std::vector<CliffordGate> &circuit);

}  // namespace tqd
