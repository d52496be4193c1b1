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

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace tqd {

QuditSystem::QuditSystem(std::vector<int64_t> dims) : dims_(std::move(dims)) {
    for (int64_t d : dims_) {
        if (d < 1) {
            throw std::invalid_argument("qudit dimension must be positive");
        }
        D_ = std::lcm(D_, d);
    }
}

SystemPtr make_system(std::vector<int64_t> dims) {
    return std::make_shared<const QuditSystem>(std::move(dims));
}

namespace {

void require_same_system(const PauliOperator &p, const PauliOperator &q) {
    if (p.system() != q.system() && !(p.system() && q.system() && *p.system() == *q.system())) {
        throw std::invalid_argument("Pauli operators act on different qudit systems");
    }
}

void put(std::map<size_t, int64_t> &m, size_t site, int64_t value) {
    if (value == 0) {
        m.erase(site);
    } else {
        m[site] = value;
    }
}

}  // namespace

PauliOperator::PauliOperator(SystemPtr system) : system_(std::move(system)) {
}

PauliOperator PauliOperator::identity(SystemPtr system) {
    return PauliOperator(std::move(system));
}

PauliOperator PauliOperator::single(SystemPtr system, size_t site, PauliKind kind, int64_t exponent) {
    PauliOperator p(std::move(system));
    if (site >= p.system_->size()) {
        throw std::out_of_range("Pauli site index out of range");
    }
    if (kind == PauliKind::X) {
        p.set_x(site, exponent);
    } else {
        p.set_z(site, exponent);
    }
    return p;
}

int64_t PauliOperator::x_at(size_t site) const {
    auto it = x_.find(site);
    return it == x_.end() ? 0 : it->second;
}

int64_t PauliOperator::z_at(size_t site) const {
    auto it = z_.find(site);
    return it == z_.end() ? 0 : it->second;
}

void PauliOperator::set_phase(int64_t phase) {
    phase_ = mod(phase, 2 * system_->D());
}

void PauliOperator::set_x(size_t site, int64_t exponent) {
    if (site >= system_->size()) {
        throw std::out_of_range("Pauli site index out of range");
    }
    put(x_, site, mod(exponent, system_->dim(site)));
}

void PauliOperator::set_z(size_t site, int64_t exponent) {
    if (site >= system_->size()) {
        throw std::out_of_range("Pauli site index out of range");
    }
    put(z_, site, mod(exponent, system_->dim(site)));
}

std::vector<size_t> PauliOperator::support() const {
    std::vector<size_t> out;
    auto xi = x_.begin();
    auto zi = z_.begin();
    while (xi != x_.end() || zi != z_.end()) {
        if (zi == z_.end() || (xi != x_.end() && xi->first < zi->first)) {
            out.push_back((xi++)->first);
        } else if (xi == x_.end() || zi->first < xi->first) {
            out.push_back((zi++)->first);
        } else {
            out.push_back(xi->first);
            ++xi;
            ++zi;
        }
    }
    return out;
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return phase_ == other.phase_ && same_up_to_phase(other);
}

bool PauliOperator::same_up_to_phase(const PauliOperator &other) const {
    return x_ == other.x_ && z_ == other.z_ && (system_ == other.system_ || *system_ == *other.system_);
}

PauliOperator PauliOperator::with_added_phase(const Rational01 &r) const {
    int64_t twoD = 2 * system_->D();
    if ((twoD * r.num()) % r.den() != 0) {
        throw std::invalid_argument("phase not representable on this qudit system");
    }
    PauliOperator out = *this;
    out.set_phase(phase_ + twoD * r.num() / r.den());
    return out;
}

Rational01 PauliOperator::phase_turns() const {
    return Rational01(phase_, 2 * system_->D());
}

std::string PauliOperator::str() const {
    std::stringstream out;
    Rational01 turns = phase_turns();
    bool wrote = false;
    if (!turns.is_zero()) {
        if (turns == Rational01(1, 2)) {
            out << "-1";
        } else if (turns == Rational01(1, 4)) {
            out << "i";
        } else if (turns == Rational01(3, 4)) {
            out << "-i";
        } else {
            out << "exp(2pi i " << turns.str() << ")";
        }
        out << " *";
        wrote = true;
    }
    if (x_.empty() && z_.empty()) {
        out << (wrote ? " I" : "I");
        return out.str();
    }
    for (size_t site : support()) {
        int64_t xe = x_at(site);
        int64_t ze = z_at(site);
        if (xe) {
            out << (wrote ? " " : "") << "X[" << site << "]^" << xe;
            wrote = true;
        }
        if (ze) {
            out << (wrote ? " " : "") << "Z[" << site << "]^" << ze;
            wrote = true;
        }
    }
    return out.str();
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    require_same_system(p, q);
    const QuditSystem &sys = *p.system();
    int64_t D = sys.D();
    PauliOperator out = p;
    int64_t phase = p.phase() + q.phase();
    // Moving Z_s^{z} (from p) past X_s^{x'} (from q) gives e^{2 pi i z x'/d}.
    for (const auto &[site, xe] : q.x()) {
        int64_t ze = p.z_at(site);
        if (ze) {
            int64_t d = sys.dim(site);
            phase += 2 * (D / d) * mod(ze * xe, d);
        }
        out.set_x(site, p.x_at(site) + xe);
    }
    for (const auto &[site, ze] : q.z()) {
        out.set_z(site, p.z_at(site) + ze);
    }
    out.set_phase(phase);
    return out;
}

PauliOperator power(const PauliOperator &p, int64_t k) {
    if (k < 0) {
        return power(adjoint(p), -k);
    }
    PauliOperator result = PauliOperator::identity(p.system());
    PauliOperator base = p;
    while (k > 0) {
        if (k & 1) {
            result = multiply(result, base);
        }
        k >>= 1;
        if (k) {
            base = multiply(base, base);
        }
    }
    return result;
}

PauliOperator adjoint(const PauliOperator &p) {
    // (w X^x Z^z)^dagger = w^{-1} Z^{-z} X^{-x} = w^{-1} e^{2 pi i z x/d} X^{-x} Z^{-z}.
    const QuditSystem &sys = *p.system();
    PauliOperator out(p.system());
    int64_t phase = -p.phase();
    for (const auto &[site, xe] : p.x()) {
        int64_t ze = p.z_at(site);
        if (ze) {
            int64_t d = sys.dim(site);
            phase += 2 * (sys.D() / d) * mod(ze * xe, d);
        }
        out.set_x(site, -xe);
    }
    for (const auto &[site, ze] : p.z()) {
        out.set_z(site, -ze);
    }
    out.set_phase(phase);
    return out;
}

Rational01 commutation_phase(const PauliOperator &p, const PauliOperator &q) {
    require_same_system(p, q);
    const QuditSystem &sys = *p.system();
    int64_t D = sys.D();
    // P Q = e^{2 pi i sum_s (z_s x'_s - x_s z'_s)/d_s} Q P.
    int64_t acc = 0;
    for (const auto &[site, xe] : q.x()) {
        int64_t ze = p.z_at(site);
        if (ze) {
            acc += (D / sys.dim(site)) * ze * xe;
        }
    }
    for (const auto &[site, ze] : q.z()) {
        int64_t xe = p.x_at(site);
        if (xe) {
            acc -= (D / sys.dim(site)) * xe * ze;
        }
    }
    return Rational01(acc, D);
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    return commutation_phase(p, q).is_zero();
}

PauliOperator parse_pauli(SystemPtr system, const std::string &text) {
    PauliOperator out = PauliOperator::identity(system);
    std::string body = text;
    auto star = body.find('*');
    if (star != std::string::npos) {
        std::string phase = body.substr(0, star);
        body = body.substr(star + 1);
        phase.erase(0, phase.find_first_not_of(' '));
        phase.erase(phase.find_last_not_of(' ') + 1);
        Rational01 turns;
        std::smatch m;
        if (phase == "-1") {
            turns = Rational01(1, 2);
        } else if (phase == "i") {
            turns = Rational01(1, 4);
        } else if (phase == "-i") {
            turns = Rational01(3, 4);
        } else if (phase == "1") {
            turns = Rational01();
        } else if (std::regex_match(phase, m, std::regex(R"(exp\(2pi i (-?\d+(?:/\d+)?)\))"))) {
            turns = Rational01::from_string(m[1]);
        } else {
            throw std::invalid_argument("unrecognised phase '" + phase + "'");
        }
        out = out.with_added_phase(turns);
    }
    std::regex factor(R"(\s*([XZI])(?:\[(\d+)\](?:\^(-?\d+))?)?)");
    auto begin = std::sregex_iterator(body.begin(), body.end(), factor);
    size_t consumed = 0;
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto &m = *it;
        if ((size_t)m.position() != consumed) {
            throw std::invalid_argument("malformed Pauli text '" + text + "'");
        }
        consumed += m.length();
        if (m[1] == "I") {
            continue;
        }
        if (!m[2].matched) {
            throw std::invalid_argument("Pauli factor missing site index in '" + text + "'");
        }
        size_t site = std::stoul(m[2]);
        int64_t e = m[3].matched ? std::stoll(m[3]) : 1;
        out = multiply(out, PauliOperator::single(system, site, m[1] == "X" ? PauliKind::X : PauliKind::Z, e));
    }
    if (body.find_first_not_of(' ', consumed) != std::string::npos) {
        throw std::invalid_argument("malformed Pauli text '" + text + "'");
    }
    return out;
}

namespace {

// Images of X_s and Z_s under a single gate, for the (at most two) sites it touches.
PauliOperator gate_image(const CliffordGate &g, size_t site, PauliKind kind, const SystemPtr &sys) {
    auto X = [&](size_t s, int64_t e = 1) { return PauliOperator::single(sys, s, PauliKind::X, e); };
    auto Z = [&](size_t s, int64_t e = 1) { return PauliOperator::single(sys, s, PauliKind::Z, e); };
    switch (g.kind) {
        case GateKind::QuditCX:
        case GateKind::QubitCXab:
            if (kind == PauliKind::X && site == g.a) {
                return multiply(X(g.a), X(g.b));
            }
            if (kind == PauliKind::Z && site == g.b) {
                return multiply(Z(g.a, -1), Z(g.b));
            }
            break;
        case GateKind::QubitCZ:
            if (kind == PauliKind::X && site == g.a) {
                return multiply(X(g.a), Z(g.b));
            }
            if (kind == PauliKind::X && site == g.b) {
                return multiply(Z(g.a), X(g.b));
            }
            break;
        case GateKind::QubitS:
            if (kind == PauliKind::X && site == g.a) {
                return multiply(X(g.a), Z(g.a)).with_added_phase(Rational01(1, 4));
            }
            break;
    }
    return kind == PauliKind::X ? X(site) : Z(site);
}

void validate_gate(const CliffordGate &g, const QuditSystem &sys) {
    if (g.a >= sys.size() || (g.kind != GateKind::QubitS && g.b >= sys.size())) {
        throw std::out_of_range("gate site index out of range");
    }
    if (g.kind != GateKind::QubitS && g.a == g.b) {
        throw std::invalid_argument("two-site gate needs distinct sites");
    }
    switch (g.kind) {
        case GateKind::QuditCX:
            if (sys.dim(g.a) != sys.dim(g.b)) {
                throw std::invalid_argument("QuditCX requires equal control and target dimensions");
            }
            break;
        case GateKind::QubitCZ:
        case GateKind::QubitCXab:
            if (sys.dim(g.a) != 2 || sys.dim(g.b) != 2) {
                throw std::invalid_argument("qubit gate applied to a non-qubit site");
            }
            break;
        case GateKind::QubitS:
            if (sys.dim(g.a) != 2) {
                throw std::invalid_argument("qubit gate applied to a non-qubit site");
            }
            break;
    }
}

PauliOperator conjugate_gate(const PauliOperator &p, const CliffordGate &g) {
    const SystemPtr &sys = p.system();
    validate_gate(g, *sys);
    std::vector<size_t> touched{g.a};
    if (g.kind != GateKind::QubitS) {
        touched.push_back(g.b);
    }
    std::sort(touched.begin(), touched.end());
    // Factors away from the gate commute with the images, so only the local
    // part needs rebuilding (in site order to respect the normal form).
    PauliOperator rest = p;
    PauliOperator local = PauliOperator::identity(sys);
    for (size_t s : touched) {
        local = multiply(local, power(gate_image(g, s, PauliKind::X, sys), p.x_at(s)));
        local = multiply(local, power(gate_image(g, s, PauliKind::Z, sys), p.z_at(s)));
        rest.set_x(s, 0);
        rest.set_z(s, 0);
    }
    return multiply(rest, local);
}

}  // namespace

PauliOperator conjugate(const PauliOperator &p, const std::vector<CliffordGate> &circuit) {
    PauliOperator out = p;
    for (const auto &g : circuit) {
        out = conjugate_gate(out, g);
    }
    return out;
}

}  // namespace tqd
