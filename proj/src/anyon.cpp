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

#include "tqd/anyon.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tqd {

namespace {

// r * k mod 1 for a possibly large integer k.
Rational01 rmul(const Rational01 &r, const BigInt &k) {
    BigInt reduced = mod(k, BigInt(r.den()));
    return r * reduced.convert_to<int64_t>();
}

int64_t to_i64(const BigInt &v) {
    return v.convert_to<int64_t>();
}

}  // namespace

// --------------------------------------------------------------------------
// FiniteAbelianGroup
// --------------------------------------------------------------------------

int64_t FiniteAbelianGroup::size() const {
    int64_t out = 1;
    for (int64_t o : orders) {
        out *= o;
    }
    return out;
}

Element FiniteAbelianGroup::reduce(const Element &a) const {
    if (a.size() != orders.size()) {
        throw std::invalid_argument("element length does not match the group rank");
    }
    Element out(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        out[i] = mod(a[i], orders[i]);
    }
    return out;
}

Element FiniteAbelianGroup::add(const Element &a, const Element &b) const {
    Element out(orders.size());
    for (size_t i = 0; i < orders.size(); i++) {
        out[i] = mod(a[i] + b[i], orders[i]);
    }
    return out;
}

Element FiniteAbelianGroup::neg(const Element &a) const {
    return scale(a, -1);
}

Element FiniteAbelianGroup::scale(const Element &a, int64_t k) const {
    Element out(orders.size());
    for (size_t i = 0; i < orders.size(); i++) {
        out[i] = mod(mod(a[i], orders[i]) * mod(k, orders[i]), orders[i]);
    }
    return out;
}

Element FiniteAbelianGroup::unit(size_t i) const {
    Element out = identity();
    out[i] = mod(1, orders[i]);
    return out;
}

bool FiniteAbelianGroup::is_identity(const Element &a) const {
    for (size_t i = 0; i < orders.size(); i++) {
        if (mod(a[i], orders[i]) != 0) {
            return false;
        }
    }
    return true;
}

int64_t FiniteAbelianGroup::element_order(const Element &a) const {
    int64_t out = 1;
    for (size_t i = 0; i < orders.size(); i++) {
        int64_t ai = mod(a[i], orders[i]);
        out = lcm64(out, orders[i] / gcd64(ai, orders[i]));
    }
    return out;
}

size_t FiniteAbelianGroup::index(const Element &a) const {
    size_t idx = 0;
    for (size_t i = orders.size(); i-- > 0;) {
        idx = idx * (size_t)orders[i] + (size_t)mod(a[i], orders[i]);
    }
    return idx;
}

Element FiniteAbelianGroup::element(size_t idx) const {
    Element out(orders.size());
    for (size_t i = 0; i < orders.size(); i++) {
        out[i] = (int64_t)(idx % (size_t)orders[i]);
        idx /= (size_t)orders[i];
    }
    return out;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
    std::vector<Element> out;
    int64_t n = size();
    out.reserve((size_t)n);
    for (int64_t i = 0; i < n; i++) {
        out.push_back(element((size_t)i));
    }
    return out;
}

std::vector<int64_t> FiniteAbelianGroup::invariant_factors() const {
    std::vector<int64_t> out;
    for (const BigInt &d : cokernel_invariants([&] {
             IntMatrix m(orders.size(), orders.size());
             for (size_t i = 0; i < orders.size(); i++) {
                 m.at(i, i) = orders[i];
             }
             return m;
         }())) {
        int64_t v = to_i64(abs(d));
        if (v != 1) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> subgroup_closure(const FiniteAbelianGroup &g, const std::vector<Element> &gens) {
    std::vector<char> seen((size_t)g.size(), 0);
    std::vector<Element> out{g.identity()};
    seen[0] = 1;
    for (size_t head = 0; head < out.size(); head++) {
        for (const auto &s : gens) {
            Element next = g.add(out[head], s);
            size_t idx = g.index(next);
            if (!seen[idx]) {
                seen[idx] = 1;
                out.push_back(next);
            }
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// AnyonTheory
// --------------------------------------------------------------------------

AnyonTheory::AnyonTheory(FiniteAbelianGroup group, std::vector<Rational01> q_gen,
                         std::vector<std::vector<Rational01>> b_gen)
    : group_(std::move(group)), q_gen_(std::move(q_gen)), b_gen_(std::move(b_gen)) {
    size_t k = group_.rank();
    if (q_gen_.size() != k || b_gen_.size() != k) {
        throw std::invalid_argument("anyon theory: q_gen and b_gen must match the group rank");
    }
    for (size_t i = 0; i < k; i++) {
        if (group_.orders[i] < 1) {
            throw std::invalid_argument("anyon theory: orders must be positive");
        }
        if (b_gen_[i].size() != k) {
            throw std::invalid_argument("anyon theory: b_gen must be square");
        }
    }
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            if (i != j && !(b_gen_[i][j] == b_gen_[j][i])) {
                throw std::invalid_argument("anyon theory: b_gen must be symmetric");
            }
        }
        // The diagonal is determined by q.
        b_gen_[i][i] = q_gen_[i] * 2;
    }
}

Rational01 AnyonTheory::q(const Element &a_in) const {
    Element a = group_.reduce(a_in);
    Rational01 out;
    for (size_t i = 0; i < a.size(); i++) {
        if (!a[i]) {
            continue;
        }
        out = out + q_gen_[i] * (a[i] * a[i]);
        for (size_t j = i + 1; j < a.size(); j++) {
            if (a[j]) {
                out = out + b_gen_[i][j] * (a[i] * a[j]);
            }
        }
    }
    return out;
}

Rational01 AnyonTheory::braiding(const Element &a, const Element &b) const {
    return q(group_.add(a, b)) - q(a) - q(b);
}

std::string AnyonTheory::str() const {
    std::stringstream out;
    out << "orders=[";
    for (size_t i = 0; i < group_.rank(); i++) {
        out << (i ? "," : "") << group_.orders[i];
    }
    out << "] q=[";
    for (size_t i = 0; i < q_gen_.size(); i++) {
        out << (i ? "," : "") << q_gen_[i].str();
    }
    out << "]";
    return out.str();
}

Rational01 braiding(const AnyonTheory &t, const Element &a, const Element &b) {
    return t.braiding(a, b);
}

std::vector<std::string> validate_theory(const AnyonTheory &t) {
    std::vector<std::string> violations;
    const auto &g = t.group();
    auto elems = g.elements();
    auto show = [](const Element &a) {
        std::stringstream out;
        out << "(";
        for (size_t i = 0; i < a.size(); i++) {
            out << (i ? "," : "") << a[i];
        }
        out << ")";
        return out.str();
    };
    for (const auto &a : elems) {
        Rational01 qa = t.q(a);
        int64_t order = g.element_order(a);
        for (int64_t n = 0; n <= order; n++) {
            if (!(t.q(g.scale(a, n)) == qa * (n * n))) {
                violations.push_back("q(a^" + std::to_string(n) + ") != n^2 q(a) for a=" + show(a));
                break;
            }
        }
    }
    std::vector<Element> partners;
    if (elems.size() <= 256) {
        partners = elems;
    } else {
        for (size_t i = 0; i < g.rank(); i++) {
            partners.push_back(g.unit(i));
        }
    }
    for (const auto &a : elems) {
        int64_t order = g.element_order(a);
        for (const auto &b : partners) {
            Rational01 bab = t.braiding(a, b);
            for (int64_t n = 0; n <= order; n++) {
                if (!(t.braiding(g.scale(a, n), b) == bab * n)) {
                    violations.push_back("b(a^" + std::to_string(n) + ", b) != n b(a, b) for a=" + show(a) +
                                         " b=" + show(b));
                    break;
                }
            }
        }
    }
    return violations;
}

std::map<Rational01, int64_t> spin_census(const AnyonTheory &t) {
    std::map<Rational01, int64_t> out;
    for (const auto &a : t.group().elements()) {
        out[t.q(a)]++;
    }
    return out;
}

bool is_modular(const AnyonTheory &t) {
    const auto &g = t.group();
    for (const auto &a : g.elements()) {
        if (g.is_identity(a)) {
            continue;
        }
        bool transparent = true;
        for (size_t j = 0; j < g.rank() && transparent; j++) {
            transparent = t.braiding(a, g.unit(j)).is_zero();
        }
        if (transparent) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<Element>> lagrangian_subgroups(const AnyonTheory &t) {
    const auto &g = t.group();
    auto elems = g.elements();
    std::vector<Element> bosons;
    for (const auto &a : elems) {
        if (!g.is_identity(a) && t.q(a).is_zero()) {
            bosons.push_back(a);
        }
    }
    // Depth-first enumeration of isotropic subgroups, deduplicated by element set.
    std::set<std::vector<size_t>> seen;
    std::vector<std::vector<Element>> isotropic;
    std::function<void(const std::vector<Element> &)> grow = [&](const std::vector<Element> &gens) {
        auto members = subgroup_closure(g, gens);
        std::vector<size_t> key;
        for (const auto &m : members) {
            key.push_back(g.index(m));
        }
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) {
            return;
        }
        std::vector<Element> sorted;
        for (size_t idx : key) {
            sorted.push_back(g.element(idx));
        }
        isotropic.push_back(sorted);
        for (const auto &b : bosons) {
            if (std::binary_search(key.begin(), key.end(), g.index(b))) {
                continue;
            }
            bool transparent = true;
            for (const auto &h : gens) {
                transparent = transparent && t.braiding(b, h).is_zero();
            }
            if (transparent) {
                auto next = gens;
                next.push_back(b);
                grow(next);
            }
        }
    };
    grow({});
    std::vector<std::vector<Element>> out;
    bool modular = is_modular(t);
    for (const auto &sub : isotropic) {
        std::set<size_t> members;
        for (const auto &m : sub) {
            members.insert(g.index(m));
        }
        bool lagrangian = true;
        for (const auto &a : elems) {
            if (members.count(g.index(a))) {
                continue;
            }
            bool detected = false;
            for (const auto &m : sub) {
                if (!t.braiding(a, m).is_zero()) {
                    detected = true;
                    break;
                }
            }
            if (!detected) {
                lagrangian = false;
                break;
            }
        }
        if (lagrangian) {
            if (modular && (int64_t)(sub.size() * sub.size()) != t.size()) {
                throw std::logic_error("Lagrangian subgroup with |L|^2 != |A|");
            }
            out.push_back(sub);
        }
    }
    return out;
}

AnyonTheory stack(const AnyonTheory &a, const AnyonTheory &b) {
    FiniteAbelianGroup g;
    g.orders = a.group().orders;
    g.orders.insert(g.orders.end(), b.group().orders.begin(), b.group().orders.end());
    std::vector<Rational01> q = a.q_gen();
    q.insert(q.end(), b.q_gen().begin(), b.q_gen().end());
    size_t ka = a.group().rank(), k = g.rank();
    std::vector<std::vector<Rational01>> bg(k, std::vector<Rational01>(k));
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            if (i < ka && j < ka) {
                bg[i][j] = a.b_gen()[i][j];
            } else if (i >= ka && j >= ka) {
                bg[i][j] = b.b_gen()[i - ka][j - ka];
            }
        }
    }
    return AnyonTheory(g, q, bg);
}

// --------------------------------------------------------------------------
// Presentations
// --------------------------------------------------------------------------

Element PresentedTheory::map(const std::vector<int64_t> &x) const {
    if (x.size() != V.rows()) {
        throw std::invalid_argument("presentation word has the wrong length");
    }
    Element out(kept.size());
    for (size_t j = 0; j < kept.size(); j++) {
        BigInt acc = 0;
        for (size_t i = 0; i < x.size(); i++) {
            acc += BigInt(x[i]) * V.at(i, kept[j]);
        }
        out[j] = to_i64(mod(acc, BigInt(theory.group().orders[j])));
    }
    return out;
}

PresentedTheory theory_from_presentation(const IntMatrix &relations, const std::vector<Rational01> &q,
                                         const std::vector<std::vector<Rational01>> &b) {
    size_t k = q.size();
    if (b.size() != k || (relations.rows() > 0 && relations.cols() != k)) {
        throw std::invalid_argument("presentation: generator counts disagree");
    }
    PresentedTheory out;
    if (k == 0) {
        out.V = IntMatrix(0, 0);
        return out;
    }
    if (relations.rows() < k) {
        throw std::invalid_argument("presentation defines an infinite group");
    }
    SnfResult snf = smith_normal_form(relations);
    if (snf.rank() < k) {
        throw std::invalid_argument("presentation defines an infinite group");
    }
    out.V = snf.V;
    IntMatrix vinv = unimodular_inverse(snf.V);
    FiniteAbelianGroup group;
    for (size_t j = 0; j < k; j++) {
        int64_t s = to_i64(abs(snf.S.at(j, j)));
        if (s != 1) {
            out.kept.push_back(j);
            group.orders.push_back(s);
        }
    }
    // Spin and braiding of an integer word in the presentation generators.
    auto full_b = [&](size_t i, size_t j) { return i == j ? q[i] * 2 : b[i][j]; };
    auto word_braid = [&](size_t r1, size_t r2) {
        Rational01 acc;
        for (size_t i = 0; i < k; i++) {
            for (size_t j = 0; j < k; j++) {
                acc = acc + rmul(full_b(i, j), vinv.at(r1, i) * vinv.at(r2, j));
            }
        }
        return acc;
    };
    auto word_q = [&](size_t r) {
        Rational01 acc;
        for (size_t i = 0; i < k; i++) {
            acc = acc + rmul(q[i], vinv.at(r, i) * vinv.at(r, i));
            for (size_t j = i + 1; j < k; j++) {
                acc = acc + rmul(b[i][j], vinv.at(r, i) * vinv.at(r, j));
            }
        }
        return acc;
    };
    std::vector<Rational01> qn;
    std::vector<std::vector<Rational01>> bn(out.kept.size(), std::vector<Rational01>(out.kept.size()));
    for (size_t a = 0; a < out.kept.size(); a++) {
        qn.push_back(word_q(out.kept[a]));
        for (size_t c = 0; c < out.kept.size(); c++) {
            if (a != c) {
                bn[a][c] = word_braid(out.kept[a], out.kept[c]);
            }
        }
    }
    out.theory = AnyonTheory(group, qn, bn);
    return out;
}

// --------------------------------------------------------------------------
// Condensation
// --------------------------------------------------------------------------

bool CondensationResult::is_deconfined(const Element &a) const {
    return solver->solve(parent.reduce(a)).has_value();
}

Element CondensationResult::image(const Element &a) const {
    auto sol = solver->solve(parent.reduce(a));
    if (!sol) {
        throw std::invalid_argument("element is confined by the condensate");
    }
    std::vector<int64_t> c(sol->begin(), sol->begin() + (long)deconfined_generators.size());
    return presentation.map(c);
}

std::map<Element, Element> CondensationResult::identification() const {
    std::map<Element, Element> first_of_class;
    std::map<Element, Element> out;
    for (const auto &a : parent.elements()) {
        if (!is_deconfined(a)) {
            continue;
        }
        Element cls = image(a);
        auto it = first_of_class.find(cls);
        if (it == first_of_class.end()) {
            it = first_of_class.emplace(cls, a).first;
        }
        out[a] = it->second;
    }
    return out;
}

CondensationResult condense(const AnyonTheory &t, const std::vector<Element> &bosons_in) {
    const auto &g = t.group();
    size_t k = g.rank();
    std::vector<Element> bosons;
    for (const auto &b : bosons_in) {
        Element r = g.reduce(b);
        if (!t.q(r).is_zero()) {
            throw std::invalid_argument("condense: input anyon is not a boson");
        }
        bosons.push_back(r);
    }
    for (size_t i = 0; i < bosons.size(); i++) {
        for (size_t j = i + 1; j < bosons.size(); j++) {
            if (!t.braiding(bosons[i], bosons[j]).is_zero()) {
                throw std::invalid_argument("condense: bosons braid nontrivially with each other");
            }
        }
    }
    CondensationResult out;
    out.parent = g;
    out.condensed = bosons;

    // Deconfined subgroup: kernel of a -> (b(a, b_l))_l, as a lattice in Z^k.
    size_t m = bosons.size();
    int64_t L = 1;
    for (size_t i = 0; i < k; i++) {
        for (const auto &b : bosons) {
            L = lcm64(L, t.braiding(g.unit(i), b).den());
        }
    }
    IntMatrix stacked(k + m, m);
    for (size_t i = 0; i < k; i++) {
        for (size_t l = 0; l < m; l++) {
            Rational01 r = t.braiding(g.unit(i), bosons[l]);
            stacked.at(i, l) = r.num() * (L / r.den());
        }
    }
    for (size_t l = 0; l < m; l++) {
        stacked.at(k + l, l) = L;
    }
    if (m == 0) {
        for (size_t i = 0; i < k; i++) {
            out.deconfined_generators.push_back(g.unit(i));
        }
    } else {
        IntMatrix ker = integer_left_kernel(stacked);
        for (size_t r = 0; r < ker.rows(); r++) {
            Element e(k);
            for (size_t i = 0; i < k; i++) {
                e[i] = to_i64(mod(ker.at(r, i), BigInt(g.orders[i])));
            }
            if (!g.is_identity(e)) {
                out.deconfined_generators.push_back(e);
            }
        }
    }
    const auto &gens = out.deconfined_generators;
    size_t r = gens.size();

    // Relations among the deconfined generators modulo the condensate.
    IntMatrix rel_source(r + m + k, k);
    for (size_t j = 0; j < r; j++) {
        for (size_t i = 0; i < k; i++) {
            rel_source.at(j, i) = gens[j][i];
        }
    }
    for (size_t l = 0; l < m; l++) {
        for (size_t i = 0; i < k; i++) {
            rel_source.at(r + l, i) = -bosons[l][i];
        }
    }
    for (size_t i = 0; i < k; i++) {
        rel_source.at(r + m + i, i) = g.orders[i];
    }
    IntMatrix ker = integer_left_kernel(rel_source);
    IntMatrix relations(ker.rows(), r);
    for (size_t row = 0; row < ker.rows(); row++) {
        for (size_t j = 0; j < r; j++) {
            relations.at(row, j) = ker.at(row, j);
        }
    }
    std::vector<Rational01> q;
    std::vector<std::vector<Rational01>> b(r, std::vector<Rational01>(r));
    for (size_t j = 0; j < r; j++) {
        q.push_back(t.q(gens[j]));
        for (size_t l = 0; l < r; l++) {
            if (j != l) {
                b[j][l] = t.braiding(gens[j], gens[l]);
            }
        }
    }
    out.presentation = theory_from_presentation(relations, q, b);
    out.theory = out.presentation.theory;

    IntMatrix solve_matrix(k, r + m);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < r; j++) {
            solve_matrix.at(i, j) = gens[j][i];
        }
        for (size_t l = 0; l < m; l++) {
            solve_matrix.at(i, r + l) = bosons[l][i];
        }
    }
    out.solver = std::make_shared<LinearModSolver>(solve_matrix, g.orders);
    return out;
}

// --------------------------------------------------------------------------
// Isomorphism
// --------------------------------------------------------------------------

IsomorphismResult theories_isomorphic(const AnyonTheory &a, const AnyonTheory &b) {
    IsomorphismResult out;
    const auto &ga = a.group();
    const auto &gb = b.group();
    if (ga.size() != gb.size() || ga.invariant_factors() != gb.invariant_factors()) {
        return out;
    }
    auto elems_b = gb.elements();
    std::map<std::pair<int64_t, Rational01>, int64_t> hist_a, hist_b;
    for (const auto &x : ga.elements()) {
        hist_a[{ga.element_order(x), a.q(x)}]++;
    }
    for (const auto &y : elems_b) {
        hist_b[{gb.element_order(y), b.q(y)}]++;
    }
    if (hist_a != hist_b) {
        return out;
    }
    size_t k = ga.rank();
    std::vector<std::vector<Element>> candidates(k);
    for (size_t i = 0; i < k; i++) {
        Element u = ga.unit(i);
        int64_t order = ga.element_order(u);
        Rational01 qu = a.q(u);
        for (const auto &y : elems_b) {
            if (gb.element_order(y) == order && b.q(y) == qu) {
                candidates[i].push_back(y);
            }
        }
        if (candidates[i].empty()) {
            return out;
        }
    }
    std::vector<Element> images(k);
    std::function<bool(size_t)> search = [&](size_t i) -> bool {
        if (i == k) {
            return (int64_t)subgroup_closure(gb, images).size() == gb.size();
        }
        for (const auto &y : candidates[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; j++) {
                ok = b.braiding(images[j], y) == a.braiding(ga.unit(j), ga.unit(i));
            }
            if (!ok) {
                continue;
            }
            images[i] = y;
            if (search(i + 1)) {
                return true;
            }
        }
        return false;
    };
    if (search(0)) {
        out.isomorphic = true;
        out.images = images;
    }
    return out;
}

// --------------------------------------------------------------------------
// Named theories
// --------------------------------------------------------------------------

AnyonTheory trivial_theory() {
    return AnyonTheory();
}

AnyonTheory zn_toric_code_theory(int64_t N) {
    return stacked_toric_code_theory({N});
}

AnyonTheory semion_theory() {
    return AnyonTheory(FiniteAbelianGroup{{2}}, {Rational01(1, 4)}, {{Rational01()}});
}

AnyonTheory antisemion_theory() {
    return AnyonTheory(FiniteAbelianGroup{{2}}, {Rational01(3, 4)}, {{Rational01()}});
}

AnyonTheory stacked_toric_code_theory(const std::vector<int64_t> &dims) {
    size_t k = 2 * dims.size();
    FiniteAbelianGroup g;
    std::vector<Rational01> q(k);
    std::vector<std::vector<Rational01>> b(k, std::vector<Rational01>(k));
    for (size_t i = 0; i < dims.size(); i++) {
        g.orders.push_back(dims[i]);
        g.orders.push_back(dims[i]);
        b[2 * i][2 * i + 1] = Rational01(1, dims[i]);
        b[2 * i + 1][2 * i] = Rational01(1, dims[i]);
    }
    return AnyonTheory(g, q, b);
}

PresentedTheory tqd_presentation(const TqdParams &params) {
    params.validate();
    size_t M = params.M();
    IntMatrix rel(2 * M, 2 * M);
    std::vector<Rational01> q(2 * M);
    std::vector<std::vector<Rational01>> b(2 * M, std::vector<Rational01>(2 * M));
    for (size_t i = 0; i < M; i++) {
        // c_i^{N_i} = 1
        rel.at(i, i) = params.N[i];
        // phi_i^{N_i} = c_i^{2 n_i} prod_{j != i} c_j^{n_ij}
        rel.at(M + i, M + i) = params.N[i];
        for (size_t j = 0; j < M; j++) {
            rel.at(M + i, j) = -(j == i ? 2 * params.n[i] : params.nij[i][j]);
        }
        q[M + i] = Rational01(params.n[i], params.N[i] * params.N[i]);
        b[i][M + i] = b[M + i][i] = Rational01(1, params.N[i]);
        for (size_t j = 0; j < M; j++) {
            if (j != i) {
                b[M + i][M + j] = Rational01(params.nij[i][j], params.N[i] * params.N[j]);
            }
        }
    }
    PresentedTheory out = theory_from_presentation(rel, q, b);
    auto violations = validate_theory(out.theory);
    if (!violations.empty()) {
        throw std::logic_error("TQD theory fails the quadratic-form axioms: " + violations.front());
    }
    return out;
}

AnyonTheory tqd_theory(const TqdParams &params) {
    return tqd_presentation(params).theory;
}

std::vector<int64_t> fusion_group(const TqdParams &params) {
    return tqd_presentation(params).theory.group().invariant_factors();
}

Element lambda_cocycle(const TqdParams &params, const Element &g, const Element &h) {
    size_t M = params.M();
    std::vector<int64_t> carry(M);
    for (size_t j = 0; j < M; j++) {
        int64_t s = g[j] + h[j];
        carry[j] = (s - mod(s, params.N[j])) / params.N[j];
    }
    Element out(M);
    for (size_t i = 0; i < M; i++) {
        int64_t acc = 2 * params.n[i] * carry[i];
        for (size_t j = 0; j < M; j++) {
            if (j != i) {
                acc += params.nij[i][j] * carry[j];
            }
        }
        out[i] = mod(acc, params.N[i]);
    }
    return out;
}

std::vector<int64_t> fusion_group_from_cocycle(const TqdParams &params) {
    params.validate();
    size_t M = params.M();
    FiniteAbelianGroup G{params.N};
    auto elems = G.elements();
    std::map<int64_t, int64_t> counts;
    for (const auto &a : elems) {
        for (const auto &g : elems) {
            // Repeatedly multiply (a, g) by itself until the identity returns.
            Element ca = a, cg = g;
            int64_t order = 1;
            while (!(G.is_identity(ca) && G.is_identity(cg))) {
                Element lam = lambda_cocycle(params, cg, g);
                for (size_t i = 0; i < M; i++) {
                    ca[i] = mod(ca[i] + a[i] + lam[i], params.N[i]);
                }
                cg = G.add(cg, g);
                order++;
            }
            counts[order]++;
        }
    }
    return invariant_factors_from_orders(counts);
}

std::vector<int64_t> invariant_factors_from_orders(const std::map<int64_t, int64_t> &order_counts) {
    int64_t total = 0;
    for (const auto &[o, c] : order_counts) {
        total += c;
    }
    // Number of elements x with x^k = 1.
    auto killed_by = [&](int64_t k) {
        int64_t n = 0;
        for (const auto &[o, c] : order_counts) {
            if (k % o == 0) {
                n += c;
            }
        }
        return n;
    };
    auto log_p = [](int64_t n, int64_t p) {
        int64_t e = 0;
        while (n > 1) {
            if (n % p) {
                throw std::invalid_argument("order census is not a finite Abelian group");
            }
            n /= p;
            e++;
        }
        return e;
    };
    std::vector<int64_t> primes;
    int64_t rest = total;
    for (int64_t p = 2; p * p <= rest; p++) {
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        primes.push_back(rest);
    }
    // For each prime: the exponents of the cyclic p-factors, largest first.
    std::vector<std::vector<int64_t>> powers;
    for (int64_t p : primes) {
        std::vector<int64_t> at_least;  // at_least[t-1] = #factors of order >= p^t
        int64_t pt = 1, prev = 0;
        while (true) {
            int64_t next = pt * p;
            int64_t lg = log_p(killed_by(next), p);
            if (lg == prev) {
                break;
            }
            at_least.push_back(lg - prev);
            prev = lg;
            pt = next;
        }
        std::vector<int64_t> factors;
        for (size_t t = 0; t < at_least.size(); t++) {
            int64_t exactly = at_least[t] - (t + 1 < at_least.size() ? at_least[t + 1] : 0);
            int64_t value = 1;
            for (size_t s = 0; s <= t; s++) {
                value *= p;
            }
            for (int64_t c = 0; c < exactly; c++) {
                factors.push_back(value);
            }
        }
        std::sort(factors.rbegin(), factors.rend());
        powers.push_back(factors);
    }
    std::vector<int64_t> out;
    for (size_t slot = 0;; slot++) {
        int64_t d = 1;
        bool any = false;
        for (const auto &f : powers) {
            if (slot < f.size()) {
                d *= f[slot];
                any = true;
            }
        }
        if (!any) {
            break;
        }
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational01 cocycle_value(const TqdParams &params, const Element &g, const Element &h, const Element &k) {
    size_t M = params.M();
    if (g.size() != M || h.size() != M || k.size() != M) {
        throw std::invalid_argument("cocycle_value: group elements must have one component per factor");
    }
    for (size_t i = 0; i < M; i++) {
        for (int64_t v : {g[i], h[i], k[i]}) {
            if (v < 0 || v >= params.N[i]) {
                throw std::out_of_range("cocycle_value: component outside [0, N_i)");
            }
        }
    }
    Rational01 out;
    for (size_t i = 0; i < M; i++) {
        int64_t si = h[i] + k[i];
        int64_t ci = si - mod(si, params.N[i]);
        out = out + Rational01(params.n[i] * g[i] * ci, params.N[i] * params.N[i]);
        for (size_t j = i + 1; j < M; j++) {
            int64_t sj = h[j] + k[j];
            int64_t cj = sj - mod(sj, params.N[j]);
            out = out + Rational01(params.nij[i][j] * g[i] * cj, params.N[i] * params.N[j]);
        }
    }
    return out;
}

bool cocycle_condition_holds(const TqdParams &params) {
    params.validate();
    FiniteAbelianGroup G{params.N};
    auto elems = G.elements();
    size_t n = elems.size();
    std::vector<Rational01> table(n * n * n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            for (size_t c = 0; c < n; c++) {
                table[(a * n + b) * n + c] = cocycle_value(params, elems[a], elems[b], elems[c]);
            }
        }
    }
    auto w = [&](size_t a, size_t b, size_t c) { return table[(a * n + b) * n + c]; };
    auto sum = [&](size_t a, size_t b) { return G.index(G.add(elems[a], elems[b])); };
    for (size_t g = 0; g < n; g++) {
        for (size_t h = 0; h < n; h++) {
            size_t gh = sum(g, h);
            for (size_t k = 0; k < n; k++) {
                size_t hk = sum(h, k);
                for (size_t l = 0; l < n; l++) {
                    Rational01 d = w(h, k, l) - w(gh, k, l) + w(g, hk, l) - w(g, h, sum(k, l)) + w(g, h, k);
                    if (!d.is_zero()) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Element label_to_element(const Label &l) {
    Element out;
    for (size_t i = 0; i < l.p.size(); i++) {
        out.push_back(l.p[i]);
        out.push_back(l.q[i]);
    }
    return out;
}

Label element_to_label(const Element &a) {
    Label out;
    for (size_t i = 0; i + 1 < a.size(); i += 2) {
        out.p.push_back(a[i]);
        out.q.push_back(a[i + 1]);
    }
    return out;
}

StackCondensation stack_condense_to_tqd(const TqdParams &params) {
    params.validate();
    size_t M = params.M();
    std::vector<int64_t> dims;
    for (int64_t n : params.N) {
        dims.push_back(n * n);
    }
    StackCondensation out;
    out.stacked = stacked_toric_code_theory(dims);
    for (size_t i = 0; i < M; i++) {
        Element b(2 * M, 0), c(2 * M, 0), phi(2 * M, 0);
        b[2 * i + 1] = -params.N[i];
        b[2 * i] = params.N[i] * params.n[i];
        for (size_t j = 0; j < i; j++) {
            b[2 * j] += params.N[j] * params.nij[i][j];
        }
        c[2 * i] = params.N[i];
        phi[2 * i + 1] = 1;
        phi[2 * i] = params.n[i];
        for (size_t j = i + 1; j < M; j++) {
            if (params.nij[i][j]) {
                phi[2 * j] = (params.N[j] / params.N[i]) * params.nij[i][j];
            }
        }
        out.bosons.push_back(out.stacked.group().reduce(b));
        out.charges.push_back(out.stacked.group().reduce(c));
        out.fluxes.push_back(out.stacked.group().reduce(phi));
    }
    out.result = condense(out.stacked, out.bosons);
    out.iso = theories_isomorphic(out.result.theory, tqd_theory(params));
    return out;
}

}  // namespace tqd
