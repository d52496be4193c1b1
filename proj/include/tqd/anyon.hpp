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

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tqd/exactmath.hpp"
#include "tqd/lattice.hpp"

namespace tqd {

using Element = std::vector<int64_t>;

// Product of cyclic groups Z_{orders[0]} x Z_{orders[1]} x ...; elements are
// exponent tuples reduced componentwise.
struct FiniteAbelianGroup {
    std::vector<int64_t> orders;

    size_t rank() const {
        return orders.size();
    }
    int64_t size() const;
    Element identity() const {
        return Element(orders.size(), 0);
    }
    Element reduce(const Element &a) const;
    Element add(const Element &a, const Element &b) const;
    Element neg(const Element &a) const;
    Element scale(const Element &a, int64_t k) const;
    Element unit(size_t i) const;
    bool is_identity(const Element &a) const;
    int64_t element_order(const Element &a) const;
    // Mixed-radix enumeration with the first coordinate varying fastest.
    size_t index(const Element &a) const;
    Element element(size_t idx) const;
    std::vector<Element> elements() const;
    // Invariant factors (d_1 | d_2 | ...), trivial factors dropped.
    std::vector<int64_t> invariant_factors() const;
};

// All elements of the subgroup generated by gens.
std::vector<Element> subgroup_closure(const FiniteAbelianGroup &g, const std::vector<Element> &gens);

// An Abelian anyon theory (A, q): q is stored through its values on the
// generators and the pairwise braiding of generators, and evaluated on an
// element a as sum_i a_i^2 q_i + sum_{i<j} a_i a_j b_ij.
class AnyonTheory {
   public:
    AnyonTheory() = default;
    AnyonTheory(FiniteAbelianGroup group, std::vector<Rational01> q_gen, std::vector<std::vector<Rational01>> b_gen);

    const FiniteAbelianGroup &group() const {
        return group_;
    }
    const std::vector<Rational01> &q_gen() const {
        return q_gen_;
    }
    const std::vector<std::vector<Rational01>> &b_gen() const {
        return b_gen_;
    }
    int64_t size() const {
        return group_.size();
    }

    // Topological spin exponent: theta(a) = exp(2 pi i q(a)).
    Rational01 q(const Element &a) const;
    // Braiding exponent b(a, b) = q(ab) - q(a) - q(b).
    Rational01 braiding(const Element &a, const Element &b) const;

    std::string str() const;

   private:
    FiniteAbelianGroup group_;
    std::vector<Rational01> q_gen_;
    std::vector<std::vector<Rational01>> b_gen_;
};

std::vector<std::string> validate_theory(const AnyonTheory &t);
Rational01 braiding(const AnyonTheory &t, const Element &a, const Element &b);
bool is_modular(const AnyonTheory &t);
// Number of anyons with each spin q(a).
std::map<Rational01, int64_t> spin_census(const AnyonTheory &t);
// Every Lagrangian subgroup, each as its sorted element list.
std::vector<std::vector<Element>> lagrangian_subgroups(const AnyonTheory &t);
AnyonTheory stack(const AnyonTheory &a, const AnyonTheory &b);

// Theory of a group given by generators and integer relations.
struct PresentedTheory {
    AnyonTheory theory;
    IntMatrix V;                 // column change from the SNF of the relations
    std::vector<size_t> kept;    // columns of V with a nontrivial invariant factor
    // Coordinates in theory.group() of the presentation word x (exponents of
    // the presentation generators).
    Element map(const std::vector<int64_t> &x) const;
};

// relations: one row per relation, one column per presentation generator.
// q: spins of the generators; b: full symmetric braiding matrix between
// generators (diagonal ignored).
PresentedTheory theory_from_presentation(const IntMatrix &relations, const std::vector<Rational01> &q,
                                         const std::vector<std::vector<Rational01>> &b);

struct CondensationResult {
    AnyonTheory theory;
    std::vector<Element> condensed;              // the boson generators
    std::vector<Element> deconfined_generators;  // generate {a : b(a, boson) = 0 for all bosons}
    PresentedTheory presentation;                // over deconfined_generators
    std::shared_ptr<const LinearModSolver> solver;
    FiniteAbelianGroup parent;

    bool is_deconfined(const Element &a) const;
    // Class of a deconfined parent element in theory.group().
    Element image(const Element &a) const;
    // Map from each deconfined parent element to the smallest-index element
    // of its class (enumerated; intended for small parents).
    std::map<Element, Element> identification() const;
};

CondensationResult condense(const AnyonTheory &t, const std::vector<Element> &bosons);

struct IsomorphismResult {
    bool isomorphic = false;
    // Images in the second theory of the generators of the first.
    std::vector<Element> images;
};
IsomorphismResult theories_isomorphic(const AnyonTheory &a, const AnyonTheory &b);

// Named theories.
AnyonTheory trivial_theory();
AnyonTheory zn_toric_code_theory(int64_t N);  // generators e, m
AnyonTheory semion_theory();
AnyonTheory antisemion_theory();
AnyonTheory stacked_toric_code_theory(const std::vector<int64_t> &dims);  // e_1, m_1, e_2, m_2, ...

// Twisted quantum double theory with generators c_1..c_M, phi_1..phi_M.
PresentedTheory tqd_presentation(const TqdParams &params);
AnyonTheory tqd_theory(const TqdParams &params);
std::vector<int64_t> fusion_group(const TqdParams &params);

// Fusion group rebuilt from the explicit central-extension multiplication
// (a, g)(a', g') = (a + a' + lambda(g, g'), g + g').
Element lambda_cocycle(const TqdParams &params, const Element &g, const Element &h);
std::vector<int64_t> fusion_group_from_cocycle(const TqdParams &params);
// Invariant factors of a finite Abelian group from its element-order census.
std::vector<int64_t> invariant_factors_from_orders(const std::map<int64_t, int64_t> &order_counts);

Rational01 cocycle_value(const TqdParams &params, const Element &g, const Element &h, const Element &k);
// delta omega = 0 on every 4-tuple of the gauge group (|G|^4 evaluations).
bool cocycle_condition_holds(const TqdParams &params);

struct StackCondensation {
    AnyonTheory stacked;
    CondensationResult result;
    std::vector<Element> bosons;   // b_i in stack coordinates
    std::vector<Element> charges;  // c~_i in stack coordinates
    std::vector<Element> fluxes;   // phi~_i in stack coordinates
    IsomorphismResult iso;         // against tqd_theory(params)
};
StackCondensation stack_condense_to_tqd(const TqdParams &params);

// Stack coordinates (e_1, m_1, e_2, m_2, ...) of a lattice string label.
Element label_to_element(const Label &l);
Label element_to_label(const Element &a);

}  // namespace tqd
