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

#include <string>
#include <vector>

#include "json.hpp"
#include "tqd/anyon.hpp"
#include "tqd/exactmath.hpp"
#include "tqd/extraction.hpp"
#include "tqd/kmatrix.hpp"
#include "tqd/lattice.hpp"
#include "tqd/stabilizer.hpp"

namespace tqd::io {

using Json = nlohmann::json;

// Rationals are always rendered as "p/q" (zero is "0/1").
std::string rational_text(const Rational01 &r);
Rational01 parse_rational(const Json &j);  // accepts "p/q", "p" or an integer
Json big_int_json(const BigInt &v);       // number when it fits in int64, else a decimal string

// {"dims": [...], "generators": [{"phase": int, "x": {site: exp}, "z": {site: exp}}]}
Json pauli_json(const PauliOperator &p);
PauliOperator pauli_from_json(const SystemPtr &system, const Json &j);
Json group_json(const StabilizerGroup &g);
StabilizerGroup group_from_json(const Json &j);

// Model spec: {"type": "tc|ds|tqd|spt|stacked_tc", "N": [...], "n": [...],
// "nij": [[...]], "Lx": int, "Ly": int}.
struct ModelSpec {
    ModelType type = ModelType::TQD;
    TqdParams params;
    int64_t Lx = 3;
    int64_t Ly = 3;
};
ModelType parse_model_type(const std::string &name);
// Throws std::invalid_argument on malformed specs or invalid parameters.
ModelSpec model_spec_from_json(const Json &j);
Json model_spec_json(const ModelSpec &spec);
// Builds the model named by the spec (params are validated first).
LatticeModel build_model(const ModelSpec &spec);
// Spec fields plus the embedded group and a site-index legend.
Json model_json(const ModelSpec &spec, const LatticeModel &model);

Json params_json(const TqdParams &p);

// {"orders": [...], "q_gen": [...], "b_gen": [[...]]}
Json theory_json(const AnyonTheory &t);
AnyonTheory theory_from_json(const Json &j);
// Theory JSON plus a spin table over every element and the modularity flag.
Json theory_report(const AnyonTheory &t);

Json element_json(const Element &a);
Element element_from_json(const Json &j);

Json int_matrix_json(const IntMatrix &m);
IntMatrix int_matrix_from_json(const Json &j);
Json census_json(const KCensus &c);
// {"K": [[...]], "group": [...], "census": {...}, "signature": int}
Json kmatrix_report(const IntMatrix &K);

// {"theta": {...}, "braiding": [[...]], "fusion_orders": {...}, "iso_match": bool, "target": "..."}
Json extraction_report(const ExtractedTheory &ex, bool iso_match, const std::string &target);

}  // namespace tqd::io
