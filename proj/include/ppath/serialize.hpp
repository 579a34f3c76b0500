// Copyright 2026 The ppath Authors
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

#include <json.hpp>

#include "ppath/analysis.hpp"
#include "ppath/circuit.hpp"
#include "ppath/pauli.hpp"

namespace ppath {

using json = nlohmann::json;

/// 16 rows of 16 doubles, rows = output Pauli, in II, IX, ..., ZZ order.
json transfer_table_to_json(const TransferTable& t);
TransferTable transfer_table_from_json(const json& j);

/// {"n", "depth", "seed", "strict_final_dressing", "layers": [[{"pair": [a, b],
/// "gate": {"type", "omega"?, "matrix"?}}]]}. Matrices are [re, im] pairs,
/// row-major over |00>, |01>, |10>, |11> with pair[0] the more significant bit.
json circuit_to_json(const Circuit& c, bool include_matrices = true);

/// Sites carrying a "matrix" use it; the rest are regenerated from the seed
/// by their "type". Throws ValidationError on malformed input.
Circuit circuit_from_json(const json& j);

json report_to_json(const EstimateReport& r);
json weight_table_to_json(const WeightTable& t);
json tvd_curve_to_json(const TvdCurve& c);
json uniformity_to_json(const UniformityBounds& b);

}  // namespace ppath
