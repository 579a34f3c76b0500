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

#include "ppath/serialize.hpp"

#include <cmath>

namespace ppath {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("field '") + key + "': " + e.what());
  }
}

json matrix_to_json(const Mat4& m) {
  json rows = json::array();
  for (const auto& z : m) rows.push_back({z.real(), z.imag()});
  return rows;
}

Mat4 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 16) throw ValidationError("gate matrix needs 16 [re, im] entries");
  Mat4 m{};
  for (std::size_t i = 0; i < 16; ++i) {
    const json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("gate matrix entry " + std::to_string(i) + " is not [re, im]");
    }
    m[i] = cplx(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

}  // namespace

json transfer_table_to_json(const TransferTable& t) {
  json rows = json::array();
  for (int q = 0; q < TransferTable::kDim; ++q) {
    json row = json::array();
    for (int p = 0; p < TransferTable::kDim; ++p) row.push_back(t(q, p));
    rows.push_back(std::move(row));
  }
  return rows;
}

TransferTable transfer_table_from_json(const json& j) {
  if (!j.is_array() || j.size() != 16) throw ValidationError("transfer table needs 16 rows");
  TransferTable t;
  for (int q = 0; q < 16; ++q) {
    const json& row = j[static_cast<std::size_t>(q)];
    if (!row.is_array() || row.size() != 16) throw ValidationError("transfer table row needs 16 entries");
    for (int p = 0; p < 16; ++p) {
      const json& v = row[static_cast<std::size_t>(p)];
      if (!v.is_number()) throw ValidationError("transfer table entries must be numbers");
      t.at(q, p) = v.get<double>();
    }
  }
  return t;
}

json circuit_to_json(const Circuit& c, bool include_matrices) {
  json layers = json::array();
  for (int l = 0; l < c.depth(); ++l) {
    json row = json::array();
    const auto& pairs = c.architecture().layer(l);
    for (std::size_t g = 0; g < pairs.size(); ++g) {
      const GateSource& src = c.source(l, static_cast<int>(g));
      json gate = {{"type", gate_kind_name(src.kind)}};
      if (src.kind == GateKind::FSimDressed) gate["omega"] = src.omega;
      if (include_matrices || src.kind == GateKind::Explicit) gate["matrix"] = matrix_to_json(c.gate(l, static_cast<int>(g)));
      row.push_back({{"pair", {pairs[g].a, pairs[g].b}}, {"gate", std::move(gate)}});
    }
    layers.push_back(std::move(row));
  }
  return {{"n", c.n()},
          {"depth", c.depth()},
          {"seed", c.seed()},
          {"strict_final_dressing", c.strict_final_dressing()},
          {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const json& j) {
  const int n = get_field<int>(j, "n");
  const int depth = get_field<int>(j, "depth");
  const auto seed = get_field<std::uint64_t>(j, "seed");
  const bool strict = j.contains("strict_final_dressing") ? get_field<bool>(j, "strict_final_dressing") : false;
  const json& layers = j.contains("layers") ? j.at("layers") : json();
  if (!layers.is_array()) throw ValidationError("missing field 'layers'");
  if (static_cast<int>(layers.size()) != depth) throw ValidationError("'layers' length differs from 'depth'");

  std::vector<std::vector<GatePair>> pairs(layers.size());
  std::vector<std::vector<Mat4>> gates(layers.size());
  std::vector<std::vector<GateSource>> sources(layers.size());
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (!layers[l].is_array()) throw ValidationError("layer " + std::to_string(l) + " is not an array");
    for (std::size_t g = 0; g < layers[l].size(); ++g) {
      const json& site = layers[l][g];
      const auto pair = get_field<std::vector<int>>(site, "pair");
      if (pair.size() != 2) throw ValidationError("'pair' needs two qubits");
      pairs[l].push_back({pair[0], pair[1]});
      const json& gate = site.contains("gate") ? site.at("gate") : json();
      GateSource src;
      src.kind = gate_kind_from_name(get_field<std::string>(gate, "type"));
      if (gate.contains("omega")) {
        const auto w = get_field<std::vector<double>>(gate, "omega");
        if (w.size() != 3) throw ValidationError("'omega' needs three angles");
        src.omega = {w[0], w[1], w[2]};
      }
      sources[l].push_back(src);
      if (gate.contains("matrix")) {
        gates[l].push_back(matrix_from_json(gate.at("matrix")));
      } else if (src.kind == GateKind::Explicit) {
        throw ValidationError("explicit gate without 'matrix'");
      } else {
        const bool dress = strict && src.kind == GateKind::FSimDressed && static_cast<int>(l) == depth - 1;
        gates[l].push_back(sample_site_gate(src.kind, seed, static_cast<int>(l), static_cast<int>(g), src.omega, dress));
      }
    }
  }
  Architecture arch(n, std::move(pairs));
  return Circuit(std::move(arch), std::move(gates), std::move(sources), seed, strict);
}

json report_to_json(const EstimateReport& r) {
  json j = {{"name", r.name},
            {"estimate", r.estimate},
            {"standard_error", r.standard_error},
            {"trials", r.trials},
            {"seed", r.seed}};
  j["predicted"] = r.predicted ? json(*r.predicted) : json(nullptr);
  j["z_score"] = r.z_score && std::isfinite(*r.z_score) ? json(*r.z_score) : json(nullptr);
  return j;
}

json weight_table_to_json(const WeightTable& t) {
  json rows = json::array();
  for (const auto& [k, e] : t.entries) {
    rows.push_back({{"k", k}, {"value", e.value}, {"standard_error", e.standard_error},
                    {"method", weight_method_name(e.method)}});
  }
  return rows;
}

json tvd_curve_to_json(const TvdCurve& c) {
  json rows = json::array();
  for (const auto& r : c.rows) {
    rows.push_back({{"ell", r.ell},
                    {"mean_delta_sq", r.mean_delta_sq},
                    {"stderr_delta_sq", r.stderr_delta_sq},
                    {"mean_delta", r.mean_delta},
                    {"bound", r.bound ? json(*r.bound) : json(nullptr)}});
  }
  return {{"circuits", c.circuits}, {"seed", c.seed}, {"rows", std::move(rows)},
          {"weights", weight_table_to_json(c.weights)}};
}

json uniformity_to_json(const UniformityBounds& b) {
  return {{"lower", b.lower},
          {"upper_pinsker", b.upper_pinsker},
          {"upper_anticoncentration", b.upper_anticoncentration},
          {"upper_anticoncentration_heuristic", true}};
}

}  // namespace ppath
