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

#include "ppath/circuit.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace ppath {

namespace {

std::optional<std::string> global_problem(int n, int depth) {
  if (n < 2 || n % 2 != 0) return "qubit count " + std::to_string(n) + " must be even and at least 2";
  if (n > kMaxQubits) return "qubit count " + std::to_string(n) + " exceeds 64";
  if (depth < 1) return "depth must be at least 1";
  return std::nullopt;
}

std::optional<std::string> matching_problem(int n, const std::vector<GatePair>& layer) {
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  std::ostringstream why;
  bool bad = false;
  if (static_cast<int>(layer.size()) != n / 2) {
    why << "has " << layer.size() << " pairs, expected " << n / 2 << "; ";
    bad = true;
  }
  for (const auto& p : layer) {
    for (int q : {p.a, p.b}) {
      if (q < 0 || q >= n) {
        why << "qubit " << q << " out of range; ";
        bad = true;
      } else {
        ++hits[static_cast<std::size_t>(q)];
      }
    }
    if (p.a == p.b) {
      why << "pair (" << p.a << "," << p.b << ") repeats a qubit; ";
      bad = true;
    }
  }
  for (int q = 0; q < n; ++q) {
    const int h = hits[static_cast<std::size_t>(q)];
    if (h != 1) {
      why << "qubit " << q << " covered " << h << " times; ";
      bad = true;
    }
  }
  if (!bad) return std::nullopt;
  std::string s = why.str();
  s.resize(s.size() - 2);
  return s;
}

Mat2 pauli_rotation_root(const Mat2& p) {
  // (I - i P) / sqrt(2)
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 out{};
  const Mat2 id = linalg::identity2();
  for (std::size_t i = 0; i < 4; ++i) out[i] = r * (id[i] - cplx{0, 1} * p[i]);
  return out;
}

Mat2 dressing_root(CounterRng& rng) {
  switch (rng.below(3)) {
    case 0: return sqrt_x();
    case 1: return sqrt_y();
    default: return sqrt_w();
  }
}

}  // namespace

Architecture::Architecture(int n, std::vector<std::vector<GatePair>> layers) : n_(n), layers_(std::move(layers)) {
  valid_ = violations().empty();
  if (valid_) {
    pair_masks_.resize(layers_.size());
    for (std::size_t l = 0; l < layers_.size(); ++l) {
      for (const auto& p : layers_[l]) pair_masks_[l].push_back(qubit_bit(n_, p.a) | qubit_bit(n_, p.b));
    }
  }
}

Architecture Architecture::brickwork(int n, int depth) {
  if (n < 2 || n % 2 != 0) throw ValidationError("brickwork needs an even qubit count >= 2");
  if (depth < 1) throw ValidationError("depth must be at least 1");
  std::vector<std::vector<GatePair>> layers(static_cast<std::size_t>(depth));
  for (int l = 0; l < depth; ++l) {
    for (int i = 0; i < n / 2; ++i) {
      if (l % 2 == 0) {
        layers[static_cast<std::size_t>(l)].push_back({2 * i, 2 * i + 1});
      } else {
        layers[static_cast<std::size_t>(l)].push_back({2 * i + 1, (2 * i + 2) % n});
      }
    }
  }
  return Architecture(n, std::move(layers));
}

std::vector<std::string> Architecture::violations() const {
  std::vector<std::string> out;
  if (auto g = global_problem(n_, depth())) {
    out.push_back(*g);
    return out;
  }
  for (int l = 0; l < depth(); ++l) {
    if (auto m = matching_problem(n_, layer(l))) out.push_back("layer " + std::to_string(l) + ": " + *m);
  }
  return out;
}

void Architecture::require_valid() const {
  const auto v = violations();
  if (!v.empty()) throw ValidationError("invalid architecture: " + v.front());
}

void NoiseModel::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in [0, 1]");
}

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Haar: return "haar";
    case GateKind::FSimDressed: return "fsim_dressed";
    case GateKind::Explicit: return "explicit";
  }
  return "unknown";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "haar") return GateKind::Haar;
  if (name == "fsim_dressed" || name == "fsim") return GateKind::FSimDressed;
  if (name == "explicit") return GateKind::Explicit;
  throw ConfigError("unknown gate set '" + name + "'");
}

Circuit::Circuit(Architecture arch, std::vector<std::vector<Mat4>> gates, std::vector<std::vector<GateSource>> sources,
                 std::uint64_t seed, bool strict_final_dressing)
    : arch_(std::move(arch)),
      gates_(std::move(gates)),
      sources_(std::move(sources)),
      seed_(seed),
      strict_final_dressing_(strict_final_dressing) {
  arch_.require_valid();
  if (static_cast<int>(gates_.size()) != arch_.depth()) throw ValidationError("gate layers do not match depth");
  if (sources_.empty()) {
    sources_.resize(gates_.size());
    for (std::size_t l = 0; l < gates_.size(); ++l) sources_[l].assign(gates_[l].size(), GateSource{GateKind::Explicit});
  }
  if (sources_.size() != gates_.size()) throw ValidationError("gate sources do not match depth");
  tables_.resize(gates_.size());
  for (int l = 0; l < arch_.depth(); ++l) {
    const auto& row = gates_[static_cast<std::size_t>(l)];
    if (static_cast<int>(row.size()) != arch_.gates_per_layer() ||
        sources_[static_cast<std::size_t>(l)].size() != row.size()) {
      throw ValidationError("layer " + std::to_string(l) + " has the wrong number of gates");
    }
    for (std::size_t g = 0; g < row.size(); ++g) {
      try {
        tables_[static_cast<std::size_t>(l)].push_back(build_transfer_table(row[g]));
      } catch (const ValidationError& e) {
        throw ValidationError("layer " + std::to_string(l) + " pair " + std::to_string(g) + ": " + e.what());
      }
    }
  }
}

Circuit Circuit::unvalidated(Architecture arch, std::vector<std::vector<Mat4>> gates) {
  Circuit c;
  c.arch_ = std::move(arch);
  c.gates_ = std::move(gates);
  c.tables_.resize(c.gates_.size());
  c.sources_.resize(c.gates_.size());
  for (std::size_t l = 0; l < c.gates_.size(); ++l) {
    for (const auto& u : c.gates_[l]) {
      c.tables_[l].push_back(build_transfer_table_unchecked(u));
      c.sources_[l].push_back(GateSource{GateKind::Explicit});
    }
  }
  return c;
}

Mat4 sample_haar_gate(CounterRng& rng) {
  for (;;) {
    Mat4 g{};
    const double s = 1.0 / std::sqrt(2.0);
    for (auto& e : g) {
      const double re = rng.normal();
      const double im = rng.normal();
      e = cplx{re * s, im * s};
    }
    // Modified Gram-Schmidt over columns, reorthogonalized once; R_jj = norm > 0.
    Mat4 q{};
    bool singular = false;
    for (std::size_t j = 0; j < 4 && !singular; ++j) {
      std::array<cplx, 4> v{};
      for (std::size_t r = 0; r < 4; ++r) v[r] = g[r * 4 + j];
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          cplx dot{};
          for (std::size_t r = 0; r < 4; ++r) dot += std::conj(q[r * 4 + k]) * v[r];
          for (std::size_t r = 0; r < 4; ++r) v[r] -= dot * q[r * 4 + k];
        }
      }
      double norm = 0.0;
      for (const auto& e : v) norm += std::norm(e);
      norm = std::sqrt(norm);
      if (norm < 1e-8) {
        singular = true;
        break;
      }
      for (std::size_t r = 0; r < 4; ++r) q[r * 4 + j] = v[r] / norm;
    }
    if (!singular && linalg::unitarity_deviation(q) < 1e-10) return q;
  }
}

Mat4 build_fsim(double omega1, double omega2, double omega3) {
  Mat4 m{};
  m[0] = 1.0;
  m[1 * 4 + 2] = std::polar(1.0, -omega1);
  m[2 * 4 + 1] = std::polar(1.0, -omega2);
  m[3 * 4 + 3] = std::polar(1.0, -omega3);
  return m;
}

Mat2 sqrt_x() { return pauli_rotation_root(pauli_matrix(Pauli::X)); }
Mat2 sqrt_y() { return pauli_rotation_root(pauli_matrix(Pauli::Y)); }

Mat2 sqrt_w() {
  const Mat2 x = pauli_matrix(Pauli::X);
  const Mat2 y = pauli_matrix(Pauli::Y);
  Mat2 w{};
  for (std::size_t i = 0; i < 4; ++i) w[i] = (x[i] + y[i]) / std::sqrt(2.0);
  return pauli_rotation_root(w);
}

Mat4 sample_fsim_dressed(CounterRng& rng, const Omega& omega) {
  const Mat2 va = dressing_root(rng);
  const Mat2 vb = dressing_root(rng);
  const double pi = std::numbers::pi;
  const double ta = rng.uniform(-pi, pi);
  const double tb = rng.uniform(-pi, pi);
  const double tc = rng.uniform(-pi, pi);
  const double td = rng.uniform(-pi, pi);
  const Mat4 left = linalg::kron(linalg::mul(va, linalg::rz(ta)), linalg::mul(vb, linalg::rz(tb)));
  const Mat4 right = linalg::kron(linalg::rz(tc), linalg::rz(td));
  return linalg::mul(left, linalg::mul(build_fsim(omega), right));
}

Mat2 sample_dressed_single_qubit(CounterRng& rng) {
  const double pi = std::numbers::pi;
  const double t1 = rng.uniform(-pi, pi);
  const Mat2 v = dressing_root(rng);
  const double t2 = rng.uniform(-pi, pi);
  return linalg::mul(linalg::rz(t1), linalg::mul(v, linalg::rz(t2)));
}

Mat4 sample_site_gate(GateKind kind, std::uint64_t seed, int layer, int pair, const Omega& omega,
                      bool final_layer_dressing) {
  CounterRng rng = site_rng(seed, layer, pair);
  Mat4 u;
  switch (kind) {
    case GateKind::Haar: u = sample_haar_gate(rng); break;
    case GateKind::FSimDressed: u = sample_fsim_dressed(rng, omega); break;
    case GateKind::Explicit: throw ValidationError("explicit gates are not sampled");
  }
  if (final_layer_dressing) {
    const auto pa = static_cast<Pauli>(rng.below(4));
    const auto pb = static_cast<Pauli>(rng.below(4));
    u = linalg::mul(linalg::kron(pauli_matrix(pa), pauli_matrix(pb)), u);
  }
  return u;
}

Circuit build_circuit(const Architecture& arch, const GateSetSpec& spec) {
  arch.require_valid();
  const int depth = arch.depth();
  const int per_layer = arch.gates_per_layer();
  std::vector<std::vector<Mat4>> gates(static_cast<std::size_t>(depth));
  std::vector<std::vector<GateSource>> sources(static_cast<std::size_t>(depth));
  if (spec.kind == GateKind::Explicit && static_cast<int>(spec.matrices.size()) != depth) {
    throw ValidationError("explicit gate set needs one row of matrices per layer");
  }
  if (!spec.omegas.empty() && static_cast<int>(spec.omegas.size()) != depth) {
    throw ValidationError("per-site angles need one row per layer");
  }
  for (int l = 0; l < depth; ++l) {
    const auto li = static_cast<std::size_t>(l);
    for (int g = 0; g < per_layer; ++g) {
      const auto gi = static_cast<std::size_t>(g);
      GateSource src{spec.kind};
      if (spec.kind == GateKind::Explicit) {
        if (static_cast<int>(spec.matrices[li].size()) != per_layer) {
          throw ValidationError("explicit layer " + std::to_string(l) + " has the wrong number of gates");
        }
        gates[li].push_back(spec.matrices[li][gi]);
      } else {
        if (!spec.omegas.empty()) {
          if (static_cast<int>(spec.omegas[li].size()) != per_layer) {
            throw ValidationError("angle row " + std::to_string(l) + " has the wrong length");
          }
          src.omega = spec.omegas[li][gi];
        }
        const bool dress = spec.strict_final_dressing && spec.kind == GateKind::FSimDressed && l == depth - 1;
        gates[li].push_back(sample_site_gate(spec.kind, spec.seed, l, g, src.omega, dress));
      }
      sources[li].push_back(src);
    }
  }
  return Circuit(arch, std::move(gates), std::move(sources), spec.seed, spec.strict_final_dressing);
}

std::vector<Violation> validate_circuit(const Circuit& c) {
  std::vector<Violation> out;
  const Architecture& arch = c.architecture();
  if (auto g = global_problem(arch.n(), arch.depth())) {
    out.push_back({-1, -1, "architecture", *g});
    return out;
  }
  for (int l = 0; l < arch.depth(); ++l) {
    if (auto m = matching_problem(arch.n(), arch.layer(l))) out.push_back({l, -1, "matching", *m});
  }
  if (static_cast<int>(c.gates().size()) != arch.depth()) {
    out.push_back({-1, -1, "gate_count", "gate rows do not match depth"});
    return out;
  }
  for (int l = 0; l < arch.depth(); ++l) {
    const auto& row = c.gates()[static_cast<std::size_t>(l)];
    if (row.size() != arch.layer(l).size()) {
      out.push_back({l, -1, "gate_count",
                     "layer has " + std::to_string(row.size()) + " gates for " + std::to_string(arch.layer(l).size()) +
                         " pairs"});
    }
    for (std::size_t g = 0; g < row.size(); ++g) {
      const double dev = linalg::unitarity_deviation(row[g]);
      if (!(dev <= kUnitarityTolerance)) {
        out.push_back({l, static_cast<int>(g), "unitarity", "max |U^dag U - I| = " + std::to_string(dev)});
      }
    }
  }
  return out;
}

}  // namespace ppath
