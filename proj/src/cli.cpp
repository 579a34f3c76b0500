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

#include "ppath/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ppath/analysis.hpp"
#include "ppath/oracle.hpp"
#include "ppath/paths.hpp"
#include "ppath/simulator.hpp"

namespace ppath::cli {

namespace {

const char* format_name(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Binary: return "binary";
  }
  return "csv";
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  if (s == "binary") return Format::Binary;
  throw ConfigError("unknown format '" + s + "'");
}

// Subcommands whose primary output is a report default to JSON.
Format default_format(const std::string& sub) {
  static const std::vector<std::string> json_default{"gen", "xeb", "xquath", "uniformity"};
  return std::find(json_default.begin(), json_default.end(), sub) != json_default.end() ? Format::Json : Format::Csv;
}

struct OptionGroups {
  bool circuit = false;
  bool noise = false;
  bool truncation = false;
  bool trials = false;
};

// Tracks CLI11 options whose presence (not just value) matters.
struct Presence {
  std::map<std::string, std::vector<CLI::Option*>> options;
  [[nodiscard]] bool given(const std::string& name) const {
    const auto it = options.find(name);
    if (it == options.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [](const CLI::Option* o) { return o->count() > 0; });
  }
};

struct Bindings {
  RunConfig cfg;
  int ell = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::uint64_t sample_seed = 0;
  int k = 0;
  std::string format;
  Presence presence;
};

void add_options(CLI::App* sub, Bindings& b, const OptionGroups& g) {
  auto track = [&](const std::string& name, CLI::Option* o) { b.presence.options[name].push_back(o); };
  RunConfig& c = b.cfg;
  if (g.circuit) {
    sub->add_option("--circuit", c.circuit_path, "Circuit JSON file (otherwise generated)");
    sub->add_option("--n", c.n, "Qubit count")->capture_default_str();
    sub->add_option("--d", c.d, "Depth")->capture_default_str();
    sub->add_option("--arch", c.arch, "Architecture")->check(CLI::IsMember({"brickwork"}))->capture_default_str();
    sub->add_option("--gateset", c.gateset, "haar | fsim_dressed")
        ->check(CLI::IsMember({"haar", "fsim_dressed", "fsim"}))
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "Gate seed")->capture_default_str();
    sub->add_flag("--strict-final-dressing", c.strict_final_dressing, "Random Paulis on final fSim layer");
  }
  if (g.noise) {
    sub->add_option("--gamma", c.gamma, "Depolarizing rate")->capture_default_str();
    track("no-initial-noise", sub->add_flag("--no-initial-noise", "No noise layer before the first gate layer"));
  }
  if (g.truncation) {
    track("ell", sub->add_option("--ell", b.ell, "Truncation weight"));
    track("epsilon", sub->add_option("--epsilon", b.epsilon, "Target error"));
    track("delta", sub->add_option("--delta", b.delta, "Failure probability"));
    sub->add_option("--c-margin", c.c_margin, "Constant in the truncation rule")->capture_default_str();
  }
  if (g.trials) sub->add_option("--trials", c.trials, "Monte-Carlo trials (circuits)")->capture_default_str();
  sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)")->capture_default_str();
  track("format", sub->add_option("--format", b.format, "csv | json | binary")
                      ->check(CLI::IsMember({"csv", "json", "binary"})));
  sub->add_option("--output", c.output, "Output file (default stdout)");
}

std::vector<std::string> config_file_args(const std::string& path, std::string& subcommand) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  std::vector<std::string> args;
  for (const auto& [key, value] : j.items()) {
    if (key == "subcommand") {
      if (!value.is_string()) throw ConfigError("'subcommand' must be a string");
      subcommand = value.get<std::string>();
      continue;
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else if (value.is_string()) {
      args.push_back("--" + key);
      args.push_back(value.get<std::string>());
    } else if (value.is_number()) {
      args.push_back("--" + key);
      args.push_back(value.dump());
    } else if (!value.is_null()) {
      throw ConfigError("config key '" + key + "' must be a scalar");
    }
  }
  return args;
}

// ---- execution helpers -----------------------------------------------------

GateSetSpec gate_spec(const RunConfig& c) {
  GateSetSpec s;
  s.kind = gate_kind_from_name(c.gateset);
  s.seed = c.seed;
  s.strict_final_dressing = c.strict_final_dressing;
  return s;
}

Architecture architecture(const RunConfig& c) {
  if (c.arch != "brickwork") throw ConfigError("unknown architecture '" + c.arch + "'");
  return Architecture::brickwork(c.n, c.d);
}

Circuit load_or_generate(const RunConfig& c) {
  if (c.circuit_path.empty()) return build_circuit(architecture(c), gate_spec(c));
  std::ifstream in(c.circuit_path);
  if (!in) throw ConfigError("cannot open circuit file '" + c.circuit_path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("circuit file: " + std::string(e.what()));
  }
  return circuit_from_json(j);
}

CircuitEnsemble ensemble(const RunConfig& c) {
  if (!c.circuit_path.empty()) throw ConfigError(c.subcommand + " samples circuits; --circuit is not accepted");
  return CircuitEnsemble{architecture(c), gate_spec(c)};
}

NoiseModel noise_model(const RunConfig& c) {
  NoiseModel m{c.gamma, c.noise_before_first_layer};
  m.validate();
  return m;
}

int resolve_ell(const RunConfig& c, int depth) {
  const bool has_ell = c.ell.has_value();
  const bool has_eps = c.epsilon.has_value() || c.delta.has_value();
  if (has_ell == has_eps) throw ConfigError("give exactly one of --ell or (--epsilon and --delta)");
  if (has_ell) {
    if (*c.ell < 0) throw ConfigError("--ell must be nonnegative");
    return *c.ell;
  }
  if (!c.epsilon || !c.delta) throw ConfigError("--epsilon and --delta must be given together");
  return choose_truncation(*c.epsilon, *c.delta, c.gamma, c.c_margin, depth);
}

std::vector<int> parse_ell_list(const std::string& s, int lo, int hi) {
  std::vector<int> out;
  if (s.empty()) {
    for (int l = lo; l <= hi; ++l) out.push_back(l);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const int a = std::stoi(item.substr(0, dash));
        const int b = std::stoi(item.substr(dash + 1));
        for (int l = a; l <= b; ++l) out.push_back(l);
      } else {
        out.push_back(std::stoi(item));
      }
    } catch (const std::logic_error&) {
      throw ConfigError("bad --ells entry '" + item + "'");
    }
  }
  for (int l : out) {
    if (l < 0) throw ConfigError("--ells entries must be nonnegative");
  }
  return out;
}

Marginal parse_fixed(const std::string& spec, int n) {
  Marginal m{n, 0, 0, 0};
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--fixed entries look like q=b, got '" + item + "'");
    int q = 0;
    int b = 0;
    try {
      q = std::stoi(item.substr(0, eq));
      b = std::stoi(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw ConfigError("bad --fixed entry '" + item + "'");
    }
    if (q < 0 || q >= n || (b != 0 && b != 1)) throw ConfigError("bad --fixed entry '" + item + "'");
    const std::uint64_t bit = qubit_bit(n, q);
    if ((m.fixed_mask & bit) != 0) throw ConfigError("qubit " + std::to_string(q) + " fixed twice");
    m.fixed_mask |= bit;
    if (b == 1) m.fixed_values |= bit;
  }
  m.traced_mask = full_mask(n) & ~m.fixed_mask;
  return m;
}

class Output {
 public:
  Output(const RunConfig& c, std::ostream& fallback) : config_(config_to_json(c)) {
    if (!c.output.empty()) {
      file_.open(c.output, std::ios::binary);
      if (!file_) throw ConfigError("cannot open output file '" + c.output + "'");
      os_ = &file_;
    } else {
      os_ = &fallback;
    }
  }

  std::ostream& os() { return *os_; }
  void csv_echo() { *os_ << "# config " << config_.dump() << '\n'; }
  void emit_json(json body) {
    body["config"] = config_;
    *os_ << body.dump(2) << '\n';
  }
  void doubles(const std::vector<double>& v) {
    // Little-endian hosts only; the index order is the bitstring value.
    static_assert(std::endian::native == std::endian::little);
    os_->write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
  }

 private:
  json config_;
  std::ofstream file_;
  std::ostream* os_;
};

void emit_distribution(Output& o, Format f, int n, const std::vector<double>& p, const char* column, json extra) {
  switch (f) {
    case Format::Binary: o.doubles(p); return;
    case Format::Json: {
      json rows = json::array();
      for (std::uint64_t x = 0; x < p.size(); ++x) rows.push_back({{"x", Bitstring(n, x).str()}, {column, p[x]}});
      extra["records"] = std::move(rows);
      o.emit_json(std::move(extra));
      return;
    }
    case Format::Csv: {
      o.csv_echo();
      o.os() << "x," << column << '\n';
      o.os().precision(17);
      for (std::uint64_t x = 0; x < p.size(); ++x) o.os() << Bitstring(n, x).str() << ',' << p[x] << '\n';
      return;
    }
  }
}

void emit_report(Output& o, Format f, const EstimateReport& r) {
  if (f == Format::Json) {
    o.emit_json({{"report", report_to_json(r)}});
    return;
  }
  if (f == Format::Binary) throw ConfigError("reports have no binary format");
  o.csv_echo();
  o.os().precision(17);
  o.os() << "name,estimate,standard_error,trials,seed,predicted,z_score\n";
  o.os() << r.name << ',' << r.estimate << ',' << r.standard_error << ',' << r.trials << ',' << r.seed << ',';
  if (r.predicted) o.os() << *r.predicted;
  o.os() << ',';
  if (r.z_score && std::isfinite(*r.z_score)) o.os() << *r.z_score;
  o.os() << '\n';
}

void emit_samples(Output& o, Format f, const std::vector<Bitstring>& xs) {
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(x.str());
    o.emit_json({{"samples", std::move(arr)}});
    return;
  }
  if (f == Format::Binary) throw ConfigError("samples have no binary format");
  o.csv_echo();
  for (const auto& x : xs) o.os() << x.str() << '\n';
}

// ---- subcommands -----------------------------------------------------------

void cmd_gen(const RunConfig& c, Output& o) {
  o.emit_json(circuit_to_json(load_or_generate(c)));
}

void cmd_simulate(const RunConfig& c, Output& o, Format f) {
  const Circuit circuit = load_or_generate(c);
  const int ell = resolve_ell(c, circuit.depth());
  const QuasiProbEvaluator ev(circuit, noise_model(c), ell, c.workers);
  const json meta = {{"ell", ell}, {"paths", ev.paths_evaluated()}};
  if (!c.x.empty()) {
    const Bitstring x = Bitstring::parse(c.x);
    const std::vector<double> one{ev.quasi_prob(x)};
    if (f == Format::Binary) {
      o.doubles(one);
    } else if (f == Format::Json) {
      json body = meta;
      body["records"] = json::array({{{"x", x.str()}, {"qbar", one[0]}}});
      o.emit_json(std::move(body));
    } else {
      o.csv_echo();
      o.os().precision(17);
      o.os() << "x,qbar\n" << x.str() << ',' << one[0] << '\n';
    }
    return;
  }
  emit_distribution(o, f, circuit.n(), ev.quasi_prob_all(), "qbar", meta);
}

void cmd_marginal(const RunConfig& c, Output& o, Format f) {
  const Circuit circuit = load_or_generate(c);
  const int ell = resolve_ell(c, circuit.depth());
  const Marginal m = parse_fixed(c.fixed, circuit.n());
  const QuasiProbEvaluator ev(circuit, noise_model(c), ell, c.workers);
  const double v = ev.quasi_prob_marginal(m);
  if (f == Format::Json) {
    o.emit_json({{"ell", ell}, {"fixed", c.fixed}, {"marginal", v}});
  } else if (f == Format::Binary) {
    o.doubles({v});
  } else {
    o.csv_echo();
    o.os().precision(17);
    o.os() << "fixed,marginal\n\"" << c.fixed << "\"," << v << '\n';
  }
}

void cmd_sample(const RunConfig& c, Output& o, Format f) {
  const Circuit circuit = load_or_generate(c);
  const int ell = resolve_ell(c, circuit.depth());
  const QuasiProbEvaluator ev(circuit, noise_model(c), ell, c.workers);
  const auto xs = sample_many(ev, c.sample_seed.value_or(c.seed), static_cast<std::size_t>(c.samples), c.workers);
  emit_samples(o, f, xs);
}

void cmd_oracle(const RunConfig& c, Output& o, Format f) {
  const Circuit circuit = load_or_generate(c);
  if (c.mode == "ideal") {
    emit_distribution(o, f, circuit.n(), ideal_distribution(circuit), "probability", {{"mode", "ideal"}});
  } else if (c.mode == "noisy") {
    emit_distribution(o, f, circuit.n(), noisy_distribution(circuit, noise_model(c)), "probability",
                      {{"mode", "noisy"}});
  } else {
    throw ConfigError("--mode must be ideal or noisy");
  }
}

void cmd_enumerate(const RunConfig& c, Output& o, Format f) {
  if (!c.ell) throw ConfigError("enumerate needs --ell");
  const Architecture arch = c.circuit_path.empty() ? architecture(c) : load_or_generate(c).architecture();
  if (c.count_only) {
    const auto counts = count_legal_paths(arch, *c.ell);
    if (f == Format::Json) {
      json rows = json::array();
      for (const auto& [w, n] : counts) rows.push_back({{"weight", w}, {"count", n}});
      o.emit_json({{"counts", std::move(rows)}});
    } else {
      o.csv_echo();
      o.os() << "weight,count\n";
      for (const auto& [w, n] : counts) o.os() << w << ',' << n << '\n';
    }
    return;
  }
  if (f == Format::Json) {
    json arr = json::array();
    for_each_legal_path(arch, *c.ell, [&](const PauliPath& p) { arr.push_back(p.str()); });
    o.emit_json({{"paths", std::move(arr)}});
    return;
  }
  o.csv_echo();
  for_each_legal_path(arch, *c.ell, [&](const PauliPath& p) { o.os() << p.str() << '\n'; });
}

void cmd_weights(const RunConfig& c, Output& o, Format f) {
  const CircuitEnsemble ens = ensemble(c);
  const int top = full_weight(ens.arch);
  WeightTable table;
  if (c.method == "exact") {
    if (ens.gates.kind != GateKind::Haar) throw ConfigError("exact weights exist only for the Haar gate set");
    if (c.k) {
      table.entries[*c.k] = WeightEntry{exact_fourier_weight_haar(ens.arch, *c.k), 0.0, WeightMethod::ExactHaar};
    } else if (ens.arch.n() <= 12) {
      table = haar_fourier_weights(ens.arch);
    } else {
      for (int k = 0; k <= top; ++k) {
        table.entries[k] = WeightEntry{exact_fourier_weight_haar(ens.arch, k), 0.0, WeightMethod::ExactHaar};
      }
    }
  } else if (c.method == "monte-carlo") {
    const int lo = c.k.value_or(0);
    const int hi = c.k.value_or(top);
    for (int k = lo; k <= hi; ++k) {
      const auto r = estimate_fourier_weight(ens, k, c.trials, c.workers);
      table.entries[k] = WeightEntry{r.estimate, r.standard_error, WeightMethod::MonteCarlo};
    }
  } else {
    throw ConfigError("--method must be exact or monte-carlo");
  }
  if (f == Format::Json) {
    o.emit_json({{"weights", weight_table_to_json(table)}});
    return;
  }
  o.csv_echo();
  o.os().precision(17);
  o.os() << "k,value,standard_error,method\n";
  for (const auto& [k, e] : table.entries) {
    o.os() << k << ',' << e.value << ',' << e.standard_error << ',' << weight_method_name(e.method) << '\n';
  }
}

void cmd_xeb(const RunConfig& c, Output& o, Format f) {
  const CircuitEnsemble ens = ensemble(c);
  const NoiseModel noise = noise_model(c);
  const bool haar = ens.gates.kind == GateKind::Haar;
  DistributionProvider q;
  std::optional<double> predicted;
  if (c.q == "ideal") {
    q = ideal_provider();
    if (haar) predicted = predicted_noisy_xeb_haar(ens.arch, 0.0);
  } else if (c.q == "noisy") {
    q = noisy_provider(noise);
    if (haar && noise.noise_before_first_layer) predicted = predicted_noisy_xeb_haar(ens.arch, noise.gamma);
  } else if (c.q == "spoofer") {
    q = spoofer_provider();
    if (haar) predicted = std::pow(1.0 / 15.0, ens.arch.depth());
  } else if (c.q == "uniform") {
    q = uniform_provider();
    predicted = 0.0;
  } else {
    throw ConfigError("--q must be ideal, noisy, spoofer or uniform");
  }
  const EstimateReport r =
      c.sampled ? xeb_from_samples(ens, categorical_sampler(q, static_cast<std::size_t>(c.samples)), c.trials,
                                   predicted, c.workers)
                : xeb(ens, q, c.trials, predicted, c.workers);
  emit_report(o, f, r);
}

void cmd_xquath(const RunConfig& c, Output& o, Format f) {
  XqEstimator e;
  if (c.estimator == "single-path") {
    e = XqEstimator::SinglePath;
  } else if (c.estimator == "trivial") {
    e = XqEstimator::Trivial;
  } else {
    throw ConfigError("--estimator must be single-path or trivial");
  }
  emit_report(o, f, estimate_xq(ensemble(c), e, c.trials, c.workers));
}

void cmd_spoof(const RunConfig& c, Output& o, Format f, bool sampled) {
  const Circuit circuit = load_or_generate(c);
  if (sampled) {
    std::vector<Bitstring> xs;
    xs.reserve(static_cast<std::size_t>(c.samples));
    const std::uint64_t seed = c.sample_seed.value_or(c.seed);
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      CounterRng rng(derive_key(seed, i));
      xs.push_back(spoofer_sample(circuit, rng));
    }
    emit_samples(o, f, xs);
    return;
  }
  emit_distribution(o, f, circuit.n(), spoofer_distribution(circuit), "q", {{"bias", spoofer_bias(circuit)}});
}

void cmd_tvd_curve(const RunConfig& c, Output& o, Format f) {
  const CircuitEnsemble ens = ensemble(c);
  const auto ells = parse_ell_list(c.ells, ens.arch.depth() + 1, full_weight(ens.arch));
  const TvdCurve curve = tvd_vs_ell_curve(ens, noise_model(c), ells, c.trials, c.workers);
  if (f == Format::Json) {
    o.emit_json({{"curve", tvd_curve_to_json(curve)}});
    return;
  }
  o.csv_echo();
  o.os().precision(17);
  o.os() << "ell,mean_delta_sq,stderr_delta_sq,mean_delta,bound\n";
  for (const auto& r : curve.rows) {
    o.os() << r.ell << ',' << r.mean_delta_sq << ',' << r.stderr_delta_sq << ',' << r.mean_delta << ',';
    if (r.bound) o.os() << *r.bound;
    o.os() << '\n';
  }
}

void cmd_uniformity(const RunConfig& c, Output& o, Format f) {
  const UniformityBounds b = uniformity_bounds(c.n, c.d, c.gamma);
  std::optional<EstimateReport> mc;
  if (c.trials > 0) mc = tvd_to_uniform(ensemble(c), noise_model(c), c.trials, c.workers);
  if (f == Format::Json) {
    json body = {{"bounds", uniformity_to_json(b)}};
    body["tvd_to_uniform"] = mc ? report_to_json(*mc) : json(nullptr);
    o.emit_json(std::move(body));
    return;
  }
  o.csv_echo();
  o.os().precision(17);
  o.os() << "lower,upper_pinsker,upper_anticoncentration,tvd_mean,tvd_stderr\n";
  o.os() << b.lower << ',' << b.upper_pinsker << ',' << b.upper_anticoncentration << ',';
  if (mc) o.os() << mc->estimate << ',' << mc->standard_error;
  else o.os() << ',';
  o.os() << '\n';
}

}  // namespace

json config_to_json(const RunConfig& c) {
  json j = {{"subcommand", c.subcommand},
            {"n", c.n},
            {"d", c.d},
            {"arch", c.arch},
            {"gateset", c.gateset},
            {"seed", c.seed},
            {"strict_final_dressing", c.strict_final_dressing},
            {"gamma", c.gamma},
            {"noise_before_first_layer", c.noise_before_first_layer},
            {"c_margin", c.c_margin},
            {"trials", c.trials},
            {"samples", c.samples},
            {"workers", c.workers}};
  if (!c.circuit_path.empty()) j["circuit"] = c.circuit_path;
  if (c.ell) j["ell"] = *c.ell;
  if (c.epsilon) j["epsilon"] = *c.epsilon;
  if (c.delta) j["delta"] = *c.delta;
  if (c.sample_seed) j["sample_seed"] = *c.sample_seed;
  if (!c.x.empty()) j["x"] = c.x;
  if (!c.fixed.empty()) j["fixed"] = c.fixed;
  if (c.k) j["k"] = *c.k;
  if (c.subcommand == "enumerate") j["count_only"] = c.count_only;
  if (c.subcommand == "oracle") j["mode"] = c.mode;
  if (c.subcommand == "weights") j["method"] = c.method;
  if (c.subcommand == "xeb") {
    j["q"] = c.q;
    j["sampled"] = c.sampled;
  }
  if (c.subcommand == "xquath") j["estimator"] = c.estimator;
  if (!c.ells.empty()) j["ells"] = c.ells;
  if (c.format) j["format"] = format_name(*c.format);
  return j;
}

ParseOutcome parse_args(const std::vector<std::string>& raw) {
  ParseOutcome result;
  std::vector<std::string> rest;
  std::string config_path;
  std::string subcommand;
  try {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::string& a = raw[i];
      if (a == "--config") {
        if (i + 1 >= raw.size()) throw ConfigError("--config needs a file");
        config_path = raw[++i];
      } else if (a.rfind("--config=", 0) == 0) {
        config_path = a.substr(9);
      } else if (subcommand.empty() && !a.empty() && a[0] != '-') {
        subcommand = a;
      } else {
        rest.push_back(a);
      }
    }
    std::string config_sub;
    std::vector<std::string> from_config;
    if (!config_path.empty()) from_config = config_file_args(config_path, config_sub);
    if (subcommand.empty()) subcommand = config_sub;

    Bindings b;
    CLI::App app{"Pauli-path simulation of noisy random circuits", "ppath"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);

    const OptionGroups circuit_noise_trunc{true, true, true, false};
    auto* gen = app.add_subcommand("gen", "Generate a circuit and print its JSON");
    add_options(gen, b, {true, false, false, false});

    auto* simulate = app.add_subcommand("simulate", "Truncated quasi-probabilities");
    add_options(simulate, b, circuit_noise_trunc);
    simulate->add_option("--x", b.cfg.x, "Single outcome, qubit 0 first");

    auto* marginal = app.add_subcommand("marginal", "Marginal of the truncated quasi-probability");
    add_options(marginal, b, circuit_noise_trunc);
    marginal->add_option("--fixed", b.cfg.fixed, "Fixed qubits, e.g. 0=1,2=0; others traced");

    auto* sample = app.add_subcommand("sample", "Draw bitstrings from the truncated quasi-probability");
    add_options(sample, b, circuit_noise_trunc);
    sample->add_option("--samples", b.cfg.samples, "Number of bitstrings")->capture_default_str();
    b.presence.options["sample-seed"].push_back(sample->add_option("--sample-seed", b.sample_seed, "Sampling seed"));

    auto* oracle = app.add_subcommand("oracle", "Exact ideal or noisy output distribution");
    add_options(oracle, b, {true, true, false, false});
    oracle->add_option("--mode", b.cfg.mode, "ideal | noisy")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "Legal Pauli paths up to a weight");
    add_options(enumerate, b, {true, false, true, false});
    enumerate->add_flag("--count-only", b.cfg.count_only, "Counts per weight instead of paths");

    auto* weights = app.add_subcommand("weights", "Fourier weights per degree");
    add_options(weights, b, {true, false, false, true});
    weights->add_option("--method", b.cfg.method, "exact | monte-carlo")->capture_default_str();
    b.presence.options["k"].push_back(weights->add_option("--k", b.k, "Single degree"));

    auto* xebc = app.add_subcommand("xeb", "Linear cross-entropy benchmark");
    add_options(xebc, b, {true, true, false, true});
    xebc->add_option("--q", b.cfg.q, "ideal | noisy | spoofer | uniform")->capture_default_str();
    xebc->add_flag("--sampled", b.cfg.sampled, "Estimate from samples of q");
    xebc->add_option("--samples", b.cfg.samples, "Samples per circuit with --sampled")->capture_default_str();

    auto* xquath = app.add_subcommand("xquath", "XQ score of an estimator of p(C, 0^n)");
    add_options(xquath, b, {true, false, false, true});
    xquath->add_option("--estimator", b.cfg.estimator, "single-path | trivial")->capture_default_str();

    auto* spoof = app.add_subcommand("spoof", "Single-path spoofer distribution or samples");
    add_options(spoof, b, {true, false, false, false});
    auto* spoof_samples = spoof->add_option("--samples", b.cfg.samples, "Draw samples instead of the distribution");
    b.presence.options["spoof-samples"].push_back(spoof_samples);
    b.presence.options["sample-seed"].push_back(spoof->add_option("--sample-seed", b.sample_seed, "Sampling seed"));

    auto* tvdc = app.add_subcommand("tvd-curve", "Truncation error against ell");
    add_options(tvdc, b, {true, true, false, true});
    tvdc->add_option("--ells", b.cfg.ells, "List like 5,6,9 or a range 5-30");

    auto* unif = app.add_subcommand("uniformity", "Distance-to-uniform bounds and estimate");
    add_options(unif, b, {true, true, false, true});

    std::vector<std::string> args;
    if (!subcommand.empty()) args.push_back(subcommand);
    args.insert(args.end(), from_config.begin(), from_config.end());
    args.insert(args.end(), rest.begin(), rest.end());
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      result.message = app.help();
      return result;
    } catch (const CLI::CallForAllHelp&) {
      result.message = app.help("", CLI::AppFormatMode::All);
      return result;
    } catch (const CLI::ParseError& e) {
      result.exit_code = kExitConfig;
      result.message = e.what();
      if (!app.get_subcommands().empty() && app.get_subcommands().front()->count("--help") > 0) {
        result.exit_code = kExitOk;
        result.message = app.get_subcommands().front()->help();
      }
      return result;
    }

    RunConfig cfg = b.cfg;
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (b.presence.given("no-initial-noise")) cfg.noise_before_first_layer = false;
    if (b.presence.given("ell")) cfg.ell = b.ell;
    if (b.presence.given("epsilon")) cfg.epsilon = b.epsilon;
    if (b.presence.given("delta")) cfg.delta = b.delta;
    if (b.presence.given("sample-seed")) cfg.sample_seed = b.sample_seed;
    if (b.presence.given("k")) cfg.k = b.k;
    if (b.presence.given("format")) cfg.format = parse_format(b.format);
    if (cfg.subcommand == "spoof" && !b.presence.given("spoof-samples")) cfg.samples = 0;
    result.config = cfg;
  } catch (const Error& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  }
  return result;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    Output o(c, out);
    const Format f = c.format.value_or(default_format(c.subcommand));
    const std::string& s = c.subcommand;
    if (s == "gen") {
      cmd_gen(c, o);
    } else if (s == "simulate") {
      cmd_simulate(c, o, f);
    } else if (s == "marginal") {
      cmd_marginal(c, o, f);
    } else if (s == "sample") {
      cmd_sample(c, o, f);
    } else if (s == "oracle") {
      cmd_oracle(c, o, f);
    } else if (s == "enumerate") {
      cmd_enumerate(c, o, f);
    } else if (s == "weights") {
      cmd_weights(c, o, f);
    } else if (s == "xeb") {
      cmd_xeb(c, o, f);
    } else if (s == "xquath") {
      cmd_xquath(c, o, f);
    } else if (s == "spoof") {
      cmd_spoof(c, o, f, c.samples > 0);
    } else if (s == "tvd-curve") {
      cmd_tvd_curve(c, o, f);
    } else if (s == "uniformity") {
      cmd_uniformity(c, o, f);
    } else {
      throw ConfigError("unknown subcommand '" + s + "'");
    }
    o.os().flush();
    return kExitOk;
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const std::overflow_error& e) {
    err << "size cap: " << e.what() << '\n';
    return kExitSizeCap;
  } catch (const NumericalError& e) {
    err << "numerical: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const json::exception& e) {
    err << "config: " << e.what() << '\n';
    return kExitConfig;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome p = parse_args(args);
  if (!p.config) {
    if (p.exit_code == kExitOk) {
      out << p.message;
    } else {
      err << p.message << '\n';
    }
    return p.exit_code;
  }
  return run(*p.config, out, err);
}

}  // namespace ppath::cli
