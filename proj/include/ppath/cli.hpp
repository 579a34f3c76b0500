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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ppath/serialize.hpp"

namespace ppath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSizeCap = 3;
inline constexpr int kExitNumerical = 4;

enum class Format { Csv, Json, Binary };

/// Fully resolved parameters of one invocation.
struct RunConfig {
  std::string subcommand;

  // Circuit: loaded from `circuit_path`, or generated.
  std::string circuit_path;
  int n = 4;
  int d = 3;
  std::string arch = "brickwork";
  std::string gateset = "haar";
  std::uint64_t seed = 0;
  bool strict_final_dressing = false;

  double gamma = 0.0;
  bool noise_before_first_layer = true;

  std::optional<int> ell;
  std::optional<double> epsilon;
  std::optional<double> delta;
  double c_margin = 1.0;

  std::uint64_t trials = 1000;
  std::uint64_t samples = 1000;
  std::optional<std::uint64_t> sample_seed;

  std::string x;        ///< simulate: single outcome
  std::string fixed;    ///< marginal: "q=b,q=b"
  bool count_only = false;
  std::string mode = "noisy";          ///< oracle: ideal | noisy
  std::optional<int> k;                ///< weights: single degree
  std::string method = "exact";        ///< weights: exact | monte-carlo
  std::string q = "noisy";             ///< xeb: ideal | noisy | spoofer | uniform
  bool sampled = false;                ///< xeb: estimate from samples of q
  std::string estimator = "single-path";  ///< xquath: single-path | trivial
  std::string ells;                    ///< tvd-curve: "5,6,9" or "5-30"

  int workers = 0;
  std::optional<Format> format;
  std::string output;
};

json config_to_json(const RunConfig& c);

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
  std::string message;  ///< help text or error
};

/// Parses arguments (program name excluded). A JSON object given with
/// --config supplies defaults; explicit flags override it.
ParseOutcome parse_args(const std::vector<std::string>& args);

/// Executes one subcommand; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args then run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppath::cli
