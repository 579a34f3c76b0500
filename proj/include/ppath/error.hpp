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

#include <stdexcept>
#include <string>

namespace ppath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched qubit counts, layer counts or vector lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed input objects: non-unitary gates, broken matchings, bad JSON.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A quantity that is real or nonnegative in exact arithmetic drifted too far.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Problem size above a configured oracle or enumeration cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration or unsupported parameter regime.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppath
