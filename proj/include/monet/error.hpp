/* Copyright (c) 2026 The monet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <stdexcept>
#include <string>

namespace monet {

// Input files that are absent or unreadable. CLI exit code 3.
struct MissingInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed content in an otherwise present input. CLI exit code 3.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape mismatches between matrices/graphs. CLI exit code 3.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid parameter combinations. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values, undefined statistics, diverged optimization. CLI exit code 4.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace monet
