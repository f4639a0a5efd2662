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

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace monet {

// Embedding rows are accessed node-by-node in the training loops, so the
// dense matrices used throughout the model are row-major.
template <class Scalar>
using DenseMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<double>;
using Vector = DenseVector<double>;

using NodeId = std::int32_t;

enum class Variant { glove, glove_meta, monet };

inline std::string to_string(Variant v) {
  switch (v) {
    case Variant::glove: return "glove";
    case Variant::glove_meta: return "glove_meta";
    case Variant::monet: return "monet";
  }
  return "?";
}

Variant variant_from_string(const std::string& name);

}  // namespace monet
