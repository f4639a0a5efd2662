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

#include <cstdint>

#include "monet/types.hpp"

namespace monet {

/// 1 - cos(angle) between two embedding rows. Rows with zero norm are
/// treated as maximally distant (similarity 0).
double cosine_distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                       const Eigen::Ref<const Eigen::RowVectorXd>& b);

/// Pearson correlation between the cosine-distance profiles of two
/// embeddings over a common set of node pairs. `sample_pairs` pairs are
/// drawn with the given seed; 0 means every unordered pair. Throws
/// NumericalError when either distance vector has zero variance.
double distance_correlation(const Matrix& embed_a, const Matrix& embed_b,
                            std::int64_t sample_pairs, std::uint64_t seed);

}  // namespace monet
