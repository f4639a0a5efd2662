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

#include "monet/distances.hpp"

#include <cmath>
#include <vector>

#include "monet/error.hpp"
#include "monet/rng.hpp"

namespace monet {

double cosine_distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                       const Eigen::Ref<const Eigen::RowVectorXd>& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 1.0;
  return 1.0 - a.dot(b) / (na * nb);
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, syy = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0)
    throw NumericalError(
        "distance_correlation: zero-variance distance vector");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double distance_correlation(const Matrix& embed_a, const Matrix& embed_b,
                            std::int64_t sample_pairs, std::uint64_t seed) {
  const Eigen::Index n = embed_a.rows();
  if (embed_b.rows() != n)
    throw DimensionError("distance_correlation: row count mismatch");
  if (n < 3) throw DimensionError("distance_correlation: need >= 3 rows");
  if (sample_pairs != 0 && sample_pairs < 2)
    throw ConfigError("distance_correlation: sample_pairs must be 0 or >= 2");

  std::vector<double> da, db;
  auto push_pair = [&](Eigen::Index i, Eigen::Index j) {
    da.push_back(cosine_distance(embed_a.row(i), embed_a.row(j)));
    db.push_back(cosine_distance(embed_b.row(i), embed_b.row(j)));
  };

  if (sample_pairs == 0) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) push_pair(i, j);
  } else {
    Rng rng(derive_seed(seed, 0xd157c0));
    da.reserve(static_cast<size_t>(sample_pairs));
    db.reserve(static_cast<size_t>(sample_pairs));
    for (std::int64_t s = 0; s < sample_pairs; ++s) {
      const auto i =
          static_cast<Eigen::Index>(rng.bounded(static_cast<uint64_t>(n)));
      Eigen::Index j = i;
      while (j == i)
        j = static_cast<Eigen::Index>(rng.bounded(static_cast<uint64_t>(n)));
      push_pair(i, j);
    }
  }
  return pearson(da, db);
}

}  // namespace monet
