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

#include <doctest.h>

#include "monet/distances.hpp"
#include "monet/error.hpp"
#include "monet/model.hpp"
#include "monet/pca.hpp"
#include "monet/rng.hpp"

using namespace monet;

TEST_CASE("pca reproduces pairwise distances of planar data") {
  // Points living in a 2-D plane embedded in 6 dimensions.
  const int n = 25;
  const Matrix flat = random_embedding(n, 2, 12);
  Matrix basis = Matrix::Zero(2, 6);
  basis(0, 1) = 1.0;
  basis(1, 4) = -1.0;
  const Matrix lifted = flat * basis;
  const Matrix coords = pca_2d(lifted);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double orig = (lifted.row(i) - lifted.row(j)).norm();
      const double proj = (coords.row(i) - coords.row(j)).norm();
      CHECK(std::abs(orig - proj) < 1e-8);
    }
  }
}

TEST_CASE("pca of identical points is all zero") {
  Matrix w = Matrix::Ones(10, 4) * 3.7;
  const Matrix coords = pca_2d(w);
  CHECK(coords.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pca component variances are ordered") {
  const Matrix w = random_embedding(200, 6, 8);
  const Matrix coords = pca_2d(w);
  const double var0 = coords.col(0).squaredNorm();
  const double var1 = coords.col(1).squaredNorm();
  CHECK(var0 >= var1);
}

TEST_CASE("pca sign convention is stable across runs") {
  const Matrix w = random_embedding(50, 5, 15);
  const Matrix a = pca_2d(w);
  const Matrix b = pca_2d(w);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("pca rejects a single column") {
  CHECK_THROWS_AS(pca_2d(random_embedding(5, 1, 1)), DimensionError);
}

TEST_CASE("distance correlation of a matrix with itself is 1") {
  const Matrix w = random_embedding(30, 4, 5);
  CHECK(distance_correlation(w, w, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("cosine distances are scale invariant") {
  const Matrix w = random_embedding(30, 4, 6);
  const Matrix scaled = 3.0 * w;
  CHECK(distance_correlation(w, scaled, 0, 1) == doctest::Approx(1.0));
  CHECK(distance_correlation(w, scaled, 200, 9) == doctest::Approx(1.0));
}

TEST_CASE("independent embeddings have near-zero distance correlation") {
  const Matrix a = random_embedding(120, 16, 21);
  const Matrix b = random_embedding(120, 16, 22);
  CHECK(std::abs(distance_correlation(a, b, 0, 1)) < 0.1);
}

TEST_CASE("zero-variance distances are an error") {
  Matrix w = Matrix::Zero(5, 3);
  w.col(0).setOnes();  // all rows identical -> all cosine distances equal
  const Matrix other = random_embedding(5, 3, 2);
  CHECK_THROWS_AS(distance_correlation(w, other, 0, 1), NumericalError);
}

TEST_CASE("sampled pairs are reproducible from the seed") {
  const Matrix a = random_embedding(60, 8, 31);
  const Matrix b = random_embedding(60, 8, 32);
  const double r1 = distance_correlation(a, b, 500, 77);
  const double r2 = distance_correlation(a, b, 500, 77);
  CHECK(r1 == r2);
}
