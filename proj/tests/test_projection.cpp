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

#include "monet/error.hpp"
#include "monet/model.hpp"
#include "monet/projection.hpp"

using namespace monet;

TEST_CASE("basis of a standard basis column is that column") {
  const int n = 12;
  Matrix z = Matrix::Zero(n, 1);
  z(0, 0) = 1.0;
  const ProjectionBasis basis = orthonormal_basis(z);
  CHECK(basis.rank == 1);
  CHECK(std::abs(std::abs(basis.basis(0, 0)) - 1.0) < 1e-14);
  CHECK(basis.basis.bottomRows(n - 1).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("identical columns collapse to rank 1") {
  Matrix z = random_embedding(20, 1, 3);
  Matrix zz(20, 2);
  zz.col(0) = z.col(0);
  zz.col(1) = z.col(0);
  const ProjectionBasis basis = orthonormal_basis(zz);
  CHECK(basis.rank == 1);
}

TEST_CASE("basis columns are orthonormal for random input") {
  const Matrix z = random_embedding(40, 2, 11);
  const ProjectionBasis basis = orthonormal_basis(z);
  REQUIRE(basis.rank == 2);
  const Matrix gram = basis.basis.transpose() * basis.basis;
  CHECK((gram - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("all-zero metadata embedding degrades to the identity") {
  const Matrix z = Matrix::Zero(10, 2);
  const ProjectionBasis basis = orthonormal_basis(z);
  CHECK(basis.rank == 0);
  const Matrix w = random_embedding(10, 3, 5);
  const Matrix out = project(w, basis);
  CHECK((out.array() == w.array()).all());
}

TEST_CASE("lambda outside [0,1] is rejected") {
  const Matrix z = random_embedding(8, 1, 2);
  CHECK_THROWS_AS(orthonormal_basis(z, 1e-8, 1.5), ConfigError);
  CHECK_THROWS_AS(orthonormal_basis(z, 1e-8, -0.1), ConfigError);
}

TEST_CASE("projection with a coordinate basis zeroes that row") {
  const int n = 6;
  Matrix z = Matrix::Zero(n, 1);
  z(1, 0) = 2.5;  // spans e_2
  const ProjectionBasis basis = orthonormal_basis(z, 1e-8, 1.0);
  const Matrix w = random_embedding(n, 4, 7);
  const Matrix out = project(w, basis);
  CHECK(out.row(1).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((out.topRows(1) - w.topRows(1)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((out.bottomRows(n - 2) - w.bottomRows(n - 2)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("lambda 0 returns the input bit for bit") {
  const Matrix z = random_embedding(15, 2, 9);
  const ProjectionBasis basis = orthonormal_basis(z, 1e-8, 0.0);
  const Matrix w = random_embedding(15, 3, 10);
  const Matrix out = project(w, basis);
  CHECK((out.array() == w.array()).all());
}

TEST_CASE("projection at lambda 1 is idempotent and contractive") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const Matrix z = random_embedding(30, 2, seed);
    const Matrix w = random_embedding(30, 5, seed + 100);
    const ProjectionBasis basis = orthonormal_basis(z, 1e-8, 1.0);
    const Matrix once = project(w, basis);
    const Matrix twice = project(once, basis);
    CHECK((twice - once).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(once.norm() <= w.norm() + 1e-12);
  }
  // Contraction for intermediate relaxation too.
  const Matrix z = random_embedding(30, 2, 4);
  const Matrix w = random_embedding(30, 5, 104);
  for (double lambda : {0.25, 0.5, 0.75}) {
    const ProjectionBasis basis = orthonormal_basis(z, 1e-8, lambda);
    CHECK(project(w, basis).norm() <= w.norm() + 1e-12);
  }
}

TEST_CASE("leakage of a hand-checked 2x2 case") {
  Matrix z(2, 2), w(2, 2);
  z << 1, 0, 0, 1;
  w << 1, 1, 1, -1;
  CHECK(metadata_leakage(z, w) == doctest::Approx(4.0));
}

TEST_CASE("leakage is zero for orthogonal factors") {
  Matrix z = Matrix::Zero(4, 1);
  z(0, 0) = 1.0;
  Matrix w = Matrix::Zero(4, 2);
  w(1, 0) = 3.0;
  w(2, 1) = -2.0;
  CHECK(metadata_leakage(z, w) == 0.0);
}

TEST_CASE("projection removes all linear leakage") {
  for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
    const Matrix z = random_embedding(50, 2, seed);
    const Matrix w = random_embedding(50, 8, seed + 50);
    const ProjectionBasis basis = orthonormal_basis(z, 1e-8, 1.0);
    const Matrix rejected = project(w, basis);
    CHECK(metadata_leakage(z, rejected) <=
          1e-8 * z.squaredNorm() * w.squaredNorm());
    // Unsquared form of the same bound.
    CHECK(std::sqrt(metadata_leakage(z, rejected)) <=
          1e-8 * z.norm() * w.norm());
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const Matrix z = random_embedding(10, 1, 1);
  const Matrix w = random_embedding(11, 2, 2);
  CHECK_THROWS_AS(metadata_leakage(z, w), DimensionError);
  const ProjectionBasis basis = orthonormal_basis(z);
  CHECK_THROWS_AS(project(w, basis), DimensionError);
}

TEST_CASE("sparse metadata embeddings yield a sparse projector") {
  // Z supported on a handful of rows: the basis records the support and the
  // in-place projection matches the dense formula everywhere.
  const int n = 60;
  Matrix z = Matrix::Zero(n, 2);
  const Matrix block = random_embedding(5, 2, 17);
  for (int k = 0; k < 5; ++k) z.row(7 * k + 3) = block.row(k);

  const ProjectionBasis basis = orthonormal_basis(z, 1e-8, 1.0);
  REQUIRE(basis.sparse());
  CHECK(basis.support.size() == 5);
  for (NodeId i : basis.support) CHECK(i % 7 == 3);

  const Matrix w = random_embedding(n, 6, 18);
  const Matrix dense = w - basis.lambda * (basis.basis *
                                           (basis.basis.transpose() * w));
  Matrix in_place = w;
  project_in_place(in_place, basis);
  CHECK((in_place - dense).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(metadata_leakage(z, in_place) <=
        1e-8 * z.squaredNorm() * w.squaredNorm());
  // Rows outside the support are untouched, bit for bit.
  for (int i = 0; i < n; ++i) {
    if (i % 7 != 3)
      CHECK((in_place.row(i).array() == w.row(i).array()).all());
  }
}
