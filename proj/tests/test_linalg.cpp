// Copyright 2026 The uvqe authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uvqe/linalg.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "oracles.hpp"
#include "uvqe/errors.hpp"
#include "uvqe/hamiltonian.hpp"
#include "uvqe/pauli.hpp"

namespace {

using uvqe::Complex;
using uvqe::Matrix;
using uvqe::Rng;

Matrix pauli_x() {
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

// Dense transverse-field Ising matrix for two sites, written out by hand in
// the computational basis |00>, |01>, |10>, |11>.
Matrix tfim2_dense() {
  Matrix h(4, 4);
  h << -1.0, -0.5, -0.5, 0.0,
       -0.5, 1.0, 0.0, -0.5,
       -0.5, 0.0, 1.0, -0.5,
       0.0, -0.5, -0.5, -1.0;
  return h;
}

TEST(HermitianEigen, DiagonalCase) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const auto eig = uvqe::hermitian_eigen(h);
  EXPECT_NEAR(eig.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues(1), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(eig.eigenvectors(1, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(eig.eigenvectors(0, 1)), 1.0, 1e-12);
}

TEST(HermitianEigen, PauliXSpectrum) {
  const auto eig = uvqe::hermitian_eigen(pauli_x());
  EXPECT_NEAR(eig.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues(1), 1.0, 1e-14);
}

TEST(HermitianEigen, TfimTwoSitesMatchesIndependentSolver) {
  const Matrix h = tfim2_dense();
  const auto eig = uvqe::hermitian_eigen(h);
  const auto ref = oracle::jacobi_eigen(h);
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(eig.eigenvalues(k), ref.eigenvalues(k), 1e-9);
  }
  // Closed-form spectrum of the two-site chain.
  const double r2 = std::sqrt(2.0);
  EXPECT_NEAR(eig.eigenvalues(0), -r2, 1e-12);
  EXPECT_NEAR(eig.eigenvalues(1), -1.0, 1e-12);
  EXPECT_NEAR(eig.eigenvalues(2), 1.0, 1e-12);
  EXPECT_NEAR(eig.eigenvalues(3), r2, 1e-12);
}

TEST(HermitianEigen, EigenpairResidualAndOrthonormality) {
  Rng rng(11);
  const Matrix h = uvqe::random_hermitian(8, rng);
  const auto eig = uvqe::hermitian_eigen(h);
  const double h_norm = uvqe::spectral_norm(h);
  for (int k = 0; k < 8; ++k) {
    const double residual =
        (h * eig.eigenvectors.col(k) -
         eig.eigenvalues(k) * eig.eigenvectors.col(k))
            .norm();
    EXPECT_LE(residual, 1e-9 * h_norm);
  }
  EXPECT_LE((eig.eigenvectors.adjoint() * eig.eigenvectors -
             Matrix::Identity(8, 8))
                .norm(),
            1e-10);
}

TEST(HermitianEigen, ReconstructionIdentity) {
  Rng rng(12);
  const Matrix h = uvqe::random_hermitian(8, rng);
  const auto eig = uvqe::hermitian_eigen(h);
  Matrix rebuilt = Matrix::Zero(8, 8);
  for (int k = 0; k < 8; ++k) {
    rebuilt += eig.eigenvalues(k) *
               (eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint());
  }
  EXPECT_LE((rebuilt - h).norm(), 1e-9 * h.norm());
}

TEST(HermitianEigen, RejectsNonSquare) {
  Matrix h = Matrix::Zero(2, 3);
  try {
    uvqe::hermitian_eigen(h);
    FAIL() << "expected an error";
  } catch (const uvqe::Error& e) {
    EXPECT_EQ(e.code(), uvqe::ErrorCode::NonSquare);
  }
}

TEST(HermitianEigen, RejectsNonHermitian) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 1) = 1.0;
  try {
    uvqe::hermitian_eigen(h);
    FAIL() << "expected an error";
  } catch (const uvqe::Error& e) {
    EXPECT_EQ(e.code(), uvqe::ErrorCode::NonHermitian);
  }
}

TEST(PolarUnitary, FixesUnitaryInput) {
  Rng rng(21);
  const Matrix u = uvqe::haar_unitary(5, rng);
  EXPECT_LE((uvqe::polar_unitary(u) - u).norm(), 1e-12);
}

TEST(PolarUnitary, PositiveScalingOfIdentity) {
  const Matrix a = 2.0 * Matrix::Identity(3, 3);
  EXPECT_LE((uvqe::polar_unitary(a) - Matrix::Identity(3, 3)).norm(), 1e-13);
}

TEST(PolarUnitary, MatchesEigendecompositionOracle) {
  Rng rng(22);
  Matrix a(5, 5);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      a(r, c) = Complex(rng.normal(), rng.normal());
    }
  }
  a += 3.0 * Matrix::Identity(5, 5);  // keep it comfortably invertible
  const Matrix q = uvqe::polar_unitary(a);
  EXPECT_LE((q - oracle::polar_via_eigen(a)).norm(), 1e-10);
  EXPECT_LE((q.adjoint() * q - Matrix::Identity(5, 5)).norm(), 1e-10);
}

TEST(PolarUnitary, MaximizesTraceAlignment) {
  Rng rng(23);
  Matrix a(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      a(r, c) = Complex(rng.normal(), rng.normal());
    }
  }
  const Matrix q = uvqe::polar_unitary(a);
  const double best = (q.adjoint() * a).trace().real();
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix r = uvqe::haar_unitary(4, rng);
    EXPECT_LE((r.adjoint() * a).trace().real(), best + 1e-9);
  }
}

TEST(PolarUnitary, RejectsRankDeficient) {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  try {
    uvqe::polar_unitary(a);
    FAIL() << "expected an error";
  } catch (const uvqe::Error& e) {
    EXPECT_EQ(e.code(), uvqe::ErrorCode::RankDeficient);
  }
}

TEST(SpectralNorm, IdentityAndDiagonal) {
  EXPECT_NEAR(uvqe::spectral_norm(Matrix::Identity(4, 4)), 1.0, 1e-12);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -5.0;
  EXPECT_NEAR(uvqe::spectral_norm(d), 5.0, 1e-12);
}

TEST(SpectralNorm, HermitianCaseAgreesWithEigenvalues) {
  const Matrix h = uvqe::reconstruct(uvqe::tfim(3));
  const auto eig = uvqe::hermitian_eigen(h);
  const double max_abs =
      std::max(std::abs(eig.eigenvalues(0)), std::abs(eig.eigenvalues(7)));
  EXPECT_NEAR(uvqe::spectral_norm(h), max_abs, 1e-10);
}

TEST(SpectralNorm, RejectsNonFinite) {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(uvqe::spectral_norm(a), uvqe::Error);
}

TEST(HaarUnitary, ProducesUnitaries) {
  Rng rng(31);
  for (int dim : {2, 5, 8}) {
    const Matrix u = uvqe::haar_unitary(dim, rng);
    EXPECT_LE((u.adjoint() * u - Matrix::Identity(dim, dim)).norm(), 1e-12);
  }
}

// The Jacobi reference solver itself must stand on its own: reconstruction
// and orthonormality on a random Hermitian input.
TEST(JacobiOracle, SelfConsistency) {
  Rng rng(41);
  const Matrix h = uvqe::random_hermitian(6, rng);
  const auto eig = oracle::jacobi_eigen(h);
  Matrix rebuilt = Matrix::Zero(6, 6);
  for (int k = 0; k < 6; ++k) {
    rebuilt += eig.eigenvalues(k) *
               (eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint());
    if (k > 0) EXPECT_LE(eig.eigenvalues(k - 1), eig.eigenvalues(k));
  }
  EXPECT_LE((rebuilt - h).norm(), 1e-11 * std::max(1.0, h.norm()));
  EXPECT_LE((eig.eigenvectors.adjoint() * eig.eigenvectors -
             Matrix::Identity(6, 6))
                .norm(),
            1e-11);
}

}  // namespace
