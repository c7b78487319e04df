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

#pragma once

#include "uvqe/rng.hpp"
#include "uvqe/types.hpp"

namespace uvqe {

struct HermitianEigen {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, orthonormal
};

// Hermitian part (A + A^dagger) / 2.
Matrix sym(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol);
bool is_unitary(const Matrix& u, double tol);
bool is_finite(const Matrix& a);

// Full eigendecomposition of a Hermitian matrix. The input is accepted when
// ||A - A^dagger||_F <= 1e-10 * max(1, ||A||_F) and symmetrized before
// factorization.
HermitianEigen hermitian_eigen(const Matrix& h);

// Unitary polar factor Q = A (A^dagger A)^{-1/2}, the closest unitary to A in
// Frobenius norm. Requires the smallest singular value to exceed
// 1e-12 times the largest.
Matrix polar_unitary(const Matrix& a);

// Largest singular value.
double spectral_norm(const Matrix& a);

// Haar-distributed random unitary (QR of a Ginibre matrix with the phase
// convention fixed from the diagonal of R).
Matrix haar_unitary(int dim, Rng& rng);

// Random Hermitian matrix with Gaussian entries, normalized to unit spectral
// norm scale only by construction (entries O(1)).
Matrix random_hermitian(int dim, Rng& rng);

// Normalized random state vector.
Vector random_state(int dim, Rng& rng);

// Computational basis vector e_index.
Vector basis_state(int dim, int index);

}  // namespace uvqe
