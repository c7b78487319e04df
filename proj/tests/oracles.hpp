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

// Independent reference implementations used only by tests. None of these
// share code with the library paths they check: the eigensolver is a cyclic
// Jacobi sweep, the Kronecker product is a direct double loop, the matrix
// exponential is scaling-and-squaring, and the allocation optimum is an
// exhaustive integer search.

#pragma once

#include <vector>

#include "uvqe/types.hpp"

namespace oracle {

// Eigenvalues (ascending) and eigenvectors of a Hermitian matrix by cyclic
// complex Jacobi rotations.
struct JacobiEigen {
  uvqe::RealVector eigenvalues;
  uvqe::Matrix eigenvectors;
};
JacobiEigen jacobi_eigen(const uvqe::Matrix& h);

// Direct index-by-index Kronecker product.
uvqe::Matrix kronecker(const uvqe::Matrix& a, const uvqe::Matrix& b);

// exp(A) by scaling-and-squaring with a truncated Taylor series.
uvqe::Matrix expm(const uvqe::Matrix& a);

// Closest-unitary factor through the eigendecomposition of A^dagger A
// (inverse square root route).
uvqe::Matrix polar_via_eigen(const uvqe::Matrix& a);

// Exhaustive integer minimizer of sum_k alpha_k^2 / m_k subject to
// sum m_k = total and m_k >= 1. Feasible only for small sizes.
std::vector<long> best_integer_allocation(const std::vector<double>& alphas,
                                          long total);

double allocation_objective(const std::vector<double>& alphas,
                            const std::vector<long>& shots);

}  // namespace oracle
