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

#include <vector>

#include "uvqe/circuit.hpp"
#include "uvqe/hamiltonian.hpp"
#include "uvqe/types.hpp"

namespace uvqe {

// Tangent element xi at a unitary base point: xi = Omega * U with Omega
// skew-Hermitian.
struct TangentVector {
  Matrix base;
  Matrix direction;
};

// Orthogonal projection of an ambient matrix onto the tangent space at U:
// xi = A - U * sym(U^dagger A).
TangentVector project_tangent(const Matrix& u, const Matrix& ambient);

// Riemannian gradient of the single-unitary objective at U:
// H U rho_0 - U sym(U^dagger H U rho_0) with rho_0 = |ref><ref|.
TangentVector riemannian_gradient(const Matrix& h, const Vector& reference,
                                  const Matrix& u);

// Riemannian gradient with respect to one layer of a product circuit,
// layer index in [0, depth).
TangentVector layer_riemannian_gradient(const Matrix& h,
                                        const CircuitState& circuit,
                                        int layer);

// All layer gradients of one iterate, sharing the prefix/suffix sweeps.
std::vector<Matrix> all_layer_gradients(const Matrix& h,
                                        const CircuitState& circuit);

// Polar retraction: unitary factor of base + direction.
Matrix retract(const TangentVector& tv);
Matrix retract(const Matrix& base, const Matrix& direction);

// Hessian bilinear form of the single-unitary objective at the critical point
// of eigenlevel `level`, evaluated on the tangent direction Omega * U with
// Omega skew-Hermitian in the computational basis:
// 2 sum_l (E_l - E_level) |Omega_{l,level}|^2 in the eigenbasis.
double hessian_bilinear(const SpectralData& spec, int level,
                        const Matrix& omega);

enum class CriticalPointKind { GlobalMinimum, StrictSaddle };

struct CriticalPoint {
  int level = 0;
  Matrix unitary;  // maps the reference state onto eigenvector `level`
  CriticalPointKind kind = CriticalPointKind::GlobalMinimum;
  Matrix witness;  // skew-Hermitian descent direction, saddles only
  double witness_value = 0.0;
};

// One critical point per eigenlevel: global minima for levels inside the
// ground cluster, strict saddles above it, each saddle carrying a witness
// direction with negative Hessian value.
std::vector<CriticalPoint> classify_critical_points(const SpectralData& spec,
                                                    const Vector& reference);

// (gap^2 / 4) * p * (1 - p) with p the squared weight of the state outside
// the ground cluster; a lower bound on the squared gradient norm.
double gradient_lower_bound(const SpectralData& spec, const Vector& state);

// Rank-2 unitary mapping `from` exactly onto `to` and acting as the identity
// on the orthogonal complement of their span.
Matrix completion_unitary(const Vector& from, const Vector& to);

}  // namespace uvqe
