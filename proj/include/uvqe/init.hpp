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
#include "uvqe/pauli.hpp"
#include "uvqe/rng.hpp"
#include "uvqe/types.hpp"

namespace uvqe {

struct InitConfig {
  double sigma = 0.05;  // std-dev of the rotation angles, radians
  int layers = 1;
  // One string per layer; empty samples each string uniformly at random.
  std::vector<PauliString> pauli_choices;
};

// cos(angle) I - i sin(angle) P, the rotation generated by a Pauli string.
Matrix pauli_rotation(const PauliString& p, double angle);

// N layers of small-angle random Pauli rotations with angles i.i.d.
// N(0, sigma^2); reference state e_0. Per layer the string is sampled first
// (when not fixed), then the angle.
CircuitState sample_initial_layers(const InitConfig& cfg, int qubits,
                                   Rng& rng);

struct InitBoundInputs {
  double ref_energy = 0.0;     // <phi_0| H |phi_0>
  double ground_energy = 0.0;  // E_0
  double h_norm = 0.0;         // ||H||
  double gap = 0.0;            // Delta_1
  int layers = 1;              // N
  double sigma = 0.0;
  double delta = 0.1;  // failure probability
};

// High-probability bound on the initialization gap:
// A^N (ref - E_0) + (1 - A^N)(||H|| - E_0) + 2 ||H|| sigma sqrt(2N log(2/d))
// with A = (1 + exp(-2 sigma^2)) / 2.
double init_error_bound(const InitBoundInputs& inputs);

// Interval of sigma^2 values for which the three bound terms each stay below
// their share c_i * gap of the basin radius; empty when the constraints
// cannot be met jointly.
struct SigmaInterval {
  bool empty = true;
  double lo = 0.0;  // sigma^2
  double hi = 0.0;  // sigma^2
};

// Closed-form interval using the small-sigma approximation A^N ~ exp(-N s^2).
// The constants must be positive and sum to 1/2. With exact_refine set, the
// returned interval is additionally restricted to the grid-verified region of
// the exact (non-approximated) constraints.
SigmaInterval feasible_sigma_interval(const InitBoundInputs& inputs, double c1,
                                      double c2, double c3,
                                      bool exact_refine = false);

// Exact three-constraint predicate at a given sigma^2 (no approximation).
bool sigma_constraints_hold(const InitBoundInputs& inputs, double c1,
                            double c2, double c3, double sigma_sq);

// Expected initialization objective E[g(U^0)] = <phi_0| H_N |phi_0> via the
// recursion H_k = a H_{k-1} + b P_k H_{k-1} P_k with a = (1+exp(-2s^2))/2 and
// b = 1 - a.
double empirical_expectation_recursion(const Matrix& h, const Vector& reference,
                                       const std::vector<PauliString>& paulis,
                                       double sigma);

}  // namespace uvqe
