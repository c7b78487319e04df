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

#include "uvqe/circuit.hpp"
#include "uvqe/pauli.hpp"
#include "uvqe/rng.hpp"
#include "uvqe/types.hpp"

namespace uvqe {

// Spectral analysis of a Hermitian operator: ascending energies, eigenvector
// columns, the size s of the (possibly degenerate) ground cluster, the gap to
// the first energy above it, and the projector onto the ground cluster.
struct SpectralData {
  RealVector energies;
  Matrix eigenvectors;
  int ground_degeneracy = 0;  // s: first index with E_k strictly above E_0
  double gap = 0.0;           // E_s - E_0
  Matrix ground_projector;

  int dim() const { return static_cast<int>(energies.size()); }
  double ground_energy() const { return energies(0); }
  // max |E_k|; equals the spectral norm for Hermitian input.
  double norm() const;
};

// Default cluster tolerance is 1e-8 * max(1, ||H||).
SpectralData analyze_spectrum(const Matrix& h, double cluster_tol);
SpectralData analyze_spectrum(const Matrix& h);

// Transverse-field Ising chain with open boundary: n single-site X terms with
// coefficient -0.5 and n-1 nearest-neighbor ZZ terms with coefficient -1.0.
PauliHamiltonian tfim(int qubits);

// L distinct uniformly random strings with Gaussian coefficients normalized
// so that the squared coefficients sum to one.
PauliHamiltonian random_pauli_hamiltonian(int qubits, int num_terms, Rng& rng);

// <phi_0| U_N^dagger ... U_1^dagger H U_1 ... U_N |phi_0>, evaluated by
// applying layers right-to-left to the state. Layers must be unitary within
// 1e-8.
double energy(const Matrix& h, const CircuitState& circuit);

}  // namespace uvqe
