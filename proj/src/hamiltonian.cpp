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

#include "uvqe/hamiltonian.hpp"

#include <algorithm>
#include <set>

#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"

namespace uvqe {

Vector CircuitState::output_state() const {
  Vector v = reference;
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    v = (*it) * v;
  }
  return v;
}

CircuitState identity_circuit(int dim, int num_layers) {
  if (dim < 1 || num_layers < 1) {
    fail(ErrorCode::InvalidArgument, "dimension and depth must be positive");
  }
  CircuitState c;
  c.reference = basis_state(dim, 0);
  c.layers.assign(num_layers, Matrix::Identity(dim, dim));
  return c;
}

double SpectralData::norm() const {
  return std::max(std::abs(energies(0)), std::abs(energies(dim() - 1)));
}

SpectralData analyze_spectrum(const Matrix& h, double cluster_tol) {
  if (cluster_tol <= 0.0) {
    fail(ErrorCode::InvalidArgument, "cluster tolerance must be positive");
  }
  HermitianEigen eig = hermitian_eigen(h);
  const int dim = static_cast<int>(eig.eigenvalues.size());
  const double e0 = eig.eigenvalues(0);
  int s = dim;
  for (int k = 1; k < dim; ++k) {
    if (eig.eigenvalues(k) - e0 >= cluster_tol) {
      s = k;
      break;
    }
  }
  if (s == dim) {
    fail(ErrorCode::GaplessSpectrum,
         "all eigenvalues lie within the cluster tolerance of the ground "
         "energy");
  }
  SpectralData spec;
  spec.energies = std::move(eig.eigenvalues);
  spec.eigenvectors = std::move(eig.eigenvectors);
  spec.ground_degeneracy = s;
  spec.gap = spec.energies(s) - e0;
  spec.ground_projector =
      spec.eigenvectors.leftCols(s) * spec.eigenvectors.leftCols(s).adjoint();
  return spec;
}

SpectralData analyze_spectrum(const Matrix& h) {
  const double scale = std::max(1.0, spectral_norm(h));
  return analyze_spectrum(h, 1e-8 * scale);
}

PauliHamiltonian tfim(int qubits) {
  if (qubits < 2) {
    fail(ErrorCode::InvalidArgument, "the Ising chain needs at least 2 sites");
  }
  if (qubits > kMaxQubits) {
    fail(ErrorCode::TooManyQubits, "qubit count exceeds the supported maximum");
  }
  PauliHamiltonian ph;
  ph.qubits = qubits;
  for (int site = 0; site < qubits; ++site) {
    PauliString p;
    p.letters.assign(qubits, PauliOp::I);
    p.letters[site] = PauliOp::X;
    ph.terms.push_back(PauliTerm{-0.5, std::move(p)});
  }
  for (int site = 0; site + 1 < qubits; ++site) {
    PauliString p;
    p.letters.assign(qubits, PauliOp::I);
    p.letters[site] = PauliOp::Z;
    p.letters[site + 1] = PauliOp::Z;
    ph.terms.push_back(PauliTerm{-1.0, std::move(p)});
  }
  return ph;
}

PauliHamiltonian random_pauli_hamiltonian(int qubits, int num_terms, Rng& rng) {
  if (num_terms < 1) {
    fail(ErrorCode::InvalidArgument, "term count must be at least 1");
  }
  if (qubits < 1 || qubits > kMaxQubits) {
    fail(ErrorCode::InvalidArgument, "unsupported qubit count");
  }
  const double capacity = std::pow(4.0, qubits);
  if (static_cast<double>(num_terms) > capacity) {
    fail(ErrorCode::TooFewDistinctStrings,
         "more terms requested than distinct strings exist");
  }
  PauliHamiltonian ph;
  ph.qubits = qubits;
  std::set<std::string> seen;
  while (static_cast<int>(ph.terms.size()) < num_terms) {
    PauliString p = sample_random_pauli(qubits, rng);
    if (!seen.insert(p.text()).second) continue;  // collision, resample
    ph.terms.push_back(PauliTerm{0.0, std::move(p)});
  }
  double sum_sq = 0.0;
  for (auto& term : ph.terms) {
    term.coefficient = rng.normal();
    sum_sq += term.coefficient * term.coefficient;
  }
  const double scale = 1.0 / std::sqrt(sum_sq);
  for (auto& term : ph.terms) term.coefficient *= scale;
  return ph;
}

double energy(const Matrix& h, const CircuitState& circuit) {
  if (h.rows() != h.cols()) {
    fail(ErrorCode::NonSquare, "Hamiltonian must be square");
  }
  if (circuit.reference.size() != h.rows()) {
    fail(ErrorCode::DimensionMismatch,
         "reference state does not match the Hamiltonian dimension");
  }
  for (const Matrix& layer : circuit.layers) {
    if (layer.rows() != h.rows() || layer.cols() != h.cols()) {
      fail(ErrorCode::DimensionMismatch,
           "layer dimension does not match the Hamiltonian");
    }
    if (!is_unitary(layer, 1e-8)) {
      fail(ErrorCode::NonUnitary, "circuit layer is not unitary");
    }
  }
  const Vector phi = circuit.output_state();
  return phi.dot(h * phi).real();
}

}  // namespace uvqe
