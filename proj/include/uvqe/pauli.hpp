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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "uvqe/rng.hpp"
#include "uvqe/types.hpp"

namespace uvqe {

enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Tensor product of single-qubit I/X/Y/Z operators. The leftmost letter acts
// on qubit 0, the highest-order tensor factor.
struct PauliString {
  std::vector<PauliOp> letters;

  int qubits() const { return static_cast<int>(letters.size()); }

  static PauliString from_text(std::string_view text);
  std::string text() const;

  bool operator==(const PauliString& other) const = default;
};

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

// Weighted sum of Pauli strings; the measurable form of a Hermitian operator.
struct PauliHamiltonian {
  int qubits = 0;
  std::vector<PauliTerm> terms;

  int dim() const { return 1 << qubits; }
  std::vector<double> coefficients() const;
};

inline constexpr int kMaxQubits = 10;

// Dense 2^n x 2^n expansion via the Kronecker product.
Matrix dense(const PauliString& p);

// Applies the string to a state vector without forming the dense matrix.
Vector apply(const PauliString& p, const Vector& state);

// <state| P |state>, real by Hermiticity.
double expectation(const PauliString& p, const Vector& state);

// Expands a Hermitian matrix of dimension 2^n over all 4^n strings with
// coefficients trace(P H) / 2^n, pruning magnitudes below 1e-12.
PauliHamiltonian decompose(const Matrix& h);

// Dense matrix of the weighted sum.
Matrix reconstruct(const PauliHamiltonian& ph);

// Each letter independently uniform over {I, X, Y, Z}.
PauliString sample_random_pauli(int qubits, Rng& rng);

// Text format: one `<coefficient> <string>` per line, `#` comments, blank
// lines ignored.
PauliHamiltonian parse_hamiltonian_text(std::istream& in);
PauliHamiltonian parse_hamiltonian_file(const std::string& path);
void write_hamiltonian_text(const PauliHamiltonian& ph, std::ostream& out);
void write_hamiltonian_file(const PauliHamiltonian& ph,
                            const std::string& path);

}  // namespace uvqe
