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

#include "uvqe/pauli.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"

namespace uvqe {

namespace {

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

Matrix single_qubit(PauliOp op) {
  Matrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (op) {
    case PauliOp::I:
      m << 1, 0, 0, 1;
      break;
    case PauliOp::X:
      m << 0, 1, 1, 0;
      break;
    case PauliOp::Y:
      m << 0, -i, i, 0;
      break;
    case PauliOp::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

// Bit masks encoding the string action on computational basis indices.
// Qubit j occupies bit (n-1-j), matching the Kronecker order where the
// leftmost letter is the highest-order factor.
struct StringMasks {
  std::uint64_t flip = 0;   // X and Y qubits
  std::uint64_t phase = 0;  // Z and Y qubits
  int y_count = 0;
};

StringMasks masks_of(const PauliString& p) {
  StringMasks m;
  const int n = p.qubits();
  for (int j = 0; j < n; ++j) {
    const std::uint64_t bit = 1ULL << (n - 1 - j);
    switch (p.letters[j]) {
      case PauliOp::I:
        break;
      case PauliOp::X:
        m.flip |= bit;
        break;
      case PauliOp::Y:
        m.flip |= bit;
        m.phase |= bit;
        ++m.y_count;
        break;
      case PauliOp::Z:
        m.phase |= bit;
        break;
    }
  }
  return m;
}

// P |b> = y_factor * (-1)^{popcount(b & phase)} |b ^ flip>
Complex y_factor(int y_count) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[y_count & 3];
}

void check_qubit_count(int n) {
  if (n < 1) {
    fail(ErrorCode::InvalidArgument, "qubit count must be at least 1");
  }
  if (n > kMaxQubits) {
    fail(ErrorCode::TooManyQubits,
         "qubit count exceeds the supported maximum of " +
             std::to_string(kMaxQubits));
  }
}

int qubits_from_dim(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    fail(ErrorCode::NonPowerOfTwoDim,
         "dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

PauliString string_from_code(int qubits, std::uint64_t code) {
  PauliString p;
  p.letters.resize(qubits);
  for (int j = qubits - 1; j >= 0; --j) {
    p.letters[j] = static_cast<PauliOp>(code & 3);
    code >>= 2;
  }
  return p;
}

}  // namespace

PauliString PauliString::from_text(std::string_view text) {
  if (text.empty()) {
    fail(ErrorCode::ParseError, "empty Pauli string");
  }
  PauliString p;
  p.letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'I':
        p.letters.push_back(PauliOp::I);
        break;
      case 'X':
        p.letters.push_back(PauliOp::X);
        break;
      case 'Y':
        p.letters.push_back(PauliOp::Y);
        break;
      case 'Z':
        p.letters.push_back(PauliOp::Z);
        break;
      default:
        fail(ErrorCode::ParseError,
             std::string("invalid Pauli letter '") + c + "'");
    }
  }
  return p;
}

std::string PauliString::text() const {
  std::string s;
  s.reserve(letters.size());
  for (PauliOp op : letters) {
    s.push_back(kLetters[static_cast<int>(op)]);
  }
  return s;
}

std::vector<double> PauliHamiltonian::coefficients() const {
  std::vector<double> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.coefficient);
  return out;
}

Matrix dense(const PauliString& p) {
  check_qubit_count(p.qubits());
  // Fold right-to-left so the leftmost letter ends up as the highest-order
  // Kronecker factor.
  Matrix result = Matrix::Identity(1, 1);
  for (auto it = p.letters.rbegin(); it != p.letters.rend(); ++it) {
    const Matrix factor = single_qubit(*it);
    Matrix next(result.rows() * 2, result.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        next.block(r * result.rows(), c * result.cols(), result.rows(),
                   result.cols()) = result * factor(r, c);
      }
    }
    result = std::move(next);
  }
  return result;
}

Vector apply(const PauliString& p, const Vector& state) {
  check_qubit_count(p.qubits());
  const auto dim = Eigen::Index{1} << p.qubits();
  if (state.size() != dim) {
    fail(ErrorCode::DimensionMismatch,
         "state dimension does not match the Pauli string");
  }
  const StringMasks m = masks_of(p);
  const Complex yf = y_factor(m.y_count);
  Vector out(dim);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    const double sign =
        (std::popcount(b & m.phase) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(b ^ m.flip)) =
        yf * sign * state(static_cast<Eigen::Index>(b));
  }
  return out;
}

double expectation(const PauliString& p, const Vector& state) {
  const Vector mapped = apply(p, state);
  return state.dot(mapped).real();
}

PauliHamiltonian decompose(const Matrix& h) {
  if (h.rows() != h.cols()) {
    fail(ErrorCode::NonSquare, "decomposition requires a square matrix");
  }
  const int n = qubits_from_dim(h.rows());
  check_qubit_count(n);
  const double scale = std::max(1.0, h.norm());
  if (!is_hermitian(h, 1e-10 * scale)) {
    fail(ErrorCode::NonHermitian, "matrix is not Hermitian within tolerance");
  }
  const auto dim = h.rows();
  PauliHamiltonian ph;
  ph.qubits = n;
  const std::uint64_t num_strings = 1ULL << (2 * n);
  for (std::uint64_t code = 0; code < num_strings; ++code) {
    const PauliString p = string_from_code(n, code);
    const StringMasks m = masks_of(p);
    const Complex yf_conj = std::conj(y_factor(m.y_count));
    // trace(P H) = sum_b conj(phase(b)) H(b ^ flip, b)
    Complex tr(0.0, 0.0);
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const double sign = (std::popcount(b & m.phase) & 1) ? -1.0 : 1.0;
      tr += yf_conj * sign *
            h(static_cast<Eigen::Index>(b ^ m.flip),
              static_cast<Eigen::Index>(b));
    }
    const double coeff = tr.real() / static_cast<double>(dim);
    if (std::abs(coeff) > 1e-12) {
      ph.terms.push_back(PauliTerm{coeff, p});
    }
  }
  return ph;
}

Matrix reconstruct(const PauliHamiltonian& ph) {
  check_qubit_count(ph.qubits);
  const auto dim = Eigen::Index{1} << ph.qubits;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& term : ph.terms) {
    if (term.string.qubits() != ph.qubits) {
      fail(ErrorCode::DimensionMismatch,
           "term qubit count does not match the Hamiltonian");
    }
    const StringMasks m = masks_of(term.string);
    const Complex yf = y_factor(m.y_count);
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
      const double sign = (std::popcount(b & m.phase) & 1) ? -1.0 : 1.0;
      h(static_cast<Eigen::Index>(b ^ m.flip), static_cast<Eigen::Index>(b)) +=
          term.coefficient * yf * sign;
    }
  }
  return h;
}

PauliString sample_random_pauli(int qubits, Rng& rng) {
  if (qubits < 1) {
    fail(ErrorCode::InvalidArgument, "qubit count must be at least 1");
  }
  PauliString p;
  p.letters.resize(qubits);
  for (int j = 0; j < qubits; ++j) {
    p.letters[j] = static_cast<PauliOp>(rng.uniform_int(4));
  }
  return p;
}

PauliHamiltonian parse_hamiltonian_text(std::istream& in) {
  PauliHamiltonian ph;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double coeff;
    std::string text;
    if (!(ls >> coeff)) {
      std::string probe;
      if (std::istringstream(line) >> probe) {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": expected a coefficient");
      }
      continue;  // blank or comment-only line
    }
    if (!(ls >> text)) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": missing Pauli string");
    }
    std::string extra;
    if (ls >> extra) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": unexpected trailing token");
    }
    PauliTerm term{coeff, PauliString::from_text(text)};
    if (ph.terms.empty()) {
      ph.qubits = term.string.qubits();
    } else if (term.string.qubits() != ph.qubits) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": inconsistent string length");
    }
    ph.terms.push_back(std::move(term));
  }
  if (ph.terms.empty()) {
    fail(ErrorCode::ParseError, "no Hamiltonian terms found");
  }
  return ph;
}

PauliHamiltonian parse_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open " + path);
  }
  return parse_hamiltonian_text(in);
}

void write_hamiltonian_text(const PauliHamiltonian& ph, std::ostream& out) {
  char buf[64];
  for (const auto& term : ph.terms) {
    std::snprintf(buf, sizeof(buf), "%.17g", term.coefficient);
    out << buf << ' ' << term.string.text() << '\n';
  }
}

void write_hamiltonian_file(const PauliHamiltonian& ph,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  }
  write_hamiltonian_text(ph, out);
}

}  // namespace uvqe
