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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"

namespace {

using uvqe::Complex;
using uvqe::Matrix;
using uvqe::PauliHamiltonian;
using uvqe::PauliString;
using uvqe::Rng;

Matrix single(char letter) {
  Matrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (letter) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default:  m << 1, 0, 0, -1; break;
  }
  return m;
}

TEST(PauliDense, SingleZ) {
  const Matrix z = uvqe::dense(PauliString::from_text("Z"));
  EXPECT_NEAR(z(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(z(1, 1).real(), -1.0, 1e-15);
  EXPECT_NEAR(std::abs(z(0, 1)), 0.0, 1e-15);
}

TEST(PauliDense, DoubleIdentity) {
  const Matrix m = uvqe::dense(PauliString::from_text("II"));
  EXPECT_LE((m - Matrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(PauliDense, XZMatchesKroneckerOracle) {
  const Matrix expected = oracle::kronecker(single('X'), single('Z'));
  const Matrix got = uvqe::dense(PauliString::from_text("XZ"));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(std::abs(got(r, c) - expected(r, c)), 0.0, 1e-15)
          << "entry (" << r << "," << c << ")";
    }
  }
}

TEST(PauliDense, RandomStringsMatchKroneckerOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    const PauliString p = uvqe::sample_random_pauli(3, rng);
    Matrix expected = single(p.text()[0]);
    for (int j = 1; j < 3; ++j) {
      expected = oracle::kronecker(expected, single(p.text()[j]));
    }
    EXPECT_LE((uvqe::dense(p) - expected).norm(), 1e-15) << p.text();
  }
}

TEST(PauliDense, SquaresToIdentityExactly) {
  Rng rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const PauliString p = uvqe::sample_random_pauli(3, rng);
    const Matrix d = uvqe::dense(p);
    EXPECT_EQ((d * d - Matrix::Identity(8, 8)).norm(), 0.0) << p.text();
  }
}

TEST(PauliDense, PairwiseTraceOrthogonality) {
  Rng rng(9);
  std::vector<PauliString> strings;
  for (int k = 0; k < 6; ++k) {
    strings.push_back(uvqe::sample_random_pauli(2, rng));
  }
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      const Complex tr = (uvqe::dense(a).adjoint() * uvqe::dense(b)).trace();
      const double expected = (a == b) ? 4.0 : 0.0;
      EXPECT_EQ(tr.real(), expected) << a.text() << " vs " << b.text();
      EXPECT_EQ(tr.imag(), 0.0);
    }
  }
}

TEST(PauliDense, RejectsTooManyQubits) {
  PauliString p;
  p.letters.assign(11, uvqe::PauliOp::I);
  EXPECT_THROW(uvqe::dense(p), uvqe::Error);
}

TEST(PauliApply, MatchesDenseAction) {
  Rng rng(10);
  for (int trial = 0; trial < 8; ++trial) {
    const PauliString p = uvqe::sample_random_pauli(3, rng);
    const uvqe::Vector state = uvqe::random_state(8, rng);
    const uvqe::Vector direct = uvqe::apply(p, state);
    const uvqe::Vector via_dense = uvqe::dense(p) * state;
    EXPECT_LE((direct - via_dense).norm(), 1e-14) << p.text();
    EXPECT_NEAR(uvqe::expectation(p, state),
                state.dot(via_dense).real(), 1e-13);
  }
}

TEST(PauliDecompose, DiagonalZ) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.0;
  h(1, 1) = -1.0;
  const PauliHamiltonian ph = uvqe::decompose(h);
  ASSERT_EQ(ph.terms.size(), 1u);
  EXPECT_EQ(ph.terms[0].string.text(), "Z");
  EXPECT_NEAR(ph.terms[0].coefficient, 1.0, 1e-15);
}

TEST(PauliDecompose, TfimTwoSitesExactTerms) {
  // Hand-built dense matrix: -0.5 (X kron I + I kron X) - Z kron Z.
  const Matrix x = single('X');
  const Matrix z = single('Z');
  const Matrix id = single('I');
  const Matrix h = -0.5 * oracle::kronecker(x, id) -
                   0.5 * oracle::kronecker(id, x) -
                   oracle::kronecker(z, z);
  const PauliHamiltonian ph = uvqe::decompose(h);
  ASSERT_EQ(ph.terms.size(), 3u);
  double got_xi = 0.0, got_ix = 0.0, got_zz = 0.0;
  for (const auto& t : ph.terms) {
    if (t.string.text() == "XI") got_xi = t.coefficient;
    if (t.string.text() == "IX") got_ix = t.coefficient;
    if (t.string.text() == "ZZ") got_zz = t.coefficient;
  }
  EXPECT_NEAR(got_xi, -0.5, 1e-14);
  EXPECT_NEAR(got_ix, -0.5, 1e-14);
  EXPECT_NEAR(got_zz, -1.0, 1e-14);
}

TEST(PauliDecompose, RoundTripOnRandomHermitian) {
  Rng rng(13);
  const Matrix h = uvqe::random_hermitian(4, rng);
  const Matrix rebuilt = uvqe::reconstruct(uvqe::decompose(h));
  EXPECT_LE((rebuilt - h).norm(), 1e-11 * h.norm());
}

TEST(PauliDecompose, RejectsBadInputs) {
  try {
    uvqe::decompose(Matrix::Identity(3, 3));
    FAIL() << "expected an error";
  } catch (const uvqe::Error& e) {
    EXPECT_EQ(e.code(), uvqe::ErrorCode::NonPowerOfTwoDim);
  }
  Matrix h = Matrix::Zero(2, 2);
  h(0, 1) = 1.0;
  try {
    uvqe::decompose(h);
    FAIL() << "expected an error";
  } catch (const uvqe::Error& e) {
    EXPECT_EQ(e.code(), uvqe::ErrorCode::NonHermitian);
  }
}

TEST(PauliReconstruct, ScaledIdentityAndEmptySum) {
  PauliHamiltonian ph;
  ph.qubits = 1;
  ph.terms.push_back({2.0, PauliString::from_text("I")});
  EXPECT_LE((uvqe::reconstruct(ph) - 2.0 * Matrix::Identity(2, 2)).norm(),
            1e-15);

  PauliHamiltonian empty;
  empty.qubits = 2;
  EXPECT_EQ(uvqe::reconstruct(empty).norm(), 0.0);
  EXPECT_EQ(uvqe::reconstruct(empty).rows(), 4);
}

TEST(PauliReconstruct, TfimGroundEnergyMatchesOracle) {
  PauliHamiltonian ph;
  ph.qubits = 2;
  ph.terms.push_back({-0.5, PauliString::from_text("XI")});
  ph.terms.push_back({-0.5, PauliString::from_text("IX")});
  ph.terms.push_back({-1.0, PauliString::from_text("ZZ")});
  const auto eig = oracle::jacobi_eigen(uvqe::reconstruct(ph));
  EXPECT_NEAR(eig.eigenvalues(0), -std::sqrt(2.0), 1e-12);
}

TEST(PauliSample, DeterministicGivenSeed) {
  Rng a(99);
  Rng b(99);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(uvqe::sample_random_pauli(3, a).text(),
              uvqe::sample_random_pauli(3, b).text());
  }
}

TEST(PauliSample, SingleQubitFrequencies) {
  Rng rng(123);
  const int samples = 40000;
  int counts[4] = {0, 0, 0, 0};
  for (int k = 0; k < samples; ++k) {
    counts[static_cast<int>(uvqe::sample_random_pauli(1, rng).letters[0])]++;
  }
  // 4-sigma binomial window around 0.25.
  const double sigma = std::sqrt(0.25 * 0.75 / samples);
  for (int counts_k : counts) {
    const double freq = static_cast<double>(counts_k) / samples;
    EXPECT_NEAR(freq, 0.25, 4.0 * sigma);
  }
}

TEST(PauliSample, PositionsAreIndependent) {
  Rng rng(321);
  const int samples = 40000;
  int cells[16] = {0};
  for (int k = 0; k < samples; ++k) {
    const PauliString p = uvqe::sample_random_pauli(2, rng);
    cells[4 * static_cast<int>(p.letters[0]) +
          static_cast<int>(p.letters[1])]++;
  }
  double chi_sq = 0.0;
  const double expected = samples / 16.0;
  for (int cell : cells) {
    chi_sq += (cell - expected) * (cell - expected) / expected;
  }
  // chi-square with 15 degrees of freedom, right tail at p = 0.001.
  EXPECT_LE(chi_sq, 37.697);
}

TEST(PauliText, RoundTripWithCommentsAndBlanks) {
  std::istringstream in(
      "# transverse field chain\n"
      "\n"
      "-0.5 XI  # site 0\n"
      "-0.5 IX\n"
      "-1 ZZ\n");
  const PauliHamiltonian ph = uvqe::parse_hamiltonian_text(in);
  ASSERT_EQ(ph.terms.size(), 3u);
  EXPECT_EQ(ph.qubits, 2);

  std::ostringstream out;
  uvqe::write_hamiltonian_text(ph, out);
  std::istringstream again(out.str());
  const PauliHamiltonian reparsed = uvqe::parse_hamiltonian_text(again);
  ASSERT_EQ(reparsed.terms.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(reparsed.terms[k].string.text(), ph.terms[k].string.text());
    EXPECT_EQ(reparsed.terms[k].coefficient, ph.terms[k].coefficient);
  }
}

TEST(PauliText, ParseErrors) {
  std::istringstream bad_letter("1.0 XQ\n");
  EXPECT_THROW(uvqe::parse_hamiltonian_text(bad_letter), uvqe::Error);
  std::istringstream missing_string("1.0\n");
  EXPECT_THROW(uvqe::parse_hamiltonian_text(missing_string), uvqe::Error);
  std::istringstream not_a_number("abc XI\n");
  EXPECT_THROW(uvqe::parse_hamiltonian_text(not_a_number), uvqe::Error);
  std::istringstream inconsistent("1.0 XI\n1.0 XII\n");
  EXPECT_THROW(uvqe::parse_hamiltonian_text(inconsistent), uvqe::Error);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(uvqe::parse_hamiltonian_text(empty), uvqe::Error);
}

}  // namespace
