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

#include "uvqe/init.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"

namespace uvqe {

namespace {

void validate_inputs(const InitBoundInputs& in) {
  if (in.layers < 1) {
    fail(ErrorCode::InvalidArgument, "layer count must be at least 1");
  }
  if (!(in.sigma >= 0.0) || !std::isfinite(in.sigma)) {
    fail(ErrorCode::InvalidArgument, "sigma must be finite and non-negative");
  }
  if (in.ref_energy < in.ground_energy - 1e-9) {
    fail(ErrorCode::InvalidArgument,
         "reference energy lies below the ground energy");
  }
  if (in.h_norm < std::abs(in.ground_energy) - 1e-9) {
    fail(ErrorCode::InvalidArgument,
         "operator norm is smaller than the ground energy magnitude");
  }
}

double attenuation(double sigma_sq) {
  return 0.5 * (1.0 + std::exp(-2.0 * sigma_sq));
}

}  // namespace

Matrix pauli_rotation(const PauliString& p, double angle) {
  const auto dim = Eigen::Index{1} << p.qubits();
  const Complex minus_i(0.0, -1.0);
  return std::cos(angle) * Matrix::Identity(dim, dim) +
         minus_i * std::sin(angle) * dense(p);
}

CircuitState sample_initial_layers(const InitConfig& cfg, int qubits,
                                   Rng& rng) {
  if (cfg.layers < 1) {
    fail(ErrorCode::InvalidArgument, "layer count must be at least 1");
  }
  if (!(cfg.sigma >= 0.0) || !std::isfinite(cfg.sigma)) {
    fail(ErrorCode::InvalidArgument, "sigma must be finite and non-negative");
  }
  if (!cfg.pauli_choices.empty() &&
      static_cast<int>(cfg.pauli_choices.size()) != cfg.layers) {
    fail(ErrorCode::InvalidArgument,
         "pauli_choices must either be empty or provide one string per layer");
  }
  CircuitState circuit;
  circuit.reference = basis_state(1 << qubits, 0);
  circuit.layers.reserve(cfg.layers);
  for (int h = 0; h < cfg.layers; ++h) {
    PauliString p = cfg.pauli_choices.empty()
                        ? sample_random_pauli(qubits, rng)
                        : cfg.pauli_choices[h];
    if (p.qubits() != qubits) {
      fail(ErrorCode::DimensionMismatch,
           "fixed Pauli string does not match the qubit count");
    }
    const double angle = cfg.sigma * rng.normal();
    circuit.layers.push_back(pauli_rotation(p, angle));
  }
  return circuit;
}

double init_error_bound(const InitBoundInputs& in) {
  validate_inputs(in);
  if (!(in.delta > 0.0 && in.delta < 1.0)) {
    fail(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
  }
  const double a_pow =
      std::pow(attenuation(in.sigma * in.sigma), in.layers);
  const double decay_term = a_pow * (in.ref_energy - in.ground_energy);
  const double mixing_term = (1.0 - a_pow) * (in.h_norm - in.ground_energy);
  const double tail_term =
      2.0 * in.h_norm * in.sigma *
      std::sqrt(2.0 * in.layers * std::log(2.0 / in.delta));
  return decay_term + mixing_term + tail_term;
}

bool sigma_constraints_hold(const InitBoundInputs& in, double c1, double c2,
                            double c3, double sigma_sq) {
  const double a_pow = std::pow(attenuation(sigma_sq), in.layers);
  const double cap = in.gap;
  const double e_ref = in.ref_energy - in.ground_energy;
  const double e_top = in.h_norm - in.ground_energy;
  const double sigma = std::sqrt(sigma_sq);
  const double tail = 2.0 * in.h_norm * sigma *
                      std::sqrt(2.0 * in.layers * std::log(2.0 / in.delta));
  return a_pow * e_ref <= c1 * cap && (1.0 - a_pow) * e_top <= c2 * cap &&
         tail <= c3 * cap;
}

SigmaInterval feasible_sigma_interval(const InitBoundInputs& in, double c1,
                                      double c2, double c3,
                                      bool exact_refine) {
  validate_inputs(in);
  if (!(in.gap > 0.0)) {
    fail(ErrorCode::InvalidArgument, "spectral gap must be positive");
  }
  if (!(in.delta > 0.0 && in.delta < 1.0)) {
    fail(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
  }
  if (c1 <= 0.0 || c2 <= 0.0 || c3 <= 0.0 ||
      std::abs(c1 + c2 + c3 - 0.5) > 1e-12) {
    fail(ErrorCode::InvalidConstants,
         "split constants must be positive and sum to 1/2");
  }
  const double n = static_cast<double>(in.layers);
  const double e_ref = in.ref_energy - in.ground_energy;
  const double e_top = in.h_norm - in.ground_energy;

  // Small-sigma approximation A^N ~ exp(-N sigma^2) turns each constraint
  // into a closed-form bound on sigma^2.
  double lo = 0.0;
  if (e_ref > c1 * in.gap) {
    lo = std::log(e_ref / (c1 * in.gap)) / n;
  }
  double hi_decay = std::numeric_limits<double>::infinity();
  if (e_top > c2 * in.gap) {
    hi_decay = std::log(e_top / (e_top - c2 * in.gap)) / n;
  }
  const double log_term = std::log(2.0 / in.delta);
  const double hi_tail = (c3 * c3 * in.gap * in.gap) /
                         (8.0 * n * in.h_norm * in.h_norm * log_term);
  double hi = std::min(hi_decay, hi_tail);

  SigmaInterval interval;
  if (lo > hi) {
    return interval;  // empty
  }
  interval.empty = false;
  interval.lo = lo;
  interval.hi = hi;
  if (!exact_refine) return interval;

  // Restrict to the grid-verified region of the exact constraints.
  constexpr int kGrid = 2048;
  const double width = hi - lo;
  double exact_lo = std::numeric_limits<double>::quiet_NaN();
  double exact_hi = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i <= kGrid; ++i) {
    const double s2 = lo + width * static_cast<double>(i) / kGrid;
    if (sigma_constraints_hold(in, c1, c2, c3, s2)) {
      if (std::isnan(exact_lo)) exact_lo = s2;
      exact_hi = s2;
    }
  }
  if (std::isnan(exact_lo)) {
    return SigmaInterval{};  // approximation region holds no exact point
  }
  interval.lo = exact_lo;
  interval.hi = exact_hi;
  return interval;
}

double empirical_expectation_recursion(const Matrix& h,
                                       const Vector& reference,
                                       const std::vector<PauliString>& paulis,
                                       double sigma) {
  if (paulis.empty()) {
    fail(ErrorCode::InvalidArgument, "at least one rotation layer is needed");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    fail(ErrorCode::InvalidArgument, "sigma must be finite and non-negative");
  }
  const double a = attenuation(sigma * sigma);
  const double b = 1.0 - a;
  Matrix mixed = h;
  for (const PauliString& p : paulis) {
    const Matrix p_dense = dense(p);
    if (p_dense.rows() != h.rows()) {
      fail(ErrorCode::DimensionMismatch,
           "Pauli string does not match the Hamiltonian dimension");
    }
    mixed = a * mixed + b * (p_dense * mixed * p_dense);
  }
  return reference.dot(mixed * reference).real();
}

}  // namespace uvqe
