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
#include "uvqe/optimizer.hpp"
#include "uvqe/pauli.hpp"
#include "uvqe/rng.hpp"

namespace uvqe {

struct ShotAllocation {
  std::vector<long> shots;  // one positive count per Hamiltonian term

  long total() const;
  int terms() const { return static_cast<int>(shots.size()); }
};

struct NoisyTermSample {
  long successes = 0;  // observed +1 outcomes
  long shots = 0;
};

struct NoisyEstimate {
  double value = 0.0;  // estimated objective
  double noise = 0.0;  // value minus the exact objective
  std::vector<NoisyTermSample> per_term;
};

// <phi_N| P_k |phi_N> for every term, each in [-1, 1].
std::vector<double> exact_expectations(const PauliHamiltonian& ph,
                                       const CircuitState& circuit);

// Equal split floor(total / L) with the remainder given to the first
// total mod L terms.
ShotAllocation uniform_allocation(int terms, long total);

// Integer rounding of the error-minimizing allocation proportional to the
// coefficient magnitudes, by largest remainder with a floor of one shot per
// term; the total is preserved exactly.
ShotAllocation adaptive_allocation(const std::vector<double>& coefficients,
                                   long total);

// sqrt(2 log(1/gamma)) * sqrt(sum_k alpha_k^2 / M_k).
double statistical_error_bound(const std::vector<double>& coefficients,
                               const ShotAllocation& alloc, double gamma);

// Binomial draw; CDF inversion up to 64 trials, rounded normal approximation
// above. Deterministic given the stream state.
long sample_binomial(long trials, double p, Rng& rng);

// Per-term frequencies f_k ~ Binomial(M_k, (1 + <P_k>) / 2) combined into
// sum_k alpha_k (2 f_k / M_k - 1); unbiased for the exact objective.
NoisyEstimate sample_noisy_objective(const PauliHamiltonian& ph,
                                     const CircuitState& circuit,
                                     const ShotAllocation& alloc, Rng& rng);

struct NoisyRunTrace {
  RunTrace trace;  // exact-objective records (descent uses exact gradients)
  // Reported noisy objective minus E_0 at each record, aligned with
  // trace.records.
  std::vector<double> noisy_gap;
  // Predicted statistical noise floor for the chosen allocation and gamma.
  double noise_floor = 0.0;
  // First recorded iteration whose exact optimization gap fell below 10% of
  // the noise floor; -1 when never reached.
  long steady_state_iteration = -1;
};

// Product-form descent driven by exact statevector gradients while the
// reported objective per record is a fresh finite-shot estimate.
NoisyRunTrace rgd_noisy(const PauliHamiltonian& ph, const SpectralData& spec,
                        const CircuitState& start, const OptimizerConfig& cfg,
                        const ShotAllocation& alloc, double gamma, Rng& rng);

}  // namespace uvqe
