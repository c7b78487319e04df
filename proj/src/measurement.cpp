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

#include "uvqe/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"
#include "uvqe/manifold.hpp"

namespace uvqe {

namespace {

constexpr long kInversionLimit = 64;

void check_allocation(const ShotAllocation& alloc, int terms) {
  if (alloc.terms() != terms) {
    fail(ErrorCode::DimensionMismatch,
         "allocation length does not match the term count");
  }
  for (long m : alloc.shots) {
    if (m < 1) {
      fail(ErrorCode::InvalidArgument, "every term needs at least one shot");
    }
  }
}

long binomial_by_inversion(long trials, double p, Rng& rng) {
  // Walk the CDF with the iteratively updated probability mass. Sampling the
  // complement keeps (1-p)^trials away from underflow.
  if (p > 0.5) {
    return trials - binomial_by_inversion(trials, 1.0 - p, rng);
  }
  const double u = rng.uniform();
  double pmf = std::pow(1.0 - p, static_cast<double>(trials));
  double cdf = pmf;
  long k = 0;
  const double ratio = p / (1.0 - p);
  while (u > cdf && k < trials) {
    pmf *= ratio * static_cast<double>(trials - k) /
           static_cast<double>(k + 1);
    ++k;
    cdf += pmf;
  }
  return k;
}

long binomial_by_normal(long trials, double p, Rng& rng) {
  const double mean = static_cast<double>(trials) * p;
  const double sd = std::sqrt(mean * (1.0 - p));
  const double draw = mean + sd * rng.normal();
  const long k = std::lround(draw);
  return std::clamp(k, 0L, trials);
}

}  // namespace

long ShotAllocation::total() const {
  return std::accumulate(shots.begin(), shots.end(), 0L);
}

std::vector<double> exact_expectations(const PauliHamiltonian& ph,
                                       const CircuitState& circuit) {
  if (circuit.dim() != ph.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "circuit dimension does not match the Hamiltonian");
  }
  const Vector phi = circuit.output_state();
  std::vector<double> values;
  values.reserve(ph.terms.size());
  for (const auto& term : ph.terms) {
    values.push_back(expectation(term.string, phi));
  }
  return values;
}

ShotAllocation uniform_allocation(int terms, long total) {
  if (terms < 1) {
    fail(ErrorCode::InvalidArgument, "term count must be at least 1");
  }
  if (total < terms) {
    fail(ErrorCode::BudgetTooSmall,
         "budget is smaller than the number of terms");
  }
  ShotAllocation alloc;
  const long base = total / terms;
  const long remainder = total % terms;
  alloc.shots.assign(terms, base);
  for (long k = 0; k < remainder; ++k) alloc.shots[k] += 1;
  return alloc;
}

ShotAllocation adaptive_allocation(const std::vector<double>& coefficients,
                                   long total) {
  const int terms = static_cast<int>(coefficients.size());
  if (terms < 1) {
    fail(ErrorCode::InvalidArgument, "term count must be at least 1");
  }
  if (total < terms) {
    fail(ErrorCode::BudgetTooSmall,
         "budget is smaller than the number of terms");
  }
  double magnitude_sum = 0.0;
  for (double c : coefficients) magnitude_sum += std::abs(c);
  if (magnitude_sum == 0.0) {
    fail(ErrorCode::AllZeroCoefficients, "all coefficients are zero");
  }

  // Largest-remainder rounding of the proportional optimum.
  ShotAllocation alloc;
  alloc.shots.resize(terms);
  std::vector<double> fractional(terms);
  long assigned = 0;
  for (int k = 0; k < terms; ++k) {
    const double ideal =
        std::abs(coefficients[k]) / magnitude_sum * static_cast<double>(total);
    alloc.shots[k] = static_cast<long>(std::floor(ideal));
    fractional[k] = ideal - std::floor(ideal);
    assigned += alloc.shots[k];
  }
  std::vector<int> order(terms);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return fractional[a] > fractional[b];
  });
  for (long r = 0; r < total - assigned; ++r) {
    alloc.shots[order[r % terms]] += 1;
  }
  // Floor of one shot per term, funded by the largest buckets.
  for (int k = 0; k < terms; ++k) {
    while (alloc.shots[k] < 1) {
      const auto donor =
          std::max_element(alloc.shots.begin(), alloc.shots.end());
      if (*donor <= 1) {
        fail(ErrorCode::BudgetTooSmall,
             "budget cannot give every term one shot");
      }
      *donor -= 1;
      alloc.shots[k] += 1;
    }
  }
  return alloc;
}

double statistical_error_bound(const std::vector<double>& coefficients,
                               const ShotAllocation& alloc, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    fail(ErrorCode::InvalidArgument, "gamma must lie in (0, 1)");
  }
  check_allocation(alloc, static_cast<int>(coefficients.size()));
  double variance_sum = 0.0;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    variance_sum +=
        coefficients[k] * coefficients[k] / static_cast<double>(alloc.shots[k]);
  }
  return std::sqrt(2.0 * std::log(1.0 / gamma)) * std::sqrt(variance_sum);
}

long sample_binomial(long trials, double p, Rng& rng) {
  if (trials < 0 || !(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "invalid binomial parameters");
  }
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (trials <= kInversionLimit) {
    return binomial_by_inversion(trials, p, rng);
  }
  return binomial_by_normal(trials, p, rng);
}

NoisyEstimate sample_noisy_objective(const PauliHamiltonian& ph,
                                     const CircuitState& circuit,
                                     const ShotAllocation& alloc, Rng& rng) {
  check_allocation(alloc, static_cast<int>(ph.terms.size()));
  const std::vector<double> exact = exact_expectations(ph, circuit);
  NoisyEstimate estimate;
  estimate.per_term.reserve(ph.terms.size());
  double value = 0.0;
  double exact_value = 0.0;
  for (std::size_t k = 0; k < ph.terms.size(); ++k) {
    const double p_plus = std::clamp(0.5 * (1.0 + exact[k]), 0.0, 1.0);
    const long shots = alloc.shots[k];
    const long successes = sample_binomial(shots, p_plus, rng);
    const double estimated =
        2.0 * static_cast<double>(successes) / static_cast<double>(shots) - 1.0;
    value += ph.terms[k].coefficient * estimated;
    exact_value += ph.terms[k].coefficient * exact[k];
    estimate.per_term.push_back(NoisyTermSample{successes, shots});
  }
  estimate.value = value;
  estimate.noise = value - exact_value;
  return estimate;
}

NoisyRunTrace rgd_noisy(const PauliHamiltonian& ph, const SpectralData& spec,
                        const CircuitState& start, const OptimizerConfig& cfg,
                        const ShotAllocation& alloc, double gamma, Rng& rng) {
  check_allocation(alloc, static_cast<int>(ph.terms.size()));
  const Matrix h = reconstruct(ph);
  NoisyRunTrace noisy;
  noisy.trace = rgd_product(h, spec, start, cfg);
  noisy.noise_floor =
      statistical_error_bound(ph.coefficients(), alloc, gamma);

  // Replay the recorded iterates to attach finite-shot objective estimates.
  // Descent itself used exact gradients; only the reporting is noisy.
  const double e0 = spec.ground_energy();
  CircuitState circuit = start;
  const double mu = cfg.step_size
                        ? *cfg.step_size
                        : default_step_size(spec.norm(), start.depth());
  noisy.noisy_gap.reserve(noisy.trace.records.size());
  std::size_t next_record = 0;
  for (long t = 0; t <= noisy.trace.iterations &&
                   next_record < noisy.trace.records.size();
       ++t) {
    if (noisy.trace.records[next_record].iteration == t) {
      const NoisyEstimate est =
          sample_noisy_objective(ph, circuit, alloc, rng);
      noisy.noisy_gap.push_back(est.value - e0);
      if (noisy.steady_state_iteration < 0 &&
          noisy.trace.records[next_record].objective_gap <=
              0.1 * noisy.noise_floor) {
        noisy.steady_state_iteration = t;
      }
      ++next_record;
    }
    if (t == noisy.trace.iterations) break;
    std::vector<Matrix> grads = all_layer_gradients(h, circuit);
    for (int k = 0; k < circuit.depth(); ++k) {
      circuit.layers[k] = retract(circuit.layers[k], -mu * grads[k]);
    }
  }
  return noisy;
}

}  // namespace uvqe
