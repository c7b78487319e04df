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

#include <optional>
#include <vector>

#include "uvqe/circuit.hpp"
#include "uvqe/hamiltonian.hpp"
#include "uvqe/types.hpp"

namespace uvqe {

struct OptimizerConfig {
  long max_iters = 50000;
  // Empty selects default_step_size(||H||, depth).
  std::optional<double> step_size;
  // Stop when the summed squared gradient norm falls below grad_tol^2.
  double grad_tol = 1e-10;
  // Stop when the objective gap falls below gap_tol. Zero disables the stop,
  // giving a fixed-horizon run.
  double gap_tol = 1e-8;
  long record_every = 1;
};

struct TraceRecord {
  long iteration = 0;
  double objective_gap = 0.0;  // f - E_0
  double grad_norm_sq = 0.0;   // sum over layers of ||grad||_F^2
  // gap_{t+1} / gap_t; NaN when the next iterate was not computed.
  double certificate_ratio = 0.0;
};

struct RunTrace {
  std::vector<TraceRecord> records;
  bool converged = false;
  // Set when the objective increased beyond the descent slack, signalling a
  // step size above the guaranteed range. The run continues.
  bool step_warning = false;
  long iterations = 0;
  CircuitState final_circuit;
};

// 1 / ((8N + 1) ||H||); reduces to 1 / (9 ||H||) for a single layer.
double default_step_size(double h_norm, int num_layers);

// Guaranteed per-iteration contraction factor 1 - gap^2 mu / (32 ||H||).
double theoretical_rate(double gap, double h_norm, double mu);

// True when the objective gap is within half the spectral gap, the region
// with a guaranteed linear rate.
bool in_basin(double objective_gap, double gap);

// ceil(d_target / p): minimum number of layers for a parameterized family of
// per-layer dimension p to cover a target of dimension d_target.
long required_depth(long d_target, long p);

// Gradient descent on the unitary group with polar retraction, single layer.
RunTrace rgd_single(const Matrix& h, const SpectralData& spec,
                    const Vector& reference, const Matrix& u0,
                    const OptimizerConfig& cfg);

// Product form: all layer gradients are evaluated at the current iterate and
// every layer is retracted simultaneously.
RunTrace rgd_product(const Matrix& h, const SpectralData& spec,
                     const CircuitState& start, const OptimizerConfig& cfg);

}  // namespace uvqe
