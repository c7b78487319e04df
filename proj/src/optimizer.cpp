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

#include "uvqe/optimizer.hpp"

#include <cmath>
#include <limits>

#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"
#include "uvqe/manifold.hpp"

namespace uvqe {

namespace {

constexpr double kDescentSlack = 1e-10;

void validate_config(const OptimizerConfig& cfg) {
  if (cfg.max_iters < 1) {
    fail(ErrorCode::InvalidArgument, "max_iters must be at least 1");
  }
  if (cfg.grad_tol <= 0.0) {
    fail(ErrorCode::InvalidArgument, "grad_tol must be positive");
  }
  if (cfg.gap_tol < 0.0) {
    fail(ErrorCode::InvalidArgument, "gap_tol must be non-negative");
  }
  if (cfg.record_every < 1) {
    fail(ErrorCode::InvalidArgument, "record_every must be at least 1");
  }
  if (cfg.step_size && *cfg.step_size <= 0.0) {
    fail(ErrorCode::InvalidArgument, "step_size must be positive");
  }
}

}  // namespace

double default_step_size(double h_norm, int num_layers) {
  if (h_norm <= 0.0 || num_layers < 1) {
    fail(ErrorCode::InvalidArgument,
         "norm must be positive and depth at least 1");
  }
  return 1.0 / ((8.0 * num_layers + 1.0) * h_norm);
}

double theoretical_rate(double gap, double h_norm, double mu) {
  if (gap <= 0.0 || h_norm <= 0.0 || mu <= 0.0) {
    fail(ErrorCode::InvalidArgument, "gap, norm and step must be positive");
  }
  const double rate = 1.0 - gap * gap * mu / (32.0 * h_norm);
  if (rate <= 0.0) {
    fail(ErrorCode::RateOutOfRange,
         "rate formula is non-positive; inputs are inconsistent");
  }
  return std::min(rate, std::nextafter(1.0, 0.0));
}

bool in_basin(double objective_gap, double gap) {
  if (gap <= 0.0) {
    fail(ErrorCode::InvalidArgument, "spectral gap must be positive");
  }
  return objective_gap <= 0.5 * gap;
}

long required_depth(long d_target, long p) {
  if (d_target < 0 || p < 1) {
    fail(ErrorCode::InvalidArgument,
         "target dimension must be non-negative and layer dimension positive");
  }
  return (d_target + p - 1) / p;
}

RunTrace rgd_product(const Matrix& h, const SpectralData& spec,
                     const CircuitState& start, const OptimizerConfig& cfg) {
  validate_config(cfg);
  const int depth = start.depth();
  if (depth < 1) {
    fail(ErrorCode::InvalidArgument, "circuit must have at least one layer");
  }
  for (const Matrix& layer : start.layers) {
    if (!is_unitary(layer, 1e-8)) {
      fail(ErrorCode::NonUnitary, "starting layer is not unitary");
    }
  }
  const double h_norm = spec.norm();
  const double mu = cfg.step_size ? *cfg.step_size
                                  : default_step_size(h_norm, depth);
  const double e0 = spec.ground_energy();

  RunTrace trace;
  CircuitState circuit = start;

  auto objective = [&]() {
    const Vector phi = circuit.output_state();
    return phi.dot(h * phi).real();
  };

  double f = objective();
  long last_recorded = -1;
  for (long t = 0; t < cfg.max_iters; ++t) {
    const double gap = f - e0;
    std::vector<Matrix> grads = all_layer_gradients(h, circuit);
    double grad_sq = 0.0;
    for (const Matrix& g : grads) grad_sq += g.squaredNorm();

    const bool stop = gap < cfg.gap_tol || grad_sq < cfg.grad_tol * cfg.grad_tol;
    if (t % cfg.record_every == 0 || stop) {
      trace.records.push_back(TraceRecord{
          t, gap, grad_sq, std::numeric_limits<double>::quiet_NaN()});
      last_recorded = t;
    }
    trace.iterations = t;
    if (stop) {
      trace.converged = true;
      break;
    }

    for (int k = 0; k < depth; ++k) {
      circuit.layers[k] = retract(circuit.layers[k], -mu * grads[k]);
    }
    const double f_next = objective();
    if (f_next > f + kDescentSlack) {
      trace.step_warning = true;
    }
    if (last_recorded == t && gap != 0.0) {
      trace.records.back().certificate_ratio = (f_next - e0) / gap;
    }
    f = f_next;

    if (t + 1 == cfg.max_iters) {
      // Horizon reached; record the final iterate.
      const Vector phi = circuit.output_state();
      std::vector<Matrix> final_grads = all_layer_gradients(h, circuit);
      double final_grad_sq = 0.0;
      for (const Matrix& g : final_grads) final_grad_sq += g.squaredNorm();
      trace.records.push_back(
          TraceRecord{t + 1, f - e0, final_grad_sq,
                      std::numeric_limits<double>::quiet_NaN()});
      trace.iterations = t + 1;
    }
  }
  trace.final_circuit = std::move(circuit);
  return trace;
}

RunTrace rgd_single(const Matrix& h, const SpectralData& spec,
                    const Vector& reference, const Matrix& u0,
                    const OptimizerConfig& cfg) {
  CircuitState start;
  start.layers = {u0};
  start.reference = reference;
  return rgd_product(h, spec, start, cfg);
}

}  // namespace uvqe
