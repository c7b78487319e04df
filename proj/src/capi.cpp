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

#include "uvqe.h"

#include <cstring>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "uvqe/errors.hpp"
#include "uvqe/hamiltonian.hpp"
#include "uvqe/init.hpp"
#include "uvqe/linalg.hpp"
#include "uvqe/manifold.hpp"
#include "uvqe/measurement.hpp"
#include "uvqe/optimizer.hpp"
#include "uvqe/pauli.hpp"
#include "uvqe/rng.hpp"
#include "uvqe/types.hpp"

namespace {

thread_local std::string g_last_error;

uvqe_status map_code(uvqe::ErrorCode code) {
  using uvqe::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return UVQE_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonSquare:
      return UVQE_ERR_NON_SQUARE;
    case ErrorCode::NonHermitian:
      return UVQE_ERR_NON_HERMITIAN;
    case ErrorCode::RankDeficient:
      return UVQE_ERR_RANK_DEFICIENT;
    case ErrorCode::NonUnitary:
      return UVQE_ERR_NON_UNITARY;
    case ErrorCode::NonSkewHermitian:
      return UVQE_ERR_NON_SKEW_HERMITIAN;
    case ErrorCode::DimensionMismatch:
      return UVQE_ERR_DIMENSION_MISMATCH;
    case ErrorCode::IndexOutOfRange:
      return UVQE_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::GaplessSpectrum:
      return UVQE_ERR_GAPLESS_SPECTRUM;
    case ErrorCode::TooManyQubits:
      return UVQE_ERR_TOO_MANY_QUBITS;
    case ErrorCode::NonPowerOfTwoDim:
      return UVQE_ERR_NON_POWER_OF_TWO_DIM;
    case ErrorCode::TooFewDistinctStrings:
      return UVQE_ERR_TOO_FEW_DISTINCT_STRINGS;
    case ErrorCode::RateOutOfRange:
      return UVQE_ERR_RATE_OUT_OF_RANGE;
    case ErrorCode::InvalidConstants:
      return UVQE_ERR_INVALID_CONSTANTS;
    case ErrorCode::BudgetTooSmall:
      return UVQE_ERR_BUDGET_TOO_SMALL;
    case ErrorCode::AllZeroCoefficients:
      return UVQE_ERR_ALL_ZERO_COEFFICIENTS;
    case ErrorCode::ParseError:
      return UVQE_ERR_PARSE;
    case ErrorCode::IoError:
      return UVQE_ERR_IO;
  }
  return UVQE_ERR_INTERNAL;
}

template <typename Fn>
uvqe_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    return UVQE_OK;
  } catch (const uvqe::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return UVQE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return UVQE_ERR_INTERNAL;
  }
}

uvqe_status invalid(const char* message) {
  g_last_error = message;
  return UVQE_ERR_INVALID_ARGUMENT;
}

uvqe::Matrix read_dense_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    uvqe::fail(uvqe::ErrorCode::IoError, "cannot open " + path);
  }
  // Strip comments, then read one dimension header followed by dim*dim
  // re/im pairs in row-major order.
  std::stringstream cleaned;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    cleaned << line << '\n';
  }
  long dim = 0;
  if (!(cleaned >> dim) || dim < 1) {
    uvqe::fail(uvqe::ErrorCode::ParseError,
               "expected a positive matrix dimension header");
  }
  uvqe::Matrix m(dim, dim);
  for (long r = 0; r < dim; ++r) {
    for (long c = 0; c < dim; ++c) {
      double re = 0.0, im = 0.0;
      if (!(cleaned >> re >> im)) {
        uvqe::fail(uvqe::ErrorCode::ParseError,
                   "matrix file ended before " + std::to_string(dim * dim) +
                       " entries were read");
      }
      m(r, c) = uvqe::Complex(re, im);
    }
  }
  double extra;
  if (cleaned >> extra) {
    uvqe::fail(uvqe::ErrorCode::ParseError,
               "matrix file holds more entries than the header announces");
  }
  return m;
}

}  // namespace

struct uvqe_rng {
  uvqe::Rng rng;
};

struct uvqe_hamiltonian {
  uvqe::PauliHamiltonian pauli;
  uvqe::Matrix dense;

  mutable std::mutex mutex;
  mutable std::optional<uvqe::SpectralData> spectrum;
  mutable std::optional<double> norm;

  const uvqe::SpectralData& spectrum_ref() const {
    std::scoped_lock lock(mutex);
    if (!spectrum) {
      spectrum = uvqe::analyze_spectrum(dense);
    }
    return *spectrum;
  }

  double norm_value() const {
    std::scoped_lock lock(mutex);
    if (!norm) {
      norm = uvqe::spectral_norm(dense);
    }
    return *norm;
  }
};

struct uvqe_circuit {
  uvqe::CircuitState circuit;
};

struct uvqe_trace {
  uvqe::RunTrace trace;
};

extern "C" {

const char* uvqe_version(void) { return uvqe::kVersion; }

const char* uvqe_last_error(void) { return g_last_error.c_str(); }

uint64_t uvqe_mix_seed(uint64_t base, uint64_t index) {
  return uvqe::Rng::mix(base, index);
}

uvqe_status uvqe_rng_create(uint64_t seed, uvqe_rng** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = new uvqe_rng{uvqe::Rng(seed)}; });
}

void uvqe_rng_destroy(uvqe_rng* rng) { delete rng; }

static uvqe_status make_hamiltonian(uvqe::PauliHamiltonian ph,
                                    uvqe_hamiltonian** out) {
  auto* handle = new uvqe_hamiltonian;
  handle->pauli = std::move(ph);
  handle->dense = uvqe::reconstruct(handle->pauli);
  *out = handle;
  return UVQE_OK;
}

uvqe_status uvqe_hamiltonian_tfim(int qubits, uvqe_hamiltonian** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { make_hamiltonian(uvqe::tfim(qubits), out); });
}

uvqe_status uvqe_hamiltonian_random_pauli(int qubits, int num_terms,
                                          uint64_t seed,
                                          uvqe_hamiltonian** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    uvqe::Rng rng(seed);
    make_hamiltonian(uvqe::random_pauli_hamiltonian(qubits, num_terms, rng),
                     out);
  });
}

uvqe_status uvqe_hamiltonian_from_file(const char* path,
                                       uvqe_hamiltonian** out) {
  if (!out || !path) return invalid("null argument");
  return wrap([&] { make_hamiltonian(uvqe::parse_hamiltonian_file(path), out); });
}

uvqe_status uvqe_hamiltonian_from_dense_file(const char* path,
                                             uvqe_hamiltonian** out) {
  if (!out || !path) return invalid("null argument");
  return wrap([&] {
    const uvqe::Matrix m = read_dense_matrix(path);
    make_hamiltonian(uvqe::decompose(m), out);
  });
}

uvqe_status uvqe_hamiltonian_write_file(const uvqe_hamiltonian* h,
                                        const char* path) {
  if (!h || !path) return invalid("null argument");
  return wrap([&] { uvqe::write_hamiltonian_file(h->pauli, path); });
}

void uvqe_hamiltonian_destroy(uvqe_hamiltonian* h) { delete h; }

int uvqe_hamiltonian_qubits(const uvqe_hamiltonian* h) {
  return h ? h->pauli.qubits : 0;
}

int uvqe_hamiltonian_dim(const uvqe_hamiltonian* h) {
  return h ? h->pauli.dim() : 0;
}

int uvqe_hamiltonian_num_terms(const uvqe_hamiltonian* h) {
  return h ? static_cast<int>(h->pauli.terms.size()) : 0;
}

uvqe_status uvqe_hamiltonian_coefficients(const uvqe_hamiltonian* h,
                                          double* out, int cap) {
  if (!h || !out) return invalid("null argument");
  const int n = static_cast<int>(h->pauli.terms.size());
  if (cap < n) return invalid("capacity is smaller than the term count");
  for (int k = 0; k < n; ++k) out[k] = h->pauli.terms[k].coefficient;
  return UVQE_OK;
}

uvqe_status uvqe_hamiltonian_term_string(const uvqe_hamiltonian* h, int index,
                                         char* buf, int cap) {
  if (!h || !buf) return invalid("null argument");
  if (index < 0 || index >= static_cast<int>(h->pauli.terms.size())) {
    g_last_error = "term index out of range";
    return UVQE_ERR_INDEX_OUT_OF_RANGE;
  }
  const std::string text = h->pauli.terms[index].string.text();
  if (cap < static_cast<int>(text.size()) + 1) {
    return invalid("buffer too small for the term string");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return UVQE_OK;
}

uvqe_status uvqe_hamiltonian_spectrum(const uvqe_hamiltonian* h,
                                      uvqe_spectrum_info* out) {
  if (!h || !out) return invalid("null argument");
  return wrap([&] {
    const uvqe::SpectralData& spec = h->spectrum_ref();
    out->dim = spec.dim();
    out->ground_energy = spec.ground_energy();
    out->ground_degeneracy = spec.ground_degeneracy;
    out->gap = spec.gap;
    out->norm = h->norm_value();
  });
}

uvqe_status uvqe_circuit_identity(int qubits, int num_layers,
                                  uvqe_circuit** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    if (qubits < 1 || qubits > uvqe::kMaxQubits) {
      uvqe::fail(uvqe::ErrorCode::InvalidArgument, "unsupported qubit count");
    }
    *out = new uvqe_circuit{uvqe::identity_circuit(1 << qubits, num_layers)};
  });
}

uvqe_status uvqe_circuit_random_pauli_init(int qubits, int num_layers,
                                           double sigma, uint64_t seed,
                                           uvqe_circuit** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    if (qubits < 1 || qubits > uvqe::kMaxQubits) {
      uvqe::fail(uvqe::ErrorCode::InvalidArgument, "unsupported qubit count");
    }
    uvqe::InitConfig cfg;
    cfg.sigma = sigma;
    cfg.layers = num_layers;
    uvqe::Rng rng(seed);
    *out = new uvqe_circuit{uvqe::sample_initial_layers(cfg, qubits, rng)};
  });
}

uvqe_status uvqe_circuit_clone(const uvqe_circuit* c, uvqe_circuit** out) {
  if (!c || !out) return invalid("null argument");
  return wrap([&] { *out = new uvqe_circuit{c->circuit}; });
}

void uvqe_circuit_destroy(uvqe_circuit* c) { delete c; }

int uvqe_circuit_depth(const uvqe_circuit* c) {
  return c ? c->circuit.depth() : 0;
}

int uvqe_circuit_dim(const uvqe_circuit* c) { return c ? c->circuit.dim() : 0; }

uvqe_status uvqe_energy(const uvqe_hamiltonian* h, const uvqe_circuit* c,
                        double* out) {
  if (!h || !c || !out) return invalid("null argument");
  return wrap([&] { *out = uvqe::energy(h->dense, c->circuit); });
}

void uvqe_opt_config_init(uvqe_opt_config* cfg) {
  if (!cfg) return;
  cfg->max_iters = 50000;
  cfg->step_size = 0.0;  // auto
  cfg->grad_tol = 1e-10;
  cfg->gap_tol = 1e-8;
  cfg->record_every = 1;
}

uvqe_status uvqe_rgd_run(const uvqe_hamiltonian* h, const uvqe_circuit* start,
                         const uvqe_opt_config* cfg, uvqe_trace** out) {
  if (!h || !start || !cfg || !out) return invalid("null argument");
  return wrap([&] {
    uvqe::OptimizerConfig config;
    config.max_iters = cfg->max_iters;
    if (cfg->step_size > 0.0) config.step_size = cfg->step_size;
    config.grad_tol = cfg->grad_tol;
    config.gap_tol = cfg->gap_tol;
    config.record_every = cfg->record_every;
    *out = new uvqe_trace{uvqe::rgd_product(h->dense, h->spectrum_ref(),
                                            start->circuit, config)};
  });
}

int uvqe_trace_size(const uvqe_trace* t) {
  return t ? static_cast<int>(t->trace.records.size()) : 0;
}

long uvqe_trace_iterations(const uvqe_trace* t) {
  return t ? t->trace.iterations : 0;
}

int uvqe_trace_converged(const uvqe_trace* t) {
  return (t && t->trace.converged) ? 1 : 0;
}

int uvqe_trace_step_warning(const uvqe_trace* t) {
  return (t && t->trace.step_warning) ? 1 : 0;
}

uvqe_status uvqe_trace_row(const uvqe_trace* t, int i, long* iteration,
                           double* objective_gap, double* grad_norm_sq,
                           double* certificate_ratio) {
  if (!t) return invalid("null trace");
  if (i < 0 || i >= static_cast<int>(t->trace.records.size())) {
    g_last_error = "record index out of range";
    return UVQE_ERR_INDEX_OUT_OF_RANGE;
  }
  const uvqe::TraceRecord& rec = t->trace.records[i];
  if (iteration) *iteration = rec.iteration;
  if (objective_gap) *objective_gap = rec.objective_gap;
  if (grad_norm_sq) *grad_norm_sq = rec.grad_norm_sq;
  if (certificate_ratio) *certificate_ratio = rec.certificate_ratio;
  return UVQE_OK;
}

uvqe_status uvqe_trace_final_circuit(const uvqe_trace* t, uvqe_circuit** out) {
  if (!t || !out) return invalid("null argument");
  return wrap([&] { *out = new uvqe_circuit{t->trace.final_circuit}; });
}

void uvqe_trace_destroy(uvqe_trace* t) { delete t; }

double uvqe_default_step_size(double h_norm, int num_layers) {
  if (h_norm <= 0.0 || num_layers < 1) return 0.0;
  return uvqe::default_step_size(h_norm, num_layers);
}

uvqe_status uvqe_theoretical_rate(double gap, double h_norm, double mu,
                                  double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = uvqe::theoretical_rate(gap, h_norm, mu); });
}

int uvqe_in_basin(double objective_gap, double gap) {
  if (gap <= 0.0) return 0;
  return uvqe::in_basin(objective_gap, gap) ? 1 : 0;
}

long uvqe_required_depth(long d_target, long p) {
  if (d_target < 0 || p < 1) return -1;
  return uvqe::required_depth(d_target, p);
}

uvqe_status uvqe_init_error_bound(const uvqe_init_bound_inputs* in,
                                  double* out) {
  if (!in || !out) return invalid("null argument");
  return wrap([&] {
    uvqe::InitBoundInputs inputs{in->ref_energy, in->ground_energy, in->h_norm,
                                 in->gap,        in->layers,        in->sigma,
                                 in->delta};
    *out = uvqe::init_error_bound(inputs);
  });
}

uvqe_status uvqe_feasible_sigma_interval(const uvqe_init_bound_inputs* in,
                                         double c1, double c2, double c3,
                                         double* lo, double* hi, int* empty) {
  if (!in || !lo || !hi || !empty) return invalid("null argument");
  return wrap([&] {
    uvqe::InitBoundInputs inputs{in->ref_energy, in->ground_energy, in->h_norm,
                                 in->gap,        in->layers,        in->sigma,
                                 in->delta};
    const uvqe::SigmaInterval interval =
        uvqe::feasible_sigma_interval(inputs, c1, c2, c3);
    *empty = interval.empty ? 1 : 0;
    *lo = interval.lo;
    *hi = interval.hi;
  });
}

uvqe_status uvqe_uniform_allocation(int terms, long total, long* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    const uvqe::ShotAllocation alloc = uvqe::uniform_allocation(terms, total);
    for (int k = 0; k < terms; ++k) out[k] = alloc.shots[k];
  });
}

uvqe_status uvqe_adaptive_allocation(const double* coefficients, int terms,
                                     long total, long* out) {
  if (!coefficients || !out) return invalid("null argument");
  return wrap([&] {
    const std::vector<double> alphas(coefficients, coefficients + terms);
    const uvqe::ShotAllocation alloc =
        uvqe::adaptive_allocation(alphas, total);
    for (int k = 0; k < terms; ++k) out[k] = alloc.shots[k];
  });
}

uvqe_status uvqe_statistical_error_bound(const double* coefficients,
                                         const long* shots, int terms,
                                         double gamma, double* out) {
  if (!coefficients || !shots || !out) return invalid("null argument");
  return wrap([&] {
    const std::vector<double> alphas(coefficients, coefficients + terms);
    uvqe::ShotAllocation alloc;
    alloc.shots.assign(shots, shots + terms);
    *out = uvqe::statistical_error_bound(alphas, alloc, gamma);
  });
}

uvqe_status uvqe_sample_noisy_energy(const uvqe_hamiltonian* h,
                                     const uvqe_circuit* c, const long* shots,
                                     uvqe_rng* rng, double* out) {
  if (!h || !c || !shots || !rng || !out) return invalid("null argument");
  return wrap([&] {
    uvqe::ShotAllocation alloc;
    alloc.shots.assign(shots, shots + h->pauli.terms.size());
    const uvqe::NoisyEstimate estimate =
        uvqe::sample_noisy_objective(h->pauli, c->circuit, alloc, rng->rng);
    *out = estimate.value;
  });
}

uvqe_status uvqe_landscape(const uvqe_hamiltonian* h,
                           uvqe_critical_point_info* out, int cap,
                           int* count) {
  if (!h || !out || !count) return invalid("null argument");
  return wrap([&] {
    const uvqe::SpectralData& spec = h->spectrum_ref();
    if (cap < spec.dim()) {
      uvqe::fail(uvqe::ErrorCode::InvalidArgument,
                 "capacity is smaller than the matrix dimension");
    }
    const uvqe::Vector reference = uvqe::basis_state(spec.dim(), 0);
    const std::vector<uvqe::CriticalPoint> points =
        uvqe::classify_critical_points(spec, reference);
    for (int k = 0; k < spec.dim(); ++k) {
      const uvqe::CriticalPoint& cp = points[k];
      const uvqe::TangentVector grad =
          uvqe::riemannian_gradient(h->dense, reference, cp.unitary);
      out[k].level = cp.level;
      out[k].energy = spec.energies(cp.level);
      out[k].is_minimum =
          cp.kind == uvqe::CriticalPointKind::GlobalMinimum ? 1 : 0;
      out[k].grad_norm = grad.direction.norm();
      out[k].witness_value =
          cp.kind == uvqe::CriticalPointKind::StrictSaddle
              ? cp.witness_value
              : std::numeric_limits<double>::quiet_NaN();
    }
    *count = spec.dim();
  });
}

}  // extern "C"
