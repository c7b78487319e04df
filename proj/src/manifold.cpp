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

#include "uvqe/manifold.hpp"

#include <Eigen/Eigenvalues>

#include "uvqe/errors.hpp"
#include "uvqe/linalg.hpp"

namespace uvqe {

namespace {

void check_square_match(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    fail(ErrorCode::DimensionMismatch, "matrix dimensions do not match");
  }
}

}  // namespace

TangentVector project_tangent(const Matrix& u, const Matrix& ambient) {
  check_square_match(u, ambient);
  if (!is_unitary(u, 1e-8)) {
    fail(ErrorCode::NonUnitary, "base point is not unitary");
  }
  return TangentVector{u, ambient - u * sym(u.adjoint() * ambient)};
}

TangentVector riemannian_gradient(const Matrix& h, const Vector& reference,
                                  const Matrix& u) {
  if (h.rows() != h.cols() || u.rows() != u.cols() || h.rows() != u.rows() ||
      reference.size() != h.rows()) {
    fail(ErrorCode::DimensionMismatch, "operand dimensions do not match");
  }
  // Euclidean gradient H U rho_0 = (H U ref) ref^dagger is rank one.
  const Vector phi = u * reference;
  const Vector h_phi = h * phi;
  const Matrix euclidean = h_phi * reference.adjoint();
  return TangentVector{u, euclidean - u * sym(u.adjoint() * euclidean)};
}

std::vector<Matrix> all_layer_gradients(const Matrix& h,
                                        const CircuitState& circuit) {
  const int depth = circuit.depth();
  const auto dim = h.rows();
  if (circuit.reference.size() != dim) {
    fail(ErrorCode::DimensionMismatch,
         "reference state does not match the Hamiltonian dimension");
  }
  // suffix[k] = U_{k+1} ... U_N |ref> (suffix[depth] is the reference itself)
  std::vector<Vector> suffix(depth + 1);
  suffix[depth] = circuit.reference;
  for (int k = depth - 1; k >= 0; --k) {
    suffix[k] = circuit.layers[k] * suffix[k + 1];
  }
  // Euclidean gradient of layer k is the rank-one matrix
  // (U_1...U_{k-1})^dagger H |phi> <suffix[k+1]| with |phi> the output state,
  // so the tangent projection reduces to three outer products.
  Vector left = h * suffix[0];
  std::vector<Matrix> grads(depth);
  for (int k = 0; k < depth; ++k) {
    if (k > 0) left = circuit.layers[k - 1].adjoint() * left;
    const Matrix& u = circuit.layers[k];
    const Vector& s = suffix[k + 1];
    const Vector w = u.adjoint() * left;
    grads[k] = (left - 0.5 * (u * w)) * s.adjoint() -
               (0.5 * (u * s)) * w.adjoint();
  }
  return grads;
}

TangentVector layer_riemannian_gradient(const Matrix& h,
                                        const CircuitState& circuit,
                                        int layer) {
  if (layer < 0 || layer >= circuit.depth()) {
    fail(ErrorCode::IndexOutOfRange, "layer index out of range");
  }
  std::vector<Matrix> grads = all_layer_gradients(h, circuit);
  return TangentVector{circuit.layers[layer], std::move(grads[layer])};
}

Matrix retract(const Matrix& base, const Matrix& direction) {
  check_square_match(base, direction);
  const Matrix a = base + direction;
  // For tangent directions A^dagger A = I + xi^dagger xi is positive
  // definite, so the inverse square root comes from a Hermitian
  // eigendecomposition; fall back to the SVD route otherwise.
  const Matrix gram = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram);
  if (solver.info() == Eigen::Success &&
      solver.eigenvalues()(0) > 1e-14 * solver.eigenvalues().maxCoeff()) {
    const auto inv_sqrt =
        solver.eigenvalues().array().sqrt().inverse().matrix().asDiagonal();
    return a * solver.eigenvectors() * inv_sqrt *
           solver.eigenvectors().adjoint();
  }
  return polar_unitary(a);
}

Matrix retract(const TangentVector& tv) { return retract(tv.base, tv.direction); }

double hessian_bilinear(const SpectralData& spec, int level,
                        const Matrix& omega) {
  const int dim = spec.dim();
  if (level < 0 || level >= dim) {
    fail(ErrorCode::IndexOutOfRange, "eigenlevel out of range");
  }
  if (omega.rows() != dim || omega.cols() != dim) {
    fail(ErrorCode::DimensionMismatch, "direction dimension does not match");
  }
  if ((omega + omega.adjoint()).norm() > 1e-10 * std::max(1.0, omega.norm())) {
    fail(ErrorCode::NonSkewHermitian, "direction is not skew-Hermitian");
  }
  // Rotate into the eigenbasis; only column `level` enters the form.
  const Vector column = spec.eigenvectors.adjoint() *
                        (omega * spec.eigenvectors.col(level));
  const double e_level = spec.energies(level);
  double value = 0.0;
  for (int l = 0; l < dim; ++l) {
    value += 2.0 * (spec.energies(l) - e_level) * std::norm(column(l));
  }
  return value;
}

Matrix completion_unitary(const Vector& from, const Vector& to) {
  if (from.size() != to.size()) {
    fail(ErrorCode::DimensionMismatch, "state dimensions do not match");
  }
  const auto dim = from.size();
  const Vector a = from.normalized();
  const Vector b = to.normalized();
  const Complex overlap = a.dot(b);  // <a|b>
  Vector residual = b - overlap * a;
  const double res_norm = residual.norm();
  if (res_norm < 1e-14) {
    // Colinear: phase rotation within span{a}.
    return Matrix::Identity(dim, dim) + (overlap - 1.0) * (a * a.adjoint());
  }
  const Vector q = residual / res_norm;
  // In the orthonormal basis {a, q}: a -> (overlap, res_norm). Extend to a
  // 2x2 unitary and keep the orthogonal complement fixed.
  Matrix block(2, 2);
  block << overlap, -res_norm, res_norm, std::conj(overlap);
  Matrix frame(dim, 2);
  frame.col(0) = a;
  frame.col(1) = q;
  return Matrix::Identity(dim, dim) - frame * frame.adjoint() +
         frame * block * frame.adjoint();
}

std::vector<CriticalPoint> classify_critical_points(const SpectralData& spec,
                                                    const Vector& reference) {
  const int dim = spec.dim();
  if (reference.size() != dim) {
    fail(ErrorCode::DimensionMismatch,
         "reference state does not match the spectrum dimension");
  }
  std::vector<CriticalPoint> points;
  points.reserve(dim);
  for (int k = 0; k < dim; ++k) {
    CriticalPoint cp;
    cp.level = k;
    cp.unitary = completion_unitary(reference, spec.eigenvectors.col(k));
    if (k < spec.ground_degeneracy) {
      cp.kind = CriticalPointKind::GlobalMinimum;
    } else {
      cp.kind = CriticalPointKind::StrictSaddle;
      // Descent witness rotating weight between the lowest eigenvector and
      // level k; its Hessian value is 2 (E_0 - E_k) < 0.
      Matrix omega_eig = Matrix::Zero(dim, dim);
      omega_eig(0, k) = 1.0;
      omega_eig(k, 0) = -1.0;
      cp.witness =
          spec.eigenvectors * omega_eig * spec.eigenvectors.adjoint();
      cp.witness_value = hessian_bilinear(spec, k, cp.witness);
    }
    points.push_back(std::move(cp));
  }
  return points;
}

double gradient_lower_bound(const SpectralData& spec, const Vector& state) {
  if (state.size() != spec.dim()) {
    fail(ErrorCode::DimensionMismatch,
         "state dimension does not match the spectrum");
  }
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    fail(ErrorCode::InvalidArgument, "state must be normalized");
  }
  const double excited =
      (state - spec.ground_projector * state).squaredNorm();
  const double p = std::clamp(excited, 0.0, 1.0);
  return 0.25 * spec.gap * spec.gap * p * (1.0 - p);
}

}  // namespace uvqe
