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

#include "uvqe/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "uvqe/errors.hpp"

namespace uvqe {

Matrix sym(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(u.rows(), u.cols())).norm() <= tol;
}

bool is_finite(const Matrix& a) { return a.allFinite(); }

HermitianEigen hermitian_eigen(const Matrix& h) {
  if (h.rows() != h.cols()) {
    fail(ErrorCode::NonSquare, "eigendecomposition requires a square matrix");
  }
  if (!is_finite(h)) {
    fail(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  const double scale = std::max(1.0, h.norm());
  if (!is_hermitian(h, 1e-10 * scale)) {
    fail(ErrorCode::NonHermitian, "matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym(h));
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::InvalidArgument, "eigendecomposition failed to converge");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix polar_unitary(const Matrix& a) {
  if (a.rows() != a.cols()) {
    fail(ErrorCode::NonSquare, "polar factor requires a square matrix");
  }
  if (!is_finite(a)) {
    fail(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-12 * sv(0)) {
    fail(ErrorCode::RankDeficient, "matrix is rank deficient");
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

double spectral_norm(const Matrix& a) {
  if (!is_finite(a)) {
    fail(ErrorCode::InvalidArgument, "matrix has non-finite entries");
  }
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Matrix haar_unitary(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) {
    const Complex d = r(c, c);
    const double mag = std::abs(d);
    q.col(c) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

Matrix random_hermitian(int dim, Rng& rng) {
  Matrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      g(r, c) = Complex(rng.normal(), rng.normal());
    }
  }
  return sym(g);
}

Vector random_state(int dim, Rng& rng) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    v(i) = Complex(rng.normal(), rng.normal());
  }
  v.normalize();
  return v;
}

Vector basis_state(int dim, int index) {
  if (index < 0 || index >= dim) {
    fail(ErrorCode::IndexOutOfRange, "basis index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

}  // namespace uvqe
