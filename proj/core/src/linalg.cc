// Copyright 2026 The ftlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ftlab/linalg.h"

#include <cmath>
#include <string>

#include "ftlab/errors.h"

namespace ftlab {

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw ArgumentError("density matrix must be square and non-empty");
    }
    if (max_abs_diff(m_, m_.adjoint()) > kHermitianTol) {
        throw ArgumentError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex(1.0)) > kTraceTol) {
        throw ArgumentError("density matrix trace is " + std::to_string(m_.trace().real()));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
        throw ArgumentError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::pure(const Vector &psi) {
    const double norm = psi.norm();
    if (norm == 0.0) {
        throw ArgumentError("cannot build a pure state from the zero vector");
    }
    const Vector unit = psi / norm;
    return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    const auto d = static_cast<Eigen::Index>(dim);
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw ArgumentError("basis index out of range");
    }
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix m = Matrix::Zero(d, d);
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return DensityMatrix(std::move(m));
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ArgumentError("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

}  // namespace

Vector random_pure_state(std::size_t dim, std::mt19937_64 &rng) {
    Vector psi = ginibre(static_cast<Eigen::Index>(dim), 1, rng).col(0);
    return psi / psi.norm();
}

DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng, std::size_t rank) {
    const auto d = static_cast<Eigen::Index>(dim);
    const auto r = static_cast<Eigen::Index>(rank == 0 ? dim : rank);
    const Matrix g = ginibre(d, r, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Remove rounding asymmetry so the Hermiticity check sees an exact adjoint.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(std::move(rho));
}

Matrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    const auto d = static_cast<Eigen::Index>(dim);
    const Matrix g = ginibre(d, d, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(j) *= diag / mag;
        }
    }
    return q;
}

}  // namespace ftlab
