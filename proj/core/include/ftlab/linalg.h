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

#ifndef FTLAB_LINALG_H
#define FTLAB_LINALG_H

#include <complex>
#include <cstddef>
#include <random>

#include <Eigen/Dense>

namespace ftlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerances used when validating a density matrix.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    /// Throws ArgumentError if `m` is not square or violates any invariant.
    explicit DensityMatrix(Matrix m);

    static DensityMatrix pure(const Vector &psi);
    static DensityMatrix maximally_mixed(std::size_t dim);
    static DensityMatrix basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    const Matrix &matrix() const noexcept { return m_; }

   private:
    Matrix m_;
};

/// Kronecker product of two dense matrices.
Matrix kron(const Matrix &a, const Matrix &b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);

/// Haar-random pure state of dimension `dim`.
Vector random_pure_state(std::size_t dim, std::mt19937_64 &rng);

/// Random mixed state from a Ginibre matrix of the given rank (rank 0 = full).
DensityMatrix random_density_matrix(std::size_t dim, std::mt19937_64 &rng, std::size_t rank = 0);

/// Haar-random unitary via QR of a Ginibre matrix.
Matrix random_unitary(std::size_t dim, std::mt19937_64 &rng);

}  // namespace ftlab

#endif
