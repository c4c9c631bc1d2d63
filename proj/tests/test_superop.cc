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

#include <random>

#include <gtest/gtest.h>

#include "ftlab/errors.h"
#include "ftlab/superop.h"
#include "oracles.h"

namespace ftlab {
namespace {

/// Random channel from a Stinespring isometry, `r` Kraus operators.
KrausChannel random_channel(std::size_t in, std::size_t out, std::size_t r, std::mt19937_64 &rng) {
    const Matrix u = random_unitary(out * r, rng);
    const Matrix v = u.leftCols(static_cast<Eigen::Index>(in));
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < r; ++j) {
        ops.push_back(v.middleRows(static_cast<Eigen::Index>(j * out), static_cast<Eigen::Index>(out)));
    }
    return KrausChannel(in, out, ops);
}

/// Superoperator acting on row-major vec(rho): sum_j K_j (x) conj(K_j).
oracle::M superop(const KrausChannel &ch) {
    oracle::M s = oracle::M::Zero(static_cast<Eigen::Index>(ch.out_dim() * ch.out_dim()),
                                  static_cast<Eigen::Index>(ch.in_dim() * ch.in_dim()));
    for (const Matrix &k : ch.ops()) s += oracle::kron(k, k.conjugate());
    return s;
}

TEST(KrausChannel, Validation) {
    EXPECT_NO_THROW(KrausChannel::identity(3));
    const Matrix half = Matrix::Identity(2, 2) * std::sqrt(0.5);
    EXPECT_THROW(KrausChannel(2, 2, {half}), ArgumentError);
    EXPECT_NO_THROW(KrausChannel(2, 2, {half}, KrausChannel::Kind::trace_non_increasing));
    EXPECT_THROW(KrausChannel(2, 2, {Matrix::Identity(2, 2) * 2.0},
                              KrausChannel::Kind::trace_non_increasing),
                 ArgumentError);
    EXPECT_THROW(KrausChannel(2, 3, {Matrix::Identity(2, 2)}), ArgumentError);
    EXPECT_THROW(KrausChannel::isometry(Matrix::Ones(3, 2)), ArgumentError);
    const KrausChannel trivial;
    EXPECT_EQ(trivial.in_dim(), 1u);
}

TEST(Compose, FirstListedActsFirstAndMatchesSuperoperatorProduct) {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 10; ++t) {
        const KrausChannel a = random_channel(2, 3, 2, rng);
        const KrausChannel b = random_channel(3, 2, 3, rng);
        const KrausChannel c = random_channel(2, 2, 4, rng);
        const KrausChannel abc = compose({a, b, c});
        EXPECT_EQ(abc.in_dim(), 2u);
        EXPECT_EQ(abc.out_dim(), 2u);
        EXPECT_LE(abc.ops().size(), 4u);
        EXPECT_LT(max_abs_diff(superop(abc), superop(c) * superop(b) * superop(a)), 1e-12);
        const DensityMatrix rho = random_density_matrix(2, rng);
        EXPECT_LT(max_abs_diff(abc.apply(rho.matrix()), c.apply(b.apply(a.apply(rho.matrix())))),
                  1e-12);
        EXPECT_LT(max_abs_diff(abc.completeness(), Matrix::Identity(2, 2)), 1e-10);
    }
    EXPECT_THROW(compose({KrausChannel::identity(2), KrausChannel::identity(3)}), ArgumentError);
}

TEST(Compose, ChoiIsPositiveAndTracePreserving) {
    std::mt19937_64 rng(31);
    const KrausChannel ch = random_channel(2, 3, 3, rng);
    const Matrix j = choi(ch);
    ASSERT_EQ(j.rows(), 6);
    EXPECT_LT(max_abs_diff(j, j.adjoint()), 1e-14);
    Eigen::SelfAdjointEigenSolver<Matrix> es(j);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
    EXPECT_NEAR(j.trace().real(), 2.0, 1e-12);
    // Input index outermost: block (i, j) is E(|i><j|).
    Matrix e01 = Matrix::Zero(2, 2);
    e01(0, 1) = 1;
    EXPECT_LT(max_abs_diff(j.block(0, 3, 3, 3), ch.apply(e01)), 1e-14);
}

TEST(TensorChannels, MatchesKroneckerOnProductStates) {
    std::mt19937_64 rng(37);
    const KrausChannel a = random_channel(2, 2, 2, rng);
    const KrausChannel b = random_channel(3, 3, 2, rng);
    const KrausChannel ab = tensor_channels(a, b);
    const DensityMatrix ra = random_density_matrix(2, rng);
    const DensityMatrix rb = random_density_matrix(3, rng);
    EXPECT_LT(max_abs_diff(ab.apply(oracle::kron(ra.matrix(), rb.matrix())),
                           oracle::kron(a.apply(ra.matrix()), b.apply(rb.matrix()))),
              1e-13);
}

TEST(PartialTrace, MatchesIndexSum) {
    std::mt19937_64 rng(41);
    const DensityMatrix rho = random_density_matrix(6, rng);
    Matrix expected = Matrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int b = 0; b < 3; ++b) expected(i, j) += rho.matrix()(3 * i + b, 3 * j + b);
        }
    }
    EXPECT_LT(max_abs_diff(partial_trace_b(rho.matrix(), 2, 3), expected), 1e-15);
    EXPECT_EQ(partial_trace_B(rho, 2, 3).dim(), 2u);
    EXPECT_THROW(partial_trace_b(rho.matrix(), 4, 2), ArgumentError);
}

TEST(TraceNorm, MatchesEigenvaluesForHermitian) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        const Matrix d = random_density_matrix(4, rng).matrix() - random_density_matrix(4, rng).matrix();
        Eigen::SelfAdjointEigenSolver<Matrix> es(d);
        EXPECT_NEAR(trace_norm(d), es.eigenvalues().cwiseAbs().sum(), 1e-12);
    }
}

TEST(PauliKraus, AgreesWithDirectApplication) {
    std::mt19937_64 rng(47);
    const PauliChannelN ch = tensor_iid(PauliChannel1({0.6, 0.2, 0.15, 0.05}), 3);
    const KrausChannel k = to_kraus(ch);
    for (int t = 0; t < 5; ++t) {
        const DensityMatrix rho = random_density_matrix(8, rng);
        EXPECT_LT(max_abs_diff(k.apply(rho.matrix()), apply_pauli_channel(ch, rho).matrix()), 1e-12);
    }
    const PauliChannel1 one({0.7, 0.1, 0.05, 0.15});
    const auto diag = pauli_diagonal(to_kraus(one));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(diag[i], one.probs()[i], 1e-15);
    // Twirling a unitary: a rotation about Z by theta has p_Z = sin^2(theta / 2).
    const double theta = 0.4;
    Matrix rz = Matrix::Zero(2, 2);
    rz(0, 0) = std::polar(1.0, -theta / 2);
    rz(1, 1) = std::polar(1.0, theta / 2);
    EXPECT_NEAR(pauli_diagonal(KrausChannel::unitary(rz))[3], std::pow(std::sin(theta / 2), 2), 1e-15);
}

TEST(LinkingMaps, RoundTripIsIdentity) {
    std::mt19937_64 rng(53);
    const Matrix v = random_unitary(4, rng).leftCols(2);
    const LinkingMap l2c(LinkingMap::Direction::logical_to_computational, v);
    const LinkingMap c2l(LinkingMap::Direction::computational_to_logical, v);
    const DensityMatrix rho = random_density_matrix(2, rng);
    EXPECT_LT(max_abs_diff(c2l.apply(l2c.apply(rho.matrix())), rho.matrix()), 1e-13);
    const KrausChannel view = logical_view(l2c, KrausChannel::identity(4), c2l);
    EXPECT_LT(qcc_inaccuracy(view, Matrix::Identity(2, 2), rho), 1e-13);
    EXPECT_NEAR(qcc_inaccuracy(l2c, KrausChannel::identity(4), c2l, Matrix::Identity(2, 2), rho),
                0.0, 1e-13);
    EXPECT_THROW(LinkingMap(LinkingMap::Direction::logical_to_computational, Matrix::Ones(4, 2)),
                 ArgumentError);
}

TEST(QccCheck, QubitGridFindsAxisSupremum) {
    const PauliChannel1 ch({0.9, 0.0, 0.0, 0.1});
    const QccResult r = qcc_check(to_kraus(ch), Matrix::Identity(2, 2), 0.25);
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(r.witness_sup, 0.2, 1e-3);
    EXPECT_LE(r.witness_sup, 0.2 + 1e-12);
    EXPECT_TRUE(r.is_lower_bound);
    const QccResult fail = qcc_check(to_kraus(ch), Matrix::Identity(2, 2), 0.1);
    EXPECT_FALSE(fail.holds);
    // The witness state reproduces the reported inaccuracy.
    EXPECT_NEAR(qcc_inaccuracy(to_kraus(ch), Matrix::Identity(2, 2),
                               DensityMatrix::pure(fail.witness_state)),
                fail.witness_sup, 1e-12);
}

TEST(QccCheck, HigherDimensionsAndStrategies) {
    std::mt19937_64 rng(59);
    const Matrix u = random_unitary(4, rng);
    const QccResult exact = qcc_check(KrausChannel::unitary(u), u, 0.0);
    EXPECT_TRUE(exact.holds);
    EXPECT_LT(exact.witness_sup, 1e-9);
    // Full dephasing of a ququart moves |+> by a lot.
    std::vector<Matrix> ops;
    for (int i = 0; i < 4; ++i) {
        Matrix p = Matrix::Zero(4, 4);
        p(i, i) = 1;
        ops.push_back(p);
    }
    const KrausChannel dephase(4, 4, ops);
    EXPECT_FALSE(qcc_check(dephase, Matrix::Identity(4, 4), 0.5).holds);
    QccOptions restarts;
    restarts.strategy = SupStrategy::random_restarts;
    restarts.restarts = 8;
    restarts.refine_steps = 50;
    const QccResult rr = qcc_check(dephase, Matrix::Identity(4, 4), 0.5, restarts, rng);
    EXPECT_FALSE(rr.holds);
    EXPECT_LE(rr.witness_sup, 2 * (1 - 1.0 / 4) + 1e-9);
    EXPECT_THROW(qcc_check(KrausChannel::identity(16), Matrix::Identity(16, 16), 0.0),
                 CapacityError);
}

}  // namespace
}  // namespace ftlab
