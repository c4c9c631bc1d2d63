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
#include "ftlab/hierarchy.h"
#include "oracles.h"

namespace ftlab {
namespace {

std::vector<DensityMatrix> random_states(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DensityMatrix> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_density_matrix(dim, rng));
    return out;
}

double identity_deviation(const EaoqecSpec &spec, std::span<const DensityMatrix> states) {
    const KrausChannel pipeline = eaoqec_pipeline(spec);
    double worst = 0.0;
    for (const DensityMatrix &rho : states) {
        worst = std::max(worst, trace_norm(pipeline.apply(rho.matrix()) - rho.matrix()));
    }
    return worst;
}

TEST(StabilizerEncoder, SpansCodeSpace) {
    for (const StabilizerCode &code : {bit_flip_3(), five_qubit()}) {
        const Matrix v = stabilizer_encoder(code);
        EXPECT_LT(max_abs_diff(v.adjoint() * v, Matrix::Identity(2, 2)), 1e-12);
        for (const PauliString &g : code.generators()) {
            EXPECT_LT(max_abs_diff(oracle::dense(g.label()) * v, v), 1e-12) << g.label();
        }
        const Matrix lz = oracle::dense(code.logical_z().label());
        EXPECT_LT(max_abs_diff(lz * v.col(0), v.col(0)), 1e-12);
        EXPECT_LT(max_abs_diff(lz * v.col(1), -v.col(1)), 1e-12);
        EXPECT_LT(max_abs_diff(oracle::dense(code.logical_x().label()) * v.col(0), v.col(1)), 1e-12);
    }
}

TEST(SyndromeRecovery, CorrectsEveryDecodableError) {
    const StabilizerCode code = five_qubit();
    const Matrix v = stabilizer_encoder(code);
    const KrausChannel r = syndrome_recovery(code);
    EXPECT_LT(max_abs_diff(r.completeness(), Matrix::Identity(32, 32)), 1e-10);
    const auto states = random_states(2, 3, 61);
    for (std::size_t q = 0; q < 5; ++q) {
        for (Pauli1 p : {Pauli1::X, Pauli1::Y, Pauli1::Z}) {
            const Matrix e = to_dense(PauliString::single(5, q, p));
            for (const DensityMatrix &rho : states) {
                const Matrix encoded = v * rho.matrix() * v.adjoint();
                EXPECT_LT(max_abs_diff(r.apply(e * encoded * e.adjoint()), encoded), 1e-12);
            }
        }
    }
}

TEST(BundledInstances, PipelinesAreIdentity) {
    for (const EaoqecSpec &spec : {bundled_qec(), bundled_oqec(), bundled_eaqec(), bundled_eaoqec()}) {
        const auto states = random_states(spec.logical_dim(), 100, 67);
        EXPECT_LT(identity_deviation(spec, states), 1e-10);
        const QccResult q = qcc_check(eaoqec_pipeline(spec), Matrix::Identity(2, 2), 0.0);
        EXPECT_TRUE(q.holds);
    }
}

TEST(BundledInstances, NoiseIsNotTrivial) {
    // Without recovery the bundled QEC and EAQEC noise corrupts the logical state.
    for (EaoqecSpec spec : {bundled_qec(), bundled_eaqec()}) {
        spec.recovery = KrausChannel::identity(spec.dim_h());
        const auto states = random_states(2, 20, 71);
        EXPECT_GT(identity_deviation(spec, states), 1e-2);
    }
}

TEST(BundledInstances, Dimensions) {
    const EaoqecSpec ea = bundled_eaqec();
    EXPECT_EQ(ea.c, 1u);
    EXPECT_EQ(ea.dim_a(), 8u);
    const EaoqecSpec eao = bundled_eaoqec();
    EXPECT_EQ(eao.dim_b, 2u);
    EXPECT_EQ(eao.dim_k, 2u);
    EXPECT_EQ(eao.dim_h(), 18u);
}

TEST(Reductions, StageForStageAgreement) {
    const auto states = random_states(2, 20, 73);
    const EaoqecSpec ea = bundled_eaqec();
    EXPECT_LT(stagewise_deviation(eaoqec_stages(ea), qec_stages(reduce_to_eaqec(ea)), states), 1e-12);
    const EaoqecSpec o = bundled_oqec();
    EXPECT_LT(stagewise_deviation(eaoqec_stages(o), oqec_stages(reduce_to_oqec(o)), states), 1e-12);
    const EaoqecSpec q = bundled_qec();
    EXPECT_LT(stagewise_deviation(eaoqec_stages(q), qec_stages(reduce_to_qec(q)), states), 1e-12);
    EXPECT_THROW(reduce_to_eaqec(bundled_oqec()), ArgumentError);
    EXPECT_THROW(reduce_to_oqec(bundled_eaqec()), ArgumentError);
}

TEST(Pipeline, OrderingMovesDecodingUnitary) {
    EaoqecSpec spec = bundled_eaoqec();
    spec.ordering = Ordering::decode_then_recovery;
    const Stages stages = eaoqec_stages(spec);
    std::vector<std::string> names;
    for (const Stage &s : stages) names.push_back(s.name);
    EXPECT_EQ(names, (std::vector<std::string>{"enc", "embed", "noise", "dec_unitary", "recovery",
                                                "project_ab", "trace_b", "dec"}));
}

TEST(Pipeline, DimensionMismatchNamesStage) {
    EaoqecSpec spec = bundled_eaqec();
    spec.recovery = KrausChannel::identity(4);
    try {
        eaoqec_stages(spec);
        FAIL() << "expected ConstructionError";
    } catch (const ConstructionError &e) {
        EXPECT_EQ(e.stage(), "recovery");
    }
    spec = bundled_eaqec();
    spec.dec = KrausChannel::identity(8);
    try {
        eaoqec_stages(spec);
        FAIL() << "expected ConstructionError";
    } catch (const ConstructionError &e) {
        EXPECT_EQ(e.stage(), "dec");
    }
}

TEST(Pipeline, ProjectionLosesWeightInK) {
    const KrausChannel f = project_ab_channel(2, 1);
    EXPECT_EQ(f.kind(), KrausChannel::Kind::trace_non_increasing);
    Matrix rho = Matrix::Zero(3, 3);
    rho(2, 2) = 1;
    EXPECT_NEAR(f.apply(rho).trace().real(), 0.0, 1e-15);
}

TEST(ReductionSuite, AllChecksPass) {
    SuiteOptions options;
    options.num_states = 30;
    options.qcc_resolution = 64;
    const HierarchyReport report = reduction_suite(options);
    EXPECT_EQ(report.checks.size(), 5u);
    for (const CheckResult &c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_TRUE(report.all_passed());
}

TEST(ReductionSuite, CorruptedDecoderFailsAtRecovery) {
    const StabilizerCode good = bit_flip_3();
    std::vector<PauliString> table(good.decoder().begin(), good.decoder().end());
    table[syndrome(good, PauliString::from_label("XII"))] = PauliString::from_label("IXX");
    SuiteOptions options;
    options.num_states = 20;
    options.qcc_resolution = 64;
    const HierarchyReport report = reduction_suite(good.with_decoder(table), options);
    EXPECT_FALSE(report.all_passed());
    bool saw_recovery = false;
    for (const CheckResult &c : report.checks) {
        if (!c.passed) {
            EXPECT_EQ(c.failing_stage, "recovery") << c.name;
            saw_recovery = true;
        }
    }
    EXPECT_TRUE(saw_recovery);
}

TEST(CheckIdentity, LocatesFailingStage) {
    EaoqecSpec spec = bundled_qec();
    // A dec that applies a logical X after decoding.
    Matrix x = Matrix::Zero(2, 2);
    x(0, 1) = x(1, 0) = 1;
    spec.dec = compose({spec.dec, KrausChannel::unitary(x)});
    const auto states = random_states(2, 10, 79);
    const IdentityCheck r = check_identity(eaoqec_stages(spec), states, 1e-10);
    EXPECT_GT(r.max_deviation, 1e-3);
    EXPECT_EQ(r.failing_stage, "dec");
}

}  // namespace
}  // namespace ftlab
