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

#ifndef FTLAB_HIERARCHY_H
#define FTLAB_HIERARCHY_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ftlab/codes.h"
#include "ftlab/superop.h"

namespace ftlab {

/// Columns |0_L>, |1_L> of an isometry onto the code space: the +1 eigenvector of every
/// generator and of logical Z, and logical X applied to it.
Matrix stabilizer_encoder(const StabilizerCode &code);

/// Syndrome measurement followed by a table lookup: Kraus operators C_s Pi_s, where
/// Pi_s projects onto syndrome s of `generators` and C_s = table[s].
KrausChannel syndrome_recovery(std::span<const PauliString> generators,
                               std::span<const PauliString> table);
KrausChannel syndrome_recovery(const StabilizerCode &code);

/// sum_j w_j E_j rho E_j^dagger; weights must sum to 1.
KrausChannel pauli_mixture(std::span<const std::pair<PauliString, double>> terms);

/// Standard code: `code` encodes one qubit, noise picks the identity with probability 0.4
/// or one of `errors` uniformly otherwise, recovery is the code's decoder table.
EaoqecSpec bundled_qec(const StabilizerCode &code, std::span<const PauliString> errors);
/// bit_flip_3 with single bit flips on each qubit.
EaoqecSpec bundled_qec();
/// Noiseless subsystem: one logical qubit on A, dim B = 2, noise only on B, no recovery.
EaoqecSpec bundled_oqec();
/// One logical qubit protected with one ebit: Alice sends the logical qubit and her ebit
/// half, Bob keeps the other half. Noise applies X to the logical qubit or Z to the ebit
/// half with equal probability; Bob's joint syndrome measurement undoes either.
EaoqecSpec bundled_eaqec();
/// The entanglement-assisted instance on A, with dim B = 2 (dephased) and dim K = 2.
EaoqecSpec bundled_eaoqec();

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// First stage at which a failing instance went wrong; empty on success.
    std::string failing_stage;
};

struct HierarchyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

struct IdentityCheck {
    double max_deviation = 0.0;
    std::string failing_stage;
};

/// Runs each state through `stages` and compares the final output with the input.
/// On failure, the stage is located by rerunning with the "noise" stage replaced by the
/// identity and reporting the first stage after it whose outputs still differ.
IdentityCheck check_identity(const Stages &stages, std::span<const DensityMatrix> states,
                             double tol);

/// Largest output difference between same-named stages of two pipelines.
double stagewise_deviation(const Stages &a, const Stages &b, std::span<const DensityMatrix> states);

struct SuiteOptions {
    std::size_t num_states = 100;
    std::uint64_t seed = 20260101;
    double identity_tol = 1e-10;
    double stage_tol = 1e-12;
    std::size_t qcc_resolution = 200;
};

/// One check per arrow of the error-correction hierarchy (QCC -> EAOQEC -> {EAQEC, OQEC}
/// -> QEC) on the bundled instances. `qec_code` lets tests inject a faulty decoder.
HierarchyReport reduction_suite(const SuiteOptions &options = {});
HierarchyReport reduction_suite(const StabilizerCode &qec_code, const SuiteOptions &options);

/// Pipeline identity (within tol) and an alpha = 0, U = I QCC check for one instance.
CheckResult check_instance(const std::string &name, const EaoqecSpec &spec,
                           const SuiteOptions &options);

}  // namespace ftlab

#endif
