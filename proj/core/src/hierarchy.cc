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

#include "ftlab/hierarchy.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ftlab/errors.h"

namespace ftlab {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

Matrix syndrome_projector(std::span<const PauliString> generators, Syndrome s) {
    const std::size_t dim = std::size_t{1} << generators.front().num_qubits();
    const Matrix id = Matrix::Identity(idx(dim), idx(dim));
    Matrix proj = id;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const double sign = (s >> i) & 1 ? -1.0 : 1.0;
        proj = proj * (0.5 * (id + sign * to_dense(generators[i])));
    }
    return proj;
}

// Weight-1 Paulis the code's own minimum-weight decoder maps back to the code space.
std::vector<PauliString> correctable_single_errors(const StabilizerCode &code) {
    const StabilizerCode canonical(code.name(), {code.generators().begin(), code.generators().end()},
                                   code.logical_x(), code.logical_z());
    std::vector<PauliString> errors;
    for (std::size_t q = 0; q < code.n(); ++q) {
        for (Pauli1 p : {Pauli1::X, Pauli1::Y, Pauli1::Z}) {
            const PauliString e = PauliString::single(code.n(), q, p);
            const PauliString &r = canonical.recovery(syndrome(canonical, e));
            if (logical_class(canonical, (r * e).without_phase()) == Pauli1::I) {
                errors.push_back(e);
            }
        }
    }
    return errors;
}

StabilizerCode eaqec_code() {
    // Qubit 0 carries the logical qubit, qubit 1 is Alice's ebit half, qubit 2 is Bob's.
    // After CNOT(0 -> 1) the ebit stabilizers XX and ZZ on (1, 2) become IXX and ZZZ.
    const StabilizerCode code("eaqec_2_1_1",
                              {PauliString::from_label("IXX"), PauliString::from_label("ZZZ")},
                              PauliString::from_label("XXI"), PauliString::from_label("ZII"));
    // Syndrome bit 0 flags IZI, bit 1 flags XII. Minimum weight would pick IIX for the
    // latter, acting on Bob's qubit and leaving a logical X behind.
    return code.with_decoder({PauliString::from_label("III"), PauliString::from_label("IZI"),
                              PauliString::from_label("XII"), PauliString::from_label("XZI")});
}

KrausChannel eaqec_noise() {
    const std::pair<PauliString, double> terms[] = {{PauliString::from_label("XII"), 0.5},
                                                    {PauliString::from_label("IZI"), 0.5}};
    return pauli_mixture(terms);
}

std::vector<DensityMatrix> test_states(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DensityMatrix> states;
    states.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            states.push_back(DensityMatrix::pure(random_pure_state(dim, rng)));
        } else {
            states.push_back(random_density_matrix(dim, rng));
        }
    }
    return states;
}

std::string format_double(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

CheckResult compare_forms(const std::string &name, const Stages &general, const Stages &reduced,
                          const SuiteOptions &options) {
    CheckResult result;
    result.name = name;
    const std::size_t dim = general.front().channel.in_dim();
    const std::vector<DensityMatrix> states = test_states(dim, options.num_states, options.seed);

    const double stage_dev = stagewise_deviation(general, reduced, states);
    const IdentityCheck general_id = check_identity(general, states, options.identity_tol);
    const IdentityCheck reduced_id = check_identity(reduced, states, options.identity_tol);

    QccOptions qcc;
    qcc.grid_resolution = options.qcc_resolution;
    const QccResult q = qcc_check(compose(reduced), Matrix::Identity(idx(dim), idx(dim)), 0.0, qcc);

    std::ostringstream detail;
    detail << "stage deviation " << format_double(stage_dev) << ", identity deviation "
           << format_double(std::max(general_id.max_deviation, reduced_id.max_deviation))
           << ", QCC sup " << format_double(q.witness_sup);
    result.passed = stage_dev <= options.stage_tol && general_id.failing_stage.empty() &&
                    reduced_id.failing_stage.empty() && q.holds;
    if (!general_id.failing_stage.empty()) {
        result.failing_stage = general_id.failing_stage;
    } else if (!reduced_id.failing_stage.empty()) {
        result.failing_stage = reduced_id.failing_stage;
    } else if (stage_dev > options.stage_tol) {
        result.failing_stage = "reduction";
    } else if (!q.holds) {
        result.failing_stage = "qcc";
    }
    if (!result.failing_stage.empty()) {
        detail << "; failed at stage '" << result.failing_stage << "'";
    }
    result.detail = detail.str();
    return result;
}

}  // namespace

Matrix stabilizer_encoder(const StabilizerCode &code) {
    if (code.k() != 1) {
        throw ArgumentError("stabilizer_encoder: only k = 1 codes are supported");
    }
    if (code.n() > 10) {
        throw CapacityError("stabilizer_encoder: dense encoder limited to 10 qubits");
    }
    const std::size_t dim = std::size_t{1} << code.n();
    const Matrix id = Matrix::Identity(idx(dim), idx(dim));
    Matrix proj = syndrome_projector(code.generators(), 0);
    proj = proj * (0.5 * (id + to_dense(code.logical_z())));
    Eigen::Index best = 0;
    proj.colwise().norm().maxCoeff(&best);
    const Vector zero = proj.col(best).normalized();
    Matrix v(idx(dim), 2);
    v.col(0) = zero;
    v.col(1) = to_dense(code.logical_x()) * zero;
    return v;
}

KrausChannel syndrome_recovery(std::span<const PauliString> generators,
                               std::span<const PauliString> table) {
    if (generators.empty() || table.size() != (std::size_t{1} << generators.size())) {
        throw ArgumentError("syndrome_recovery: table must have 2^(number of generators) entries");
    }
    const std::size_t dim = std::size_t{1} << generators.front().num_qubits();
    std::vector<Matrix> ops;
    ops.reserve(table.size());
    for (Syndrome s = 0; s < table.size(); ++s) {
        ops.push_back(to_dense(table[s]) * syndrome_projector(generators, s));
    }
    return KrausChannel(dim, dim, std::move(ops));
}

KrausChannel syndrome_recovery(const StabilizerCode &code) {
    return syndrome_recovery(code.generators(), code.decoder());
}

KrausChannel pauli_mixture(std::span<const std::pair<PauliString, double>> terms) {
    if (terms.empty()) {
        throw ArgumentError("pauli_mixture: no terms");
    }
    const std::size_t dim = std::size_t{1} << terms.front().first.num_qubits();
    std::vector<Matrix> ops;
    for (const auto &[pauli, weight] : terms) {
        if (weight < 0.0) {
            throw ArgumentError("pauli_mixture: negative weight");
        }
        if (weight > 0.0) {
            ops.push_back(std::sqrt(weight) * to_dense(pauli));
        }
    }
    return KrausChannel(dim, dim, std::move(ops));
}

EaoqecSpec bundled_qec(const StabilizerCode &code, std::span<const PauliString> errors) {
    const Matrix v = stabilizer_encoder(code);
    std::vector<std::pair<PauliString, double>> terms{{PauliString(code.n()), 0.4}};
    for (const PauliString &e : errors) {
        terms.emplace_back(e, 0.6 / static_cast<double>(errors.size()));
    }
    EaoqecSpec spec;
    spec.k = 1;
    spec.s = code.n() - 1;
    spec.enc = KrausChannel::isometry(v);
    spec.noise = pauli_mixture(terms);
    spec.recovery = syndrome_recovery(code);
    spec.dec = decoding_channel(v);
    return spec;
}

EaoqecSpec bundled_qec() {
    const StabilizerCode code = bit_flip_3();
    std::vector<PauliString> errors;
    for (std::size_t q = 0; q < 3; ++q) {
        errors.push_back(PauliString::single(3, q, Pauli1::X));
    }
    return bundled_qec(code, errors);
}

EaoqecSpec bundled_oqec() {
    const double gamma = 0.3;
    Matrix damp0(2, 2), damp1(2, 2), rot(2, 2);
    damp0 << 1.0, 0.0, 0.0, std::sqrt(1.0 - gamma);
    damp1 << 0.0, std::sqrt(gamma), 0.0, 0.0;
    const double t = 0.7;
    rot << std::cos(t), Complex(0.0, -std::sin(t)), Complex(0.0, -std::sin(t)), std::cos(t);
    const Matrix id = Matrix::Identity(2, 2);

    EaoqecSpec spec;
    spec.k = 1;
    spec.dim_b = 2;
    spec.enc = KrausChannel::identity(2);
    spec.noise = compose({KrausChannel(4, 4, {kron(id, damp0), kron(id, damp1)}),
                          KrausChannel::unitary(kron(id, rot))});
    spec.recovery = KrausChannel::identity(4);
    spec.dec = KrausChannel::identity(2);
    return spec;
}

EaoqecSpec bundled_eaqec() {
    const StabilizerCode code = eaqec_code();
    const Matrix v = stabilizer_encoder(code);
    EaoqecSpec spec;
    spec.k = 1;
    spec.c = 1;
    spec.enc = KrausChannel::isometry(v);
    spec.noise = eaqec_noise();
    spec.recovery = syndrome_recovery(code);
    spec.dec = decoding_channel(v);
    return spec;
}

EaoqecSpec bundled_eaoqec() {
    EaoqecSpec spec = bundled_eaqec();
    spec.dim_b = 2;
    spec.dim_k = 2;

    Matrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    const KrausChannel dephase(2, 2, {std::sqrt(0.75) * Matrix::Identity(2, 2), std::sqrt(0.25) * z});
    spec.noise = lift_channel(tensor_channels(eaqec_noise(), dephase), 1, spec.dim_k);
    spec.recovery = lift_channel(syndrome_recovery(eaqec_code()), spec.dim_b, spec.dim_k);

    // Decoding split into its unitary part (undo the CNOT) and a kinematic part that
    // removes the ebit pair from |psi>|Phi+>.
    Matrix cnot = Matrix::Zero(8, 8);
    for (Eigen::Index b = 0; b < 8; ++b) {
        const Eigen::Index target = (b & 4) ? (b ^ 2) : b;
        cnot(target, b) = 1.0;
    }
    Matrix kinematic = Matrix::Zero(8, 2);
    const double h = 1.0 / std::sqrt(2.0);
    kinematic(0b000, 0) = h;
    kinematic(0b011, 0) = h;
    kinematic(0b100, 1) = h;
    kinematic(0b111, 1) = h;
    spec.dec_unitary = KrausChannel::unitary(cnot);
    spec.dec = decoding_channel(kinematic);
    return spec;
}

bool HierarchyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

IdentityCheck check_identity(const Stages &stages, std::span<const DensityMatrix> states,
                             double tol) {
    IdentityCheck result;
    if (stages.empty()) {
        throw ArgumentError("check_identity: no stages");
    }
    const DensityMatrix *worst = nullptr;
    for (const DensityMatrix &rho : states) {
        const Matrix out = run_stages(stages, rho.matrix()).back();
        const double dev = trace_norm(out - rho.matrix());
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            worst = &rho;
        }
    }
    if (result.max_deviation <= tol) {
        return result;
    }

    Stages clean = stages;
    std::size_t noise_at = 0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        if (clean[i].name == "noise") {
            clean[i].channel = KrausChannel::identity(clean[i].channel.in_dim());
            noise_at = i;
        }
    }
    const std::vector<Matrix> noisy_out = run_stages(stages, worst->matrix());
    const std::vector<Matrix> clean_out = run_stages(clean, worst->matrix());
    result.failing_stage = stages.back().name;
    for (std::size_t i = noise_at + 1; i < stages.size(); ++i) {
        if (trace_norm(noisy_out[i] - clean_out[i]) > tol) {
            result.failing_stage = stages[i].name;
            break;
        }
    }
    return result;
}

double stagewise_deviation(const Stages &a, const Stages &b, std::span<const DensityMatrix> states) {
    double worst = 0.0;
    for (const DensityMatrix &rho : states) {
        const std::vector<Matrix> out_a = run_stages(a, rho.matrix());
        const std::vector<Matrix> out_b = run_stages(b, rho.matrix());
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (a[i].name != b[j].name) {
                    continue;
                }
                if (out_a[i].rows() != out_b[j].rows()) {
                    throw ArgumentError("stagewise_deviation: stage '" + a[i].name +
                                        "' has different output dimensions");
                }
                worst = std::max(worst, max_abs_diff(out_a[i], out_b[j]));
            }
        }
    }
    return worst;
}

CheckResult check_instance(const std::string &name, const EaoqecSpec &spec,
                           const SuiteOptions &options) {
    const Stages stages = eaoqec_stages(spec);
    return compare_forms(name, stages, stages, options);
}

HierarchyReport reduction_suite(const SuiteOptions &options) {
    return reduction_suite(bit_flip_3(), options);
}

HierarchyReport reduction_suite(const StabilizerCode &qec_code, const SuiteOptions &options) {
    HierarchyReport report;
    const auto guarded = [&](const std::string &name, auto &&body) {
        try {
            report.checks.push_back(body());
        } catch (const std::exception &e) {
            CheckResult failed;
            failed.name = name;
            failed.detail = e.what();
            if (const auto *ce = dynamic_cast<const ConstructionError *>(&e)) {
                failed.failing_stage = ce->stage();
            } else {
                failed.failing_stage = "construction";
            }
            report.checks.push_back(std::move(failed));
        }
    };

    const std::string qcc_name = "QCC -> EAOQEC (alpha = 0, U = I)";
    guarded(qcc_name, [&] { return check_instance(qcc_name, bundled_eaoqec(), options); });

    const std::string eaqec_name = "EAOQEC -> EAQEC (dim B = 1)";
    guarded(eaqec_name, [&] {
        const EaoqecSpec spec = bundled_eaqec();
        return compare_forms(eaqec_name, eaoqec_stages(spec), qec_stages(reduce_to_eaqec(spec)),
                             options);
    });

    const std::string oqec_name = "EAOQEC -> OQEC (c = 0)";
    guarded(oqec_name, [&] {
        const EaoqecSpec spec = bundled_oqec();
        return compare_forms(oqec_name, eaoqec_stages(spec), oqec_stages(reduce_to_oqec(spec)),
                             options);
    });

    const std::vector<PauliString> errors = correctable_single_errors(qec_code);
    const std::string from_eaqec = "EAQEC -> QEC (c = 0)";
    guarded(from_eaqec, [&] {
        const EaoqecSpec spec = bundled_qec(qec_code, errors);
        return compare_forms(from_eaqec, qec_stages(reduce_to_eaqec(spec)),
                             qec_stages(reduce_to_qec(spec)), options);
    });

    const std::string from_oqec = "OQEC -> QEC (dim B = 1)";
    guarded(from_oqec, [&] {
        const EaoqecSpec spec = bundled_qec(qec_code, errors);
        return compare_forms(from_oqec, oqec_stages(reduce_to_oqec(spec)),
                             qec_stages(reduce_to_qec(spec)), options);
    });
    return report;
}

}  // namespace ftlab
