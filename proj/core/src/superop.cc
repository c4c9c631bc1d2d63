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

#include "ftlab/superop.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ftlab/errors.h"

namespace ftlab {

namespace {

Eigen::Index idx(std::size_t v) { return static_cast<Eigen::Index>(v); }

std::string dims(std::size_t rows, std::size_t cols) {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

// Trace norm of a Hermitian matrix from its eigenvalues.
double hermitian_trace_norm(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

KrausChannel::Kind combine(KrausChannel::Kind a, KrausChannel::Kind b) {
    return a == KrausChannel::Kind::trace_preserving && b == KrausChannel::Kind::trace_preserving
               ? KrausChannel::Kind::trace_preserving
               : KrausChannel::Kind::trace_non_increasing;
}

// Minimal Kraus set from the eigen-decomposition of the Choi matrix.
std::vector<Matrix> compress(const KrausChannel &ch) {
    const Matrix j = choi(ch);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(j);
    const auto &values = solver.eigenvalues();
    const double top = values.maxCoeff();
    std::vector<Matrix> ops;
    for (Eigen::Index e = values.size() - 1; e >= 0; --e) {
        if (values(e) <= 1e-15 * top) {
            continue;
        }
        const Vector v = std::sqrt(values(e)) * solver.eigenvectors().col(e);
        // choi() stacks column-major vec(K), input index outermost.
        ops.push_back(Eigen::Map<const Matrix>(v.data(), idx(ch.out_dim()), idx(ch.in_dim())));
    }
    if (ops.empty()) {
        ops.push_back(Matrix::Zero(idx(ch.out_dim()), idx(ch.in_dim())));
    }
    return ops;
}

double evaluate_pure(const KrausChannel &p, const Matrix &u, const Vector &psi) {
    const Matrix rho = psi * psi.adjoint();
    return hermitian_trace_norm(p.apply(rho) - u * rho * u.adjoint());
}

}  // namespace

KrausChannel::KrausChannel()
    : in_dim_(1), out_dim_(1), ops_{Matrix::Identity(1, 1)}, kind_(Kind::trace_preserving) {}

KrausChannel::KrausChannel(std::size_t in_dim, std::size_t out_dim, std::vector<Matrix> ops,
                           Kind kind)
    : in_dim_(in_dim), out_dim_(out_dim), ops_(std::move(ops)), kind_(kind) {
    if (in_dim == 0 || out_dim == 0) {
        throw ArgumentError("KrausChannel: dimensions must be positive");
    }
    if (ops_.empty()) {
        throw ArgumentError("KrausChannel: at least one Kraus operator is required");
    }
    for (const Matrix &k : ops_) {
        if (k.rows() != idx(out_dim) || k.cols() != idx(in_dim)) {
            throw ArgumentError("KrausChannel: operator is " + dims(k.rows(), k.cols()) +
                                ", expected " + dims(out_dim, in_dim));
        }
    }
    const Matrix defect = Matrix::Identity(idx(in_dim), idx(in_dim)) - completeness();
    if (kind_ == Kind::trace_preserving) {
        if (defect.cwiseAbs().maxCoeff() > kCompletenessTol) {
            throw ArgumentError("KrausChannel: sum K^dagger K deviates from the identity by " +
                                std::to_string(defect.cwiseAbs().maxCoeff()));
        }
    } else {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (defect + defect.adjoint()),
                                                     Eigen::EigenvaluesOnly);
        if (solver.eigenvalues().minCoeff() < -kCompletenessTol) {
            throw ArgumentError("KrausChannel: map increases trace");
        }
    }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
    return KrausChannel(dim, dim, {Matrix::Identity(idx(dim), idx(dim))});
}

KrausChannel KrausChannel::unitary(const Matrix &u) {
    if (u.rows() != u.cols()) {
        throw ArgumentError("unitary channel needs a square matrix");
    }
    return KrausChannel(static_cast<std::size_t>(u.cols()), static_cast<std::size_t>(u.rows()), {u});
}

KrausChannel KrausChannel::isometry(const Matrix &v) {
    return KrausChannel(static_cast<std::size_t>(v.cols()), static_cast<std::size_t>(v.rows()), {v});
}

Matrix KrausChannel::apply(const Matrix &rho) const {
    if (rho.rows() != idx(in_dim_) || rho.cols() != idx(in_dim_)) {
        throw ArgumentError("KrausChannel::apply: input is " + dims(rho.rows(), rho.cols()) +
                            ", channel expects " + dims(in_dim_, in_dim_));
    }
    Matrix out = Matrix::Zero(idx(out_dim_), idx(out_dim_));
    for (const Matrix &k : ops_) {
        out.noalias() += k * rho * k.adjoint();
    }
    return out;
}

Matrix KrausChannel::completeness() const {
    Matrix sum = Matrix::Zero(idx(in_dim_), idx(in_dim_));
    for (const Matrix &k : ops_) {
        sum.noalias() += k.adjoint() * k;
    }
    return sum;
}

KrausChannel compose(std::span<const KrausChannel> in_order) {
    if (in_order.empty()) {
        throw ArgumentError("compose: no channels");
    }
    std::size_t in_dim = in_order.front().in_dim();
    std::size_t out_dim = in_order.front().out_dim();
    std::vector<Matrix> ops = in_order.front().ops();
    KrausChannel::Kind kind = in_order.front().kind();

    for (std::size_t c = 1; c < in_order.size(); ++c) {
        const KrausChannel &next = in_order[c];
        if (next.in_dim() != out_dim) {
            throw ArgumentError("compose: channel " + std::to_string(c) + " expects dimension " +
                                std::to_string(next.in_dim()) + " but receives " +
                                std::to_string(out_dim));
        }
        std::vector<Matrix> product;
        product.reserve(ops.size() * next.ops().size());
        for (const Matrix &b : next.ops()) {
            for (const Matrix &a : ops) {
                Matrix ba = b * a;
                if (ba.norm() >= kNullKrausNorm) {
                    product.push_back(std::move(ba));
                }
            }
        }
        out_dim = next.out_dim();
        kind = combine(kind, next.kind());
        if (product.empty()) {
            product.push_back(Matrix::Zero(idx(out_dim), idx(in_dim)));
        }
        ops = std::move(product);
        if (ops.size() > in_dim * out_dim) {
            ops = compress(KrausChannel(in_dim, out_dim, std::move(ops),
                                        KrausChannel::Kind::trace_non_increasing));
        }
    }
    return KrausChannel(in_dim, out_dim, std::move(ops), kind);
}

KrausChannel compose(std::initializer_list<KrausChannel> in_order) {
    return compose(std::span<const KrausChannel>(in_order.begin(), in_order.size()));
}

KrausChannel tensor_channels(const KrausChannel &a, const KrausChannel &b) {
    std::vector<Matrix> ops;
    ops.reserve(a.ops().size() * b.ops().size());
    for (const Matrix &ka : a.ops()) {
        for (const Matrix &kb : b.ops()) {
            ops.push_back(kron(ka, kb));
        }
    }
    return KrausChannel(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim(), std::move(ops),
                        combine(a.kind(), b.kind()));
}

Matrix choi(const KrausChannel &ch) {
    const std::size_t n = ch.in_dim() * ch.out_dim();
    Matrix j = Matrix::Zero(idx(n), idx(n));
    for (const Matrix &k : ch.ops()) {
        const Eigen::Map<const Vector> v(k.data(), idx(n));
        j.noalias() += v * v.adjoint();
    }
    return j;
}

KrausChannel to_kraus(const PauliChannelN &ch) {
    const std::size_t dim = std::size_t{1} << ch.num_qubits();
    std::vector<Matrix> ops;
    for (std::uint64_t index = 0; index < ch.size(); ++index) {
        const double p = ch.prob(index);
        if (p > 0.0) {
            ops.push_back(std::sqrt(p) * to_dense(PauliString::from_index(ch.num_qubits(), index)));
        }
    }
    return KrausChannel(dim, dim, std::move(ops));
}

KrausChannel to_kraus(const PauliChannel1 &ch) {
    return to_kraus(PauliChannelN(1, {ch.probs().begin(), ch.probs().end()}));
}

std::array<double, 4> pauli_diagonal(const KrausChannel &ch) {
    if (ch.in_dim() != 2 || ch.out_dim() != 2) {
        throw ArgumentError("pauli_diagonal: channel must act on one qubit");
    }
    std::array<double, 4> p{0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 4; ++k) {
        const Matrix sigma = to_dense(PauliString::single(1, 0, static_cast<Pauli1>(k)));
        for (const Matrix &op : ch.ops()) {
            p[k] += std::norm((sigma * op).trace()) / 4.0;
        }
    }
    return p;
}

Matrix partial_trace_b(const Matrix &m, std::size_t dim_a, std::size_t dim_b) {
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != dim_a * dim_b) {
        throw ArgumentError("partial_trace_B: matrix is " + dims(m.rows(), m.cols()) +
                            ", expected dimension " + std::to_string(dim_a) + "*" +
                            std::to_string(dim_b));
    }
    Matrix out = Matrix::Zero(idx(dim_a), idx(dim_a));
    for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_a; ++j) {
            Complex sum = 0.0;
            for (std::size_t b = 0; b < dim_b; ++b) {
                sum += m(idx(i * dim_b + b), idx(j * dim_b + b));
            }
            out(idx(i), idx(j)) = sum;
        }
    }
    return out;
}

DensityMatrix partial_trace_B(const DensityMatrix &rho, std::size_t dim_a, std::size_t dim_b) {
    return DensityMatrix(partial_trace_b(rho.matrix(), dim_a, dim_b));
}

double trace_norm(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw ArgumentError("trace_norm: matrix must be square");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().sum();
}

LinkingMap::LinkingMap(Direction direction, Matrix isometry)
    : direction_(direction), v_(std::move(isometry)) {
    if (v_.rows() < v_.cols() || v_.cols() == 0) {
        throw ArgumentError("LinkingMap: isometry must be tall and non-empty");
    }
    const Matrix gram = v_.adjoint() * v_;
    if (max_abs_diff(gram, Matrix::Identity(v_.cols(), v_.cols())) > 1e-12) {
        throw ArgumentError("LinkingMap: V^dagger V is not the identity");
    }
}

Matrix LinkingMap::apply(const Matrix &m) const {
    if (direction_ == Direction::logical_to_computational) {
        return v_ * m * v_.adjoint();
    }
    return v_.adjoint() * m * v_;
}

KrausChannel LinkingMap::as_channel() const {
    if (direction_ == Direction::logical_to_computational) {
        return KrausChannel::isometry(v_);
    }
    return KrausChannel(computational_dim(), logical_dim(), {v_.adjoint()},
                        KrausChannel::Kind::trace_non_increasing);
}

KrausChannel logical_view(const LinkingMap &to_computational, const KrausChannel &p,
                          const LinkingMap &to_logical) {
    if (to_computational.direction() != LinkingMap::Direction::logical_to_computational ||
        to_logical.direction() != LinkingMap::Direction::computational_to_logical) {
        throw ArgumentError("logical_view: linking maps have the wrong directions");
    }
    return compose({to_computational.as_channel(), p, to_logical.as_channel()});
}

double qcc_inaccuracy(const KrausChannel &p_tilde, const Matrix &u, const DensityMatrix &rho) {
    const std::size_t d = rho.dim();
    if (p_tilde.in_dim() != d || p_tilde.out_dim() != d || static_cast<std::size_t>(u.rows()) != d ||
        static_cast<std::size_t>(u.cols()) != d) {
        throw ArgumentError("qcc_inaccuracy: channel " + dims(p_tilde.out_dim(), p_tilde.in_dim()) +
                            ", U " + dims(u.rows(), u.cols()) + " and rho of dimension " +
                            std::to_string(d) + " disagree");
    }
    return trace_norm(p_tilde.apply(rho.matrix()) - u * rho.matrix() * u.adjoint());
}

double qcc_inaccuracy(const LinkingMap &to_computational, const KrausChannel &p,
                      const LinkingMap &to_logical, const Matrix &u, const DensityMatrix &rho) {
    if (to_computational.logical_dim() != rho.dim() ||
        to_computational.computational_dim() != p.in_dim() ||
        to_logical.computational_dim() != p.out_dim() || to_logical.logical_dim() != rho.dim()) {
        throw ArgumentError("qcc_inaccuracy: linking maps do not match the channel");
    }
    const Matrix computed = to_logical.apply(p.apply(to_computational.apply(rho.matrix())));
    return trace_norm(computed - u * rho.matrix() * u.adjoint());
}

QccResult qcc_check(const KrausChannel &p_tilde, const Matrix &u, double alpha,
                    const QccOptions &options, std::mt19937_64 &rng) {
    const std::size_t d = p_tilde.in_dim();
    if (p_tilde.out_dim() != d || static_cast<std::size_t>(u.rows()) != d ||
        static_cast<std::size_t>(u.cols()) != d) {
        throw ArgumentError("qcc_check: channel and U must act on the same logical space");
    }
    if (!(alpha >= 0.0)) {
        throw ArgumentError("qcc_check: alpha must be non-negative");
    }

    QccResult result;
    result.witness_sup = -1.0;
    const auto consider = [&](const Vector &psi) {
        const double value = evaluate_pure(p_tilde, u, psi);
        if (value > result.witness_sup) {
            result.witness_sup = value;
            result.witness_state = psi;
        }
        return value;
    };

    if (options.strategy == SupStrategy::grid) {
        if (d > kMaxGridDim) {
            throw CapacityError("qcc_check: grid strategy supports logical dimension <= " +
                                std::to_string(kMaxGridDim) + ", got " + std::to_string(d));
        }
        const std::size_t res = d == 2 ? options.grid_resolution : options.subspace_resolution;
        if (res < 2) {
            throw ArgumentError("qcc_check: grid resolution must be at least 2");
        }
        for (std::size_t a = 0; a < d; ++a) {
            Vector e = Vector::Zero(idx(d));
            e(idx(a)) = 1.0;
            consider(e);
        }
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = a + 1; b < d; ++b) {
                for (std::size_t t = 0; t < res; ++t) {
                    const double theta =
                        std::numbers::pi * static_cast<double>(t) / static_cast<double>(res - 1);
                    for (std::size_t f = 0; f < res; ++f) {
                        const double phi = 2.0 * std::numbers::pi * static_cast<double>(f) /
                                           static_cast<double>(res);
                        Vector psi = Vector::Zero(idx(d));
                        psi(idx(a)) = std::cos(theta / 2);
                        psi(idx(b)) = std::polar(std::sin(theta / 2), phi);
                        consider(psi);
                    }
                }
            }
        }
    } else {
        if (d > kMaxRestartDim) {
            throw CapacityError("qcc_check: random restarts support logical dimension <= " +
                                std::to_string(kMaxRestartDim) + ", got " + std::to_string(d));
        }
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::size_t r = 0; r < std::max<std::size_t>(1, options.restarts); ++r) {
            Vector psi = random_pure_state(d, rng);
            double value = consider(psi);
            double step = 0.3;
            for (std::size_t s = 0; s < options.refine_steps; ++s) {
                Vector trial = psi;
                for (Eigen::Index i = 0; i < trial.size(); ++i) {
                    const double re = normal(rng);
                    const double im = normal(rng);
                    trial(i) += step * Complex(re, im);
                }
                trial /= trial.norm();
                const double trial_value = consider(trial);
                if (trial_value > value) {
                    psi = std::move(trial);
                    value = trial_value;
                    step = std::min(1.0, step * 1.2);
                } else {
                    step *= 0.9;
                }
            }
        }
    }
    result.holds = result.witness_sup <= alpha + 1e-9;
    return result;
}

QccResult qcc_check(const KrausChannel &p_tilde, const Matrix &u, double alpha,
                    const QccOptions &options) {
    std::mt19937_64 rng(0);
    return qcc_check(p_tilde, u, alpha, options, rng);
}

KrausChannel compose(const Stages &stages) {
    std::vector<KrausChannel> channels;
    channels.reserve(stages.size());
    for (const Stage &stage : stages) {
        channels.push_back(stage.channel);
    }
    return compose(std::span<const KrausChannel>(channels));
}

std::vector<Matrix> run_stages(const Stages &stages, const Matrix &rho) {
    std::vector<Matrix> outputs;
    outputs.reserve(stages.size());
    Matrix current = rho;
    for (const Stage &stage : stages) {
        current = stage.channel.apply(current);
        outputs.push_back(current);
    }
    return outputs;
}

KrausChannel embed_channel(const Matrix &rho_b, std::size_t dim_a, std::size_t dim_k) {
    const DensityMatrix checked(rho_b);
    const std::size_t dim_b = checked.dim();
    const std::size_t out = dim_a * dim_b + dim_k;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(checked.matrix());
    std::vector<Matrix> ops;
    for (Eigen::Index e = 0; e < idx(dim_b); ++e) {
        const double weight = solver.eigenvalues()(e);
        if (weight <= 1e-15) {
            continue;
        }
        const Matrix column = solver.eigenvectors().col(e);
        Matrix k = Matrix::Zero(idx(out), idx(dim_a));
        k.topRows(idx(dim_a * dim_b)) =
            std::sqrt(weight) * kron(Matrix::Identity(idx(dim_a), idx(dim_a)), column);
        ops.push_back(std::move(k));
    }
    return KrausChannel(dim_a, out, std::move(ops));
}

KrausChannel project_ab_channel(std::size_t dim_ab, std::size_t dim_k) {
    Matrix k = Matrix::Zero(idx(dim_ab), idx(dim_ab + dim_k));
    k.leftCols(idx(dim_ab)).setIdentity();
    return KrausChannel(dim_ab + dim_k, dim_ab, {std::move(k)},
                        dim_k == 0 ? KrausChannel::Kind::trace_preserving
                                   : KrausChannel::Kind::trace_non_increasing);
}

KrausChannel trace_b_channel(std::size_t dim_a, std::size_t dim_b) {
    std::vector<Matrix> ops;
    for (std::size_t b = 0; b < dim_b; ++b) {
        Matrix bra = Matrix::Zero(1, idx(dim_b));
        bra(0, idx(b)) = 1.0;
        ops.push_back(kron(Matrix::Identity(idx(dim_a), idx(dim_a)), bra));
    }
    return KrausChannel(dim_a * dim_b, dim_a, std::move(ops));
}

KrausChannel lift_channel(const KrausChannel &on_a, std::size_t dim_b, std::size_t dim_k) {
    if (on_a.in_dim() != on_a.out_dim()) {
        throw ArgumentError("lift_channel: channel must map A to itself");
    }
    const std::size_t dim_a = on_a.in_dim();
    const std::size_t dim_ab = dim_a * dim_b;
    std::vector<Matrix> ops;
    for (std::size_t j = 0; j < on_a.ops().size(); ++j) {
        Matrix k = Matrix::Zero(idx(dim_ab + dim_k), idx(dim_ab + dim_k));
        k.topLeftCorner(idx(dim_ab), idx(dim_ab)) =
            kron(on_a.ops()[j], Matrix::Identity(idx(dim_b), idx(dim_b)));
        if (j == 0 && dim_k > 0) {
            k.bottomRightCorner(idx(dim_k), idx(dim_k)).setIdentity();
        }
        ops.push_back(std::move(k));
    }
    return KrausChannel(dim_ab + dim_k, dim_ab + dim_k, std::move(ops), on_a.kind());
}

KrausChannel decoding_channel(const Matrix &v) {
    const Eigen::Index big = v.rows();
    const Eigen::Index small = v.cols();
    if (big < small || small == 0) {
        throw ArgumentError("decoding_channel: encoder must be a tall isometry");
    }
    if (max_abs_diff(v.adjoint() * v, Matrix::Identity(small, small)) > 1e-10) {
        throw ArgumentError("decoding_channel: encoder is not an isometry");
    }
    Eigen::HouseholderQR<Matrix> qr(v);
    const Matrix q = qr.householderQ() * Matrix::Identity(big, big);
    std::vector<Matrix> ops{v.adjoint()};
    for (Eigen::Index c = small; c < big; ++c) {
        Matrix k = Matrix::Zero(small, big);
        k.row(0) = q.col(c).adjoint();
        ops.push_back(std::move(k));
    }
    return KrausChannel(static_cast<std::size_t>(big), static_cast<std::size_t>(small),
                        std::move(ops));
}

namespace {

void expect_dims(const std::string &stage, const KrausChannel &ch, std::size_t in,
                 std::size_t out) {
    if (ch.in_dim() != in || ch.out_dim() != out) {
        throw ConstructionError(stage, "channel maps " + std::to_string(ch.in_dim()) + " -> " +
                                           std::to_string(ch.out_dim()) + ", expected " +
                                           std::to_string(in) + " -> " + std::to_string(out));
    }
}

Matrix resolve_rho_b(const std::optional<Matrix> &rho_b, std::size_t dim_b) {
    if (!rho_b) {
        return DensityMatrix::maximally_mixed(dim_b).matrix();
    }
    if (static_cast<std::size_t>(rho_b->rows()) != dim_b ||
        static_cast<std::size_t>(rho_b->cols()) != dim_b) {
        throw ConstructionError("embed", "rho_B is " + dims(rho_b->rows(), rho_b->cols()) +
                                             ", expected dimension " + std::to_string(dim_b));
    }
    return *rho_b;
}

KrausChannel checked_dec_unitary(const EaoqecSpec &spec) {
    if (!spec.dec_unitary) {
        return KrausChannel::identity(spec.dim_a());
    }
    expect_dims("dec_unitary", *spec.dec_unitary, spec.dim_a(), spec.dim_a());
    if (spec.dec_unitary->ops().size() != 1 ||
        spec.dec_unitary->kind() != KrausChannel::Kind::trace_preserving) {
        throw ConstructionError("dec_unitary", "decoding factor must be a single unitary");
    }
    return *spec.dec_unitary;
}

}  // namespace

Stages eaoqec_stages(const EaoqecSpec &spec) {
    if (spec.k == 0 || spec.dim_b == 0) {
        throw ConstructionError("spec", "k and dim_b must be positive");
    }
    if (spec.k + spec.s + 2 * spec.c > 20) {
        throw CapacityError("eaoqec: too many qubits for dense simulation");
    }
    const std::size_t dim_a = spec.dim_a();
    const std::size_t dim_h = spec.dim_h();
    expect_dims("enc", spec.enc, spec.logical_dim(), dim_a);
    KrausChannel embed;
    try {
        embed = embed_channel(resolve_rho_b(spec.rho_b, spec.dim_b), dim_a, spec.dim_k);
    } catch (const ArgumentError &e) {
        throw ConstructionError("embed", e.what());
    }
    expect_dims("noise", spec.noise, dim_h, dim_h);
    expect_dims("recovery", spec.recovery, dim_h, dim_h);
    const KrausChannel dec_unitary = checked_dec_unitary(spec);
    expect_dims("dec", spec.dec, dim_a, spec.logical_dim());

    const KrausChannel project = project_ab_channel(dim_a * spec.dim_b, spec.dim_k);
    const KrausChannel trace_b = trace_b_channel(dim_a, spec.dim_b);
    if (spec.ordering == Ordering::recovery_then_decode) {
        return {{"enc", spec.enc},         {"embed", embed},
                {"noise", spec.noise},     {"recovery", spec.recovery},
                {"project_ab", project},   {"trace_b", trace_b},
                {"dec_unitary", dec_unitary}, {"dec", spec.dec}};
    }
    return {{"enc", spec.enc},
            {"embed", embed},
            {"noise", spec.noise},
            {"dec_unitary", lift_channel(dec_unitary, spec.dim_b, spec.dim_k)},
            {"recovery", spec.recovery},
            {"project_ab", project},
            {"trace_b", trace_b},
            {"dec", spec.dec}};
}

KrausChannel eaoqec_pipeline(const EaoqecSpec &spec) { return compose(eaoqec_stages(spec)); }

Stages qec_stages(const QecSpec &spec) {
    const std::size_t logical = spec.enc.in_dim();
    const std::size_t code = spec.enc.out_dim();
    expect_dims("noise", spec.noise, code, code);
    expect_dims("recovery", spec.recovery, code, code);
    expect_dims("dec", spec.dec, code, logical);
    return {{"enc", spec.enc}, {"noise", spec.noise}, {"recovery", spec.recovery}, {"dec", spec.dec}};
}

Stages oqec_stages(const OqecSpec &spec) {
    if (spec.dim_b == 0) {
        throw ConstructionError("spec", "dim_b must be positive");
    }
    const std::size_t logical = spec.enc.in_dim();
    const std::size_t dim_a = spec.enc.out_dim();
    const std::size_t dim_h = dim_a * spec.dim_b + spec.dim_k;
    KrausChannel embed;
    try {
        embed = embed_channel(resolve_rho_b(spec.rho_b, spec.dim_b), dim_a, spec.dim_k);
    } catch (const ArgumentError &e) {
        throw ConstructionError("embed", e.what());
    }
    expect_dims("noise", spec.noise, dim_h, dim_h);
    expect_dims("recovery", spec.recovery, dim_h, dim_h);
    expect_dims("dec", spec.dec, dim_a, logical);
    return {{"enc", spec.enc},
            {"embed", embed},
            {"noise", spec.noise},
            {"recovery", spec.recovery},
            {"project_ab", project_ab_channel(dim_a * spec.dim_b, spec.dim_k)},
            {"trace_b", trace_b_channel(dim_a, spec.dim_b)},
            {"dec", spec.dec}};
}

namespace {

// Folds the unitary decoding factor into the neighbouring stage it is adjacent to.
std::pair<KrausChannel, KrausChannel> folded_recovery_and_dec(const EaoqecSpec &spec) {
    const KrausChannel dec_unitary = checked_dec_unitary(spec);
    if (spec.ordering == Ordering::recovery_then_decode) {
        return {spec.recovery, compose({dec_unitary, spec.dec})};
    }
    return {compose({lift_channel(dec_unitary, spec.dim_b, spec.dim_k), spec.recovery}), spec.dec};
}

}  // namespace

QecSpec reduce_to_eaqec(const EaoqecSpec &spec) {
    if (spec.dim_b != 1 || spec.dim_k != 0) {
        throw ArgumentError("reduce_to_eaqec: needs dim B = 1 and an empty K");
    }
    eaoqec_stages(spec);
    auto [recovery, dec] = folded_recovery_and_dec(spec);
    return QecSpec{spec.enc, spec.noise, std::move(recovery), std::move(dec)};
}

OqecSpec reduce_to_oqec(const EaoqecSpec &spec) {
    if (spec.c != 0) {
        throw ArgumentError("reduce_to_oqec: needs c = 0");
    }
    eaoqec_stages(spec);
    auto [recovery, dec] = folded_recovery_and_dec(spec);
    return OqecSpec{spec.dim_b, spec.dim_k, spec.enc, spec.rho_b, spec.noise, std::move(recovery),
                    std::move(dec)};
}

QecSpec reduce_to_qec(const EaoqecSpec &spec) {
    if (spec.c != 0) {
        throw ArgumentError("reduce_to_qec: needs c = 0");
    }
    return reduce_to_eaqec(spec);
}

}  // namespace ftlab
