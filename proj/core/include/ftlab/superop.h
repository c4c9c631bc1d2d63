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

#ifndef FTLAB_SUPEROP_H
#define FTLAB_SUPEROP_H

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ftlab/linalg.h"
#include "ftlab/pauli.h"

namespace ftlab {

inline constexpr double kCompletenessTol = 1e-10;
/// Kraus operators with Frobenius norm below this are dropped by compose().
inline constexpr double kNullKrausNorm = 1e-14;

/// A completely positive map given by Kraus operators K_j (out_dim x in_dim):
/// rho -> sum_j K_j rho K_j^dagger.
class KrausChannel {
   public:
    enum class Kind {
        /// sum_j K_j^dagger K_j = I within 1e-10.
        trace_preserving,
        /// sum_j K_j^dagger K_j <= I, e.g. a projection.
        trace_non_increasing,
    };

    /// Identity on a one-dimensional space.
    KrausChannel();
    /// Throws ArgumentError on shape mismatches or a failed completeness check.
    KrausChannel(std::size_t in_dim, std::size_t out_dim, std::vector<Matrix> ops,
                 Kind kind = Kind::trace_preserving);

    static KrausChannel identity(std::size_t dim);
    static KrausChannel unitary(const Matrix &u);
    /// rho -> V rho V^dagger for an isometry V (V^dagger V = I).
    static KrausChannel isometry(const Matrix &v);

    std::size_t in_dim() const noexcept { return in_dim_; }
    std::size_t out_dim() const noexcept { return out_dim_; }
    const std::vector<Matrix> &ops() const noexcept { return ops_; }
    Kind kind() const noexcept { return kind_; }

    Matrix apply(const Matrix &rho) const;
    /// sum_j K_j^dagger K_j
    Matrix completeness() const;

   private:
    std::size_t in_dim_;
    std::size_t out_dim_;
    std::vector<Matrix> ops_;
    Kind kind_;
};

/// Composition of channels listed in the order they act (the first acts first).
/// The result is trace preserving only if every factor is. Null Kraus operators are
/// dropped, and sets larger than in_dim * out_dim are compressed through the Choi matrix.
KrausChannel compose(std::span<const KrausChannel> in_order);
KrausChannel compose(std::initializer_list<KrausChannel> in_order);

/// a (x) b acting on the tensor product of their spaces.
KrausChannel tensor_channels(const KrausChannel &a, const KrausChannel &b);

/// Choi matrix sum_{ij} |i><j| (x) E(|i><j|), of size (in*out) x (in*out).
Matrix choi(const KrausChannel &ch);

/// Kraus form of a Pauli channel: sqrt(prob(E)) E for every E with prob(E) > 0.
KrausChannel to_kraus(const PauliChannelN &ch);
KrausChannel to_kraus(const PauliChannel1 &ch);

/// Pauli-basis diagonal of the process matrix of a single-qubit channel, (p_I, p_X, p_Y, p_Z):
/// p_k = sum_j |tr(sigma_k K_j)|^2 / 4. For a Pauli channel this recovers its probabilities.
std::array<double, 4> pauli_diagonal(const KrausChannel &ch);

/// Tr_B of an operator on A (x) B, with B the second tensor factor.
Matrix partial_trace_b(const Matrix &m, std::size_t dim_a, std::size_t dim_b);
DensityMatrix partial_trace_B(const DensityMatrix &rho, std::size_t dim_a, std::size_t dim_b);

/// Schatten-1 norm: sum of singular values.
double trace_norm(const Matrix &m);

/// Noiseless identification of a logical space with a subspace of the computational one.
class LinkingMap {
   public:
    enum class Direction { logical_to_computational, computational_to_logical };

    /// `isometry` is computational_dim x logical_dim with V^dagger V = I within 1e-12.
    LinkingMap(Direction direction, Matrix isometry);

    Direction direction() const noexcept { return direction_; }
    const Matrix &isometry() const noexcept { return v_; }
    std::size_t logical_dim() const noexcept { return static_cast<std::size_t>(v_.cols()); }
    std::size_t computational_dim() const noexcept { return static_cast<std::size_t>(v_.rows()); }

    Matrix apply(const Matrix &m) const;
    KrausChannel as_channel() const;

   private:
    Direction direction_;
    Matrix v_;
};

/// P~ = M_{c->l} . P . M_{l->c}, a channel on the logical space.
KrausChannel logical_view(const LinkingMap &to_computational, const KrausChannel &p,
                          const LinkingMap &to_logical);

/// || P~(rho) - U rho U^dagger ||_1
double qcc_inaccuracy(const KrausChannel &p_tilde, const Matrix &u, const DensityMatrix &rho);

/// Same quantity with the linking maps spelled out around a computational-space P.
double qcc_inaccuracy(const LinkingMap &to_computational, const KrausChannel &p,
                      const LinkingMap &to_logical, const Matrix &u, const DensityMatrix &rho);

enum class SupStrategy { grid, random_restarts };

struct QccOptions {
    SupStrategy strategy = SupStrategy::grid;
    /// Bloch grid resolution per angle when the logical space is a qubit.
    std::size_t grid_resolution = 200;
    /// Per-angle resolution of the grid on each two-dimensional coordinate subspace
    /// when the logical dimension is 3..8.
    std::size_t subspace_resolution = 24;
    std::size_t restarts = 32;
    std::size_t refine_steps = 200;
};

inline constexpr std::size_t kMaxGridDim = 8;
inline constexpr std::size_t kMaxRestartDim = 64;

/// Outcome of a supremum search. `witness_sup` comes from explicit states, so it is a
/// lower bound on the true supremum and `holds` can only be refuted, never certified,
/// beyond the density of the search.
struct QccResult {
    bool holds = false;
    double witness_sup = 0.0;
    Vector witness_state;
    bool is_lower_bound = true;
};

/// Estimates sup over pure states of qcc_inaccuracy and compares it with alpha (+1e-9).
/// Pure states suffice: the inaccuracy is convex in rho. `rng` feeds random restarts.
/// Throws CapacityError above 8 (grid) or 64 (random restarts) logical dimensions.
QccResult qcc_check(const KrausChannel &p_tilde, const Matrix &u, double alpha,
                    const QccOptions &options, std::mt19937_64 &rng);
QccResult qcc_check(const KrausChannel &p_tilde, const Matrix &u, double alpha,
                    const QccOptions &options = {});

// Error-correction pipelines -------------------------------------------------------------

enum class Ordering {
    /// Recovery, then the unitary part of decoding (this framework's ordering).
    recovery_then_decode,
    /// Unitary part of decoding first, then measurement and recovery.
    decode_then_recovery,
};

struct Stage {
    std::string name;
    KrausChannel channel;
};
using Stages = std::vector<Stage>;

/// Composes the stage channels in order.
KrausChannel compose(const Stages &stages);

/// Output of every stage applied in turn to rho.
std::vector<Matrix> run_stages(const Stages &stages, const Matrix &rho);

/// W_{rho_B}: rho_A -> rho_A (x) rho_B (+) 0_K, into dimension dim_a * dim_b + dim_k.
KrausChannel embed_channel(const Matrix &rho_b, std::size_t dim_a, std::size_t dim_k);

/// F_AB: projection of A(x)B (+) K onto A(x)B. Trace non-increasing; weight in K is lost.
KrausChannel project_ab_channel(std::size_t dim_ab, std::size_t dim_k);

/// Tr_B as a channel from A(x)B to A.
KrausChannel trace_b_channel(std::size_t dim_a, std::size_t dim_b);

/// ch (x) id_B (+) id_K: lifts a channel on A to the full space A(x)B (+) K.
KrausChannel lift_channel(const KrausChannel &on_a, std::size_t dim_b, std::size_t dim_k);

/// Trace-preserving decoder for an isometric encoder V: V^dagger on the code space and a
/// fixed reset to |0> on its orthogonal complement.
KrausChannel decoding_channel(const Matrix &v);

/// Entanglement-assisted operator error correction: k logical qubits, s ancillas, c ebits.
/// Alice's encoder maps 2^k into dim_a = 2^(k+s+c) * 2^c, the last factor being Bob's
/// ebit halves. The full space is H = A (x) B (+) K.
struct EaoqecSpec {
    std::size_t k = 1;
    std::size_t s = 0;
    std::size_t c = 0;
    std::size_t dim_b = 1;
    std::size_t dim_k = 0;
    KrausChannel enc;
    /// Defaults to the maximally mixed state on B.
    std::optional<Matrix> rho_b;
    /// On H.
    KrausChannel noise;
    /// On H.
    KrausChannel recovery;
    /// Unitary dynamic part of decoding, on A. Defaults to the identity.
    std::optional<KrausChannel> dec_unitary;
    /// Kinematic part of decoding, A -> 2^k.
    KrausChannel dec;
    Ordering ordering = Ordering::recovery_then_decode;

    std::size_t logical_dim() const { return std::size_t{1} << k; }
    std::size_t dim_a() const { return std::size_t{1} << (k + s + 2 * c); }
    std::size_t dim_h() const { return dim_a() * dim_b + dim_k; }
};

/// Named stages of the EAOQEC pipeline. recovery_then_decode gives
/// enc, embed, noise, recovery, project_ab, trace_b, dec_unitary, dec; decode_then_recovery
/// moves the lifted dec_unitary between noise and recovery. Throws ConstructionError naming
/// the first stage whose dimensions do not chain.
Stages eaoqec_stages(const EaoqecSpec &spec);
KrausChannel eaoqec_pipeline(const EaoqecSpec &spec);

/// V_dec R eps V_enc. Used for both standard and entanglement-assisted codes, which share
/// this shape (the latter with ebits carried inside enc/recovery/dec).
struct QecSpec {
    KrausChannel enc;
    KrausChannel noise;
    KrausChannel recovery;
    KrausChannel dec;
};
Stages qec_stages(const QecSpec &spec);

/// V_dec Tr_B F_AB R eps W_{rho_B} V_enc without ebits.
struct OqecSpec {
    std::size_t dim_b = 1;
    std::size_t dim_k = 0;
    KrausChannel enc;
    std::optional<Matrix> rho_b;
    KrausChannel noise;
    KrausChannel recovery;
    KrausChannel dec;
};
Stages oqec_stages(const OqecSpec &spec);

/// dim B = 1 (and K empty): drops embed/project/trace. Throws ArgumentError otherwise.
QecSpec reduce_to_eaqec(const EaoqecSpec &spec);
/// c = 0. Throws ArgumentError otherwise.
OqecSpec reduce_to_oqec(const EaoqecSpec &spec);
/// dim B = 1, K empty and c = 0.
QecSpec reduce_to_qec(const EaoqecSpec &spec);

}  // namespace ftlab

#endif
