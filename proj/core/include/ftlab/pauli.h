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

#ifndef FTLAB_PAULI_H
#define FTLAB_PAULI_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ftlab/linalg.h"

namespace ftlab {

/// Single-qubit Pauli letter. Values double as indices into probability vectors.
enum class Pauli1 : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_letter(Pauli1 p);

/// Maximum qubit count held by a PauliString (one machine word per bit plane).
inline constexpr std::size_t kMaxPauliQubits = 64;

/// Largest qubit count for which all 4^n Paulis are enumerated.
inline constexpr std::size_t kMaxEnumerableQubits = 12;

/// An n-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}, where each P_q is
/// I, X, Y or Z as selected by (x_q, z_q) = (0,0), (1,0), (1,1), (0,1).
///
/// Qubit 0 is the leftmost letter of a label and the most significant tensor factor.
class PauliString {
   public:
    /// The n-qubit identity.
    explicit PauliString(std::size_t n);
    PauliString(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits, unsigned phase = 0);

    /// Parses labels like "XZZXI", optionally prefixed by "+", "-", "i", "+i" or "-i".
    static PauliString from_label(std::string_view label);

    /// The `index`-th Pauli in lexicographic label order (I < X < Y < Z, qubit 0 first).
    static PauliString from_index(std::size_t n, std::uint64_t index);

    /// Single-qubit Pauli `p` acting on qubit `q` of an n-qubit register.
    static PauliString single(std::size_t n, std::size_t q, Pauli1 p);

    std::size_t num_qubits() const noexcept { return n_; }
    std::uint64_t x_bits() const noexcept { return x_; }
    std::uint64_t z_bits() const noexcept { return z_; }
    /// Power of i, in {0, 1, 2, 3}.
    unsigned phase() const noexcept { return phase_; }

    Pauli1 at(std::size_t q) const;
    std::size_t weight() const noexcept;
    /// Position of this Pauli in lexicographic label order; inverse of from_index.
    std::uint64_t index() const noexcept;

    /// Letters only, e.g. "XZZXI".
    std::string label() const;
    /// Label with a phase prefix: "+XZ", "-iY", ...
    std::string str() const;

    PauliString without_phase() const { return PauliString(n_, x_, z_, 0); }

    friend bool operator==(const PauliString &a, const PauliString &b) noexcept {
        return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_ && a.phase_ == b.phase_;
    }

   private:
    std::size_t n_;
    std::uint64_t x_;
    std::uint64_t z_;
    unsigned phase_;
};

/// Group product a*b, tracking the phase exactly.
PauliString pauli_mul(const PauliString &a, const PauliString &b);
inline PauliString operator*(const PauliString &a, const PauliString &b) { return pauli_mul(a, b); }

/// True iff the symplectic inner product of a and b is even.
bool commutes(const PauliString &a, const PauliString &b);

/// Dense 2^n x 2^n matrix, including the phase.
Matrix to_dense(const PauliString &p);

/// Probability vector (p_I, p_X, p_Y, p_Z) of a single-qubit Pauli channel.
class PauliChannel1 {
   public:
    /// Throws ArgumentError unless every entry is in [0, 1] and they sum to 1 within 1e-12.
    explicit PauliChannel1(std::array<double, 4> probs);

    static PauliChannel1 identity() { return PauliChannel1({1.0, 0.0, 0.0, 0.0}); }

    double operator[](Pauli1 p) const noexcept { return p_[static_cast<std::size_t>(p)]; }
    double p_i() const noexcept { return p_[0]; }
    double p_x() const noexcept { return p_[1]; }
    double p_y() const noexcept { return p_[2]; }
    double p_z() const noexcept { return p_[3]; }
    const std::array<double, 4> &probs() const noexcept { return p_; }

    friend bool operator==(const PauliChannel1 &, const PauliChannel1 &) = default;

   private:
    std::array<double, 4> p_;
};

inline constexpr double kProbabilityTol = 1e-12;

/// Two independent generators, bit flip with probability p_x and phase flip with p_z.
/// Both firing together yields Y (phase is irrelevant for a channel), so
///   (p_I, p_X, p_Y, p_Z) = ((1-p_x)(1-p_z), p_x(1-p_z), p_x p_z, (1-p_x)p_z).
PauliChannel1 biased_channel(double p_x, double p_z);

/// Mutually exclusive bit and phase flips: (1-p_x-p_z, p_x, 0, p_z). Requires p_x + p_z <= 1.
PauliChannel1 exclusive_channel(double p_x, double p_z);

/// Probability distribution over n-qubit Paulis (phases ignored), stored densely in
/// lexicographic label order.
class PauliChannelN {
   public:
    /// `probs` must have 4^n entries; validated like PauliChannel1 with tolerance 1e-12 * 4^n.
    PauliChannelN(std::size_t n, std::vector<double> probs);

    std::size_t num_qubits() const noexcept { return n_; }
    std::size_t size() const noexcept { return probs_.size(); }
    double prob(const PauliString &e) const;
    double prob(std::uint64_t index) const { return probs_.at(index); }
    const std::vector<double> &probs() const noexcept { return probs_; }

   private:
    std::size_t n_;
    std::vector<double> probs_;
};

/// Independent, identically distributed noise on n qubits. Requires 1 <= n <= 12.
PauliChannelN tensor_iid(const PauliChannel1 &ch, std::size_t n);

/// Sum over E of prob(E) * E rho E^dagger.
DensityMatrix apply_pauli_channel(const PauliChannelN &ch, const DensityMatrix &rho);

}  // namespace ftlab

#endif
