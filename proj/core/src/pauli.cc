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

#include "ftlab/pauli.h"

#include <bit>
#include <cmath>
#include <string>

#include "ftlab/errors.h"

namespace ftlab {

namespace {

std::uint64_t low_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_same_size(const PauliString &a, const PauliString &b, const char *op) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ArgumentError(std::string(op) + ": qubit counts differ (" +
                            std::to_string(a.num_qubits()) + " vs " +
                            std::to_string(b.num_qubits()) + ")");
    }
}

// Qubit q lives at bit q of a PauliString mask but at bit n-1-q of a basis-state index.
std::uint64_t to_basis_order(std::uint64_t mask, std::size_t n) {
    std::uint64_t out = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if ((mask >> q) & 1) {
            out |= std::uint64_t{1} << (n - 1 - q);
        }
    }
    return out;
}

void check_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ArgumentError(std::string(name) + " must be a probability in [0, 1], got " +
                            std::to_string(p));
    }
}

}  // namespace

char pauli_letter(Pauli1 p) { return "IXYZ"[static_cast<std::size_t>(p)]; }

PauliString::PauliString(std::size_t n) : PauliString(n, 0, 0, 0) {}

PauliString::PauliString(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits, unsigned phase)
    : n_(n), x_(x_bits), z_(z_bits), phase_(phase & 3u) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw ArgumentError("PauliString needs 1.." + std::to_string(kMaxPauliQubits) +
                            " qubits, got " + std::to_string(n));
    }
    if ((x_bits | z_bits) & ~low_mask(n)) {
        throw ArgumentError("PauliString bits set beyond qubit count");
    }
}

PauliString PauliString::from_label(std::string_view label) {
    unsigned phase = 0;
    if (label.starts_with("+")) {
        label.remove_prefix(1);
    } else if (label.starts_with("-")) {
        phase = 2;
        label.remove_prefix(1);
    }
    if (label.starts_with("i")) {
        phase += 1;
        label.remove_prefix(1);
    }
    if (label.empty() || label.size() > kMaxPauliQubits) {
        throw ArgumentError("Pauli label must have 1.." + std::to_string(kMaxPauliQubits) +
                            " letters");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < label.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw ArgumentError("invalid Pauli letter '" + std::string(1, label[q]) +
                                    "' in label");
        }
    }
    return PauliString(label.size(), x, z, phase);
}

PauliString PauliString::from_index(std::size_t n, std::uint64_t index) {
    if (n == 0 || n > 31) {
        throw ArgumentError("from_index supports 1..31 qubits");
    }
    if (index >> (2 * n)) {
        throw ArgumentError("Pauli index out of range");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const auto digit = (index >> (2 * (n - 1 - q))) & 3u;
        const std::uint64_t bit = std::uint64_t{1} << q;
        // digit: 0=I, 1=X, 2=Y, 3=Z
        if (digit == 1 || digit == 2) x |= bit;
        if (digit == 2 || digit == 3) z |= bit;
    }
    return PauliString(n, x, z, 0);
}

PauliString PauliString::single(std::size_t n, std::size_t q, Pauli1 p) {
    if (q >= n) {
        throw ArgumentError("qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    const bool has_x = p == Pauli1::X || p == Pauli1::Y;
    const bool has_z = p == Pauli1::Z || p == Pauli1::Y;
    return PauliString(n, has_x ? bit : 0, has_z ? bit : 0, 0);
}

Pauli1 PauliString::at(std::size_t q) const {
    if (q >= n_) {
        throw ArgumentError("qubit index out of range");
    }
    const bool x = (x_ >> q) & 1;
    const bool z = (z_ >> q) & 1;
    if (x && z) return Pauli1::Y;
    if (x) return Pauli1::X;
    if (z) return Pauli1::Z;
    return Pauli1::I;
}

std::size_t PauliString::weight() const noexcept { return std::popcount(x_ | z_); }

std::uint64_t PauliString::index() const noexcept {
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        index = (index << 2) | static_cast<std::uint64_t>(at(q));
    }
    return index;
}

std::string PauliString::label() const {
    std::string out(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        out[q] = pauli_letter(at(q));
    }
    return out;
}

std::string PauliString::str() const {
    static constexpr const char *kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + label();
}

PauliString pauli_mul(const PauliString &a, const PauliString &b) {
    check_same_size(a, b, "pauli_mul");
    const std::uint64_t ax = a.x_bits() & ~a.z_bits();
    const std::uint64_t ay = a.x_bits() & a.z_bits();
    const std::uint64_t az = ~a.x_bits() & a.z_bits();
    const std::uint64_t bx = b.x_bits() & ~b.z_bits();
    const std::uint64_t by = b.x_bits() & b.z_bits();
    const std::uint64_t bz = ~b.x_bits() & b.z_bits();
    // XY = iZ, YZ = iX, ZX = iY; the reversed products pick up -i.
    const std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
    const std::uint64_t minus = (ay & bx) | (az & by) | (ax & bz);
    const int phase = static_cast<int>(a.phase() + b.phase()) + std::popcount(plus) -
                      std::popcount(minus);
    return PauliString(a.num_qubits(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(),
                       static_cast<unsigned>(((phase % 4) + 4) % 4));
}

bool commutes(const PauliString &a, const PauliString &b) {
    check_same_size(a, b, "commutes");
    const std::uint64_t overlap = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
    return std::popcount(overlap) % 2 == 0;
}

Matrix to_dense(const PauliString &p) {
    static const Complex kI(0.0, 1.0);
    Matrix single[4] = {Matrix::Identity(2, 2), Matrix::Zero(2, 2), Matrix::Zero(2, 2),
                        Matrix::Zero(2, 2)};
    single[1] << 0.0, 1.0, 1.0, 0.0;
    single[2] << 0.0, -kI, kI, 0.0;
    single[3] << 1.0, 0.0, 0.0, -1.0;

    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        out = kron(out, single[static_cast<std::size_t>(p.at(q))]);
    }
    return out * std::pow(kI, static_cast<int>(p.phase()));
}

PauliChannel1::PauliChannel1(std::array<double, 4> probs) : p_(probs) {
    double total = 0.0;
    for (double p : p_) {
        check_probability(p, "Pauli channel entry");
        total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTol) {
        throw ArgumentError("Pauli channel probabilities sum to " + std::to_string(total));
    }
}

PauliChannel1 biased_channel(double p_x, double p_z) {
    check_probability(p_x, "p_x");
    check_probability(p_z, "p_z");
    return PauliChannel1({(1.0 - p_x) * (1.0 - p_z), p_x * (1.0 - p_z), p_x * p_z,
                          (1.0 - p_x) * p_z});
}

PauliChannel1 exclusive_channel(double p_x, double p_z) {
    check_probability(p_x, "p_x");
    check_probability(p_z, "p_z");
    if (p_x + p_z > 1.0) {
        throw ArgumentError("exclusive flips need p_x + p_z <= 1");
    }
    return PauliChannel1({1.0 - p_x - p_z, p_x, 0.0, p_z});
}

PauliChannelN::PauliChannelN(std::size_t n, std::vector<double> probs)
    : n_(n), probs_(std::move(probs)) {
    if (n == 0 || n > kMaxEnumerableQubits) {
        throw CapacityError("PauliChannelN supports 1.." + std::to_string(kMaxEnumerableQubits) +
                            " qubits, got " + std::to_string(n));
    }
    if (probs_.size() != (std::size_t{1} << (2 * n))) {
        throw ArgumentError("PauliChannelN needs 4^n probabilities");
    }
    double total = 0.0;
    for (double p : probs_) {
        check_probability(p, "Pauli channel entry");
        total += p;
    }
    if (std::abs(total - 1.0) > kProbabilityTol * static_cast<double>(probs_.size())) {
        throw ArgumentError("Pauli channel probabilities sum to " + std::to_string(total));
    }
}

double PauliChannelN::prob(const PauliString &e) const {
    if (e.num_qubits() != n_) {
        throw ArgumentError("PauliChannelN::prob: qubit count mismatch");
    }
    return probs_[e.index()];
}

PauliChannelN tensor_iid(const PauliChannel1 &ch, std::size_t n) {
    if (n == 0) {
        throw ArgumentError("tensor_iid needs n >= 1");
    }
    if (n > kMaxEnumerableQubits) {
        throw CapacityError("tensor_iid: 4^" + std::to_string(n) + " entries exceed the limit of n <= " +
                            std::to_string(kMaxEnumerableQubits));
    }
    // Built digit by digit; index order keeps qubit 0 most significant.
    std::vector<double> probs{1.0};
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<double> next;
        next.reserve(probs.size() * 4);
        for (double p : probs) {
            for (double single : ch.probs()) {
                next.push_back(p * single);
            }
        }
        probs = std::move(next);
    }
    return PauliChannelN(n, std::move(probs));
}

DensityMatrix apply_pauli_channel(const PauliChannelN &ch, const DensityMatrix &rho) {
    const std::size_t n = ch.num_qubits();
    const std::size_t dim = std::size_t{1} << n;
    if (rho.dim() != dim) {
        throw ArgumentError("apply_pauli_channel: density matrix dimension " +
                            std::to_string(rho.dim()) + " does not match 2^" + std::to_string(n));
    }
    const Matrix &in = rho.matrix();
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix out = Matrix::Zero(d, d);
    for (std::uint64_t index = 0; index < ch.size(); ++index) {
        const double p = ch.prob(index);
        if (p == 0.0) {
            continue;
        }
        // E|b> = (global phase) (-1)^{|z & b|} |b ^ x>; the global phase cancels in E rho E^+.
        const PauliString e = PauliString::from_index(n, index);
        const std::uint64_t flip = to_basis_order(e.x_bits(), n);
        const std::uint64_t sign_mask = to_basis_order(e.z_bits(), n);
        for (std::uint64_t r = 0; r < dim; ++r) {
            const double sr = std::popcount(sign_mask & r) % 2 ? -1.0 : 1.0;
            for (std::uint64_t c = 0; c < dim; ++c) {
                const double sc = std::popcount(sign_mask & c) % 2 ? -1.0 : 1.0;
                out(static_cast<Eigen::Index>(r ^ flip), static_cast<Eigen::Index>(c ^ flip)) +=
                    p * sr * sc * in(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
            }
        }
    }
    return DensityMatrix(std::move(out));
}

}  // namespace ftlab
