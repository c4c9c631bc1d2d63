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

// Independent reference computations for the unit tests. Nothing here calls into the
// library under test beyond plain data types.

#ifndef FTLAB_TESTS_ORACLES_H
#define FTLAB_TESTS_ORACLES_H

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

inline M letter_matrix(char c) {
    M m(2, 2);
    switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad letter");
    }
    return m;
}

inline M kron(const M &a, const M &b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Dense matrix of a plain letter string, leftmost letter on the leftmost tensor factor.
inline M dense(const std::string &letters) {
    M out = M::Identity(1, 1);
    for (char c : letters) out = kron(out, letter_matrix(c));
    return out;
}

/// Single-letter commutation, then parity over positions.
inline bool commute_letters(const std::string &a, const std::string &b) {
    int anti = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) ++anti;
    }
    return anti % 2 == 0;
}

inline int weight(const std::string &s) {
    int w = 0;
    for (char c : s) w += c != 'I';
    return w;
}

/// All 4^n letter strings in I<X<Y<Z order with the first letter most significant.
inline std::vector<std::string> all_strings(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<std::string> next;
        for (const std::string &s : out) {
            for (char c : std::string("IXYZ")) next.push_back(s + c);
        }
        out = next;
    }
    return out;
}

/// Letter-wise product ignoring phase.
inline std::string multiply_letters(const std::string &a, const std::string &b) {
    static const std::string order = "IXYZ";
    std::string out(a.size(), 'I');
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int ia = static_cast<int>(order.find(a[i]));
        const int ib = static_cast<int>(order.find(b[i]));
        out[i] = order[static_cast<std::size_t>(ia ^ ib)];
    }
    return out;
}

/// Probability of a letter string under iid single-qubit Pauli noise.
inline double iid_prob(const std::string &e, const std::array<double, 4> &p) {
    static const std::string order = "IXYZ";
    double out = 1.0;
    for (char c : e) out *= p[order.find(c)];
    return out;
}

/// Effective logical channel by plain enumeration: decoder and recovery given as letter
/// strings indexed by syndrome, stabilizer generators and logicals as strings.
inline std::array<double, 4> effective(const std::vector<std::string> &gens,
                                       const std::vector<std::string> &table,
                                       const std::string &lx, const std::string &lz,
                                       const std::array<double, 4> &p) {
    std::array<double, 4> out{};
    for (const std::string &e : all_strings(lx.size())) {
        std::size_t s = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (!commute_letters(gens[g], e)) s |= std::size_t{1} << g;
        }
        const std::string net = multiply_letters(table[s], e);
        const bool ax = !commute_letters(net, lz);
        const bool az = !commute_letters(net, lx);
        const std::size_t cls = ax && az ? 2 : ax ? 1 : az ? 3 : 0;
        out[cls] += iid_prob(e, p);
    }
    return out;
}

/// Minimum-weight decoder by scanning strings in order and keeping the first hit.
inline std::vector<std::string> min_weight_table(const std::vector<std::string> &gens,
                                                 std::size_t n) {
    std::vector<std::string> table(std::size_t{1} << gens.size());
    std::vector<int> best(table.size(), 1 << 20);
    for (const std::string &e : all_strings(n)) {
        std::size_t s = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (!commute_letters(gens[g], e)) s |= std::size_t{1} << g;
        }
        if (weight(e) < best[s]) {
            best[s] = weight(e);
            table[s] = e;
        }
    }
    return table;
}

/// Single-qubit channel on a Bloch vector: axis k is scaled by lambda_k.
inline std::array<double, 3> bloch_image(const std::array<double, 4> &p,
                                         const std::array<double, 3> &r) {
    const double lx = p[0] + p[1] - p[2] - p[3];
    const double ly = p[0] - p[1] + p[2] - p[3];
    const double lz = p[0] - p[1] - p[2] + p[3];
    return {lx * r[0], ly * r[1], lz * r[2]};
}

/// Trace distance doubled between two qubit states equals the Bloch-vector distance.
inline double bloch_grid_sup(const std::array<double, 4> &p, int res) {
    const double pi = std::acos(-1.0);
    double best = 0.0;
    for (int a = 0; a < res; ++a) {
        const double theta = pi * a / (res - 1);
        for (int b = 0; b < res; ++b) {
            const double phi = 2 * pi * b / res;
            const std::array<double, 3> r{std::sin(theta) * std::cos(phi),
                                          std::sin(theta) * std::sin(phi), std::cos(theta)};
            const auto s = bloch_image(p, r);
            best = std::max(best, std::hypot(s[0] - r[0], s[1] - r[1], s[2] - r[2]));
        }
    }
    return best;
}

}  // namespace oracle

#endif
