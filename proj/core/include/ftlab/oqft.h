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

#ifndef FTLAB_OQFT_H
#define FTLAB_OQFT_H

#include <array>
#include <cstddef>
#include <optional>
#include <utility>

#include "ftlab/codes.h"
#include "ftlab/pauli.h"

namespace ftlab {

/// sup over states of || P(rho) - rho ||_1 for a single-qubit Pauli channel P.
///
/// P scales Bloch axis k by lambda_k (lambda_x = p_I + p_X - p_Y - p_Z, cyclic), so
/// the difference is traceless with Bloch vector ((lambda_k - 1) r_k) and trace norm
/// equal to its length. Over the unit sphere that peaks on an axis:
/// max_k |lambda_k - 1| = 2 * max_k (epsilon - epsilon_k).
double sup_inaccuracy(const PauliChannel1 &ch);

struct GridSupremum {
    double value = 0.0;
    /// Maximizing grid point and its Bloch vector.
    double theta = 0.0;
    double phi = 0.0;
    std::array<double, 3> bloch{0.0, 0.0, 1.0};
};

/// Brute-force estimate of sup_inaccuracy over a resolution x resolution grid of pure
/// states, theta in [0, pi] (endpoints included) and phi in [0, 2 pi). Each point
/// applies the channel to the 2x2 density matrix and takes the trace norm from the
/// eigenvalues of the difference. Requires resolution >= 16.
GridSupremum sup_inaccuracy_grid(const PauliChannel1 &ch, std::size_t resolution);

/// Ratios comparing concatenation level i+1 against level i. Undefined entries are empty.
struct RatioReport {
    std::optional<double> p_x;
    std::optional<double> p_z;
    std::pair<std::size_t, std::size_t> level_pair{1, 2};
    double epsilon_i = 0.0;
    double epsilon_i1 = 0.0;
    double sup_i = 0.0;
    double sup_i1 = 0.0;
    /// sup_i1 / sup_i
    std::optional<double> p_ratio;
    /// p_ratio / qft_ratio: the ratio of the eta-dependent norm suprema.
    std::optional<double> q_ratio;
    /// epsilon_i1 / epsilon_i
    std::optional<double> qft_ratio;
};

RatioReport ratios(const PauliChannel1 &level_i, const PauliChannel1 &level_i1,
                   std::pair<std::size_t, std::size_t> level_pair = {1, 2});

/// How the physical (p_x, p_z) pair maps to a single-qubit channel.
enum class NoiseModel {
    /// Independent bit- and phase-flip generators; p_Y = p_x p_z.
    independent,
    /// Mutually exclusive flips; p_Y = 0.
    exclusive,
};

PauliChannel1 physical_channel(NoiseModel model, double p_x, double p_z);

/// Concatenates up to level_pair.second and compares the two requested levels.
RatioReport evaluate_point(const StabilizerCode &code, double p_x, double p_z,
                           std::pair<std::size_t, std::size_t> level_pair = {1, 2},
                           NoiseModel model = NoiseModel::independent);

enum class RatioKind { P, QFT };

struct Bracket {
    double lo = 1e-4;
    double hi = 0.2;
};

struct ThresholdOptions {
    Bracket bracket{};
    double tol = 1e-6;
    NoiseModel model = NoiseModel::independent;
    std::pair<std::size_t, std::size_t> level_pair{1, 2};
};

/// Bisection on p_x for the point where the chosen ratio crosses 1, at fixed p_z.
/// Throws BracketingError when ratio - 1 does not change sign (or is undefined) at the
/// bracket endpoints, and ArgumentError for an empty bracket or non-positive tol.
double find_threshold(const StabilizerCode &code, double p_z, RatioKind kind,
                      const ThresholdOptions &options = {});

}  // namespace ftlab

#endif
