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

#include "ftlab/oqft.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "ftlab/effective.h"
#include "ftlab/errors.h"

namespace ftlab {

double sup_inaccuracy(const PauliChannel1 &ch) {
    // |lambda_x - 1| = 2 (p_Y + p_Z) and cyclically; written this way to avoid cancellation.
    const double shrink_x = ch.p_y() + ch.p_z();
    const double shrink_y = ch.p_x() + ch.p_z();
    const double shrink_z = ch.p_x() + ch.p_y();
    return 2.0 * std::max({shrink_x, shrink_y, shrink_z});
}

GridSupremum sup_inaccuracy_grid(const PauliChannel1 &ch, std::size_t resolution) {
    if (resolution < 16) {
        throw ArgumentError("sup_inaccuracy_grid: resolution must be at least 16");
    }
    using M2 = Eigen::Matrix2cd;
    const Complex i(0.0, 1.0);
    M2 id = M2::Identity();
    M2 sx, sy, sz;
    sx << 0.0, 1.0, 1.0, 0.0;
    sy << 0.0, -i, i, 0.0;
    sz << 1.0, 0.0, 0.0, -1.0;

    GridSupremum best;
    best.value = -1.0;
    for (std::size_t a = 0; a < resolution; ++a) {
        const double theta =
            std::numbers::pi * static_cast<double>(a) / static_cast<double>(resolution - 1);
        for (std::size_t b = 0; b < resolution; ++b) {
            const double phi =
                2.0 * std::numbers::pi * static_cast<double>(b) / static_cast<double>(resolution);
            const std::array<double, 3> r{std::sin(theta) * std::cos(phi),
                                          std::sin(theta) * std::sin(phi), std::cos(theta)};
            const M2 rho = 0.5 * (id + r[0] * sx + r[1] * sy + r[2] * sz);
            const M2 out = ch.p_i() * rho + ch.p_x() * sx * rho * sx + ch.p_y() * sy * rho * sy +
                           ch.p_z() * sz * rho * sz;
            const M2 diff = out - rho;
            Eigen::SelfAdjointEigenSolver<M2> solver(diff, Eigen::EigenvaluesOnly);
            const double norm = solver.eigenvalues().cwiseAbs().sum();
            if (norm > best.value) {
                best.value = norm;
                best.theta = theta;
                best.phi = phi;
                best.bloch = r;
            }
        }
    }
    return best;
}

RatioReport ratios(const PauliChannel1 &level_i, const PauliChannel1 &level_i1,
                   std::pair<std::size_t, std::size_t> level_pair) {
    RatioReport report;
    report.level_pair = level_pair;
    const EpsilonEta lo = epsilon_eta(level_i);
    const EpsilonEta hi = epsilon_eta(level_i1);
    report.epsilon_i = lo.epsilon;
    report.epsilon_i1 = hi.epsilon;
    report.sup_i = sup_inaccuracy(level_i);
    report.sup_i1 = sup_inaccuracy(level_i1);

    if (lo.epsilon > 0.0) {
        report.qft_ratio = hi.epsilon / lo.epsilon;
    }
    if (report.sup_i > 0.0) {
        report.p_ratio = report.sup_i1 / report.sup_i;
    }
    if (lo.eta && hi.eta) {
        // Per unit epsilon the supremum is 2 (1 - min_k eta_k), so the norm ratio depends
        // on the eta vectors alone.
        const double norm_lo = 1.0 - std::min({(*lo.eta)[0], (*lo.eta)[1], (*lo.eta)[2]});
        const double norm_hi = 1.0 - std::min({(*hi.eta)[0], (*hi.eta)[1], (*hi.eta)[2]});
        report.q_ratio = norm_hi / norm_lo;
    }
    return report;
}

PauliChannel1 physical_channel(NoiseModel model, double p_x, double p_z) {
    switch (model) {
        case NoiseModel::independent:
            return biased_channel(p_x, p_z);
        case NoiseModel::exclusive:
            return exclusive_channel(p_x, p_z);
    }
    throw ArgumentError("unknown noise model");
}

RatioReport evaluate_point(const StabilizerCode &code, double p_x, double p_z,
                           std::pair<std::size_t, std::size_t> level_pair, NoiseModel model) {
    if (level_pair.second != level_pair.first + 1) {
        throw ArgumentError("evaluate_point: level pair must be consecutive");
    }
    const LevelSequence levels =
        concatenate(code, physical_channel(model, p_x, p_z), std::max<std::size_t>(1, level_pair.second));
    RatioReport report = ratios(levels[level_pair.first], levels[level_pair.second], level_pair);
    report.p_x = p_x;
    report.p_z = p_z;
    return report;
}

double find_threshold(const StabilizerCode &code, double p_z, RatioKind kind,
                      const ThresholdOptions &options) {
    double lo = options.bracket.lo;
    double hi = options.bracket.hi;
    if (!(lo < hi) || lo < 0.0 || hi > 1.0) {
        throw ArgumentError("find_threshold: bracket [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "] is empty or outside [0, 1]");
    }
    if (!(options.tol > 0.0)) {
        throw ArgumentError("find_threshold: tolerance must be positive");
    }

    const auto excess = [&](double p_x) {
        const RatioReport r = evaluate_point(code, p_x, p_z, options.level_pair, options.model);
        const std::optional<double> &ratio = kind == RatioKind::P ? r.p_ratio : r.qft_ratio;
        return ratio ? *ratio - 1.0 : std::numeric_limits<double>::quiet_NaN();
    };

    double f_lo = excess(lo);
    const double f_hi = excess(hi);
    if (std::isnan(f_lo) || std::isnan(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
        if (f_lo == 0.0) return lo;
        if (f_hi == 0.0) return hi;
        throw BracketingError(std::string(kind == RatioKind::P ? "P" : "QFT") +
                                  "-ratio does not cross 1 over [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] (ratio - 1 = " + std::to_string(f_lo) +
                                  ", " + std::to_string(f_hi) + ")",
                              lo, hi, f_lo, f_hi);
    }
    while (hi - lo > options.tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = excess(mid);
        if (std::isnan(f_mid)) {
            throw BracketingError("ratio undefined inside the bracket", lo, hi, f_lo, f_hi);
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ftlab
