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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "commands.h"
#include "ftlab/effective.h"
#include "ftlab/hierarchy.h"
#include "ftlab/oqft.h"

namespace {

using namespace ftlab;

struct Outcome {
    bool passed;
    std::string detail;
};

int failures = 0;

template <typename Fn>
void criterion(int id, const char *title, Fn &&fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = fn();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!o.passed) ++failures;
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double majority(double p) { return 3 * p * p - 2 * p * p * p; }

}  // namespace

int main() {
    criterion(1, "threshold crossings at p_z = 0.06, levels (1,2)", [] {
        cli::RunConfig config;
        config.pz = cli::Range{0.06, 0.06, 1};
        const auto start = std::chrono::steady_clock::now();
        const cli::ThresholdResult t = cli::run_threshold(config);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool qft_ok = std::abs(t.qft_crossing - 0.0785) <= 0.005;
        const bool p_ok = std::abs(t.p_crossing - 0.0905) <= 0.005;
        const bool adv_ok = t.advantage >= 0.10 && t.advantage <= 0.20;
        return Outcome{qft_ok && p_ok && adv_ok && secs < 1.0,
                       "QFT " + fmt("%.6f", t.qft_crossing) + " (target 0.0785 +/- 0.005), P " +
                           fmt("%.6f", t.p_crossing) + " (target 0.0905 +/- 0.005), advantage " +
                           fmt("%.2f%%", 100 * t.advantage) + " (target 10..20%), search " +
                           fmt("%.3fs", secs)};
    });

    criterion(2, "Q-ratio below 1 on the default 50x50 grid", [] {
        const cli::RunConfig config;
        double max_q = 0.0;
        std::size_t points = 0;
        for (double px : config.px.values()) {
            for (double pz : config.pz.values()) {
                const RatioReport r = evaluate_point(five_qubit(), px, pz);
                if (!r.q_ratio) return Outcome{false, "undefined Q-ratio at a grid point"};
                max_q = std::max(max_q, *r.q_ratio);
                ++points;
            }
        }
        return Outcome{max_q < 1.0 && points == 2500,
                       "max Q " + fmt("%.6f", max_q) + " over " + std::to_string(points) + " points"};
    });

    criterion(3, "bit-flip code matches 3p^2 - 2p^3 at levels 1 and 2", [] {
        double worst1 = 0.0;
        double worst2 = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double p = 0.5 * i / 99.0;
            const LevelSequence seq = concatenate(bit_flip_3(), PauliChannel1({1 - p, p, 0, 0}), 2);
            worst1 = std::max(worst1, std::abs(seq[1].p_x() - majority(p)));
            worst2 = std::max(worst2, std::abs(seq[2].p_x() - majority(majority(p))));
        }
        return Outcome{worst1 <= 1e-12 && worst2 <= 1e-12,
                       "max deviation level 1 " + fmt("%.2e", worst1) + ", level 2 " +
                           fmt("%.2e", worst2) + " over 100 p in [0, 0.5] (tol 1e-12)"};
    });

    criterion(4, "five-qubit code is perfect", [] {
        const StabilizerCode code = five_qubit();
        std::set<Syndrome> seen{syndrome(code, PauliString(5))};
        std::size_t count = 1;
        for (std::size_t q = 0; q < 5; ++q) {
            for (Pauli1 p : {Pauli1::X, Pauli1::Y, Pauli1::Z}) {
                seen.insert(syndrome(code, PauliString::single(5, q, p)));
                ++count;
            }
        }
        std::size_t max_weight = 0;
        for (const PauliString &r : code.decoder()) max_weight = std::max(max_weight, r.weight());
        std::size_t bad_logicals = 0;
        for (std::uint64_t i = 0; i < 1024; ++i) {
            const PauliString e = PauliString::from_index(5, i);
            if (e.weight() <= 2 && syndrome(code, e) == 0 && logical_class(code, e) != Pauli1::I) {
                ++bad_logicals;
            }
        }
        const bool ok = count == 16 && seen.size() == 16 && code.num_syndromes() == 16 &&
                        max_weight <= 1 && bad_logicals == 0;
        return Outcome{ok, std::to_string(seen.size()) + " distinct syndromes from " +
                               std::to_string(count) + " weight<=1 Paulis, max decoder weight " +
                               std::to_string(max_weight) + ", " + std::to_string(bad_logicals) +
                               " low-weight logicals"};
    });

    criterion(5, "closed-form supremum vs Bloch grid, and P = QFT * Q", [] {
        std::mt19937_64 rng(20260101);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double worst_gap = 0.0;
        double worst_excess = -1.0;
        double worst_factor = 0.0;
        std::vector<PauliChannel1> channels;
        for (int i = 0; i < 1000; ++i) {
            std::array<double, 4> p{unit(rng), unit(rng), unit(rng), unit(rng)};
            const double total = p[0] + p[1] + p[2] + p[3];
            for (double &v : p) v /= total;
            channels.emplace_back(p);
        }
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<double> grid(channels.size());
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < channels.size(); i += workers) {
                        grid[i] = sup_inaccuracy_grid(channels[i], 200).value;
                    }
                });
            }
        }
        for (std::size_t i = 0; i < channels.size(); ++i) {
            const double closed = sup_inaccuracy(channels[i]);
            worst_gap = std::max(worst_gap, std::abs(closed - grid[i]));
            worst_excess = std::max(worst_excess, grid[i] - closed);
            if (i + 1 < channels.size()) {
                const RatioReport r = ratios(channels[i], channels[i + 1]);
                if (r.p_ratio && r.q_ratio && r.qft_ratio) {
                    worst_factor =
                        std::max(worst_factor, std::abs(*r.p_ratio - *r.qft_ratio * *r.q_ratio));
                }
            }
        }
        for (double px : cli::RunConfig{}.px.values()) {
            const RatioReport r = evaluate_point(five_qubit(), px, 0.06);
            if (r.p_ratio && r.q_ratio && r.qft_ratio) {
                worst_factor = std::max(worst_factor, std::abs(*r.p_ratio - *r.qft_ratio * *r.q_ratio));
            }
        }
        const bool ok = worst_gap <= 1e-3 && worst_excess <= 1e-12 && worst_factor <= 1e-10;
        return Outcome{ok, "max |closed - grid| " + fmt("%.2e", worst_gap) +
                               " (tol 1e-3), max grid excess " + fmt("%.2e", worst_excess) +
                               ", max factorization error " + fmt("%.2e", worst_factor) +
                               " (tol 1e-10), 1000 channels at resolution 200"};
    });

    criterion(6, "error-correction hierarchy reductions", [] {
        const SuiteOptions options;
        HierarchyReport report = reduction_suite(options);
        for (const auto &[name, spec] : {std::pair{"QEC", bundled_qec()},
                                         std::pair{"OQEC", bundled_oqec()},
                                         std::pair{"EAQEC", bundled_eaqec()}}) {
            report.checks.push_back(check_instance(name, spec, options));
        }
        std::string failed;
        for (const CheckResult &c : report.checks) {
            if (!c.passed) failed += " [" + c.name + " at " + c.failing_stage + ": " + c.detail + "]";
        }
        return Outcome{report.all_passed(),
                       std::to_string(report.checks.size()) +
                           " checks: identity within 1e-10 on 100 states, QCC with alpha = 0 and "
                           "U = I, stage-for-stage reductions within 1e-12" +
                           (failed.empty() ? "" : ";" + failed)};
    });

    criterion(7, "scan output is deterministic", [] {
        cli::RunConfig config;
        std::ostringstream a;
        std::ostringstream b;
        cli::cmd_scan(config, a);
        cli::cmd_scan(config, b);
        config.workers = 4;
        std::ostringstream c;
        cli::cmd_scan(config, c);
        const bool ok = a.str() == b.str() && a.str() == c.str();
        return Outcome{ok, "two runs and --workers 1 vs 4 on the default grid (" +
                               std::to_string(a.str().size()) + " bytes each) are " +
                               (ok ? "byte-identical" : "DIFFERENT")};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
    return failures ? 1 : 0;
}
