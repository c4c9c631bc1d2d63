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

#include "commands.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ftlab/bundle_io.h"
#include "ftlab/effective.h"
#include "ftlab/errors.h"
#include "ftlab/superop.h"

namespace ftlab::cli {

namespace {

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
}

std::string optional_field(const std::optional<double> &v) { return v ? format_number(*v) : ""; }

std::string join_labels(std::span<const PauliString> paulis) {
    std::string out;
    for (const PauliString &p : paulis) {
        if (!out.empty()) out += ",";
        out += p.label();
    }
    return out;
}

std::string noise_description(NoiseModel model) {
    return model == NoiseModel::independent
               ? "independent generators: p_I=(1-p_x)(1-p_z), p_X=p_x(1-p_z), p_Y=p_x*p_z, "
                 "p_Z=(1-p_x)p_z"
               : "exclusive flips: p_I=1-p_x-p_z, p_X=p_x, p_Y=0, p_Z=p_z";
}

void write_metadata(std::ostream &out, std::string_view command, const StabilizerCode &code,
                    const RunConfig &config) {
    out << "# ftlab " << command << "\n";
    out << "# code: " << code.name() << " [[" << code.n() << "," << code.k()
        << "]] generators=" << join_labels(code.generators())
        << " logical_x=" << code.logical_x().label() << " logical_z=" << code.logical_z().label()
        << "\n";
    out << "# decoder: minimum-weight syndrome lookup, ties broken by label order I<X<Y<Z with "
           "qubit 0 first\n";
    out << "# recovery: perfect syndrome readout and recovery\n";
    out << "# noise_model: " << noise_description(config.noise) << "\n";
    out << "# levels: 0 is the physical channel; level i+1 is the exact effective channel of "
           "level i (full Pauli vector carried forward)\n";
    out << "# level_pair: " << config.levels - 1 << "," << config.levels << "\n";
    out << "# grid: p_x=" << config.px.str() << " p_z=" << config.pz.str() << " (row-major, p_x outer)\n";
    out << "# undefined ratios are empty fields\n";
}

void write_output(const RunConfig &config, const std::string &text, std::ostream &stdout_stream) {
    if (config.out.empty() || config.out == "-") {
        stdout_stream << text;
        return;
    }
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::ios_base::failure("cannot open '" + config.out + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw std::ios_base::failure("failed writing '" + config.out + "'");
    }
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn &&fn) {
    const unsigned threads = static_cast<unsigned>(
        std::max<std::size_t>(1, std::min<std::size_t>(workers, count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

CheckResult cross_engine_supremum(std::size_t resolution, std::uint64_t seed) {
    CheckResult result;
    result.name = "cross-engine: QCC grid supremum vs closed-form Pauli supremum";
    std::vector<PauliChannel1> channels{
        biased_channel(0.1, 0.06), PauliChannel1({0.97, 0.015, 0.005, 0.01}),
        PauliChannel1({0.7, 0.1, 0.1, 0.1}),
        effective_channel(five_qubit(), biased_channel(0.0785, 0.06))};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> p{unit(rng), unit(rng), unit(rng), unit(rng)};
        const double total = p[0] + p[1] + p[2] + p[3];
        for (double &v : p) v /= total;
        channels.emplace_back(p);
    }
    QccOptions options;
    options.grid_resolution = resolution;
    double worst = 0.0;
    bool exceeded = false;
    for (const PauliChannel1 &ch : channels) {
        const QccResult q = qcc_check(to_kraus(ch), Matrix::Identity(2, 2), 0.0, options);
        const double closed = sup_inaccuracy(ch);
        worst = std::max(worst, std::abs(closed - q.witness_sup));
        exceeded = exceeded || q.witness_sup > closed + 1e-12;
    }
    // 1e-3 at resolution 200; the grid error near an axis shrinks quadratically with spacing.
    const double scale = 200.0 / static_cast<double>(std::max<std::size_t>(resolution, 2));
    const double tol = 1e-3 * std::max(1.0, scale * scale);
    result.passed = worst <= tol && !exceeded;
    result.detail = "max gap " + format_number(worst) + " (tol " + format_number(tol) + ") over " +
                    std::to_string(channels.size()) + " channels at resolution " +
                    std::to_string(resolution);
    if (!result.passed) result.failing_stage = "supremum";
    return result;
}

CheckResult cross_engine_kraus(std::uint64_t seed) {
    CheckResult result;
    result.name = "cross-engine: Pauli channel application vs Kraus form";
    std::mt19937_64 rng(seed);
    const PauliChannelN ch = tensor_iid(biased_channel(0.1, 0.06), 2);
    const KrausChannel kraus = to_kraus(ch);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = random_density_matrix(4, rng);
        worst = std::max(worst, max_abs_diff(apply_pauli_channel(ch, rho).matrix(),
                                             kraus.apply(rho.matrix())));
    }
    result.passed = worst <= 1e-12;
    result.detail = "max entry deviation " + format_number(worst);
    if (!result.passed) result.failing_stage = "apply";
    return result;
}

CheckResult cross_engine_effective() {
    CheckResult result;
    result.name = "cross-engine: enumerated effective channel vs dense QEC pipeline";
    double worst = 0.0;
    const std::pair<StabilizerCode, PauliChannel1> cases[] = {
        {bit_flip_3(), PauliChannel1({0.9, 0.1, 0.0, 0.0})},
        {five_qubit(), biased_channel(0.08, 0.06)}};
    for (const auto &[code, physical] : cases) {
        const Matrix v = stabilizer_encoder(code);
        const QecSpec spec{KrausChannel::isometry(v), to_kraus(tensor_iid(physical, code.n())),
                           syndrome_recovery(code), decoding_channel(v)};
        const std::array<double, 4> dense = pauli_diagonal(compose(qec_stages(spec)));
        const PauliChannel1 enumerated = effective_channel(code, physical);
        for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max(worst, std::abs(dense[k] - enumerated.probs()[k]));
        }
    }
    result.passed = worst <= 1e-10;
    result.detail = "max probability deviation " + format_number(worst);
    if (!result.passed) result.failing_stage = "effective";
    return result;
}

}  // namespace

Range Range::parse(std::string_view text) {
    const auto first = text.find(':');
    if (first == std::string_view::npos) {
        const double v = parse_double(text, "value");
        return Range{v, v, 1};
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw ConfigError("range '" + std::string(text) + "' must be value or start:stop:steps");
    }
    Range r;
    r.start = parse_double(text.substr(0, first), "range start");
    r.stop = parse_double(text.substr(first + 1, second - first - 1), "range stop");
    const double steps = parse_double(text.substr(second + 1), "range steps");
    if (!(steps >= 1.0) || steps != std::floor(steps)) {
        throw ConfigError("range steps must be a positive integer");
    }
    r.steps = static_cast<std::size_t>(steps);
    return r;
}

std::vector<double> Range::values() const {
    if (steps <= 1) {
        return {start};
    }
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    out.back() = stop;
    return out;
}

std::string Range::str() const {
    if (steps <= 1) {
        return format_number(start);
    }
    return format_number(start) + ":" + format_number(stop) + ":" + std::to_string(steps);
}

void validate(const RunConfig &config) {
    for (const auto &[name, r] : {std::pair{"p_x", config.px}, std::pair{"p_z", config.pz}}) {
        if (r.steps < 1) {
            throw ConfigError(std::string(name) + " range needs at least one step");
        }
        if (!(r.start >= 0.0 && r.stop <= 1.0 && r.start <= r.stop)) {
            throw ConfigError(std::string(name) + " range must satisfy 0 <= start <= stop <= 1");
        }
        if (r.steps > 1 && !(r.start < r.stop)) {
            throw ConfigError(std::string(name) + " range with several steps must have start < stop");
        }
    }
    if (config.levels < 1) {
        throw ConfigError("levels must be at least 1");
    }
    if (config.workers == 0) {
        throw ConfigError("workers must be at least 1");
    }
    if (!(config.tol > 0.0)) {
        throw ConfigError("tolerance must be positive");
    }
}

std::string format_number(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.11e", v);
    return buffer;
}

std::string scan_csv(const RunConfig &config, std::string_view command) {
    validate(config);
    const StabilizerCode code = resolve_code(config.code);
    const std::vector<double> xs = config.px.values();
    const std::vector<double> zs = config.pz.values();
    const std::pair<std::size_t, std::size_t> pair{config.levels - 1, config.levels};

    std::vector<RatioReport> rows(xs.size() * zs.size());
    parallel_for(rows.size(), config.workers, [&](std::size_t i) {
        rows[i] = evaluate_point(code, xs[i / zs.size()], zs[i % zs.size()], pair, config.noise);
    });

    std::ostringstream out;
    write_metadata(out, command, code, config);
    out << "p_x,p_z,eps_l1,eps_l2,sup_l1,sup_l2,p_ratio,q_ratio,qft_ratio\n";
    for (const RatioReport &r : rows) {
        out << format_number(*r.p_x) << ',' << format_number(*r.p_z) << ','
            << format_number(r.epsilon_i) << ',' << format_number(r.epsilon_i1) << ','
            << format_number(r.sup_i) << ',' << format_number(r.sup_i1) << ','
            << optional_field(r.p_ratio) << ',' << optional_field(r.q_ratio) << ','
            << optional_field(r.qft_ratio) << '\n';
    }
    return out.str();
}

void cmd_scan(const RunConfig &config, std::ostream &stdout_stream) {
    write_output(config, scan_csv(config, "scan"), stdout_stream);
}

void cmd_slice(const RunConfig &config, std::ostream &stdout_stream) {
    if (config.pz.steps != 1) {
        throw ConfigError("slice needs a single --pz value");
    }
    write_output(config, scan_csv(config, "slice"), stdout_stream);
}

ThresholdResult run_threshold(const RunConfig &config) {
    validate(config);
    if (config.pz.steps != 1) {
        throw ConfigError("threshold needs a single --pz value");
    }
    if (!(config.bracket.lo < config.bracket.hi)) {
        throw BracketingError("empty bracket [" + format_number(config.bracket.lo) + ", " +
                                  format_number(config.bracket.hi) + "]",
                              config.bracket.lo, config.bracket.hi, std::nan(""), std::nan(""));
    }
    const StabilizerCode code = resolve_code(config.code);
    ThresholdOptions options;
    options.bracket = config.bracket;
    options.tol = config.tol;
    options.model = config.noise;
    options.level_pair = {config.levels - 1, config.levels};

    ThresholdResult result;
    result.p_z = config.pz.start;
    result.qft_crossing = find_threshold(code, result.p_z, RatioKind::QFT, options);
    result.p_crossing = find_threshold(code, result.p_z, RatioKind::P, options);
    result.advantage = (result.p_crossing - result.qft_crossing) / result.qft_crossing;
    return result;
}

void cmd_threshold(const RunConfig &config, std::ostream &stdout_stream) {
    const ThresholdResult r = run_threshold(config);
    std::ostringstream line;
    line << "code=" << resolve_code(config.code).name() << " p_z=" << format_number(r.p_z)
         << " level_pair=" << config.levels - 1 << "," << config.levels
         << " qft_crossing=" << format_number(r.qft_crossing)
         << " p_crossing=" << format_number(r.p_crossing)
         << " advantage=" << format_number(r.advantage) << "\n";
    write_output(config, line.str(), stdout_stream);
}

std::string channel_csv(const RunConfig &config) {
    validate(config);
    if (config.px.steps != 1 || config.pz.steps != 1) {
        throw ConfigError("channel needs single --px and --pz values");
    }
    const StabilizerCode code = resolve_code(config.code);
    const LevelSequence levels = concatenate(
        code, physical_channel(config.noise, config.px.start, config.pz.start), config.levels,
        config.workers);

    std::ostringstream out;
    write_metadata(out, "channel", code, config);
    out << "level,p_I,p_X,p_Y,p_Z,epsilon,eta_x,eta_y,eta_z,sup\n";
    for (std::size_t i = 0; i <= levels.max_level(); ++i) {
        const PauliChannel1 &ch = levels[i];
        const EpsilonEta ee = epsilon_eta(ch);
        out << i;
        for (double p : ch.probs()) out << ',' << format_number(p);
        out << ',' << format_number(ee.epsilon);
        for (std::size_t k = 0; k < 3; ++k) {
            out << ',' << (ee.eta ? format_number((*ee.eta)[k]) : "");
        }
        out << ',' << format_number(sup_inaccuracy(ch)) << '\n';
    }
    return out.str();
}

void cmd_channel(const RunConfig &config, std::ostream &stdout_stream) {
    write_output(config, channel_csv(config), stdout_stream);
}

HierarchyReport run_verify(const VerifyOptions &options) {
    SuiteOptions suite;
    suite.seed = options.seed;
    suite.qcc_resolution = options.resolution;
    HierarchyReport report = options.qec_code ? reduction_suite(*options.qec_code, suite)
                                              : reduction_suite(suite);
    report.checks.push_back(cross_engine_supremum(options.resolution, options.seed));
    report.checks.push_back(cross_engine_kraus(options.seed));
    report.checks.push_back(cross_engine_effective());
    if (options.bundle_path) {
        const std::string name = "bundle " + *options.bundle_path;
        try {
            report.checks.push_back(check_instance(name, load_eaoqec(*options.bundle_path), suite));
        } catch (const ConstructionError &e) {
            report.checks.push_back({name, false, e.what(), e.stage()});
        }
    }
    return report;
}

int cmd_verify(const VerifyOptions &options, std::ostream &stdout_stream) {
    const HierarchyReport report = run_verify(options);
    for (const CheckResult &check : report.checks) {
        stdout_stream << (check.passed ? "PASS  " : "FAIL  ") << check.name << "  [" << check.detail
                      << "]\n";
    }
    stdout_stream << (report.all_passed() ? "all checks passed\n" : "verification FAILED\n");
    return report.all_passed() ? kOk : kVerificationFailed;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"ftlab: effective logical channels, fault-tolerance ratios and thresholds, "
                 "and error-correction hierarchy checks"};
    app.set_config("--config", "", "TOML config file; command-line flags take precedence");
    app.require_subcommand(1);

    RunConfig config;
    std::string px_text;
    std::string pz_text;
    std::string bracket_text;
    std::string noise_text = "independent";
    VerifyOptions verify;
    std::string bundle;

    const auto add_common = [&](CLI::App *sub, bool with_ranges) {
        sub->add_option("--code", config.code, "built-in code name or JSON code file")
            ->capture_default_str();
        if (with_ranges) {
            sub->add_option("--px", px_text, "p_x value or start:stop:steps");
            sub->add_option("--pz", pz_text, "p_z value or start:stop:steps");
        }
        sub->add_option("--levels", config.levels, "compare levels (L-1, L)")->capture_default_str();
        sub->add_option("--out", config.out, "output path (default stdout)");
        sub->add_option("--tol", config.tol, "threshold bisection tolerance")->capture_default_str();
        sub->add_option("--workers", config.workers, "concurrent grid workers")->capture_default_str();
        sub->add_option("--seed", config.seed, "seed for randomized superoperator strategies");
        sub->add_option("--noise", noise_text, "noise convention: independent or exclusive")
            ->check(CLI::IsMember({"independent", "exclusive"}))
            ->capture_default_str();
    };

    CLI::App *scan = app.add_subcommand("scan", "P/Q/QFT ratios over a (p_x, p_z) grid as CSV");
    add_common(scan, true);
    CLI::App *slice = app.add_subcommand("slice", "ratios along p_x at fixed p_z as CSV");
    add_common(slice, true);
    CLI::App *threshold = app.add_subcommand("threshold", "QFT and P crossings at fixed p_z");
    add_common(threshold, true);
    threshold->add_option("--bracket", bracket_text, "p_x search bracket lo:hi (default 1e-4:0.2)");
    CLI::App *channel = app.add_subcommand("channel", "level-by-level channels for one point");
    add_common(channel, true);
    CLI::App *verify_cmd = app.add_subcommand("verify", "error-correction hierarchy and consistency checks");
    verify_cmd->add_option("--seed", verify.seed, "seed for random test states")->capture_default_str();
    verify_cmd->add_option("--resolution", verify.resolution, "Bloch grid resolution")
        ->capture_default_str();
    verify_cmd->add_option("--bundle", bundle, "extra JSON instance bundle to check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kConfigError;
    }

    try {
        config.noise = noise_text == "exclusive" ? NoiseModel::exclusive : NoiseModel::independent;
        if (*slice) {
            config.px = Range{0.05, 0.10, 51};
            config.pz = Range{0.06, 0.06, 1};
        } else if (*threshold || *channel) {
            config.pz = Range{0.06, 0.06, 1};
        }
        if (!px_text.empty()) config.px = Range::parse(px_text);
        if (!pz_text.empty()) config.pz = Range::parse(pz_text);
        if (!bracket_text.empty()) {
            const auto colon = bracket_text.find(':');
            if (colon == std::string::npos) {
                throw ConfigError("bracket must be lo:hi");
            }
            config.bracket.lo = Range::parse(bracket_text.substr(0, colon)).start;
            config.bracket.hi = Range::parse(bracket_text.substr(colon + 1)).start;
        }

        if (*scan) {
            cmd_scan(config, out);
        } else if (*slice) {
            cmd_slice(config, out);
        } else if (*threshold) {
            cmd_threshold(config, out);
        } else if (*channel) {
            if (px_text.empty()) {
                throw ConfigError("channel needs --px");
            }
            cmd_channel(config, out);
        } else if (*verify_cmd) {
            if (!bundle.empty()) verify.bundle_path = bundle;
            return cmd_verify(verify, out);
        }
        return kOk;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const ArgumentError &e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const BracketingError &e) {
        err << "bracketing error: " << e.what() << "\n";
        return kBracketingError;
    } catch (const std::ios_base::failure &e) {
        err << "I/O error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace ftlab::cli
