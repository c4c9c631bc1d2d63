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

#include "ftlab/effective.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ftlab/errors.h"

namespace ftlab {

namespace {

// Fixed regardless of worker count so the reduction order never changes.
constexpr std::size_t kChunks = 64;

using Accumulator = std::array<double, 4>;

Accumulator accumulate_range(const StabilizerCode &code, const PauliChannel1 &per_qubit,
                             std::uint64_t begin, std::uint64_t end) {
    const std::size_t n = code.n();
    Accumulator acc{0.0, 0.0, 0.0, 0.0};
    for (std::uint64_t index = begin; index < end; ++index) {
        double p = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            p *= per_qubit.probs()[(index >> (2 * (n - 1 - q))) & 3u];
        }
        if (p == 0.0) {
            continue;
        }
        const PauliString e = PauliString::from_index(n, index);
        const PauliString &r = code.recovery(syndrome(code.generators(), e));
        const PauliString net(n, e.x_bits() ^ r.x_bits(), e.z_bits() ^ r.z_bits());
        acc[static_cast<std::size_t>(logical_class(code, net))] += p;
    }
    return acc;
}

}  // namespace

PauliChannel1 effective_channel(const StabilizerCode &code, const PauliChannel1 &per_qubit,
                                unsigned workers) {
    if (code.k() != 1) {
        throw ArgumentError("effective_channel: unsupported code with k = " +
                            std::to_string(code.k()));
    }
    if (code.n() > kMaxEnumerableQubits) {
        throw CapacityError("effective_channel: n = " + std::to_string(code.n()) +
                            " exceeds the enumeration limit " +
                            std::to_string(kMaxEnumerableQubits));
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * code.n());
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(kChunks, count));
    const auto chunk_begin = [&](std::size_t c) { return count * c / chunks; };

    std::vector<Accumulator> partial(chunks);
    const unsigned threads = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(chunks));
    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            partial[c] = accumulate_range(code, per_qubit, chunk_begin(c), chunk_begin(c + 1));
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++) {
                    partial[c] =
                        accumulate_range(code, per_qubit, chunk_begin(c), chunk_begin(c + 1));
                }
            });
        }
    }

    Accumulator total{0.0, 0.0, 0.0, 0.0};
    for (const Accumulator &acc : partial) {
        for (std::size_t k = 0; k < 4; ++k) {
            total[k] += acc[k];
        }
    }
    return PauliChannel1(total);
}

LevelSequence::LevelSequence(std::vector<PauliChannel1> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) {
        throw ArgumentError("LevelSequence needs at least level 0");
    }
}

LevelSequence concatenate(const StabilizerCode &code, const PauliChannel1 &physical,
                          std::size_t max_level, unsigned workers) {
    if (max_level < 1) {
        throw ArgumentError("concatenate: max_level must be at least 1");
    }
    std::vector<PauliChannel1> levels{physical};
    levels.reserve(max_level + 1);
    for (std::size_t i = 0; i < max_level; ++i) {
        levels.push_back(effective_channel(code, levels.back(), workers));
    }
    return LevelSequence(std::move(levels));
}

EpsilonEta epsilon_eta(const PauliChannel1 &ch) {
    EpsilonEta out;
    out.epsilon = ch.p_x() + ch.p_y() + ch.p_z();
    if (out.epsilon > 0.0) {
        out.eta = std::array<double, 3>{ch.p_x() / out.epsilon, ch.p_y() / out.epsilon,
                                        ch.p_z() / out.epsilon};
    }
    return out;
}

}  // namespace ftlab
