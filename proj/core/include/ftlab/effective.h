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

#ifndef FTLAB_EFFECTIVE_H
#define FTLAB_EFFECTIVE_H

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ftlab/codes.h"
#include "ftlab/pauli.h"

namespace ftlab {

/// Exact logical Pauli channel after one noiseless syndrome-and-recovery round.
///
/// Every one of the 4^n error patterns is weighted by its i.i.d. probability, corrected
/// with the code's decoder, and its residual binned by logical class. The enumeration is
/// split into a fixed number of chunks reduced in index order, so the result is
/// bit-identical for any `workers`.
PauliChannel1 effective_channel(const StabilizerCode &code, const PauliChannel1 &per_qubit,
                                unsigned workers = 1);

/// Channels at concatenation levels 0..L; level 0 is the physical channel.
class LevelSequence {
   public:
    explicit LevelSequence(std::vector<PauliChannel1> levels);

    std::size_t max_level() const noexcept { return levels_.size() - 1; }
    const PauliChannel1 &operator[](std::size_t level) const { return levels_.at(level); }
    const std::vector<PauliChannel1> &levels() const noexcept { return levels_; }

   private:
    std::vector<PauliChannel1> levels_;
};

/// levels[i+1] = effective_channel(code, levels[i]). The full 4-vector is carried
/// forward, including any Y component the lower level produced.
LevelSequence concatenate(const StabilizerCode &code, const PauliChannel1 &physical,
                          std::size_t max_level, unsigned workers = 1);

/// Total error probability and its split over X, Y, Z.
struct EpsilonEta {
    double epsilon = 0.0;
    /// (eta_x, eta_y, eta_z); empty when epsilon == 0.
    std::optional<std::array<double, 3>> eta;
};

EpsilonEta epsilon_eta(const PauliChannel1 &ch);

}  // namespace ftlab

#endif
