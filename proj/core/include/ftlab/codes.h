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

#ifndef FTLAB_CODES_H
#define FTLAB_CODES_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ftlab/pauli.h"

namespace ftlab {

/// Bit i is set iff the error anticommutes with generator i.
using Syndrome = std::uint64_t;

/// A stabilizer code with one logical qubit and a syndrome lookup decoder.
///
/// Invariants checked at construction: generators mutually commute, both logicals
/// commute with every generator, logical X anticommutes with logical Z, and the
/// decoder has one entry per syndrome whose syndrome is that syndrome.
class StabilizerCode {
   public:
    /// Builds the minimum-weight decoder via build_decoder().
    StabilizerCode(std::string name, std::vector<PauliString> generators, PauliString logical_x,
                   PauliString logical_z);

    /// Same code with a caller-supplied decoder table indexed by syndrome.
    StabilizerCode with_decoder(std::vector<PauliString> table) const;

    const std::string &name() const noexcept { return name_; }
    std::size_t n() const noexcept { return logical_x_.num_qubits(); }
    std::size_t k() const noexcept { return n() - generators_.size(); }
    std::span<const PauliString> generators() const noexcept { return generators_; }
    const PauliString &logical_x() const noexcept { return logical_x_; }
    const PauliString &logical_z() const noexcept { return logical_z_; }
    std::span<const PauliString> decoder() const noexcept { return decoder_; }
    const PauliString &recovery(Syndrome s) const { return decoder_.at(s); }
    std::size_t num_syndromes() const noexcept { return decoder_.size(); }

   private:
    StabilizerCode() = default;
    void validate_structure() const;
    void validate_decoder() const;

    std::string name_;
    std::vector<PauliString> generators_;
    PauliString logical_x_{1};
    PauliString logical_z_{1};
    std::vector<PauliString> decoder_;
};

Syndrome syndrome(std::span<const PauliString> generators, const PauliString &e);
Syndrome syndrome(const StabilizerCode &code, const PauliString &e);

/// For every syndrome, a minimum-weight Pauli producing it; ties go to the
/// lexicographically smallest label. Throws ConstructionError if the generators
/// do not commute or some syndrome is unreachable.
std::vector<PauliString> build_decoder(std::span<const PauliString> generators);

/// Logical action of a zero-syndrome operator: X iff it anticommutes with logical Z only,
/// Z iff with logical X only, Y iff with both. Throws ContractViolation otherwise.
Pauli1 logical_class(const StabilizerCode &code, const PauliString &net);

StabilizerCode five_qubit();
StabilizerCode bit_flip_3();
StabilizerCode phase_flip_3();

/// "five_qubit", "bit_flip_3" or "phase_flip_3". Throws ConfigError otherwise.
StabilizerCode builtin_code(std::string_view name);
std::vector<std::string> builtin_code_names();

/// Code from JSON text: {"name": ..., "generators": [...], "logical_x": ..., "logical_z": ...}.
StabilizerCode code_from_json(std::string_view json_text);

/// A built-in name, or otherwise a path to a JSON code file.
StabilizerCode resolve_code(const std::string &name_or_path);

}  // namespace ftlab

#endif
