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

#include "ftlab/codes.h"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "ftlab/errors.h"

namespace ftlab {

namespace {

std::vector<PauliString> parse_labels(std::initializer_list<const char *> labels) {
    std::vector<PauliString> out;
    for (const char *label : labels) {
        out.push_back(PauliString::from_label(label));
    }
    return out;
}

}  // namespace

StabilizerCode::StabilizerCode(std::string name, std::vector<PauliString> generators,
                               PauliString logical_x, PauliString logical_z)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    validate_structure();
    decoder_ = build_decoder(generators_);
    validate_decoder();
}

StabilizerCode StabilizerCode::with_decoder(std::vector<PauliString> table) const {
    StabilizerCode out;
    out.name_ = name_;
    out.generators_ = generators_;
    out.logical_x_ = logical_x_;
    out.logical_z_ = logical_z_;
    out.decoder_ = std::move(table);
    out.validate_decoder();
    return out;
}

void StabilizerCode::validate_structure() const {
    const std::size_t n = logical_x_.num_qubits();
    if (logical_z_.num_qubits() != n) {
        throw ConstructionError("logicals", "logical X and Z act on different qubit counts");
    }
    if (generators_.empty() || generators_.size() >= n) {
        throw ConstructionError("generators", "need between 1 and n-1 generators for n = " +
                                                  std::to_string(n));
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const PauliString &g = generators_[i];
        if (g.num_qubits() != n) {
            throw ConstructionError("generators", "generator " + std::to_string(i) +
                                                      " has the wrong qubit count");
        }
        if (g.phase() % 2 != 0) {
            throw ConstructionError("generators", "generator " + g.str() + " is not Hermitian");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(g, generators_[j])) {
                throw ConstructionError("generators", g.label() + " and " +
                                                          generators_[j].label() +
                                                          " anticommute");
            }
        }
        if (!commutes(g, logical_x_) || !commutes(g, logical_z_)) {
            throw ConstructionError("logicals", "a logical operator anticommutes with " +
                                                    g.label());
        }
    }
    if (commutes(logical_x_, logical_z_)) {
        throw ConstructionError("logicals", "logical X and Z must anticommute");
    }
}

void StabilizerCode::validate_decoder() const {
    const std::size_t expected = std::size_t{1} << generators_.size();
    if (decoder_.size() != expected) {
        throw ConstructionError("decoder", "table has " + std::to_string(decoder_.size()) +
                                               " entries, expected " + std::to_string(expected));
    }
    for (Syndrome s = 0; s < decoder_.size(); ++s) {
        if (decoder_[s].num_qubits() != n()) {
            throw ConstructionError("decoder", "entry has the wrong qubit count");
        }
        if (syndrome(generators_, decoder_[s]) != s) {
            throw ConstructionError("decoder", "recovery " + decoder_[s].label() +
                                                   " does not reproduce syndrome " +
                                                   std::to_string(s));
        }
    }
}

Syndrome syndrome(std::span<const PauliString> generators, const PauliString &e) {
    Syndrome s = 0;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!commutes(e, generators[i])) {
            s |= Syndrome{1} << i;
        }
    }
    return s;
}

Syndrome syndrome(const StabilizerCode &code, const PauliString &e) {
    if (e.num_qubits() != code.n()) {
        throw ArgumentError("syndrome: error acts on " + std::to_string(e.num_qubits()) +
                            " qubits, code has " + std::to_string(code.n()));
    }
    return syndrome(code.generators(), e);
}

std::vector<PauliString> build_decoder(std::span<const PauliString> generators) {
    if (generators.empty()) {
        throw ConstructionError("decoder", "no generators");
    }
    const std::size_t n = generators.front().num_qubits();
    if (n > kMaxEnumerableQubits) {
        throw CapacityError("build_decoder enumerates 4^n Paulis; n = " + std::to_string(n) +
                            " exceeds " + std::to_string(kMaxEnumerableQubits));
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].num_qubits() != n) {
            throw ConstructionError("decoder", "generators act on different qubit counts");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw ConstructionError("decoder", "generators " + generators[i].label() +
                                                       " and " + generators[j].label() +
                                                       " anticommute");
            }
        }
    }

    const std::size_t num_syndromes = std::size_t{1} << generators.size();
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> best_weight(num_syndromes, kUnset);
    std::vector<PauliString> table(num_syndromes, PauliString(n));

    // Lexicographic order plus a strict weight comparison keeps the first label among
    // equal-weight candidates.
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t index = 0; index < count; ++index) {
        const PauliString e = PauliString::from_index(n, index);
        const std::size_t w = e.weight();
        const Syndrome s = syndrome(generators, e);
        if (w < best_weight[s]) {
            best_weight[s] = w;
            table[s] = e;
        }
    }
    for (Syndrome s = 0; s < num_syndromes; ++s) {
        if (best_weight[s] == kUnset) {
            throw ConstructionError("decoder", "syndrome " + std::to_string(s) +
                                                   " is unreachable; generators are dependent");
        }
    }
    return table;
}

Pauli1 logical_class(const StabilizerCode &code, const PauliString &net) {
    if (syndrome(code, net) != 0) {
        throw ContractViolation("logical_class: " + net.label() + " has a nonzero syndrome");
    }
    const bool flips_z = !commutes(net, code.logical_z());
    const bool flips_x = !commutes(net, code.logical_x());
    if (flips_z && flips_x) return Pauli1::Y;
    if (flips_z) return Pauli1::X;
    if (flips_x) return Pauli1::Z;
    return Pauli1::I;
}

StabilizerCode five_qubit() {
    return StabilizerCode("five_qubit", parse_labels({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
                          PauliString::from_label("XXXXX"), PauliString::from_label("ZZZZZ"));
}

StabilizerCode bit_flip_3() {
    return StabilizerCode("bit_flip_3", parse_labels({"ZZI", "IZZ"}),
                          PauliString::from_label("XXX"), PauliString::from_label("ZZZ"));
}

StabilizerCode phase_flip_3() {
    return StabilizerCode("phase_flip_3", parse_labels({"XXI", "IXX"}),
                          PauliString::from_label("ZZZ"), PauliString::from_label("XXX"));
}

std::vector<std::string> builtin_code_names() { return {"five_qubit", "bit_flip_3", "phase_flip_3"}; }

StabilizerCode builtin_code(std::string_view name) {
    if (name == "five_qubit") return five_qubit();
    if (name == "bit_flip_3") return bit_flip_3();
    if (name == "phase_flip_3") return phase_flip_3();
    throw ConfigError("unknown code '" + std::string(name) +
                      "' (built-ins: five_qubit, bit_flip_3, phase_flip_3)");
}

StabilizerCode code_from_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
        std::vector<PauliString> generators;
        for (const auto &label : doc.at("generators")) {
            generators.push_back(PauliString::from_label(label.get<std::string>()));
        }
        return StabilizerCode(doc.value("name", std::string("custom")), std::move(generators),
                              PauliString::from_label(doc.at("logical_x").get<std::string>()),
                              PauliString::from_label(doc.at("logical_z").get<std::string>()));
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("malformed code file: ") + e.what());
    } catch (const ArgumentError &e) {
        throw ConfigError(std::string("malformed code file: ") + e.what());
    } catch (const ConstructionError &e) {
        throw ConfigError(std::string("invalid code: ") + e.what());
    }
}

StabilizerCode resolve_code(const std::string &name_or_path) {
    for (const auto &name : builtin_code_names()) {
        if (name == name_or_path) {
            return builtin_code(name);
        }
    }
    std::ifstream in(name_or_path);
    if (!in) {
        throw ConfigError("unknown code '" + name_or_path +
                          "': not a built-in name and not a readable file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return code_from_json(buffer.str());
}

}  // namespace ftlab
