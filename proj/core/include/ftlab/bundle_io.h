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

#ifndef FTLAB_BUNDLE_IO_H
#define FTLAB_BUNDLE_IO_H

#include <string>
#include <string_view>

#include "ftlab/superop.h"

namespace ftlab {

// Instance bundles are JSON objects:
//
//   {"k": 1, "s": 2, "c": 0, "dim_b": 1, "dim_k": 0,
//    "ordering": "recovery_then_decode",
//    "enc": {"in_dim": 2, "out_dim": 8, "kraus": [M, ...]},
//    "rho_b": M, "noise": {...}, "recovery": {...}, "dec_unitary": {...}, "dec": {...}}
//
// where a matrix M is an array of rows and each entry is a [real, imag] pair.
// "rho_b" and "dec_unitary" are optional. Channels may carry "trace_non_increasing": true.

EaoqecSpec eaoqec_from_json(std::string_view text);
std::string eaoqec_to_json(const EaoqecSpec &spec);
/// Throws ConfigError if the file cannot be read or parsed.
EaoqecSpec load_eaoqec(const std::string &path);

}  // namespace ftlab

#endif
