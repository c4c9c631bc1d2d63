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

#include "ftlab/bundle_io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ftlab/errors.h"

namespace ftlab {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &rows) {
    if (!rows.is_array() || rows.empty() || !rows.front().is_array()) {
        throw ConfigError("matrix must be a non-empty array of rows");
    }
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = static_cast<Eigen::Index>(rows.front().size());
    Matrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
        const json &row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != c) {
            throw ConfigError("matrix rows have unequal lengths");
        }
        for (Eigen::Index j = 0; j < c; ++j) {
            const json &entry = row[static_cast<std::size_t>(j)];
            if (!entry.is_array() || entry.size() != 2) {
                throw ConfigError("matrix entries must be [real, imag] pairs");
            }
            m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

json channel_to_json(const KrausChannel &ch) {
    json ops = json::array();
    for (const Matrix &k : ch.ops()) {
        ops.push_back(matrix_to_json(k));
    }
    json out = {{"in_dim", ch.in_dim()}, {"out_dim", ch.out_dim()}, {"kraus", std::move(ops)}};
    if (ch.kind() == KrausChannel::Kind::trace_non_increasing) {
        out["trace_non_increasing"] = true;
    }
    return out;
}

KrausChannel channel_from_json(const json &doc, const char *stage) {
    try {
        std::vector<Matrix> ops;
        for (const json &k : doc.at("kraus")) {
            ops.push_back(matrix_from_json(k));
        }
        const auto kind = doc.value("trace_non_increasing", false)
                              ? KrausChannel::Kind::trace_non_increasing
                              : KrausChannel::Kind::trace_preserving;
        return KrausChannel(doc.at("in_dim").get<std::size_t>(), doc.at("out_dim").get<std::size_t>(),
                            std::move(ops), kind);
    } catch (const ArgumentError &e) {
        throw ConfigError(std::string(stage) + ": " + e.what());
    } catch (const ConfigError &e) {
        throw ConfigError(std::string(stage) + ": " + e.what());
    }
}

}  // namespace

EaoqecSpec eaoqec_from_json(std::string_view text) {
    try {
        const json doc = json::parse(text);
        EaoqecSpec spec;
        spec.k = doc.value("k", std::size_t{1});
        spec.s = doc.value("s", std::size_t{0});
        spec.c = doc.value("c", std::size_t{0});
        spec.dim_b = doc.value("dim_b", std::size_t{1});
        spec.dim_k = doc.value("dim_k", std::size_t{0});
        const std::string ordering = doc.value("ordering", std::string("recovery_then_decode"));
        if (ordering == "recovery_then_decode") {
            spec.ordering = Ordering::recovery_then_decode;
        } else if (ordering == "decode_then_recovery") {
            spec.ordering = Ordering::decode_then_recovery;
        } else {
            throw ConfigError("unknown ordering '" + ordering + "'");
        }
        spec.enc = channel_from_json(doc.at("enc"), "enc");
        if (doc.contains("rho_b")) {
            spec.rho_b = matrix_from_json(doc.at("rho_b"));
        }
        spec.noise = channel_from_json(doc.at("noise"), "noise");
        spec.recovery = channel_from_json(doc.at("recovery"), "recovery");
        if (doc.contains("dec_unitary")) {
            spec.dec_unitary = channel_from_json(doc.at("dec_unitary"), "dec_unitary");
        }
        spec.dec = channel_from_json(doc.at("dec"), "dec");
        return spec;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed instance bundle: ") + e.what());
    }
}

std::string eaoqec_to_json(const EaoqecSpec &spec) {
    json doc = {{"k", spec.k},
                {"s", spec.s},
                {"c", spec.c},
                {"dim_b", spec.dim_b},
                {"dim_k", spec.dim_k},
                {"ordering", spec.ordering == Ordering::recovery_then_decode
                                 ? "recovery_then_decode"
                                 : "decode_then_recovery"},
                {"enc", channel_to_json(spec.enc)},
                {"noise", channel_to_json(spec.noise)},
                {"recovery", channel_to_json(spec.recovery)},
                {"dec", channel_to_json(spec.dec)}};
    if (spec.rho_b) {
        doc["rho_b"] = matrix_to_json(*spec.rho_b);
    }
    if (spec.dec_unitary) {
        doc["dec_unitary"] = channel_to_json(*spec.dec_unitary);
    }
    return doc.dump(1);
}

EaoqecSpec load_eaoqec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read instance bundle '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return eaoqec_from_json(buffer.str());
}

}  // namespace ftlab
