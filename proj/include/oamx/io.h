// Copyright 2026 The oamx Authors
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


#ifndef OAMX_IO_H
#define OAMX_IO_H

#include <string>
#include <string_view>

#include "oamx/analysis.h"
#include "oamx/core.h"
#include "oamx/portgraph.h"

namespace oamx {

inline constexpr std::string_view kSchemaVersion = "oamx-netlist/1";

/// On-disk form of a netlist.
struct NetlistDocument {
    std::string schema_version{kSchemaVersion};
    /// "standard", "simplified", "inverse" or "shifted(m)".
    std::string variant = "standard";
    Netlist netlist;

    bool operator==(const NetlistDocument &) const = default;
};

/// Canonical JSON: fixed key order, one element per line, integers unquoted.
std::string serialize(const NetlistDocument &doc);

/// Throws ParseError (with line/column) or SchemaVersionMismatchError.
NetlistDocument parse_document(std::string_view text);

/// Graphviz rendering, one node per physical element, edges labeled with path names.
std::string export_dot(const PortGraph &graph);
std::string export_dot(const Netlist &netlist);

/// Parses ket sums like "0.6*|1> + (0.8i)*|2>" or "|9>" onto `path`. Coefficients may be
/// a, bi or a+bi and default to 1. The result is not normalized.
ModeVector parse_state(std::string_view text, PathLabel path);

/// One "coef*|k> @ path" term per line; a coefficient of exactly 1 is omitted.
std::string format_state(const ModeVector &state);

inline constexpr std::string_view kScalingCsvHeader = "d,n_arb_actual,n_arb_predicted,n_s,naive,bound";

/// Header plus one row per table row; doubles use the shortest round-trip representation.
std::string scaling_csv(const std::vector<ScalingRow> &rows);

}  // namespace oamx

#endif
