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


#ifndef OAMX_ANALYSIS_H
#define OAMX_ANALYSIS_H

#include <optional>
#include <string>

#include "oamx/core.h"
#include "oamx/simulation.h"

namespace oamx {

struct GateVariant {
    enum class Kind { Standard, Simplified, Inverse, Shifted };
    Kind kind = Kind::Standard;
    int64_t shift = 0;

    static GateVariant standard() {
        return {};
    }
    static GateVariant simplified() {
        return {Kind::Simplified, 0};
    }
    static GateVariant inverse() {
        return {Kind::Inverse, 0};
    }
    static GateVariant shifted(int64_t m) {
        return {Kind::Shifted, m};
    }

    /// "standard", "simplified", "inverse" or "shifted(m)".
    std::string str() const;
    static std::optional<GateVariant> parse(const std::string &text);
};

struct VerificationReport {
    int64_t d = 0;
    GateVariant variant;
    bool permutation_ok = false;
    std::map<OamValue, OamValue> mapped;
    int64_t count_actual = 0;
    int64_t count_predicted = 0;
    std::optional<double> bound;
    std::vector<std::string> violations;

    bool ok() const {
        return permutation_ok && violations.empty();
    }
    std::string str() const;
};

/// Builds the requested variant, extracts its permutation over the design basis and compares
/// it with the matching modular oracle; tallies beam-splitters against the predicted count.
/// Synthesis and simulation errors are recorded as violations.
VerificationReport verify_gate(int64_t d, GateVariant variant = {}, const SimulationConfig &config = {});

/// Closed orbit of the gate: modes[i] -> modes[(i + 1) % size]. Starts at its smallest mode.
struct CycleSet {
    std::vector<OamValue> modes;
    bool operator==(const CycleSet &) const = default;
};

/// Scans every OAM value in [oam_min, oam_max] in strict mode and returns the closed cycles of
/// length exactly netlist.dimension that lie inside the window. Inputs that raise, or leave
/// anywhere other than a single mode on the output path, are not members. Each returned cycle
/// has been re-checked through the port-graph simulator.
std::vector<CycleSet> discover_cycles(const Netlist &netlist, OamValue oam_min, OamValue oam_max);

struct ScalingRow {
    int64_t d = 0;
    int64_t n_arb_actual = 0;
    int64_t n_arb_predicted = 0;
    int64_t n_s = 0;
    int64_t naive = 0;
    double bound = 0;
    /// n_arb_actual == n_arb_predicted, n_arb_actual <= bound, and the simplified graph has
    /// n_s physical beam-splitters.
    bool ok = false;
};

/// One row per d in [d_min, d_max], d_min >= 3.
std::vector<ScalingRow> scaling_table(int64_t d_min, int64_t d_max);

}  // namespace oamx

#endif
