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


#ifndef OAMX_SIMULATION_H
#define OAMX_SIMULATION_H

#include <optional>

#include "oamx/core.h"
#include "oamx/portgraph.h"

namespace oamx {

enum class SimulationMode { Strict, Physical };

struct SimulationConfig {
    SimulationMode mode = SimulationMode::Strict;
    /// Maximum element traversals per packet; defaults to 10x the element count.
    std::optional<size_t> hop_budget;
    double amplitude_tolerance = 1e-12;
};

/// Applies every element in emission order. Paths an element does not reference pass untouched.
/// Throws NonMultipleModeError (strict mode) and NormDriftError.
ModeVector apply_netlist(const Netlist &netlist, const ModeVector &state, const SimulationConfig &config = {});

/// Event-driven propagation through the wiring until every packet reaches a terminal. Packets
/// at the same input port with the same OAM in the same step are summed coherently. Light on a
/// path that has no entry in the graph passes straight through.
/// Throws HopBudgetExceededError, NonMultipleModeError and NormDriftError.
ModeVector apply_portgraph(const PortGraph &graph, const ModeVector &state, const SimulationConfig &config = {});

/// X^l followed by Z^m_exp, with X the synthesized d-dimensional gate and Z a plate on its
/// output path. For d = 1 the word is the identity.
ModeVector simulate_word(int64_t d, int64_t l, int64_t m_exp, const ModeVector &state,
                         const SimulationConfig &config = {});

}  // namespace oamx

#endif
